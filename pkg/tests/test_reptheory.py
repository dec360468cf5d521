"""
Characters of W and of the Hecke algebra, degrees, Fourier tables, induction
"""
import json
from fractions import Fraction

import pytest

from braidtrace.core.config import settings
from braidtrace.core.exceptions import FourierDataError, SystemMismatchError, ValidationError
from braidtrace.coxeter.braids import lift_sigma
from braidtrace.coxeter.regular import regular_element_of_order, regular_numbers
from braidtrace.coxeter.systems import dihedral, type_a
from braidtrace.exactmath.laurent import HalfLaurent
from braidtrace.exactmath.rfunc import RFunc
from braidtrace.reptheory.characters import (
    full_twist_scalar_check,
    hecke_char,
    hecke_char_via_basis,
    w_specialization_matches,
)
from braidtrace.reptheory.chartable import character_table
from braidtrace.reptheory.degrees import (
    degrees_bundle,
    generic_degree,
    fake_degree_regular_identity,
    molien_schur_identity,
    periodic_character_identity,
    schur_element,
    schur_element_direct,
    schur_orthogonality_holds,
)
from braidtrace.reptheory.fourier import fourier_table
from braidtrace.reptheory.induction import induce
from braidtrace.reptheory.labels import eps_twist, irreducibles, label_key, parse_label
from braidtrace.reptheory.matrixrep import matrix_rep
from braidtrace.reptheory.molien import alt_character, fake_degree, molien
from braidtrace.reptheory.virtual import VirtualCharacter

SYSTEMS = [type_a(1), type_a(2), type_a(3), dihedral(3), dihedral(4), dihedral(5), dihedral(6)]


def q_poly(*coeffs, scale=1):
    return HalfLaurent.from_q_coefficients(coeffs).scale(Fraction(scale))


class TestLabels:
    """Test irreducible labels and parsing"""

    def test_dihedral_labels(self, bc2):
        assert irreducibles(bc2) == ["1", "delta", "phi_1", "epsdelta", "eps"]
        assert irreducibles(dihedral(5)) == ["1", "phi_1", "phi_2", "eps"]

    def test_type_a_labels(self, a2):
        assert irreducibles(a2) == [(3,), (2, 1), (1, 1, 1)]

    def test_parse_label(self, a2, bc2):
        assert parse_label(a2, "[2,1]") == (2, 1)
        assert parse_label(bc2, "δ") == "delta"
        assert parse_label(bc2, "[eps]") == "eps"
        with pytest.raises(ValidationError):
            parse_label(a2, "[2,2]")
        with pytest.raises(ValidationError):
            parse_label(dihedral(5), "delta")

    def test_eps_twist(self, a3, bc2):
        assert eps_twist(a3, (3, 1)) == (2, 1, 1)
        assert eps_twist(bc2, "delta") == "epsdelta"
        assert eps_twist(bc2, "phi_1") == "phi_1"


class TestCharacterTables:
    """Test ordinary characters of W"""

    @pytest.mark.parametrize("system", SYSTEMS, ids=str)
    def test_orthonormal(self, system):
        assert character_table(system).is_orthonormal()

    def test_tensor_square(self, a2):
        assert character_table(a2).tensor((2, 1), (2, 1)) == {(3,): 1, (2, 1): 1, (1, 1, 1): 1}

    def test_alt_reflection(self, a2):
        assert alt_character(a2, 1) == VirtualCharacter(a2, {(2, 1): 1})
        assert alt_character(a2, 2) == VirtualCharacter(a2, {(1, 1, 1): 1})

    def test_induce_trivial(self, a1, a2):
        chi = VirtualCharacter(a1, {(2,): 1})
        assert induce(a1, a2, chi) == VirtualCharacter(a2, {(3,): 1, (2, 1): 1})

    def test_induce_wrong_group(self, a1, a2, a3):
        with pytest.raises(SystemMismatchError):
            induce(a1, a3, VirtualCharacter(a2, {(3,): 1}))


class TestHeckeCharacters:
    """Test matrix representations and phi_q on braids"""

    @pytest.mark.parametrize("system", SYSTEMS, ids=str)
    def test_relations(self, system):
        for label in irreducibles(system):
            rep = matrix_rep(system, label)
            assert rep.satisfies_quadratic()
            assert rep.satisfies_braid_relations()

    @pytest.mark.parametrize("system", [type_a(2), type_a(3), dihedral(4), dihedral(5)], ids=str)
    def test_matrix_and_basis_routes_agree(self, system, random_word):
        for _ in range(10):
            word = random_word(system, 5)
            for label in irreducibles(system):
                assert hecke_char(system, label, word) == hecke_char_via_basis(system, label, word)

    @pytest.mark.parametrize("system", SYSTEMS, ids=str)
    def test_full_twist_scalar(self, system):
        for label in irreducibles(system):
            assert full_twist_scalar_check(system, label)

    @pytest.mark.parametrize("system", [type_a(2), dihedral(5)], ids=str)
    def test_specialization(self, system):
        for label in irreducibles(system):
            assert w_specialization_matches(system, label)


class TestDegrees:
    """Test fake degrees, generic degrees and Schur elements"""

    @pytest.mark.parametrize("m", [3, 4, 5, 6, 8])
    def test_dihedral_fake_degrees(self, m):
        system = dihedral(m)
        assert fake_degree(system, "1") == q_poly(1)
        assert fake_degree(system, "eps") == HalfLaurent.monomial(2 * m)
        for j in range(1, (m + 1) // 2):
            assert fake_degree(system, f"phi_{j}") == HalfLaurent({2 * j: 1, 2 * (m - j): 1})
        if m % 2 == 0:
            assert fake_degree(system, "delta") == HalfLaurent.monomial(m)

    def test_type_a_generic_is_fake(self, a3):
        for label in irreducibles(a3):
            assert generic_degree(a3, label) == fake_degree(a3, label)

    def test_bc2_generic_degrees(self, bc2):
        assert generic_degree(bc2, "phi_1") == q_poly(0, 1, 2, 1, scale=Fraction(1, 2))
        assert generic_degree(bc2, "delta") == q_poly(0, 1, 0, 1, scale=Fraction(1, 2))

    def test_g2_generic_degrees(self, g2):
        assert generic_degree(g2, "phi_1") == q_poly(0, 1, 3, 4, 3, 1, scale=Fraction(1, 6))
        assert generic_degree(g2, "phi_2") == q_poly(0, 1, 1, 0, 1, 1, scale=Fraction(1, 2))
        assert generic_degree(g2, "delta") == q_poly(0, 1, 0, 1, 0, 1, scale=Fraction(1, 3))

    def test_g2_bundle(self, g2):
        record = degrees_bundle(g2, "phi_2")
        assert (record.a, record.A, record.content) == (1, 5, 0)
        assert record.to_json()["label"] == "phi_2"

    @pytest.mark.parametrize("system", [type_a(2), type_a(3), dihedral(4), dihedral(6)], ids=str)
    def test_schur_elements(self, system):
        for label in irreducibles(system):
            assert RFunc(schur_element_direct(system, label)) == schur_element(system, label)
            assert molien_schur_identity(system, label)

    @pytest.mark.parametrize("system", [type_a(2), type_a(3), dihedral(4), dihedral(6)], ids=str)
    def test_schur_orthogonality(self, system):
        assert schur_orthogonality_holds(system)

    def test_trivial_molien_is_invariants(self, a1):
        """Sym V of A(1) has invariants in every even degree"""
        series = molien(a1, (2,)).to_series(4)
        assert series.q_coefficients() == [1, 0, 1, 0, 1]


class TestRegular:
    """Test character values at regular elements and their periodic lifts"""

    @pytest.mark.parametrize("system", SYSTEMS, ids=str)
    def test_fake_degree_at_root_of_unity(self, system):
        for d in regular_numbers(system, max(system.degrees)):
            if d > 1:
                assert fake_degree_regular_identity(system, d), d

    @pytest.mark.parametrize("system", SYSTEMS, ids=str)
    def test_periodic_character(self, system):
        for d in regular_numbers(system, max(system.degrees)):
            if d > 1:
                assert periodic_character_identity(system, d), d

    def test_a1_half_twist(self, a1):
        """sigma acts by t on the trivial and by -1/t on the sign character"""
        word = lift_sigma(a1, a1.w0)
        assert hecke_char(a1, (2,), word) == HalfLaurent.monomial(1)
        assert hecke_char(a1, (1, 1), word) == HalfLaurent.monomial(-1, -1)

    def test_coxeter_element_of_a2(self, a2):
        """phi(c) = Feg_phi(zeta_3) gives 1, -1, 1"""
        c = regular_element_of_order(a2, 3)
        table = character_table(a2)
        values = [table.value(label, a2.class_of(c)) for label in irreducibles(a2)]
        assert sorted(values) == [-1, 1, 1]


class TestFourierTables:
    """Test loading and validation of Fourier tables"""

    def test_type_a_is_identity(self, a3):
        assert fourier_table(a3).is_identity()

    def test_packaged_bc2(self, bc2):
        table = fourier_table(bc2)
        assert not table.is_identity()
        assert table.entry("delta", "epsdelta") == Fraction(-1, 2)
        assert table.family_of("phi_1") == ["delta", "phi_1", "epsdelta"]

    def _write(self, directory, entries):
        data = {
            "type": "I2(5)",
            "labels": ["1", "phi_1", "phi_2", "eps"],
            "families": [["1"], ["phi_1", "phi_2"], ["eps"]],
            "entries": entries,
        }
        (directory / "I2(5).json").write_text(json.dumps(data), encoding="utf-8")

    def test_missing_table(self, tmp_path, data_dir_restore):
        settings.DATA_DIR = str(tmp_path)
        with pytest.raises(FourierDataError):
            fourier_table(dihedral(5))

    def test_asymmetric_table(self, tmp_path, data_dir_restore):
        self._write(tmp_path, [
            ["1", "0", "0", "0"],
            ["0", "1", "1/2", "0"],
            ["0", "0", "1", "0"],
            ["0", "0", "0", "1"],
        ])
        settings.DATA_DIR = str(tmp_path)
        with pytest.raises(FourierDataError):
            fourier_table(dihedral(5))

    def test_malformed_table(self, tmp_path, data_dir_restore):
        self._write(tmp_path, [["1", "0"], ["0", "1"]])
        settings.DATA_DIR = str(tmp_path)
        with pytest.raises(FourierDataError):
            fourier_table(dihedral(5))

    def test_identity_table_loads(self, tmp_path, data_dir_restore):
        identity = [["1" if i == j else "0" for j in range(4)] for i in range(4)]
        self._write(tmp_path, identity)
        settings.DATA_DIR = str(tmp_path)
        table = fourier_table(dihedral(5))
        assert table.is_identity()
        assert generic_degree(dihedral(5), "phi_1") == fake_degree(dihedral(5), "phi_1")


class TestVirtualCharacters:
    """Test rendering and serialization of virtual characters"""

    def test_render(self, a1):
        chi = VirtualCharacter(a1, {(2,): HalfLaurent({3: 1}), (1, 1): HalfLaurent({-3: -1})})
        assert chi.render() == "q^(3/2)·[2] − q^(-3/2)·[1,1]"
        assert chi.render(ascii_only=True) == "q^(3/2)*[2] - q^(-3/2)*[1,1]"

    def test_json_round_trip(self, a1):
        chi = VirtualCharacter(a1, {(2,): HalfLaurent({3: 1}), (1, 1): HalfLaurent({-3: -1})})
        assert chi.to_json() == {"[2]": "q^(3/2)", "[1,1]": "-q^(-3/2)"}
        assert VirtualCharacter.from_json(a1, chi.to_json()) == chi

    def test_tensor_and_dimension(self, a2):
        chi = VirtualCharacter(a2, {(2, 1): 1})
        assert chi * chi == VirtualCharacter(a2, {(3,): 1, (2, 1): 1, (1, 1, 1): 1})
        assert (chi * chi).dimension() == 4
        assert chi.eps_twist() == chi

    def test_label_keys(self, bc2):
        assert label_key((2, 1)) == "[2,1]"
        assert label_key("phi_1") == "phi_1"
