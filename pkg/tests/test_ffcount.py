"""
Finite-field point counts of braid varieties and the Springer comparison
"""
from fractions import Fraction

import pytest

from braidtrace.core.exceptions import (
    DecompositionError,
    SizeGuardError,
    UnsupportedTypeError,
    ValidationError,
)
from braidtrace.coxeter.braids import BraidWord
from braidtrace.coxeter.systems import type_a
from braidtrace.exactmath.laurent import HalfLaurent, ONE
from braidtrace.ffcount.counting import count_chains
from braidtrace.ffcount.flags import borel_order, flag_variety, group_order
from braidtrace.ffcount.springer import (
    class_size,
    kostka_foulkes,
    orthogonality_identity,
    q1_identity,
    springer_decompose,
    springer_table,
)
from braidtrace.ffcount.verification import (
    interpolate_counts,
    verify_hecke_prediction,
    verify_kalman,
    verify_virtual,
)
from braidtrace.ffcount.x0 import count_x0, count_x0_brute, fiber_proposition
from braidtrace.reptheory.virtual import VirtualCharacter
from braidtrace.traces.rtrace import rw_trace0


def sigma_power(k):
    return BraidWord((1,) * k)


class TestGroups:
    """Test group orders and flag varieties"""

    def test_orders(self):
        assert group_order("SL2", 3) == 24
        assert group_order("GL2", 3) == 48
        assert borel_order("SL2", 3) == 6
        assert borel_order("GL2", 3) == 12
        assert group_order("GL3", 2) == 168

    def test_flag_variety_sizes(self):
        assert flag_variety("SL2", 3).size == 4
        assert flag_variety("GL3", 2).size == 21

    def test_unknown_group(self):
        with pytest.raises(ValidationError):
            group_order("SP4", 3)


@pytest.mark.finite_field
class TestChainCounts:
    """Test counts of chains of Borel subgroups"""

    @pytest.mark.parametrize("k, q, expected", [(1, 3, 0), (2, 3, 12), (3, 5, 120), (4, 3, 84)])
    def test_rank_one_closed_form(self, k, q, expected):
        """q^k + q (-1)^k"""
        assert count_chains("SL2", q, sigma_power(k)).counts == {"1": expected}

    def test_identity_fiber(self):
        word = sigma_power(3)
        over_identity = count_chains("SL2", 3, word, fiber="g", g=[[1, 0], [0, 1]])
        assert over_identity.counts["g"] == count_chains("SL2", 3, word).counts["1"]

    def test_unipotent_fibers(self):
        assert count_chains("SL2", 3, sigma_power(1), fiber="unipotent").counts == {"[1,1]": 0, "[2]": 24}
        assert count_chains("SL2", 3, sigma_power(3), fiber="unipotent").counts == {"[1,1]": 24, "[2]": 216}

    def test_all_fiber(self):
        report = count_chains("SL2", 3, sigma_power(1), fiber="all")
        assert report.total == borel_order("SL2", 3) * 4 * 3

    @pytest.mark.parametrize("kwargs", [
        {"group": "SL2", "q": 4, "word": BraidWord((1,))},
        {"group": "SL2", "q": 3, "word": BraidWord((1,)), "fiber": "center"},
        {"group": "SP4", "q": 3, "word": BraidWord((1,))},
        {"group": "SL2", "q": 3, "word": BraidWord((1, -1))},
        {"group": "SL2", "q": 3, "word": BraidWord((1,)), "fiber": "g"},
        {"group": "SL2", "q": 3, "word": BraidWord((1,)), "fiber": "g", "g": [[2, 0], [0, 1]]},
    ])
    def test_invalid_requests(self, kwargs):
        with pytest.raises(ValidationError):
            count_chains(**kwargs)

    def test_size_guards(self):
        with pytest.raises(SizeGuardError):
            count_chains("SL2", 11, sigma_power(1))
        with pytest.raises(SizeGuardError):
            count_chains("SL2", 3, sigma_power(15))


@pytest.mark.finite_field
class TestAffineChart:
    """Test the X_0 chart of GL_2 braid varieties"""

    @pytest.mark.parametrize("q", [2, 3, 5, 7])
    def test_closed_forms(self, q):
        assert count_x0(q, sigma_power(1)) == 0
        assert count_x0(q, sigma_power(2)) == q
        assert count_x0(q, sigma_power(3)) == q * (q - 1)
        assert count_x0(q, sigma_power(4)) == q * q + q * (q - 1) ** 2

    @pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
    def test_transfer_matches_enumeration(self, k):
        assert count_x0(5, sigma_power(k)) == count_x0_brute(5, sigma_power(k))

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_fiber_proposition(self, k):
        assert fiber_proposition(3, sigma_power(k))

    def test_rejects_other_groups(self):
        with pytest.raises(ValidationError):
            count_x0(3, BraidWord((1, 2)))
        with pytest.raises(ValidationError):
            count_x0(9, sigma_power(2))


@pytest.mark.finite_field
class TestVerification:
    """Compare counts against Hecke-algebra predictions"""

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_virtual_identity(self, k):
        assert verify_virtual("SL2", 3, sigma_power(k)).passed

    def test_virtual_identity_is_for_sl(self):
        with pytest.raises(UnsupportedTypeError):
            verify_virtual("GL2", 3, sigma_power(1))

    def test_kalman_count(self):
        report = verify_kalman("SL2", 3, sigma_power(1))
        assert report.passed
        assert report.expected == "24"

    @pytest.mark.parametrize("word", [(1,), (1, 1), (1, 1, 1)])
    def test_hecke_prediction_rank_one(self, word):
        assert verify_hecke_prediction("SL2", 5, BraidWord(word)).passed

    @pytest.mark.slow
    def test_hecke_prediction_rank_two(self):
        assert verify_hecke_prediction("GL3", 2, BraidWord((1, 2, 1, 2))).passed

    def test_interpolation(self):
        assert interpolate_counts({2: 2, 3: 6, 5: 20}) == [0, -1, 1]
        assert interpolate_counts({3: 4}) == [Fraction(4)]
        with pytest.raises(ValidationError):
            interpolate_counts({})


class TestSpringer:
    """Test Kostka-Foulkes polynomials and total Springer representations"""

    def test_kostka_foulkes(self):
        assert kostka_foulkes((2,), (1, 1)) == HalfLaurent.monomial(2)
        assert kostka_foulkes((3,), (1, 1, 1)) == HalfLaurent.monomial(6)
        assert kostka_foulkes((2, 1), (1, 1, 1)) == HalfLaurent({2: 1, 4: 1})
        assert kostka_foulkes((2, 1), (2, 1)) == ONE
        assert kostka_foulkes((1, 1), (2,)).is_zero()

    def test_rank_one_table(self, a1):
        table = springer_table(a1)
        assert table[(2,)] == VirtualCharacter(a1, {(2,): ONE})
        assert table[(1, 1)] == VirtualCharacter(a1, {(2,): ONE, (1, 1): HalfLaurent.monomial(2)})

    def test_supported_types(self, bc2):
        with pytest.raises(UnsupportedTypeError):
            springer_table(type_a(4))
        with pytest.raises(UnsupportedTypeError):
            springer_table(bc2)

    def test_class_sizes(self):
        assert class_size((1, 1)) == ONE
        assert class_size((2,)) == HalfLaurent({4: 1, 0: -1})

    def test_decompose_trefoil(self, a1):
        coeffs = springer_decompose(a1, rw_trace0(a1, sigma_power(3)))
        assert coeffs == {(1, 1): ONE, (2,): HalfLaurent.monomial(4)}

    def test_decompose_unknot(self, a2):
        assert springer_decompose(a2, rw_trace0(a2, BraidWord((1, 2)))) == {(3,): ONE}

    def test_decompose_needs_laurent(self, a1):
        with pytest.raises(DecompositionError):
            springer_decompose(a1, rw_trace0(a1, BraidWord(())))

    @pytest.mark.parametrize("rank", [1, 2, 3])
    def test_identities(self, rank):
        system = type_a(rank)
        assert q1_identity(system)
        assert orthogonality_identity(system)
