"""
Graded characters of standard modules, Omega at regular slopes, cuspidal
simples and defects
"""
from fractions import Fraction

import pytest

from braidtrace.core.exceptions import SlopeError, ValidationError
from braidtrace.coxeter.braids import BraidWord
from braidtrace.coxeter.regular import is_regular_slope
from braidtrace.coxeter.systems import type_a
from braidtrace.daha.defects import block_defect_report, defect, singular_count
from braidtrace.daha.graded import split_shift, verma_char, verma_shift
from braidtrace.daha.omega import (
    omega_bridge_check,
    omega_char,
    omega_integrality,
    periodic_trace,
    principal_series_identity,
)
from braidtrace.daha.simples import bgg_sum, cuspidal_L_char, gors_check
from braidtrace.exactmath.laurent import HalfLaurent, ONE
from braidtrace.exactmath.rfunc import RFunc
from braidtrace.reptheory.virtual import VirtualCharacter

HALF = Fraction(1, 2)


class TestStandardModules:
    """Test Verma characters and shifts"""

    def test_split_shift(self):
        assert split_shift(Fraction(5, 3)) == (Fraction(1, 6), 3)
        assert split_shift(Fraction(-1, 2)) == (Fraction(0), -1)

    def test_lowest_weights(self, a1):
        assert verma_shift(a1, HALF, (2,)) == 0
        assert verma_shift(a1, HALF, (1, 1)) == 1

    def test_verma_is_phi_times_sym(self, a1):
        value = verma_char(a1, HALF, (2,))
        assert value.shifts() == [Fraction(0)]
        series = value.series(4)[Fraction(0)]
        assert series.coefficient((2,)).q_coefficients() == [1, 0, 1, 0, 1]
        assert series.coefficient((1, 1)).q_coefficients() == [0, 1, 0, 1, 0]


class TestOmega:
    """Test Omega_nu and its relation to periodic braids"""

    def test_a1_half(self, a1):
        assert omega_char(a1, HALF).part(0) == VirtualCharacter(a1, {(2,): RFunc(ONE)})

    def test_a1_three_halves(self, a1):
        value = omega_char(a1, Fraction(3, 2))
        assert value.shifts() == [Fraction(0)]
        expected = VirtualCharacter(a1, {
            (2,): RFunc(HalfLaurent({-2: 1, 2: 1})),
            (1, 1): RFunc(ONE),
        })
        assert value.part(0) == expected
        assert value.dimension() == 3

    def test_integrality(self, a2):
        assert omega_integrality(a2, Fraction(1, 3)) == {(3,): 1, (2, 1): -1, (1, 1, 1): 1}
        with pytest.raises(SlopeError):
            omega_integrality(a2, Fraction(1, 4))

    def test_irrational_multiplicities(self, a2):
        with pytest.raises(SlopeError):
            omega_char(a2, Fraction(1, 4))

    def test_a1_third_is_irrational(self, a1):
        """Deg of the sign character at q = e^(2 pi i/3) is not rational"""
        with pytest.raises(SlopeError):
            omega_char(a1, Fraction(1, 3))
        value = verma_char(a1, Fraction(1, 3), (1, 1))
        assert value.shifts() == [Fraction(1, 3)]

    @pytest.mark.parametrize("rank", [1, 2, 3])
    def test_finite_at_regular_elliptic_slopes(self, rank):
        system = type_a(rank)
        h = rank + 1
        slopes = [Fraction(k, h) for k in range(1, 3 * h)]
        slopes = [nu for nu in slopes if is_regular_slope(system, nu).has("regular-elliptic")]
        assert slopes
        for nu in slopes:
            assert omega_char(system, nu).is_laurent(), nu

    def test_periodic_trace(self, a2):
        assert periodic_trace(a2, Fraction(1, 3)).render() == "q·[3] − [2,1] + q^(-1)·[1,1,1]"

    @pytest.mark.parametrize("rank, word, nu, witness", [
        (1, (1,), HALF, (2, 1)),
        (2, (1, 2), Fraction(1, 3), (3, 1)),
        (1, (1, 1, 1), Fraction(3, 2), (2, 3)),
    ])
    def test_bridge(self, rank, word, nu, witness):
        assert omega_bridge_check(type_a(rank), BraidWord(word), nu, witness)

    def test_bridge_rejects_wrong_witness(self, a2):
        with pytest.raises(SlopeError):
            omega_bridge_check(a2, BraidWord((1, 2)), Fraction(1, 3), (2, 1))
        with pytest.raises(SlopeError):
            omega_bridge_check(a2, BraidWord((1, 1)), Fraction(1, 3), (3, 1))

    def test_principal_series(self, a2, bc2):
        assert principal_series_identity(a2)
        assert principal_series_identity(bc2)


class TestCuspidalSimples:
    """Test L_nu(1) at cuspidal slopes"""

    @pytest.mark.parametrize("m", [1, 3, 5])
    def test_rank_one_dimension(self, a1, m):
        assert cuspidal_L_char(a1, Fraction(m, 2)).dimension() == m

    @pytest.mark.parametrize("nu, dim", [(Fraction(1, 3), 1), (Fraction(2, 3), 4), (Fraction(4, 3), 16)])
    def test_rank_two_dimension(self, a2, nu, dim):
        value = cuspidal_L_char(a2, nu)
        assert value.has_natural_coefficients()
        assert value.dimension() == dim

    def test_bgg_resolution(self, a1, a2):
        assert bgg_sum(a1, HALF) == cuspidal_L_char(a1, HALF)
        assert bgg_sum(a2, Fraction(1, 3)) == cuspidal_L_char(a2, Fraction(1, 3))

    def test_non_cuspidal_slopes(self, a1, a2):
        with pytest.raises(SlopeError):
            cuspidal_L_char(a2, HALF)
        with pytest.raises(SlopeError):
            cuspidal_L_char(a1, -HALF)

    @pytest.mark.parametrize("n, m", [(2, 3), (2, 5), (3, 2)])
    def test_torus_knots(self, n, m):
        assert gors_check(n, m)

    @pytest.mark.parametrize("n, m", [(2, 4), (1, 3), (3, 3)])
    def test_torus_knot_arguments(self, n, m):
        with pytest.raises(ValidationError):
            gors_check(n, m)


class TestDefects:
    """Test zeta-defects of Schur elements"""

    def test_rank_one(self, a1):
        assert defect(a1, (1, 1), HALF) == 1
        assert defect(a1, (2,), HALF) == 1

    def test_rank_two(self, a2):
        assert defect(a2, (2, 1), Fraction(1, 3)) == 1
        assert singular_count(a2, Fraction(1, 3)) == 1

    def test_block_report(self, a2):
        report = block_defect_report(a2, HALF)
        records = {r.label: r for r in report.records}
        assert records["[2,1]"].defect == 0
        assert not records["[2,1]"].maximal
        assert records["[3]"].maximal
