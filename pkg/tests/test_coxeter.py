"""
Coxeter systems, braid words, normal forms and slope classification
"""
from fractions import Fraction

import pytest

from braidtrace.core.exceptions import BraidSyntaxError, SizeGuardError, UnsupportedTypeError, ValidationError
from braidtrace.coxeter.braids import (
    BraidWord,
    full_twist,
    is_periodic_witness,
    lift_sigma,
    positive_normal_form,
    torus_braid,
)
from braidtrace.coxeter.regular import (
    is_regular_slope,
    regular_element_of_order,
    regular_elements,
    regular_numbers,
)
from braidtrace.coxeter.systems import CoxeterSystem, dihedral, partitions, type_a
from braidtrace.exactmath.laurent import HalfLaurent

SMALL_SYSTEMS = [type_a(1), type_a(2), type_a(3), dihedral(3), dihedral(4), dihedral(5), dihedral(6), dihedral(8)]


class TestSystems:
    """Test the group structure of A(n) and I2(m)"""

    def test_partitions_order(self):
        assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_supported_range(self):
        with pytest.raises(UnsupportedTypeError):
            type_a(9)
        with pytest.raises(UnsupportedTypeError):
            dihedral(2)
        with pytest.raises(UnsupportedTypeError):
            dihedral(13)
        with pytest.raises(UnsupportedTypeError):
            CoxeterSystem("E", 8)

    @pytest.mark.parametrize("system", SMALL_SYSTEMS, ids=str)
    def test_order_and_elements(self, system):
        elements = system.elements()
        assert len(elements) == system.order == len(set(elements))
        assert elements[0] == system.identity
        assert sum(system.class_size(c) for c in system.classes()) == system.order

    @pytest.mark.parametrize("system", SMALL_SYSTEMS, ids=str)
    def test_reduced_words(self, system):
        for w in system.elements():
            word = system.reduced_word(w)
            assert len(word) == system.length(w)
            assert system.from_word(word) == w
        assert system.length(system.w0) == system.N

    @pytest.mark.parametrize(
        "system", [type_a(n) for n in range(1, 5)] + [dihedral(m) for m in range(3, 9)], ids=str,
    )
    def test_descent_right_by_length(self, system):
        for w in system.elements():
            for i in system.generators:
                longer = system.length(system.right_mul_gen(w, i)) > system.length(w)
                assert system.descent_right(w, i) != longer

    @pytest.mark.parametrize("system", SMALL_SYSTEMS, ids=str)
    def test_poincare_polynomial(self, system):
        counts = {}
        for w in system.elements():
            counts[system.length(w)] = counts.get(system.length(w), 0) + 1
        assert system.poincare_polynomial() == HalfLaurent({2 * k: c for k, c in counts.items()})

    def test_invariant_degrees(self):
        assert type_a(3).degrees == (2, 3, 4)
        assert dihedral(5).degrees == (2, 5)
        assert dihedral(7).N == 7
        assert type_a(3).N == 6

    def test_product_convention(self, a2):
        s, t = a2.gen(1), a2.gen(2)
        assert a2.mul(s, t) == a2.from_word((1, 2))
        assert a2.mul(a2.inverse(s), s) == a2.identity

    def test_parabolic(self, a3):
        sub, gen_map = a3.parabolic((2, 3))
        assert sub == type_a(2)
        assert gen_map == {1: 2, 2: 3}
        with pytest.raises(UnsupportedTypeError):
            a3.parabolic((1, 3))

    def test_enumeration_guard(self, monkeypatch):
        from braidtrace.core.config import settings
        from braidtrace.coxeter import systems

        monkeypatch.setattr(settings, "MAX_GROUP_ORDER", 100)
        systems._elements.cache_clear()
        try:
            with pytest.raises(SizeGuardError):
                type_a(4).elements()
        finally:
            systems._elements.cache_clear()


class TestBraidWords:
    """Test braid word bookkeeping"""

    def test_writhe_and_inverse(self):
        word = BraidWord((1, -2, 1))
        assert word.writhe == 1
        assert word.inverse() == BraidWord((-1, 2, -1))
        assert (word + word.inverse()).writhe == 0

    def test_zero_letter_rejected(self):
        with pytest.raises(BraidSyntaxError):
            BraidWord((1, 0))

    def test_validate_rank(self, a2):
        with pytest.raises(BraidSyntaxError):
            BraidWord((3,)).validate(a2)

    def test_full_twist(self, a2, bc2):
        assert len(full_twist(a2)) == 6
        assert len(full_twist(bc2)) == 8
        assert lift_sigma(a2, a2.w0) == BraidWord((1, 2, 1))

    def test_torus_braid(self, a2, bc2):
        assert torus_braid(a2, 2) == BraidWord((1, 2, 1, 2))
        with pytest.raises(UnsupportedTypeError):
            torus_braid(bc2, 2)


class TestNormalForm:
    """Test the left-greedy normal form"""

    def test_full_twist_is_two_w0(self, a2):
        assert positive_normal_form(a2, BraidWord((1, 2) * 3)) == (a2.w0, a2.w0)

    def test_repeated_generator(self, a2):
        s = a2.gen(1)
        assert positive_normal_form(a2, BraidWord((1, 1))) == (s, s)

    @pytest.mark.parametrize("m", [3, 4, 5, 6, 12])
    def test_braid_relation(self, m):
        system = dihedral(m)
        left = BraidWord(tuple(1 if k % 2 == 0 else 2 for k in range(m)))
        right = BraidWord(tuple(2 if k % 2 == 0 else 1 for k in range(m)))
        assert positive_normal_form(system, left) == positive_normal_form(system, right) == (system.w0,)

    def test_empty_and_negative(self, a2):
        assert positive_normal_form(a2, BraidWord(())) == ()
        with pytest.raises(ValidationError):
            positive_normal_form(a2, BraidWord((1, -2)))

    def test_factors_multiply_back(self, a3, random_word):
        for _ in range(30):
            word = random_word(a3, 9, positive=True)
            factors = positive_normal_form(a3, word)
            product = a3.identity
            for f in factors:
                product = a3.mul(product, f)
            assert product == word.image_in_w(a3)
            assert sum(a3.length(f) for f in factors) == len(word)

    @pytest.mark.parametrize("system", [type_a(3), dihedral(5), dihedral(6)], ids=str)
    def test_local_braid_relation(self, system, random_word, samples):
        """Swapping the two sides of a braid relation inside a word keeps the normal form"""
        for _ in range(samples):
            i = 1 if system.rank == 2 else random_word(system, 1, positive=True).letters[0]
            j = i + 1 if i < system.rank else i - 1
            m = system.coxeter_matrix[i - 1][j - 1]
            left = BraidWord(tuple(i if k % 2 == 0 else j for k in range(m)))
            right = BraidWord(tuple(j if k % 2 == 0 else i for k in range(m)))
            u, v = random_word(system, 4, positive=True), random_word(system, 4, positive=True)
            assert positive_normal_form(system, u + left + v) == positive_normal_form(system, u + right + v)

    def test_periodic_witnesses(self, a1, a2, g2):
        assert is_periodic_witness(a1, BraidWord((1, 1, 1)), 2, 3)
        assert is_periodic_witness(a2, BraidWord((1, 2)), 3, 1)
        assert is_periodic_witness(g2, BraidWord((1, 2)), 6, 1)
        assert not is_periodic_witness(a2, BraidWord((1, 1)), 3, 1)


class TestRegularSlopes:
    """Test regular elements and slope classification"""

    def test_coxeter_element_is_regular(self, a2):
        assert (3,) in regular_elements(a2, 3)
        assert ("rot", 1) in regular_elements(dihedral(5), 5)
        assert regular_elements(a2, 4) == ()

    def test_a1_half(self, a1):
        report = is_regular_slope(a1, Fraction(1, 2))
        assert report.has("regular") and report.has("regular-elliptic") and report.has("cuspidal")
        assert report.classification == "cuspidal"

    def test_a2_half_is_not_elliptic(self, a2):
        report = is_regular_slope(a2, Fraction(1, 2))
        assert report.has("regular")
        assert not report.has("regular-elliptic")
        assert report.singular_degrees == [2]

    def test_a2_third(self, a2):
        report = is_regular_slope(a2, Fraction(2, 3))
        assert report.has("regular-elliptic")
        assert report.denominator == 3

    def test_nonsingular(self, a2):
        report = is_regular_slope(a2, Fraction(1, 4))
        assert report.flags == ["nonsingular"]
        assert report.classification == "nonsingular"

    def test_dihedral_coxeter_number(self, g2):
        assert is_regular_slope(g2, Fraction(1, 6)).has("regular-elliptic")
        assert is_regular_slope(g2, Fraction(1, 3)).has("regular")


ALL_SYSTEMS = (
    [type_a(n) for n in range(1, 6)]
    + [pytest.param(type_a(n), marks=pytest.mark.slow) for n in range(6, 9)]
    + [dihedral(m) for m in range(3, 13)]
)


class TestPeriodicLifts:
    """Test that regular elements lift to roots of the full twist"""

    @pytest.mark.parametrize("system", ALL_SYSTEMS, ids=str)
    def test_every_regular_number(self, system):
        for d in regular_numbers(system, max(system.degrees)):
            if d == 1:
                continue
            w = regular_element_of_order(system, d)
            assert system.class_of(w) in regular_elements(system, d)
            assert system.length(w) * d == 2 * system.N
            assert is_periodic_witness(system, lift_sigma(system, w), d, 1), (system.label, d)

    def test_reported_cases(self, a2, a3):
        """Lexicographically least representatives are not periodic here"""
        assert not is_periodic_witness(a2, BraidWord((1,)), 2, 1)
        assert is_periodic_witness(a2, lift_sigma(a2, regular_element_of_order(a2, 2)), 2, 1)
        for d in (2, 3, 4):
            assert is_periodic_witness(a3, lift_sigma(a3, regular_element_of_order(a3, d)), d, 1)
        i25 = dihedral(5)
        assert is_periodic_witness(i25, lift_sigma(i25, regular_element_of_order(i25, 2)), 2, 1)

    @pytest.mark.slow
    def test_searched_root(self):
        """A(6) has a cube root of the full twist off the bipartite family"""
        system = type_a(6)
        w = regular_element_of_order(system, 3)
        assert system.length(w) == 14
        assert is_periodic_witness(system, lift_sigma(system, w), 3, 1)

    def test_no_regular_elements(self, a2):
        with pytest.raises(ValidationError):
            regular_element_of_order(a2, 4)
        with pytest.raises(ValidationError):
            regular_element_of_order(a2, 1)
