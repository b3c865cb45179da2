"""Tests for the cevian polynomial ring"""

import math
import random
from fractions import Fraction

import numpy as np
import pytest

from src.algebra.polyring import (
    R,
    C,
    S,
    T,
    VarId,
    c,
    canonical,
    chebyshev_phase,
    const,
    degree_in,
    equal_mod_trig,
    evaluate,
    exact_divide,
    lift,
    match_factorization,
    permute_indices,
    poly_arith,
    proportional,
    pythagorean_reduce,
    rat,
    relabel,
    s,
    serialize,
    substitute,
    swap,
    term_coefficient,
    trig_values,
    unlift,
    variables,
    verify_factorization,
)


class TestVarId:
    """Test the variable enumeration"""

    def test_generator_positions(self):
        """Test every VarId maps to its generator"""
        assert len(VarId) == R.ngens == 24
        for var in VarId:
            assert R.gens[var.position] == var.gen

    def test_lookup_by_family(self):
        """Test family/subscript lookup"""
        assert VarId.of("S", 3) is VarId.S3
        assert VarId.S5.family == "S"
        assert VarId.t6.subscript == 6

    def test_unknown_variable(self):
        """Test S2 is not a ring variable"""
        with pytest.raises(ValueError):
            VarId.of("S", 2)


class TestArithmetic:
    """Test ring operations"""

    def test_poly_arith(self):
        """Test (t1 - t2)^2 expands"""
        t1, t2 = T(1), T(2)
        diff = poly_arith(t1, t2, "sub")
        assert poly_arith(diff, diff, "mul") == t1**2 - 2 * t1 * t2 + t2**2

    def test_poly_arith_unknown(self):
        """Test unknown operation"""
        with pytest.raises(ValueError):
            poly_arith(T(1), T(2), "div")

    def test_variables_and_degree(self):
        """Test variable inspection"""
        p = T(1) ** 3 * s(5) + C(3)
        assert variables(p) == {VarId.t1, VarId.s5, VarId.C3}
        assert degree_in(p, "t1") == 3
        assert degree_in(R.zero, VarId.t1) == -1


class TestSubstitution:
    """Test substitution and relabelling"""

    def test_substitute_value(self):
        """Test t3 = 1/2 substitution"""
        p = T(3) * s(5) - rat(1, 2) * s(5)
        assert substitute(p, {"t3": rat(1, 2)}) == R.zero

    def test_substitute_rejects_recursive_binding(self):
        """Test a value mentioning a bound variable"""
        p = T(1) ** 2 * T(3)
        with pytest.raises(ValueError):
            substitute(p, {"t1": T(3), "t3": T(1)})

    def test_substitute_polynomial(self):
        """Test C1 := 1 - S1"""
        assert substitute(C(1) * T(1), {VarId.C1: 1 - S(1)}) == T(1) - S(1) * T(1)

    def test_relabel_identifies(self):
        """Test t2 -> t1 merges exponents"""
        assert relabel(T(1) * T(2) * s(2), {2: 1}) == T(1) ** 2 * s(1)

    def test_relabel_rejects_even_big_variables(self):
        """Test S3 cannot be sent to subscript 4"""
        with pytest.raises(ValueError):
            relabel(S(3), {3: 4})

    def test_permute_indices(self):
        """Test a 3-cycle acts on every family"""
        p = T(1) * s(3) * C(5)
        assert permute_indices(p, {1: 3, 3: 5, 5: 1}) == T(3) * s(5) * C(1)

    def test_permute_involution(self):
        """Test applying a transposition twice"""
        p = T(1) ** 2 * c(3) - S(5) * T(3)
        assert permute_indices(permute_indices(p, swap(1, 5)), swap(1, 5)) == p

    def test_permute_rejects_non_bijection(self):
        """Test {1->3, 3->3} is refused"""
        with pytest.raises(ValueError):
            permute_indices(T(1), {1: 3})
        with pytest.raises(ValueError):
            permute_indices(T(1), {2: 4})


class TestTrigNormalForm:
    """Test Pythagorean reduction and lifting"""

    def test_reduce_square(self):
        """Test s1^2 becomes 1 - c1^2"""
        assert pythagorean_reduce(s(1) ** 2) == 1 - c(1) ** 2

    def test_reduce_is_idempotent(self):
        """Test reduction of a reduced form"""
        p = s(2) ** 5 * c(2) + s(1) ** 3 * T(4)
        once = pythagorean_reduce(p)
        assert pythagorean_reduce(once) == once
        assert max(degree_in(once, v) for v in ("s1", "s2")) == 1

    def test_pythagoras(self):
        """Test s_i^2 + c_i^2 - 1 reduces to zero"""
        for i in range(1, 7):
            assert canonical(s(i) ** 2 + c(i) ** 2 - 1) == R.zero

    def test_lift_and_unlift(self):
        """Test S_i collects even sine powers"""
        p = s(3) ** 3 * c(5) ** 2
        assert lift(p) == S(3) * s(3) * c(5) ** 2
        assert lift(p, cosines=True) == S(3) * s(3) * C(5)
        assert unlift(lift(p, cosines=True)) == p

    def test_equal_mod_trig(self):
        """Test S1 + C1 equals 1"""
        assert equal_mod_trig(S(1) + C(1), const(1))
        assert not equal_mod_trig(S(1), const(1))


class TestDivision:
    """Test exact division and factorization"""

    def test_exact_divide(self):
        """Test exact quotient"""
        t3, t4 = T(3), T(4)
        assert exact_divide((t3 - t4) ** 2 * s(1), (t3 - t4) ** 2) == s(1)

    def test_not_divisible(self):
        """Test a remainder gives None"""
        assert exact_divide(T(1) ** 2 + 1, T(1)) is None

    def test_division_by_zero(self):
        """Test zero divisor"""
        with pytest.raises(ZeroDivisionError):
            exact_divide(T(1), R.zero)

    def test_factorization(self):
        """Test constant * prod(factor^m)"""
        t1 = T(1)
        p = 48 * (11 * t1 - 3) ** 2 * (2 * t1 - 1)
        assert verify_factorization(p, 48, [(11 * t1 - 3, 2), (2 * t1 - 1, 1)])
        assert not verify_factorization(p, 47, [(11 * t1 - 3, 2), (2 * t1 - 1, 1)])

    def test_match_factorization_sign(self):
        """Test the opposite-sign convention is detected"""
        t1 = T(1)
        p = -(t1 - 1) * (t1 + 2)
        assert match_factorization(p, 1, [(t1 - 1, 1), (t1 + 2, 1)]) == -1
        assert match_factorization(p, -1, [(t1 - 1, 1), (t1 + 2, 1)]) == 1
        assert match_factorization(p, 1, [(t1, 2)]) is None


class TestChebyshevPhase:
    """Test multiple-angle expansions"""

    @pytest.mark.parametrize("m", [0, 1, 2, 3, 5, -2])
    def test_numeric_agreement(self, m):
        """Test sin(m x) and cos(m x) against math"""
        t = 0.2137
        values = trig_values({2: t})
        assert abs(evaluate(chebyshev_phase("sin", m, 2), values) - math.sin(m * t * math.pi)) < 1e-12
        assert abs(evaluate(chebyshev_phase("cos", m, 2), values) - math.cos(m * t * math.pi)) < 1e-12

    def test_double_angle(self):
        """Test sin(2x) = 2 s c"""
        assert chebyshev_phase("sin", 2, 1) == 2 * s(1) * c(1)

    def test_bad_arguments(self):
        """Test kind and subscript validation"""
        with pytest.raises(ValueError):
            chebyshev_phase("tan", 1, 1)
        with pytest.raises(ValueError):
            chebyshev_phase("sin", 1, 7)


class TestProportional:
    """Test monomial cofactors modulo the trig relations"""

    def test_finds_cofactor(self):
        """Test cofactor with an s part"""
        display = (c(4) ** 2 - 1) * (T(1) - T(2)) ** 2
        computed = -rat(3, 2) * T(3) * s(5) * display
        cofactor = proportional(computed, display)
        assert cofactor == -rat(3, 2) * T(3) * s(5)
        assert term_coefficient(cofactor) == Fraction(-3, 2)

    def test_modulo_trig(self):
        """Test s4^2 on one side and 1 - c4^2 on the other"""
        assert proportional(-(s(4) ** 2) * T(1), (c(4) ** 2 - 1) * T(1)) == const(1)

    def test_not_proportional(self):
        """Test a non-monomial ratio"""
        assert proportional(T(1) + T(2), T(1)) is None
        assert proportional(R.zero, T(1)) is None


class TestSerialize:
    """Test canonical text"""

    def test_zero(self):
        """Test the zero polynomial"""
        assert serialize(R.zero) == "0"

    def test_rationals_and_exponents(self):
        """Test n/d coefficients and explicit exponents"""
        text = serialize(rat(3, 2) * T(1) ** 2 * s(3) - 1)
        assert text == "(3/2)*t1^2*s3^1 + (-1/1)"

    def test_evaluate_exact(self):
        """Test evaluation with Fraction arithmetic"""
        p = T(1) ** 2 - rat(1, 4)
        assert evaluate(p, {"t1": Fraction(1, 2)}, convert=Fraction) == 0
        with pytest.raises(ValueError):
            evaluate(p, {})


def _random_poly(rng, gens, terms=4, degree=2):
    """Sum of random rational multiples of products of gens"""
    p = R.zero
    for _ in range(terms):
        term = const(Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
        for gen in gens:
            term = term * gen ** rng.randint(0, degree)
        p = p + term
    return p


class TestRandomProperties:
    """Test ring laws on seeded random polynomials"""

    def test_substitute_is_homomorphism(self):
        """Test substitution commutes with + and *"""
        rng = random.Random(11)
        gens = [T(1), T(3), s(1), c(1)]
        bindings = {"t1": T(2) + rat(1, 3), "s1": c(2) - T(3), "c1": const(Fraction(1, 2))}
        for _ in range(30):
            p, q = _random_poly(rng, gens), _random_poly(rng, gens)
            assert substitute(p + q, bindings) == substitute(p, bindings) + substitute(q, bindings)
            assert substitute(p * q, bindings) == substitute(p, bindings) * substitute(q, bindings)

    def test_reduce_preserves_values(self):
        """Test pythagorean_reduce agrees numerically at 200 random points"""
        rng = random.Random(13)
        points = np.random.default_rng(13).uniform(0.0, 1.0, size=(200, 2))
        for _ in range(5):
            p = _random_poly(rng, [s(1), c(1), s(3), c(3), T(1)], terms=5, degree=4)
            reduced = pythagorean_reduce(p)
            for x, y in points:
                values = trig_values({1: float(x), 3: float(y)})
                assert evaluate(reduced, values) == pytest.approx(evaluate(p, values), abs=1e-9)

    def test_exact_divide_recovers_quotient(self):
        """Test exact_divide(p * d, d) == p"""
        rng = random.Random(17)
        gens = [T(1), T(2), s(3), c(5)]
        for _ in range(30):
            p, d = _random_poly(rng, gens), _random_poly(rng, gens)
            if not d:
                continue
            assert exact_divide(p * d, d) == p
