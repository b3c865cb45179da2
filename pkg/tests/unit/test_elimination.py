"""Tests for resultants, rational functions, quadratic roots and Sturm certificates"""

import random
from fractions import Fraction

import pytest

from src.algebra.elimination import (
    QuadExt,
    RatFunc,
    SignVerdict,
    UniPoly,
    bareiss_determinant,
    eval_quadratic,
    quad_roots,
    ratfunc_equal,
    ratfunc_equal_mod,
    solve_linear,
    square_free_split,
    sturm_root_count,
    sturm_sign_certificate,
    sylvester_matrix,
    sylvester_resultant,
    to_univariate,
)
from src.algebra.polyring import R, S, T, VarId, c, const


class TestResultant:
    """Test Sylvester resultants"""

    def test_numeric_resultant(self):
        """Test Res(t^2 - 1, t - 2) = 3"""
        t1 = T(1)
        assert sylvester_resultant(t1**2 - 1, t1 - 2, "t1") == const(3)

    def test_eliminates_variable(self):
        """Test eliminating t5 from t5 - t1 and t5 + t1 - 1"""
        t1, t5 = T(1), T(5)
        assert sylvester_resultant(t5 - t1, t5 + t1 - 1, VarId.t5) == 2 * t1 - 1

    def test_common_root_gives_zero(self):
        """Test a shared factor makes the resultant vanish"""
        t1, t3 = T(1), T(3)
        p = (t1 - t3) * (t1 + 2)
        q = (t1 - t3) * (t1 - 5)
        assert sylvester_resultant(p, q, "t1") == R.zero

    def test_matrix_shape(self):
        """Test (m + n) x (m + n) layout with p rows first"""
        t1 = T(1)
        matrix = sylvester_matrix(t1**2 + 2, t1 - 3, "t1")
        assert len(matrix) == 3
        assert matrix[0] == [const(1), R.zero, const(2)]
        assert matrix[1] == [const(1), const(-3), R.zero]
        assert matrix[2] == [R.zero, const(1), const(-3)]

    def test_degree_zero_rejected(self):
        """Test resultant against a constant in var"""
        with pytest.raises(ValueError):
            sylvester_resultant(T(1), T(3), "t1")

    def test_bareiss_numeric(self):
        """Test a 3x3 determinant"""
        m = [[const(2), const(1), R.zero], [const(1), const(3), const(1)], [R.zero, const(1), const(4)]]
        assert bareiss_determinant(m) == const(18)

    def test_bareiss_pivot_swap(self):
        """Test a zero pivot triggers a row swap"""
        m = [[R.zero, const(1)], [const(1), R.zero]]
        assert bareiss_determinant(m) == const(-1)

    def test_bareiss_not_square(self):
        """Test non-square input"""
        with pytest.raises(ValueError):
            bareiss_determinant([[const(1), const(2)]])

    def test_unipoly(self):
        """Test the univariate view keeps coefficients in other variables"""
        t1, t3 = T(1), T(3)
        uni = UniPoly.from_poly(t3 * t1**2 + 5, "t1")
        assert uni.degree == 2
        assert uni.leading_coefficient == t3
        assert uni.to_poly() == t3 * t1**2 + 5


class TestRatFunc:
    """Test rational functions"""

    def test_normalizes_denominator(self):
        """Test the denominator becomes monic"""
        f = RatFunc(2 * T(1), 4 * T(2))
        assert f.den == T(2)
        assert f.num * 2 == T(1)

    def test_arithmetic(self):
        """Test 1/t1 + 1/t2"""
        t1, t2 = T(1), T(2)
        total = RatFunc(1, t1) + RatFunc(1, t2)
        assert total == RatFunc(t1 + t2, t1 * t2)
        assert (total - RatFunc(1, t2)) * t1 == 1
        assert RatFunc(t1, t2) ** -1 == RatFunc(t2, t1)

    def test_zero_denominator(self):
        """Test construction and division by zero"""
        with pytest.raises(ZeroDivisionError):
            RatFunc(1, 0)
        with pytest.raises(ZeroDivisionError):
            RatFunc(1) / RatFunc(0)

    def test_substitute_fraction(self):
        """Test t1 := 1/t3 in t1/t2"""
        t2, t3 = T(2), T(3)
        f = RatFunc(T(1), t2).substitute({"t1": RatFunc(1, t3)})
        assert f == RatFunc(1, t2 * t3)

    def test_substitute_recursive(self):
        """Test a binding mentioning a bound variable"""
        with pytest.raises(ValueError):
            RatFunc(T(1)).substitute({"t1": RatFunc(T(1), 2)})

    def test_equal_mod_trig(self):
        """Test S1 / c1 equals (1 - c1^2) / c1 modulo the trig relations"""
        a = RatFunc(S(1), c(1))
        b = RatFunc(1 - c(1) ** 2, c(1))
        assert ratfunc_equal_mod(a, b)
        assert not ratfunc_equal(a, b)

    def test_evaluate(self):
        """Test exact evaluation"""
        f = RatFunc(T(1) ** 2, T(1) + 1)
        assert f.evaluate({"t1": Fraction(1, 2)}, convert=Fraction) == Fraction(1, 6)

    def test_solve_linear(self):
        """Test 3 t1 - 2 = 0"""
        assert solve_linear(3 * T(1) - 2, "t1") == RatFunc(2, 3)
        s5 = solve_linear(T(3) * S(5) - T(5) ** 2, S(5))
        assert s5 == RatFunc(T(5) ** 2, T(3))

    def test_solve_linear_wrong_degree(self):
        """Test a quadratic is refused"""
        with pytest.raises(ValueError):
            solve_linear(T(1) ** 2 - 1, "t1")


class TestQuadExt:
    """Test exact quadratic irrationals"""

    def test_square_free_split(self):
        """Test 2436 = 2^2 * 609"""
        assert square_free_split(2436) == (2, 609)
        with pytest.raises(ValueError):
            square_free_split(0)

    def test_normalizes_radicand(self):
        """Test sqrt(8) = 2 sqrt(2)"""
        x = QuadExt(0, 1, 8)
        assert x.b == 2 and x.d == 2

    def test_field_operations(self):
        """Test (1 + sqrt2)(1 - sqrt2) = -1 and division"""
        x = QuadExt(1, 1, 2)
        assert x * x.conjugate() == -1
        assert (x / x) == 1
        assert (1 - x) == QuadExt(0, -1, 2)

    def test_sign(self):
        """Test exact signs"""
        assert QuadExt(Fraction(6, 19), Fraction(-1, 57), 609).sign() == -1
        assert QuadExt(Fraction(6, 19), Fraction(1, 57), 609).sign() == 1
        assert QuadExt(3, -1, 2).sign() == 1

    def test_quad_roots(self):
        """Test 57 t^2 - 36 t - 5"""
        larger, smaller = quad_roots(57, -36, -5)
        assert larger == QuadExt(Fraction(6, 19), Fraction(1, 57), 609)
        assert smaller.sign() < 0
        assert eval_quadratic(57, -36, -5, larger).is_zero()

    def test_rational_roots(self):
        """Test 6 t^2 - 5 t + 1 has roots 1/2 and 1/3"""
        roots = quad_roots(6, -5, 1)
        assert sorted(r.a for r in roots) == [Fraction(1, 3), Fraction(1, 2)]
        assert all(r.b == 0 for r in roots)

    def test_no_real_roots(self):
        """Test a negative discriminant"""
        assert quad_roots(131, -42, 7) == []
        with pytest.raises(ValueError):
            quad_roots(0, 1, 1)


class TestSturm:
    """Test Sturm root counts and sign certificates"""

    def test_positive_everywhere(self):
        """Test 131 t^2 - 42 t + 7 > 0"""
        t1 = T(1)
        assert sturm_sign_certificate(131 * t1**2 - 42 * t1 + 7) == SignVerdict.POSITIVE

    def test_negative_on_interval(self):
        """Test 5 t^2 - 15 t - 8 < 0 on [0, 1]"""
        t3 = T(3)
        assert sturm_sign_certificate(5 * t3**2 - 15 * t3 - 8, 0, 1) == SignVerdict.NEGATIVE
        assert sturm_sign_certificate(5 * t3**2 - 15 * t3 - 8) == SignVerdict.HAS_ROOT

    def test_root_at_endpoint(self):
        """Test a root at a closed endpoint"""
        assert sturm_sign_certificate(T(1) ** 2 - 1, 1, 2) == SignVerdict.HAS_ROOT

    def test_root_count(self):
        """Test (t - 1/2)(t - 1/3) on (0, 1] and t^2 - 2 on R"""
        t1 = T(1)
        assert sturm_root_count((2 * t1 - 1) * (3 * t1 - 1), 0, 1) == 2
        assert sturm_root_count((2 * t1 - 1) * (3 * t1 - 1), Fraction(2, 5), 1) == 1
        assert sturm_root_count([-2, 0, 1]) == 2

    def test_constant(self):
        """Test constants have a sign and no roots"""
        assert sturm_sign_certificate([-3]) == SignVerdict.NEGATIVE
        with pytest.raises(ValueError):
            sturm_sign_certificate([0])

    def test_univariate_only(self):
        """Test two variables are refused"""
        with pytest.raises(ValueError):
            to_univariate(T(1) + T(3))


def _random_in_t1(rng, degree):
    """Random polynomial of exact degree in t1 with coefficients linear in t3"""
    t1, t3 = T(1), T(3)
    p = const(rng.choice([-3, -2, -1, 1, 2, 3])) * t1**degree
    for e in range(degree):
        p = p + (rng.randint(-5, 5) + rng.randint(-2, 2) * t3) * t1**e
    return p


class TestResultantProperties:
    """Test resultant identities on seeded random polynomials"""

    def test_multiplicative(self):
        """Test R(p q, r) = R(p, r) R(q, r)"""
        rng = random.Random(19)
        for _ in range(10):
            p, q, r = (_random_in_t1(rng, rng.randint(1, 3)) for _ in range(3))
            expected = sylvester_resultant(p, r, "t1") * sylvester_resultant(q, r, "t1")
            assert sylvester_resultant(p * q, r, "t1") == expected

    def test_antisymmetric(self):
        """Test R(p, q) = (-1)^(deg p deg q) R(q, p)"""
        rng = random.Random(23)
        for _ in range(10):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            p, q = _random_in_t1(rng, m), _random_in_t1(rng, n)
            assert sylvester_resultant(p, q, "t1") == (-1) ** (m * n) * sylvester_resultant(q, p, "t1")
