"""
Elimination toolkit

Univariate views of ring polynomials, Sylvester resultants by fraction-free
(Bareiss) elimination, rational functions compared by cross-multiplication,
exact roots of rational quadratics and Sturm-sequence sign certificates.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import factorint
from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from src.algebra.polyring import (
    R,
    Binding,
    MultiPoly,
    VarId,
    VarLike,
    as_poly,
    canonical,
    degree_in,
    exact_divide,
    evaluate,
    position_of,
    serialize,
    substitute,
    var_of,
    variables,
)
from src.arith.rational import RationalLike, format_rational, to_rational

logger = logging.getLogger(__name__)

# Univariate ring for Sturm chains
U, _x = ring("x", QQ)


@dataclass(frozen=True)
class UniPoly:
    """Polynomial in one ring variable with coefficients in the others"""

    var: VarId
    coeffs: Tuple[MultiPoly, ...]

    def __post_init__(self) -> None:
        if self.coeffs and not self.coeffs[-1]:
            raise ValueError("leading coefficient must be nonzero")

    @classmethod
    def from_poly(cls, p: MultiPoly, var: VarLike) -> "UniPoly":
        v = var_of(var)
        deg = degree_in(p, v)
        if deg < 0:
            return cls(v, ())
        return cls(v, tuple(p.coeff_wrt(v.position, k) for k in range(deg + 1)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> MultiPoly:
        if not self.coeffs:
            return R.zero
        return self.coeffs[-1]

    def to_poly(self) -> MultiPoly:
        x = self.var.gen
        out = R.zero
        for k, a in enumerate(self.coeffs):
            out = out + a * x**k
        return out


def sylvester_matrix(p: MultiPoly, q: MultiPoly, var: VarLike) -> List[List[MultiPoly]]:
    """
    Sylvester matrix: deg(q) shifted rows of p followed by deg(p) rows of q,
    coefficients from the highest power down

    Raises:
        ValueError: If either polynomial has degree 0 in var
    """
    up, uq = UniPoly.from_poly(p, var), UniPoly.from_poly(q, var)
    m, n = up.degree, uq.degree
    if m < 1 or n < 1:
        raise ValueError(
            f"resultant needs positive degree in {var_of(var).value}: got degrees {m} and {n}"
        )
    size = m + n
    rows: List[List[MultiPoly]] = []
    for shift in range(n):
        row = [R.zero] * size
        for k, a in enumerate(reversed(up.coeffs)):
            row[shift + k] = a
        rows.append(row)
    for shift in range(m):
        row = [R.zero] * size
        for k, a in enumerate(reversed(uq.coeffs)):
            row[shift + k] = a
        rows.append(row)
    return rows


def bareiss_determinant(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """
    Determinant over the polynomial ring by fraction-free elimination

    Raises:
        ValueError: If the matrix is not square
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    if n == 0:
        return R.one
    M = [list(row) for row in matrix]
    sign = 1
    prev = R.one
    for k in range(n - 1):
        if not M[k][k]:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return R.zero
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                elt = pivot * M[i][j] - M[i][k] * M[k][j]
                quotient = exact_divide(elt, prev)
                if quotient is None:
                    raise ArithmeticError("Bareiss step was not exact")
                M[i][j] = quotient
        prev = pivot
    det = M[n - 1][n - 1]
    return det if sign > 0 else -det


def sylvester_resultant(p: MultiPoly, q: MultiPoly, var: VarLike) -> MultiPoly:
    """Resultant of p and q with respect to var"""
    matrix = sylvester_matrix(p, q, var)
    logger.debug(f"Sylvester matrix {len(matrix)}x{len(matrix)} in {var_of(var).value}")
    return bareiss_determinant(matrix)


class RatFunc:
    """
    Quotient of two ring polynomials

    Normalized so the denominator's leading coefficient is 1; no polynomial
    GCD is taken, equality is by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Binding, den: Binding = 1) -> None:
        n, d = as_poly(num), as_poly(den)
        if not d:
            raise ZeroDivisionError("rational function with zero denominator")
        if not n:
            self.num, self.den = R.zero, R.one
            return
        lc = d.LC
        self.num = n.quo_ground(lc)
        self.den = d.quo_ground(lc)

    @classmethod
    def coerce(cls, value: Union["RatFunc", Binding]) -> "RatFunc":
        return value if isinstance(value, RatFunc) else cls(value)

    def __add__(self, other: Union["RatFunc", Binding]) -> "RatFunc":
        o = RatFunc.coerce(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: Union["RatFunc", Binding]) -> "RatFunc":
        return self + (-RatFunc.coerce(other))

    def __rsub__(self, other: Binding) -> "RatFunc":
        return RatFunc.coerce(other) - self

    def __mul__(self, other: Union["RatFunc", Binding]) -> "RatFunc":
        o = RatFunc.coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["RatFunc", Binding]) -> "RatFunc":
        o = RatFunc.coerce(other)
        if not o.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: Binding) -> "RatFunc":
        return RatFunc.coerce(other) / self

    def __pow__(self, exponent: int) -> "RatFunc":
        if exponent < 0:
            return RatFunc(self.den**-exponent, self.num**-exponent)
        return RatFunc(self.num**exponent, self.den**exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (RatFunc, PolyElement, int, Fraction)):
            return ratfunc_equal(self, RatFunc.coerce(other))
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"RatFunc(({serialize(self.num)}) / ({serialize(self.den)}))"

    def is_polynomial(self) -> bool:
        return self.den.is_ground

    def substitute(self, bindings: Mapping[VarLike, Union["RatFunc", Binding]]) -> "RatFunc":
        """
        Substitute polynomials or rational functions for variables

        Raises:
            ValueError: If a value mentions a bound variable
        """
        polys: Dict[VarLike, Binding] = {}
        fractions: Dict[VarLike, RatFunc] = {}
        bound = {position_of(k) for k in bindings}
        for key, value in bindings.items():
            rf = RatFunc.coerce(value)
            for var in variables(rf.num) | variables(rf.den):
                if var.position in bound:
                    raise ValueError(
                        f"recursive binding: value for {var_of(key).value} mentions {var.value}"
                    )
            if rf.is_polynomial():
                polys[key] = rf.num.quo_ground(rf.den.LC)
            else:
                fractions[key] = rf
        result = RatFunc(substitute(self.num, polys), substitute(self.den, polys))
        for key, value in fractions.items():
            result = _substitute_fraction(result, key, value)
        return result

    def evaluate(self, values: Mapping[VarLike, object], convert=float):
        return evaluate(self.num, values, convert) / evaluate(self.den, values, convert)


def _homogenize(p: MultiPoly, var: VarLike, value: RatFunc) -> Tuple[MultiPoly, int]:
    # p(var = N/D) = sum c_k N^k D^(d-k) / D^d
    uni = UniPoly.from_poly(p, var)
    d = uni.degree
    if d <= 0:
        return p, 0
    n_pows = [R.one]
    d_pows = [R.one]
    for _ in range(d):
        n_pows.append(n_pows[-1] * value.num)
        d_pows.append(d_pows[-1] * value.den)
    out = R.zero
    for k, ck in enumerate(uni.coeffs):
        if ck:
            out = out + ck * n_pows[k] * d_pows[d - k]
    return out, d


def _substitute_fraction(f: RatFunc, var: VarLike, value: RatFunc) -> RatFunc:
    num, dn = _homogenize(f.num, var, value)
    den, dd = _homogenize(f.den, var, value)
    if dn >= dd:
        return RatFunc(num, den * value.den ** (dn - dd))
    return RatFunc(num * value.den ** (dd - dn), den)


def cross_difference(a: RatFunc, b: RatFunc) -> MultiPoly:
    """a.num * b.den - b.num * a.den"""
    return a.num * b.den - b.num * a.den


def ratfunc_equal(a: RatFunc, b: RatFunc) -> bool:
    """Exact equality by cross-multiplication"""
    return not cross_difference(a, b)


def ratfunc_equal_mod(a: RatFunc, b: RatFunc) -> bool:
    """Equality modulo S_i = s_i^2, C_i = c_i^2 and s_i^2 + c_i^2 = 1"""
    return not canonical(cross_difference(a, b))


def solve_linear(p: MultiPoly, var: VarLike) -> RatFunc:
    """
    Solve p = 0 for var when p is linear in var

    Raises:
        ValueError: If p does not have degree exactly 1 in var
    """
    uni = UniPoly.from_poly(p, var)
    if uni.degree != 1:
        raise ValueError(f"expected degree 1 in {var_of(var).value}, got {uni.degree}")
    c0, c1 = uni.coeffs
    return RatFunc(-c0, c1)


def square_free_split(n: int) -> Tuple[int, int]:
    """n = k^2 * d with d square-free; returns (k, d)"""
    if n <= 0:
        raise ValueError("square-free split needs a positive integer")
    k, d = 1, 1
    for prime, e in factorint(n).items():
        k *= prime ** (e // 2)
        if e % 2:
            d *= prime
    return k, d


class QuadExt:
    """
    Element a + b*sqrt(d) of Q(sqrt d), d a square-free positive integer

    ``p``, ``q``, ``r`` give the equivalent (p + q*sqrt(d)) / r form with
    integer p, q and r > 0.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a: RationalLike, b: RationalLike = 0, d: int = 1) -> None:
        if d <= 0:
            raise ValueError("d must be positive")
        k, sf = square_free_split(d)
        self.a = to_rational(a)
        self.b = to_rational(b) * k
        self.d = sf
        if self.d == 1:
            self.a, self.b = self.a + self.b, Fraction(0)

    @property
    def r(self) -> int:
        return lcm(self.a.denominator, self.b.denominator)

    @property
    def p(self) -> int:
        return int(self.a * self.r)

    @property
    def q(self) -> int:
        return int(self.b * self.r)

    def _coerce(self, other: Union["QuadExt", RationalLike]) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.d != self.d and other.b and self.b:
                raise ValueError(f"mixing sqrt({self.d}) and sqrt({other.d})")
            return other
        return QuadExt(other, 0, self.d)

    def _field(self, other: "QuadExt") -> int:
        return self.d if self.b else other.d

    def __add__(self, other: Union["QuadExt", RationalLike]) -> "QuadExt":
        o = self._coerce(other)
        return QuadExt(self.a + o.a, self.b + o.b, self._field(o))

    __radd__ = __add__

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other: Union["QuadExt", RationalLike]) -> "QuadExt":
        return self + (-self._coerce(other))

    def __rsub__(self, other: RationalLike) -> "QuadExt":
        return self._coerce(other) - self

    def __mul__(self, other: Union["QuadExt", RationalLike]) -> "QuadExt":
        o = self._coerce(other)
        d = self._field(o)
        return QuadExt(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def __truediv__(self, other: Union["QuadExt", RationalLike]) -> "QuadExt":
        o = self._coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        top = self * o.conjugate()
        return QuadExt(top.a / n, top.b / n, top.d)

    def __pow__(self, exponent: int) -> "QuadExt":
        out = QuadExt(1, 0, self.d)
        for _ in range(exponent):
            out = out * self
        return out

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d)"""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        return sa if self.a * self.a > self.b * self.b * self.d else sb

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QuadExt(other)
        if not isinstance(other, QuadExt):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * self.d**0.5

    def __repr__(self) -> str:
        return f"QuadExt({self})"

    def __str__(self) -> str:
        if not self.b:
            return format_rational(self.a)
        return f"{format_rational(self.a)} + {format_rational(self.b)}*sqrt({self.d})"


def quad_roots(a: RationalLike, b: RationalLike, c: RationalLike) -> List[QuadExt]:
    """
    Exact real roots of a*t^2 + b*t + c, larger-sqrt branch first

    Raises:
        ValueError: If a is zero
    """
    A, B, Cc = to_rational(a), to_rational(b), to_rational(c)
    if A == 0:
        raise ValueError("leading coefficient must be nonzero")
    disc = B * B - 4 * A * Cc
    if disc < 0:
        return []
    if disc == 0:
        return [QuadExt(-B / (2 * A))]
    k, d = square_free_split(disc.numerator * disc.denominator)
    half = Fraction(k, disc.denominator) / (2 * A)
    base = -B / (2 * A)
    roots = [QuadExt(base, half, d), QuadExt(base, -half, d)]
    return roots


def eval_quadratic(a: RationalLike, b: RationalLike, c: RationalLike, x: QuadExt) -> QuadExt:
    return x * x * to_rational(a) + x * to_rational(b) + to_rational(c)


class SignVerdict(str, Enum):
    """Outcome of a sign certificate"""

    POSITIVE = "positive"
    NEGATIVE = "negative"
    HAS_ROOT = "has_root"


Bound = Optional[RationalLike]


def to_univariate(p: Union[MultiPoly, Sequence[RationalLike]]) -> PolyElement:
    """
    Univariate QQ[x] image of a one-variable ring polynomial or of a
    coefficient list (constant term first)

    Raises:
        ValueError: If p involves more than one variable
    """
    if isinstance(p, PolyElement):
        if p.ring == U:
            return p
        present = variables(p)
        if len(present) > 1:
            raise ValueError(f"expected a univariate polynomial, found {sorted(v.value for v in present)}")
        if not present:
            return U.ground_new(p.const())
        (v,) = present
        pos = v.position
        return U.from_dict({(monom[pos],): coeff for monom, coeff in p.iterterms()})
    out = U.zero
    for k, a in enumerate(p):
        q = to_rational(a)
        out = out + U.ground_new(QQ(q.numerator, q.denominator)) * _x**k
    return out


def _value(f: PolyElement, point: Fraction):
    return f.evaluate(_x, QQ(point.numerator, point.denominator))


def _sign_at_infinity(f: PolyElement, negative: bool) -> int:
    lc = f.LC
    sign = 1 if lc > 0 else -1
    if negative and f.degree() % 2:
        sign = -sign
    return sign


def _sign_variations(chain: Sequence[PolyElement], point: Optional[Fraction], negative: bool) -> int:
    if point is None:
        signs = [_sign_at_infinity(f, negative) for f in chain if f]
    else:
        values = [_value(f, point) for f in chain]
        signs = [1 if v > 0 else -1 for v in values if v]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_root_count(p: Union[MultiPoly, Sequence[RationalLike]], lo: Bound = None, hi: Bound = None) -> int:
    """
    Number of distinct real roots in (lo, hi]; None bounds are infinite

    Raises:
        ValueError: For the zero polynomial or lo > hi
    """
    f = to_univariate(p)
    if not f:
        raise ValueError("zero polynomial has no sign")
    a = None if lo is None else to_rational(lo)
    b = None if hi is None else to_rational(hi)
    if a is not None and b is not None and a > b:
        raise ValueError(f"empty interval [{a}, {b}]")
    if f.is_ground:
        return 0
    chain = f.sturm()
    return _sign_variations(chain, a, True) - _sign_variations(chain, b, False)


def sturm_sign_certificate(
    p: Union[MultiPoly, Sequence[RationalLike]], lo: Bound = None, hi: Bound = None
) -> SignVerdict:
    """
    Certified sign of p on [lo, hi] (None bounds are infinite)

    A root at a finite endpoint or a positive Sturm count yields HAS_ROOT;
    otherwise p has constant sign, read off one sample point.
    """
    f = to_univariate(p)
    if not f:
        raise ValueError("zero polynomial has no sign")
    a = None if lo is None else to_rational(lo)
    b = None if hi is None else to_rational(hi)
    for endpoint in (a, b):
        if endpoint is not None and not f.is_ground and _value(f, endpoint) == 0:
            return SignVerdict.HAS_ROOT
    if sturm_root_count(f, a, b) > 0:
        return SignVerdict.HAS_ROOT
    if a is not None and b is not None:
        sample = (a + b) / 2
    elif a is not None:
        sample = a + 1
    elif b is not None:
        sample = b - 1
    else:
        sample = Fraction(0)
    value = f.LC if f.is_ground else _value(f, sample)
    verdict = SignVerdict.POSITIVE if value > 0 else SignVerdict.NEGATIVE
    logger.debug(f"sign certificate on [{a}, {b}]: {verdict.value} (sample {sample})")
    return verdict
