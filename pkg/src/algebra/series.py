"""
Truncated bivariate Taylor series in (alpha, beta)

A ``TruncSeries`` holds the coefficients of alpha^i beta^j for i + j <= N as
ring polynomials in the t/s/c variables. ``sin_of`` and ``cos_of`` expand
sin/cos of a phased linear argument

    u*alpha + v*beta + k0*pi + sum(m_i * t_i * pi)

by the addition formula: the phase goes through ``chebyshev_phase`` into
s_i, c_i and the linear part is a plain Taylor series.
"""

import logging
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from src.algebra.polyring import (
    R,
    Binding,
    MultiPoly,
    as_poly,
    chebyshev_phase,
    evaluate,
    rat,
    serialize,
    variables,
)

logger = logging.getLogger(__name__)

Index = Tuple[int, int]


def _check_linear_coefficient(name: str, p: MultiPoly) -> None:
    if not p:
        return
    for var in variables(p):
        if var.family != "t":
            raise ValueError(f"{name} may only involve the t_i, found {var.value}")
    if max(sum(monom) for monom in p.itermonoms()) > 1:
        raise ValueError(f"{name} must have degree <= 1 in the t_i")


@dataclass(frozen=True)
class PhasedLinearArg:
    """
    u*alpha + v*beta + k0*pi + sum(m[i-1] * t_i * pi)

    u and v are polynomials of degree <= 1 in the t_i (plain rationals are
    accepted and promoted).
    """

    u: MultiPoly = field(default_factory=lambda: R.zero)
    v: MultiPoly = field(default_factory=lambda: R.zero)
    k0: int = 0
    m: Tuple[int, int, int, int, int, int] = (0, 0, 0, 0, 0, 0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", as_poly(self.u))
        object.__setattr__(self, "v", as_poly(self.v))
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        if len(self.m) != 6:
            raise ValueError("m must have six entries")
        _check_linear_coefficient("u", self.u)
        _check_linear_coefficient("v", self.v)

    def __neg__(self) -> "PhasedLinearArg":
        return PhasedLinearArg(-self.u, -self.v, -self.k0, tuple(-x for x in self.m))

    def relabel(self, mapping: Callable[[MultiPoly], MultiPoly], index_map: Mapping[int, int]) -> "PhasedLinearArg":
        """Image under a subscript map (non-injective maps merge phases)"""
        m = [0] * 6
        for i, mi in enumerate(self.m, start=1):
            m[index_map.get(i, i) - 1] += mi
        return PhasedLinearArg(mapping(self.u), mapping(self.v), self.k0, tuple(m))

    def describe(self) -> str:
        parts = []
        if self.u:
            parts.append(f"({serialize(self.u)})*alpha")
        if self.v:
            parts.append(f"({serialize(self.v)})*beta")
        if self.k0:
            parts.append(f"{self.k0}*pi")
        parts.extend(f"{mi}*t{i}*pi" for i, mi in enumerate(self.m, start=1) if mi)
        return " + ".join(parts) if parts else "0"


class TruncSeries:
    """Power series in alpha, beta truncated above total degree N"""

    __slots__ = ("N", "_coeffs")

    def __init__(self, N: int, coeffs: Optional[Mapping[Index, MultiPoly]] = None) -> None:
        if N < 0:
            raise ValueError(f"truncation degree must be non-negative, got {N}")
        self.N = N
        self._coeffs: Dict[Index, MultiPoly] = {}
        for (i, j), p in (coeffs or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            if i + j <= N and p:
                self._coeffs[(i, j)] = p

    @classmethod
    def zero(cls, N: int) -> "TruncSeries":
        return cls(N)

    @classmethod
    def constant(cls, value: Binding, N: int) -> "TruncSeries":
        return cls(N, {(0, 0): as_poly(value)})

    @classmethod
    def one(cls, N: int) -> "TruncSeries":
        return cls.constant(1, N)

    @classmethod
    def alpha(cls, N: int) -> "TruncSeries":
        return cls(N, {(1, 0): R.one})

    @classmethod
    def beta(cls, N: int) -> "TruncSeries":
        return cls(N, {(0, 1): R.one})

    def items(self) -> Iterator[Tuple[Index, MultiPoly]]:
        return iter(sorted(self._coeffs.items()))

    def __len__(self) -> int:
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.N == other.N and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        return f"TruncSeries(N={self.N}, terms={len(self._coeffs)})"

    def _check_same_degree(self, other: "TruncSeries") -> None:
        if self.N != other.N:
            raise ValueError(f"truncation degrees differ: {self.N} != {other.N}")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check_same_degree(other)
        out = dict(self._coeffs)
        for key, p in other._coeffs.items():
            out[key] = out.get(key, R.zero) + p
        return TruncSeries(self.N, out)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(self.N, {k: -p for k, p in self._coeffs.items()})

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def __mul__(self, other: Union["TruncSeries", MultiPoly, int]) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        self._check_same_degree(other)
        return self.mul_trunc(other, self.N)

    def mul_trunc(self, other: "TruncSeries", N: int) -> "TruncSeries":
        """
        Product truncated at N, without the equal-degree check

        Only meaningful when neither operand is missing terms that could
        reach total degree N; ``series_product`` guarantees this through the
        valuation bound.
        """
        out: Dict[Index, MultiPoly] = {}
        right = sorted(other._coeffs.items(), key=lambda kv: kv[0][0] + kv[0][1])
        for (i1, j1), a in self._coeffs.items():
            budget = N - i1 - j1
            if budget < 0:
                continue
            for (i2, j2), b in right:
                if i2 + j2 > budget:
                    break
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, R.zero) + a * b
        return TruncSeries(N, out)

    def scale(self, factor: Union[MultiPoly, int]) -> "TruncSeries":
        f = as_poly(factor)
        return TruncSeries(self.N, {k: f * p for k, p in self._coeffs.items()})

    def coeff(self, i: int, j: int) -> MultiPoly:
        """
        Coefficient of alpha^i beta^j

        Raises:
            ValueError: If (i, j) lies outside the truncation range
        """
        if i < 0 or j < 0 or i + j > self.N:
            raise ValueError(f"coefficient ({i}, {j}) outside truncation degree {self.N}")
        return self._coeffs.get((i, j), R.zero)

    def homogeneous_part(self, d: int) -> "TruncSeries":
        """Series with exactly the total-degree-d terms"""
        if d < 0 or d > self.N:
            raise ValueError(f"degree {d} outside 0..{self.N}")
        return TruncSeries(self.N, {k: p for k, p in self._coeffs.items() if sum(k) == d})

    def homogeneous_coeffs(self, d: int) -> List[MultiPoly]:
        """[coeff(d, 0), coeff(d-1, 1), ..., coeff(0, d)]"""
        return [self.coeff(d - j, j) for j in range(d + 1)]

    def valuation(self) -> int:
        """Lowest total degree present; N + 1 for the zero series"""
        if not self._coeffs:
            return self.N + 1
        return min(i + j for i, j in self._coeffs)

    def truncate(self, N: int) -> "TruncSeries":
        if N > self.N:
            raise ValueError(f"cannot raise truncation degree {self.N} to {N}")
        return TruncSeries(N, self._coeffs)

    def map_coeffs(self, fn: Callable[[MultiPoly], MultiPoly]) -> "TruncSeries":
        return TruncSeries(self.N, {k: fn(p) for k, p in self._coeffs.items()})

    def evaluate(self, alpha: float, beta: float, values: Mapping[str, float]) -> float:
        """Numeric value of the truncated polynomial"""
        total = 0.0
        for (i, j), p in self._coeffs.items():
            total += evaluate(p, values) * alpha**i * beta**j
        return total


def _poly_powers(p: MultiPoly, n: int) -> List[MultiPoly]:
    powers = [R.one]
    for _ in range(n):
        powers.append(powers[-1] * p)
    return powers


def _linear_parts(u: MultiPoly, v: MultiPoly, N: int) -> Tuple[TruncSeries, TruncSeries]:
    # sin/cos of u*alpha + v*beta: coefficient of alpha^i beta^j is
    # +-u^i v^j / (i! j!) with the sign of the (i+j)-th Taylor term
    up, vp = _poly_powers(u, N), _poly_powers(v, N)
    sin_terms: Dict[Index, MultiPoly] = {}
    cos_terms: Dict[Index, MultiPoly] = {}
    for n in range(N + 1):
        sign = -1 if (n // 2) % 2 else 1
        target = sin_terms if n % 2 else cos_terms
        for i in range(n + 1):
            j = n - i
            term = up[i] * vp[j]
            if term:
                target[(i, j)] = term * rat(sign, factorial(i) * factorial(j))
    return TruncSeries(N, sin_terms), TruncSeries(N, cos_terms)


def phase_sin_cos(k0: int, m: Sequence[int]) -> Tuple[MultiPoly, MultiPoly]:
    """(sin, cos) of k0*pi + sum(m_i t_i pi) as polynomials in s_i, c_i"""
    sin_p, cos_p = R.zero, R.one if k0 % 2 == 0 else -R.one
    for i, mi in enumerate(m, start=1):
        if not mi:
            continue
        sb, cb = chebyshev_phase("sin", mi, i), chebyshev_phase("cos", mi, i)
        sin_p, cos_p = sin_p * cb + cos_p * sb, cos_p * cb - sin_p * sb
    return sin_p, cos_p


def sin_of(arg: PhasedLinearArg, N: int) -> TruncSeries:
    """Taylor series of sin(arg) to total degree N"""
    sin_l, cos_l = _linear_parts(arg.u, arg.v, N)
    sin_p, cos_p = phase_sin_cos(arg.k0, arg.m)
    return sin_l.scale(cos_p) + cos_l.scale(sin_p)


def cos_of(arg: PhasedLinearArg, N: int) -> TruncSeries:
    """Taylor series of cos(arg) to total degree N"""
    sin_l, cos_l = _linear_parts(arg.u, arg.v, N)
    sin_p, cos_p = phase_sin_cos(arg.k0, arg.m)
    return cos_l.scale(cos_p) - sin_l.scale(sin_p)


def series_arith(a: TruncSeries, b: TruncSeries, op: str) -> TruncSeries:
    """
    Truncated ring operation

    Raises:
        ValueError: Unknown operation or mismatched truncation degrees
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"Unsupported operation: {op}")


def series_product(factors: Sequence[TruncSeries], N: int) -> TruncSeries:
    """
    Product of series truncated at N

    Factors with positive valuation are multiplied first; their combined
    valuation v bounds how much of the remaining factors can contribute, so
    those are truncated at N - v before multiplying.
    """
    light = [f for f in factors if f.valuation() >= 1]
    heavy = [f for f in factors if f.valuation() < 1]
    low = TruncSeries.one(N)
    for f in light:
        low = low.mul_trunc(f, N)
    v = low.valuation()
    if v > N:
        return TruncSeries.zero(N)
    rest = TruncSeries.one(N - v)
    for f in heavy:
        rest = rest.mul_trunc(f.truncate(N - v), N - v)
    logger.debug(f"series product: {len(light)} light, {len(heavy)} heavy, valuation {v}")
    return low.mul_trunc(rest, N)
