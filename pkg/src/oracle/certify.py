"""
Rigorous rational enclosures of sin^2(p*pi/q)

pi is bracketed by mpmath's interval context (outward rounded endpoints
converted exactly to rationals); sine is bounded by its Taylor polynomial
plus the Lagrange remainder, all in Fraction arithmetic.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Tuple

from mpmath.ctx_iv import MPIntervalContext
from mpmath.libmp import to_rational as mpf_to_rational

from src.arith.rational import RationalLike, format_rational, to_rational

logger = logging.getLogger(__name__)

# Guard bits added to the requested width
GUARD_BITS = 8


@dataclass(frozen=True)
class PrecisionInterval:
    """Closed rational interval [lo, hi]"""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, value: RationalLike) -> bool:
        q = to_rational(value)
        return self.lo <= q <= self.hi

    def excludes(self, value: RationalLike) -> bool:
        return not self.contains(value)

    def to_dict(self) -> dict:
        return {"lo": format_rational(self.lo), "hi": format_rational(self.hi)}


@lru_cache(maxsize=16)
def pi_enclosure(bits: int) -> Tuple[Fraction, Fraction]:
    """Rationals lo < pi < hi from a bits-precision interval"""
    ctx = MPIntervalContext()
    ctx.prec = bits
    lo_raw, hi_raw = ctx.pi._mpi_
    lo = Fraction(*mpf_to_rational(lo_raw))
    hi = Fraction(*mpf_to_rational(hi_raw))
    return lo, hi


def _sin_taylor_bounds(x: Fraction, bits: int) -> Tuple[Fraction, Fraction]:
    # x in [0, 2]; stop once the remainder bound is below 2^-bits
    tol = Fraction(1, 2**bits)
    total = Fraction(0)
    term = x
    n = 1
    while True:
        total += term
        remainder = x ** (n + 2) / factorial(n + 2)
        if remainder < tol:
            return total - remainder, total + remainder
        term = -term * x * x / ((n + 1) * (n + 2))
        n += 2


def certified_sin_sq(p: int, q: int, precision: int = 128) -> PrecisionInterval:
    """
    Enclosure of sin^2(p*pi/q) of width at most 2^-precision

    Raises:
        ValueError: If q is zero or precision is not positive
    """
    if q == 0:
        raise ValueError("q must be nonzero")
    if precision < 1:
        raise ValueError("precision must be positive")
    if q < 0:
        p, q = -p, -q
    # sin^2 has period pi and is symmetric about pi/2
    r = p % q
    if 2 * r > q:
        r = q - r
    if r == 0:
        return PrecisionInterval(Fraction(0), Fraction(0))
    if 2 * r == q:
        return PrecisionInterval(Fraction(1), Fraction(1))

    bits = precision + GUARD_BITS
    pi_lo, pi_hi = pi_enclosure(bits + q.bit_length() + 2)
    theta_lo = pi_lo * r / q
    theta_hi = pi_hi * r / q
    # 0 < theta < pi/2 where sine is increasing and positive
    sin_lo, _ = _sin_taylor_bounds(theta_lo, bits + 2)
    _, sin_hi = _sin_taylor_bounds(theta_hi, bits + 2)
    sin_lo = max(sin_lo, Fraction(0))
    sin_hi = min(sin_hi, Fraction(1))
    interval = PrecisionInterval(sin_lo * sin_lo, sin_hi * sin_hi)
    logger.debug(
        f"sin^2({p}pi/{q}) in [{float(interval.lo)}, {float(interval.hi)}], "
        f"width {float(interval.width):.3e}"
    )
    if interval.width > Fraction(1, 2**precision):
        raise ArithmeticError(f"enclosure of sin^2({p}pi/{q}) wider than 2^-{precision}")
    return interval


def certify_exclusion(p: int, q: int, value: RationalLike, precision: int = 128) -> Tuple[bool, PrecisionInterval]:
    """(sin^2(p*pi/q) != value is certified, enclosure used)"""
    interval = certified_sin_sq(p, q, precision)
    return interval.excludes(value), interval
