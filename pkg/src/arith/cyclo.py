"""
Exact arithmetic in the cyclotomic field Q(zeta_12)

An element is a0 + a1*z + a2*z^2 + a3*z^3 with z a primitive 12th root of
unity, kept reduced modulo the cyclotomic polynomial z^4 - z^2 + 1. Both
i = z^3 and sqrt(3) = z + z^-1 live here, so every sine and cosine of a
multiple of pi/6 is an exact field element.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from src.arith.rational import RationalLike, to_rational

ZETA = cmath.exp(1j * cmath.pi / 6)

Scalar = Union[int, Fraction]


def _reduce(coeffs: List[Fraction]) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    # z^d = z^(d-2) - z^(d-4) for d >= 4
    work = list(coeffs)
    for d in range(len(work) - 1, 3, -1):
        c = work[d]
        if c:
            work[d - 2] += c
            work[d - 4] -= c
        work[d] = Fraction(0)
    work += [Fraction(0)] * (4 - len(work))
    return work[0], work[1], work[2], work[3]


class CycloNum:
    """Element of Q(zeta_12) in the power basis 1, z, z^2, z^3"""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[RationalLike] = ()) -> None:
        if len(coeffs) > 4:
            self._coeffs = _reduce([to_rational(c) for c in coeffs])
        else:
            padded = [to_rational(c) for c in coeffs] + [Fraction(0)] * (4 - len(coeffs))
            self._coeffs = (padded[0], padded[1], padded[2], padded[3])

    @property
    def coeffs(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return self._coeffs

    @classmethod
    def from_rational(cls, value: RationalLike) -> CycloNum:
        return cls((value,))

    @classmethod
    def zeta_power(cls, k: int) -> CycloNum:
        """z^k for any integer k (z^12 = 1)"""
        k %= 12
        if k >= 6:
            return -cls.zeta_power(k - 6)
        if k < 4:
            basis = [0, 0, 0, 0]
            basis[k] = 1
            return cls(basis)
        return cls([0] * k + [1])

    @classmethod
    def zero(cls) -> CycloNum:
        return cls()

    @classmethod
    def one(cls) -> CycloNum:
        return cls((1,))

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def is_rational(self) -> bool:
        return not any(self._coeffs[1:])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycloNum.from_rational(other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __repr__(self) -> str:
        return f"CycloNum({', '.join(str(c) for c in self._coeffs)})"

    def __str__(self) -> str:
        parts = []
        for power, c in enumerate(self._coeffs):
            if c:
                parts.append(f"{c}" if power == 0 else f"({c})*z^{power}")
        return " + ".join(parts) if parts else "0"

    def _coerce(self, other: Union[CycloNum, Scalar]) -> CycloNum:
        if isinstance(other, CycloNum):
            return other
        return CycloNum.from_rational(other)

    def __add__(self, other: Union[CycloNum, Scalar]) -> CycloNum:
        rhs = self._coerce(other)
        return CycloNum([a + b for a, b in zip(self._coeffs, rhs._coeffs)])

    __radd__ = __add__

    def __neg__(self) -> CycloNum:
        return CycloNum([-a for a in self._coeffs])

    def __sub__(self, other: Union[CycloNum, Scalar]) -> CycloNum:
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> CycloNum:
        return self._coerce(other) - self

    def __mul__(self, other: Union[CycloNum, Scalar]) -> CycloNum:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        rhs = self._coerce(other)
        product = [Fraction(0)] * 7
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in enumerate(rhs._coeffs):
                if b:
                    product[i + j] += a * b
        return CycloNum(product)

    __rmul__ = __mul__

    def scale(self, factor: RationalLike) -> CycloNum:
        q = to_rational(factor)
        return CycloNum([q * a for a in self._coeffs])

    def __pow__(self, exponent: int) -> CycloNum:
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        result = CycloNum.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> CycloNum:
        """Complex conjugation z -> z^-1 = z^11"""
        result = CycloNum.zero()
        for power, c in enumerate(self._coeffs):
            if c:
                result = result + CycloNum.zeta_power(-power).scale(c)
        return result

    def to_complex(self) -> complex:
        return sum(float(c) * ZETA**power for power, c in enumerate(self._coeffs))


def cyclo_sum(values: Iterable[CycloNum]) -> CycloNum:
    total = CycloNum.zero()
    for value in values:
        total = total + value
    return total


def cyclo_arith(a: CycloNum, b: CycloNum, op: str) -> CycloNum:
    """
    Field operation on two CycloNums

    Args:
        a: Left operand
        b: Right operand
        op: ``add`` or ``mul``

    Returns:
        Reduced result

    Raises:
        ValueError: Unknown operation
    """
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    raise ValueError(f"Unsupported operation: {op}")


_HALF = Fraction(1, 2)


def cyclo_from_trig(kind: str, k: int) -> CycloNum:
    """
    sin(k*pi/6) or cos(k*pi/6) as an exact field element

    cos = (z^k + z^-k)/2 and sin = (z^k - z^-k)/(2i) with 1/i = -z^3.

    Raises:
        ValueError: Unknown kind
    """
    if kind == "cos":
        return (CycloNum.zeta_power(k) + CycloNum.zeta_power(-k)).scale(_HALF)
    if kind == "sin":
        diff = CycloNum.zeta_power(k) - CycloNum.zeta_power(-k)
        return (diff * CycloNum.zeta_power(3)).scale(-_HALF)
    raise ValueError(f"kind must be 'sin' or 'cos', got {kind!r}")
