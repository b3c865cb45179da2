"""
Exact trigonometric identity checking over Q(zeta_12)

Products of sin/cos(a*x + b*y + k*pi/6) are compiled into Laurent
polynomials in z = e^(ix), w = e^(iy) with CycloNum coefficients. A
trigonometric polynomial vanishes identically iff every Laurent
coefficient is zero, so the check has no tolerance.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple, Union

from src.arith.cyclo import CycloNum
from src.arith.rational import RationalLike, format_rational, to_rational

logger = logging.getLogger(__name__)

Exponent = Tuple[int, int]

_HALF = Fraction(1, 2)


class LaurentPoly2:
    """Finite sum of coeff * z^a * w^b with a, b any integers"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Dict[Exponent, CycloNum]] = None) -> None:
        self._terms: Dict[Exponent, CycloNum] = {
            key: value for key, value in (terms or {}).items() if not value.is_zero()
        }

    @classmethod
    def constant(cls, value: Union[CycloNum, RationalLike]) -> "LaurentPoly2":
        if not isinstance(value, CycloNum):
            value = CycloNum.from_rational(value)
        return cls({(0, 0): value})

    @classmethod
    def one(cls) -> "LaurentPoly2":
        return cls.constant(1)

    def terms(self) -> Iterator[Tuple[Exponent, CycloNum]]:
        return iter(sorted(self._terms.items()))

    def coefficient(self, a: int, b: int) -> CycloNum:
        return self._terms.get((a, b), CycloNum.zero())

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        out = dict(self._terms)
        for key, value in other._terms.items():
            out[key] = out[key] + value if key in out else value
        return LaurentPoly2(out)

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({key: -value for key, value in self._terms.items()})

    def __sub__(self, other: "LaurentPoly2") -> "LaurentPoly2":
        return self + (-other)

    def __mul__(self, other: Union["LaurentPoly2", RationalLike]) -> "LaurentPoly2":
        if not isinstance(other, LaurentPoly2):
            return self.scale(other)
        out: Dict[Exponent, CycloNum] = {}
        for (a1, b1), u in self._terms.items():
            for (a2, b2), v in other._terms.items():
                key = (a1 + a2, b1 + b2)
                product = u * v
                out[key] = out[key] + product if key in out else product
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def scale(self, factor: RationalLike) -> "LaurentPoly2":
        q = to_rational(factor)
        return LaurentPoly2({key: value.scale(q) for key, value in self._terms.items()})

    def __pow__(self, exponent: int) -> "LaurentPoly2":
        if exponent < 0:
            raise ValueError("negative powers are not supported")
        result = LaurentPoly2.one()
        for _ in range(exponent):
            result = result * self
        return result

    def at_unity(self) -> CycloNum:
        """Value at z = w = 1, i.e. x = y = 0"""
        total = CycloNum.zero()
        for value in self._terms.values():
            total = total + value
        return total

    def evaluate(self, x: float, y: float) -> complex:
        total = 0j
        for (a, b), value in self._terms.items():
            total += value.to_complex() * cmath.exp(1j * (a * x + b * y))
        return total

    def __repr__(self) -> str:
        return f"LaurentPoly2(terms={len(self._terms)})"


@dataclass(frozen=True)
class TrigAtom:
    """sin or cos of a*x + b*y + k*pi/6"""

    kind: str
    a: int = 0
    b: int = 0
    k: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("sin", "cos"):
            raise ValueError(f"kind must be 'sin' or 'cos', got {self.kind!r}")

    def value(self, x: float, y: float) -> float:
        theta = self.a * x + self.b * y + self.k * math.pi / 6
        return math.sin(theta) if self.kind == "sin" else math.cos(theta)

    def describe(self) -> str:
        parts = []
        for coeff, name in ((self.a, "x"), (self.b, "y")):
            if coeff:
                parts.append(name if coeff == 1 else f"{coeff}{name}")
        if self.k:
            parts.insert(0, "pi/6" if self.k == 1 else f"{self.k}pi/6")
        return f"{self.kind}({' + '.join(parts) if parts else '0'})"


def compile(atom: TrigAtom) -> LaurentPoly2:  # noqa: A001
    """
    Laurent image of one atom

    With Z = zeta^k z^a w^b: cos = (Z + 1/Z)/2 and sin = (Z - 1/Z)/(2i),
    where i = zeta^3.
    """
    plus, minus = (atom.a, atom.b), (-atom.a, -atom.b)
    if atom.kind == "cos":
        forward = CycloNum.zeta_power(atom.k).scale(_HALF)
        backward = CycloNum.zeta_power(-atom.k).scale(_HALF)
    else:
        forward = CycloNum.zeta_power(atom.k + 3).scale(-_HALF)
        backward = CycloNum.zeta_power(3 - atom.k).scale(_HALF)
    if plus == minus:
        return LaurentPoly2({plus: forward + backward})
    return LaurentPoly2({plus: forward, minus: backward})


@dataclass(frozen=True)
class TrigMonomial:
    """coefficient * product of atom^power"""

    coefficient: Fraction
    factors: Tuple[Tuple[TrigAtom, int], ...]

    def compile(self) -> LaurentPoly2:
        out = LaurentPoly2.constant(self.coefficient)
        for atom, power in self.factors:
            out = out * compile(atom) ** power
        return out

    def value(self, x: float, y: float) -> float:
        out = float(self.coefficient)
        for atom, power in self.factors:
            out *= atom.value(x, y) ** power
        return out

    def negated(self) -> "TrigMonomial":
        return TrigMonomial(-self.coefficient, self.factors)

    def describe(self) -> str:
        body = "*".join(
            atom.describe() if power == 1 else f"{atom.describe()}^{power}"
            for atom, power in self.factors
        )
        return f"({format_rational(self.coefficient)})*{body}"


def _m(coefficient: int, *factors: Tuple[TrigAtom, int]) -> TrigMonomial:
    return TrigMonomial(Fraction(coefficient), tuple(factors))


_sin_x = TrigAtom("sin", 1, 0)
_sin_y = TrigAtom("sin", 0, 1)
_cos_y = TrigAtom("cos", 0, 1)
_sin_3x = TrigAtom("sin", 3, 0)
_sin_3y = TrigAtom("sin", 0, 3)
_sin_xy = TrigAtom("sin", 1, 1)
_sin_3xy = TrigAtom("sin", 3, 3)
_cos_px = TrigAtom("cos", 1, 0, 1)
_cos_py = TrigAtom("cos", 0, 1, 1)
_cos_pxy = TrigAtom("cos", 1, 1, 1)
_sin_pxy = TrigAtom("sin", 1, 1, 1)

# A(3x, 3y) at t1 = ... = t6 = 1/3
MORLEY_SUMMANDS: Tuple[TrigMonomial, ...] = (
    _m(1, (_sin_x, 2), (_sin_3xy, 2), (_cos_px, 2), (_cos_py, 2)),
    _m(1, (_sin_3x, 2), (_cos_pxy, 2), (_sin_xy, 2), (_cos_py, 2)),
    _m(
        -2,
        (_sin_x, 1),
        (_sin_3x, 1),
        (_cos_pxy, 1),
        (_cos_y, 1),
        (_sin_xy, 1),
        (_sin_3xy, 1),
        (_cos_px, 1),
        (_cos_py, 2),
    ),
    _m(-1, (_sin_3x, 2), (_sin_y, 2), (_sin_xy, 2), (_cos_py, 2)),
    _m(-1, (_sin_3y, 2), (_sin_x, 2), (_sin_xy, 2), (_cos_px, 2)),
    _m(
        2,
        (_sin_3x, 1),
        (_sin_y, 1),
        (_sin_3y, 1),
        (_sin_x, 1),
        (_sin_pxy, 1),
        (_sin_xy, 2),
        (_cos_px, 1),
        (_cos_py, 1),
    ),
)


def compile_sum(summands: Iterable[TrigMonomial]) -> LaurentPoly2:
    total = LaurentPoly2()
    for summand in summands:
        total = total + summand.compile()
    return total


def morley_residual(summands: Optional[Sequence[TrigMonomial]] = None) -> LaurentPoly2:
    """Compiled sum of the t = 1/3 summands (zero iff the identity holds)"""
    chosen = MORLEY_SUMMANDS if summands is None else summands
    residual = compile_sum(chosen)
    logger.debug(f"t=1/3 identity: {len(chosen)} summands, {len(residual)} residual terms")
    return residual


def verify_morley_identity(summands: Optional[Sequence[TrigMonomial]] = None) -> bool:
    """True iff every Laurent coefficient of the summed expression is zero"""
    return morley_residual(summands).is_zero()


def first_nonzero(poly: LaurentPoly2) -> Optional[Tuple[Exponent, CycloNum]]:
    """Smallest-exponent nonzero coefficient, for witnesses"""
    for key, value in poly.terms():
        return key, value
    return None
