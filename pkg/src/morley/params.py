"""
Cevian parameters t1..t6
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from src.arith.rational import format_rational, to_rational

Number = Union[int, float, Fraction]

# (i, j) pairs whose sum must stay below 1
ADMISSIBLE_PAIRS: Tuple[Tuple[int, int], ...] = ((2, 3), (4, 5), (6, 1))


@dataclass(frozen=True)
class CevianParams:
    """
    Fractions t1..t6 of the vertex angles cut off by the cevians

    ``t[i-1]`` is t_i. With ``symbolic`` set, the t_i stay ring variables and
    ``t`` is empty.
    """

    t: Tuple[Number, ...] = field(default_factory=tuple)
    symbolic: bool = False

    def __post_init__(self) -> None:
        if self.symbolic:
            if self.t:
                raise ValueError("symbolic parameters carry no values")
            return
        if len(self.t) != 6:
            raise ValueError(f"expected six values t1..t6, got {len(self.t)}")
        for value in self.t:
            if isinstance(value, bool) or not isinstance(value, (int, float, Fraction)):
                raise ValueError(f"t values must be numbers, got {value!r}")

    @classmethod
    def trisector(cls) -> "CevianParams":
        return cls(tuple(Fraction(1, 3) for _ in range(6)))

    @classmethod
    def uniform(cls, value: Number) -> "CevianParams":
        return cls(tuple(value for _ in range(6)))

    @classmethod
    def reduced(cls, t1: Number, t3: Number, t5: Number) -> "CevianParams":
        """t2 = t1, t4 = t3, t6 = t5"""
        return cls((t1, t1, t3, t3, t5, t5))

    @classmethod
    def from_text(cls, text: str) -> "CevianParams":
        """
        Parse ``"t1,...,t6"``; entries may be ``n/d`` or decimals

        Raises:
            ValueError: On the wrong count or an unreadable entry
        """
        parts = [p.strip() for p in text.split(",") if p.strip()]
        values: List[Number] = []
        for part in parts:
            try:
                values.append(to_rational(part) if "/" in part else float(part))
            except (ValueError, ZeroDivisionError) as e:
                raise ValueError(f"cannot read parameter {part!r}") from e
        return cls(tuple(values))

    def value(self, i: int) -> Number:
        if self.symbolic:
            raise ValueError("symbolic parameters have no numeric values")
        if i < 1 or i > 6:
            raise ValueError(f"index {i} outside 1..6")
        return self.t[i - 1]

    def as_floats(self) -> Tuple[float, ...]:
        return tuple(float(v) for v in self.t)

    def validate(self) -> Tuple[bool, List[str]]:
        """
        Check admissibility: t_i > 0 and the paired sums below 1

        Returns:
            Tuple of (is_valid, error_messages)
        """
        if self.symbolic:
            return True, []
        errors: List[str] = []
        for i, value in enumerate(self.t, start=1):
            if not value > 0:
                errors.append(f"t{i} = {value} must be positive")
        for i, j in ADMISSIBLE_PAIRS:
            total = self.t[i - 1] + self.t[j - 1]
            if not total < 1:
                errors.append(f"t{i} + t{j} = {total} must be below 1")
        return len(errors) == 0, errors

    def is_admissible(self) -> bool:
        return self.validate()[0]

    def require_admissible(self) -> None:
        """
        Raises:
            ValueError: With every violated constraint
        """
        ok, errors = self.validate()
        if not ok:
            raise ValueError("inadmissible cevian parameters: " + "; ".join(errors))

    def perturbed(self, i: int, delta: float) -> "CevianParams":
        values = list(self.as_floats())
        values[i - 1] += delta
        return CevianParams(tuple(values))

    def describe(self) -> str:
        if self.symbolic:
            return "symbolic"
        return ",".join(
            format_rational(v) if isinstance(v, (int, Fraction)) else repr(v) for v in self.t
        )


SYMBOLIC = CevianParams(symbolic=True)


def admissibility_violation(values: Sequence[Optional[Number]]) -> Optional[str]:
    """
    First violated constraint for a partial assignment (None = unknown)

    Used by branch checks that pin only some of the t_i.
    """
    for i, value in enumerate(values, start=1):
        if value is not None and not value > 0:
            return f"t{i} = {value} must be positive"
    for i, j in ADMISSIBLE_PAIRS:
        a, b = values[i - 1], values[j - 1]
        if a is not None and b is not None and not a + b < 1:
            return f"t{i} + t{j} = {a + b} must be below 1"
    return None
