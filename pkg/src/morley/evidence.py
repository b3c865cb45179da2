"""
Per-step evidence ledger

A step records each sub-check it performs; the step is verified when at least
one check ran and none failed. Failed checks keep a serialized witness.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.algebra.elimination import (
    RatFunc,
    SignVerdict,
    cross_difference,
    sturm_root_count,
    sturm_sign_certificate,
)
from src.algebra.polyring import (
    MultiPoly,
    canonical,
    coefficient_of,
    const,
    match_factorization,
    proportional,
    serialize,
    term_coefficient,
)
from src.arith.rational import RationalLike, format_rational, to_rational
from src.morley.displays import RECOMPUTED_SUFFIX, Factored


@dataclass
class CheckRecord:
    name: str
    ok: bool
    detail: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "ok": self.ok, **self.detail}


def rational_ratio(computed: MultiPoly, display: MultiPoly) -> Optional[Fraction]:
    """
    The rational k with computed == k * display, if there is one

    Raises:
        ValueError: If display is zero
    """
    if not display:
        raise ValueError("cannot compare against the zero polynomial")
    if not computed:
        return None
    monom, lead = display.terms()[0]
    k = coefficient_of(computed, monom) / to_rational(lead)
    if k == 0 or computed != display * const(k):
        return None
    return k


def _by_factor(factors: Sequence[Tuple[MultiPoly, int]]) -> Dict[str, Tuple[MultiPoly, int]]:
    # keyed on the monic factor so that 11t-3 and 3-11t meet
    out: Dict[str, Tuple[MultiPoly, int]] = {}
    for f, m in factors:
        key = serialize(f.monic())
        g, k = out.get(key, (f, 0))
        out[key] = (g, k + m)
    return out


def factor_differences(
    stated: Sequence[Tuple[MultiPoly, int]], computed: Sequence[Tuple[MultiPoly, int]]
) -> Tuple[List[MultiPoly], Dict[str, Any]]:
    """
    Factors on one side only, and the serialized differences for a witness

    A factor present on both sides with different multiplicities changes no
    root set and is only reported.
    """
    a, b = _by_factor(stated), _by_factor(computed)
    display_only = [a[key][0] for key in a if key not in b]
    computed_only = [b[key][0] for key in b if key not in a]
    multiplicity = {
        serialize(a[key][0]): {"display": a[key][1], "computed": b[key][1]}
        for key in a
        if key in b and a[key][1] != b[key][1]
    }
    detail = {
        "display_only": [serialize(f) for f in display_only],
        "computed_only": [serialize(f) for f in computed_only],
        "multiplicity": multiplicity,
    }
    return display_only + computed_only, detail


class Evidence:
    """Sub-checks, derived constants and notes collected while a step runs"""

    def __init__(self, step_id: str) -> None:
        self.step_id = step_id
        self.checks: List[CheckRecord] = []
        self.constants: Dict[str, Fraction] = {}
        self.notes: Dict[str, Any] = {}

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(check.ok for check in self.checks)

    @property
    def failures(self) -> List[CheckRecord]:
        return [check for check in self.checks if not check.ok]

    def check(self, name: str, ok: bool, **detail: Any) -> bool:
        self.checks.append(CheckRecord(name, bool(ok), detail))
        return bool(ok)

    def constant(self, name: str, value: RationalLike) -> Fraction:
        q = to_rational(value)
        self.constants[name] = q
        return q

    def note(self, key: str, value: Any) -> None:
        self.notes[key] = value

    def poly_identity(
        self, name: str, lhs: MultiPoly, rhs: MultiPoly, mod_trig: bool = True
    ) -> bool:
        """lhs == rhs, modulo the trig relations unless mod_trig is False"""
        diff = lhs - rhs
        if mod_trig:
            diff = canonical(diff)
        if diff:
            return self.check(name, False, difference=serialize(diff))
        return self.check(name, True)

    def is_zero(self, name: str, p: MultiPoly, mod_trig: bool = True) -> bool:
        return self.poly_identity(name, p, p.ring.zero, mod_trig)

    def ratfunc_identity(self, name: str, a: RatFunc, b: RatFunc, mod_trig: bool = True) -> bool:
        """a == b by cross-multiplication"""
        diff = cross_difference(RatFunc.coerce(a), RatFunc.coerce(b))
        if mod_trig:
            diff = canonical(diff)
        if diff:
            return self.check(name, False, cross_difference=serialize(diff))
        return self.check(name, True)

    def proportional(
        self, name: str, computed: MultiPoly, display: MultiPoly, constant: Optional[str] = None
    ) -> Optional[MultiPoly]:
        """
        computed == m * display with m a nonvanishing monomial

        The cofactor goes into the witness; its rational coefficient is
        recorded as a constant under ``constant`` (default: name).
        """
        cofactor = proportional(computed, display)
        if cofactor is None:
            self.check(name, False, computed=serialize(canonical(computed)))
            return None
        k = self.constant(constant or name, term_coefficient(cofactor))
        self.check(name, True, cofactor=serialize(cofactor), constant=format_rational(k))
        return cofactor

    def rational_multiple(
        self, name: str, computed: MultiPoly, display: MultiPoly, constant: Optional[str] = None
    ) -> Optional[Fraction]:
        """computed == k * display for a nonzero rational k (no trig reduction)"""
        k = rational_ratio(computed, display)
        if k is None:
            self.check(name, False, computed=serialize(computed))
            return None
        self.constant(constant or name, k)
        self.check(name, True, constant=format_rational(k))
        return k

    def factorization(
        self,
        name: str,
        p: MultiPoly,
        constant: RationalLike,
        factors: Sequence[Tuple[MultiPoly, int]],
    ) -> Optional[int]:
        """
        p equals the stated factorization, up to the sign of the constant

        The sign that matched is kept as ``sign_convention``.
        """
        sign = match_factorization(p, constant, factors)
        if sign is None:
            self.check(name, False, computed=serialize(p))
            return None
        self.constant(name, to_rational(constant) * sign)
        self.check(name, True, sign_convention=sign)
        return sign

    def factorization_with_erratum(
        self,
        name: str,
        p: MultiPoly,
        stated: Factored,
        recomputed: Optional[Factored],
        lo: RationalLike,
        hi: RationalLike,
    ) -> Optional[Tuple[Tuple[MultiPoly, int], ...]]:
        """
        p against a displayed factorization, or against its recomputed form

        When only the recomputed factorization reproduces p, the differing
        factors are noted under ``erratum``, and every factor found on one side
        only must have no root in (lo, hi], so that both factorizations vanish
        at the same admissible points.

        Returns:
            The factor list that reproduced p, or None
        """
        if recomputed is None or match_factorization(p, stated.constant, stated.factors) is not None:
            if self.factorization(name, p, stated.constant, stated.factors) is None:
                return None
            return stated.factors

        sign = self.factorization(name + RECOMPUTED_SUFFIX, p, recomputed.constant, recomputed.factors)
        if sign is None:
            return None
        unshared, detail = factor_differences(stated.factors, recomputed.factors)
        detail["constant"] = {
            "display": format_rational(to_rational(stated.constant)),
            "computed": format_rational(to_rational(recomputed.constant) * sign),
        }
        self.notes.setdefault("erratum", {})[name] = detail
        roots = {serialize(f): sturm_root_count(f, lo, hi) for f in unshared}
        self.check(
            f"{name}_erratum_root_free",
            all(count == 0 for count in roots.values()),
            roots=roots,
            interval=[format_rational(to_rational(lo)), format_rational(to_rational(hi))],
        )
        return recomputed.factors

    def sign(
        self,
        name: str,
        p: MultiPoly,
        expected: SignVerdict,
        lo: Optional[RationalLike] = None,
        hi: Optional[RationalLike] = None,
    ) -> bool:
        """Sturm certificate that p has the expected sign on [lo, hi]"""
        verdict = sturm_sign_certificate(p, lo, hi)
        interval = [None if b is None else format_rational(b) for b in (lo, hi)]
        return self.check(
            name,
            verdict == expected,
            polynomial=serialize(p),
            interval=interval,
            verdict=verdict.value,
        )

    def to_witness(self) -> Dict[str, Any]:
        """Failed checks first; passing checks only when nothing failed"""
        failed = self.failures
        shown = failed if failed else self.checks
        witness: Dict[str, Any] = {"checks": [check.to_dict() for check in shown]}
        if not self.checks:
            witness["error"] = "no checks recorded"
        if self.notes:
            witness["notes"] = self.notes
        return witness
