"""
Catalog of the displayed formulas the derivation passes through

Every entry is written out literally (never generated from another entry),
so that a check relating two entries compares two independent transcriptions.
Entries are polynomials, rational functions, relations ``lhs = rhs`` or, for
the reduced A, a tuple of series terms.

Where a displayed factorization differs from the determinant it claims to
factor, the recomputed factorization is stored beside it under the same name
with the ``_recomputed`` suffix; the display itself is left as printed.

A catalog is immutable; ``with_override`` and ``corrupted`` return modified
copies for fault injection.
"""

import logging
from collections.abc import Mapping as AbcMapping
from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from sympy.polys.rings import PolyElement

from src.algebra.elimination import RatFunc
from src.algebra.polyring import R, MultiPoly, S, T, c, expand_factors, rat, s, serialize
from src.algebra.series import phase_sin_cos
from src.morley.build_a import SeriesTerm, arg, cos_, sin_

logger = logging.getLogger(__name__)

RECOMPUTED_SUFFIX = "_recomputed"


@dataclass(frozen=True)
class Relation:
    """lhs = rhs"""

    lhs: Union[MultiPoly, RatFunc]
    rhs: Union[MultiPoly, RatFunc]

    def residual(self) -> RatFunc:
        return RatFunc.coerce(self.lhs) - RatFunc.coerce(self.rhs)


@dataclass(frozen=True)
class Factored:
    """constant * prod(factor^multiplicity)"""

    constant: object
    factors: Tuple[Tuple[MultiPoly, int], ...]

    def expand(self) -> MultiPoly:
        return expand_factors(self.constant, self.factors)


DisplayValue = Union[
    MultiPoly, RatFunc, Relation, Factored, Tuple[SeriesTerm, ...], Tuple[RatFunc, ...]
]


def _t():
    return T(1), T(3), T(5)


def _reduced_a_display() -> Tuple[SeriesTerm, ...]:
    t1, t3, t5 = _t()
    x1 = arg(u=t1)
    ab = arg(u=1, v=1)
    i_r = arg(u=t3, phases={3: -1})
    j_r = arg(v=t5, phases={5: -1})
    a = arg(u=1)
    b = arg(v=1)
    t3r = arg(u=-t3, v=-t3, phases={3: 1})
    g_r = arg(u=t1, v=t1)
    c13 = arg(v=-1 + t1 + t3)
    t3b = arg(v=t3)
    t5a = arg(u=t5)
    c35 = arg(u=1 - t3 - t5, v=1 - t3 - t5, k0=-1, phases={3: 1, 5: 1})
    return (
        SeriesTerm(1, (sin_(x1, 2), sin_(ab, 2), sin_(i_r, 2), sin_(j_r, 2))),
        SeriesTerm(1, (sin_(a, 2), sin_(t3r, 2), sin_(g_r, 2), sin_(j_r, 2))),
        SeriesTerm(
            2,
            (
                sin_(x1),
                sin_(a),
                sin_(t3r),
                cos_(c13),
                sin_(g_r),
                sin_(ab),
                sin_(i_r),
                sin_(j_r, 2),
            ),
        ),
        SeriesTerm(-1, (sin_(a, 2), sin_(t3b, 2), sin_(g_r, 2), sin_(j_r, 2))),
        SeriesTerm(-1, (sin_(b, 2), sin_(t5a, 2), sin_(g_r, 2), sin_(i_r, 2))),
        SeriesTerm(
            2,
            (
                sin_(a),
                sin_(t3b),
                sin_(b),
                sin_(t5a),
                cos_(c35),
                sin_(g_r, 2),
                sin_(i_r),
                sin_(j_r),
            ),
        ),
    )


def _system_entries() -> Dict[str, DisplayValue]:
    """Coefficient conditions and the first elimination"""
    t1, t3, t5 = _t()
    t2, t4 = T(2), T(4)
    s1, s3, s5 = s(1), s(3), s(5)
    c1, c3, c5 = c(1), c(3), c(5)
    S1, S3, S5 = S(1), S(3), S(5)
    half = rat(1, 2)
    three_halves = rat(3, 2)
    _, cos_phase = phase_sin_cos(-1, (0, 0, 1, 0, 1, 0))

    e: Dict[str, DisplayValue] = {}
    e["alpha2beta2"] = (-1 + c(4) ** 2) * (-1 + c(5) ** 2) * (t1 - t2) ** 2
    e["reduced_A"] = _reduced_a_display()
    e["P"] = (
        2 * t3 * t5 * cos_phase * s3 * s5
        + ((-1 + t1 + t3) ** 2 - t3**2) * s3**2 * s5**2
        - t5**2 * s3**2
    )
    e["Eeq1"] = -2 * t3 * t5 * c3 * c5 * s5 + (
        (1 - 2 * t1 - 2 * t3 + t1**2 + 2 * t1 * t3 + 2 * t3 * t5) * s5**2 - t5**2
    ) * s3
    e["Eeq2"] = -2 * t5 * t3 * c5 * c3 * s3 + (
        (1 - 2 * t1 - 2 * t5 + t1**2 + 2 * t1 * t5 + 2 * t5 * t3) * s3**2 - t3**2
    ) * s5
    e["Eeq3"] = -2 * t1 * t5 * c1 * c5 * s5 + (
        (1 - 2 * t3 - 2 * t1 + t3**2 + 2 * t3 * t1 + 2 * t1 * t5) * s5**2 - t5**2
    ) * s1
    e["Eeq4"] = -2 * t5 * t1 * c5 * c1 * s1 + (
        (1 - 2 * t3 - 2 * t5 + t3**2 + 2 * t3 * t5 + 2 * t5 * t1) * s1**2 - t1**2
    ) * s5
    e["Eeq5"] = -2 * t1 * t3 * c1 * c3 * s3 + (
        (1 - 2 * t5 - 2 * t1 + t5**2 + 2 * t5 * t1 + 2 * t1 * t3) * s3**2 - t3**2
    ) * s1
    e["Eeq6"] = -2 * t3 * t1 * c3 * c1 * s1 + (
        (1 - 2 * t5 - 2 * t3 + t5**2 + 2 * t5 * t3 + 2 * t3 * t1) * s1**2 - t1**2
    ) * s3

    e["S3_step1"] = Relation(
        (-2 * t3 + 2 * t1 * t3) * S5 * S3 - t5**2 * S3,
        (-2 * t5 + 2 * t1 * t5) * S3 * S5 - t3**2 * S5,
    )
    e["S3_step2"] = Relation(
        2 * (t5 - t3) * (1 - t1) * S3 * S5, t5**2 * S3 - t3**2 * S5
    )
    e["S3_step3"] = Relation(
        (2 * (t5 - t3) * (1 - t1) * S5 - t5**2) * S3, -(t3**2) * S5
    )
    e["S3"] = RatFunc(-(t3**2) * S5, 2 * (t5 - t3) * (1 - t1) * S5 - t5**2)
    e["S1"] = RatFunc(-(t1**2) * S5, 2 * (t5 - t1) * (1 - t3) * S5 - t5**2)

    e["Dis1"] = (1 - 2 * t1 - 2 * t3 + t1**2 + 2 * t1 * t3 + 2 * t3 * t5) * s5**2 - t5**2
    e["Eeq7"] = three_halves * t5 * s3 * s5 * (t3 + t5 - 1) * (s3 * c5 + c3 * s5) + (
        three_halves * t3 * t5 * (s3 * s5 - c3 * c5) * s5
        + s3 * ((t1 - 1) * (t1 - 2 + 3 * t3) * s5**2 - three_halves * t5**2)
    ) * c3
    e["Eeq7_t3_half"] = (t5 - half) * c5
    e["Dis3"] = three_halves * t3 * s5 * s3 * (t3 + t5 - 1) * (s3 * c5 + c3 * s5) + (
        three_halves * t3 * t5 * (s3 * s5 - c3 * c5) * s3
        + s5 * ((t1 - 1) * (t1 - 2 + 3 * t5) * s3**2 - three_halves * t3**2)
    ) * c5
    e["Dis3_t5_half"] = (t3 - half) * c3
    return e


def _cosine_entries() -> Dict[str, DisplayValue]:
    """Products and squares of the cosine relations, closed forms of C_i"""
    t1, t3, t5 = _t()
    s1, s3, s5 = s(1), s(3), s(5)
    c1, c3, c5 = c(1), c(3), c(5)
    S5 = S(5)

    p1 = (1 - 2 * t1 - 2 * t3 + t1**2 + 2 * t1 * t3 + 2 * t3 * t5) * s5**2 - t5**2
    p4 = (1 - 2 * t3 - 2 * t5 + t3**2 + 2 * t3 * t5 + 2 * t5 * t1) * s1**2 - t1**2
    p5 = (1 - 2 * t5 - 2 * t1 + t5**2 + 2 * t5 * t1 + 2 * t1 * t3) * s3**2 - t3**2

    e: Dict[str, DisplayValue] = {}
    e["E1"] = Relation(c3 * c5, RatFunc(p1 * s3, 2 * t3 * t5 * s5))
    e["E4"] = Relation(c5 * c1, RatFunc(p4 * s5, 2 * t5 * t1 * s1))
    e["E5"] = Relation(c1 * c3, RatFunc(p5 * s1, 2 * t3 * t1 * s3))
    e["product145"] = Relation(
        c1**2 * c3**2 * c5**2, RatFunc(p1 * p4 * p5, 8 * t1**2 * t3**2 * t5**2)
    )
    e["E1sq"] = Relation(c3**2 * c5**2, RatFunc(p1**2 * s3**2, 4 * t3**2 * t5**2 * s5**2))
    e["E4sq"] = Relation(c5**2 * c1**2, RatFunc(p4**2 * s5**2, 4 * t5**2 * t1**2 * s1**2))
    e["E5sq"] = Relation(c1**2 * c3**2, RatFunc(p5**2 * s1**2, 4 * t3**2 * t1**2 * s3**2))
    e["c1sq1"] = RatFunc(s5**2 * p4 * p5, 2 * t1**2 * s3**2 * p1)
    e["c3sq1"] = RatFunc(s1**2 * p1 * p5, 2 * t3**2 * s5**2 * p4)
    e["c5sq1"] = RatFunc(s3**2 * p1 * p4, 2 * t5**2 * s1**2 * p5)

    m0 = (1 + t5**2 + 4 * t1 * t3 - 2 * t3 - 2 * t1) * S5 - t5**2
    m1 = (1 - 2 * t1 + t1**2 + 2 * t1 * t3 + 2 * t3 * t5 - 2 * t3) * S5 - t5**2
    m3 = (1 - 2 * t3 + 2 * t5 * t1 - 2 * t1 + 2 * t1 * t3 + t3**2) * S5 - t5**2
    e["C1"] = RatFunc(-m0 * m3, 2 * m1 * ((2 * t1 * t3 + 2 * t5 - 2 * t3 * t5 - 2 * t1) * S5 - t5**2))
    e["C3"] = RatFunc(-m0 * m1, 2 * m3 * ((2 * t1 * t3 + 2 * t5 - 2 * t1 * t5 - 2 * t3) * S5 - t5**2))
    e["C5"] = RatFunc(m3 * m1, 2 * m0 * t5**2)
    return e


def _s5_entries() -> Dict[str, DisplayValue]:
    """Determination of S5 up to the S5eq3 family"""
    t1, t3, t5 = _t()
    s1, s3, s5 = s(1), s(3), s(5)
    c3, c5 = c(3), c(5)
    S1, S3, S5 = S(1), S(3), S(5)
    three_halves = rat(3, 2)

    d3 = 2 * (t5 - t3) * (1 - t1) * S5 - t5**2
    w = (1 - t1) * (t1 - 5 + 6 * t3) * S5 + 3 * t5**2
    m3 = (2 * t5 * t1 - 2 * t1 + 2 * t1 * t3 + t3**2 - 2 * t3 + 1) * S5 - t5**2
    y = (
        t3
        - 2 * t3**2
        - 2 * t1 * t3
        + 2 * t1 * t3**2
        + t3**3
        + 6 * t1 * t3 * t5
        - 2 * t1 * t5
        + t5**3
        - 2 * t3 * t5
        + t5
    ) * S5 - t3 * t5**2 - t5**3

    e: Dict[str, DisplayValue] = {}
    e["S5eq1"] = Relation(
        -three_halves * t3 * s5 * s3 * (t3 + t5 - 1) * (s3 * c5 + c3 * s5),
        (
            three_halves * t3 * t5 * (s3 * s5 - c3 * c5) * s3
            + s5 * ((t1 - 1) * (t1 - 2 + 3 * t5) * s3**2 - three_halves * t3**2)
        )
        * c5,
    )
    e["S5eq1right1"] = (
        RatFunc((s3 * s5 - c3 * c5) * s3),
        RatFunc(S3 * s5 - c3 * c5 * s3),
        RatFunc(S3 * s5) - RatFunc(
            ((1 - 2 * t1 - 2 * t3 + t1**2 + 2 * t1 * t3 + 2 * t3 * t5) * s5**2 - t5**2) * S3,
            2 * t3 * t5 * s5,
        ),
        RatFunc(S3 * s5) + RatFunc(
            ((1 - 2 * t1 - 2 * t3 + t1**2 + 2 * t1 * t3 + 2 * t3 * t5) * S5 - t5**2) * t3 * s5,
            2 * t5 * d3,
        ),
        RatFunc(s5 * t3 * ((1 - t1) * (1 - t1 - 2 * t3) * S5 - t5**2), 2 * t5 * d3),
    )
    e["S5eq1right2"] = Relation(
        (t1 - 1) * (t1 - 2 + 3 * t5) * S3 - three_halves * t3**2,
        RatFunc(
            -(t3**2) * (2 * (1 - t1) * (2 - t1 - 3 * t3) * S5 - 3 * t5**2),
            4 * (t5 - t3) * (1 - t1) * S5 - 2 * t5**2,
        ),
    )
    e["S5eq1right"] = Relation(
        (
            three_halves * t3 * t5 * (s3 * s5 - c3 * c5) * s3
            + s5 * ((t1 - 1) * (t1 - 2 + 3 * t5) * s3**2 - three_halves * t3**2)
        )
        * c5,
        RatFunc(c5 * s5 * t3**2 * w, 8 * (t5 - t3) * (1 - t1) * S5 - 4 * t5**2),
    )
    # lhs factor S3 + s3 s5 c3/c5, kept as the pair (S3 c5 + s3 s5 c3, c5)
    e["S5eq2"] = Relation(
        RatFunc(-three_halves * (t3 + t5 - 1) * (S3 * c5 + s3 * s5 * c3), c5),
        RatFunc(t3 * w, 8 * (t5 - t3) * (1 - t1) * S5 - 4 * t5**2),
    )
    e["c3_over_c5"] = RatFunc(
        ((1 - 2 * t5 - 2 * t1 + t5**2 + 2 * t5 * t1 + 2 * t1 * t3) * S3 - t3**2) * S1 * t5,
        ((1 - 2 * t3 - 2 * t5 + t3**2 + 2 * t3 * t5 + 2 * t5 * t1) * S1 - t1**2) * s3 * s5 * t3,
    )
    e["S5eq1left"] = RatFunc(-t3 * S5 * y, d3 * m3)
    e["S5eq_intermediate"] = Relation(RatFunc(6 * S5 * (t3 + t5 - 1) * y, m3), w)

    q2 = (
        5
        - 72 * t1 * t3 * t5
        - 22 * t3
        + 35 * t3**2
        - 16 * t1
        + 52 * t1 * t3
        - 54 * t1 * t3**2
        + 22 * t1 * t5
        + 24 * t3 * t5
        - 12 * t3 * t5**2
        - 6 * t5
        - 24 * t3**3
        - 6 * t5**3
        + 6 * t5**2
        + 13 * t1**2 * t3**2
        - 24 * t3**2 * t5
        + 6 * t5 * t3**3
        + 18 * t1 * t3**3
        - 12 * t1**2 * t5
        - 26 * t1**2 * t3
        + 2 * t1**3 * t5
        + 2 * t1**3 * t3
        + 6 * t3 * t5**3
        + 13 * t1**2
        - 12 * t1 * t5**2
        + 6 * t5**4
        - 2 * t1**3
        + 6 * t3**4
        + 36 * t1 * t3 * t5**2
        + 48 * t1 * t3**2 * t5
        + 12 * t1**2 * t3 * t5
    )
    q1 = (
        -12 * t1 * t3 * t5**2
        - 6 * t5**3 * t1
        + 12 * t1 * t5**2
        - 9 * t3**2 * t5**2
        - 12 * t3 * t5**3
        + 18 * t3 * t5**2
        + 6 * t5**3
        - t1**2 * t5**2
        - 8 * t5**2
        - 6 * t5**4
    )
    e["Quad"] = q2 * S5**2 + q1 * S5 + 3 * t5**4

    q2_swapped = (
        5
        - 72 * t1 * t3 * t5
        - 22 * t1
        + 35 * t1**2
        - 16 * t3
        + 52 * t1 * t3
        - 54 * t3 * t1**2
        + 22 * t3 * t5
        + 24 * t1 * t5
        - 12 * t1 * t5**2
        - 6 * t5
        - 24 * t1**3
        - 6 * t5**3
        + 6 * t5**2
        + 13 * t1**2 * t3**2
        - 24 * t1**2 * t5
        + 6 * t5 * t1**3
        + 18 * t3 * t1**3
        - 12 * t3**2 * t5
        - 26 * t3**2 * t1
        + 2 * t3**3 * t5
        + 2 * t3**3 * t1
        + 6 * t1 * t5**3
        + 13 * t3**2
        - 12 * t3 * t5**2
        + 6 * t5**4
        - 2 * t3**3
        + 6 * t1**4
        + 36 * t1 * t3 * t5**2
        + 48 * t3 * t1**2 * t5
        + 12 * t3**2 * t1 * t5
    )
    q1_swapped = (
        -12 * t1 * t3 * t5**2
        - 6 * t5**3 * t3
        + 12 * t3 * t5**2
        - 9 * t1**2 * t5**2
        - 12 * t1 * t5**3
        + 18 * t1 * t5**2
        + 6 * t5**3
        - t3**2 * t5**2
        - 8 * t5**2
        - 6 * t5**4
    )
    e["QuadSwap"] = q2_swapped * S5**2 + q1_swapped * S5 + 3 * t5**4
    return e


def _coefficient_forms() -> Dict[str, MultiPoly]:
    """Coefficients and right-hand sides of the S5eq3 family"""
    t1, t3, t5 = _t()
    k5 = (
        3 * t1**3
        + 2 * t1**2 * t5
        + 11 * t1**2 * t3
        - 11 * t1**2
        + 11 * t1
        + 20 * t1 * t3 * t5
        - 6 * t1 * t5
        - 25 * t1 * t3
        + 11 * t1 * t3**2
        - 3
        + 2 * t3**2 * t5
        + 3 * t5**3
        + t5
        - 11 * t3**2
        + 3 * t3**3
        + 11 * t3
        - 6 * t3 * t5
    )
    k3 = (
        3 * t1**3
        + 2 * t1**2 * t3
        + 11 * t1**2 * t5
        - 11 * t1**2
        + 11 * t1
        + 20 * t1 * t5 * t3
        - 6 * t1 * t3
        - 25 * t1 * t5
        + 11 * t1 * t5**2
        - 3
        + 2 * t5**2 * t3
        + 3 * t3**3
        + t3
        - 11 * t5**2
        + 3 * t5**3
        + 11 * t5
        - 6 * t5 * t3
    )
    k1 = (
        3 * t5**3
        + 2 * t5**2 * t1
        + 11 * t5**2 * t3
        - 11 * t5**2
        + 11 * t5
        + 20 * t5 * t3 * t1
        - 6 * t5 * t1
        - 25 * t5 * t3
        + 11 * t5 * t3**2
        - 3
        + 2 * t3**2 * t1
        + 3 * t1**3
        + t1
        - 11 * t3**2
        + 3 * t3**3
        + 11 * t3
        - 6 * t3 * t1
    )
    return {
        "K5": k5,
        "L5": 4 * t1 - 3 + 3 * t5 + 4 * t3,
        "K3": k3,
        "L3": 4 * t1 - 3 + 3 * t3 + 4 * t5,
        "K1": k1,
        "L1": 4 * t5 - 3 + 3 * t1 + 4 * t3,
    }


def _case_entries() -> Dict[str, DisplayValue]:
    """Case analysis: t1 = t3, t1 = t3 = t5 and t1, t3, t5 distinct"""
    t1, t3, t5 = _t()
    S1, S3, S5 = S(1), S(3), S(5)
    forms = _coefficient_forms()
    k5, l5, k3, l3, k1, l1 = (forms[k] for k in ("K5", "L5", "K3", "L3", "K1", "L1"))

    e: Dict[str, DisplayValue] = dict(forms)
    e["S5eq3"] = (t1 - t3) * (k5 * S5 - t5**2 * l5)
    e["S3eq2"] = (t1 - t5) * (k3 * S3 - t3**2 * l3)
    e["S1eq2"] = (t5 - t3) * (k1 * S1 - t1**2 * l1)

    b3 = (
        -17 * t1**2
        + 31 * t1**2 * t5
        + 8 * t1**3
        - 31 * t1 * t5
        + 13 * t1 * t5**2
        + 12 * t1
        - 11 * t5**2
        + 3 * t5**3
        - 3
        + 11 * t5
    )
    b5 = (
        -3
        - 37 * t1**2
        + 25 * t1**2 * t5
        + 22 * t1**3
        - 19 * t1 * t5
        + 5 * t1 * t5**2
        + 18 * t1
        - 3 * t5**2
        + 3 * t5**3
        + 5 * t5
    )
    quad_c1 = 6 * t1**2 - 3 * t1 - 3 * t1 * t5 + 1 - t5**2
    e["B3"] = b3
    e["B5"] = b5
    e["S3eq3"] = Relation(b3 * S1, t1**2 * (7 * t1 + 4 * t5 - 3))
    e["S5t1t3"] = Relation(b5 * S5, t5**2 * (7 * t1 + 4 * t5 - 3))
    e["t5"] = RatFunc(3 - 7 * t1, 4)
    e["B5_at_t5"] = (11 * t1 - 3) * (131 * t1**2 - 42 * t1 + 7)
    e["S5t1eqt3"] = RatFunc(t5**2 * (7 * t1 + 4 * t5 - 3), b5)
    e["S1t1eqt3"] = RatFunc(t1**2 * (7 * t1 + 4 * t5 - 3), b3)
    e["C1t1t3"] = RatFunc((t1 - t5) * quad_c1, 2 * b3)
    e["C5t1t3"] = RatFunc(
        (t1**2 - 1 - 3 * t5**2 + 3 * t5)
        * (
            t5
            - t1
            + 3 * t1 * t5
            + t1**3
            - t1**2 * t5
            - 3 * t1 * t5**2
            - 3 * t5**2
            + 3 * t5**3
        ),
        2 * quad_c1 * b5,
    )
    e["q1"] = (
        4 * t1**3
        - 63 * t1**2 * t5
        + 25 * t1**2
        - 23 * t1
        - 23 * t5
        + 65 * t1 * t5
        - 24 * t1 * t5**2
        - 5 * t5**3
        + 22 * t5**2
        + 6
    )
    e["q5"] = (
        6
        - 11 * t5
        - 53 * t1
        - 484 * t1**3
        + 218 * t1**2
        - 3 * t5**3
        - 11 * t5**5
        + 18 * t5**4
        - 263 * t1**5
        + 576 * t1**4
        + 212 * t5**2 * t1**3
        - 114 * t1**2 * t5
        + 44 * t1 * t5
        + 85 * t1 * t5**2
        - 206 * t5**2 * t1**2
        + 56 * t5**3 * t1**2
        - t5**4 * t1
        - 62 * t5**3 * t1
        + 162 * t1**3 * t5
        - 169 * t1**4 * t5
    )
    e["R_q1_q5_t5"] = Factored(
        48,
        (
            (38 * t1 - 7, 1),
            (61 * t1**2 - 98 * t1 + 49, 1),
            (11 * t1 - 3, 2),
            (131 * t1**2 - 42 * t1 + 7, 2),
            (2 * t1 - 1, 6),
        ),
    )
    e["R_q1_q5_t1"] = Factored(
        -48,
        (
            (38 * t5 - 23, 1),
            (61 * t5**2 + 144 * t5 + 11, 1),
            (11 * t5 - 3, 2),
            (131 * t5**2 - 123 * t5 + 40, 2),
            (2 * t5 - 1, 6),
        ),
    )
    # As displayed the t1-resultant carries 61t5^2+144t5+11; the Sylvester
    # determinant has 61t5^2+144t5+111.
    e["R_q1_q5_t1" + RECOMPUTED_SUFFIX] = Factored(
        -48,
        (
            (38 * t5 - 23, 1),
            (61 * t5**2 + 144 * t5 + 111, 1),
            (11 * t5 - 3, 2),
            (131 * t5**2 - 123 * t5 + 40, 2),
            (2 * t5 - 1, 6),
        ),
    )
    e["S1first"] = RatFunc(3 * t1**2, 7 * t1**2 - 4 * t1 + 1)
    e["S2second"] = RatFunc(3 * t1**2, 13 * t1**2 - 9 * t1 + 2)

    e["S5eqlast"] = Relation(k5 * S5, t5**2 * l5)
    e["S3eqlast"] = Relation(k3 * S3, t3**2 * l3)
    e["S1eqlast"] = Relation(k1 * S1, t1**2 * l1)
    e["s5square"] = RatFunc(t5**2 * l5, k5)
    e["s3squareV1"] = RatFunc(t3**2 * l3, k3)
    e["s1squareV2"] = RatFunc(t1**2 * l1, k1)
    e["s1square"] = RatFunc(
        t1**2 * l5,
        -3
        + 22 * t1 * t3 * t5
        + 11 * t3
        - 11 * t3**2
        + 5 * t1
        - 11 * t1 * t3
        + 3 * t1 * t3**2
        - 8 * t1 * t5
        - 20 * t3 * t5
        + 6 * t3 * t5**2
        + 7 * t5
        + 3 * t3**3
        + 3 * t5**3
        - 6 * t5**2
        + 10 * t3**2 * t5
        + 2 * t1**2 * t5
        + 3 * t1**2 * t3
        - 3 * t1**2
        + 3 * t1**3,
    )
    e["s3square"] = RatFunc(
        t3**2 * l5,
        -3
        + 22 * t1 * t3 * t5
        + 11 * t1
        - 11 * t1**2
        + 5 * t3
        - 11 * t1 * t3
        + 3 * t3 * t1**2
        - 8 * t3 * t5
        - 20 * t1 * t5
        + 6 * t1 * t5**2
        + 7 * t5
        + 3 * t1**3
        + 3 * t5**3
        - 6 * t5**2
        + 10 * t1**2 * t5
        + 2 * t3**2 * t5
        + 3 * t3**2 * t1
        - 3 * t3**2
        + 3 * t3**3,
    )
    e["cubic1"] = (
        3 * t1**3
        + 9 * t1**2
        - 6 * t1**2 * t5
        - 9 * t1**2 * t3
        + 27 * t5 * t1
        + 30 * t1 * t3
        - 20 * t1
        - 13 * t1 * t3**2
        - 15 * t1 * t3 * t5
        - 6 * t5**2 * t1
        + 9
        - t3**3
        - 20 * t3
        - 9 * t3 * t5**2
        + 9 * t5**2
        + 3 * t5**3
        + 12 * t3**2
        + 30 * t3 * t5
        - 20 * t5
        - 13 * t3**2 * t5
    )
    e["cubic3"] = (
        -3 * t3**3
        + 9 * t1 * t3**2
        - 9 * t3**2
        + 6 * t3**2 * t5
        - 30 * t1 * t3
        - 27 * t3 * t5
        + 13 * t1**2 * t3
        + 15 * t1 * t3 * t5
        + 20 * t3
        + 6 * t3 * t5**2
        - 9
        + t1**3
        + 20 * t1
        - 9 * t5**2
        - 3 * t5**3
        - 12 * t1**2
        + 9 * t5**2 * t1
        - 30 * t5 * t1
        + 13 * t1**2 * t5
        + 20 * t5
    )
    e["cubic_sum"] = (t1 - t3) * (t1 + t3 + t5) * l5

    e["t5eq"] = RatFunc(3 - 3 * t1 - 4 * t3, 4)
    e["p1"] = (
        -rat(131, 64) * t1
        - rat(9, 8) * t3
        - rat(9, 64) * t1**2
        + rat(183, 64) * t1**3
        + rat(3, 2) * t3**2
        - rat(87, 8) * t1**2 * t3
        + 12 * t1 * t3
        - rat(29, 2) * t1 * t3**2
        + rat(21, 64)
    )
    e["CaseAS5"] = RatFunc(
        (-3 + 3 * t1 + 4 * t3) ** 2 * (7 * t1 - 3 + 4 * t3),
        125 * t1
        + 28 * t3
        - 77 * t1**2
        + 15 * t1**3
        + 208 * t3**2
        - 128 * t3**3
        - 708 * t1**2 * t3
        + 680 * t1 * t3
        - 1104 * t1 * t3**2
        - 63,
    )
    e["CaseAS3"] = RatFunc(
        -64 * t3**2 * (t1 - t3),
        79 * t1
        + 124 * t3
        - 79 * t1**2
        + 21 * t1**3
        + 80 * t3**2
        - 128 * t3**3
        + 732 * t1**2 * t3
        - 856 * t1 * t3
        + 816 * t1 * t3**2
        - 21,
    )
    e["AS3v2"] = RatFunc(
        -16 * t3**2 * (7 * t1 - 3 + 4 * t3),
        -331 * t1**2
        + 187 * t1
        - 1512 * t1 * t3
        - 9
        + 260 * t3
        + 153 * t1**3
        + 1252 * t1**2 * t3
        + 1360 * t1 * t3**2
        - 464 * t3**2
        + 128 * t3**3,
    )
    p3 = (
        155 * t1**3
        - 684 * t1**2 * t3
        - 81 * t1**2
        - 95 * t1
        + 792 * t1 * t3
        - 912 * t1 * t3**2
        - 108 * t3
        + 21
        + 144 * t3**2
    )
    e["p3"] = p3
    e["CaseAt1t3second"] = -16 * t3**2 * (-3 + 3 * t1 + 8 * t3) * p3
    e["CaseAit3"] = RatFunc(3 - 3 * t1, 8)
    e["p1_at_CaseAit3"] = (11 * t1 - 3) * (57 * t1**2 - 36 * t1 - 5)
    e["R_p1_p3_t3"] = Factored(
        rat(1, 16),
        ((11 * t1 - 3, 2), (t1 + 3, 2), (131 * t1**2 - 42 * t1 + 7, 2)),
    )
    e["R_p1_p3_t1"] = Factored(
        -9,
        (
            (5 * t3**2 - 15 * t3 - 8, 1),
            (131 * t3**2 - 42 * t3 + 7, 1),
            (131 * t3**2 - 123 * t3 + 40, 1),
            (11 * t3 - 3, 1),
        ),
    )
    # 11t3-3 is a double factor of the determinant, single as displayed
    e["R_p1_p3_t1" + RECOMPUTED_SUFFIX] = Factored(
        -9,
        (
            (5 * t3**2 - 15 * t3 - 8, 1),
            (131 * t3**2 - 42 * t3 + 7, 1),
            (131 * t3**2 - 123 * t3 + 40, 1),
            (11 * t3 - 3, 2),
        ),
    )
    return e


def default_entries() -> Dict[str, DisplayValue]:
    entries: Dict[str, DisplayValue] = {}
    for build in (_system_entries, _cosine_entries, _s5_entries, _case_entries):
        entries.update(build())
    return entries


class DisplayCatalog(AbcMapping):
    """Read-only name -> display mapping"""

    def __init__(self, entries: Optional[Mapping[str, DisplayValue]] = None) -> None:
        self._entries = MappingProxyType(dict(entries if entries is not None else default_entries()))

    def __getitem__(self, name: str) -> DisplayValue:
        try:
            return self._entries[name]
        except KeyError:
            raise KeyError(f"no display named {name!r}") from None

    def __iter__(self) -> Iterator[str]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def poly(self, name: str) -> MultiPoly:
        value = self[name]
        if isinstance(value, RatFunc):
            if not value.is_polynomial():
                raise ValueError(f"display {name!r} is not a polynomial")
            return value.num.quo_ground(value.den.LC)
        if not isinstance(value, PolyElement):
            raise ValueError(f"display {name!r} is not a polynomial")
        return value

    def ratfunc(self, name: str) -> RatFunc:
        value = self[name]
        if isinstance(value, (Relation, tuple)):
            raise ValueError(f"display {name!r} is not a rational function")
        return RatFunc.coerce(value)

    def relation(self, name: str) -> Relation:
        value = self[name]
        if not isinstance(value, Relation):
            raise ValueError(f"display {name!r} is not a relation")
        return value

    def factored(self, name: str) -> Factored:
        value = self[name]
        if not isinstance(value, Factored):
            raise ValueError(f"display {name!r} is not a factorization")
        return value

    def recomputed(self, name: str) -> Optional[Factored]:
        """Recomputed factorization kept beside a display that misprints one, if any"""
        key = name + RECOMPUTED_SUFFIX
        if key not in self._entries:
            return None
        return self.factored(key)

    def chain(self, name: str) -> Tuple[RatFunc, ...]:
        value = self[name]
        if not (isinstance(value, tuple) and value and isinstance(value[0], RatFunc)):
            raise ValueError(f"display {name!r} is not a chain of equal expressions")
        return value

    def with_override(self, name: str, value: DisplayValue) -> "DisplayCatalog":
        """
        Copy with one entry replaced

        Raises:
            KeyError: If name is not in the catalog
        """
        if name not in self._entries:
            raise KeyError(f"no display named {name!r}")
        entries = dict(self._entries)
        entries[name] = value
        logger.debug(f"display {name} overridden")
        return DisplayCatalog(entries)

    def corrupted(self, name: str) -> "DisplayCatalog":
        """Copy with the sign of the leading term of a polynomial entry flipped"""
        p = self.poly(name)
        if not p:
            raise ValueError(f"display {name!r} is zero")
        monom, coeff = p.terms()[0]
        flipped = p - 2 * R.from_dict({monom: coeff})
        logger.debug(f"display {name} corrupted: {serialize(p - flipped)}")
        return self.with_override(name, flipped)


@lru_cache(maxsize=1)
def default_catalog() -> DisplayCatalog:
    """Shared default catalog (built once)"""
    return DisplayCatalog()
