"""
A(alpha, beta) as a truncated Taylor series

A is a signed sum of products of sin/cos of phased linear arguments. Each
product is expanded with ``series_product``; identical factors are expanded
once per build.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Mapping, Sequence, Tuple

from src.algebra.polyring import MultiPoly, T, relabel
from src.algebra.series import PhasedLinearArg, TruncSeries, cos_of, series_product, sin_of

logger = logging.getLogger(__name__)

# t2 -> t1, t4 -> t3, t6 -> t5
REDUCE_MAP: Dict[int, int] = {2: 1, 4: 3, 6: 5}

# Cyclic role shift by two subscripts per rotation
ROTATION_MAPS: Dict[int, Dict[int, int]] = {
    0: {},
    1: {1: 3, 2: 4, 3: 5, 4: 6, 5: 1, 6: 2},
    2: {1: 5, 2: 6, 3: 1, 4: 2, 5: 3, 6: 4},
}


@dataclass(frozen=True)
class TrigFactor:
    """sin or cos of a phased argument, raised to a power"""

    kind: str
    arg: PhasedLinearArg
    power: int = 1

    def __post_init__(self) -> None:
        if self.kind not in ("sin", "cos"):
            raise ValueError(f"kind must be 'sin' or 'cos', got {self.kind!r}")
        if self.power < 1:
            raise ValueError("power must be positive")

    def relabel(self, mapping: Mapping[int, int]) -> "TrigFactor":
        return TrigFactor(
            self.kind, self.arg.relabel(lambda p: relabel(p, mapping), mapping), self.power
        )


@dataclass(frozen=True)
class SeriesTerm:
    """coefficient * product of factors"""

    coefficient: int
    factors: Tuple[TrigFactor, ...]

    def relabel(self, mapping: Mapping[int, int]) -> "SeriesTerm":
        return SeriesTerm(self.coefficient, tuple(f.relabel(mapping) for f in self.factors))


def arg(u=0, v=0, k0: int = 0, phases: Mapping[int, int] = None) -> PhasedLinearArg:
    """PhasedLinearArg with the t_i phase multiples given as {i: m_i}"""
    m = [0] * 6
    for i, mi in (phases or {}).items():
        m[i - 1] = mi
    return PhasedLinearArg(u, v, k0, tuple(m))


def sin_(a: PhasedLinearArg, power: int = 1) -> TrigFactor:
    return TrigFactor("sin", a, power)


def cos_(a: PhasedLinearArg, power: int = 1) -> TrigFactor:
    return TrigFactor("cos", a, power)


def a_terms() -> Tuple[SeriesTerm, ...]:
    """The six products of A(alpha, beta) in the general parameters"""
    t1, t2, t3, t4, t5, t6 = (T(i) for i in range(1, 7))
    x1 = arg(u=t1)
    ab = arg(u=1, v=1)
    i_arg = arg(u=t4, v=t4 - t3, phases={4: -1})
    j_arg = arg(u=t5 - t6, v=t5, phases={5: -1})
    a = arg(u=1)
    b = arg(v=1)
    t4_arg = arg(u=-t4, v=-t4, phases={4: 1})
    g_arg = arg(u=t1, v=t2)
    c23 = arg(v=t2 + t3 - 1)
    t3b = arg(v=t3)
    t6a = arg(u=t6)
    c45 = arg(u=1 - t4 - t5, v=1 - t4 - t5, k0=-1, phases={4: 1, 5: 1})
    return (
        SeriesTerm(1, (sin_(x1, 2), sin_(ab, 2), sin_(i_arg, 2), sin_(j_arg, 2))),
        SeriesTerm(1, (sin_(a, 2), sin_(t4_arg, 2), sin_(g_arg, 2), sin_(j_arg, 2))),
        SeriesTerm(
            2,
            (
                sin_(x1),
                sin_(a),
                sin_(t4_arg),
                cos_(c23),
                sin_(g_arg),
                sin_(ab),
                sin_(i_arg),
                sin_(j_arg, 2),
            ),
        ),
        SeriesTerm(-1, (sin_(a, 2), sin_(t3b, 2), sin_(g_arg, 2), sin_(j_arg, 2))),
        SeriesTerm(-1, (sin_(b, 2), sin_(t6a, 2), sin_(g_arg, 2), sin_(i_arg, 2))),
        SeriesTerm(
            2,
            (
                sin_(a),
                sin_(t3b),
                sin_(b),
                sin_(t6a),
                cos_(c45),
                sin_(g_arg, 2),
                sin_(i_arg),
                sin_(j_arg),
            ),
        ),
    )


def build_series(terms: Sequence[SeriesTerm], N: int) -> TruncSeries:
    """Sum of the term products truncated at N"""
    cache: Dict[Tuple[str, PhasedLinearArg], TruncSeries] = {}

    def expand(factor: TrigFactor) -> TruncSeries:
        key = (factor.kind, factor.arg)
        if key not in cache:
            fn = sin_of if factor.kind == "sin" else cos_of
            cache[key] = fn(factor.arg, N)
        return cache[key]

    total = TruncSeries.zero(N)
    for term in terms:
        factors = [expand(f) for f in term.factors for _ in range(f.power)]
        total = total + series_product(factors, N).scale(term.coefficient)
    logger.debug(f"built series N={N}: {len(terms)} terms, {len(total)} coefficients")
    return total


def build_A(rotation: int, N: int) -> TruncSeries:
    """
    A(alpha, beta) with the roles of the vertices rotated

    Rotation 0 is A itself; rotations 1 and 2 shift every subscript by two
    (t1..t6 -> t3, t4, t5, t6, t1, t2) once or twice.

    Raises:
        ValueError: Unknown rotation or N < 4
    """
    if rotation not in ROTATION_MAPS:
        raise ValueError(f"rotation must be 0, 1 or 2, got {rotation}")
    if N < 4:
        raise ValueError(f"truncation degree must be at least 4, got {N}")
    terms = a_terms()
    mapping = ROTATION_MAPS[rotation]
    if mapping:
        terms = tuple(term.relabel(mapping) for term in terms)
    return build_series(terms, N)


def build_reduced_A(N: int) -> TruncSeries:
    """A with t2 = t1, t4 = t3, t6 = t5, substituted argument by argument"""
    if N < 4:
        raise ValueError(f"truncation degree must be at least 4, got {N}")
    return build_series(tuple(term.relabel(REDUCE_MAP) for term in a_terms()), N)


def reduce_coefficients(series: TruncSeries) -> TruncSeries:
    """Coefficientwise t2 -> t1, t4 -> t3, t6 -> t5 (also on s_i, c_i)"""
    return series.map_coeffs(lambda p: relabel(p, REDUCE_MAP))


def rotate_poly(p: MultiPoly, rotation: int) -> MultiPoly:
    return relabel(p, ROTATION_MAPS[rotation]) if ROTATION_MAPS[rotation] else p
