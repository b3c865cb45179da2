"""
The derivation steps S01..S37

Each step is a function ``(context, evidence) -> None`` that records its
sub-checks in the evidence ledger. Steps use the display catalog as their
source of formulas; a step that derives a formula compares the derived
object with the catalog entry.
"""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix, Rational

from src.algebra.elimination import (
    QuadExt,
    RatFunc,
    SignVerdict,
    cross_difference,
    quad_roots,
    solve_linear,
)
from src.algebra.polyring import (
    R,
    MultiPoly,
    S,
    T,
    c,
    canonical,
    coefficient_of,
    degree_in,
    evaluate,
    exact_divide,
    lift,
    match_factorization,
    permute_indices,
    rat,
    relabel,
    s,
    serialize,
    substitute,
    swap,
    term_coefficient,
    trig_values,
)
from src.algebra.series import TruncSeries
from src.arith.rational import format_rational, to_rational
from src.morley.build_a import reduce_coefficients, rotate_poly
from src.morley.context import DerivationContext
from src.morley.displays import Relation
from src.morley.evidence import Evidence
from src.morley.exact_trig import MORLEY_SUMMANDS, first_nonzero, morley_residual
from src.morley.params import CevianParams, admissibility_violation
from src.morley.registry import CheckKind, DerivationStep, StepRegistry
from src.oracle.certify import certify_exclusion
from src.oracle.geometry import (
    a_from_sides,
    closed_form_sides,
    construct_scene,
    eval_A_direct,
    scene_by_intersection,
    side_lengths,
)
from src.oracle.scan import grid_angles

logger = logging.getLogger(__name__)

NUMERIC_SEED = 20240611
NUMERIC_SAMPLES = 1000
GEOMETRY_TOLERANCE = 1e-12
A_RELATIVE_TOLERANCE = 1e-10
TRISECTOR_TOLERANCE = 1e-12

HALF = Fraction(1, 2)
THREE_ELEVENTHS = Fraction(3, 11)


# -- helpers -----------------------------------------------------------------


def _t():
    return T(1), T(3), T(5)


def _poly(value) -> MultiPoly:
    rf = RatFunc.coerce(value)
    if not rf.is_polynomial():
        raise ValueError("expected a polynomial side")
    return rf.num.quo_ground(rf.den.LC)


def _relation_poly(rel: Relation) -> MultiPoly:
    """lhs - rhs of a relation whose sides are polynomials"""
    return _poly(rel.lhs) - _poly(rel.rhs)


def _relabel_rf(f: RatFunc, mapping: Dict[int, int]) -> RatFunc:
    return RatFunc(relabel(f.num, mapping), relabel(f.den, mapping))


def _lift_rf(f: RatFunc) -> RatFunc:
    return RatFunc(lift(f.num), lift(f.den))


def _d3() -> MultiPoly:
    t1, t3, t5 = _t()
    return 2 * (t5 - t3) * (1 - t1) * S(5) - t5**2


def _series_mismatch(a: TruncSeries, b: TruncSeries) -> Optional[Tuple[int, int]]:
    """First (i, j) whose coefficients differ modulo the trig relations"""
    for d in range(min(a.N, b.N) + 1):
        for j in range(d + 1):
            diff = a.coeff(d - j, j) - b.coeff(d - j, j)
            if diff and canonical(diff):
                return d - j, j
    return None


def _random_scenes(count: int) -> List[Tuple[float, float, CevianParams]]:
    """Seeded admissible (alpha, beta, params) samples, trisector first"""
    rng = np.random.default_rng(NUMERIC_SEED)
    scenes = []
    for k in range(count):
        alpha, beta = rng.uniform(0.15, 1.35, size=2)
        if k % 4 == 0:
            params = CevianParams.trisector()
        else:
            params = CevianParams(tuple(float(v) for v in rng.uniform(0.05, 0.45, size=6)))
        scenes.append((float(alpha), float(beta), params))
    return scenes


def _trisector_values() -> Dict[str, float]:
    return trig_values({i: 1 / 3 for i in range(1, 7)})


def _linear_coefficients(p: MultiPoly, indices=(1, 3, 5)) -> Tuple[List[Fraction], Fraction]:
    zero = (0,) * R.ngens
    return [coefficient_of(p, T(i).monoms()[0]) for i in indices], coefficient_of(p, zero)


def _rational_roots(a, b, cc) -> List[Fraction]:
    roots = quad_roots(a, b, cc)
    return sorted(r.a for r in roots if not r.b)


def _matching_factors(
    ctx: DerivationContext, name: str, pair: Tuple[str, str], var: str
) -> Optional[Tuple[Tuple[MultiPoly, int], ...]]:
    """The displayed or recomputed factor list that reproduces the resultant"""
    computed = ctx.resultant(pair[0], pair[1], var)
    d = ctx.displays
    for candidate in (d.factored(name), d.recomputed(name)):
        if candidate is None:
            continue
        if match_factorization(computed, candidate.constant, candidate.factors) is not None:
            return candidate.factors
    return None


def _admissible_linear_roots(factors: Sequence[Tuple[MultiPoly, int]], var: str) -> List[Fraction]:
    """Roots in (0, 1) of the factors linear in var"""
    roots = []
    for f, _ in factors:
        if degree_in(f, var) == 1:
            root = to_rational(solve_linear(f, var).evaluate({}, convert=Fraction))
            if 0 < root < 1:
                roots.append(root)
    return sorted(roots)


# -- geometry and A ------------------------------------------------------------


def s01_cevian_lengths(ctx: DerivationContext, ev: Evidence) -> None:
    """Law-of-sines placement agrees with ray intersection"""
    worst = 0.0
    for alpha, beta, params in _random_scenes(NUMERIC_SAMPLES):
        a = construct_scene(alpha, beta, params)
        b = scene_by_intersection(alpha, beta, params)
        for name in ("H", "G", "I", "J"):
            worst = max(worst, float(np.linalg.norm(getattr(a, name) - getattr(b, name))))
    ev.check("points_agree", worst < GEOMETRY_TOLERANCE, max_error=worst, samples=NUMERIC_SAMPLES)


def s02_law_of_cosines(ctx: DerivationContext, ev: Evidence) -> None:
    worst = 0.0
    for alpha, beta, params in _random_scenes(NUMERIC_SAMPLES):
        closed = closed_form_sides(alpha, beta, params)
        measured = side_lengths(scene_by_intersection(alpha, beta, params))
        worst = max(worst, max(abs(x - y) for x, y in zip(closed, measured)))
    ev.check("sides_agree", worst < GEOMETRY_TOLERANCE, max_error=worst, samples=NUMERIC_SAMPLES)


def s03_cleared_difference(ctx: DerivationContext, ev: Evidence) -> None:
    """A equals (GI^2 - IJ^2) times the common denominator"""
    worst = 0.0
    for alpha, beta, params in _random_scenes(NUMERIC_SAMPLES):
        direct = float(eval_A_direct(alpha, beta, params))
        from_sides = a_from_sides(alpha, beta, params)
        scale = max(abs(direct), abs(from_sides), 1e-300)
        if scale > 1e-14:
            worst = max(worst, abs(direct - from_sides) / scale)
    ev.check("A_matches_sides", worst < A_RELATIVE_TOLERANCE, max_relative_error=worst)


def s04_alpha2beta2(ctx: DerivationContext, ev: Evidence) -> None:
    ev.proportional("alpha2beta2", ctx.a_series.coeff(2, 2), ctx.displays.poly("alpha2beta2"))


def s05_rotations(ctx: DerivationContext, ev: Evidence) -> None:
    """Rotated A gives (t3 - t4)^2 and (t5 - t6)^2"""
    display = ctx.displays.poly("alpha2beta2")
    for rotation, (i, j) in ((1, (3, 4)), (2, (5, 6))):
        coefficient = ctx.rotated(rotation).coeff(2, 2)
        ev.proportional(f"rotation{rotation}", coefficient, rotate_poly(display, rotation))
        ev.check(
            f"divisible_by_t{i}_minus_t{j}_squared",
            exact_divide(canonical(coefficient), (T(i) - T(j)) ** 2) is not None,
        )
    ev.note("rotation", "t1..t6 -> t3, t4, t5, t6, t1, t2")


def s06_reduced_series(ctx: DerivationContext, ev: Evidence) -> None:
    reduced = ctx.reduced_series
    from_full = reduce_coefficients(ctx.a_series)
    mismatch = _series_mismatch(reduced, from_full)
    ev.check("reduced_equals_substituted", mismatch is None, first_mismatch=mismatch)
    mismatch = _series_mismatch(reduced, ctx.displayed_reduced_series)
    ev.check("reduced_equals_display", mismatch is None, first_mismatch=mismatch)


def s07_degree_six(ctx: DerivationContext, ev: Evidence) -> None:
    """Degree-6 part is alpha^2 beta^2 (alpha + beta)^2 times a multiple of P"""
    series = ctx.reduced_series
    vanishing = [
        d for d in range(6) if all(not canonical(p) for p in series.homogeneous_coeffs(d))
    ]
    ev.note("vanishing_degrees", vanishing)
    for i, j in ((6, 0), (5, 1), (1, 5), (0, 6)):
        ev.is_zero(f"coeff_{i}_{j}", series.coeff(i, j))
    a42 = series.coeff(4, 2)
    ev.poly_identity("coeff_3_3", series.coeff(3, 3), 2 * a42)
    ev.poly_identity("coeff_2_4", series.coeff(2, 4), a42)
    ev.proportional("P", a42, ctx.displays.poly("P"))


def s08_system(ctx: DerivationContext, ev: Evidence) -> None:
    d = ctx.displays
    ev.poly_identity("P_is_s3_Eeq1", d.poly("P"), s(3) * d.poly("Eeq1"))
    ev.note("a42_cofactor", serialize(ctx.a42_cofactor))
    values = _trisector_values()
    for name, derived in ctx.system.items():
        ev.poly_identity(name, derived, d.poly(name))
        value = evaluate(d.poly(name), values)
        ev.check(f"{name}_at_trisector", abs(value) < TRISECTOR_TOLERANCE, value=value)


def s09_s3(ctx: DerivationContext, ev: Evidence) -> None:
    d = ctx.displays
    combination = lift(s(3) * d.poly("Eeq1") - s(5) * d.poly("Eeq2"))
    for name in ("S3_step1", "S3_step2", "S3_step3"):
        ev.poly_identity(name, combination, _relation_poly(d.relation(name)))
    ev.ratfunc_identity("S3", solve_linear(combination, S(3)), d.ratfunc("S3"), mod_trig=False)


def s10_s1(ctx: DerivationContext, ev: Evidence) -> None:
    d = ctx.displays
    combination = lift(s(1) * d.poly("Eeq3") - s(5) * d.poly("Eeq4"))
    ev.ratfunc_identity("S1", solve_linear(combination, S(1)), d.ratfunc("S1"), mod_trig=False)
    ev.ratfunc_identity(
        "S1_is_swapped_S3", _relabel_rf(d.ratfunc("S3"), swap(1, 3)), d.ratfunc("S1"), mod_trig=False
    )


def s11_alpha5beta2(ctx: DerivationContext, ev: Evidence) -> None:
    ev.proportional("Eeq7", ctx.reduced_series.coeff(5, 2), ctx.displays.poly("Eeq7"))


def s12_t3_half(ctx: DerivationContext, ev: Evidence) -> None:
    """t3 = 1/2 leads to t4 + t5 = 1"""
    d = ctx.displays
    t1, t3, t5 = _t()
    ev.poly_identity(
        "Eeq1_minus_s3_Dis1",
        d.poly("Eeq1") - s(3) * d.poly("Dis1"),
        -2 * t3 * t5 * c(3) * c(5) * s(5),
        mod_trig=False,
    )
    at_half = substitute(d.poly("Eeq7"), {"t3": rat(1, 2), "s3": 1, "c3": 0})
    ev.proportional("Eeq7_t3_half", at_half, d.poly("Eeq7_t3_half"))
    # c5 = 0 and t5 = 1/2 both pin t5 = 1/2; t4 = t3
    violation = admissibility_violation((None, None, HALF, HALF, HALF, None))
    ev.check("inadmissible", violation is not None, violation=violation)


def s13_t5_half(ctx: DerivationContext, ev: Evidence) -> None:
    d = ctx.displays
    ev.poly_identity("Dis3_is_swapped_Eeq7", permute_indices(d.poly("Eeq7"), swap(3, 5)), d.poly("Dis3"))
    at_half = substitute(d.poly("Dis3"), {"t5": rat(1, 2), "s5": 1, "c5": 0})
    ev.proportional("Dis3_t5_half", at_half, d.poly("Dis3_t5_half"))
    violation = admissibility_violation((None, None, HALF, HALF, HALF, None))
    ev.check("inadmissible", violation is not None, violation=violation)


def s14_cosine_products(ctx: DerivationContext, ev: Evidence) -> None:
    d = ctx.displays
    t1, t3, t5 = _t()
    factors = {
        "E1": ("Eeq1", -2 * t3 * t5 * s(5)),
        "E4": ("Eeq4", -2 * t5 * t1 * s(1)),
        "E5": ("Eeq5", -2 * t1 * t3 * s(3)),
    }
    for name, (equation, factor) in factors.items():
        ev.ratfunc_identity(
            name, RatFunc(d.poly(equation)), RatFunc(factor) * d.relation(name).residual()
        )
    e1, e4, e5 = (d.relation(name) for name in ("E1", "E4", "E5"))
    product = d.relation("product145")
    ev.poly_identity(
        "product145_lhs", _poly(e1.lhs) * _poly(e4.lhs) * _poly(e5.lhs), _poly(product.lhs), mod_trig=False
    )
    ev.ratfunc_identity(
        "product145_rhs",
        RatFunc.coerce(e1.rhs) * e4.rhs * e5.rhs,
        RatFunc.coerce(product.rhs),
        mod_trig=False,
    )


def s15_cosine_squares(ctx: DerivationContext, ev: Evidence) -> None:
    d = ctx.displays
    for base in ("E1", "E4", "E5"):
        rel, sq = d.relation(base), d.relation(f"{base}sq")
        ev.poly_identity(f"{base}sq_lhs", _poly(rel.lhs) ** 2, _poly(sq.lhs), mod_trig=False)
        ev.ratfunc_identity(
            f"{base}sq_rhs", RatFunc.coerce(rel.rhs) ** 2, RatFunc.coerce(sq.rhs), mod_trig=False
        )
    product = RatFunc.coerce(d.relation("product145").rhs)
    for name, square in (("c1sq1", "E1sq"), ("c3sq1", "E4sq"), ("c5sq1", "E5sq")):
        ev.ratfunc_identity(
            name, product / RatFunc.coerce(d.relation(square).rhs), d.ratfunc(name), mod_trig=False
        )


def s16_cosine_closed_forms(ctx: DerivationContext, ev: Evidence) -> None:
    d = ctx.displays
    bindings = {"S1": d.ratfunc("S1"), "S3": d.ratfunc("S3")}
    for source, target in (("c1sq1", "C1"), ("c3sq1", "C3"), ("c5sq1", "C5")):
        closed = _lift_rf(d.ratfunc(source)).substitute(bindings)
        ev.ratfunc_identity(target, closed, d.ratfunc(target))


def s17_right_chain(ctx: DerivationContext, ev: Evidence) -> None:
    """Each line of the S5eq1right1 chain equals the next"""
    d = ctx.displays
    chain = d.chain("S5eq1right1")
    if len(chain) != 5:
        ev.check("chain_length", False, length=len(chain))
        return
    l0, l1, l2, l3, l4 = chain
    ev.ratfunc_identity("line0_line1", l0, l1)
    ev.ratfunc_identity("line1_line2", l1 - l2, RatFunc(-s(3)) * d.relation("E1").residual())
    bindings = {"S3": d.ratfunc("S3")}
    for k, (a, b) in enumerate(((l2, l3), (l3, l4)), start=2):
        ev.ratfunc_identity(f"line{k}_line{k + 1}", a.substitute(bindings), b.substitute(bindings))


def s18_right_second(ctx: DerivationContext, ev: Evidence) -> None:
    d = ctx.displays
    rel = d.relation("S5eq1right2")
    lhs = RatFunc.coerce(rel.lhs).substitute({"S3": d.ratfunc("S3")})
    ev.ratfunc_identity("S5eq1right2", lhs, RatFunc.coerce(rel.rhs), mod_trig=False)


def s19_divide_out(ctx: DerivationContext, ev: Evidence) -> None:
    """S5eq1 is Dis3 rearranged; dividing by c5 s5 t3 gives S5eq2"""
    d = ctx.displays
    t1, t3, t5 = _t()
    eq1 = d.relation("S5eq1")
    ev.poly_identity("S5eq1_is_Dis3", _relation_poly(eq1), -d.poly("Dis3"), mod_trig=False)

    right = d.relation("S5eq1right")
    second = d.relation("S5eq1right2")
    l0, l4 = d.chain("S5eq1right1")[0], d.chain("S5eq1right1")[-1]
    three_halves = rat(3, 2)
    ev.ratfunc_identity(
        "S5eq1right_lhs",
        RatFunc.coerce(right.lhs),
        RatFunc(c(5)) * (RatFunc(three_halves * t3 * t5) * l0 + RatFunc(s(5)) * RatFunc.coerce(second.lhs)),
    )
    ev.ratfunc_identity(
        "S5eq1right_rhs",
        RatFunc(c(5)) * (RatFunc(three_halves * t3 * t5) * l4 + RatFunc(s(5)) * RatFunc.coerce(second.rhs)),
        RatFunc.coerce(right.rhs),
    )
    ev.poly_identity("S5eq1_rhs_matches", _poly(eq1.rhs), _poly(right.lhs))

    eq2 = d.relation("S5eq2")
    factor = RatFunc(c(5) * s(5) * t3)
    ev.ratfunc_identity("S5eq2_lhs", RatFunc.coerce(eq1.lhs), factor * eq2.lhs)
    ev.ratfunc_identity("S5eq2_rhs", RatFunc.coerce(right.rhs), factor * eq2.rhs)
    ev.note("nonzero_divisor", "c5 != 0 since t5 != 1/2; s5, t3 > 0 on the admissible domain")


def s20_s5eq1left(ctx: DerivationContext, ev: Evidence) -> None:
    d = ctx.displays
    ratio = RatFunc.coerce(d.relation("E5").rhs) / RatFunc.coerce(d.relation("E4").rhs)
    ev.ratfunc_identity("c3_over_c5", ratio, d.ratfunc("c3_over_c5"))
    combined = RatFunc(S(3)) + RatFunc(s(3) * s(5)) * d.ratfunc("c3_over_c5")
    combined = _lift_rf(combined).substitute({"S1": d.ratfunc("S1"), "S3": d.ratfunc("S3")})
    ev.ratfunc_identity("S5eq1left", combined, d.ratfunc("S5eq1left"))


def s21_quadratic(ctx: DerivationContext, ev: Evidence) -> None:
    """Substituting S5eq1left into S5eq2 gives a quadratic in S5"""
    d = ctx.displays
    t1, t3, t5 = _t()
    eq2 = d.relation("S5eq2")
    outer = RatFunc(-rat(3, 2) * (t3 + t5 - 1))
    ev.ratfunc_identity(
        "S5eq2_lhs_form",
        RatFunc.coerce(eq2.lhs),
        outer * (RatFunc(S(3)) + RatFunc(s(3) * s(5) * c(3), c(5))),
        mod_trig=False,
    )
    scale = RatFunc(4 * _d3(), t3)
    intermediate = d.relation("S5eq_intermediate")
    ev.ratfunc_identity(
        "intermediate_lhs", outer * d.ratfunc("S5eq1left") * scale, RatFunc.coerce(intermediate.lhs), mod_trig=False
    )
    ev.ratfunc_identity(
        "intermediate_rhs", RatFunc.coerce(eq2.rhs) * scale, RatFunc.coerce(intermediate.rhs), mod_trig=False
    )
    numerator = cross_difference(RatFunc.coerce(intermediate.lhs), RatFunc.coerce(intermediate.rhs))
    ev.rational_multiple("Quad", numerator, d.poly("Quad"))


def s22_swapped_quadratic(ctx: DerivationContext, ev: Evidence) -> None:
    d = ctx.displays
    ev.poly_identity(
        "QuadSwap", permute_indices(d.poly("Quad"), swap(1, 3)), d.poly("QuadSwap"), mod_trig=False
    )


def s23_difference(ctx: DerivationContext, ev: Evidence) -> None:
    d = ctx.displays
    difference = d.poly("Quad") - d.poly("QuadSwap")
    quotient = exact_divide(difference, d.poly("S5eq3"))
    single = quotient is not None and len(quotient) == 1 and quotient.degree(S(5)) == 1
    if single:
        ev.constant("S5eq3", term_coefficient(quotient))
    ev.check(
        "difference_is_monomial_times_S5eq3",
        single,
        quotient=None if quotient is None else serialize(quotient),
    )
    ev.poly_identity("S3eq2", permute_indices(d.poly("S5eq3"), swap(3, 5)), d.poly("S3eq2"), mod_trig=False)
    ev.poly_identity("S1eq2", permute_indices(d.poly("S5eq3"), swap(1, 5)), d.poly("S1eq2"), mod_trig=False)


def s24_t1_equals_t3(ctx: DerivationContext, ev: Evidence) -> None:
    """t1 = t3 != t5; a vanishing S5 coefficient forces t1 = t5 = 3/11"""
    d = ctx.displays
    t1, t3, t5 = _t()
    same = {3: 1}
    b3, b5 = d.poly("B3"), d.poly("B5")
    s3eq3 = d.relation("S3eq3")
    ev.poly_identity("B3", relabel(d.poly("K3"), same), b3, mod_trig=False)
    ev.poly_identity(
        "S3eq3", relabel(d.poly("S3eq2"), same), (t1 - t5) * _relation_poly(s3eq3), mod_trig=False
    )

    level = 7 * t1 + 4 * t5 - 3
    d1 = relabel(2 * (t5 - t1) * (1 - t3) * S(5) - t5**2, same)
    cleared = b3 * (-(t1**2) * S(5)) - t1**2 * level * d1
    ev.poly_identity(
        "S5t1t3", cleared, -(t1**2) * _relation_poly(d.relation("S5t1t3")), mod_trig=False
    )

    ev.ratfunc_identity("t5", solve_linear(level, T(5)), d.ratfunc("t5"), mod_trig=False)
    pinned = RatFunc(b5).substitute({"t5": d.ratfunc("t5")})
    ev.rational_multiple("B5_at_t5", _poly(pinned), d.poly("B5_at_t5"))
    ev.sign("131t1^2-42t1+7_positive", 131 * t1**2 - 42 * t1 + 7, SignVerdict.POSITIVE)
    t5_value = d.ratfunc("t5").evaluate({"t1": THREE_ELEVENTHS}, convert=Fraction)
    ev.check("t5_equals_t1", t5_value == THREE_ELEVENTHS, t5=format_rational(t5_value))


def s25_t1_equals_t3_forms(ctx: DerivationContext, ev: Evidence) -> None:
    d = ctx.displays
    same = {3: 1}
    s5 = solve_linear(_relation_poly(d.relation("S5t1t3")), S(5))
    ev.ratfunc_identity("S5t1eqt3", s5, d.ratfunc("S5t1eqt3"), mod_trig=False)
    bindings = {"S5": d.ratfunc("S5t1eqt3")}
    for source, target in (("S1", "S1t1eqt3"), ("C1", "C1t1t3"), ("C5", "C5t1t3")):
        derived = _relabel_rf(d.ratfunc(source), same).substitute(bindings)
        ev.ratfunc_identity(target, derived, d.ratfunc(target), mod_trig=False)


def s26_eliminate(ctx: DerivationContext, ev: Evidence) -> None:
    """S + C = 1 gives q1, q5; their resultants factor as displayed"""
    d = ctx.displays
    for name, (sine, cosine) in (("q1", ("S1t1eqt3", "C1t1t3")), ("q5", ("S5t1eqt3", "C5t1t3"))):
        total = d.ratfunc(sine) + d.ratfunc(cosine) - 1
        numerator, _ = total.num.cancel(total.den)
        ev.rational_multiple(name, numerator, d.poly(name))
    for name, var in (("R_q1_q5_t5", "t5"), ("R_q1_q5_t1", "t1")):
        ev.factorization_with_erratum(
            name, ctx.resultant("q1", "q5", var), d.factored(name), d.recomputed(name), 0, 1
        )


def s27_candidates(ctx: DerivationContext, ev: Evidence) -> None:
    """Candidates from the linear factors of both resultants; none is a solution"""
    roots: Dict[str, List[Fraction]] = {}
    for name, eliminated, var in (("R_q1_q5_t5", "t5", "t1"), ("R_q1_q5_t1", "t1", "t5")):
        factors = _matching_factors(ctx, name, ("q1", "q5"), eliminated)
        if not ev.check(f"{name}_factored", factors is not None):
            return
        roots[var] = _admissible_linear_roots(factors, var)
        for f, _ in factors:
            if degree_in(f, var) > 1:
                ev.sign(f"{name}:{serialize(f)}", f, SignVerdict.POSITIVE, 0, 1)
    ev.note("linear_roots", {var: [str(r) for r in rs] for var, rs in roots.items()})

    # t2 = t1 = t3 and t2 + t3 < 1
    pairs = [(a, b) for a in roots["t1"] for b in roots["t5"] if 2 * a < 1 and a != b]
    ev.check("five_candidates", len(pairs) == 5, pairs=[[str(a), str(b)] for a, b in pairs])

    expected = {
        Fraction(7, 38): {Fraction(147, 211), Fraction(5929, 46828), Fraction(539, 4283)},
        THREE_ELEVENTHS: {Fraction(17328, 7199), Fraction(144, 229)},
    }
    s1 = ctx.displays.ratfunc("S1t1eqt3")
    computed: Dict[Fraction, set] = {}
    enclosures = []
    for a, b in pairs:
        value = to_rational(s1.evaluate({"t1": a, "t5": b}, convert=Fraction))
        computed.setdefault(a, set()).add(value)
        excluded, interval = certify_exclusion(a.numerator, a.denominator, value, ctx.precision_bits)
        enclosures.append({"t1": str(a), "t5": str(b), "S1": str(value), **interval.to_dict()})
        ev.check(f"excluded_{a}_{b}", excluded, S1=str(value), width=float(interval.width))
    logger.debug(f"{len(pairs)} candidate pairs enclosed at {ctx.precision_bits} bits")
    ev.check(
        "candidate_values",
        computed == expected,
        computed={str(k): sorted(str(v) for v in vs) for k, vs in computed.items()},
    )
    ev.note("enclosures", enclosures)


def s28_all_equal(ctx: DerivationContext, ev: Evidence) -> None:
    """t1 = t3 = t5: only t = 1/3 survives"""
    d = ctx.displays
    t1 = T(1)
    equal = {3: 1, 5: 1}
    pythagoras = {"C1": 1 - S(1)}

    eeq1 = lift(relabel(d.poly("Eeq1"), equal), cosines=True)
    reduced = exact_divide(eeq1, s(1))
    eeq7 = lift(relabel(d.poly("Eeq7"), equal), cosines=True)
    reduced7 = exact_divide(eeq7, s(1) * c(1))
    if reduced is None or reduced7 is None:
        ev.check("common_factor", False, Eeq1=reduced is not None, Eeq7=reduced7 is not None)
        return
    first = solve_linear(substitute(reduced, pythagoras), S(1))
    second = solve_linear(substitute(reduced7, pythagoras), S(1))
    ev.ratfunc_identity("S1first", first, d.ratfunc("S1first"), mod_trig=False)
    ev.ratfunc_identity("S2second", second, d.ratfunc("S2second"), mod_trig=False)
    ev.sign("7t1^2-4t1+1", 7 * t1**2 - 4 * t1 + 1, SignVerdict.POSITIVE)
    ev.sign("13t1^2-9t1+2", 13 * t1**2 - 9 * t1 + 2, SignVerdict.POSITIVE)

    difference = cross_difference(d.ratfunc("S1first"), d.ratfunc("S2second"))
    ev.rational_multiple("S1_difference", difference, t1**2 * (6 * t1**2 - 5 * t1 + 1))
    roots = _rational_roots(6, -5, 1)
    ev.check("roots", roots == [Fraction(1, 3), HALF], roots=[str(r) for r in roots])
    violation = admissibility_violation((HALF,) * 6)
    ev.check("half_inadmissible", violation is not None, violation=violation)
    third = Fraction(1, 3)
    ev.check("third_admissible", admissibility_violation((third,) * 6) is None)


def s29_trisector_identity(ctx: DerivationContext, ev: Evidence) -> None:
    residual = morley_residual(MORLEY_SUMMANDS)
    witness = first_nonzero(residual)
    ev.check(
        "laurent_zero",
        residual.is_zero(),
        summands=len(MORLEY_SUMMANDS),
        first_nonzero=None if witness is None else [list(witness[0]), str(witness[1])],
    )
    cells = grid_angles(10)
    alphas = np.array([a for a, _ in cells])
    betas = np.array([b for _, b in cells])
    worst = float(np.max(np.abs(eval_A_direct(alphas, betas, CevianParams.trisector()))))
    ev.check("numeric_zero", worst < TRISECTOR_TOLERANCE, max_abs=worst, cells=len(cells))


def s30_all_distinct(ctx: DerivationContext, ev: Evidence) -> None:
    """t1, t3, t5 distinct: the coefficients of the S_i cannot all vanish"""
    d = ctx.displays
    t1, t3, t5 = _t()
    for eq, last, factor in (
        ("S5eq3", "S5eqlast", t1 - t3),
        ("S3eq2", "S3eqlast", t1 - t5),
        ("S1eq2", "S1eqlast", t5 - t3),
    ):
        ev.poly_identity(last, d.poly(eq), factor * _relation_poly(d.relation(last)), mod_trig=False)

    l5, l3, l1 = d.poly("L5"), d.poly("L3"), d.poly("L1")
    ev.poly_identity("L3_minus_L1", l3 - l1, t1 - t3, mod_trig=False)
    ev.poly_identity("L5_minus_L3", l5 - l3, t3 - t5, mod_trig=False)
    ev.poly_identity("L5_minus_L1", l5 - l1, t1 - t5, mod_trig=False)

    rows, rhs = [], []
    for form in (l5, l3, l1):
        coefficients, constant = _linear_coefficients(form)
        rows.append([Rational(q.numerator, q.denominator) for q in coefficients])
        rhs.append(Rational(-constant.numerator, constant.denominator))
    solution = Matrix(rows).LUsolve(Matrix(rhs))
    ev.check(
        "all_vanish_gives_3_11",
        all(value == Rational(3, 11) for value in solution),
        solution=[str(value) for value in solution],
    )


def s31_squares(ctx: DerivationContext, ev: Evidence) -> None:
    d = ctx.displays
    for last, var, name in (
        ("S5eqlast", S(5), "s5square"),
        ("S3eqlast", S(3), "s3squareV1"),
        ("S1eqlast", S(1), "s1squareV2"),
    ):
        ev.ratfunc_identity(name, solve_linear(_relation_poly(d.relation(last)), var), d.ratfunc(name), mod_trig=False)
    bindings = {"S5": d.ratfunc("s5square")}
    ev.ratfunc_identity("s1square", d.ratfunc("S1").substitute(bindings), d.ratfunc("s1square"), mod_trig=False)
    ev.ratfunc_identity("s3square", d.ratfunc("S3").substitute(bindings), d.ratfunc("s3square"), mod_trig=False)


def s32_cubics(ctx: DerivationContext, ev: Evidence) -> None:
    d = ctx.displays
    t1, t3, t5 = _t()
    ev.rational_multiple(
        "cubic1",
        cross_difference(d.ratfunc("s1squareV2"), d.ratfunc("s1square")),
        t1**2 * (t1 - t5) * d.poly("cubic1"),
    )
    ev.rational_multiple(
        "cubic3",
        cross_difference(d.ratfunc("s3squareV1"), d.ratfunc("s3square")),
        t3**2 * (t3 - t5) * d.poly("cubic3"),
    )
    ev.rational_multiple("cubic_sum", d.poly("cubic1") + d.poly("cubic3"), d.poly("cubic_sum"))


def s33_case_a(ctx: DerivationContext, ev: Evidence) -> None:
    d = ctx.displays
    ev.ratfunc_identity("t5eq", solve_linear(d.poly("L1"), T(5)), d.ratfunc("t5eq"), mod_trig=False)
    pinned = RatFunc(d.poly("K1")).substitute({"t5": d.ratfunc("t5eq")})
    ev.rational_multiple("p1", _poly(pinned), d.poly("p1"))


def s34_case_a_squares(ctx: DerivationContext, ev: Evidence) -> None:
    d = ctx.displays
    t5 = {"t5": d.ratfunc("t5eq")}
    ev.ratfunc_identity("CaseAS5", d.ratfunc("s5square").substitute(t5), d.ratfunc("CaseAS5"), mod_trig=False)
    ev.ratfunc_identity("CaseAS3", d.ratfunc("s3squareV1").substitute(t5), d.ratfunc("CaseAS3"), mod_trig=False)
    s3 = d.ratfunc("S3").substitute({"t5": d.ratfunc("t5eq"), "S5": d.ratfunc("CaseAS5")})
    ev.ratfunc_identity("AS3v2", s3, d.ratfunc("AS3v2"), mod_trig=False)
    ev.rational_multiple(
        "CaseAt1t3second",
        cross_difference(d.ratfunc("CaseAS3"), d.ratfunc("AS3v2")),
        d.poly("CaseAt1t3second"),
    )


def s35_case_a_first(ctx: DerivationContext, ev: Evidence) -> None:
    """-3 + 3t1 + 8t3 = 0 forces t5 = t3"""
    d = ctx.displays
    t1, t3, t5 = _t()
    ev.ratfunc_identity(
        "CaseAit3", solve_linear(-3 + 3 * t1 + 8 * t3, T(3)), d.ratfunc("CaseAit3"), mod_trig=False
    )
    pinned = _poly(RatFunc(d.poly("p1")).substitute({"t3": d.ratfunc("CaseAit3")}))
    ev.rational_multiple("p1_at_CaseAit3", pinned, d.poly("p1_at_CaseAit3"))

    larger, smaller = quad_roots(57, -36, -5)
    ev.check("negative_root", smaller.sign() < 0, root=str(smaller))
    ev.check("root_value", larger == QuadExt(Fraction(6, 19), Fraction(1, 57), 609), root=str(larger))
    t3_value = (1 - larger) * Fraction(3, 8)
    ev.check(
        "t3_value",
        t3_value == QuadExt(Fraction(39, 152), Fraction(-1, 152), 609),
        t3=str(t3_value),
    )
    ev.check("t3_at_3_11", (1 - THREE_ELEVENTHS) * Fraction(3, 8) == THREE_ELEVENTHS)
    t5_minus_t3 = RatFunc(d.ratfunc("t5eq").num - t3 * d.ratfunc("t5eq").den)
    gap = t5_minus_t3.substitute({"t3": d.ratfunc("CaseAit3")})
    ev.check("t5_equals_t3", not gap.num, difference=serialize(gap.num))


def s36_case_a_second(ctx: DerivationContext, ev: Evidence) -> None:
    d = ctx.displays
    t1, t3 = T(1), T(3)
    for name, var in (("R_p1_p3_t3", "t3"), ("R_p1_p3_t1", "t1")):
        ev.factorization_with_erratum(
            name, ctx.resultant("p1", "p3", var), d.factored(name), d.recomputed(name), 0, 1
        )
    ev.sign("t1+3", t1 + 3, SignVerdict.POSITIVE, 0, 1)
    ev.sign("131t1^2-42t1+7", 131 * t1**2 - 42 * t1 + 7, SignVerdict.POSITIVE)
    ev.sign("131t3^2-42t3+7", 131 * t3**2 - 42 * t3 + 7, SignVerdict.POSITIVE)
    ev.sign("131t3^2-123t3+40", 131 * t3**2 - 123 * t3 + 40, SignVerdict.POSITIVE)
    ev.sign("5t3^2-15t3-8", 5 * t3**2 - 15 * t3 - 8, SignVerdict.NEGATIVE, 0, 1)
    ev.note("remaining_root", {"t1": "3/11", "t3": "3/11"})


def s37_case_b(ctx: DerivationContext, ev: Evidence) -> None:
    """L5 = 0 turns S5eqlast into K5 * S5 = 0"""
    d = ctx.displays
    l5 = d.poly("L5")
    t5 = solve_linear(l5, T(5))
    ev.check("L5_solved", not RatFunc(l5).substitute({"t5": t5}).num)
    rel = d.relation("S5eqlast")
    rhs = RatFunc.coerce(rel.rhs).substitute({"t5": t5})
    ev.check("rhs_vanishes", not rhs.num, rhs=serialize(rhs.num))
    lhs = RatFunc.coerce(rel.lhs).substitute({"t5": t5})
    k5 = RatFunc(d.poly("K5")).substitute({"t5": t5})
    ev.ratfunc_identity("lhs_is_K5_S5", lhs, k5 * S(5), mod_trig=False)
    ev.check("K5_nonzero", bool(k5.num), K5=serialize(k5.num), denominator=serialize(k5.den))


# -- registry ------------------------------------------------------------------

_STEPS: Tuple[DerivationStep, ...] = (
    DerivationStep("S01", "Law-of-sines lengths place G, I, J on the cevian rays", CheckKind.NUMERIC,
                   "a consequence of the law of sines", s01_cevian_lengths),
    DerivationStep("S02", "GI, IJ, JG by the law of cosines match coordinates", CheckKind.NUMERIC,
                   "Applying the law of cosine we get", s02_law_of_cosines),
    DerivationStep("S03", "A = (GI^2 - IJ^2) times the common denominator", CheckKind.NUMERIC,
                   "If $GI=IJ$ then $GI^2=IJ^2$", s03_cleared_difference),
    DerivationStep("S04", "alpha^2 beta^2 coefficient is a multiple of (c4^2-1)(c5^2-1)(t1-t2)^2",
                   CheckKind.POLY_IDENTITY, "Calculating the coefficient of $\\alpha^{2}\\beta^{2}$",
                   s04_alpha2beta2, min_degree=4, primary_constant="alpha2beta2"),
    DerivationStep("S05", "rotated A gives t3 = t4 and t5 = t6", CheckKind.POLY_IDENTITY,
                   "In the same way, $IJ=JG$ implies", s05_rotations,
                   depends_on=("S04",), min_degree=4, primary_constant="rotation1"),
    DerivationStep("S06", "reduced A matches its display", CheckKind.SERIES,
                   "Substituting (eq:t12), (eq:t34) and (eq:t56)", s06_reduced_series, min_degree=8),
    DerivationStep("S07", "degree-6 part is alpha^2 beta^2 (alpha+beta)^2 times a multiple of P",
                   CheckKind.SERIES, "The coefficient of $\\alpha^{2}\\beta^{2}(\\alpha+\\beta)^{2}$",
                   s07_degree_six, depends_on=("S06",), min_degree=6, primary_constant="P"),
    DerivationStep("S08", "Eeq1..Eeq6 as displayed", CheckKind.POLY_IDENTITY,
                   "we can write the following system of equations", s08_system,
                   depends_on=("S07",), min_degree=6),
    DerivationStep("S09", "eq:S3 from Eeq1 and Eeq2", CheckKind.RATFUNC,
                   "Multiplying (eq:Eeq1) by $s_{3}$", s09_s3, depends_on=("S08",)),
    DerivationStep("S10", "eq:S1 from Eeq3 and Eeq4", CheckKind.RATFUNC,
                   "Similarly, we obtain from", s10_s1, depends_on=("S08",)),
    DerivationStep("S11", "alpha^5 beta^2 coefficient is a multiple of Eeq7", CheckKind.SERIES,
                   "Calculating the coefficient of $\\alpha^{5}\\beta^{2}$", s11_alpha5beta2,
                   depends_on=("S06",), min_degree=8, primary_constant="Eeq7"),
    DerivationStep("S12", "t3 = 1/2 gives a multiple of (t5 - 1/2) c5, inadmissible",
                   CheckKind.POLY_IDENTITY, "Substituting $t_{3}=1/2$ into (eq:Eeq7)", s12_t3_half,
                   depends_on=("S08", "S11"), primary_constant="Eeq7_t3_half"),
    DerivationStep("S13", "t5 = 1/2 via Dis3, inadmissible", CheckKind.POLY_IDENTITY,
                   "Swapping $3$ and $5$ in (eq:Eeq7)", s13_t5_half,
                   depends_on=("S11",), primary_constant="Dis3_t5_half"),
    DerivationStep("S14", "E1, E4, E5 and their product", CheckKind.POLY_IDENTITY,
                   "Taking the product of equations we obtain", s14_cosine_products, depends_on=("S08",)),
    DerivationStep("S15", "squares E1sq, E4sq, E5sq and c_i^2", CheckKind.POLY_IDENTITY,
                   "Taking the squares of equations", s15_cosine_squares, depends_on=("S14",)),
    DerivationStep("S16", "closed forms of C1, C3, C5", CheckKind.RATFUNC,
                   "Denote $C_{1}:=c_{1}^{2}$", s16_cosine_closed_forms,
                   depends_on=("S09", "S10", "S15")),
    DerivationStep("S17", "the S5eq1right1 chain", CheckKind.RATFUNC,
                   "Using (eq:E1) and (eq:S3) we have", s17_right_chain, depends_on=("S09", "S14")),
    DerivationStep("S18", "eq:S5eq1right2", CheckKind.RATFUNC,
                   "Using (eq:S3) we have", s18_right_second, depends_on=("S09",)),
    DerivationStep("S19", "eq:S5eq1right and eq:S5eq2", CheckKind.RATFUNC,
                   "dividing by $c_{5}s_{5}t_{3}\\neq0$", s19_divide_out,
                   depends_on=("S13", "S17", "S18")),
    DerivationStep("S20", "eq:S5eq1left", CheckKind.RATFUNC,
                   "Using (eq:S3) and (eq:S1) we get", s20_s5eq1left, depends_on=("S09", "S10", "S14")),
    DerivationStep("S21", "quadratic in S5", CheckKind.RATFUNC,
                   "From this equality we can derive", s21_quadratic,
                   depends_on=("S19", "S20"), primary_constant="Quad"),
    DerivationStep("S22", "quadratic with 1 and 3 swapped", CheckKind.POLY_IDENTITY,
                   "Swapping the indices $1$ and $3$", s22_swapped_quadratic, depends_on=("S21",)),
    DerivationStep("S23", "difference of the quadratics factors through eq:S5eq3", CheckKind.POLY_IDENTITY,
                   "Since the right hand sides are equal", s23_difference,
                   depends_on=("S22",), primary_constant="S5eq3"),
    DerivationStep("S24", "t1 = t3 != t5: eq:S3eq3, eq:S5t1t3; zero coefficient gives t1 = t5 = 3/11",
                   CheckKind.POLY_IDENTITY, "which contradicts the assumption $t_{1}\\neq t_{5}$",
                   s24_t1_equals_t3, depends_on=("S10", "S23"), primary_constant="B5_at_t5"),
    DerivationStep("S25", "eq:S5t1eqt3, eq:S1t1eqt3, eq:C1t1t3, eq:C5t1t3", CheckKind.RATFUNC,
                   "Using (eq:S5t1eqt3) (and $t_{1}=t_{3}$", s25_t1_equals_t3_forms,
                   depends_on=("S16", "S24")),
    DerivationStep("S26", "q1, q5 and both resultant factorizations", CheckKind.RESULTANT,
                   "To eliminate $t_{5}$ from the system", s26_eliminate,
                   depends_on=("S25",), primary_constant="R_q1_q5_t5"),
    DerivationStep("S27", "positivity certificates and the five excluded candidates",
                   CheckKind.SIGN_CERTIFICATE, "none of them is a solution of our original problem",
                   s27_candidates, depends_on=("S26",)),
    DerivationStep("S28", "t1 = t3 = t5: S1first, S2second, t1 in {1/3, 1/2}", CheckKind.RATFUNC,
                   "The last one is impossible, because", s28_all_equal, depends_on=("S08", "S11")),
    DerivationStep("S29", "A vanishes identically at t = 1/3", CheckKind.EXACT_TRIG,
                   "a very tedious calculation gives", s29_trisector_identity, depends_on=("S28",)),
    DerivationStep("S30", "all distinct: eq:S5eqlast, eq:S3eqlast, eq:S1eqlast", CheckKind.POLY_IDENTITY,
                   "whose solution is", s30_all_distinct, depends_on=("S23",)),
    DerivationStep("S31", "eq:s5square, eq:s3squareV1, eq:s1squareV2, eq:s1square, eq:s3square",
                   CheckKind.RATFUNC, "Using (eq:s5square) we get from", s31_squares,
                   depends_on=("S09", "S10", "S30")),
    DerivationStep("S32", "two cubic identities and their sum", CheckKind.POLY_IDENTITY,
                   "Summing the left and right sides we have", s32_cubics,
                   depends_on=("S31",), primary_constant="cubic_sum"),
    DerivationStep("S33", "Case A: eq:t5eq and eq:CaseAt1t3first", CheckKind.POLY_IDENTITY,
                   "Substituting (eq:t5eq) into (eq:CaseAt1t3t5)", s33_case_a,
                   depends_on=("S32",), primary_constant="p1"),
    DerivationStep("S34", "eq:CaseAS5, eq:CaseAS3, eq:AS3v2, eq:CaseAt1t3second", CheckKind.RATFUNC,
                   "From (eq:CaseAS3) and (eq:AS3v2) it follows", s34_case_a_squares,
                   depends_on=("S33",), primary_constant="CaseAt1t3second"),
    DerivationStep("S35", "subcase (i): roots, negative root, t3 = t5", CheckKind.POLY_IDENTITY,
                   "Here the third root is negative", s35_case_a_first,
                   depends_on=("S34",), primary_constant="p1_at_CaseAit3"),
    DerivationStep("S36", "subcase (ii): resultants of p1, p3 and sign certificates", CheckKind.RESULTANT,
                   "Calculating the resultants we obtain", s36_case_a_second,
                   depends_on=("S34",), primary_constant="R_p1_p3_t3"),
    DerivationStep("S37", "Case B: S5 coefficient forced to 0", CheckKind.POLY_IDENTITY,
                   "Hence there is no solution in Case B", s37_case_b, depends_on=("S32",)),
)


def default_registry() -> StepRegistry:
    """Registry with S01..S37 in derivation order"""
    registry = StepRegistry()
    for step in _STEPS:
        registry.register(step)
    return registry


STEP_MIN_DEGREE: Dict[str, int] = {step.id: step.min_degree for step in _STEPS}
