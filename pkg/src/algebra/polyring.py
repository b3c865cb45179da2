"""
Polynomial ring over the rationals in the fixed cevian variable set

The ring has 24 generators in graded-lexicographic order:

    t1..t6      cevian fractions
    s1..s6      sin(t_i * pi)
    c1..c6      cos(t_i * pi)
    S1, S3, S5  s_i^2
    C1, C3, C5  c_i^2

Elements are sympy ``PolyElement`` values (sparse dicts from exponent tuples
to QQ coefficients). This module adds the domain operations on top of the
sympy kernel: substitution with a recursion check, simultaneous index
relabelling, Pythagorean reduction, exact division and proportionality tests
modulo s_i^2 + c_i^2 = 1.
"""

import logging
import math
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Set, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, ring

from src.arith.rational import format_rational, to_rational

logger = logging.getLogger(__name__)

FULL_INDICES = (1, 2, 3, 4, 5, 6)
ODD_INDICES = (1, 3, 5)

GENERATOR_NAMES: Tuple[str, ...] = (
    tuple(f"t{i}" for i in FULL_INDICES)
    + tuple(f"s{i}" for i in FULL_INDICES)
    + tuple(f"c{i}" for i in FULL_INDICES)
    + tuple(f"S{i}" for i in ODD_INDICES)
    + tuple(f"C{i}" for i in ODD_INDICES)
)

R, *_GENS = ring(",".join(GENERATOR_NAMES), QQ, grlex)

MultiPoly = PolyElement
Monomial = Tuple[int, ...]
Coefficient = Union[int, Fraction]
Binding = Union[MultiPoly, int, Fraction]

NGENS = len(GENERATOR_NAMES)


class VarId(str, Enum):
    """Closed enumeration of the ring variables"""

    t1 = "t1"
    t2 = "t2"
    t3 = "t3"
    t4 = "t4"
    t5 = "t5"
    t6 = "t6"
    s1 = "s1"
    s2 = "s2"
    s3 = "s3"
    s4 = "s4"
    s5 = "s5"
    s6 = "s6"
    c1 = "c1"
    c2 = "c2"
    c3 = "c3"
    c4 = "c4"
    c5 = "c5"
    c6 = "c6"
    S1 = "S1"
    S3 = "S3"
    S5 = "S5"
    C1 = "C1"
    C3 = "C3"
    C5 = "C5"

    @property
    def family(self) -> str:
        return self.value[0]

    @property
    def subscript(self) -> int:
        return int(self.value[1:])

    @property
    def position(self) -> int:
        return GENERATOR_NAMES.index(self.value)

    @property
    def gen(self) -> MultiPoly:
        return _GENS[self.position]

    @classmethod
    def of(cls, family: str, index: int) -> "VarId":
        """
        Look up a variable by family letter and subscript

        Raises:
            ValueError: If the pair is outside the variable set
        """
        try:
            return cls(f"{family}{index}")
        except ValueError as e:
            raise ValueError(f"no ring variable {family}{index}") from e


VarLike = Union[VarId, str, MultiPoly]


def position_of(var: VarLike) -> int:
    """
    Generator position of a variable given as VarId, name or generator

    Raises:
        ValueError: If the argument is not a ring generator
    """
    if isinstance(var, VarId):
        return var.position
    if isinstance(var, str):
        return VarId(var).position
    if isinstance(var, PolyElement) and var.ring == R and var.is_generator:
        return R.gens.index(var)
    raise ValueError(f"{var!r} is not a ring variable")


def var_of(var: VarLike) -> VarId:
    return VarId(GENERATOR_NAMES[position_of(var)])


def T(i: int) -> MultiPoly:
    return VarId.of("t", i).gen


def s(i: int) -> MultiPoly:
    return VarId.of("s", i).gen


def c(i: int) -> MultiPoly:
    return VarId.of("c", i).gen


def S(i: int) -> MultiPoly:
    return VarId.of("S", i).gen


def C(i: int) -> MultiPoly:
    return VarId.of("C", i).gen


def rat(numerator: int, denominator: int = 1):
    """Exact ground-domain rational, usable in polynomial arithmetic"""
    return QQ(numerator, denominator)


def const(value: Coefficient) -> MultiPoly:
    """Constant polynomial"""
    q = to_rational(value)
    return R.ground_new(QQ(q.numerator, q.denominator))


def as_poly(value: Binding) -> MultiPoly:
    if isinstance(value, PolyElement):
        if value.ring != R:
            raise ValueError("polynomial belongs to a different ring")
        return value
    return const(value)


def coefficient_of(p: MultiPoly, monomial: Monomial) -> Fraction:
    """Rational coefficient of an exponent vector (0 when absent)"""
    return to_rational(p.get(monomial, QQ(0)))


def poly_arith(a: MultiPoly, b: MultiPoly, op: str) -> MultiPoly:
    """
    Ring operation

    Args:
        a: Left operand
        b: Right operand
        op: One of add, sub, mul

    Raises:
        ValueError: Unknown operation
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"Unsupported operation: {op}")


def variables(p: MultiPoly) -> Set[VarId]:
    """Variables occurring in p"""
    present: Set[VarId] = set()
    for monom in p.itermonoms():
        for pos, e in enumerate(monom):
            if e:
                present.add(VarId(GENERATOR_NAMES[pos]))
    return present


def degree_in(p: MultiPoly, var: VarLike) -> int:
    """Degree in one variable; -1 for the zero polynomial"""
    if not p:
        return -1
    return int(p.degree(_GENS[position_of(var)]))


def _regroup(
    p: MultiPoly,
    split: Callable[[Monomial], Tuple[Tuple[int, ...], Monomial]],
    factor: Callable[[Tuple[int, ...]], MultiPoly],
) -> MultiPoly:
    # Terms sharing a key multiply the same factor; expand each group once.
    groups: Dict[Tuple[int, ...], Dict[Monomial, object]] = {}
    for monom, coeff in p.iterterms():
        key, rest = split(monom)
        bucket = groups.setdefault(key, {})
        total = bucket.get(rest, QQ(0)) + coeff
        if total:
            bucket[rest] = total
        else:
            bucket.pop(rest, None)
    result = R.zero
    for key, bucket in groups.items():
        if bucket:
            result += factor(key) * R.from_dict(bucket)
    return result


def _map_monomials(p: MultiPoly, move: Callable[[Monomial], Monomial]) -> MultiPoly:
    terms: Dict[Monomial, object] = {}
    for monom, coeff in p.iterterms():
        target = move(monom)
        total = terms.get(target, QQ(0)) + coeff
        if total:
            terms[target] = total
        else:
            terms.pop(target, None)
    return R.from_dict(terms) if terms else R.zero


def substitute(p: MultiPoly, bindings: Mapping[VarLike, Binding]) -> MultiPoly:
    """
    Simultaneous substitution of variables by polynomials or rationals

    Args:
        p: Polynomial to rewrite
        bindings: Variable to replacement value

    Returns:
        Image of p under the ring homomorphism fixing unbound variables

    Raises:
        ValueError: If a replacement mentions a bound variable
    """
    if not bindings:
        return p
    bound: Dict[int, MultiPoly] = {}
    for key, value in bindings.items():
        bound[position_of(key)] = as_poly(value)
    positions = sorted(bound)
    for pos, value in bound.items():
        for other in positions:
            if value and value.degree(_GENS[other]) > 0:
                raise ValueError(
                    f"recursive binding: value for {GENERATOR_NAMES[pos]} "
                    f"mentions bound variable {GENERATOR_NAMES[other]}"
                )

    power_cache: Dict[Tuple[int, int], MultiPoly] = {}

    def power(pos: int, e: int) -> MultiPoly:
        key = (pos, e)
        if key not in power_cache:
            power_cache[key] = bound[pos] ** e
        return power_cache[key]

    def split(monom: Monomial) -> Tuple[Tuple[int, ...], Monomial]:
        rest = list(monom)
        for pos in positions:
            rest[pos] = 0
        return tuple(monom[pos] for pos in positions), tuple(rest)

    def factor(key: Tuple[int, ...]) -> MultiPoly:
        out = R.one
        for pos, e in zip(positions, key):
            if e:
                out = out * power(pos, e)
        return out

    return _regroup(p, split, factor)


def relabel(p: MultiPoly, mapping: Mapping[int, int]) -> MultiPoly:
    """
    Rename subscripts simultaneously on every variable family

    ``mapping`` sends subscript i to subscript j for t, s, c and (within
    {1, 3, 5}) for S and C; unmapped subscripts stay fixed. A non-injective
    mapping identifies variables, which is the substitution t2 -> t1 etc.

    Raises:
        ValueError: If a mapped subscript leaves 1..6, or an S/C variable
            that occurs in p would leave {1, 3, 5}
    """
    for source, target in mapping.items():
        if source not in FULL_INDICES or target not in FULL_INDICES:
            raise ValueError(f"subscript map {source}->{target} leaves 1..6")
    targets: List[Optional[int]] = []
    for name in GENERATOR_NAMES:
        family, index = name[0], int(name[1:])
        new_index = mapping.get(index, index)
        if family in "SC" and new_index not in ODD_INDICES:
            targets.append(None)
        else:
            targets.append(GENERATOR_NAMES.index(f"{family}{new_index}"))

    def move(monom: Monomial) -> Monomial:
        out = [0] * NGENS
        for pos, e in enumerate(monom):
            if e:
                target = targets[pos]
                if target is None:
                    raise ValueError(
                        f"{GENERATOR_NAMES[pos]} has no image under subscript map {dict(mapping)}"
                    )
                out[target] += e
        return tuple(out)

    return _map_monomials(p, move)


def permute_indices(p: MultiPoly, sigma: Mapping[int, int]) -> MultiPoly:
    """
    Apply a permutation of {1, 3, 5} to every variable subscript

    Raises:
        ValueError: If sigma is not a bijection of {1, 3, 5}
    """
    full = {i: sigma.get(i, i) for i in ODD_INDICES}
    if set(sigma) - set(ODD_INDICES) or sorted(full.values()) != list(ODD_INDICES):
        raise ValueError(f"{dict(sigma)} is not a permutation of {{1, 3, 5}}")
    return relabel(p, full)


def swap(i: int, j: int) -> Dict[int, int]:
    """Transposition of two subscripts"""
    return {i: j, j: i}


@lru_cache(maxsize=None)
def _one_minus_c_squared_power(index: int, k: int) -> MultiPoly:
    return (1 - c(index) ** 2) ** k


_S_POSITIONS = tuple(VarId.of("s", i).position for i in FULL_INDICES)


def pythagorean_reduce(p: MultiPoly) -> MultiPoly:
    """
    Rewrite every s_i^e with e >= 2 as s_i^(e mod 2) * (1 - c_i^2)^(e div 2)

    The result is linear in each s_i; the map is idempotent.
    """

    def split(monom: Monomial) -> Tuple[Tuple[int, ...], Monomial]:
        rest = list(monom)
        key = []
        for pos in _S_POSITIONS:
            key.append(monom[pos] // 2)
            rest[pos] = monom[pos] % 2
        return tuple(key), tuple(rest)

    def factor(key: Tuple[int, ...]) -> MultiPoly:
        out = R.one
        for index, k in zip(FULL_INDICES, key):
            if k:
                out = out * _one_minus_c_squared_power(index, k)
        return out

    return _regroup(p, split, factor)


_SQUARE_PAIRS = tuple(
    (VarId.of(big, i).position, VarId.of(small, i).position)
    for big, small in (("S", "s"), ("C", "c"))
    for i in ODD_INDICES
)


def unlift(p: MultiPoly) -> MultiPoly:
    """Replace S_i by s_i^2 and C_i by c_i^2"""

    def move(monom: Monomial) -> Monomial:
        out = list(monom)
        for big, small in _SQUARE_PAIRS:
            if out[big]:
                out[small] += 2 * out[big]
                out[big] = 0
        return tuple(out)

    return _map_monomials(p, move)


def lift(p: MultiPoly, cosines: bool = False) -> MultiPoly:
    """
    Collect even powers of s_i (and optionally c_i), i in {1, 3, 5}

    s_i^(2k + r) becomes S_i^k * s_i^r.
    """
    pairs = [pair for pair in _SQUARE_PAIRS if cosines or GENERATOR_NAMES[pair[0]][0] == "S"]

    def move(monom: Monomial) -> Monomial:
        out = list(monom)
        for big, small in pairs:
            k, r = divmod(out[small], 2)
            out[big] += k
            out[small] = r
        return tuple(out)

    return _map_monomials(p, move)


def canonical(p: MultiPoly) -> MultiPoly:
    """Normal form modulo S_i = s_i^2, C_i = c_i^2 and s_i^2 + c_i^2 = 1"""
    return pythagorean_reduce(unlift(p))


def equal_mod_trig(a: MultiPoly, b: MultiPoly) -> bool:
    """Equality modulo the trigonometric relations"""
    return canonical(a - b) == 0


def exact_divide(p: MultiPoly, d: MultiPoly) -> Optional[MultiPoly]:
    """
    Exact quotient p / d

    Returns:
        q with q * d == p, or None when d does not divide p

    Raises:
        ZeroDivisionError: If d is zero
    """
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    q, r = p.div(d)
    if r:
        return None
    return q


def expand_factors(constant: Coefficient, factors: Sequence[Tuple[MultiPoly, int]]) -> MultiPoly:
    product = const(constant)
    for factor, multiplicity in factors:
        if multiplicity < 0:
            raise ValueError("factor multiplicities must be non-negative")
        product = product * factor**multiplicity
    return product


def verify_factorization(
    p: MultiPoly, constant: Coefficient, factors: Sequence[Tuple[MultiPoly, int]]
) -> bool:
    """True iff constant * prod(factor^m) expands to p"""
    return expand_factors(constant, factors) == p


def match_factorization(
    p: MultiPoly, constant: Coefficient, factors: Sequence[Tuple[MultiPoly, int]]
) -> Optional[int]:
    """
    Sign under which a stated factorization reproduces p

    Returns:
        +1 if it matches as stated, -1 if it matches with the constant
        negated, None otherwise
    """
    product = expand_factors(constant, factors)
    if product == p:
        return 1
    if product == -p:
        return -1
    return None


@lru_cache(maxsize=None)
def _phase_pair(m: int, i: int) -> Tuple[MultiPoly, MultiPoly]:
    # (sin(m theta), cos(m theta)) for m >= 0 by angle addition
    si, ci = s(i), c(i)
    sin_m, cos_m = R.zero, R.one
    for _ in range(m):
        sin_m, cos_m = sin_m * ci + cos_m * si, cos_m * ci - sin_m * si
    return sin_m, cos_m


def chebyshev_phase(kind: str, m: int, i: int) -> MultiPoly:
    """
    sin(m t_i pi) or cos(m t_i pi) as a polynomial in s_i, c_i

    Raises:
        ValueError: Unknown kind or subscript
    """
    if i not in FULL_INDICES:
        raise ValueError(f"subscript {i} outside 1..6")
    sin_m, cos_m = _phase_pair(abs(m), i)
    if kind == "sin":
        return sin_m if m >= 0 else -sin_m
    if kind == "cos":
        return cos_m
    raise ValueError(f"kind must be 'sin' or 'cos', got {kind!r}")


def s_monomial_candidates(p: MultiPoly, q: MultiPoly) -> List[MultiPoly]:
    """Square-free products of the s_i occurring in p or q, smallest first"""
    present = sorted(
        {v.subscript for v in variables(p) | variables(q) if v.family == "s"}
    )
    candidates = []
    for size in range(len(present) + 1):
        for subset in combinations(present, size):
            m = R.one
            for i in subset:
                m = m * s(i)
            candidates.append(m)
    return candidates


def is_t_term(q: MultiPoly) -> bool:
    """Nonzero single term whose monomial involves only the t_i"""
    if not q or len(q) != 1:
        return False
    (monom,) = q.keys()
    return all(e == 0 for e in monom[6:])


def proportional(computed: MultiPoly, display: MultiPoly) -> Optional[MultiPoly]:
    """
    Find a nonzero monomial cofactor m with computed == m * display

    Equality is taken modulo the trigonometric relations. The cofactor is a
    rational times a monomial in the t_i and square-free in the s_i, so it
    does not vanish on the admissible domain.

    Returns:
        The cofactor, or None if no such monomial exists
    """
    target = canonical(computed)
    base = canonical(display)
    if not base or not target:
        return None
    for m_s in s_monomial_candidates(target, base):
        divisor = canonical(m_s * base)
        if not divisor:
            continue
        q = exact_divide(target, divisor)
        if q is not None and is_t_term(q):
            logger.debug(f"proportional with cofactor {serialize(q * m_s)}")
            return q * m_s
    return None


def term_coefficient(term: MultiPoly) -> Fraction:
    """Rational coefficient of a single-term polynomial"""
    if len(term) != 1:
        raise ValueError("expected a single term")
    (value,) = term.values()
    return to_rational(value)


def monomial_text(monom: Monomial) -> str:
    factors = [f"{GENERATOR_NAMES[pos]}^{e}" for pos, e in enumerate(monom) if e]
    return "*".join(factors) if factors else "1"


def serialize(p: MultiPoly) -> str:
    """
    Canonical text: terms in descending grlex order, explicit exponents,
    coefficients as num/den
    """
    if not p:
        return "0"
    parts = []
    for monom, coeff in p.terms():
        text = f"({format_rational(to_rational(coeff))})"
        if any(monom):
            text += "*" + monomial_text(monom)
        parts.append(text)
    return " + ".join(parts)


def evaluate(p: MultiPoly, values: Mapping[VarLike, object], convert: Callable = float):
    """
    Numeric evaluation

    Args:
        p: Polynomial
        values: Numeric value for every variable occurring in p
        convert: Coefficient conversion (float, mpmath.mpf, Fraction, ...)

    Raises:
        ValueError: If an occurring variable has no value
    """
    by_pos = {position_of(k): v for k, v in values.items()}
    total = convert(0)
    for monom, coeff in p.iterterms():
        value = convert(to_rational(coeff))
        for pos, e in enumerate(monom):
            if e:
                if pos not in by_pos:
                    raise ValueError(f"no value for {GENERATOR_NAMES[pos]}")
                value = value * by_pos[pos] ** e
        total = total + value
    return total


def trig_values(t_values: Mapping[int, float]) -> Dict[str, float]:
    """Numeric assignment of t_i, s_i, c_i, S_i, C_i from t values"""
    out: Dict[str, float] = {}
    for i, t in t_values.items():
        out[f"t{i}"] = t
        out[f"s{i}"] = math.sin(t * math.pi)
        out[f"c{i}"] = math.cos(t * math.pi)
        if i in ODD_INDICES:
            out[f"S{i}"] = out[f"s{i}"] ** 2
            out[f"C{i}"] = out[f"c{i}"] ** 2
    return out
