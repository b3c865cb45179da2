"""
Shared derivation state

Expensive objects (series expansions, the extracted system) are built lazily
and cached, so a step selection pays only for what it uses and any step can
run on its own.
"""

import logging
from functools import cached_property
from typing import Dict, Optional, Tuple

from src.algebra.elimination import sylvester_resultant
from src.algebra.polyring import (
    FULL_INDICES,
    R,
    MultiPoly,
    VarId,
    c,
    canonical,
    exact_divide,
    permute_indices,
    proportional,
    s,
    swap,
)
from src.algebra.series import TruncSeries
from src.morley.build_a import build_A, build_reduced_A, build_series
from src.morley.displays import DisplayCatalog, default_catalog
from src.morley.params import CevianParams

# Eeq2..Eeq6 as index permutations of Eeq1
SYSTEM_PERMUTATIONS: Dict[str, Dict[int, int]] = {
    "Eeq1": {},
    "Eeq2": swap(3, 5),
    "Eeq3": swap(1, 3),
    "Eeq4": {1: 3, 3: 5, 5: 1},
    "Eeq5": {1: 5, 3: 1, 5: 3},
    "Eeq6": swap(1, 5),
}


def split_cofactor(cofactor: MultiPoly) -> Tuple[MultiPoly, MultiPoly]:
    """
    Split a monomial cofactor into (t part with coefficient, s part)

    Raises:
        ValueError: If the cofactor is not a single term
    """
    if len(cofactor) != 1:
        raise ValueError("cofactor must be a single term")
    (monom,) = cofactor.keys()
    m_s = R.one
    for i in FULL_INDICES:
        m_s = m_s * s(i) ** monom[VarId.of("s", i).position]
    t_part = exact_divide(cofactor, m_s)
    if t_part is None:
        raise ValueError("cofactor is not a monomial")
    return t_part, m_s


class DerivationContext:
    """
    Inputs and cached intermediate objects of one pipeline run

    Args:
        degree: Series truncation degree
        precision_bits: Width bound for certified enclosures
        displays: Display catalog (the default one unless injecting faults)
        params: Numeric parameters for the geometric checks
    """

    def __init__(
        self,
        degree: int = 8,
        precision_bits: int = 128,
        displays: Optional[DisplayCatalog] = None,
        params: Optional[CevianParams] = None,
    ) -> None:
        self.degree = degree
        self.precision_bits = precision_bits
        self.displays = displays if displays is not None else default_catalog()
        self.params = params if params is not None else CevianParams.trisector()
        self.logger = logging.getLogger("derivation_context")
        self._rotations: Dict[int, TruncSeries] = {}
        self._resultants: Dict[Tuple[str, str, str], MultiPoly] = {}

    def rotated(self, rotation: int) -> TruncSeries:
        """A with the vertex roles rotated (0 is A itself)"""
        if rotation not in self._rotations:
            self.logger.debug(f"building A rotation {rotation} at degree {self.degree}")
            self._rotations[rotation] = build_A(rotation, self.degree)
        return self._rotations[rotation]

    def resultant(self, first: str, second: str, var: str) -> MultiPoly:
        """Sylvester resultant of two catalog polynomials with var eliminated"""
        key = (first, second, var)
        if key not in self._resultants:
            self.logger.debug(f"resultant of {first} and {second} in {var}")
            self._resultants[key] = sylvester_resultant(
                self.displays.poly(first), self.displays.poly(second), var
            )
        return self._resultants[key]

    @property
    def a_series(self) -> TruncSeries:
        return self.rotated(0)

    @cached_property
    def reduced_series(self) -> TruncSeries:
        """Reduced A built argument by argument"""
        self.logger.debug(f"building reduced A at degree {self.degree}")
        return build_reduced_A(self.degree)

    @cached_property
    def displayed_reduced_series(self) -> TruncSeries:
        return build_series(self.displays["reduced_A"], self.degree)

    @cached_property
    def a42(self) -> MultiPoly:
        """Coefficient of alpha^4 beta^2 of the reduced A"""
        return self.reduced_series.coeff(4, 2)

    @cached_property
    def a42_cofactor(self) -> MultiPoly:
        """
        Monomial m with a42 == m * P modulo the trig relations

        Raises:
            ValueError: If there is none
        """
        cofactor = proportional(self.a42, self.displays.poly("P"))
        if cofactor is None:
            raise ValueError("alpha^4 beta^2 coefficient is not proportional to P")
        return cofactor

    @cached_property
    def eeq1(self) -> MultiPoly:
        """
        First equation of the system, extracted from the computed a42

        With a42 == t_part * m_s * P and s3 * P == s3^2 * Eeq1, the normal
        form of s3 * m_s * a42 is t_part * prod(1 - c_i^2) * (1 - c3^2) times
        the normal form of Eeq1, the product running over the s_i in m_s.

        Raises:
            ValueError: If the division is not exact
        """
        t_part, m_s = split_cofactor(self.a42_cofactor)
        divisor = t_part * (1 - c(3) ** 2)
        for i in FULL_INDICES:
            if m_s.degree(s(i)) > 0:
                divisor = divisor * (1 - c(i) ** 2)
        quotient = exact_divide(canonical(s(3) * m_s * self.a42), divisor)
        if quotient is None:
            raise ValueError("Eeq1 does not divide out of the alpha^4 beta^2 coefficient")
        return quotient

    @cached_property
    def system(self) -> Dict[str, MultiPoly]:
        """Eeq1..Eeq6 obtained from the extracted Eeq1 by index permutation"""
        base = self.eeq1
        return {
            name: permute_indices(base, sigma) if sigma else base
            for name, sigma in SYSTEM_PERMUTATIONS.items()
        }


def generate_system(degree: int = 8) -> Tuple[MultiPoly, ...]:
    """
    Eeq1..Eeq6 extracted from the series of the reduced A

    Raises:
        ValueError: If degree is below 6 or the extraction fails
    """
    if degree < 6:
        raise ValueError(f"the system needs degree 6 or more, got {degree}")
    system = DerivationContext(degree=degree).system
    return tuple(system[name] for name in SYSTEM_PERMUTATIONS)
