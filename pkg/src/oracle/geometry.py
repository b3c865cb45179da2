"""
Cevian configuration in floating point

Base triangle EFH with E = (0, 0), F = (1, 0) and angles alpha at E, beta at
F. Inner points:

    G   GEF = t1*alpha, GFE = t2*beta
    I   IFH = t3*beta,  IHF = t4*gamma
    J   JHE = t5*gamma, JEH = t6*alpha

``construct_scene`` places the points through the law-of-sines lengths;
``scene_by_intersection`` solves the same rays as line pairs with numpy so
the two constructions check each other.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, Tuple, Union

import numpy as np

from src.morley.params import CevianParams

logger = logging.getLogger(__name__)

MIN_ANGLE = 1e-6

ArrayLike = Union[float, np.ndarray]


@dataclass(frozen=True)
class TriangleScene:
    """Points of the configuration for one base triangle"""

    E: np.ndarray
    F: np.ndarray
    H: np.ndarray
    G: np.ndarray
    I: np.ndarray  # noqa: E741
    J: np.ndarray
    alpha: float
    beta: float
    params: CevianParams

    @property
    def gamma(self) -> float:
        return math.pi - self.alpha - self.beta


def check_angles(alpha: float, beta: float) -> None:
    """
    Raises:
        ValueError: For angles too close to a degenerate triangle
    """
    if alpha < MIN_ANGLE or beta < MIN_ANGLE or alpha + beta > math.pi - MIN_ANGLE:
        raise ValueError(
            f"angles alpha={alpha}, beta={beta} outside the non-degenerate region"
        )


def _direction(angle: float) -> np.ndarray:
    return np.array([math.cos(angle), math.sin(angle)])


def cevian_lengths(alpha: float, beta: float, params: CevianParams) -> Dict[str, float]:
    """Segment lengths by the law of sines"""
    t1, t2, t3, t4, t5, t6 = params.as_floats()
    gamma = math.pi - alpha - beta
    FH = math.sin(alpha) / math.sin(alpha + beta)
    HE = math.sin(beta) / math.sin(alpha + beta)
    g_den = math.sin(t1 * alpha + t2 * beta)
    i_den = math.sin(t3 * beta + t4 * gamma)
    j_den = math.sin(t5 * gamma + t6 * alpha)
    return {
        "FH": FH,
        "HE": HE,
        "EG": math.sin(t2 * beta) / g_den,
        "GF": math.sin(t1 * alpha) / g_den,
        "FI": FH * math.sin(t4 * gamma) / i_den,
        "IH": FH * math.sin(t3 * beta) / i_den,
        "HJ": HE * math.sin(t6 * alpha) / j_den,
        "JE": HE * math.sin(t5 * gamma) / j_den,
    }


def closed_form_sides(alpha: float, beta: float, params: CevianParams) -> Tuple[float, float, float]:
    """GI, IJ, JG by the law of cosines"""
    t1, t2, t3, t4, t5, t6 = params.as_floats()
    gamma = math.pi - alpha - beta
    L = cevian_lengths(alpha, beta, params)
    gi2 = L["GF"] ** 2 + L["FI"] ** 2 - 2 * L["GF"] * L["FI"] * math.cos((1 - t2 - t3) * beta)
    ij2 = L["IH"] ** 2 + L["HJ"] ** 2 - 2 * L["IH"] * L["HJ"] * math.cos((1 - t4 - t5) * gamma)
    jg2 = L["JE"] ** 2 + L["EG"] ** 2 - 2 * L["JE"] * L["EG"] * math.cos((1 - t6 - t1) * alpha)
    return math.sqrt(max(gi2, 0.0)), math.sqrt(max(ij2, 0.0)), math.sqrt(max(jg2, 0.0))


def construct_scene(alpha: float, beta: float, params: CevianParams) -> TriangleScene:
    """
    Place E, F, H, G, I, J from the law-of-sines lengths

    Raises:
        ValueError: Degenerate angles or inadmissible parameters
    """
    check_angles(alpha, beta)
    params.require_admissible()
    t1, t2, t3, t4, t5, t6 = params.as_floats()
    L = cevian_lengths(alpha, beta, params)
    E = np.array([0.0, 0.0])
    F = np.array([1.0, 0.0])
    H = L["HE"] * _direction(alpha)
    G = L["EG"] * _direction(t1 * alpha)
    I = F + L["FI"] * _direction(math.pi - (1 - t3) * beta)  # noqa: E741
    J = L["JE"] * _direction((1 - t6) * alpha)
    return TriangleScene(E, F, H, G, I, J, alpha, beta, params)


def intersect_rays(p: np.ndarray, angle_p: float, q: np.ndarray, angle_q: float) -> np.ndarray:
    """
    Intersection of the lines through p and q with the given directions

    Raises:
        ValueError: For parallel directions
    """
    matrix = np.column_stack([_direction(angle_p), -_direction(angle_q)])
    try:
        lam, _ = np.linalg.solve(matrix, q - p)
    except np.linalg.LinAlgError as e:
        raise ValueError("rays are parallel") from e
    return p + lam * _direction(angle_p)


def scene_by_intersection(alpha: float, beta: float, params: CevianParams) -> TriangleScene:
    """Same configuration by line-line intersection, independent of the length formulas"""
    check_angles(alpha, beta)
    params.require_admissible()
    t1, t2, t3, t4, t5, t6 = params.as_floats()
    gamma = math.pi - alpha - beta
    E = np.array([0.0, 0.0])
    F = np.array([1.0, 0.0])
    H = intersect_rays(E, alpha, F, math.pi - beta)
    hf = math.atan2(F[1] - H[1], F[0] - H[0])
    he = math.atan2(E[1] - H[1], E[0] - H[0])
    G = intersect_rays(E, t1 * alpha, F, math.pi - t2 * beta)
    I = intersect_rays(F, math.pi - (1 - t3) * beta, H, hf - t4 * gamma)  # noqa: E741
    J = intersect_rays(E, (1 - t6) * alpha, H, he + t5 * gamma)
    return TriangleScene(E, F, H, G, I, J, alpha, beta, params)


def side_lengths(scene: TriangleScene) -> Tuple[float, float, float]:
    """Euclidean GI, IJ, JG"""
    return (
        float(np.linalg.norm(scene.G - scene.I)),
        float(np.linalg.norm(scene.I - scene.J)),
        float(np.linalg.norm(scene.J - scene.G)),
    )


def defect(sides: Tuple[float, float, float]) -> float:
    """Largest pairwise difference of the three sides"""
    gi, ij, jg = sides
    return max(abs(gi - ij), abs(ij - jg), abs(jg - gi))


def eval_A_direct(alpha: ArrayLike, beta: ArrayLike, params: CevianParams) -> ArrayLike:
    """
    A(alpha, beta) evaluated term by term as displayed

    Accepts scalars or numpy arrays of equal shape.
    """
    t1, t2, t3, t4, t5, t6 = params.as_floats()
    pi = np.pi
    sin, cos = np.sin, np.cos
    s_t1a = sin(t1 * alpha)
    s_a = sin(alpha)
    s_b = sin(beta)
    s_ab = sin(alpha + beta)
    s_g = sin(t1 * alpha + t2 * beta)
    s_i = sin(-t3 * beta - t4 * pi + t4 * alpha + t4 * beta)
    s_j = sin(t5 * (alpha + beta - pi) - t6 * alpha)
    s_j2 = sin(-t5 * pi + t5 * alpha + t5 * beta - t6 * alpha)
    s_t4 = sin(t4 * (pi - alpha - beta))
    s_t3b = sin(t3 * beta)
    s_t6a = sin(t6 * alpha)
    return (
        s_t1a**2 * s_ab**2 * s_i**2 * s_j**2
        + s_a**2 * s_t4**2 * s_g**2 * s_j2**2
        + 2 * s_t1a * s_a * s_t4 * cos((-1 + t2 + t3) * beta) * s_g * s_ab * s_i * s_j2**2
        - s_a**2 * s_t3b**2 * s_g**2 * s_j2**2
        - s_b**2 * s_t6a**2 * s_g**2 * s_i**2
        + 2 * s_a * s_t3b * s_b * s_t6a * cos((-1 + t4 + t5) * (pi - alpha - beta)) * s_g**2 * s_i * s_j2
    )


def common_denominator(alpha: float, beta: float, params: CevianParams) -> float:
    """Product of the four squared sine denominators of GI^2 - IJ^2"""
    t1, t2, t3, t4, t5, t6 = params.as_floats()
    gamma = math.pi - alpha - beta
    return (
        math.sin(t1 * alpha + t2 * beta) ** 2
        * math.sin(alpha + beta) ** 2
        * math.sin(t3 * beta + t4 * gamma) ** 2
        * math.sin(t5 * gamma + t6 * alpha) ** 2
    )


def a_from_sides(alpha: float, beta: float, params: CevianParams) -> float:
    """(GI^2 - IJ^2) * D from the constructed scene"""
    gi, ij, _ = side_lengths(construct_scene(alpha, beta, params))
    return (gi**2 - ij**2) * common_denominator(alpha, beta, params)
