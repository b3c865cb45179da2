"""
Numeric ground truth: geometry, rigorous enclosures, equilaterality scans.
"""

from src.oracle.certify import PrecisionInterval, certified_sin_sq
from src.oracle.geometry import (
    TriangleScene,
    closed_form_sides,
    construct_scene,
    eval_A_direct,
    side_lengths,
)
from src.oracle.scan import ScanReport, equilateral_scan

__all__ = [
    "PrecisionInterval",
    "ScanReport",
    "TriangleScene",
    "certified_sin_sq",
    "closed_form_sides",
    "construct_scene",
    "equilateral_scan",
    "eval_A_direct",
    "side_lengths",
]
