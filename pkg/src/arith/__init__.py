"""
Exact coefficient domains: rationals and the cyclotomic field Q(zeta_12).
"""

from src.arith.cyclo import CycloNum, cyclo_arith, cyclo_from_trig
from src.arith.rational import (
    RatOp,
    format_rational,
    parse_rational,
    rat_arith,
    to_rational,
)

__all__ = [
    "CycloNum",
    "RatOp",
    "cyclo_arith",
    "cyclo_from_trig",
    "format_rational",
    "parse_rational",
    "rat_arith",
    "to_rational",
]
