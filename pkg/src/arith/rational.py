"""
Rational helpers

Rationals are ``fractions.Fraction`` throughout the package. This module adds
the operation table, conversions from the polynomial ground domain and the
canonical ``num/den`` text form used in reports.
"""

from enum import Enum
from fractions import Fraction
from typing import Any, Union

RationalLike = Union[int, Fraction, str]


class RatOp(str, Enum):
    """Binary operations on rationals"""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


def to_rational(value: Any) -> Fraction:
    """
    Convert an exact value to a Fraction

    Accepts ints, Fractions, ``"n/d"`` strings and ground-domain elements that
    expose ``numerator``/``denominator`` (sympy's QQ, gmpy2's mpq).

    Args:
        value: Value to convert

    Returns:
        Normalized Fraction

    Raises:
        ValueError: If the value is a float or cannot be read exactly
    """
    if isinstance(value, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ValueError(f"refusing inexact float {value!r}")
    if isinstance(value, str):
        return parse_rational(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return Fraction(int(value.numerator), int(value.denominator))
    raise ValueError(f"cannot convert {type(value).__name__} to a rational")


def parse_rational(text: str) -> Fraction:
    """
    Parse ``"n"`` or ``"n/d"``

    Raises:
        ValueError: On malformed text or a zero denominator
    """
    cleaned = text.strip()
    if not cleaned:
        raise ValueError("empty rational")
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"invalid rational {text!r}: {e}") from e


def format_rational(value: RationalLike) -> str:
    """Render as ``num/den`` (``0/1`` for zero, ``3/1`` for integers)"""
    q = to_rational(value)
    return f"{q.numerator}/{q.denominator}"


def rat_arith(a: RationalLike, b: RationalLike, op: Union[RatOp, str]) -> Fraction:
    """
    Exact rational arithmetic

    Args:
        a: Left operand
        b: Right operand
        op: One of add, sub, mul, div

    Returns:
        Normalized result

    Raises:
        ZeroDivisionError: Division by zero
        ValueError: Unknown operation
    """
    x, y = to_rational(a), to_rational(b)
    op = RatOp(op)
    if op is RatOp.ADD:
        return x + y
    if op is RatOp.SUB:
        return x - y
    if op is RatOp.MUL:
        return x * y
    if y == 0:
        raise ZeroDivisionError(f"division of {format_rational(x)} by zero")
    return x / y
