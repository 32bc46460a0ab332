"""Exact rational parsing and rendering shared by every report."""
from __future__ import annotations

from fractions import Fraction
from typing import Union

from django.core.exceptions import ValidationError

RationalLike = Union[Fraction, int, str]


def parse_rational(value: RationalLike | float, field: str = "value") -> Fraction:
    """
    Read "p/q", an integer, a decimal string or a Fraction.

    Raises:
        ValidationError: if the text is not a rational number
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValidationError("%(field)s must be a rational, got a boolean", code="invalid", params={"field": field})
    if isinstance(value, (int, float)):
        return Fraction(value)
    try:
        return Fraction(str(value).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(
            "%(field)s must be a rational like '3/2', got %(value)r",
            code="invalid",
            params={"field": field, "value": value},
        ) from exc


def format_rational(q: Fraction | int, exact: bool = True) -> str:
    """Reduced "p/q" text; inexact values are rendered with 17 significant digits."""
    q = Fraction(q)
    if not exact:
        return f"{float(q):.17g}"
    return f"{q.numerator}/{q.denominator}"
