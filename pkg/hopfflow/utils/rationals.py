"""Rational number parsing and formatting for file formats."""
from fractions import Fraction
from typing import Union

RationalLike = Union[str, int, Fraction]


def parse_rational(value: RationalLike) -> Fraction:
    """
    Parse a rational from "p/q", "p", an int or a Fraction.

    Floats are rejected: exact files must not carry binary approximations.
    """
    if isinstance(value, bool):
        raise ValueError("Booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("Empty rational string")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"Invalid rational: {value!r}") from exc
    raise ValueError(f"Unsupported rational value: {value!r}")


def format_rational(value: Fraction) -> str:
    """Format as "p/q" with q >= 1 always present."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"
