"""Exact rational scalars.

``fractions.Fraction`` already keeps values in lowest terms with a positive
denominator, so it is used directly; this module only adds coercion and the
``"num/den"`` string form used by the JSON formats.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction.

    Floats are refused: nothing in this package is allowed to go through
    binary floating point.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    num, sep, den = text.partition("/")
    try:
        if sep:
            d = int(den)
            if d == 0:
                raise ZeroDivisionError
            return Fraction(int(num), d)
        return Fraction(int(num))
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None
    except ValueError:
        raise ValueError(f"not an exact rational: {text!r}") from None


def format_rational(value) -> str:
    """Canonical wire form, always ``num/den``."""
    q = as_rational(value)
    return f"{q.numerator}/{q.denominator}"


def pretty_rational(value) -> str:
    """Display form: integers without a denominator."""
    q = as_rational(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
