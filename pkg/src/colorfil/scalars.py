"""Exact scalar helpers shared across the package.

All coefficients in the library are exact: Python ints where possible,
fractions.Fraction otherwise.  Floats are rejected at the boundary so
rounding error can never leak into a rank or dimension.
"""

from __future__ import annotations

from fractions import Fraction

Coeff = int | Fraction


def as_coeff(value) -> Coeff:
    """Coerce a user-supplied value to an exact scalar.

    Accepts ints, Fractions and strings ("7", "-3/4", "0.5"); integral
    Fractions are collapsed back to int.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, str):
        return as_coeff(Fraction(value))
    raise TypeError(f"expected an exact scalar, got {type(value).__name__}: {value!r}")


def coeff_to_json(value: Coeff):
    """Encode a scalar for JSON: int when integral, else a "p/q" string."""
    value = as_coeff(value)
    if isinstance(value, int):
        return value
    return f"{value.numerator}/{value.denominator}"


def coeff_to_string(value: Coeff) -> str:
    """Encode a scalar as an exact rational string ("3", "-1/2")."""
    value = as_coeff(value)
    if isinstance(value, int):
        return str(value)
    return f"{value.numerator}/{value.denominator}"


def add_into(acc: dict, key, value: Coeff) -> None:
    """acc[key] += value, dropping the key when the sum cancels to zero."""
    new = acc.get(key, 0) + value
    if new:
        acc[key] = new
    else:
        acc.pop(key, None)
