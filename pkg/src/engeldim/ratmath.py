"""Small exact-arithmetic helpers used by the other modules."""

from __future__ import annotations

from fractions import Fraction

import mpmath

# Bits of mantissa for the exact-to-float log conversion.  Well above
# double precision so the only rounding that matters is the final cast.
LOG_PRECISION = 80


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", integer, or decimal text into an exact rational."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc


def log_rational(value) -> float:
    """Natural log of a positive rational or integer.

    Goes through arbitrary-precision floats, so it stays accurate for
    values whose numerator or denominator would overflow a double.
    """
    num = value.numerator
    den = value.denominator
    if num <= 0:
        raise ValueError(f"log of non-positive value {value}")
    with mpmath.workprec(LOG_PRECISION):
        if den == 1:
            return float(mpmath.log(num))
        return float(mpmath.log(num) - mpmath.log(den))


def exact_kth_root(value: int, k: int) -> int | None:
    """Integer k-th root of value, or None when value is not a perfect power."""
    if value < 0 or k < 1:
        raise ValueError("need value >= 0 and k >= 1")
    if k == 1 or value in (0, 1):
        return value
    root = _floor_kth_root(value, k)
    return root if root**k == value else None


def _floor_kth_root(n: int, k: int) -> int:
    # integer Newton iteration; the seed is an upper bound on the root
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y
