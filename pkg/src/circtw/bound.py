"""Explicit odd-girth bound ``3(k+1) * 2**e`` with ``e = 2**(p**(k+1)) * ((4d)**((k+1)**2) + 1)**(k**2)``.

The exponent is always an exact integer. The full value is only built when
``e`` is at most :data:`~circtw.config.MATERIALIZE_EXPONENT_LIMIT`; otherwise
the bound is kept as ``(coefficient, exponent)`` with a decimal digit count
from a high-precision logarithm.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import mpmath

from .config import MATERIALIZE_EXPONENT_LIMIT


@dataclass(frozen=True)
class BigBound:
    """``coefficient * 2**exponent``; ``value`` is set when materialized."""

    coefficient: int
    exponent: int
    digits: int
    value: Optional[int] = None

    @property
    def materialized(self) -> bool:
        return self.value is not None

    def __str__(self):
        return f"{self.coefficient}*2^{self.exponent}"


def bound_exponent(k: int, p: int, d: int) -> int:
    return 2 ** (p ** (k + 1)) * ((4 * d) ** ((k + 1) ** 2) + 1) ** (k * k)


def decimal_digits(coefficient: int, exponent: int) -> int:
    """Number of decimal digits of ``coefficient * 2**exponent``, via logarithms."""
    # enough working precision that the fractional part is exact for any
    # exponent we can write down
    bits = max(64, 2 * exponent.bit_length() + 64)
    with mpmath.workprec(bits):
        x = mpmath.log10(coefficient) + exponent * mpmath.log10(2)
        return int(mpmath.floor(x)) + 1


def _check(k, p, d):
    if k < 1 or p < 3 or d < 1:
        raise ValueError("need k >= 1, p >= 3, d >= 1")


def _make(coefficient: int, e: int, limit: int) -> BigBound:
    value = coefficient << e if e <= limit else None
    return BigBound(coefficient, e, decimal_digits(coefficient, e), value)


def girth_bound(k: int, p: int, d: int, limit: int = MATERIALIZE_EXPONENT_LIMIT) -> BigBound:
    """Odd-girth above which tree-width ``k`` graphs have circular chromatic number at most ``p/q``."""
    _check(k, p, d)
    return _make(3 * (k + 1), bound_exponent(k, p, d), limit)


def order_bound(k: int, p: int, d: int, limit: int = MATERIALIZE_EXPONENT_LIMIT) -> BigBound:
    """Bound ``(k+1) * 2**e`` on the largest gadget order."""
    _check(k, p, d)
    return _make(k + 1, bound_exponent(k, p, d), limit)


__all__ = ["BigBound", "bound_exponent", "decimal_digits", "girth_bound", "order_bound"]
