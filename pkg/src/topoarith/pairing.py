"""Cantor pairing and its double, whose image is exactly the even numbers."""

from __future__ import annotations

from math import isqrt

from .errors import PreconditionError
from .numerals import Numeral

__all__ = ["pair_cantor", "pair_double", "unpair_cantor", "unpair_double"]


def _nat(v: int) -> int:
    v = int(v)
    if v < 0:
        raise PreconditionError(f"{v} is not a natural number")
    return v


def pair_cantor(n: int, m: int) -> Numeral:
    n, m = _nat(n), _nat(m)
    return Numeral((n + m) * (n + m + 1) // 2 + m)


def pair_double(n: int, m: int) -> Numeral:
    """``2 * pair_cantor(n, m)``, written without division so it is a plain polynomial."""
    n, m = _nat(n), _nat(m)
    return Numeral((n + m) * (n + m + 1) + 2 * m)


def unpair_cantor(z: int) -> tuple[Numeral, Numeral]:
    z = _nat(z)
    w = (isqrt(8 * z + 1) - 1) // 2
    m = z - w * (w + 1) // 2
    return Numeral(w - m), Numeral(m)


def unpair_double(z: int) -> tuple[Numeral, Numeral]:
    z = _nat(z)
    if z % 2:
        raise PreconditionError(f"{z} is odd, so it is not a value of pair_double")
    return unpair_cantor(z // 2)
