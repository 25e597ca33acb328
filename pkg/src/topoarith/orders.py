"""The three digit-defined total orders and their rational rank maps.

* final-digits (``fd``) on the naturals: compare binary digits from the least
  significant end; when one numeral runs out first, the longer one is lower if
  its next digit is 0 and higher if it is 1.
* variant on the naturals: compare from the least significant end, reading
  absent high digits as 0.  Zero is the least element.
* signed final-digits on the integers: negatives, then zero, then positives;
  positives compare by ``fd`` on magnitudes, negatives by the mirror image.

The rank maps ``rank3``, ``rankv`` and ``ranks`` embed each order into the
exact rationals.  They are deliberately written from a different formula than
the comparators so that each can check the other.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterator, Optional

from . import kernels
from .errors import EmptyIntervalError, PreconditionError
from .numerals import Numeral

__all__ = [
    "OrderKind",
    "Ordering",
    "fd_cmp",
    "fd_sort_key",
    "variant_cmp",
    "signed_cmp",
    "compare",
    "rank3",
    "rankv",
    "ranks",
    "rank",
    "from_rankv",
    "between",
    "least_in_interval",
    "fd_least_between",
    "unbounded_witnesses",
    "carrier_value",
    "carrier_index",
    "scan_order",
]


class OrderKind(enum.Enum):
    FINAL_DIGITS = "fd"
    VARIANT = "variant"
    SIGNED = "signed"

    @property
    def code(self) -> int:
        return {"fd": kernels.FD, "variant": kernels.VARIANT, "signed": kernels.SIGNED}[self.value]

    @property
    def signed(self) -> bool:
        return self is OrderKind.SIGNED

    @classmethod
    def parse(cls, text: str) -> "OrderKind":
        aliases = {
            "fd": cls.FINAL_DIGITS,
            "final-digits": cls.FINAL_DIGITS,
            "finaldigits": cls.FINAL_DIGITS,
            "variant": cls.VARIANT,
            "signed": cls.SIGNED,
            "signed-final-digits": cls.SIGNED,
        }
        try:
            return aliases[text.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown order kind {text!r}") from None


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, a, b) -> "Ordering":
        return cls((a > b) - (a < b))


def _natural(n: int) -> int:
    n = int(n)
    if n < 0:
        raise PreconditionError(f"{n} is not a natural number")
    return n


def fd_cmp(n: int, m: int) -> Ordering:
    n, m = _natural(n), _natural(m)
    if n == m:
        return Ordering.EQUAL
    diff = n ^ m
    first = (diff & -diff).bit_length() - 1  # 0-based position of first disagreement
    ln, lm = n.bit_length(), m.bit_length()
    if first < min(ln, lm):
        return Ordering.GREATER if (n >> first) & 1 else Ordering.LESS
    # one numeral is exhausted; the longer one's next digit decides
    if ln > lm:
        return Ordering.GREATER if (n >> lm) & 1 else Ordering.LESS
    return Ordering.LESS if (m >> ln) & 1 else Ordering.GREATER


_KEY_DIGITS = str.maketrans("01", "02")


def fd_sort_key(n: int) -> str:
    """A string whose ordinary ordering is the fd order.

    Digits read from the least significant end become ``0`` and ``2`` and
    the end of the numeral becomes ``1``, which sits between them.
    """
    n = _natural(n)
    if n == 0:
        return "1"
    return bin(n)[:1:-1].translate(_KEY_DIGITS) + "1"


def variant_cmp(n: int, m: int) -> Ordering:
    n, m = _natural(n), _natural(m)
    if n == m:
        return Ordering.EQUAL
    diff = n ^ m
    return Ordering.GREATER if n & diff & -diff else Ordering.LESS


def signed_cmp(x: int, y: int) -> Ordering:
    x, y = int(x), int(y)
    sx, sy = (x > 0) - (x < 0), (y > 0) - (y < 0)
    if sx != sy:
        return Ordering.of(sx, sy)
    if sx > 0:
        return fd_cmp(x, y)
    if sx < 0:
        return fd_cmp(-y, -x)
    return Ordering.EQUAL


_COMPARATORS = {
    OrderKind.FINAL_DIGITS: fd_cmp,
    OrderKind.VARIANT: variant_cmp,
    OrderKind.SIGNED: signed_cmp,
}


def compare(kind: OrderKind, a: int, b: int) -> Ordering:
    return _COMPARATORS[kind](a, b)


def rank3(n: int) -> Fraction:
    """``sum(2*d_i / 3**i) + 3**-(k+1)`` over the ``k`` digits of ``n``."""
    n = _natural(n)
    k = n.bit_length()
    numerator = 0
    for i in range(k):
        numerator = 3 * numerator + 2 * ((n >> i) & 1)
    return Fraction(3 * numerator + 1, 3 ** (k + 1))


def rankv(n: int) -> Fraction:
    """``sum(d_i / 2**i)``: the digits of ``n`` read as a binary fraction, reversed."""
    n = _natural(n)
    k = n.bit_length()
    numerator = 0
    for i in range(k):
        numerator = 2 * numerator + ((n >> i) & 1)
    return Fraction(numerator, 1 << k)


def ranks(x: int) -> Fraction:
    x = int(x)
    if x == 0:
        return Fraction(0)
    r = rank3(abs(x))
    return r if x > 0 else -r


def rank(kind: OrderKind, a: int) -> Fraction:
    return {OrderKind.FINAL_DIGITS: rank3, OrderKind.VARIANT: rankv, OrderKind.SIGNED: ranks}[kind](a)


def from_rankv(q: Fraction) -> Numeral:
    """Inverse of :func:`rankv` on dyadic rationals in ``[0, 1)``."""
    q = Fraction(q)
    den = q.denominator
    if not 0 <= q < 1 or den & (den - 1):
        raise PreconditionError(f"{q} is not a dyadic rational in [0, 1)")
    k = den.bit_length() - 1
    num = q.numerator
    value = 0
    for i in range(k):
        # digit i+1 is bit (k-1-i) of the numerator
        value |= ((num >> (k - 1 - i)) & 1) << i
    return Numeral(value)


def carrier_value(kind: OrderKind, index: int) -> int:
    """The ``index``-th carrier element in magnitude order.

    For the naturals this is ``index`` itself; for the integers the sequence is
    ``0, 1, -1, 2, -2, ...``.
    """
    if not kind.signed:
        return index
    return (index + 1) // 2 if index % 2 else -(index // 2)


def carrier_index(kind: OrderKind, value: int) -> int:
    if not kind.signed:
        return _natural(value)
    return 2 * value - 1 if value > 0 else -2 * value


def scan_order(kind: OrderKind, start: int = 0) -> Iterator[int]:
    i = start
    while True:
        yield carrier_value(kind, i)
        i += 1


def _check_carrier(kind: OrderKind, *values: Optional[int]) -> None:
    if not kind.signed:
        for v in values:
            if v is not None:
                _natural(v)


def _fd_least_above(r: int, nonzero: bool) -> int:
    """Least natural fd-above ``r`` (nonzero if asked)."""
    acc, shift = 0, 0
    while True:
        if r == 0:
            return acc | (1 << shift)
        if not r & 1:
            return acc | (int(nonzero) << shift)
        # r starts with 1: so must the answer
        acc |= 1 << shift
        shift += 1
        r >>= 1
        nonzero = False


def _fd_least_below(r: int, nonzero: bool) -> int:
    """Least natural fd-below ``r`` (nonzero if asked)."""
    acc, shift = 0, 0
    while True:
        if r & 1:
            if not nonzero:
                return acc
            # 1 works when the tail of r is odd, otherwise 2 is least
            return acc | ((1 if (r >> 1) & 1 else 2) << shift)
        if r == 0:
            return acc | (2 << shift)
        # r starts with 0: so must the answer, and the rest cannot be empty
        shift += 1
        r >>= 1
        nonzero = True


def fd_least_between(lo: Optional[int], hi: Optional[int]) -> Optional[int]:
    """Least natural strictly fd-between ``lo`` and ``hi``, by digit surgery.

    Walks the common low digits of ``lo`` and ``hi``; at the first
    disagreement the answer either ends there, follows ``lo`` and then climbs,
    or follows ``hi`` and then descends.  Returns ``None`` for an empty
    interval.  Agrees with the ascending scan of :func:`least_in_interval`.
    """
    if lo is not None and hi is not None and fd_cmp(lo, hi) is not Ordering.LESS:
        return None
    acc, shift, nonzero = 0, 0, False
    while True:
        if lo is None and hi is None:
            return acc | (int(nonzero) << shift)
        if lo is None:
            return acc | (_fd_least_below(hi, nonzero) << shift)
        if hi is None:
            return acc | (_fd_least_above(lo, nonzero) << shift)
        a = None if lo == 0 else lo & 1
        b = None if hi == 0 else hi & 1
        if a == b:
            acc |= a << shift  # type: ignore[operator]
            shift += 1
            lo, hi = lo >> 1, hi >> 1
            nonzero = a == 0
            continue
        if a == 0 and b == 1 and not nonzero:
            return acc  # the numeral may stop right here
        options = []
        if a is not None:
            options.append(a | (_fd_least_above(lo >> 1, a == 0) << 1))
        if b is not None:
            options.append(b | (_fd_least_below(hi >> 1, b == 0) << 1))
        return acc | (min(options) << shift)


def least_in_interval(
    kind: OrderKind,
    lo: Optional[int],
    hi: Optional[int],
    *,
    budget: Optional[int] = None,
    method: str = "auto",
) -> Optional[int]:
    """Least carrier element, in magnitude order, strictly between ``lo`` and
    ``hi`` in the order ``kind``; ``None`` bounds are open ends.

    Scans ``budget`` candidates at most (unbounded if ``None``) and returns
    ``None`` if the budget runs out.  For the final-digits order the default
    ``method="auto"`` computes the answer directly with
    :func:`fd_least_between` and applies the same budget cut-off;
    ``method="scan"`` forces the scan.
    """
    _check_carrier(kind, lo, hi)
    cmp = _COMPARATORS[kind]
    if lo is not None and hi is not None and cmp(lo, hi) is not Ordering.LESS:
        return None
    if kind is OrderKind.VARIANT and hi is not None and int(hi) == 0:
        return None
    if method not in ("auto", "scan"):
        raise ValueError(f"unknown method {method!r}")
    if kind is OrderKind.FINAL_DIGITS and method == "auto":
        found = fd_least_between(None if lo is None else int(lo), None if hi is None else int(hi))
        return found if budget is None or (found is not None and found < budget) else None
    chunk = 1 << 20
    start = 0
    use_kernel = kernels.fits(*(v for v in (lo, hi) if v is not None))
    while budget is None or start < budget:
        stop = start + chunk if budget is None else min(budget, start + chunk)
        if use_kernel and kernels.fits(carrier_value(kind, stop)):
            hit = kernels.scan_between(
                kind.code,
                0 if lo is None else int(lo),
                0 if hi is None else int(hi),
                lo is not None,
                hi is not None,
                start,
                stop,
            )
            if hit >= 0:
                return carrier_value(kind, hit)
        else:
            for i in range(start, stop):
                c = carrier_value(kind, i)
                if (lo is None or cmp(c, lo) > 0) and (hi is None or cmp(c, hi) < 0):
                    return c
        start = stop
        chunk = min(chunk * 2, 1 << 26)
    return None


def between(kind: OrderKind, a: int, b: int) -> int:
    """Least element in magnitude order lying strictly between ``a`` and ``b``.

    Raises :class:`EmptyIntervalError` unless ``a`` is strictly below ``b``.
    All three orders are dense, so the scan terminates.
    """
    _check_carrier(kind, a, b)
    if compare(kind, a, b) is not Ordering.LESS:
        raise EmptyIntervalError(f"{a} is not strictly below {b} in the {kind.value} order")
    found = least_in_interval(kind, a, b)
    assert found is not None
    return found


def unbounded_witnesses(kind: OrderKind, a: int) -> tuple[Optional[int], int]:
    """An element below and an element above ``a``.

    Built by digit surgery rather than search, so it works at any size.  The
    only ``None`` is the missing lower witness for the variant minimum 0.
    """
    _check_carrier(kind, a)
    a = int(a)
    if kind is OrderKind.FINAL_DIGITS:
        k = a.bit_length()
        return a + (1 << (k + 1)), a + (1 << k)
    if kind is OrderKind.VARIANT:
        k = a.bit_length()
        below = None if a == 0 else a - (1 << (k - 1))
        return below, a + (1 << k)
    if a == 0:
        return -1, 1
    m = abs(a)
    k = m.bit_length()
    # fd-below is appended "01", fd-above appended "1"; negatives mirror
    lower, upper = m + (1 << (k + 1)), m + (1 << k)
    if a > 0:
        return lower, upper
    return -upper, -lower

