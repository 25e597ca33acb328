"""Pure Python/numpy implementations of the bulk order kernels.

This module is the fallback used when the compiled ``_ckernels`` extension
is unavailable; both expose the same functions with the same semantics.
Values are ``int64`` arrays.  Kind codes: 0 final-digits, 1 variant,
2 signed final-digits.
"""

from __future__ import annotations

from functools import cmp_to_key

import numpy as np

FD, VARIANT, SIGNED = 0, 1, 2
SCAN_CHUNK = 1 << 16

IMPLEMENTATION = "python"


def _bitlen(a: np.ndarray) -> np.ndarray:
    v = a.astype(np.int64, copy=True)
    out = np.zeros(v.shape, dtype=np.int64)
    for shift in (32, 16, 8, 4, 2, 1):
        big = v >= (np.int64(1) << shift)
        out[big] += shift
        v[big] >>= shift
    return out + (v > 0)


def _fd_pairs(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a, b = np.broadcast_arrays(np.asarray(a, np.int64), np.asarray(b, np.int64))
    x = a ^ b
    la, lb = _bitlen(a), _bitlen(b)
    short = np.minimum(la, lb)
    low = x & -x
    pos = _bitlen(low) - 1
    res = np.zeros(a.shape, dtype=np.int8)
    early = (x != 0) & (pos < short)
    res[early] = np.where(((a[early] >> pos[early]) & 1) == 1, 1, -1)
    a_longer = (x != 0) & ~early & (la > lb)
    res[a_longer] = np.where(((a[a_longer] >> lb[a_longer]) & 1) == 1, 1, -1)
    b_longer = (x != 0) & ~early & (lb > la)
    res[b_longer] = np.where(((b[b_longer] >> la[b_longer]) & 1) == 1, -1, 1)
    return res


def _variant_pairs(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a, b = np.broadcast_arrays(np.asarray(a, np.int64), np.asarray(b, np.int64))
    x = a ^ b
    low = x & -x
    res = np.where((a & low) != 0, 1, -1).astype(np.int8)
    res[x == 0] = 0
    return res


def _signed_pairs(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a, b = np.broadcast_arrays(np.asarray(a, np.int64), np.asarray(b, np.int64))
    sa, sb = np.sign(a), np.sign(b)
    res = np.sign(sa - sb).astype(np.int8)
    pos = (sa > 0) & (sb > 0)
    res[pos] = _fd_pairs(a[pos], b[pos])
    neg = (sa < 0) & (sb < 0)
    res[neg] = -_fd_pairs(-a[neg], -b[neg])
    return res


_PAIRS = {FD: _fd_pairs, VARIANT: _variant_pairs, SIGNED: _signed_pairs}


def cmp_pairs(kind: int, a, b) -> np.ndarray:
    """Elementwise comparison ``cmp(a[i], b[i])`` as -1/0/1 (broadcasting)."""
    return _PAIRS[kind](a, b)


def cmp_many(kind: int, values, b: int) -> np.ndarray:
    """``cmp(values[i], b)`` for every entry of ``values``."""
    return _PAIRS[kind](np.asarray(values, np.int64), np.int64(b))


def candidate(kind: int, i: int) -> int:
    if kind != SIGNED:
        return i
    return (i + 1) // 2 if i % 2 else -(i // 2)


def _candidates(kind: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)
    if kind != SIGNED:
        return idx
    return np.where(idx % 2 == 1, (idx + 1) // 2, -(idx // 2))


def scan_between(kind: int, lo: int, hi: int, has_lo: bool, has_hi: bool,
                 start: int, stop: int) -> int:
    """Index of the first carrier candidate in ``[start, stop)`` strictly
    between ``lo`` and ``hi``; an absent bound is unconstrained.  -1 if none."""
    pos, chunk = start, 64  # most answers are near the start; grow the window
    while pos < stop:
        end = min(stop, pos + chunk)
        chunk = min(chunk * 4, SCAN_CHUNK)
        vals = _candidates(kind, pos, end)
        ok = np.ones(vals.shape, dtype=bool)
        if has_lo:
            ok &= cmp_many(kind, vals, lo) > 0
        if has_hi:
            ok &= cmp_many(kind, vals, hi) < 0
        hits = np.flatnonzero(ok)
        if hits.size:
            return pos + int(hits[0])
        pos = end
    return -1


def oracle_disagreements(kind: int, values, keys) -> tuple[int, int, int]:
    """Count pairs ``i < j`` where the comparator and the integer keys disagree.

    Returns ``(count, i, j)`` with the first disagreeing pair, or -1 indices.
    """
    values = np.asarray(values, np.int64)
    keys = np.asarray(keys, np.int64)
    count, first = 0, (-1, -1)
    for i in range(len(values) - 1):
        got = cmp_many(kind, values[i + 1:], values[i])
        want = np.sign(keys[i + 1:] - keys[i])
        bad = np.flatnonzero(got != want)
        if bad.size:
            if count == 0:
                first = (i, i + 1 + int(bad[0]))
            count += int(bad.size)
    return count, first[0], first[1]


def antisymmetry_failures(kind: int, values) -> tuple[int, int, int]:
    """Check reflexive equality and ``cmp(a, b) == -cmp(b, a) != 0`` for a != b
    over every ordered pair drawn from ``values``."""
    values = np.asarray(values, np.int64)
    count, first = 0, (-1, -1)
    for i in range(len(values)):
        fwd = cmp_many(kind, values, values[i])
        back = -cmp_pairs(kind, np.int64(values[i]), values)
        bad = (fwd != back) | ((fwd == 0) != (values == values[i]))
        idx = np.flatnonzero(bad)
        if idx.size:
            if count == 0:
                first = (int(idx[0]), i)
            count += int(idx.size)
    return count, first[0], first[1]


def transitivity_failures(kind: int, triples) -> tuple[int, int]:
    """Check ``a <= b <= c  =>  a <= c`` (strict if either step is strict)
    and the mirror statement for every row ``(a, b, c)``."""
    t = np.asarray(triples, np.int64).reshape(-1, 3)
    ab = cmp_pairs(kind, t[:, 0], t[:, 1]).astype(np.int64)
    bc = cmp_pairs(kind, t[:, 1], t[:, 2]).astype(np.int64)
    ac = cmp_pairs(kind, t[:, 0], t[:, 2]).astype(np.int64)
    up = (ab <= 0) & (bc <= 0)
    down = (ab >= 0) & (bc >= 0)
    bad = (up & ((ac > 0) | ((ab + bc < 0) & (ac == 0))))
    bad |= down & ((ac < 0) | ((ab + bc > 0) & (ac == 0)))
    idx = np.flatnonzero(bad)
    return int(idx.size), (int(idx[0]) if idx.size else -1)


def _scalar_fd(n: int, m: int) -> int:
    if n == m:
        return 0
    x = n ^ m
    p = (x & -x).bit_length() - 1
    ln, lm = n.bit_length(), m.bit_length()
    if p < min(ln, lm):
        return 1 if (n >> p) & 1 else -1
    if ln > lm:
        return 1 if (n >> lm) & 1 else -1
    return -1 if (m >> ln) & 1 else 1


def _scalar(kind: int, a: int, b: int) -> int:
    if kind == FD:
        return _scalar_fd(a, b)
    if kind == VARIANT:
        if a == b:
            return 0
        x = a ^ b
        return 1 if a & x & -x else -1
    sa, sb = (a > 0) - (a < 0), (b > 0) - (b < 0)
    if sa != sb:
        return (sa > sb) - (sa < sb)
    if sa > 0:
        return _scalar_fd(a, b)
    if sa < 0:
        return _scalar_fd(-b, -a)
    return 0


def sort_values(kind: int, values) -> np.ndarray:
    """``values`` sorted ascending in the order of ``kind``."""
    vals = [int(v) for v in np.asarray(values, np.int64)]
    vals.sort(key=cmp_to_key(lambda a, b: _scalar(kind, a, b)))
    return np.asarray(vals, dtype=np.int64)
