import random
from fractions import Fraction
from functools import cmp_to_key

import pytest
from hypothesis import given, settings, strategies as st

from topoarith.errors import EmptyIntervalError, PreconditionError
from topoarith.orders import (
    OrderKind,
    Ordering,
    between,
    compare,
    fd_cmp,
    fd_least_between,
    fd_sort_key,
    from_rankv,
    least_in_interval,
    rank,
    rank3,
    rankv,
    ranks,
    signed_cmp,
    unbounded_witnesses,
    variant_cmp,
)

L, E, G = Ordering.LESS, Ordering.EQUAL, Ordering.GREATER
naturals = st.integers(min_value=0, max_value=1 << 70)
integers = st.integers(min_value=-(1 << 70), max_value=1 << 70)
FD, VAR, SGN = OrderKind.FINAL_DIGITS, OrderKind.VARIANT, OrderKind.SIGNED


@pytest.mark.parametrize(
    "fn, a, b, want",
    [
        (fd_cmp, 2, 0, L), (fd_cmp, 0, 1, L), (fd_cmp, 5, 1, L), (fd_cmp, 1, 3, L), (fd_cmp, 9, 9, E),
        (variant_cmp, 0, 1, L), (variant_cmp, 0, 12345, L), (variant_cmp, 2, 1, L), (variant_cmp, 2, 6, L),
        (signed_cmp, -1, 0, L), (signed_cmp, 0, 1, L), (signed_cmp, -3, -1, L), (signed_cmp, 5, 1, L),
        (signed_cmp, 4, -4, G),
    ],
)
def test_comparator_examples(fn, a, b, want):
    assert fn(a, b) is want


def test_fd_rejects_negatives():
    with pytest.raises(PreconditionError):
        fd_cmp(-1, 2)


@pytest.mark.parametrize(
    "fn, a, want",
    [
        (rank3, 0, Fraction(1, 3)), (rank3, 1, Fraction(7, 9)), (rank3, 2, Fraction(7, 27)),
        (rankv, 0, 0), (rankv, 1, Fraction(1, 2)), (rankv, 6, Fraction(3, 8)),
        (ranks, 0, 0), (ranks, 1, Fraction(7, 9)), (ranks, -3, Fraction(-25, 27)),
    ],
)
def test_rank_examples(fn, a, want):
    assert fn(a) == want


@given(naturals, naturals)
def test_fd_agrees_with_rank3(n, m):
    assert fd_cmp(n, m) is Ordering.of(rank3(n), rank3(m))


@given(naturals, naturals)
def test_variant_agrees_with_rankv(n, m):
    assert variant_cmp(n, m) is Ordering.of(rankv(n), rankv(m))


@given(integers, integers)
def test_signed_agrees_with_ranks(x, y):
    assert signed_cmp(x, y) is Ordering.of(ranks(x), ranks(y))


@given(naturals, naturals)
def test_sort_key_matches_fd(n, m):
    assert Ordering.of(fd_sort_key(n), fd_sort_key(m)) is fd_cmp(n, m)


@given(naturals)
def test_from_rankv_inverts_rankv(n):
    assert from_rankv(rankv(n)) == n


def test_from_rankv_needs_dyadic():
    with pytest.raises(PreconditionError):
        from_rankv(Fraction(1, 3))


@given(naturals, naturals, naturals)
def test_fd_transitive(a, b, c):
    a, b, c = sorted((a, b, c), key=cmp_to_key(fd_cmp))
    assert fd_cmp(a, c) is not G


def test_between_examples():
    assert between(FD, 2, 0) == 6
    assert between(FD, 0, 1) == 5
    assert between(VAR, 0, 1) == 2
    with pytest.raises(EmptyIntervalError):
        between(FD, 0, 2)


@settings(max_examples=300)
@given(st.sampled_from(list(OrderKind)), st.integers(-(1 << 20), 1 << 20), st.integers(-(1 << 20), 1 << 20))
def test_between_is_strictly_between(kind, a, b):
    if not kind.signed:
        a, b = abs(a), abs(b)
    if a == b:
        return
    if compare(kind, a, b) is G:
        a, b = b, a
    c = between(kind, a, b)
    assert compare(kind, a, c) is L and compare(kind, c, b) is L
    assert rank(kind, a) < rank(kind, c) < rank(kind, b)


def test_fd_fast_path_matches_scan_exhaustively():
    vals = list(range(48))
    for lo in [None, *vals]:
        for hi in [None, *vals]:
            fast = least_in_interval(FD, lo, hi)
            slow = least_in_interval(FD, lo, hi, method="scan", budget=1 << 16)
            assert fast == slow, (lo, hi)


def test_fd_fast_path_matches_scan_on_random_pairs():
    rng = random.Random(5)
    for _ in range(300):
        lo, hi = rng.randrange(1 << 18), rng.randrange(1 << 18)
        if fd_cmp(lo, hi) is not L:
            continue
        assert fd_least_between(lo, hi) == least_in_interval(FD, lo, hi, method="scan", budget=1 << 24)


def test_fd_fast_path_budget_semantics():
    # the least element strictly between these is 1011126
    assert least_in_interval(FD, 486838, 28086) == 1011126
    assert least_in_interval(FD, 486838, 28086, budget=10**6) is None
    assert least_in_interval(FD, 486838, 28086, budget=1011127) == 1011126


@pytest.mark.parametrize(
    "kind, a, want",
    [(FD, 0, (2, 1)), (VAR, 0, (None, 1)), (SGN, 0, (-1, 1))],
)
def test_unbounded_examples(kind, a, want):
    assert unbounded_witnesses(kind, a) == want


@given(st.sampled_from(list(OrderKind)), integers)
def test_unbounded_witnesses_bracket(kind, a):
    if not kind.signed:
        a = abs(a)
    below, above = unbounded_witnesses(kind, a)
    if below is None:
        assert kind is VAR and a == 0
    else:
        assert compare(kind, below, a) is L
    assert compare(kind, a, above) is L


def test_parity_blocks():
    assert all(fd_cmp(e, 0) is L for e in range(2, 4097, 2))
    assert all(fd_cmp(0, o) is L for o in range(1, 4097, 2))


def test_order_kind_parse():
    assert OrderKind.parse("fd") is FD
    assert OrderKind.parse("signed") is SGN
