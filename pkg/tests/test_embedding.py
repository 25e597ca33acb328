from fractions import Fraction
from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from topoarith.embedding import (
    BackAndForthState,
    ba_step,
    calkin_wilf,
    calkin_wilf_index,
    embed,
    embedding_table,
    inverse,
    rational_at,
    rational_index,
    simplest_between,
    transported_add,
    transported_mul,
    witness_pairing,
)
from topoarith.errors import BudgetExceededError, PreconditionError
from topoarith.orders import Ordering, fd_cmp
from topoarith.pairing import pair_cantor, pair_double, unpair_cantor, unpair_double

F = Fraction


@lru_cache(maxsize=None)
def state(steps: int) -> BackAndForthState:
    return BackAndForthState(budget=None).run(steps)


def test_enumeration_prefix():
    want = [0, 1, -1, F(1, 2), F(-1, 2), 2, -2, F(1, 3), F(-1, 3), F(3, 2), F(-3, 2)]
    assert [rational_at(j) for j in range(len(want))] == want


@given(st.integers(0, 1 << 40))
def test_enumeration_index_round_trip(j):
    assert rational_index(rational_at(j)) == j


@given(st.integers(1, 1 << 30))
def test_calkin_wilf_round_trip(n):
    assert calkin_wilf_index(calkin_wilf(n)) == n


def test_enumeration_is_injective_on_a_prefix():
    seen = {rational_at(j) for j in range(5000)}
    assert len(seen) == 5000


def test_simplest_between():
    assert simplest_between(None, None) == 0
    assert simplest_between(F(0), F(1)) == F(1, 2)
    assert simplest_between(F(1), None) == 2
    assert simplest_between(None, F(-1)) == -2
    assert simplest_between(F(1, 3), F(1, 2)) == F(2, 5)
    with pytest.raises(PreconditionError):
        simplest_between(F(1), F(1))


def test_simplest_between_has_least_index():
    pts = [rational_at(j) for j in range(40)]
    for a in pts:
        for b in pts:
            if a < b:
                c = simplest_between(a, b)
                assert a < c < b
                first = next(q for q in map(rational_at, range(10**6)) if a < q < b)
                assert c == first


def test_first_steps():
    s = BackAndForthState()
    for _ in range(5):
        ba_step(s)
    assert [(t, d, n, q) for t, d, n, q in s.log] == [
        (1, "forth", 0, 0), (2, "back", 1, 1), (3, "forth", 2, -1), (4, "back", 5, F(1, 2)), (5, "forth", 3, 2),
    ]


def test_embed_and_inverse_examples():
    s = BackAndForthState()
    assert embed(0, s) == 0
    assert inverse(F(1, 2), s) == 5
    assert transported_add(F(1), F(-1), s) == 2


def test_order_isomorphism_and_round_trip():
    s = state(1000)
    nats = s.naturals
    assert [s.forward[n] for n in nats] == sorted(s.forward.values())
    assert all(fd_cmp(a, b) is Ordering.LESS for a, b in zip(nats, nats[1:]))
    for n, q in s.forward.items():
        assert s.backward[q] == n


def test_prefix_stability():
    a, b = state(400), state(1000)
    assert b.log[:400] == a.log


def test_progress_bounds():
    s = state(1000)
    step_of = {n: t for t, _, n, _ in s.log}
    assert all(step_of[n] <= 2 * n + 1 for n in range(499))
    hit = {q: t for t, _, _, q in s.log}
    assert all(hit[rational_at(j)] <= 2 * j + 2 for j in range(499))


def test_advance_flag():
    s = BackAndForthState()
    with pytest.raises(PreconditionError):
        s.embed(3, advance=False)
    with pytest.raises(PreconditionError):
        s.inverse(F(1, 2), advance=False)


def test_budget_is_enforced():
    s = BackAndForthState(budget=3)
    with pytest.raises(BudgetExceededError):
        s.run(4)  # step 4 needs 5


def test_transported_identities():
    s = BackAndForthState(budget=None)
    zero, one = s.embed(0), s.embed(1)
    for n in range(30):
        q = s.embed(n)
        assert transported_add(q, zero, s) == q
        assert transported_mul(q, one, s) == q
        r = s.embed(2 * n + 1)
        assert transported_add(q, r, s) == transported_add(r, q, s) == s.embed(3 * n + 1)


def test_embedding_table_rows():
    rows = embedding_table(state(6))
    assert [r["n"] for r in rows] == sorted(r["n"] for r in rows)
    assert rows[0] == {"n": 0, "e": "0", "step": 1, "direction": "forth"}
    assert {"n": 5, "e": "1/2", "step": 4, "direction": "back"} in rows


def test_pairing_examples():
    assert pair_cantor(0, 0) == 0 and pair_double(0, 0) == 0
    assert pair_cantor(1, 2) == 8 and pair_double(1, 2) == 16
    assert unpair_cantor(8) == (1, 2) and unpair_double(16) == (1, 2)
    with pytest.raises(PreconditionError):
        unpair_double(7)
    with pytest.raises(PreconditionError):
        pair_cantor(-1, 0)


def test_pair_double_is_a_bijection_onto_the_evens():
    seen = {int(pair_double(n, m)) for n in range(120) for m in range(120)}
    assert len(seen) == 120 * 120
    assert all(v % 2 == 0 for v in seen)
    for z in range(0, 2000, 2):
        assert pair_double(*unpair_double(z)) == z


@pytest.mark.parametrize("n, m, k", [(1, 2, 4), (0, 0, 3), (7, 9, 6)])
def test_witness_pairing(n, m, k):
    w = witness_pairing(n, m, k)
    assert w.target.contains(int(pair_double(n, m)))
    assert len(w.target.s) == k
    assert w.check_symbolic()
    assert w.check_pointwise(1 << 7).ok
