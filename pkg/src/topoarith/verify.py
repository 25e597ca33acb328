"""Verification suites and probes, emitted as line-delimited report records.

Each suite is a list of case functions.  A case function receives the
truncation bound, the seed and a :class:`_Sink` and emits one record per
executed check.  Records are sorted by ``(suite, case, params)`` before they
leave :func:`run_suite`, so the output does not depend on execution order.
"""

from __future__ import annotations

import bisect
import json
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from itertools import product
from typing import Any, Callable, Iterable, Optional

import numpy as np

from . import kernels
from .continuity import (
    ContinuityWitness,
    Justification,
    NoWitnessUpTo,
    modulus_residue,
    operation,
    probe_continuity,
    probe_order_topology,
    refute_restrict17,
    refute_variant_successor,
    residue_determinism,
    witness_blend,
    witness_final_digits,
    witness_for,
    witness_segment,
    witness_translate,
    witness_union,
)
from .embedding import (
    BackAndForthState,
    calkin_wilf,
    calkin_wilf_index,
    embed,
    inverse,
    rational_at,
    rational_index,
    simplest_between,
    transported_add,
    transported_mul,
    witness_pairing,
)
from .errors import (
    CarrierMismatchError,
    EmptyIntervalError,
    TopoArithError,
    UnderflowError,
    UndefinedValuationError,
)
from .notation import format_open, format_topology, parse_open, parse_topology
from .numerals import DigitString, Numeral, Sign, add, metric2, mul, sub, suffix, trailing_digits, v2
from .orders import (
    OrderKind,
    Ordering,
    between,
    compare,
    fd_cmp,
    rank,
    rank3,
    rankv,
    ranks,
    signed_cmp,
    unbounded_witnesses,
    variant_cmp,
)
from .pairing import pair_cantor, pair_double, unpair_cantor, unpair_double
from .render import figure_position, leaf_sequence
from .topology import (
    EMPTY,
    WHOLE,
    AugmentInitial,
    Blend,
    Discrete,
    FinalDigits,
    FinalSegments,
    InitialSegment,
    InitialSegments,
    IsolateBelow,
    OrderInterval,
    OrderTopology,
    Restrict,
    SignedFinalDigits,
    SignedSuffixClass,
    Singleton,
    SuffixClass,
    ZeroTail,
    basic_nbhd,
    intersect_suffix,
    is_isolated,
    member,
    meet,
    suffix_class_as_right_open,
)

__all__ = ["SUITES", "CLAIMS", "ReportRecord", "run_suite", "run_probe", "dumps", "any_failed"]

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


def _plain(v: Any) -> Any:
    """JSON-ready copy of ``v``; rationals become ``"p/q"`` strings."""
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, (int, np.integer)):
        return int(v)
    if isinstance(v, (float, np.floating)):
        return float(v)
    if isinstance(v, str):
        return v
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, np.ndarray)):
        return [_plain(x) for x in v]
    if isinstance(v, Ordering):
        return v.name
    if hasattr(v, "to_dict"):
        return _plain(v.to_dict())
    return str(v)


@dataclass(frozen=True)
class ReportRecord:
    suite: str
    case: str
    params: dict
    status: str
    counterexample: Any = None
    duration: Optional[float] = None
    evidence: Any = None

    def sort_key(self) -> tuple[str, str, str]:
        return self.suite, self.case, json.dumps(self.params, sort_keys=True)

    def to_dict(self) -> dict:
        d = {
            "suite": self.suite,
            "case": self.case,
            "params": self.params,
            "status": self.status,
            "counterexample": self.counterexample,
            "duration": self.duration,
        }
        if self.evidence is not None:
            d["evidence"] = self.evidence
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, sort_keys=False, separators=(",", ":"))


class _Sink:
    def __init__(self, suite: str, timings: bool) -> None:
        self.suite = suite
        self.timings = timings
        self.records: list[ReportRecord] = []
        self._t0 = time.perf_counter()

    def _elapsed(self) -> Optional[float]:
        if not self.timings:
            return None
        now = time.perf_counter()
        ms, self._t0 = round((now - self._t0) * 1000, 3), now
        return ms

    def emit(self, case: str, params: dict, ok: Optional[bool], counterexample: Any = None,
             evidence: Any = None) -> None:
        status = INCONCLUSIVE if ok is None else (PASS if ok else FAIL)
        if status == FAIL and counterexample is None:
            counterexample = {"detail": "check returned false"}
        self.records.append(
            ReportRecord(self.suite, case, _plain(params), status,
                         None if status == PASS else _plain(counterexample),
                         self._elapsed(), _plain(evidence))
        )

    def check(self, case: str, params: dict, fn: Callable[[], Any]) -> None:
        """Run ``fn``; it returns ``None`` on success or a counterexample."""
        self._t0 = time.perf_counter()
        try:
            bad = fn()
        except Exception as exc:  # noqa: BLE001 - any crash is a failed check
            self.emit(case, params, False, {"error": f"{type(exc).__name__}: {exc}"})
            return
        self.emit(case, params, bad is None, bad)

    def expect(self, case: str, params: dict, fn: Callable[[], Any], want: Any) -> None:
        def run():
            got = fn()
            return None if got == want else {"got": got, "want": want}
        self.check(case, params, run)

    def raises(self, case: str, params: dict, fn: Callable[[], Any], exc: type) -> None:
        def run():
            try:
                got = fn()
            except exc:
                return None
            return {"got": got, "want": exc.__name__}
        self.check(case, params, run)


def _cap(max_: int, nominal: int) -> int:
    return max(1, min(int(max_), nominal))


def _strings(max_len: int, min_len: int = 0) -> Iterable[DigitString]:
    for L in range(min_len, max_len + 1):
        for bits in product((0, 1), repeat=L):
            yield DigitString(bits)


# ---------------------------------------------------------------------------
# numerals


def _numerals_examples(max_: int, seed: int, out: _Sink) -> None:
    c = "examples"
    out.expect(c, {"op": "suffix", "args": [6, 5]}, lambda: str(suffix(6, 5)), "00110")
    out.expect(c, {"op": "suffix", "args": [0, 3]}, lambda: str(suffix(0, 3)), "000")
    out.expect(c, {"op": "suffix", "args": [13, 2]}, lambda: suffix(13, 2).bits, (1, 0))
    out.expect(c, {"op": "v2", "args": [32]}, lambda: v2(32), 5)
    out.expect(c, {"op": "v2", "args": [1]}, lambda: v2(1), 0)
    out.expect(c, {"op": "v2", "args": [12]}, lambda: v2(12), 2)
    out.raises(c, {"op": "v2", "args": [0]}, lambda: v2(0), UndefinedValuationError)
    out.expect(c, {"op": "metric2", "args": [9, 9]}, lambda: metric2(9, 9), 0)
    out.expect(c, {"op": "metric2", "args": [6, 38]}, lambda: metric2(6, 38), Fraction(1, 32))
    out.expect(c, {"op": "metric2", "args": [1, 2]}, lambda: metric2(1, 2), 1)
    out.expect(c, {"op": "add", "args": [1261, 153]}, lambda: add(1261, 153), 1414)
    out.expect(c, {"op": "mul", "args": [1261, 153]}, lambda: mul(1261, 153), 192933)
    out.expect(c, {"op": "sub", "args": [18, 1]}, lambda: sub(18, 1), 17)
    out.raises(c, {"op": "sub", "args": [1, 18]}, lambda: sub(Numeral(1), Numeral(18)), UnderflowError)
    out.expect(c, {"op": "trailing_digits", "args": [1414, 3, 10]}, lambda: trailing_digits(1414, 3, 10), "414")
    out.expect(c, {"op": "trailing_digits", "args": [192933, 3, 10]},
               lambda: trailing_digits(192933, 3, 10), "933")
    out.expect(c, {"op": "trailing_digits", "args": [6, 5, 2]}, lambda: trailing_digits(6, 5, 2), "00110")


def _numerals_roundtrip(max_: int, seed: int, out: _Sink) -> None:
    N = _cap(max_, 1 << 20)

    def run():
        for v in range(N + 1):
            n = Numeral(v)
            d = n.digits
            if (d and d[-1] != 1) or Numeral.from_digits(d) != v:
                return {"value": v, "digits": list(d)}
        return None

    out.check("roundtrip", {"max": N}, run)


def _v2_array(a: np.ndarray) -> np.ndarray:
    """2-adic valuation of nonzero int64 entries; -1 marks zero."""
    low = a & -a
    out = np.full(a.shape, -1, dtype=np.int64)
    nz = a != 0
    out[nz] = np.log2(np.abs(low[nz]).astype(np.float64)).astype(np.int64)
    return out


def _numerals_ultrametric(max_: int, seed: int, out: _Sink) -> None:
    # d(x, z) <= max(d(x, y), d(y, z)) only depends on a = x - y and b = y - z,
    # so all triples in [0, N] reduce to pairs of differences in [-N, N]
    N = _cap(max_, 1 << 10)

    def run():
        d = np.arange(-N, N + 1, dtype=np.int64)
        va = _v2_array(d)
        for i, a in enumerate(d):
            vb = va
            vab = _v2_array(a + d)
            # distances are 2**-v, zero distance is v = infinity
            inf = 1 << 40
            ea = inf if a == 0 else va[i]
            eb = np.where(d == 0, inf, vb)
            eab = np.where(vab < 0, inf, vab)
            bad = np.flatnonzero(eab < np.minimum(ea, eb))
            if bad.size:
                return {"x_minus_y": int(a), "y_minus_z": int(d[bad[0]])}
        return None

    out.check("ultrametric", {"max": N}, run)


def _numerals_equivalence(max_: int, seed: int, out: _Sink) -> None:
    N = _cap(max_, 1 << 12)
    xs = np.arange(N + 1, dtype=np.int64)
    for k in range(11):
        def run(k=k):
            mod = 1 << k
            step = max(1, (1 << 22) // (N + 1))
            for i in range(0, N + 1, step):
                X = xs[i:i + step, None]
                diff = X - xs[None, :]
                v = _v2_array(diff)
                by_metric = (diff == 0) | (v >= k)
                by_residue = (X % mod) == (xs[None, :] % mod)
                by_suffix = np.ones_like(by_residue)
                for j in range(k):
                    by_suffix &= ((X >> j) & 1) == ((xs[None, :] >> j) & 1)
                bad = np.argwhere((by_metric != by_residue) | (by_residue != by_suffix))
                if bad.size:
                    r, c = bad[0]
                    return {"x": int(X[r, 0]), "y": int(xs[c]), "k": k}
            rng = random.Random(seed * 1000 + k)
            for _ in range(200):
                x, y = rng.randrange(N + 1), rng.randrange(N + 1)
                if (metric2(x, y) <= Fraction(1, mod)) != (suffix(x, k) == suffix(y, k)):
                    return {"x": x, "y": y, "k": k, "via": "scalar"}
            return None

        out.check("metric-residue-suffix", {"max": N, "k": k}, run)


# ---------------------------------------------------------------------------
# orders

_KINDS = (OrderKind.FINAL_DIGITS, OrderKind.VARIANT, OrderKind.SIGNED)


def _carrier(kind: OrderKind, N: int) -> np.ndarray:
    lo = -N if kind.signed else 0
    return np.arange(lo, N + 1, dtype=np.int64)


def _orders_examples(max_: int, seed: int, out: _Sink) -> None:
    c = "examples"
    L, E, G = Ordering.LESS, Ordering.EQUAL, Ordering.GREATER
    for fn, a, b, want in (
        (fd_cmp, 2, 0, L), (fd_cmp, 0, 1, L), (fd_cmp, 5, 1, L), (fd_cmp, 1, 3, L), (fd_cmp, 7, 7, E),
        (variant_cmp, 0, 9, L), (variant_cmp, 2, 1, L), (variant_cmp, 2, 6, L),
        (signed_cmp, -1, 0, L), (signed_cmp, 0, 1, L), (signed_cmp, -3, -1, L), (signed_cmp, 5, 1, L),
        (signed_cmp, 1, 5, G),
    ):
        out.expect(c, {"op": fn.__name__, "args": [a, b]}, lambda fn=fn, a=a, b=b: fn(a, b), want)
    for fn, a, want in (
        (rank3, 0, Fraction(1, 3)), (rank3, 1, Fraction(7, 9)), (rank3, 2, Fraction(7, 27)),
        (rankv, 0, Fraction(0)), (rankv, 1, Fraction(1, 2)), (rankv, 6, Fraction(3, 8)),
        (ranks, 0, Fraction(0)), (ranks, 1, Fraction(7, 9)), (ranks, -3, Fraction(-25, 27)),
    ):
        out.expect(c, {"op": fn.__name__, "args": [a]}, lambda fn=fn, a=a: fn(a), want)
    for kind, a, b, want in (
        (OrderKind.FINAL_DIGITS, 2, 0, 6), (OrderKind.FINAL_DIGITS, 0, 1, 5), (OrderKind.VARIANT, 0, 1, 2),
    ):
        out.expect(c, {"op": "between", "args": [kind.value, a, b]},
                   lambda kind=kind, a=a, b=b: between(kind, a, b), want)
    out.raises(c, {"op": "between", "args": ["fd", 0, 2]},
               lambda: between(OrderKind.FINAL_DIGITS, 0, 2), EmptyIntervalError)
    for kind, a, want in (
        (OrderKind.FINAL_DIGITS, 0, (2, 1)), (OrderKind.VARIANT, 0, (None, 1)), (OrderKind.SIGNED, 0, (-1, 1)),
    ):
        out.expect(c, {"op": "unbounded_witnesses", "args": [kind.value, a]},
                   lambda kind=kind, a=a: unbounded_witnesses(kind, a), want)


def _orders_trichotomy(max_: int, seed: int, out: _Sink) -> None:
    N = _cap(max_, 1 << 12)
    for kind in _KINDS:
        def run(kind=kind):
            vals = _carrier(kind, N)
            count, i, j = kernels.antisymmetry_failures(kind.code, vals)
            if count:
                return {"failures": count, "a": int(vals[i]), "b": int(vals[j])}
            return None

        out.check("trichotomy", {"kind": kind.value, "max": N}, run)


def _orders_transitivity(max_: int, seed: int, out: _Sink) -> None:
    N = _cap(max_, 1 << 12)
    count = 10**5
    for kind in _KINDS:
        def run(kind=kind):
            rng = np.random.default_rng([seed, kind.code])
            lo = -N if kind.signed else 0
            triples = rng.integers(lo, N + 1, size=(count, 3), dtype=np.int64)
            # small carriers repeat values, which exercises the equal cases too
            bad, first = kernels.transitivity_failures(kind.code, triples)
            if bad:
                return {"failures": bad, "triple": triples[first].tolist()}
            return None

        out.check("transitivity", {"kind": kind.value, "max": N, "triples": count}, run)


def _orders_oracle(max_: int, seed: int, out: _Sink) -> None:
    N = _cap(max_, 1 << 14)
    for kind in _KINDS:
        def run(kind=kind):
            vals = _carrier(kind, N)
            ranked = sorted(vals.tolist(), key=lambda v: rank(kind, v))
            pos = {v: i for i, v in enumerate(ranked)}
            keys = np.fromiter((pos[v] for v in vals.tolist()), dtype=np.int64, count=len(vals))
            if len(set(rank(kind, v) for v in ranked)) != len(ranked):
                return {"detail": "rank map is not injective"}
            count, i, j = kernels.oracle_disagreements(kind.code, vals, keys)
            if count:
                return {"failures": count, "a": int(vals[i]), "b": int(vals[j])}
            return None

        out.check("oracle-agreement", {"kind": kind.value, "max": N}, run)


def _orders_figure(max_: int, seed: int, out: _Sink) -> None:
    nums = list(range(32))
    out.expect("figure1", {"order": "fd", "n": 32},
               lambda: sorted(nums, key=cmp_to_key(fd_cmp)), sorted(nums, key=figure_position))
    out.expect("figure1", {"order": "fd", "check": "leaf-sequence"},
               lambda: leaf_sequence(OrderKind.FINAL_DIGITS, 5), sorted(nums, key=cmp_to_key(fd_cmp)))
    out.expect("figure1", {"order": "variant", "check": "leaf-sequence"},
               lambda: leaf_sequence(OrderKind.VARIANT, 5), sorted(nums, key=cmp_to_key(variant_cmp)))
    signed = list(range(-31, 32))
    out.expect("figure1", {"order": "signed", "check": "leaf-sequence"},
               lambda: leaf_sequence(OrderKind.SIGNED, 5), sorted(signed, key=cmp_to_key(signed_cmp)))
    N = _cap(max_, 1 << 16)
    out.expect("variant-minimum", {"max": N},
               lambda: int(kernels.sort_values(kernels.VARIANT, np.arange(N + 1))[0]), 0)
    M = 1 << 16
    out.expect("variant-min-suffix-110", {"max": M},
               lambda: int(kernels.sort_values(kernels.VARIANT, np.arange(6, M + 1, 8))[0]), 6)


def _orders_parity(max_: int, seed: int, out: _Sink) -> None:
    N = _cap(max_, 1 << 12)

    def run():
        evens = np.arange(2, N + 1, 2, dtype=np.int64)
        odds = np.arange(1, N + 1, 2, dtype=np.int64)
        e = kernels.cmp_many(kernels.FD, evens, 0)
        o = kernels.cmp_many(kernels.FD, odds, 0)
        if (e >= 0).any():
            return {"even": int(evens[np.argmax(e >= 0)])}
        if (o <= 0).any():
            return {"odd": int(odds[np.argmax(o <= 0)])}
        return None

    out.check("parity-blocks", {"max": N}, run)


def _orders_density(max_: int, seed: int, out: _Sink) -> None:
    count = 10**4
    top = 1 << 20
    for kind in _KINDS:
        def run(kind=kind):
            rng = random.Random(f"{seed}:{kind.value}")
            done = 0
            while done < count:
                a = rng.randrange(-top, top + 1) if kind.signed else rng.randrange(top + 1)
                b = rng.randrange(-top, top + 1) if kind.signed else rng.randrange(top + 1)
                if a == b:
                    continue
                if compare(kind, a, b) is Ordering.GREATER:
                    a, b = b, a
                c = between(kind, a, b)
                if not (compare(kind, a, c) is Ordering.LESS and compare(kind, c, b) is Ordering.LESS):
                    return {"a": a, "b": b, "between": c}
                if not rank(kind, a) < rank(kind, c) < rank(kind, b):
                    return {"a": a, "b": b, "between": c, "via": "rank"}
                done += 1
            return None

        out.check("density", {"kind": kind.value, "pairs": count, "max": top}, run)


def _orders_unbounded(max_: int, seed: int, out: _Sink) -> None:
    N = _cap(max_, 1 << 12)
    for kind in _KINDS:
        def run(kind=kind):
            for a in _carrier(kind, N).tolist():
                below, above = unbounded_witnesses(kind, a)
                if below is None:
                    if not (kind is OrderKind.VARIANT and a == 0):
                        return {"a": a, "below": None}
                elif compare(kind, below, a) is not Ordering.LESS:
                    return {"a": a, "below": below}
                if compare(kind, a, above) is not Ordering.LESS:
                    return {"a": a, "above": above}
            return None

        out.check("unbounded", {"kind": kind.value, "max": N}, run)


# ---------------------------------------------------------------------------
# topology


def _topology_examples(max_: int, seed: int, out: _Sink) -> None:
    c = "examples"
    U = SuffixClass(DigitString.parse("00110"))
    out.expect(c, {"op": "member", "args": ["suffix(00110)", 6]}, lambda: member(U, 6), True)
    out.expect(c, {"op": "member", "args": ["suffix(00110)", 22]}, lambda: member(U, 22), False)
    out.expect(c, {"op": "member", "args": ["zerotail(3)", 0]}, lambda: member(ZeroTail(3), 0), True)
    out.raises(c, {"op": "member", "args": ["suffix(00110)", -6]}, lambda: member(U, -6), CarrierMismatchError)
    ds = DigitString.parse
    out.expect(c, {"op": "intersect_suffix", "args": ["10", "110"]},
               lambda: intersect_suffix(ds("10"), ds("110")), SuffixClass(ds("110")))
    out.expect(c, {"op": "intersect_suffix", "args": ["1", "0"]}, lambda: intersect_suffix(ds("1"), ds("0")), EMPTY)
    out.expect(c, {"op": "intersect_suffix", "args": ["0110", "0110"]},
               lambda: intersect_suffix(ds("0110"), ds("0110")), SuffixClass(ds("0110")))
    r17 = Restrict(Discrete(), 17)
    out.expect(c, {"op": "basic_nbhd", "args": ["finaldigits", 6, 5]},
               lambda: basic_nbhd(FinalDigits(), 6, 5), U)
    out.expect(c, {"op": "basic_nbhd", "args": [str(r17), 15]}, lambda: basic_nbhd(r17, 15), Singleton(15))
    out.expect(c, {"op": "basic_nbhd", "args": [str(r17), 30]}, lambda: basic_nbhd(r17, 30), WHOLE)
    out.expect(c, {"op": "is_isolated", "args": ["isolatebelow(finaldigits,17)", 15]},
               lambda: is_isolated(IsolateBelow(FinalDigits(), 17), 15), True)
    out.expect(c, {"op": "is_isolated", "args": ["finaldigits", 6]}, lambda: is_isolated(FinalDigits(), 6), False)
    out.expect(c, {"op": "is_isolated", "args": ["augmentinitial(finaldigits)", 1000]},
               lambda: is_isolated(AugmentInitial(FinalDigits()), 1000), True)
    for s, want in (("110", (6, 1)), ("00110", (6, 22)), ("1", (1, None))):
        out.expect(c, {"op": "suffix_class_as_right_open", "args": [s]},
                   lambda s=s: (lambda r: (r.lo, r.hi))(suffix_class_as_right_open(ds(s))), want)


def _topology_suffix_classes(max_: int, seed: int, out: _Sink) -> None:
    N = _cap(max_, 1 << 16)
    xs = np.arange(N + 1, dtype=np.int64)
    for L in range(11):
        def run(L=L):
            for s in _strings(L, L):
                m = s.value
                got = SuffixClass(s).mask(xs)
                residue = xs % s.modulus == m
                diff = xs - m
                ball = (diff == 0) | (_v2_array(diff) >= L)
                if not (np.array_equal(got, residue) and np.array_equal(got, ball)):
                    bad = int(xs[np.argmax((got != residue) | (got != ball))])
                    return {"s": str(s), "x": bad}
            return None

        out.check("suffix-residue-ball", {"len": L, "max": N}, run)


@lru_cache(maxsize=2)
def _packed_classes(N: int, max_len: int) -> dict[DigitString, np.ndarray]:
    xs = np.arange(N + 1, dtype=np.int64)
    return {s: np.packbits(SuffixClass(s).mask(xs)) for s in _strings(max_len)}


def _topology_intersections(max_: int, seed: int, out: _Sink) -> None:
    N = _cap(max_, 1 << 16)
    L = 8

    def run():
        packed = _packed_classes(N, L)
        names = list(packed)
        table = np.stack([packed[s] for s in names])
        empty = np.zeros_like(table[0])
        for s in names:
            actual = table & packed[s]
            claimed = []
            for t in names:
                r = intersect_suffix(s, t)
                claimed.append(empty if r is EMPTY else packed[r.s])
            bad = np.flatnonzero((actual != np.stack(claimed)).any(axis=1))
            if bad.size:
                return {"s": str(s), "t": str(names[bad[0]])}
        return None

    out.check("intersect-suffix", {"max_len": L, "max": N}, run)


def _topology_right_open(max_: int, seed: int, out: _Sink) -> None:
    N = _cap(max_, 1 << 16)
    xs = np.arange(N + 1, dtype=np.int64)
    for L in range(9):
        def run(L=L):
            for s in _strings(L, L):
                r = suffix_class_as_right_open(s)
                if r.lo != s.value:
                    return {"s": str(s), "lo": r.lo}
                got, want = r.mask(xs), SuffixClass(s).mask(xs)
                if not np.array_equal(got, want):
                    return {"s": str(s), "x": int(xs[np.argmax(got != want)])}
            return None

        out.check("right-open", {"len": L, "max": N}, run)


def _topology_restrict(max_: int, seed: int, out: _Sink) -> None:
    N = _cap(max_, 1 << 10)
    for inner, b in ((FinalDigits(), 17), (Discrete(), 17), (FinalDigits(), 40), (InitialSegments(), 9)):
        tau = Restrict(inner, b)

        def run(tau=tau, inner=inner, b=b):
            seg = InitialSegment(b)
            for x in range(N + 1):
                for h in (None, 0, 2, 5):
                    U = basic_nbhd(tau, x, h)
                    if x > b:
                        if U != WHOLE:
                            return {"x": x, "hint": h, "nbhd": str(U)}
                        continue
                    want = sorted(v for v in range(b + 1) if basic_nbhd(inner, x, h).contains(v))
                    fm = U.finite_members()
                    if fm is None or sorted(fm) != want or not U.contains(x):
                        return {"x": x, "hint": h, "nbhd": str(U)}
                    if meet(U, seg) != U and sorted(meet(U, seg).finite_members() or ()) != want:
                        return {"x": x, "hint": h, "nbhd": str(U)}
            return None

        out.check("restrict", {"topology": str(tau), "max": N}, run)


def _topology_blend(max_: int, seed: int, out: _Sink) -> None:
    N = _cap(max_, 1 << 10)
    specs = (
        Blend(Discrete(), FinalDigits(), 17),
        Blend(FinalDigits(), InitialSegments(), 20),
        Blend(Discrete(), OrderTopology(OrderKind.FINAL_DIGITS), 12),
    )
    for spec in specs:
        def run(spec=spec):
            probe = np.arange(4 * N + 1, dtype=np.int64)
            for x in range(N + 1):
                for h in (None, 0, 3):
                    U = basic_nbhd(spec, x, h)
                    if not U.contains(x):
                        return {"x": x, "hint": h, "nbhd": str(U)}
                    if x <= spec.b:
                        # A part: a fine-open subset of [0, b]
                        fm = U.finite_members()
                        fine = basic_nbhd(spec.fine, x, h)
                        if fm is None or any(v > spec.b or not fine.contains(v) for v in fm):
                            return {"x": x, "hint": h, "nbhd": str(U)}
                    else:
                        # U part: exactly the coarse neighbourhood
                        coarse = basic_nbhd(spec.coarse, x, h)
                        if not np.array_equal(U.mask(probe), coarse.mask(probe)):
                            return {"x": x, "hint": h, "nbhd": str(U)}
            return None

        out.check("blend", {"topology": str(spec), "max": N}, run)


def _topology_isolation(max_: int, seed: int, out: _Sink) -> None:
    N = _cap(max_, 1 << 12)
    for inner in (FinalDigits(), OrderTopology(OrderKind.FINAL_DIGITS), Discrete()):
        tau = IsolateBelow(inner, 17)

        def run(tau=tau, inner=inner):
            for x in range(N + 1):
                got = is_isolated(tau, x)
                want = True if x <= 17 else is_isolated(inner, x)
                if got != want:
                    return {"x": x, "got": got, "want": want}
            return None

        out.check("isolate-below", {"topology": str(tau), "max": N}, run)

    tau = AugmentInitial(FinalDigits())

    def run_aug():
        for x in range(N + 1):
            if is_isolated(tau, x) is not True:
                return {"x": x}
        return None

    out.check("augment-initial-isolates", {"topology": str(tau), "max": N}, run_aug)

    def run_fd():
        for x in range(_cap(N, 1 << 9) + 1):
            if is_isolated(FinalDigits(), x) is not False:
                return {"x": x}
        return None

    out.check("final-digits-no-isolated", {"max": _cap(N, 1 << 9)}, run_fd)


_NOTATION = (
    "suffix()", "suffix(00110)", "ssuffix(0110,+)", "ssuffix(1,-)", "sign(+)", "zerotail(3)",
    "zerotail(3,nozero)", "interval(fd,-inf,5)", "interval(variant,0,1)", "interval(signed,-3,inf)",
    "ropen(variant,6,22)", "ropen(variant,1,inf)", "initial(17)", "final(17)", "point(5)", "whole", "empty",
    "meet(suffix(110),initial(17))", "join(whole,point(3),point(5))",
)
_NOTATION_TOPOLOGIES = (
    "discrete", "indiscrete", "finaldigits", "signedfinaldigits", "order(fd)", "order(signed)",
    "rightopen(variant)", "initialsegments", "finalsegments", "restrict(discrete,[0,17])",
    "blend(discrete,finaldigits,[0,17])", "isolatebelow(finaldigits,17)",
    "union(finaldigits,initialsegments)", "augmentinitial(finaldigits)", "augmentfinal(order(signed))",
)


def _topology_notation(max_: int, seed: int, out: _Sink) -> None:
    for text in _NOTATION:
        def run(text=text):
            U = parse_open(text)
            again = format_open(U)
            return None if again == text and parse_open(again) == U else {"printed": again}

        out.check("notation", {"text": text}, run)
    for text in _NOTATION_TOPOLOGIES:
        def run(text=text):
            tau = parse_topology(text)
            again = format_topology(tau)
            return None if again == text and parse_topology(again) == tau else {"printed": again}

        out.check("notation", {"text": text}, run)

    def run_random():
        rng = random.Random(seed)
        for _ in range(500):
            s = DigitString(tuple(rng.randrange(2) for _ in range(rng.randrange(12))))
            x = rng.randrange(1 << 12)
            b = rng.randrange(64)
            for U in (SuffixClass(s), Singleton(x), InitialSegment(b),
                      OrderInterval(OrderKind.FINAL_DIGITS, x, None)):
                if parse_open(format_open(U)) != U:
                    return {"open": format_open(U)}
            if len(s):
                V = SignedSuffixClass(s, Sign.NEGATIVE if x % 2 else Sign.POSITIVE)
                if parse_open(format_open(V)) != V:
                    return {"open": format_open(V)}
            for tau in (Restrict(FinalDigits(), b), IsolateBelow(FinalDigits(), b)):
                if parse_topology(format_topology(tau)) != tau:
                    return {"topology": format_topology(tau)}
        return None

    out.check("notation-random", {"seed": seed, "count": 500}, run_random)


# ---------------------------------------------------------------------------
# continuity


def _pointwise(w: ContinuityWitness, bound: int) -> Any:
    res = w.check_pointwise(bound)
    if not res.ok:
        return {"witness": w.to_dict(), "inputs": res.counterexample}
    if w.justification is Justification.RESIDUE_MODULUS and not w.check_symbolic():
        return {"witness": w.to_dict(), "detail": "symbolic check failed"}
    return None


def _continuity_examples(max_: int, seed: int, out: _Sink) -> None:
    c = "examples"
    ds = DigitString.parse

    def desc(w: ContinuityWitness) -> tuple:
        return tuple(str(U) for U in w.neighborhoods), str(w.target), w.justification.value

    out.expect(c, {"op": "modulus_residue", "args": ["add", 3]}, lambda: modulus_residue("add", 3), 3)
    out.expect(c, {"op": "residue", "args": ["add", 5, 3, 8]},
               lambda: {(5 + 8 * i + 3 + 8 * j) % 8 for i in range(8) for j in range(8)}, {0})
    out.expect(c, {"op": "residue", "args": ["mul", 5, 3, 8]},
               lambda: {((5 + 8 * i) * (3 + 8 * j)) % 8 for i in range(8) for j in range(8)}, {7})
    out.expect(c, {"op": "witness_final_digits", "args": ["mul", 6, 5, 4]},
               lambda: desc(witness_final_digits("mul", 6, 5, 4)),
               (("suffix(0110)", "suffix(0101)"), "suffix(1110)", "residue-modulus"))
    out.expect(c, {"op": "witness_final_digits", "args": ["add", 0, 0, 3]},
               lambda: desc(witness_final_digits("add", 0, 0, 3)),
               (("suffix(000)", "suffix(000)"), "suffix(000)", "residue-modulus"))
    out.expect(c, {"op": "witness_final_digits", "args": ["add", 0, 0, 0]},
               lambda: desc(witness_final_digits("add", 0, 0, 0)),
               (("suffix()", "suffix()"), "suffix()", "residue-modulus"))
    out.raises(c, {"op": "witness_final_digits", "args": ["sub", 1, 2, 3]},
               lambda: witness_final_digits("sub", 1, 2, 3), UnderflowError)
    out.expect(c, {"op": "witness_translate", "args": [1, 1, 2]},
               lambda: desc(witness_translate(1, 1, 2)), (("suffix(01)",), "suffix(10)", "residue-modulus"))
    out.expect(c, {"op": "witness_translate", "args": [12, 6, 3]},
               lambda: desc(witness_translate(12, 6, 3)), (("suffix(110)",), "suffix(010)", "residue-modulus"))
    out.expect(c, {"op": "witness_segment", "args": ["add", "initialsegments", 3, 4, 10]},
               lambda: desc(witness_segment("add", InitialSegments(), 3, 4, 10)),
               (("initial(3)", "initial(4)"), "initial(10)", "monotone-segment"))
    out.expect(c, {"op": "witness_segment", "args": ["mul", "finalsegments", 3, 4, 12]},
               lambda: desc(witness_segment("mul", FinalSegments(), 3, 4, 12)),
               (("final(3)", "final(4)"), "final(12)", "monotone-segment"))
    iso = IsolateBelow(FinalDigits(), 17)
    out.expect(c, {"op": "witness_blend", "args": ["add", str(iso), 3, 5, "point(8)"]},
               lambda: desc(witness_blend("add", iso, 3, 5, Singleton(8))),
               (("point(3)", "point(5)"), "point(8)", "blend-case"))
    out.expect(c, {"op": "witness_blend", "args": ["mul", str(iso), 0, 100, "point(0)"]},
               lambda: desc(witness_blend("mul", iso, 0, 100, Singleton(0))),
               (("point(0)", "whole"), "point(0)", "zero-section"))
    rfd = Restrict(FinalDigits(), 17)
    target = meet(SuffixClass(ds("11")), InitialSegment(17))
    out.check(c, {"op": "witness_blend", "args": ["add", str(rfd), 3, 4, str(target)]},
              lambda: _pointwise(witness_blend("add", rfd, 3, 4, target), 1 << 10))
    for case, want in (("halving-at-30", 36), ("predecessor-at-18", 20)):
        out.expect(c, {"op": "refute_restrict17", "args": [case]}, lambda case=case: refute_restrict17(case).escape, want)
    out.expect(c, {"op": "refute_restrict17", "check": "every open around 30 holds 36"},
               lambda: basic_nbhd(Restrict(Discrete(), 17), 30).contains(36), True)
    for lo, hi, want in ((0, 3, 2), (2, 5, 6)):
        J = OrderInterval(OrderKind.VARIANT, lo, hi)
        out.expect(c, {"op": "refute_variant_successor", "args": [lo, hi]},
                   lambda J=J: refute_variant_successor(J).escape, want)

    def target_sanity():
        T = OrderInterval(OrderKind.VARIANT, 0, 1)
        xs = np.arange((1 << 16) + 1, dtype=np.int64)
        inside = xs[T.mask(xs)]
        if not T.contains(2) or (inside % 2).any() or 0 in inside:
            return {"members": inside[:8].tolist()}
        return None

    out.check(c, {"op": "refute_variant_successor", "check": "target holds only nonzero evens"}, target_sanity)


def _continuity_residues(max_: int, seed: int, out: _Sink) -> None:
    for k in range(11):
        def run(k=k):
            res = residue_determinism(k)
            return None if res.ok else {"inputs": res.counterexample, "k": k}

        out.check("residue-determinism", {"k": k}, run)


def _witness_catalogue(seed: int) -> list[tuple[str, Callable[[], ContinuityWitness]]]:
    rng = random.Random(seed)
    cat: list[tuple[str, Callable[[], ContinuityWitness]]] = []
    for op in ("add", "mul", "sub"):
        for _ in range(6):
            x, y, L = rng.randrange(1 << 12), rng.randrange(1 << 12), rng.randrange(2, 9)
            if op == "sub" and y > x:
                x, y = y, x
            cat.append((f"final_digits({op},{x},{y},{L})", lambda op=op, x=x, y=y, L=L: witness_final_digits(op, x, y, L)))
    for _ in range(6):
        k, x, L = rng.randrange(64), rng.randrange(1 << 12), rng.randrange(0, 9)
        cat.append((f"translate({k},{x},{L})", lambda k=k, x=x, L=L: witness_translate(k, x, L)))
    for op in ("add", "mul"):
        x, y = rng.randrange(1, 40), rng.randrange(1, 40)
        z = x + y if op == "add" else x * y
        cat.append((f"segment({op},initial,{x},{y})",
                    lambda op=op, x=x, y=y, z=z: witness_segment(op, InitialSegments(), x, y, z + 3)))
        cat.append((f"segment({op},final,{x},{y})",
                    lambda op=op, x=x, y=y, z=z: witness_segment(op, FinalSegments(), x, y, max(0, z - 3))))
    iso = IsolateBelow(FinalDigits(), 17)
    r17 = Restrict(FinalDigits(), 17)
    b17 = Blend(Discrete(), FinalDigits(), 17)
    for spec, op, x, y, target in (
        (iso, "add", 3, 5, Singleton(8)),
        (iso, "mul", 0, 100, Singleton(0)),
        (iso, "mul", 100, 0, Singleton(0)),
        (iso, "add", 30, 7, SuffixClass(suffix(37, 4))),
        (iso, "mul", 20, 3, SuffixClass(suffix(60, 5))),
        (r17, "add", 3, 4, meet(SuffixClass(suffix(7, 2)), InitialSegment(17))),
        (r17, "add", 30, 1, WHOLE),
        (b17, "mul", 2, 7, Singleton(14)),
        (b17, "add", 12, 9, SuffixClass(suffix(21, 3))),
    ):
        cat.append((f"blend({op},{spec},{x},{y},{target})",
                    lambda spec=spec, op=op, x=x, y=y, target=target: witness_blend(op, spec, x, y, target)))
    for _ in range(4):
        n, m, L = rng.randrange(65), rng.randrange(65), rng.randrange(2, 7)
        cat.append((f"pairing({n},{m},{L})", lambda n=n, m=m, L=L: witness_pairing(n, m, L)))
    return cat


def _continuity_soundness(max_: int, seed: int, out: _Sink) -> None:
    N = _cap(max_, 1 << 12)
    for name, build in _witness_catalogue(seed):
        out.check("witness-soundness", {"witness": name, "max": N}, lambda build=build: _pointwise(build(), N))


def _continuity_refuters(max_: int, seed: int, out: _Sink) -> None:
    count = 100
    for case in ("halving-at-30", "predecessor-at-18"):
        def run(case=case):
            w = refute_restrict17(case)
            for U in w.sample_neighborhoods(count, seed):
                ok, e = w.validate(U)
                if not ok:
                    return {"neighborhood": str(U), "escape": e}
            return None

        out.check("refuter", {"case": case, "neighborhoods": count, "seed": seed}, run)

    def run_variant():
        w = refute_variant_successor(OrderInterval(OrderKind.VARIANT, 0, 3))
        for U in w.sample_neighborhoods(count, seed):
            ok, e = w.validate(U)
            if not ok:
                return {"neighborhood": str(U), "escape": e}
        return None

    out.check("refuter", {"case": "variant-successor-at-1", "neighborhoods": count, "seed": seed}, run_variant)


def _continuity_union(max_: int, seed: int, out: _Sink) -> None:
    N = _cap(max_, 1 << 10)
    rng = random.Random(seed)
    for _ in range(6):
        op = rng.choice(("add", "mul"))
        x, y, L = rng.randrange(1, 60), rng.randrange(1, 60), rng.randrange(1, 6)
        z = x + y if op == "add" else x * y

        def run(op=op, x=x, y=y, L=L, z=z):
            a = witness_final_digits(op, x, y, L)
            b = witness_segment(op, InitialSegments(), x, y, z)
            w = witness_union(a, b)
            for U, V, W in zip(a.neighborhoods, b.neighborhoods, w.neighborhoods):
                probe = np.arange(N + 1, dtype=np.int64)
                if not np.array_equal(W.mask(probe), U.mask(probe) & V.mask(probe)):
                    return {"detail": "neighbourhood is not the intersection", "nbhd": str(W)}
            bad = _pointwise(w, N)
            if bad is not None:
                return bad
            via = witness_for(op, AugmentInitial(FinalDigits()), (x, y), w.target)
            return _pointwise(via, N)

        out.check("union-lemma", {"op": op, "point": [x, y], "len": L, "max": N}, run)


def _continuity_probes(max_: int, seed: int, out: _Sink) -> None:
    rng = random.Random(seed)
    for op in ("add", "mul"):
        for _ in range(8):
            x, y, L = rng.randrange(1 << 10), rng.randrange(1 << 10), rng.randrange(1, 8)
            z = x + y if op == "add" else x * y

            def run(op=op, x=x, y=y, L=L, z=z):
                res = probe_continuity(op, FinalDigits(), (x, y), SuffixClass(suffix(z, L)), seed=seed)
                if isinstance(res, NoWitnessUpTo):
                    return {"escapes": res.to_dict()}
                return None

            out.check("probe-final-digits", {"op": op, "point": [x, y], "len": L, "seed": seed}, run)

    def run_variant():
        target = OrderInterval(OrderKind.VARIANT, 0, 1)
        res = probe_continuity("successor", OrderTopology(OrderKind.VARIANT), (1,), target, seed=seed)
        if not isinstance(res, NoWitnessUpTo):
            return {"detail": "probe found a witness", "witness": res.to_dict()}
        w = refute_variant_successor(OrderInterval(OrderKind.VARIANT, 0, 3))
        for esc in res.escapes:
            U = basic_nbhd(OrderTopology(OrderKind.VARIANT), 1, esc.hint)
            e = esc.inputs[0]
            if e % 2 or not U.contains(e) or target.contains(e + 1):
                return {"escape": esc.to_dict()}
            ok, _ = w.validate(U)
            if not ok:
                return {"neighborhood": str(U)}
        return None

    out.check("probe-variant-successor", {"seed": seed}, run_variant)


# ---------------------------------------------------------------------------
# embedding


@lru_cache(maxsize=1)
def _shared_state() -> BackAndForthState:
    """One long-lived run; prefix stability makes sharing it safe."""
    return BackAndForthState(budget=None)


def _steps(steps: int) -> BackAndForthState:
    return BackAndForthState(budget=None).run(steps)


def _embedding_examples(max_: int, seed: int, out: _Sink) -> None:
    c = "examples"
    st = _steps(5)
    out.expect(c, {"op": "ba_step", "steps": 5},
               lambda: [(t, d, n, q) for t, d, n, q in st.log],
               [(1, "forth", 0, Fraction(0)), (2, "back", 1, Fraction(1)), (3, "forth", 2, Fraction(-1)),
                (4, "back", 5, Fraction(1, 2)), (5, "forth", 3, Fraction(2))])
    out.expect(c, {"op": "embed", "args": [0]}, lambda: embed(0, BackAndForthState()), 0)
    out.expect(c, {"op": "inverse", "args": ["1/2"]}, lambda: inverse(Fraction(1, 2), BackAndForthState()), 5)
    out.expect(c, {"op": "transported_add", "args": [1, -1]},
               lambda: transported_add(Fraction(1), Fraction(-1), BackAndForthState()), 2)
    out.expect(c, {"op": "enumeration", "first": 11},
               lambda: [rational_at(j) for j in range(11)],
               [Fraction(v) for v in ("0", "1", "-1", "1/2", "-1/2", "2", "-2", "1/3", "-1/3", "3/2", "-3/2")])
    out.expect(c, {"op": "pair_cantor", "args": [0, 0]}, lambda: pair_cantor(0, 0), 0)
    out.expect(c, {"op": "pair_double", "args": [0, 0]}, lambda: pair_double(0, 0), 0)
    out.expect(c, {"op": "pair_cantor", "args": [1, 2]}, lambda: pair_cantor(1, 2), 8)
    out.expect(c, {"op": "pair_double", "args": [1, 2]}, lambda: pair_double(1, 2), 16)
    out.expect(c, {"op": "witness_pairing", "args": [1, 2, 4]},
               lambda: str(witness_pairing(1, 2, 4).target), "suffix(0000)")
    out.expect(c, {"op": "witness_pairing", "args": [0, 0, 5]},
               lambda: [str(U) for U in witness_pairing(0, 0, 5).neighborhoods], ["suffix(00000)"] * 2)


def _embedding_enumeration(max_: int, seed: int, out: _Sink) -> None:
    N = _cap(max_, 5000)

    def run():
        seen: set[Fraction] = set()
        for j in range(N + 1):
            q = rational_at(j)
            if q in seen or rational_index(q) != j:
                return {"index": j, "value": q}
            seen.add(q)
        for n in range(1, N + 1):
            if calkin_wilf_index(calkin_wilf(n)) != n:
                return {"node": n}
        return None

    out.check("enumeration-bijection", {"max": N}, run)


def _embedding_forth(max_: int, seed: int, out: _Sink) -> None:
    steps = 2 * _cap(max_, 750)

    def run():
        st = _steps(steps)
        # neighbours come from the rank3 oracle, candidates from a plain scan
        placed: list[tuple[Fraction, Fraction]] = []
        seq = [rational_at(i) for i in range(4096)]
        seqf = np.array([float(v) for v in seq])
        for t, d, n, q in st.log:
            r = rank3(n)
            i = bisect.bisect_left(placed, (r,))
            if d == "forth":
                lo = placed[i - 1][1] if i else None
                hi = placed[i][1] if i < len(placed) else None
                # float rounding is monotone, so the loose float window misses nothing
                lof = -np.inf if lo is None else float(lo)
                hif = np.inf if hi is None else float(hi)
                j = None
                while j is None:
                    window = np.flatnonzero((seqf >= lof) & (seqf <= hif))
                    j = next((int(i) for i in window
                              if (lo is None or seq[i] > lo) and (hi is None or seq[i] < hi)), None)
                    if j is None:
                        seq.extend(rational_at(i) for i in range(len(seq), 2 * len(seq)))
                        seqf = np.array([float(v) for v in seq])
                if seq[j] != q or simplest_between(lo, hi) != q:
                    return {"step": t, "n": n, "got": q, "scan": seq[j]}
            placed.insert(i, (r, q))
        return None

    out.check("forth-fast-path", {"steps": steps}, run)


def _embedding_isomorphism(max_: int, seed: int, out: _Sink) -> None:
    steps, short = 2000, 1000
    st = _steps(steps)

    def order():
        pairs = sorted(st.forward.items(), key=lambda kv: kv[1])
        nats = [n for n, _ in pairs]
        if not kernels.fits(*nats):
            return {"detail": "natural outside the kernel range"}
        count, i, j = kernels.oracle_disagreements(kernels.FD, np.asarray(nats), np.arange(len(nats)))
        return None if count == 0 else {"failures": count, "n": nats[i], "m": nats[j]}

    def prefix():
        other = _steps(short)
        return None if st.log[:short] == other.log else {"detail": "logs differ"}

    def coverage():
        missing_n = [n for n in range(999) if n not in st.forward]
        missing_q = [j for j in range(999) if rational_at(j) not in st.backward]
        if missing_n or missing_q:
            return {"naturals": missing_n[:5], "rationals": missing_q[:5]}
        return None

    def progress():
        first = {}
        for t, _, n, q in st.log:
            first[n] = t
        for n in range(999):
            if first[n] > 2 * n + 1:
                return {"n": n, "step": first[n]}
        for j in range(999):
            t = first[st.backward[rational_at(j)]]
            if t > 2 * j + 2:
                return {"index": j, "step": t}
        return None

    def roundtrips():
        for n in range(501):
            if st.inverse(st.embed(n, advance=False), advance=False) != n:
                return {"n": n}
        for j in range(500):
            q = rational_at(j)
            if st.embed(st.inverse(q, advance=False), advance=False) != q:
                return {"q": q}
        return None

    out.check("order-isomorphism", {"steps": steps}, order)
    out.check("prefix-stability", {"steps": steps, "short": short}, prefix)
    out.check("coverage", {"steps": steps, "below": 999}, coverage)
    out.check("progress", {"steps": steps}, progress)
    out.check("roundtrip", {"steps": steps}, roundtrips)


def _embedding_transported(max_: int, seed: int, out: _Sink) -> None:
    P = _cap(max_, 200)
    st = _shared_state()
    st.embed(P * P)  # every product of two preimages is mapped from here on
    e = [st.embed(n, advance=False) for n in range(P + 1)]
    cap = P * P

    def identities():
        zero, one = e[0], e[1]
        for q in e:
            if transported_add(q, zero, st) != q or transported_mul(q, one, st) != q:
                return {"q": q}
        return None

    def commutative():
        for a in range(P + 1):
            for b in range(a + 1, P + 1):
                if transported_add(e[a], e[b], st) != transported_add(e[b], e[a], st):
                    return {"op": "add", "a": e[a], "b": e[b]}
                if transported_mul(e[a], e[b], st) != transported_mul(e[b], e[a], st):
                    return {"op": "mul", "a": e[a], "b": e[b]}
        return None

    def homomorphic():
        for a in range(P + 1):
            for b in range(P + 1):
                if transported_add(e[a], e[b], st) != st.embed(a + b) or transported_mul(e[a], e[b], st) != st.embed(a * b):
                    return {"a": a, "b": b}
        return None

    def sampled(kind: str):
        def run():
            rng = random.Random(f"{seed}:{kind}")
            done = 0
            while done < 2000:
                a, b, c = (rng.randrange(P + 1) for _ in range(3))
                A, B, C = e[a], e[b], e[c]
                if kind == "add-associative":
                    lhs = transported_add(transported_add(A, B, st), C, st)
                    rhs = transported_add(A, transported_add(B, C, st), st)
                elif kind == "mul-associative":
                    if a * b * c > cap:
                        continue
                    lhs = transported_mul(transported_mul(A, B, st), C, st)
                    rhs = transported_mul(A, transported_mul(B, C, st), st)
                else:
                    if a * (b + c) > cap:
                        continue
                    lhs = transported_mul(A, transported_add(B, C, st), st)
                    rhs = transported_add(transported_mul(A, B, st), transported_mul(A, C, st), st)
                if lhs != rhs:
                    return {"a": A, "b": B, "c": C}
                done += 1
            return None
        return run

    params = {"preimages": P, "seed": seed}
    out.check("transported", {**params, "law": "identities"}, identities)
    out.check("transported", {**params, "law": "commutative"}, commutative)
    out.check("transported", {**params, "law": "homomorphism"}, homomorphic)
    for kind in ("add-associative", "mul-associative", "distributive"):
        out.check("transported", {**params, "law": kind, "samples": 2000, "product_cap": cap}, sampled(kind))


def _embedding_pairing(max_: int, seed: int, out: _Sink) -> None:
    N = _cap(max_, 500)

    def injective():
        n, m = np.meshgrid(np.arange(N + 1, dtype=np.int64), np.arange(N + 1, dtype=np.int64), indexing="ij")
        z = (n + m) * (n + m + 1) + 2 * m
        if np.unique(z).size != z.size:
            return {"detail": "collision"}
        if (z % 2).any():
            return {"odd_value_at": np.argwhere(z % 2)[0].tolist()}
        for a, b in ((0, 0), (1, 2), (N, N), (3, 7)):
            if pair_double(a, b) != z[a, b] or 2 * pair_cantor(a, b) != z[a, b]:
                return {"n": a, "m": b}
        return None

    E = 10**4

    def evens():
        for z in range(0, E + 1, 2):
            n, m = unpair_double(z)
            if n > E or m > E or pair_double(n, m) != z:
                return {"z": z}
        for z in range(E + 1):
            if pair_cantor(*unpair_cantor(z)) != z:
                return {"z": z, "via": "cantor"}
        return None

    def odds():
        rng = np.random.default_rng(seed)
        s = rng.integers(0, 1000, size=10**5)
        m = (rng.random(10**5) * (s + 1)).astype(np.int64)
        n = s - m
        z = (n + m) * (n + m + 1) + 2 * m
        z = z[z <= 10**6]
        if (z % 2).any():
            return {"z": int(z[np.argmax(z % 2)])}
        for odd in range(1, 10**6, 99_991 * 2):
            try:
                unpair_double(odd)
            except TopoArithError:
                continue
            return {"z": odd, "detail": "odd value accepted"}
        return None

    out.check("pairing-injective", {"max": N}, injective)
    out.check("pairing-evens", {"max": E}, evens)
    out.check("pairing-no-odds", {"max": 10**6, "samples": 10**5, "seed": seed}, odds)
    for k in range(7):
        def run(k=k):
            mod = 1 << k
            for n in range(65):
                for m in range(65):
                    w = witness_pairing(n, m, k)
                    if w.target != SuffixClass(suffix(pair_double(n, m), k)):
                        return {"n": n, "m": m}
            ns, ms = np.meshgrid(np.arange(65), np.arange(65), indexing="ij")
            z = ((ns + ms) * (ns + ms + 1) + 2 * ms) % mod
            for i, j in product(range(4), repeat=2):
                a, b = ns + i * mod, ms + j * mod
                if (((a + b) * (a + b + 1) + 2 * b) % mod != z).any():
                    return {"lift": [i, j]}
            if k >= 3:
                for n, m in ((1, 2), (7, 64), (64, 0)):
                    bad = _pointwise(witness_pairing(n, m, k), 1 << 10)
                    if bad is not None:
                        return bad
            return None

        out.check("pairing-witness", {"k": k, "max": 64}, run)


# ---------------------------------------------------------------------------
# registry

Case = Callable[[int, int, _Sink], None]

SUITES: dict[str, tuple[Case, ...]] = {
    "numerals": (_numerals_examples, _numerals_roundtrip, _numerals_ultrametric, _numerals_equivalence),
    "orders": (_orders_examples, _orders_trichotomy, _orders_transitivity, _orders_oracle, _orders_figure,
               _orders_parity, _orders_density, _orders_unbounded),
    "topology": (_topology_examples, _topology_suffix_classes, _topology_intersections, _topology_right_open,
                 _topology_restrict, _topology_blend, _topology_isolation, _topology_notation),
    "continuity": (_continuity_examples, _continuity_residues, _continuity_soundness, _continuity_refuters,
                   _continuity_union, _continuity_probes),
    "embedding": (_embedding_examples, _embedding_enumeration, _embedding_forth, _embedding_isomorphism,
                  _embedding_transported, _embedding_pairing),
}


def run_suite(name: str, max: int = 1 << 12, seed: int = 0, *, timings: bool = False) -> list[ReportRecord]:
    """Run one suite (or ``"all"``) and return its records in canonical order."""
    names = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise KeyError(f"unknown suite {name!r}; expected one of {['all', *SUITES]}")
    records: list[ReportRecord] = []
    for n in names:
        sink = _Sink(n, timings)
        for case in SUITES[n]:
            case(max, seed, sink)
        records.extend(sink.records)
    return sorted(records, key=ReportRecord.sort_key)


# ---------------------------------------------------------------------------
# probes

CLAIMS = ("order-topology-equality", "signed-add-continuity", "transported-continuity")


def _probe_order_topology(bound: int, seed: int, out: _Sink) -> None:
    for s in _strings(8, 1):
        def run(s=s):
            return probe_order_topology(s, bound)

        _probe(out, "order-topology-equality", {"s": str(s), "bound": bound}, run,
               lambda r: r["convex"] and not r["sandwich_failure_count"]
               and r["convention_position"] in ("interior", "outside-truncation"))


def _probe(out: _Sink, case: str, params: dict, fn: Callable[[], Any], consistent: Callable[[Any], bool]) -> None:
    """Record a probe.  The status is always inconclusive; the evidence says
    whether this truncation is consistent with the claim."""
    out._t0 = time.perf_counter()
    try:
        evidence = fn()
        evidence = {"consistent": bool(consistent(evidence)), **evidence}
    except Exception as exc:  # noqa: BLE001 - probes report, they do not gate
        evidence = {"consistent": None, "error": f"{type(exc).__name__}: {exc}"}
    out.emit(case, params, None, evidence=evidence)


def _probe_signed_add(bound: int, seed: int, out: _Sink) -> None:
    tau = SignedFinalDigits()
    rng = random.Random(seed)
    points = [(1, -2), (3, -2), (-1, 2)]
    while len(points) < 6:
        x, y = rng.randrange(1, 64), -rng.randrange(1, 64)
        if x + y != 0 and (x, y) not in points:
            points.append((x, y))
    for x, y in points:
        z = x + y
        target = SignedSuffixClass(suffix(z, 1), Sign.POSITIVE if z > 0 else Sign.NEGATIVE)

        def run(x=x, y=y, target=target):
            res = probe_continuity("add", tau, (x, y), target, search_bound=bound, seed=seed)
            return {"point": [x, y], "target": str(target), "result": res.to_dict(),
                    "found_witness": not isinstance(res, NoWitnessUpTo)}

        _probe(out, "signed-add-continuity", {"point": [x, y], "bound": bound, "seed": seed}, run,
               lambda r: r["found_witness"])


def _probe_transported(bound: int, seed: int, out: _Sink) -> None:
    tau = OrderTopology(OrderKind.FINAL_DIGITS)
    st = _shared_state()
    rng = random.Random(seed)
    points = [(rng.randrange(0, 32), rng.randrange(0, 32)) for _ in range(4)]
    for op in ("add", "mul"):
        for n, m in points:
            z = operation(op)(n, m)
            target = basic_nbhd(tau, z, 1)

            def run(op=op, n=n, m=m, z=z, target=target):
                res = probe_continuity(op, tau, (n, m), target, search_bound=bound, seed=seed)
                return {
                    "point": [n, m],
                    "images": [st.embed(n), st.embed(m)],
                    "image_of_result": st.embed(z),
                    "target": str(target),
                    "result": res.to_dict(),
                    "found_witness": not isinstance(res, NoWitnessUpTo),
                }

            _probe(out, "transported-continuity", {"op": op, "point": [n, m], "bound": bound, "seed": seed},
                   run, lambda r: r["found_witness"])


_PROBES = {
    "order-topology-equality": _probe_order_topology,
    "signed-add-continuity": _probe_signed_add,
    "transported-continuity": _probe_transported,
}


def run_probe(claim: str, bound: int = 8, seed: int = 0, *, timings: bool = False) -> list[ReportRecord]:
    """Evidence records for an open claim; every record is inconclusive."""
    if claim not in _PROBES:
        raise KeyError(f"unknown claim {claim!r}; expected one of {list(CLAIMS)}")
    sink = _Sink("probe", timings)
    _PROBES[claim](int(bound), int(seed), sink)
    return sorted(sink.records, key=ReportRecord.sort_key)


def dumps(records: Iterable[ReportRecord]) -> str:
    return "".join(r.to_json() + "\n" for r in records)


def any_failed(records: Iterable[ReportRecord]) -> bool:
    return any(r.status == FAIL for r in records)
