"""The fourteen acceptance criteria, each at its stated bound and time limit.

Every test prints one ``criterion N: PASS|FAIL`` line; the lines are also
collected into the pytest terminal summary.
"""

import time

import pytest

from topoarith import verify
from topoarith.verify import CLAIMS, _Sink, dumps, run_probe, run_suite

from tests.acceptance_log import report


def _cases(fns, max_, seed=0, only=None):
    sink = _Sink("acceptance", False)
    for fn in fns:
        fn(max_, seed, sink)
    recs = [r for r in sink.records if only is None or r.case in only]
    return recs


def _verdict(n, recs, elapsed, limit=None, extra=""):
    failed = [r for r in recs if r.status != "pass"]
    ok = bool(recs) and not failed and (limit is None or elapsed <= limit)
    detail = f"{len(recs)} checks, {len(failed)} failed, {elapsed:.1f}s"
    if limit is not None:
        detail += f" (limit {limit}s)"
    if extra:
        detail += f"; {extra}"
    report(n, ok, detail)
    assert recs, "no checks ran"
    assert not failed, [r.to_dict() for r in failed[:3]]
    if limit is not None:
        assert elapsed <= limit, f"took {elapsed:.1f}s"


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_01_order_axioms():
    recs, dt = _timed(lambda: _cases([verify._orders_trichotomy, verify._orders_transitivity], 1 << 12))
    _verdict(1, recs, dt, 60)


def test_criterion_02_oracle_agreement():
    recs, dt = _timed(lambda: _cases([verify._orders_oracle], 1 << 14))
    _verdict(2, recs, dt)


def test_criterion_03_figure_fidelity():
    recs, dt = _timed(lambda: _cases([verify._orders_figure], 1 << 16))
    cases = {r.case for r in recs}
    assert {"figure1", "variant-minimum", "variant-min-suffix-110"} <= cases
    _verdict(3, recs, dt)


def test_criterion_04_residue_modulus():
    recs, dt = _timed(lambda: _cases([verify._continuity_residues], 1 << 12))
    assert sorted(r.params["k"] for r in recs) == list(range(11))
    _verdict(4, recs, dt)


def test_criterion_05_ball_suffix_residue_and_intersection():
    recs, dt = _timed(lambda: _cases(
        [verify._numerals_equivalence, verify._topology_suffix_classes, verify._topology_intersections], 1 << 16))
    _verdict(5, recs, dt)


def test_criterion_06_right_open_characterisation():
    recs, dt = _timed(lambda: _cases([verify._topology_right_open], 1 << 16))
    assert max(r.params["len"] for r in recs) == 8 and all(r.params["max"] == 1 << 16 for r in recs)
    _verdict(6, recs, dt)


def test_criterion_07_witness_soundness():
    recs, dt = _timed(lambda: _cases([verify._continuity_soundness], 1 << 12))
    kinds = {r.params["witness"].split("(")[0] for r in recs}
    _verdict(7, recs, dt, extra=f"{len(kinds)} witness families")


def test_criterion_08_discontinuity_witnesses():
    recs, dt = _timed(lambda: _cases([verify._continuity_refuters], 1 << 12, seed=0))
    assert all(r.params["neighborhoods"] == 100 for r in recs)
    _verdict(8, recs, dt)


def test_criterion_09_back_and_forth():
    recs, dt = _timed(lambda: _cases([verify._embedding_isomorphism], 1 << 12))
    _verdict(9, recs, dt, 120)


def test_criterion_10_transported_arithmetic():
    recs, dt = _timed(lambda: _cases([verify._embedding_transported], 200))
    _verdict(10, recs, dt)


def test_criterion_11_pairing():
    recs, dt = _timed(lambda: _cases(
        [verify._embedding_pairing], 500, only={"pairing-injective", "pairing-evens", "pairing-no-odds"}))
    assert len(recs) == 3
    _verdict(11, recs, dt)


def test_criterion_12_blend_isolation():
    recs, dt = _timed(lambda: _cases([verify._topology_isolation], 1 << 12))
    _verdict(12, recs, dt)


def test_criterion_13_determinism():
    (a, b), dt = _timed(lambda: (dumps(run_suite("all", 1 << 8, 1)), dumps(run_suite("all", 1 << 8, 1))))
    same = a.encode() == b.encode()
    report(13, same, f"{a.count(chr(10))} records, byte-identical={same}, {dt:.1f}s")
    assert same


def test_criterion_14_probes_complete():
    def go():
        return {c: run_probe(c, 16, seed=1) for c in CLAIMS}

    out, dt = _timed(go)
    recs = [r for rs in out.values() for r in rs]
    crashed = [r for r in recs if "error" in (r.evidence or {})]
    ok = all(out.values()) and not crashed and dt <= 120
    statuses = {r.status for r in recs}
    report(14, ok, f"{len(recs)} evidence records, {len(crashed)} crashed, statuses {sorted(statuses)}, {dt:.1f}s (limit 120s)")
    assert all(out.values()) and not crashed
    assert statuses == {"inconclusive"}
    assert dt <= 120
