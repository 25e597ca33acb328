import json

import pytest

from topoarith.verify import CLAIMS, SUITES, ReportRecord, any_failed, dumps, run_probe, run_suite


@pytest.mark.parametrize("name", sorted(SUITES))
def test_each_suite_passes_at_a_small_bound(name):
    records = run_suite(name, 1 << 6, seed=4)
    assert records
    assert not any_failed(records), [r.to_dict() for r in records if r.status == "fail"]
    assert {r.suite for r in records} == {name}


def test_records_are_in_canonical_order():
    records = run_suite("topology", 1 << 6, seed=0)
    assert records == sorted(records, key=ReportRecord.sort_key)


def test_continuity_suite_reports_the_halving_refuter():
    records = run_suite("continuity", 1 << 10, seed=7)
    hits = [r for r in records if r.case == "refuter" and r.params.get("case") == "halving-at-30"]
    assert len(hits) == 1 and hits[0].status == "pass"


def test_unknown_names():
    with pytest.raises(KeyError):
        run_suite("geometry")
    with pytest.raises(KeyError):
        run_probe("riemann")


@pytest.mark.parametrize("claim", CLAIMS)
def test_probes_are_inconclusive_with_evidence(claim):
    records = run_probe(claim, 6, seed=1)
    assert records
    for r in records:
        assert r.status == "inconclusive"
        assert isinstance(r.evidence, dict) and isinstance(r.evidence["consistent"], bool)
    assert not any_failed(records)


def test_signed_add_probe_finds_the_escape_family():
    records = run_probe("signed-add-continuity", 8, seed=1)
    rec = next(r for r in records if r.params["point"] == [1, -2])
    escapes = rec.evidence["result"]["escapes"]
    assert escapes and all(e["inputs"][1] == -2 and e["image"] > 0 for e in escapes)


def test_order_topology_probe_covers_strings_up_to_length_8():
    records = run_probe("order-topology-equality", 8, seed=0)
    assert len(records) == 2**9 - 2
    by_s = {r.params["s"]: r.evidence for r in records}
    assert by_s["110"]["convention_position"] == "interior" and by_s["110"]["consistent"]
    assert by_s["0110"]["convention_position"] == "maximum"


def test_record_serialisation():
    r = ReportRecord("s", "c", {"q": "1/2"}, "fail", ["1/2"], None)
    d = json.loads(r.to_json())
    assert list(d) == ["suite", "case", "params", "status", "counterexample", "duration"]
    assert dumps([r, r]).count("\n") == 2
    assert any_failed([r])
