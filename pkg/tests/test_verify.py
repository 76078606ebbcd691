import json

import pytest

from dvectors import verify as V
from dvectors.geometry import PolygonModel


def test_expect_keeps_first_failure():
    report = V.VerificationReport({"type": "A"})
    check = report.expect("demo", [(True, {"k": 1}), (False, {"k": 2}), (False, {"k": 3})])
    assert not check.passed and check.counterexample == {"k": 2} and check.cases == 2
    assert not report.passed
    record = report.records()[0]
    assert record["counterexample"] == {"k": 2}
    json.dumps(report.summary())


def test_empty_check_passes():
    report = V.VerificationReport({})
    assert report.expect("nothing", []).passed


@pytest.mark.parametrize("family,rank", [("A", 2), ("B", 3), ("G", 2)])
def test_suites_pass(family, rank):
    for fn in (V.verify_three_way_agreement, V.verify_dvector_descriptions, V.verify_invariances,
               V.verify_duality, V.verify_counts):
        report = fn(family, rank)
        assert report.passed, report.summary()
        assert all(ch.cases > 0 for ch in report.checks)


def test_reports_are_deterministic():
    a = V.verify_invariances("A", 3, (2, 0, 1))
    b = V.verify_invariances("A", 3, (2, 0, 1))
    strip = lambda r: [{k: v for k, v in x.items() if k != "seconds"} for x in r.records()]
    assert strip(a) == strip(b)


def test_sample_contains_non_acyclic_seed():
    ca = V.algebra("D", 4, (0, 1, 2, 3))
    sample = V.seed_sample(ca)
    assert len(sample) == 50
    assert sample == V.seed_sample(ca)
    from dvectors.cluster import is_acyclic
    assert any(not is_acyclic(ca.graph.matrices[k]) for k in sample)


def test_geometry_oracle_distinguishes_b_and_c():
    assert V.match_geometry(PolygonModel("B", 3), V.algebra("B", 3, (0, 1, 2))) is not None
    assert V.match_geometry(PolygonModel("B", 3), V.algebra("C", 3, (0, 1, 2))) is None
    assert V.match_geometry(PolygonModel("C", 3), V.algebra("B", 3, (0, 1, 2))) is None


def test_golden_report():
    report = V.verify_a2_golden()
    assert report.passed and report.suite == "golden"
