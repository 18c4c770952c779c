import pytest

from schubpat import verify
from schubpat.verify import CLAIMS, RunConfig, VerificationReport, exit_code, run_claim


def test_registry_names():
    assert set(CLAIMS) == {
        "thm1.0",
        "thm1.1",
        "thm1.2",
        "thm2.4",
        "thm2.7",
        "thm4.1",
        "conj5.1",
        "conj5.3",
        "identity",
    }
    for name, claim in CLAIMS.items():
        assert claim.name == name
        assert claim.description


@pytest.mark.parametrize("name", sorted(CLAIMS))
def test_all_claims_hold_at_n4(name):
    config = RunConfig(max_n=4)
    reports = list(run_claim(name, config))
    assert reports
    assert exit_code(reports) == 0
    for r in reports:
        assert r.verdict in ("holds", "outside-scope")
        assert r.elapsed_ms is None


def test_shards_cover_scope_markers():
    config = RunConfig(max_n=4)
    verdicts = {r.subject: r.verdict for r in run_claim("thm1.1", config)}
    assert verdicts["1432"] == "outside-scope"
    assert verdicts["2143"] == "holds"


def test_jobs_produce_identical_reports():
    config = RunConfig(max_n=4)
    serial = list(run_claim("thm2.7", config))
    parallel = list(run_claim("thm2.7", RunConfig(max_n=4, jobs=2)))
    assert serial == parallel


def test_seed_changes_sampled_shards_only():
    a = CLAIMS["thm2.4"].shards(RunConfig(max_n=5, seed=1))
    b = CLAIMS["thm2.4"].shards(RunConfig(max_n=5, seed=2))
    fixed = len(CLAIMS["thm2.4"].shards(RunConfig(max_n=4)))
    assert a[:fixed] == b[:fixed]
    assert a[fixed:] != b[fixed:]
    c = CLAIMS["thm2.4"].shards(RunConfig(max_n=5, seed=1))
    assert a == c


def test_timing_recorded_on_request():
    config = RunConfig(max_n=3, include_timing=True)
    reports = list(run_claim("identity", config))
    assert all(isinstance(r.elapsed_ms, float) for r in reports)


def test_budget_maps_to_exit_code_3():
    reports = list(run_claim("thm2.4", RunConfig(max_n=4, budget_dominated=2)))
    assert any(r.verdict == "budget-exceeded" for r in reports)
    assert exit_code(reports) == 3


def test_exit_code_priorities():
    holds = VerificationReport("x", "s", "holds")
    fails = VerificationReport("x", "s", "fails", "w")
    budget = VerificationReport("x", "s", "budget-exceeded", "w")
    assert exit_code([holds]) == 0
    assert exit_code([holds, budget]) == 3
    assert exit_code([budget, fails]) == 2


def test_report_as_dict_omits_empty_fields():
    r = VerificationReport("thm2.7", "2143", "holds")
    assert r.as_dict() == {"claim": "thm2.7", "subject": "2143", "verdict": "holds"}
    r = VerificationReport("thm2.7", "2143", "fails", "bad", 1.5)
    assert r.as_dict() == {
        "claim": "thm2.7",
        "subject": "2143",
        "verdict": "fails",
        "witness": "bad",
        "elapsed_ms": 1.5,
    }
