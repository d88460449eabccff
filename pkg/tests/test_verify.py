import pytest

from cbs import verify as vf
from cbs.verify import CheckResult, parse, run_suite, serialize


@pytest.mark.parametrize("name,max_n", [("stephan", 25), ("altsum", 25), ("atm", 7)])
def test_spec_examples_pass(name, max_n):
    results = run_suite(name, max_n)
    assert results
    assert all(r.passed for r in results), [r.detail for r in results if not r.passed]


def test_all_suites_pass_at_15():
    results = run_suite("all", 15)
    failed = [r for r in results if not r.passed]
    assert not failed, [r.detail for r in failed]
    assert {r.suite_name for r in results} == set(vf.SUITES)
    assert [r.suite_name for r in results] == sorted(r.suite_name for r in results)


def test_unknown_suite():
    with pytest.raises(vf.UnknownSuiteError):
        run_suite("nosuch", 5)


def test_deterministic_given_seed():
    a = run_suite("lemma", 5, seed=7)
    b = run_suite("lemma", 5, seed=7)
    strip = lambda rs: [(r.suite_name, r.parameters, r.passed, r.detail) for r in rs]
    assert strip(a) == strip(b)
    assert a[0].parameters["seed"] == "7"


def test_report_round_trip():
    results = run_suite("tableQ", 5) + [CheckResult("x", {"a": "1"}, False, "boom at n=3", 12)]
    text = serialize(results)
    assert len(text.splitlines()) == len(results)
    assert parse(text) == results


def test_report_keys():
    line = serialize([CheckResult("s", {}, True, "ok", 0)]).strip()
    assert line == '{"detail": "ok", "elapsed_ms": 0, "params": {}, "passed": true, "suite": "s"}'


def test_failure_detail_names_index_and_values():
    r = vf._exact("demo", "fam", {}, lambda: [("n=0", 1, 1), ("n=1", 2, 3), ("n=2", 5, 9)])
    assert not r.passed
    assert "n=1" in r.detail and "2" in r.detail and "3" in r.detail
    assert "n=2" not in r.detail


def test_numeric_failure_reports_difference():
    r = vf._numeric("demo", "fam", {}, 1e-10, lambda: [("t=1", 1.0, 1.001)])
    assert not r.passed
    assert "t=1" in r.detail and "1.001" in r.detail


def test_loose_tolerance_does_not_change_exact_suites():
    assert all(r.passed for r in run_suite("numeric_zeta", 5, tolerance=1e-6))


def test_impossible_tolerance_fails_numeric_suite():
    results = run_suite("numeric_zeta", 5, tolerance=0.0)
    assert not all(r.passed for r in results)
