import random
from fractions import Fraction

import pytest

from finmeas import BOOLEANS, GenConfig, SelectionError, run_law, run_suite, total
from finmeas.laws import LAWS, gen_dist, gen_scalar, space_a


def small_cfg(**kw):
    base = dict(seed=7, cases=25)
    base.update(kw)
    return GenConfig(**base)


def test_full_suite_passes():
    reports = run_suite(small_cfg())
    failures = [(r.law, r.counterexample) for r in reports if not r.passed]
    assert failures == []
    assert len(reports) == len(LAWS)


def test_suite_is_deterministic():
    first = run_suite(small_cfg(), selection=["fubini", "switch"])
    second = run_suite(small_cfg(), selection=["fubini", "switch"])
    assert [r.to_json() for r in first] == [r.to_json() for r in second]


def test_selection_runs_single_law():
    (report,) = run_suite(small_cfg(), selection=["fubini"])
    assert report.law == "fubini"
    assert report.passed
    assert report.cases_run == 25
    assert "Fubini" in report.statement


def test_unknown_law_is_selection_error():
    with pytest.raises(SelectionError):
        run_suite(small_cfg(), selection=["no_such_law"])


def test_cases_must_be_positive():
    with pytest.raises(ValueError):
        GenConfig(cases=0)


def test_report_json_shape():
    report = run_law("total_as_pairing", small_cfg())
    payload = report.to_json()
    assert payload["law"] == "total_as_pairing"
    assert payload["passed"] is True
    assert payload["cases_run"] == 25
    assert "counterexample" not in payload


def test_generator_determinism():
    cfg = small_cfg()
    a = gen_dist(random.Random("x"), cfg, space_a(cfg))
    b = gen_dist(random.Random("x"), cfg, space_a(cfg))
    assert a == b


def test_generator_respects_support_bound():
    cfg = small_cfg(max_support=1)
    rng = random.Random(3)
    for _ in range(50):
        assert len(gen_dist(rng, cfg, space_a(cfg))) <= 1


def test_generator_coefficient_bound_one():
    cfg = small_cfg(coefficient_bound=1)
    rng = random.Random(3)
    ring_values = {gen_scalar(rng, cfg) for _ in range(50)}
    assert ring_values == {Fraction(1), Fraction(-1)}
    rig_values = {gen_scalar(rng, cfg, BOOLEANS) for _ in range(10)}
    assert rig_values == {True}


def test_generated_prob_dists_have_total_one():
    from finmeas.laws import gen_prob_dist

    cfg = small_cfg()
    rng = random.Random(11)
    for _ in range(50):
        assert total(gen_prob_dist(rng, cfg, space_a(cfg))) == 1


def test_every_law_has_a_statement():
    for name, entry in LAWS.items():
        assert entry.statement, name
        assert entry.name == name
