"""Differential harness: classification, reports, corpus tooling."""

import math

import pytest

from modsat import pipeline
from modsat.cnf import Formula, clause_of, parse_dimacs, random_kcnf
from modsat.harness import (
    BUDGET_EXCEEDED,
    CATEGORIES,
    ERROR_CATEGORY,
    DiffReport,
    bench_eval,
    classify,
    contradiction_2cnf,
    diff_run,
    fit_exponent,
    gen_corpus,
    load_corpus,
)
from modsat.pipeline import PipelineConfig


def small_corpus():
    return [
        ("allpos", Formula(3, (clause_of(1, 2), clause_of(2, 3)))),
        ("contra", contradiction_2cnf()),
        ("mixed", random_kcnf(6, 20, 3, seed=11)),
    ]


def test_classify_table():
    assert classify("sat_claim", True, "sat") == "sound_sat"
    assert classify("sat_claim", True, "unsat") == "sound_sat"
    assert classify("sat_claim", False, "sat") == "unsound_sat_claim"
    assert classify("sat_claim", False, "unsat") == "unsound_sat_claim"
    assert classify("unsat_claim", None, "unsat") == "sound_unsat"
    assert classify("unsat_claim", None, "sat") == "missed_sat"
    assert classify("unsat_claim", None, BUDGET_EXCEEDED) == "oracle_budget_exceeded"
    with pytest.raises(ValueError):
        classify("other", None, "sat")


def test_diff_run_produces_one_record_per_instance():
    report = diff_run(small_corpus())
    assert len(report.records) == 3
    assert [r.instance_id for r in report.records] == ["allpos", "contra", "mixed"]
    by_id = {r.instance_id: r for r in report.records}
    assert by_id["allpos"].category == "sound_sat"
    assert by_id["contra"].category == "unsound_sat_claim"
    assert by_id["contra"].oracle_status == "unsat"
    assert by_id["contra"].candidate_verified is False
    for r in report.records:
        assert r.fold_additions is not None
        assert r.error is None


def test_diff_run_echoes_config():
    config = PipelineConfig(negation_mode="affine", bound_mode="k-1")
    report = diff_run(small_corpus()[:1], config, oracle_budget=500)
    assert report.config == {
        "negation_mode": "affine",
        "bound_mode": "k-1",
        "rounding_base": 2,
        "objective": "none",
        "oracle_budget": 500,
    }


def test_diff_run_rejects_bad_instances():
    with pytest.raises(ValueError):
        diff_run([("narrow", Formula(1, (clause_of(1),)))])
    with pytest.raises(ValueError):
        diff_run([("mixed", Formula(3, (clause_of(1, 2), clause_of(1, 2, 3))))])


def test_faithful_mode_always_has_an_unsound_claim_on_contradiction():
    report = diff_run([("contra", contradiction_2cnf())])
    assert report.aggregates()["counts"]["unsound_sat_claim"] >= 1


def test_oracle_budget_shows_up_in_record():
    f = random_kcnf(40, 170, 3, seed=3)
    report = diff_run([("big", f)], oracle_budget=3)
    r = report.records[0]
    assert r.oracle_status == BUDGET_EXCEEDED
    assert r.oracle_nodes is None
    # sat claims classify on candidate verification, budget or not.
    assert r.category in ("sound_sat", "unsound_sat_claim")


def test_errors_are_captured_not_raised(monkeypatch):
    def boom(formula, config):
        raise RuntimeError("injected failure")

    monkeypatch.setattr(pipeline, "run", boom)
    report = diff_run(small_corpus()[:2])
    assert all(r.category == ERROR_CATEGORY for r in report.records)
    assert all("injected failure" in r.error for r in report.records)
    aggregates = report.aggregates()
    assert aggregates["counts"][ERROR_CATEGORY] == 2
    assert aggregates["claim_oracle_agreement"] is None


def test_aggregates_on_empty_report():
    report = DiffReport(config={}, records=())
    aggregates = report.aggregates()
    assert aggregates["total"] == 0
    assert set(aggregates["counts"]) == set(CATEGORIES) | {ERROR_CATEGORY}
    assert all(v == 0 for v in aggregates["counts"].values())
    assert aggregates["claim_oracle_agreement"] is None
    assert report.fits() == {
        "fold_additions_vs_clauses": None,
        "pipeline_steps_vs_vars": None,
    }


def test_canonical_json_is_deterministic_and_untimed():
    a = diff_run(small_corpus()).to_canonical_json()
    b = diff_run(small_corpus()).to_canonical_json()
    assert a == b
    assert a.endswith("\n")
    assert "wall_ns" not in a
    assert '"aggregates"' in a


def test_csv_layout():
    text = diff_run(small_corpus()[:2]).to_csv()
    lines = text.splitlines()
    assert lines[0].startswith("instance_id,category,claim,")
    assert len(lines) == 3
    assert lines[1].split(",")[0] == "allpos"
    assert "wall" not in lines[0]


def test_fit_exponent_recovers_powers():
    xs = [10, 20, 40, 80]
    assert abs(fit_exponent(xs, [x**2 for x in xs]) - 2.0) < 1e-12
    assert abs(fit_exponent(xs, [5 * x for x in xs]) - 1.0) < 1e-12
    assert fit_exponent([3, 3, 3], [1, 2, 3]) is None
    assert fit_exponent([0, -1], [1, 1]) is None
    assert fit_exponent([10, 20], [1, 0]) is None


def test_bench_eval_rows_and_exponent():
    result = bench_eval(3, [100, 200, 400], seed=9)
    assert result["width"] == 3
    assert result["num_vars"] == 24
    assert [r["clauses"] for r in result["rows"]] == [100, 200, 400]
    assert all(r["matches_prediction"] for r in result["rows"])
    # additions = 4m - 2 at width 3: nearly linear in m.
    assert abs(result["additions_exponent"] - 1.0) < 0.01
    assert bench_eval(3, [100, 200, 400], seed=9, num_vars=30)["num_vars"] == 30
    with pytest.raises(ValueError):
        bench_eval(3, [], seed=9)


def test_gen_corpus_deterministic_bytes(tmp_path):
    a = gen_corpus(tmp_path / "a", num_vars=8, width=3, count=3, seed=4, num_clauses=12)
    b = gen_corpus(tmp_path / "b", num_vars=8, width=3, count=3, seed=4, num_clauses=12)
    assert [p.name for p in a] == [
        "k3_n8_m12_i000.cnf",
        "k3_n8_m12_i001.cnf",
        "k3_n8_m12_i002.cnf",
    ]
    for pa, pb in zip(a, b):
        assert pa.read_bytes() == pb.read_bytes()
    different = gen_corpus(
        tmp_path / "c", num_vars=8, width=3, count=3, seed=5, num_clauses=12
    )
    assert a[0].read_bytes() != different[0].read_bytes()


def test_gen_corpus_ratio_naming(tmp_path):
    paths = gen_corpus(
        tmp_path, num_vars=10, width=3, count=2, seed=1, ratios=[4.27]
    )
    assert [p.name for p in paths] == [
        "k3_n10_r4.27_i000.cnf",
        "k3_n10_r4.27_i001.cnf",
    ]
    f = parse_dimacs(paths[0].read_text())
    assert f.num_clauses == round(4.27 * 10)


def test_gen_corpus_argument_validation(tmp_path):
    with pytest.raises(ValueError):
        gen_corpus(tmp_path, 8, 3, 1, seed=0)
    with pytest.raises(ValueError):
        gen_corpus(tmp_path, 8, 3, 1, seed=0, num_clauses=5, ratios=[1.0])
    with pytest.raises(ValueError):
        gen_corpus(tmp_path, 8, 3, 0, seed=0, num_clauses=5)


def test_load_corpus_sorted(tmp_path):
    gen_corpus(tmp_path, num_vars=6, width=2, count=3, seed=2, num_clauses=4)
    corpus = load_corpus(tmp_path)
    assert [name for name, _ in corpus] == sorted(name for name, _ in corpus)
    assert all(f.num_clauses == 4 for _, f in corpus)
    report = diff_run(corpus)
    assert len(report.records) == 3


def test_contradiction_2cnf_is_unsat():
    f = contradiction_2cnf()
    assert f.num_vars == 2
    assert f.num_clauses == 4
    from modsat.oracle import brute_force_sat

    assert brute_force_sat(f).status == "unsat"


def test_log_fit_matches_closed_form_slope():
    # Cross-check fit_exponent against a hand-computed two-point slope.
    slope = fit_exponent([2, 8], [3, 48])
    assert abs(slope - math.log(16) / math.log(4)) < 1e-12
