"""Differential harness: run the pipeline and an exact oracle side by side.

Every instance produces one record.  The record's category is a pure
function of (claim, candidate verified, oracle verdict):

* sat claim with a verifying candidate        -> sound_sat
* sat claim whose candidate fails             -> unsound_sat_claim
* unsat claim, oracle unsat                   -> sound_unsat
* unsat claim, oracle sat                     -> missed_sat
* unsat claim, oracle budget blown            -> oracle_budget_exceeded

Reports serialize to canonical JSON (sorted keys, wall-clock times left
out), so identical corpus, config, and seeds give byte-identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
import math
import random
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from . import oracle, pipeline
from .cnf import Formula, clause_of, parse_dimacs, random_kcnf, write_dimacs
from .errors import BudgetExceededError
from .foldeval import fold_eval, predicted_ops

CATEGORIES = (
    "sound_sat",
    "unsound_sat_claim",
    "sound_unsat",
    "missed_sat",
    "oracle_budget_exceeded",
)
ERROR_CATEGORY = "error"
BUDGET_EXCEEDED = "budget_exceeded"


def classify(claim: str, verified: bool | None, oracle_status: str) -> str:
    """Category of a record; total over the inputs the harness produces."""
    if claim == pipeline.SAT_CLAIM:
        return "sound_sat" if verified else "unsound_sat_claim"
    if claim == pipeline.UNSAT_CLAIM:
        if oracle_status == BUDGET_EXCEEDED:
            return "oracle_budget_exceeded"
        return "sound_unsat" if oracle_status == oracle.UNSAT else "missed_sat"
    raise ValueError(f"unknown claim {claim!r}")


@dataclass(frozen=True)
class DiffRecord:
    instance_id: str
    claim: str
    candidate_verified: bool | None
    oracle_status: str
    oracle_nodes: int | None
    category: str
    num_vars: int
    num_clauses: int
    width: int | None
    lp_pivots: int
    pipeline_steps: int
    fold_additions: int | None
    anomaly_count: int
    pipeline_wall_ns: int
    oracle_wall_ns: int
    error: str | None = None

    def to_dict(self, include_timings: bool = False) -> dict:
        d = {
            "instance_id": self.instance_id,
            "claim": self.claim,
            "candidate_verified": self.candidate_verified,
            "oracle_status": self.oracle_status,
            "oracle_nodes": self.oracle_nodes,
            "category": self.category,
            "num_vars": self.num_vars,
            "num_clauses": self.num_clauses,
            "width": self.width,
            "lp_pivots": self.lp_pivots,
            "pipeline_steps": self.pipeline_steps,
            "fold_additions": self.fold_additions,
            "anomaly_count": self.anomaly_count,
            "error": self.error,
        }
        if include_timings:
            d["pipeline_wall_ns"] = self.pipeline_wall_ns
            d["oracle_wall_ns"] = self.oracle_wall_ns
        return d


_CSV_COLUMNS = (
    "instance_id",
    "category",
    "claim",
    "candidate_verified",
    "oracle_status",
    "oracle_nodes",
    "num_vars",
    "num_clauses",
    "width",
    "lp_pivots",
    "pipeline_steps",
    "fold_additions",
    "anomaly_count",
    "error",
)


@dataclass(frozen=True)
class DiffReport:
    config: dict
    records: tuple[DiffRecord, ...]

    def aggregates(self) -> dict:
        counts = {cat: 0 for cat in CATEGORIES}
        counts[ERROR_CATEGORY] = 0
        agreements = 0
        comparable = 0
        for r in self.records:
            counts[r.category] += 1
            if r.category != ERROR_CATEGORY and r.oracle_status in (
                oracle.SAT,
                oracle.UNSAT,
            ):
                comparable += 1
                claimed_sat = r.claim == pipeline.SAT_CLAIM
                if claimed_sat == (r.oracle_status == oracle.SAT):
                    agreements += 1
        total = len(self.records)
        rates = {
            cat: (count / total if total else 0.0) for cat, count in counts.items()
        }
        return {
            "total": total,
            "counts": counts,
            "rates": rates,
            "claim_oracle_agreement": (
                agreements / comparable if comparable else None
            ),
        }

    def fits(self) -> dict:
        ok = [r for r in self.records if r.category != ERROR_CATEGORY]
        with_fold = [r for r in ok if r.fold_additions is not None]
        additions = fit_exponent(
            [r.num_clauses for r in with_fold],
            [r.fold_additions for r in with_fold],
        )
        steps = fit_exponent(
            [r.num_vars for r in ok], [r.pipeline_steps for r in ok]
        )
        return {
            "fold_additions_vs_clauses": additions,
            "pipeline_steps_vs_vars": steps,
        }

    def to_dict(self, include_timings: bool = False) -> dict:
        return {
            "config": self.config,
            "records": [r.to_dict(include_timings) for r in self.records],
            "aggregates": self.aggregates(),
            "fits": self.fits(),
        }

    def to_canonical_json(self) -> str:
        return json.dumps(self.to_dict(False), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_CSV_COLUMNS)
        for r in self.records:
            d = r.to_dict(False)
            writer.writerow(
                ["" if d[col] is None else d[col] for col in _CSV_COLUMNS]
            )
        return buf.getvalue()


def diff_run(
    instances: Sequence[tuple[str, Formula]],
    config: pipeline.PipelineConfig = pipeline.PipelineConfig(),
    oracle_budget: int = oracle.DEFAULT_NODE_BUDGET,
) -> DiffReport:
    """Run the pipeline and the DPLL oracle over a corpus, in corpus order.

    Instances must have uniform clause width >= 2.  Per-instance failures
    are captured in the record's error field; the batch never aborts.
    """
    for instance_id, formula in instances:
        width = formula.uniform_width
        if width is None or width < 2:
            raise ValueError(
                f"instance {instance_id!r} must have uniform clause width >= 2"
            )
    records = []
    for instance_id, formula in instances:
        records.append(_run_one(instance_id, formula, config, oracle_budget))
    config_echo = {
        "negation_mode": config.negation_mode,
        "bound_mode": config.bound_mode,
        "rounding_base": config.rounding_base,
        "objective": config.objective,
        "oracle_budget": oracle_budget,
    }
    return DiffReport(config_echo, tuple(records))


def _run_one(
    instance_id: str,
    formula: Formula,
    config: pipeline.PipelineConfig,
    oracle_budget: int,
) -> DiffRecord:
    try:
        t0 = time.perf_counter_ns()
        result = pipeline.run(formula, config)
        pipeline_ns = time.perf_counter_ns() - t0
        verified = None
        if result.rounded is not None:
            verified = oracle.verify(formula, result.rounded)
        t0 = time.perf_counter_ns()
        try:
            verdict = oracle.dpll_sat(formula, node_budget=oracle_budget)
            oracle_status = verdict.status
            oracle_nodes = verdict.nodes_explored
        except BudgetExceededError:
            oracle_status = BUDGET_EXCEEDED
            oracle_nodes = None
        oracle_ns = time.perf_counter_ns() - t0
        probe = result.rounded or (False,) * formula.num_vars
        fold = fold_eval(formula, probe)
        return DiffRecord(
            instance_id=instance_id,
            claim=result.claimed_status,
            candidate_verified=verified,
            oracle_status=oracle_status,
            oracle_nodes=oracle_nodes,
            category=classify(result.claimed_status, verified, oracle_status),
            num_vars=formula.num_vars,
            num_clauses=formula.num_clauses,
            width=formula.uniform_width,
            lp_pivots=result.lp.pivot_steps,
            pipeline_steps=result.steps,
            fold_additions=fold.ops.additions,
            anomaly_count=len(result.anomalies),
            pipeline_wall_ns=pipeline_ns,
            oracle_wall_ns=oracle_ns,
        )
    except Exception as exc:  # captured per record, batch goes on
        return DiffRecord(
            instance_id=instance_id,
            claim="error",
            candidate_verified=None,
            oracle_status="error",
            oracle_nodes=None,
            category=ERROR_CATEGORY,
            num_vars=formula.num_vars,
            num_clauses=formula.num_clauses,
            width=formula.uniform_width,
            lp_pivots=0,
            pipeline_steps=0,
            fold_additions=None,
            anomaly_count=0,
            pipeline_wall_ns=0,
            oracle_wall_ns=0,
            error=f"{type(exc).__name__}: {exc}",
        )


def fit_exponent(xs: Sequence, ys: Sequence) -> float | None:
    """Least-squares slope of log y against log x.

    Pairs with a non-positive coordinate are dropped; returns None when
    fewer than two distinct x values remain.
    """
    pts = [
        (math.log(x), math.log(y))
        for x, y in zip(xs, ys)
        if x > 0 and y > 0
    ]
    if len({x for x, _ in pts}) < 2:
        return None
    mean_x = sum(x for x, _ in pts) / len(pts)
    mean_y = sum(y for _, y in pts) / len(pts)
    sxx = sum((x - mean_x) ** 2 for x, _ in pts)
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in pts)
    return sxy / sxx


def bench_eval(
    width: int,
    sizes: Sequence[int],
    seed: int,
    num_vars: int | None = None,
) -> dict:
    """Measure fold evaluation cost across clause counts at fixed width.

    Returns the per-size operation counts, the exact-match flag against the
    shape-derived prediction, and fitted log-log exponents.
    """
    if not sizes:
        raise ValueError("at least one size is required")
    nv = num_vars if num_vars is not None else max(4 * width, 24)
    master = random.Random(seed)
    rows = []
    for m in sizes:
        fseed = master.randrange(2**32)
        formula = random_kcnf(nv, m, width, fseed)
        assignment = tuple(master.random() < 0.5 for _ in range(nv))
        t0 = time.perf_counter_ns()
        result = fold_eval(formula, assignment)
        wall = time.perf_counter_ns() - t0
        rows.append(
            {
                "clauses": m,
                "additions": result.ops.additions,
                "table_calls": result.ops.table_calls,
                "negations": result.ops.negations,
                "matches_prediction": result.ops == predicted_ops(formula),
                "wall_ns": wall,
            }
        )
    return {
        "width": width,
        "num_vars": nv,
        "seed": seed,
        "sizes": list(sizes),
        "rows": rows,
        "additions_exponent": fit_exponent(
            [r["clauses"] for r in rows], [r["additions"] for r in rows]
        ),
        "wall_exponent": fit_exponent(
            [r["clauses"] for r in rows], [r["wall_ns"] for r in rows]
        ),
    }


def gen_corpus(
    out_dir: str | Path,
    num_vars: int,
    width: int,
    count: int,
    seed: int,
    num_clauses: int | None = None,
    ratios: Sequence[float] | None = None,
) -> list[Path]:
    """Write a deterministic corpus of DIMACS files.

    Exactly one of ``num_clauses`` (fixed size) or ``ratios`` (clause count
    round(ratio * num_vars) per ratio, ``count`` instances each) must be
    given.  The same arguments always produce byte-identical files.
    """
    if (num_clauses is None) == (ratios is None):
        raise ValueError("exactly one of num_clauses or ratios is required")
    if count < 1:
        raise ValueError("count must be >= 1")
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    master = random.Random(seed)
    paths = []
    if ratios is not None:
        plan = [
            (f"k{width}_n{num_vars}_r{ratio:g}_i{i:03d}.cnf",
             max(1, round(ratio * num_vars)))
            for ratio in ratios
            for i in range(count)
        ]
    else:
        plan = [
            (f"k{width}_n{num_vars}_m{num_clauses}_i{i:03d}.cnf", num_clauses)
            for i in range(count)
        ]
    for name, m in plan:
        fseed = master.randrange(2**32)
        formula = random_kcnf(num_vars, m, width, fseed)
        path = out / name
        path.write_text(write_dimacs(formula), encoding="utf-8")
        paths.append(path)
    return paths


def load_corpus(corpus_dir: str | Path) -> list[tuple[str, Formula]]:
    """Parse every .cnf file in a directory, sorted by file name."""
    corpus = []
    for path in sorted(Path(corpus_dir).glob("*.cnf")):
        corpus.append((path.name, parse_dimacs(path.read_text(encoding="utf-8"))))
    return corpus


def contradiction_2cnf() -> Formula:
    """Smallest fully contradictory width-2 formula: all four polarity
    combinations over two variables."""
    return Formula(
        2,
        (
            clause_of(1, 2),
            clause_of(1, -2),
            clause_of(-1, 2),
            clause_of(-1, -2),
        ),
    )
