"""LP-and-round decision pipeline for uniform-width CNF.

The pipeline builds the clause relaxation, solves it, and rounds the LP
point coordinatewise with floor-mod: X -> floor(X) mod base.  A rounded 0
decodes to true (zero-is-true), 1 to false, anything else is recorded as an
anomaly and decoded to false.  A feasible system yields a sat claim with the
rounded candidate, an infeasible one an unsat claim.  No oracle is consulted
here; the claims are exactly as trustworthy as the relaxation, which is the
point of measuring them downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Sequence

from . import relax, simplex
from .cnf import Formula
from .errors import UnsupportedFormulaError
from .mvlogic import mod_shift

SAT_CLAIM = "sat_claim"
UNSAT_CLAIM = "unsat_claim"

OBJECTIVE_NONE = "none"
OBJECTIVE_MAX_SUM = "maximize_sum"
_OBJECTIVES = (OBJECTIVE_NONE, OBJECTIVE_MAX_SUM)

ROUND_BASE_WIDTH = "k"


@dataclass(frozen=True)
class PipelineConfig:
    negation_mode: str = relax.FAITHFUL
    bound_mode: str = relax.BOUND_K
    rounding_base: int | str = 2
    objective: str = OBJECTIVE_NONE

    def __post_init__(self):
        relax._check_modes(self.negation_mode, self.bound_mode)
        base = self.rounding_base
        if base != ROUND_BASE_WIDTH and (not isinstance(base, int) or base < 2):
            raise ValueError(
                f"rounding base must be an integer >= 2 or {ROUND_BASE_WIDTH!r},"
                f" got {base!r}"
            )
        if self.objective not in _OBJECTIVES:
            raise ValueError(f"unknown objective {self.objective!r}")


@dataclass(frozen=True)
class RoundAnomaly:
    """An LP coordinate whose floor-mod landed outside {0, 1}."""

    var: int  # 1-based
    raw: Fraction | float
    rounded: int


@dataclass(frozen=True)
class PipelineResult:
    """``rounded`` is present exactly for sat claims.  ``lp`` is the solution
    whose point was rounded (or the infeasible one).  ``steps`` counts
    constraint rows built, simplex pivots, and one rounding step per
    variable.  ``verified`` is filled in by the harness, never here."""

    claimed_status: str
    rounded: tuple[bool, ...] | None
    lp: simplex.LpSolution
    anomalies: tuple[RoundAnomaly, ...]
    steps: int
    verified: bool | None = None


def round_assignment(
    point: Sequence, base: int
) -> tuple[tuple[bool, ...], tuple[RoundAnomaly, ...]]:
    """Round LP coordinates to booleans via floor(X) mod base."""
    values = []
    anomalies = []
    for i, x in enumerate(point):
        r = mod_shift(base, 0, x)
        if r == 0:
            values.append(True)
        else:
            if r != 1:
                anomalies.append(RoundAnomaly(i + 1, x, r))
            values.append(False)
    return tuple(values), tuple(anomalies)


def run(formula: Formula, config: PipelineConfig = PipelineConfig()) -> PipelineResult:
    """Run relax, solve, round; claim sat or unsat accordingly.

    With the maximize_sum objective an unbounded LP (possible when some
    variable appears in no constraint) falls back to the plain feasibility
    point, since unbounded still means feasible.
    """
    width = None
    if formula.clauses:
        width = formula.uniform_width
        if width is None:
            raise UnsupportedFormulaError(
                "pipeline requires a uniform clause width"
            )
        if width < 2:
            raise UnsupportedFormulaError(
                f"clause width must be >= 2, got {width}"
            )
    system = relax.build_relaxation(
        formula, config.negation_mode, config.bound_mode
    )
    if config.objective == OBJECTIVE_MAX_SUM and formula.num_vars > 0:
        system = replace(system, objective=(1,) * formula.num_vars)
    sol = simplex.solve(system)
    pivots = sol.pivot_steps
    if sol.status == simplex.UNBOUNDED:
        sol = simplex.solve(replace(system, objective=None))
        pivots += sol.pivot_steps
    if sol.status == simplex.INFEASIBLE:
        return PipelineResult(
            claimed_status=UNSAT_CLAIM,
            rounded=None,
            lp=sol,
            anomalies=(),
            steps=len(system.constraints) + pivots,
        )
    base = config.rounding_base
    if base == ROUND_BASE_WIDTH:
        base = width if width is not None else 2
    rounded, anomalies = round_assignment(sol.point, base)
    return PipelineResult(
        claimed_status=SAT_CLAIM,
        rounded=rounded,
        lp=sol,
        anomalies=anomalies,
        steps=len(system.constraints) + pivots + formula.num_vars,
    )
