"""LP relaxations of CNF formulas, one constraint per clause.

Two treatments of negated literals are built:

* faithful: polarity is ignored and each clause contributes the plain sum of
  its variables, sum(X_v) <= bound.  With X >= 0 the zero vector always
  satisfies such a system, so it can never certify unsatisfiability.
* affine: a negated literal contributes 1 - X_v; the constants are folded
  into the bound (recorded in the constraint's offset) and X_v <= 1 box rows
  are added so complements stay nonnegative.

The bound is the clause width k or k - 1.  Faithful mode requires a uniform
width; affine mode bounds each clause by its own width.
"""

from __future__ import annotations

from dataclasses import replace

from .cnf import Formula
from .errors import UnsupportedFormulaError
from .simplex import FEASIBLE, LinearConstraint, LpSystem, solve

FAITHFUL = "faithful"
AFFINE = "affine"
BOUND_K = "k"
BOUND_K_MINUS_1 = "k-1"

NEGATION_MODES = (FAITHFUL, AFFINE)
BOUND_MODES = (BOUND_K, BOUND_K_MINUS_1)


def _check_modes(negation_mode: str, bound_mode: str) -> None:
    if negation_mode not in NEGATION_MODES:
        raise ValueError(f"unknown negation mode {negation_mode!r}")
    if bound_mode not in BOUND_MODES:
        raise ValueError(f"unknown bound mode {bound_mode!r}")


def build_relaxation(
    formula: Formula,
    negation_mode: str = FAITHFUL,
    bound_mode: str = BOUND_K,
) -> LpSystem:
    """Build the relaxation; constraint i corresponds to clause i.

    In affine mode the m clause rows are followed by one X_v <= 1 box row
    per variable.
    """
    _check_modes(negation_mode, bound_mode)
    if negation_mode == FAITHFUL and formula.clauses:
        if formula.uniform_width is None:
            raise UnsupportedFormulaError(
                "faithful mode requires a uniform clause width"
            )
    constraints = []
    for clause in formula.clauses:
        width = clause.width
        bound = width if bound_mode == BOUND_K else width - 1
        coeffs: dict[int, int] = {}
        offset = 0
        for lit in clause.literals:
            var = lit.var - 1
            if negation_mode == FAITHFUL or not lit.negated:
                coeffs[var] = coeffs.get(var, 0) + 1
            else:
                coeffs[var] = coeffs.get(var, 0) - 1
                offset += 1
        constraints.append(
            LinearConstraint(coeffs, bound - offset, offset=offset)
        )
    if negation_mode == AFFINE:
        for var in range(formula.num_vars):
            constraints.append(LinearConstraint({var: 1}, 1))
    return LpSystem(formula.num_vars, tuple(constraints))


def max_clause_decomposition(
    formula: Formula, system: LpSystem, *, exact: bool = True
) -> list:
    """LP maximum of each clause's literal-value sum under the system.

    Relies on constraint i of ``system`` being clause i's row, as
    build_relaxation guarantees.  Returns one value per clause, or None for
    a clause whose sum is unbounded.
    """
    if len(system.constraints) < formula.num_clauses:
        raise ValueError("system has fewer constraints than clauses")
    maxima = []
    for i, con in enumerate(system.constraints[: formula.num_clauses]):
        objective = [0] * system.num_vars
        for var, coeff in con.coefficients.items():
            objective[var] = coeff
        sol = solve(replace(system, objective=tuple(objective)), exact=exact)
        if sol.status == FEASIBLE:
            maxima.append(sol.objective_value + con.offset)
        else:
            maxima.append(None)
    return maxima
