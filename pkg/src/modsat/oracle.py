"""Exact satisfiability oracles: exhaustive enumeration and DPLL.

Both are deterministic.  Brute force walks assignments as ascending integers
(bit i-1 is variable i) and returns the first witness.  DPLL does unit
propagation and pure-literal elimination to a fixpoint, then branches on the
lowest-numbered variable still occurring, false first, under a node budget.
A blown budget raises; it is never reported as a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cnf import Formula, evaluate
from .errors import BudgetExceededError

BRUTE_FORCE_MAX_VARS = 26
DEFAULT_NODE_BUDGET = 10**7

SAT = "sat"
UNSAT = "unsat"


@dataclass(frozen=True)
class OracleVerdict:
    status: str
    witness: tuple[bool, ...] | None
    nodes_explored: int


def verify(formula: Formula, assignment: Sequence[bool]) -> bool:
    """True when the assignment satisfies the formula (standard semantics)."""
    return evaluate(formula, assignment)


def brute_force_sat(
    formula: Formula, max_vars: int = BRUTE_FORCE_MAX_VARS
) -> OracleVerdict:
    """Try all 2**n assignments in a fixed ascending order."""
    n = formula.num_vars
    if n > max_vars:
        raise BudgetExceededError(
            f"{n} variables exceed the brute force cap of {max_vars}"
        )
    pos_neg = []
    for clause in formula.clauses:
        pos = 0
        neg = 0
        for lit in clause.literals:
            bit = 1 << (lit.var - 1)
            if lit.negated:
                neg |= bit
            else:
                pos |= bit
        pos_neg.append((pos, neg))
    full = (1 << n) - 1
    tried = 0
    for a in range(1 << n):
        tried += 1
        flipped = a ^ full
        if all(a & pos or flipped & neg for pos, neg in pos_neg):
            witness = tuple(bool(a >> i & 1) for i in range(n))
            return OracleVerdict(SAT, witness, tried)
    return OracleVerdict(UNSAT, None, tried)


def _propagate(clauses: list[list[int]], assign: dict[int, bool]):
    """Unit propagation and pure-literal elimination to a fixpoint.

    Returns (clauses, True) on success with ``assign`` extended in place,
    or (None, False) on conflict.
    """
    while True:
        changed = False
        # Unit clauses force assignments.
        units = {}
        for c in clauses:
            if len(c) == 1:
                lit = c[0]
                if units.get(abs(lit), lit) != lit:
                    return None, False  # opposite units
                units[abs(lit)] = lit
        if units:
            changed = True
            for var, lit in units.items():
                assign[var] = lit > 0
            clauses, ok = _reduce(clauses, units.values())
            if not ok:
                return None, False
        # Pure literals can be satisfied for free.
        polarity: dict[int, int] = {}
        for c in clauses:
            for lit in c:
                polarity[abs(lit)] = polarity.get(abs(lit), 0) | (1 if lit > 0 else 2)
        pures = [var if mask == 1 else -var for var, mask in polarity.items() if mask != 3]
        if pures:
            changed = True
            for lit in pures:
                assign[abs(lit)] = lit > 0
            clauses, ok = _reduce(clauses, pures)
            if not ok:
                return None, False
        if not changed:
            return clauses, True


def _reduce(clauses: list[list[int]], literals) -> tuple[list[list[int]] | None, bool]:
    """Apply a batch of decided literals: drop satisfied clauses, strip
    falsified literals, fail on an emptied clause."""
    true_lits = set(literals)
    false_lits = {-lit for lit in true_lits}
    out = []
    for c in clauses:
        if any(lit in true_lits for lit in c):
            continue
        reduced = [lit for lit in c if lit not in false_lits]
        if not reduced:
            return None, False
        out.append(reduced)
    return out, True


def dpll_sat(
    formula: Formula, node_budget: int = DEFAULT_NODE_BUDGET
) -> OracleVerdict:
    """DPLL search.  Raises BudgetExceededError when the node budget runs out."""
    clauses = [
        [lit.to_dimacs() for lit in clause.literals] for clause in formula.clauses
    ]
    counter = {"nodes": 0}

    def search(clauses: list[list[int]], assign: dict[int, bool]):
        counter["nodes"] += 1
        if counter["nodes"] > node_budget:
            raise BudgetExceededError(
                f"DPLL node budget of {node_budget} exceeded"
            )
        clauses, ok = _propagate(clauses, assign)
        if not ok:
            return None
        if not clauses:
            return assign
        var = min(abs(lit) for c in clauses for lit in c)
        for lit in (-var, var):  # false branch first
            result = search(clauses + [[lit]], dict(assign))
            if result is not None:
                return result
        return None

    assign = search(clauses, {})
    nodes = counter["nodes"]
    if assign is None:
        return OracleVerdict(UNSAT, None, nodes)
    witness = tuple(assign.get(v, False) for v in range(1, formula.num_vars + 1))
    return OracleVerdict(SAT, witness, nodes)
