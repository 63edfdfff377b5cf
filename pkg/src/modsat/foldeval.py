"""Clause-sum fold evaluation of uniform-width CNF.

Each clause is collapsed to the integer sum of its literal codes in the
zero-is-true encoding (a satisfied-by-all clause sums to 0).  The sums are
then folded right to left through the join table, which is 0 wherever either
operand is 0.  The result is therefore 0 exactly when some clause sum is 0,
which is NOT standard CNF semantics; ``cnf.evaluate`` is the ground truth
and the differential harness measures the gap.

Operation accounting: every addition, table lookup, and literal negation is
counted as performed.  A table lookup is charged two additions for the row
and column offsets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cnf import Clause, Formula
from .errors import UnsupportedFormulaError
from .mvlogic import clause_join_table


@dataclass(frozen=True)
class OpCount:
    additions: int = 0
    table_calls: int = 0
    negations: int = 0


@dataclass(frozen=True)
class FoldResult:
    value: int  # 0 or 1; 0 means true in the zero-is-true encoding
    ops: OpCount


def _require_uniform(formula: Formula) -> int:
    if not formula.clauses:
        raise UnsupportedFormulaError("at least one clause is required")
    width = formula.uniform_width
    if width is None:
        raise UnsupportedFormulaError("mixed clause widths are not supported")
    if width < 2:
        raise UnsupportedFormulaError(f"clause width must be >= 2, got {width}")
    return width


def clause_sum(clause: Clause, assignment: Sequence[bool]) -> int:
    """Sum of the clause's literal codes under the zero-is-true encoding.

    A positive literal contributes the code of its variable, a negated one
    the complement.  0 means every literal in the clause is true.
    """
    total = 0
    for lit in clause.literals:
        if lit.var > len(assignment):
            raise ValueError(
                f"assignment too short for variable {lit.var}"
            )
        code = 0 if assignment[lit.var - 1] else 1
        if lit.negated:
            code = 1 - code
        total += code
    return total


def fold_eval(formula: Formula, assignment: Sequence[bool]) -> FoldResult:
    """Evaluate by folding clause sums through the join table.

    The fold is right-nested: join(s1, join(s2, ... join(s_{m-1}, s_m))).
    With a single clause no join is needed and the sum is normalized to 0/1
    directly.  Returns the final value plus exact operation counts.
    """
    width = _require_uniform(formula)
    if len(assignment) != formula.num_vars:
        raise ValueError(
            f"assignment length {len(assignment)} != {formula.num_vars} variables"
        )
    table = clause_join_table(width).values()
    additions = 0
    negations = 0
    table_calls = 0
    sums = []
    for clause in formula.clauses:
        total = -1
        for lit in clause.literals:
            code = 0 if assignment[lit.var - 1] else 1
            if lit.negated:
                code = 1 - code
                negations += 1
            if total < 0:
                total = code
            else:
                total += code
                additions += 1
        sums.append(total)
    if len(sums) == 1:
        value = 0 if sums[0] == 0 else 1
    else:
        acc = sums[-1]
        for j in range(len(sums) - 2, -1, -1):
            # row and column offset arithmetic for the lookup
            additions += 2
            table_calls += 1
            acc = table[sums[j]][acc]
        value = acc
    return FoldResult(value, OpCount(additions, table_calls, negations))


def closed_form(formula: Formula, assignment: Sequence[bool]) -> int:
    """Closed form of the fold: 0 iff some clause sum is 0, else 1.

    Computed without the join table; must agree with fold_eval everywhere.
    """
    _require_uniform(formula)
    if len(assignment) != formula.num_vars:
        raise ValueError(
            f"assignment length {len(assignment)} != {formula.num_vars} variables"
        )
    if any(clause_sum(c, assignment) == 0 for c in formula.clauses):
        return 0
    return 1


def predicted_ops(formula: Formula) -> OpCount:
    """Operation counts implied by the formula shape alone.

    For m uniform clauses of width k with p negated literal occurrences:
    (k-1)*m sum additions plus 2*(m-1) lookup additions, m-1 table calls,
    p negations.
    """
    width = _require_uniform(formula)
    m = formula.num_clauses
    return OpCount(
        additions=(width - 1) * m + 2 * (m - 1),
        table_calls=m - 1,
        negations=formula.negated_occurrences,
    )
