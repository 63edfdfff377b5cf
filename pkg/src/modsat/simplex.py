"""Linear programs over nonnegative variables with <= constraints, solved by
a two-phase tableau simplex.

Arithmetic is exact (fractions.Fraction) by default; float mode uses a 1e-9
tolerance.  Pivot selection follows Bland's rule (lowest eligible index for
entering, lowest basis index on ratio ties), which rules out cycling.  Rows
with a negative right-hand side get an artificial variable; phase 1 drives
the artificial sum to zero or certifies infeasibility by its positive
optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

FEASIBLE = "feasible"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

FLOAT_TOL = 1e-9


@dataclass(frozen=True)
class LinearConstraint:
    """sum(coefficients[v] * X_v) <= bound, variables 0-based.

    ``offset`` records a constant that was folded out of the left side (used
    when complemented literals 1 - X are rewritten); the modeled quantity is
    offset + sum(...).  An empty coefficient map is a constant row.
    """

    coefficients: Mapping[int, int | Fraction]
    bound: int | Fraction
    offset: int = 0

    def __post_init__(self):
        canon = {}
        for var, coeff in sorted(self.coefficients.items()):
            if not isinstance(var, int) or var < 0:
                raise ValueError(f"variable index must be >= 0, got {var!r}")
            if coeff != 0:
                canon[var] = coeff
        object.__setattr__(self, "coefficients", canon)


@dataclass(frozen=True)
class LpSystem:
    """Constraints plus implicit X >= 0, with an optional maximize objective."""

    num_vars: int
    constraints: tuple[LinearConstraint, ...]
    objective: tuple[int | Fraction, ...] | None = None

    def __post_init__(self):
        if self.num_vars < 0:
            raise ValueError(f"num_vars must be >= 0, got {self.num_vars}")
        for con in self.constraints:
            for var in con.coefficients:
                if var >= self.num_vars:
                    raise ValueError(
                        f"constraint references variable {var} "
                        f"but only {self.num_vars} exist"
                    )
        if self.objective is not None and len(self.objective) != self.num_vars:
            raise ValueError(
                f"objective length {len(self.objective)} != {self.num_vars}"
            )


@dataclass(frozen=True)
class LpSolution:
    """Solver outcome.

    ``point`` is present exactly when status is feasible.  For an infeasible
    system ``infeasibility`` holds the positive phase-1 artificial optimum,
    the certificate that no feasible point exists.
    """

    status: str
    point: tuple | None
    objective_value: Fraction | float | None
    pivot_steps: int
    infeasibility: Fraction | float | None = None


def max_violation(system: LpSystem, point: Sequence) -> Fraction | float:
    """Largest amount by which ``point`` breaks any constraint or X >= 0.

    Zero or negative means the point satisfies the whole system.
    """
    if len(point) != system.num_vars:
        raise ValueError("point length does not match num_vars")
    worst = -min(point, default=0)
    for con in system.constraints:
        lhs = sum(coeff * point[var] for var, coeff in con.coefficients.items())
        gap = lhs - con.bound
        if gap > worst:
            worst = gap
    return worst


class _Tableau:
    """Mutable simplex tableau shared by both phases."""

    def __init__(self, system: LpSystem, exact: bool):
        self.exact = exact
        self.conv = Fraction if exact else float
        self.zero = self.conv(0)
        self.tol = Fraction(0) if exact else FLOAT_TOL
        self.zrow: list | None = None
        nx = system.num_vars
        m = len(system.constraints)
        self.nx = nx
        self.nslack = m
        self.pivots = 0
        conv, zero = self.conv, self.zero
        one = conv(1)

        rows = []
        art_rows = set()
        for i, con in enumerate(system.constraints):
            coeffs = [zero] * nx
            for var, c in con.coefficients.items():
                coeffs[var] = conv(c)
            b = conv(con.bound)
            if b < zero:
                coeffs = [-c for c in coeffs]
                b = -b
                slack = -one
                art_rows.add(i)
            else:
                slack = one
            rows.append((coeffs, slack, b))

        self.nart = len(art_rows)
        ncols = nx + m + self.nart
        self.rhs = ncols  # index of the right-hand-side column
        self.rows: list[list] = []
        self.basis: list[int] = []
        art_seen = 0
        for i, (coeffs, slack, b) in enumerate(rows):
            row = coeffs + [zero] * (m + self.nart) + [b]
            row[nx + i] = slack
            if i in art_rows:
                art_col = nx + m + art_seen
                art_seen += 1
                row[art_col] = one
                self.basis.append(art_col)
            else:
                self.basis.append(nx + i)
            self.rows.append(row)

    def _pivot(self, r: int, c: int) -> None:
        piv = self.rows[r][c]
        self.rows[r] = [x / piv for x in self.rows[r]]
        prow = self.rows[r]
        for i, row in enumerate(self.rows):
            if i != r and row[c] != 0:
                f = row[c]
                self.rows[i] = [x - f * p for x, p in zip(row, prow)]
        if self.zrow is not None and self.zrow[c] != 0:
            f = self.zrow[c]
            self.zrow = [x - f * p for x, p in zip(self.zrow, prow)]
        self.basis[r] = c
        self.pivots += 1

    def _build_zrow(self, costs: list) -> None:
        """zrow[j] = sum over basic rows of cost(basic) * row[j], minus cost(j)."""
        width = self.rhs + 1
        zrow = [self.zero] * width
        for i, bcol in enumerate(self.basis):
            cb = costs[bcol]
            if cb != 0:
                row = self.rows[i]
                zrow = [z + cb * x for z, x in zip(zrow, row)]
        for j in range(self.rhs):
            zrow[j] -= costs[j]
        self.zrow = zrow

    def _iterate(self, enter_limit: int) -> str:
        """Run pivots until optimal or unbounded.  Entering columns are
        restricted to indices below enter_limit (used to bar artificials)."""
        tol = self.tol
        while True:
            enter = -1
            for j in range(enter_limit):
                if self.zrow[j] < -tol:
                    enter = j
                    break
            if enter < 0:
                return "optimal"
            leave = -1
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > tol:
                    ratio = row[self.rhs] / a
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[i] < self.basis[leave])
                    ):
                        best = ratio
                        leave = i
            if leave < 0:
                return "unbounded"
            self._pivot(leave, enter)

    def phase_one(self) -> Fraction | float | None:
        """Minimize the artificial sum.  Returns the positive infeasibility
        certificate, or None when a basic feasible solution was reached."""
        if self.nart == 0:
            return None
        width = self.rhs + 1
        costs = [self.zero] * width
        mone = -self.conv(1)
        for j in range(self.nx + self.nslack, self.rhs):
            costs[j] = mone
        self._build_zrow(costs)
        self._iterate(self.nx + self.nslack)
        value = self.zrow[self.rhs]  # max of -(artificial sum), always <= 0
        if value < -self.tol:
            return -value
        # Drive any zero-level artificial out of the basis; a row with no
        # usable pivot column is redundant and dropped afterwards.
        art_floor = self.nx + self.nslack
        redundant = set()
        for i in range(len(self.basis)):
            if self.basis[i] < art_floor:
                continue
            pivot_col = -1
            for j in range(art_floor):
                if abs(self.rows[i][j]) > self.tol:
                    pivot_col = j
                    break
            if pivot_col >= 0:
                self._pivot(i, pivot_col)
            else:
                redundant.add(i)
        self.rows = [r for i, r in enumerate(self.rows) if i not in redundant]
        self.basis = [b for i, b in enumerate(self.basis) if i not in redundant]
        # Drop artificial columns for phase 2.
        self.rows = [row[:art_floor] + [row[self.rhs]] for row in self.rows]
        self.rhs = art_floor
        self.nart = 0
        self.zrow = None
        return None

    def phase_two(self, objective: Sequence) -> str:
        costs = [self.zero] * (self.rhs + 1)
        for j, c in enumerate(objective):
            costs[j] = self.conv(c)
        self._build_zrow(costs)
        return self._iterate(self.rhs)

    def point(self) -> tuple:
        xs = [self.zero] * self.nx
        for i, bcol in enumerate(self.basis):
            if bcol < self.nx:
                xs[bcol] = self.rows[i][self.rhs]
        return tuple(xs)


def solve(system: LpSystem, *, exact: bool = True) -> LpSolution:
    """Two-phase simplex.

    Without an objective the phase-1 basic feasible point is returned as-is.
    With one, phase 2 maximizes it and reports the optimal vertex or
    unboundedness.  ``pivot_steps`` counts every pivot across both phases.
    """
    tab = _Tableau(system, exact)
    certificate = tab.phase_one()
    if certificate is not None:
        return LpSolution(
            INFEASIBLE, None, None, tab.pivots, infeasibility=certificate
        )
    if system.objective is None:
        return LpSolution(FEASIBLE, tab.point(), None, tab.pivots)
    outcome = tab.phase_two(system.objective)
    if outcome == "unbounded":
        return LpSolution(UNBOUNDED, None, None, tab.pivots)
    value = tab.zrow[tab.rhs]
    return LpSolution(FEASIBLE, tab.point(), value, tab.pivots)
