"""Exact linear programming over the rationals.

A two-phase tableau simplex method with Bland's rule.  Free variables are split
into the difference of two nonnegative ones and inequality rows get slacks;
phase one adds artificial variables only to rows whose slack cannot start in
the basis.  All arithmetic is done
with :class:`fractions.Fraction`, so reported optima and vertices are exact.
"""

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .core import dot, to_rational, vector
from .errors import InternalInvariantViolation, MalformedProgram, PrimaryNotOptimal

NONNEG = "nonneg"
FREE = "free"


class Status(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


def _rows(m):
    return tuple(vector(r) for r in m)


@dataclass(frozen=True)
class LinearProgram:
    """Optimize ``objective @ x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``.

    ``bounds`` gives ``"nonneg"`` or ``"free"`` per variable; it defaults to all
    nonnegative.
    """

    objective: tuple
    sense: str = "max"
    A_ub: tuple = ()
    b_ub: tuple = ()
    A_eq: tuple = ()
    b_eq: tuple = ()
    bounds: tuple = None

    def __post_init__(self):
        obj = vector(self.objective)
        n = len(obj)
        if n == 0:
            raise MalformedProgram("a linear program needs at least one variable")
        if self.sense not in ("max", "min"):
            raise MalformedProgram(f"unknown sense {self.sense!r}")
        A_ub, A_eq = _rows(self.A_ub), _rows(self.A_eq)
        b_ub, b_eq = vector(self.b_ub), vector(self.b_eq)
        if len(A_ub) != len(b_ub) or len(A_eq) != len(b_eq):
            raise MalformedProgram("constraint matrix and right-hand side lengths differ")
        for r in A_ub + A_eq:
            if len(r) != n:
                raise MalformedProgram(f"constraint row of length {len(r)}, expected {n}")
        bounds = (NONNEG,) * n if self.bounds is None else tuple(self.bounds)
        if len(bounds) != n or any(b not in (NONNEG, FREE) for b in bounds):
            raise MalformedProgram("bounds must list 'nonneg' or 'free' for every variable")
        for name, value in (("objective", obj), ("A_ub", A_ub), ("b_ub", b_ub),
                            ("A_eq", A_eq), ("b_eq", b_eq), ("bounds", bounds)):
            object.__setattr__(self, name, value)

    @property
    def num_vars(self):
        return len(self.objective)

    def with_equality(self, row, rhs):
        return LinearProgram(self.objective, self.sense, self.A_ub, self.b_ub,
                             self.A_eq + (vector(row),), self.b_eq + (to_rational(rhs),),
                             self.bounds)

    def with_objective(self, objective, sense):
        return LinearProgram(objective, sense, self.A_ub, self.b_ub,
                             self.A_eq, self.b_eq, self.bounds)

    def is_feasible_point(self, x):
        if len(x) != self.num_vars:
            return False
        if any(b == NONNEG and v < 0 for b, v in zip(self.bounds, x)):
            return False
        if any(dot(r, x) > b for r, b in zip(self.A_ub, self.b_ub)):
            return False
        return all(dot(r, x) == b for r, b in zip(self.A_eq, self.b_eq))


@dataclass(frozen=True)
class LpOutcome:
    status: Status
    solution: tuple = None
    objective_value: Fraction = None
    iterations: int = field(default=0, compare=False)

    @property
    def optimal(self):
        return self.status is Status.OPTIMAL


class _Tableau:
    """Dense simplex tableau for ``max c z`` s.t. ``M z = b``, ``z >= 0``, ``b >= 0``."""

    def __init__(self, rows, rhs, ncols):
        self.T = [list(r) + [b] for r, b in zip(rows, rhs)]
        self.ncols = ncols
        self.basis = [None] * len(self.T)
        self.iterations = 0

    def set_objective(self, costs):
        # obj[j] holds the reduced profit of column j; obj[-1] holds -value
        obj = list(costs) + [Fraction(0)]
        for i, b in enumerate(self.basis):
            cb = obj[b]
            if cb != 0:
                row = self.T[i]
                obj = [o - cb * v for o, v in zip(obj, row)]
        self.obj = obj

    def pivot(self, r, c):
        row = self.T[r]
        piv = row[c]
        if piv != 1:
            row = [v / piv for v in row]
            self.T[r] = row
        for i, other in enumerate(self.T):
            if i != r:
                f = other[c]
                if f != 0:
                    self.T[i] = [a - f * b for a, b in zip(other, row)]
        f = self.obj[c]
        if f != 0:
            self.obj = [a - f * b for a, b in zip(self.obj, row)]
        self.basis[r] = c
        self.iterations += 1

    def run(self, allowed):
        """Bland's rule on columns in ``allowed``; returns True if optimal."""
        while True:
            enter = next((j for j in allowed if self.obj[j] > 0), None)
            if enter is None:
                return True
            best = None
            for i, row in enumerate(self.T):
                a = row[enter]
                if a > 0:
                    key = (row[-1] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], enter)

    def values(self):
        z = [Fraction(0)] * self.ncols
        for i, b in enumerate(self.basis):
            z[b] = self.T[i][-1]
        return z


def solve(lp: LinearProgram) -> LpOutcome:
    """Solve ``lp`` exactly; an optimal answer is a basic feasible solution."""
    n = lp.num_vars
    # column layout: one column per nonneg var, two per free var, then slacks
    colmap = []
    ncols = 0
    for b in lp.bounds:
        if b == FREE:
            colmap.append((ncols, ncols + 1))
            ncols += 2
        else:
            colmap.append((ncols, None))
            ncols += 1
    nslack = len(lp.A_ub)
    structural = ncols + nslack

    def expand(row):
        out = [Fraction(0)] * structural
        for (pos, neg), v in zip(colmap, row):
            out[pos] = v
            if neg is not None:
                out[neg] = -v
        return out

    rows, rhs = [], []
    for k, (r, b) in enumerate(zip(lp.A_ub, lp.b_ub)):
        row = expand(r)
        row[ncols + k] = Fraction(1)
        rows.append(row)
        rhs.append(b)
    for r, b in zip(lp.A_eq, lp.b_eq):
        rows.append(expand(r))
        rhs.append(b)
    # rows whose slack can start in the basis need no artificial variable
    start = [ncols + i if i < nslack and rhs[i] >= 0 else None for i in range(len(rows))]
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]

    needs_art = [i for i, b in enumerate(start) if b is None]
    nart = len(needs_art)
    total = structural + nart
    full_rows = [row + [Fraction(0)] * nart for row in rows]
    for k, i in enumerate(needs_art):
        full_rows[i][structural + k] = Fraction(1)
        start[i] = structural + k
    tab = _Tableau(full_rows, rhs, total)
    tab.basis = start

    # phase one: maximize minus the sum of artificials
    if nart:
        tab.set_objective([Fraction(0)] * structural + [Fraction(-1)] * nart)
        tab.run(range(total))
        if tab.obj[-1] != 0:
            return LpOutcome(Status.INFEASIBLE, iterations=tab.iterations)

    # drive zero-level artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(tab.T):
        if tab.basis[i] >= structural:
            j = next((j for j in range(structural) if tab.T[i][j] != 0), None)
            if j is None:
                del tab.T[i]
                del tab.basis[i]
                continue
            tab.pivot(i, j)
        i += 1
    tab.T = [row[:structural] + [row[-1]] for row in tab.T]
    tab.ncols = structural

    sign = 1 if lp.sense == "max" else -1
    costs = [Fraction(0)] * structural
    for (pos, neg), c in zip(colmap, lp.objective):
        costs[pos] = sign * c
        if neg is not None:
            costs[neg] = -sign * c
    tab.set_objective(costs)
    if not tab.run(range(structural)):
        return LpOutcome(Status.UNBOUNDED, iterations=tab.iterations)

    z = tab.values()
    x = tuple(z[pos] - (z[neg] if neg is not None else 0) for pos, neg in colmap)
    value = dot(lp.objective, x)
    if not lp.is_feasible_point(x) or value != -sign * tab.obj[-1]:
        raise InternalInvariantViolation("simplex returned an inexact or infeasible point")
    return LpOutcome(Status.OPTIMAL, x, value, tab.iterations)


def optimize_over_optimal_face(lp: LinearProgram, secondary, sense="max") -> LpOutcome:
    """Optimize ``secondary`` over the set of optimal solutions of ``lp``."""
    primary = solve(lp)
    if not primary.optimal:
        raise PrimaryNotOptimal(f"primary program is {primary.status.value}")
    face = lp.with_equality(lp.objective, primary.objective_value)
    return solve(face.with_objective(secondary, sense))
