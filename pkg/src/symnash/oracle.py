"""Brute-force equilibrium enumeration by support enumeration.

For a support pair (S1, S2) the column strategies that make every row in S1 a
best response form a polytope ``P_y``; likewise ``P_x`` for the row player.
Every equilibrium lies in some ``P_x × P_y`` and every point of such a product
is an equilibrium, so the equilibrium set is finite exactly when every
nonempty product is a single point.  A product with a positive-dimensional
factor sets ``degenerate`` and contributes its lexicographically least vertex.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import BimatrixGame, MixedStrategy, as_matrix, dot, solve_affine
from .errors import DimensionMismatch, InternalInvariantViolation, TooLarge
from .lp import FREE, LinearProgram, solve
from .verify import is_nash, is_symmetric_ne

DEFAULT_BOUND = 8


@dataclass(frozen=True)
class EnumerationResult:
    equilibria: tuple
    degenerate: bool

    def __len__(self):
        return len(self.equilibria)

    def __iter__(self):
        return iter(self.equilibria)

    def __contains__(self, item):
        return item in self.equilibria


def supports(n):
    """Nonempty subsets of range(n), by size then lexicographically."""
    for k in range(1, n + 1):
        yield from itertools.combinations(range(n), k)


def _param_lp(G, h, objective, sense):
    r = len(objective)
    return solve(LinearProgram(objective, sense, G, h, bounds=(FREE,) * r))


def _indifference_system(M, required, allowed):
    """Affine solution set of the equalities: required rows tie, weights sum to 1."""
    k = len(allowed)
    # unknowns: weights on allowed columns, then the best-response value
    eq_rows = [[M[i][j] for j in allowed] + [Fraction(-1)] for i in required]
    eq_rows.append([Fraction(1)] * k + [Fraction(0)])
    rhs = [Fraction(0)] * len(required) + [Fraction(1)]
    return solve_affine(eq_rows, rhs)


def _best_response_polytope(M, required, allowed, affine=None):
    """Strategies on ``allowed`` columns of ``M`` against which every ``required`` row is optimal.

    Returns ``None`` if empty, otherwise ``(strategy, is_point)`` where the
    strategy is the polytope's unique point or its lexicographically least
    vertex.  ``affine`` may pass in a precomputed :func:`_indifference_system`.
    """
    k = len(allowed)
    sol = _indifference_system(M, required, allowed) if affine is None else affine
    if sol is None:
        return None
    p0, basis = sol
    others = [i for i in range(M.rows) if i not in set(required)]

    def expand(weights):
        full = [Fraction(0)] * M.cols
        for j, w in zip(allowed, weights):
            full[j] = w
        return MixedStrategy(full)

    if not basis:
        weights, value = p0[:k], p0[k]
        if any(w < 0 for w in weights):
            return None
        for i in others:
            if sum(M[i][j] * w for j, w in zip(allowed, weights)) > value:
                return None
        return expand(weights), True

    # search the affine solution set p0 + Σ t_r basis_r through its parameters t:
    # weights stay nonnegative and rows outside ``required`` stay at most the value
    ineq = [[Fraction(0)] * j + [Fraction(-1)] + [Fraction(0)] * (k - j) for j in range(k)]
    ineq += [[M[i][j] for j in allowed] + [Fraction(-1)] for i in others]
    G = [tuple(dot(g, b) for b in basis) for g in ineq]
    h = [-dot(g, p0) for g in ineq]
    r = len(basis)
    zero = [Fraction(0)] * r
    first = _param_lp(G, h, zero, "max")
    if not first.optimal:
        return None
    is_point = True
    for i in range(r):
        e = list(zero)
        e[i] = Fraction(1)
        lo = _param_lp(G, h, e, "min")
        hi = _param_lp(G, h, e, "max")
        if lo.objective_value != hi.objective_value:
            is_point = False
            break
    if is_point:
        t = first.solution
    else:
        # lexicographically least vertex in weight coordinates
        for j in range(k):
            obj = [b[j] for b in basis]
            out = _param_lp(G, h, obj, "min")
            G = G + [tuple(obj), tuple(-v for v in obj)]
            h = h + [out.objective_value, -out.objective_value]
        t = out.solution
    z = [p + sum((ti * b[c] for ti, b in zip(t, basis)), Fraction(0)) for c, p in enumerate(p0)]
    return expand(z[:k]), is_point


def _check_size(bound, *dims):
    if any(d > bound for d in dims):
        raise TooLarge(f"dimensions {dims} exceed the enumeration bound {bound}")


def enumerate_ne(game: BimatrixGame, bound=DEFAULT_BOUND) -> EnumerationResult:
    """All Nash equilibria of a small bimatrix game, sorted by (x, y)."""
    m, n = game.shape
    _check_size(bound, m, n)
    A, BT = game.A, game.B.T
    pairs = sorted(itertools.product(supports(m), supports(n)),
                   key=lambda p: (len(p[0]) + len(p[1]), p[0], p[1]))
    found = set()
    degenerate = False
    for S1, S2 in pairs:
        ax = _indifference_system(BT, S2, S1)
        if ax is None:
            continue
        ay = _indifference_system(A, S1, S2)
        if ay is None:
            continue
        px = _best_response_polytope(BT, S2, S1, ax)
        if px is None:
            continue
        py = _best_response_polytope(A, S1, S2, ay)
        if py is None:
            continue
        (x, x_point), (y, y_point) = px, py
        if not (x_point and y_point):
            degenerate = True
        found.add((x, y))
    for x, y in found:
        if not is_nash(game, x, y):
            raise InternalInvariantViolation(f"enumerated profile {x}, {y} is not an equilibrium")
    return EnumerationResult(tuple(sorted(found)), degenerate)


def enumerate_symmetric_ne(A, bound=DEFAULT_BOUND) -> EnumerationResult:
    """All symmetric equilibria x of (A, Aᵀ), sorted."""
    A = as_matrix(A)
    if not A.is_square():
        raise DimensionMismatch(f"symmetric enumeration needs a square matrix, got {A.shape}")
    _check_size(bound, A.rows)
    found = set()
    degenerate = False
    for S in supports(A.rows):
        p = _best_response_polytope(A, S, S)
        if p is None:
            continue
        x, is_point = p
        degenerate |= not is_point
        found.add(x)
    for x in found:
        if not is_symmetric_ne(A, x):
            raise InternalInvariantViolation(f"enumerated strategy {x} is not a symmetric equilibrium")
    return EnumerationResult(tuple(sorted(found)), degenerate)


def nonsymmetric_equilibria(A, bound=DEFAULT_BOUND):
    """Equilibria (x, y) of (A, Aᵀ) with x ≠ y, plus the degeneracy flag."""
    A = as_matrix(A)
    res = enumerate_ne(BimatrixGame(A, A.T), bound)
    return tuple(p for p in res.equilibria if p[0] != p[1]), res.degenerate


def count_nonsymmetric_ne(A, bound=DEFAULT_BOUND):
    """``(count, degenerate)`` for the non-symmetric equilibria of (A, Aᵀ)."""
    eqs, degenerate = nonsymmetric_equilibria(A, bound)
    return len(eqs), degenerate
