"""Exact Nash equilibrium checks and payoff evaluation."""

from dataclasses import dataclass
from fractions import Fraction

from .core import MixedStrategy, as_matrix, eta
from .errors import DimensionMismatch


@dataclass(frozen=True)
class NeCertificate:
    """Outcome of an equilibrium check.

    ``payoffs`` are the best-response values (π₁, π₂).  When the check fails,
    ``violating_index`` is ``(player, strategy)`` with ``player`` in {1, 2} and a
    0-based ``strategy``: the lowest-index best response of the first player
    whose support contains a strictly worse strategy.  ``unsupported`` is the
    0-based index of that worse supported strategy.
    """

    holds: bool
    payoffs: tuple
    violating_index: tuple = None
    unsupported: int = None

    def __bool__(self):
        return self.holds


def payoff(M, z1, z2) -> Fraction:
    """η(z1)ᵀ M η(z2) for nonzero nonnegative vectors."""
    M = as_matrix(M)
    if len(z1) != M.rows or len(z2) != M.cols:
        raise DimensionMismatch(f"vectors of length {len(z1)}, {len(z2)} against {M.shape} matrix")
    return M.bilinear(eta(z1), eta(z2))


def _first_violation(values, weights):
    best = max(values)
    for i, (v, w) in enumerate(zip(values, weights)):
        if w > 0 and v != best:
            return values.index(best), i
    return None


def is_nash(game, x, y) -> NeCertificate:
    A, B = game.A, game.B
    if len(x) != A.rows or len(y) != A.cols:
        raise DimensionMismatch(f"profile of sizes ({len(x)}, {len(y)}) for a {A.shape} game")
    x, y = MixedStrategy(x), MixedStrategy(y)
    row_values = A @ y
    col_values = x @ B
    pi = (max(row_values), max(col_values))
    for player, values, weights in ((1, row_values, x), (2, col_values, y)):
        bad = _first_violation(list(values), weights)
        if bad is not None:
            return NeCertificate(False, pi, (player, bad[0]), bad[1])
    return NeCertificate(True, pi)


def is_symmetric_ne(A, x) -> NeCertificate:
    A = as_matrix(A)
    if not A.is_square() or len(x) != A.rows:
        raise DimensionMismatch(f"strategy of length {len(x)} for a {A.shape} matrix")
    x = MixedStrategy(x)
    values = list(A @ x)
    pi = max(values)
    bad = _first_violation(values, x)
    if bad is not None:
        return NeCertificate(False, (pi, pi), (1, bad[0]), bad[1])
    return NeCertificate(True, (pi, pi))


def best_responses(values):
    best = max(values)
    return tuple(i for i, v in enumerate(values) if v == best)
