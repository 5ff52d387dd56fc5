"""Imitation games (A, I) and (A, D) with D a positive diagonal matrix."""

from dataclasses import dataclass
from fractions import Fraction

from .core import BimatrixGame, MixedStrategy, RationalMatrix, as_matrix, vector
from .errors import (DimensionMismatch, InternalInvariantViolation, NonPositiveMatrix,
                     NotAnEquilibrium)
from .verify import best_responses, is_nash, is_symmetric_ne


@dataclass(frozen=True)
class PositiveDiagonal:
    d: tuple

    def __post_init__(self):
        d = vector(self.d)
        if not d or any(v <= 0 for v in d):
            raise ValueError(f"diagonal entries must be positive, got {d}")
        object.__setattr__(self, "d", d)

    @classmethod
    def identity(cls, n):
        return cls((1,) * n)

    def matrix(self) -> RationalMatrix:
        return RationalMatrix.diagonal(self.d)

    def __len__(self):
        return len(self.d)


def _as_diag(diag):
    return diag if isinstance(diag, PositiveDiagonal) else PositiveDiagonal(diag)


def _positive(A):
    A = as_matrix(A)
    if not A.is_square():
        raise DimensionMismatch(f"imitation games need a square matrix, got {A.shape}")
    if any(v <= 0 for v in A.entries):
        raise NonPositiveMatrix("all payoffs of A must be strictly positive")
    return A


def imitation_game(A, diag=None) -> BimatrixGame:
    A = as_matrix(A)
    D = RationalMatrix.identity(A.rows) if diag is None else _as_diag(diag).matrix()
    return BimatrixGame(A, D)


def lift_to_symmetric(A, x, y) -> MixedStrategy:
    """From an equilibrium (x, y) of (A, I) with A > 0, the symmetric equilibrium y."""
    A = _positive(A)
    if not is_nash(imitation_game(A), x, y):
        raise NotAnEquilibrium("(x, y) is not an equilibrium of the imitation game (A, I)")
    y = MixedStrategy(y)
    if not is_symmetric_ne(A, y):
        raise InternalInvariantViolation("lifted strategy is not a symmetric equilibrium")
    return y


def rescale_for_diagonal(x, diag) -> MixedStrategy:
    """x'_i = x_i / (s d_i) with s = Σ x_i / d_i."""
    diag = _as_diag(diag)
    x = MixedStrategy(x)
    if len(x) != len(diag):
        raise DimensionMismatch(f"strategy of length {len(x)} with a diagonal of length {len(diag)}")
    s = sum((xi / di for xi, di in zip(x, diag.d)), Fraction(0))
    return MixedStrategy(xi / (s * di) for xi, di in zip(x, diag.d))


def witness_for_diagonal(A, y, diag) -> MixedStrategy:
    """A row strategy x making (x, y) an equilibrium of (A, diag).

    x is uniform on the best responses to y, then rescaled for ``diag``.
    Uniform weight on every index with positive payoff would not do: such an
    index need not be a best response.
    """
    A = _positive(A)
    diag = _as_diag(diag)
    if len(diag) != A.rows:
        raise DimensionMismatch(f"diagonal of length {len(diag)} for a {A.shape} matrix")
    if not is_symmetric_ne(A, y):
        raise NotAnEquilibrium("y is not a symmetric equilibrium of (A, Aᵀ)")
    x = MixedStrategy.uniform(A.rows, best_responses(A @ y))
    x = rescale_for_diagonal(x, diag)
    if not is_nash(imitation_game(A, diag), x, y):
        raise InternalInvariantViolation("constructed witness is not an equilibrium")
    return x
