"""Symmetric equilibria of symmetric games with rank(A + Aᵀ) <= 1.

Write ``A = K + ½ c dᵀ`` with ``K`` skew-symmetric.  Replacing ``dᵀx`` by a
parameter ``λ`` in the quadratic program for symmetric equilibria gives the
linear program LP(λ)::

    max  ½ λ cᵀx - π
    s.t. K x + (c/2) λ <= π·1,  Σ x = 1,  x >= 0,  π free

whose optimum is always 0.  Let F(λ) be the set of values ``dᵀx`` over the
optimal ``x`` of LP(λ); F maps [d_min, d_max] into closed intervals of itself
and every fixed point λ ∈ F(λ) yields an optimal ``x`` with ``dᵀx = λ``, which
is a symmetric equilibrium of (A, Aᵀ).  The fixed point is located by
bisection on λ followed, if needed, by continued-fraction reconstruction.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import MixedStrategy, RationalMatrix, as_matrix, dot, to_rational, vector
from .errors import (FixedPointNotFound, InternalInvariantViolation, PreconditionViolated,
                     RankExceedsOne)
from .lp import FREE, NONNEG, LinearProgram, solve
from .verify import is_symmetric_ne

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Rank1Decomposition:
    """``A = K + ½ c dᵀ`` with ``K`` skew-symmetric and ``c dᵀ`` symmetric."""

    K: RationalMatrix
    c: tuple
    d: tuple

    @property
    def n(self):
        return self.K.rows

    def rank_one_part(self):
        return RationalMatrix.outer(self.c, self.d).scale(HALF)

    def recompose(self):
        return self.K + self.rank_one_part()


@dataclass(frozen=True)
class LambdaInterval:
    """F(λ) = [lo, hi] with optimal points of LP(λ) attaining each end."""

    lam: Fraction
    lo: Fraction
    hi: Fraction
    witness_lo: MixedStrategy
    witness_hi: MixedStrategy

    def __contains__(self, value):
        return self.lo <= value <= self.hi


def decompose_rank1(A) -> Rank1Decomposition:
    A = as_matrix(A)
    if not A.is_square():
        raise RankExceedsOne(f"expected a square matrix, got {A.shape}")
    n = A.rows
    M = A + A.T
    if M.is_zero():
        zero = (Fraction(0),) * n
        return Rank1Decomposition(A, zero, zero)
    # a nonzero symmetric rank-1 matrix s·vvᵀ has a nonzero diagonal entry
    j = next((j for j in range(n) if M[j][j] != 0), None)
    if j is None:
        raise RankExceedsOne("A + Aᵀ is nonzero with a zero diagonal, so its rank is at least 2")
    c = M.col(j)
    d = tuple(v / M[j][j] for v in M.row(j))
    if RationalMatrix.outer(c, d) != M:
        raise RankExceedsOne("A + Aᵀ has rank at least 2")
    K = A - RationalMatrix.outer(c, d).scale(HALF)
    return Rank1Decomposition(K, c, d)


def build_lp_lambda(dec: Rank1Decomposition, lam) -> LinearProgram:
    """LP(λ) over variables (x_1, ..., x_n, π) with π free."""
    lam = to_rational(lam)
    n = dec.n
    objective = tuple(HALF * lam * ci for ci in dec.c) + (Fraction(-1),)
    # K x - π ≤ -(c/2) λ
    A_ub = tuple(dec.K.row(i) + (Fraction(-1),) for i in range(n))
    b_ub = tuple(-HALF * lam * ci for ci in dec.c)
    A_eq = ((Fraction(1),) * n + (Fraction(0),),)
    return LinearProgram(objective, "max", A_ub, b_ub, A_eq, (Fraction(1),),
                         (NONNEG,) * n + (FREE,))


def _optimal_face(dec, lam):
    lp = build_lp_lambda(dec, lam)
    out = solve(lp)
    if not out.optimal or out.objective_value != 0:
        raise InternalInvariantViolation(
            f"LP(λ={lam}) should have optimal value 0, got {out.status.value} {out.objective_value}")
    return lp.with_equality(lp.objective, 0)


def _strategy(solution, n):
    return MixedStrategy(solution[:n])


def f_interval(dec: Rank1Decomposition, lam) -> LambdaInterval:
    """The interval F(λ) of ``dᵀx`` over optimal solutions of LP(λ)."""
    lam = to_rational(lam)
    face = _optimal_face(dec, lam)
    d_obj = tuple(dec.d) + (Fraction(0),)
    lo = solve(face.with_objective(d_obj, "min"))
    hi = solve(face.with_objective(d_obj, "max"))
    if not (lo.optimal and hi.optimal):
        raise InternalInvariantViolation("dᵀx is unbounded on a bounded optimal face")
    return LambdaInterval(lam, lo.objective_value, hi.objective_value,
                          _strategy(lo.solution, dec.n), _strategy(hi.solution, dec.n))


def _fixed_point_witness(dec, lam):
    """An optimal point of LP(λ) with ``dᵀx = λ``, or ``None`` when λ ∉ F(λ)."""
    face = _optimal_face(dec, lam)
    face = face.with_equality(tuple(dec.d) + (Fraction(0),), lam)
    out = solve(face)
    return _strategy(out.solution, dec.n) if out.optimal else None


def witness_check(dec: Rank1Decomposition, lam, x, v) -> bool:
    """Is ``x`` a symmetric equilibrium of ``K + ½ c vᵀ``?

    For any optimal ``x`` of LP(λ) and any ``v`` with ``vᵀx = λ`` the answer is
    always yes.
    """
    lam = to_rational(lam)
    v = vector(v)
    if dot(v, x) != lam:
        raise PreconditionViolated(f"vᵀx = {dot(v, x)} differs from λ = {lam}")
    Z = dec.K + RationalMatrix.outer(dec.c, v).scale(HALF)
    return is_symmetric_ne(Z, x).holds


def denominator_bound(dec: Rank1Decomposition) -> int:
    """Conservative bound N on the denominator of a fixed point λ*.

    With (K, c, d) scaled to integers of magnitude at most M and L the lcm of
    the denominators of d, N = (n+2)! (M+1)^(n+2) L.
    """
    entries = dec.K.entries + tuple(dec.c) + tuple(dec.d)
    scale = math.lcm(*(q.denominator for q in entries))
    M = max(abs(q * scale) for q in entries)
    L = math.lcm(*(q.denominator for q in dec.d))
    n = dec.n
    return math.factorial(n + 2) * int(M + 1) ** (n + 2) * L


def simplest_between(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with the smallest denominator in [lo, hi] (continued fractions)."""
    if lo > hi:
        raise ValueError("empty interval")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_between(-hi, -lo)
    fl = lo.numerator // lo.denominator
    if fl == lo:
        return Fraction(fl)
    if fl + 1 <= hi:
        return Fraction(fl + 1)
    # both ends share the integer part; recurse on the reciprocals of the fractional parts
    rest = simplest_between(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / rest


@dataclass(frozen=True)
class Rank1Solution:
    x: MixedStrategy
    lam: Fraction
    decomposition: Rank1Decomposition
    iterations: int


def find_fixed_point(A, shortcut=True) -> Rank1Solution:
    """Solve and also report λ* and the number of bisection steps.

    ``shortcut=False`` disables the simplest-rational probe so that only
    bisection and the final reconstruction are used.
    """
    dec = decompose_rank1(A)
    d = dec.d
    d_min, d_max = min(d), max(d)
    if d_min == d_max:
        # dᵀx is the same for every strategy, so λ = d_min is forced
        x = _fixed_point_witness(dec, d_min)
        if x is None:
            raise InternalInvariantViolation("forced λ is not a fixed point")
        return _finish(A, dec, x, d_min, 0)

    for end in (d_min, d_max):
        x = _fixed_point_witness(dec, end)
        if x is not None:
            return _finish(A, dec, x, end, 0)

    N = denominator_bound(dec)
    width_target = Fraction(1, 2 * N * N)
    cap = math.ceil(math.log2((d_max - d_min) * 2 * N * N)) + 4
    lo, hi = d_min, d_max
    tried = set()
    for it in range(1, cap + 1):
        mid = (lo + hi) / 2
        F = f_interval(dec, mid)
        if mid in F:
            x = _fixed_point_witness(dec, mid)
            return _finish(A, dec, x, mid, it)
        if F.hi > mid:
            lo = mid
        else:
            hi = mid
        # the fixed point has a small denominator in practice: test the simplest
        # rational of the bracket before bisecting further
        if shortcut:
            guess = simplest_between(lo, hi)
            if guess not in tried and lo < guess < hi:
                tried.add(guess)
                x = _fixed_point_witness(dec, guess)
                if x is not None:
                    return _finish(A, dec, x, guess, it)
        if hi - lo < width_target:
            guess = ((lo + hi) / 2).limit_denominator(N)
            if lo <= guess <= hi:
                x = _fixed_point_witness(dec, guess)
                if x is not None:
                    return _finish(A, dec, x, guess, it)
            break
    raise FixedPointNotFound(f"no fixed point located in [{lo}, {hi}] after {it} steps")


def _finish(A, dec, x, lam, iterations):
    if dot(dec.d, x) != lam or not is_symmetric_ne(A, x):
        raise InternalInvariantViolation(f"fixed point λ = {lam} produced a non-equilibrium {x}")
    return Rank1Solution(x, lam, dec, iterations)


def solve_symmetric_rank1(A) -> MixedStrategy:
    """A symmetric Nash equilibrium of (A, Aᵀ) when rank(A + Aᵀ) <= 1."""
    return find_fixed_point(A).x
