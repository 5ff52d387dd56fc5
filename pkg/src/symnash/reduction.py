"""Embedding a bimatrix game into a symmetric game.

Given an m×n game (A, B) with payoffs normalized into (0, cap], the composite
matrix on 1 + m + n strategies is::

        | 0   4   0  |     | 0   0   0 |
    G = | 2   0   4  |  +  | 0   0   A |
        | 3   2   0  |     | 0   Bᵀ  0 |

where each constant block is repeated over its index range.  Equilibria (x, y)
of (G, Gᵀ) correspond to ordered pairs of equilibria of (A, B) via the block
split x = (c, a, b), y = (c', a', b') and the pairs (η(a), η(b')), (η(a'), η(b)).
The block masses of x and y always form the unique equilibrium of a 3×3
perturbation of the 0/4/2/3 skeleton.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .core import (DEFAULT_CAP, AffineTransformRecord, BimatrixGame, MixedStrategy,
                   RationalMatrix, eta, normalize_positive_small, solve_unique, to_rational,
                   vector)
from .errors import (DegenerateGame, InternalInvariantViolation, NotAnEquilibrium,
                     NotFullSupport, ZeroVector)
from .oracle import DEFAULT_BOUND, enumerate_ne, nonsymmetric_equilibria
from .verify import is_nash, payoff

SKELETON = ((0, 4, 0),
            (2, 0, 4),
            (3, 2, 0))

D = RationalMatrix(SKELETON)


@dataclass(frozen=True)
class EpsilonQuad:
    eps1: Fraction
    eps2: Fraction
    eps1p: Fraction
    eps2p: Fraction


@dataclass(frozen=True)
class BlockStrategy:
    """A strategy of the composite game split into blocks (c, a, b)."""

    c: Fraction
    a: tuple
    b: tuple

    @classmethod
    def split(cls, x, m, n):
        x = vector(x)
        if len(x) != 1 + m + n:
            raise ValueError(f"expected {1 + m + n} weights, got {len(x)}")
        return cls(x[0], x[1:1 + m], x[1 + m:])

    def flat(self):
        return (to_rational(self.c),) + vector(self.a) + vector(self.b)

    def strategy(self):
        return MixedStrategy(self.flat())


@dataclass(frozen=True)
class ReductionBundle:
    source: BimatrixGame
    G: RationalMatrix
    cap: Fraction
    transform_A: AffineTransformRecord
    transform_B: AffineTransformRecord
    original: BimatrixGame = field(default=None, compare=False)

    @property
    def m(self):
        return self.source.m

    @property
    def n(self):
        return self.source.n

    @property
    def game(self):
        """The symmetric composite as a bimatrix game (G, Gᵀ)."""
        return BimatrixGame(self.G, self.G.T)


def block_skeleton(m, n):
    """The block-constant part K of the composite on 1 + m + n strategies."""
    sizes = (1, m, n)
    rows = []
    for bi, h in enumerate(sizes):
        row = []
        for bj, w in enumerate(sizes):
            row.extend([SKELETON[bi][bj]] * w)
        rows.extend([list(row) for _ in range(h)])
    return RationalMatrix(rows)


def build_composite(game: BimatrixGame, cap=DEFAULT_CAP) -> ReductionBundle:
    cap = to_rational(cap)
    A, tA = normalize_positive_small(game.A, cap)
    B, tB = normalize_positive_small(game.B, cap)
    m, n = game.shape
    rows = block_skeleton(m, n).tolist()
    for i in range(m):
        for j in range(n):
            rows[1 + i][1 + m + j] += A[i][j]
            rows[1 + m + j][1 + i] += B[i][j]
    return ReductionBundle(BimatrixGame(A, B), RationalMatrix(rows), cap, tA, tB, game)


def collapse(x: BlockStrategy) -> tuple:
    """Block masses (c, Σa, Σb)."""
    return (to_rational(x.c), sum(vector(x.a), Fraction(0)), sum(vector(x.b), Fraction(0)))


def epsilons(a, b, ap, bp, game: BimatrixGame) -> EpsilonQuad:
    """Payoffs of the two cross profiles (a, b') and (a', b) in the source game."""
    return EpsilonQuad(eps1=payoff(game.A, a, bp), eps2=payoff(game.B, ap, b),
                       eps1p=payoff(game.A, ap, b), eps2p=payoff(game.B, a, bp))


def d_eps(eps1, eps2) -> RationalMatrix:
    rows = [list(r) for r in SKELETON]
    rows[1][2] += to_rational(eps1)
    rows[2][1] += to_rational(eps2)
    return RationalMatrix(rows)


def _equalizer(M):
    """The strategy p with all entries of M p equal."""
    rows = [[M[0][j] - M[1][j] for j in range(3)],
            [M[0][j] - M[2][j] for j in range(3)],
            [Fraction(1)] * 3]
    p = solve_unique(rows, [Fraction(0), Fraction(0), Fraction(1)])
    if p is None or any(v <= 0 for v in p):
        raise NotFullSupport(f"no fully mixed equalizer for {M}")
    return MixedStrategy(p)


def solve_d_eps(eq: EpsilonQuad):
    """The fully mixed equilibrium (v, w) of (D_{ε₁,ε₂}, D_{ε′₁,ε′₂}ᵀ)."""
    Dr = d_eps(eq.eps1, eq.eps2)
    Dc = d_eps(eq.eps1p, eq.eps2p)
    v = _equalizer(Dc)
    w = _equalizer(Dr)
    if not is_nash(BimatrixGame(Dr, Dc.T), v, w):
        raise InternalInvariantViolation(f"equalizers {v}, {w} are not an equilibrium")
    return v, w


def _blocks(bundle, x):
    if isinstance(x, BlockStrategy):
        return x
    return BlockStrategy.split(x, bundle.m, bundle.n)


def forward_map(bundle: ReductionBundle, x, y):
    """Equilibrium of (G, Gᵀ) to the pair ((η(a), η(b')), (η(a'), η(b)))."""
    x, y = _blocks(bundle, x), _blocks(bundle, y)
    cert = is_nash(bundle.game, x.flat(), y.flat())
    if not cert:
        raise NotAnEquilibrium(f"not an equilibrium of the composite game: {cert.violating_index}")
    try:
        a, b, ap, bp = eta(x.a), eta(x.b), eta(y.a), eta(y.b)
    except ZeroVector as exc:
        raise InternalInvariantViolation("composite equilibrium with an empty block") from exc
    return (a, bp), (ap, b)


def _check_source_ne(game, profile, name):
    x, y = profile
    if not is_nash(game, x, y):
        raise NotAnEquilibrium(f"{name} is not an equilibrium of the normalized source game")
    return MixedStrategy(x), MixedStrategy(y)


def backward_map(bundle: ReductionBundle, ne1, ne2):
    """Ordered pair of source equilibria (a, b'), (a', b) to an equilibrium of (G, Gᵀ)."""
    a, bp = _check_source_ne(bundle.source, ne1, "ne1")
    ap, b = _check_source_ne(bundle.source, ne2, "ne2")
    v, w = solve_d_eps(epsilons(a, b, ap, bp, bundle.source))
    x = BlockStrategy(v[0], tuple(v[1] * t for t in a), tuple(v[2] * t for t in b))
    y = BlockStrategy(w[0], tuple(w[1] * t for t in ap), tuple(w[2] * t for t in bp))
    if not is_nash(bundle.game, x.flat(), y.flat()):
        raise InternalInvariantViolation("backward image is not an equilibrium of the composite")
    return x, y


@dataclass(frozen=True)
class CountingReport:
    k: int
    count: int
    holds: bool
    table: tuple  # ((i, j), (x, y)) for each ordered pair of distinct source equilibria
    source_equilibria: tuple
    composite_equilibria: tuple

    @property
    def expected(self):
        return self.k * (self.k - 1)


def check_counting_correspondence(game: BimatrixGame, cap=DEFAULT_CAP,
                                  bound=DEFAULT_BOUND) -> CountingReport:
    """Check that (G, Gᵀ) has exactly k(k-1) non-symmetric equilibria.

    The table maps every ordered pair of distinct source equilibria through
    :func:`backward_map`; ``holds`` also requires the table images to be
    exactly the enumerated non-symmetric equilibria.
    """
    bundle = build_composite(game, cap)
    src = enumerate_ne(bundle.source, bound)
    if src.degenerate:
        raise DegenerateGame("source game has a continuum of equilibria")
    composite, degenerate = nonsymmetric_equilibria(bundle.G, bound)
    if degenerate:
        raise DegenerateGame("composite game has a continuum of equilibria")
    eqs = src.equilibria
    table = []
    for i, p in enumerate(eqs):
        for j, q in enumerate(eqs):
            if i != j:
                x, y = backward_map(bundle, p, q)
                table.append(((i, j), (x.strategy(), y.strategy())))
    images = [img for _, img in table]
    k, count = len(eqs), len(composite)
    holds = (count == k * (k - 1)
             and len(set(images)) == len(images)
             and set(images) == set(composite))
    return CountingReport(k, count, holds, tuple(table), eqs, composite)
