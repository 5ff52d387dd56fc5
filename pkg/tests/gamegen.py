"""Random and named games for the test suite."""

from fractions import Fraction

from symnash import BimatrixGame, RationalMatrix

HALF = Fraction(1, 2)

D = RationalMatrix([[0, 4, 0], [2, 0, 4], [3, 2, 0]])
RPS = RationalMatrix([[0, -1, 1], [1, 0, -1], [-1, 1, 0]])

_mp = RationalMatrix([[1, -1], [-1, 1]])
MATCHING_PENNIES = BimatrixGame(_mp, -_mp)
COORDINATION = BimatrixGame(RationalMatrix.identity(2), RationalMatrix.identity(2))
BATTLE_OF_SEXES = BimatrixGame([[2, 0], [0, 1]], [[1, 0], [0, 2]])
PRISONERS_DILEMMA = BimatrixGame([[3, 0], [5, 1]], [[3, 5], [0, 1]])
CHICKEN = BimatrixGame([[0, -1], [1, -10]], [[0, 1], [-1, -10]])
# two pure equilibria and nothing else (finitely many, but not classically nondegenerate)
TWO_PURE = BimatrixGame([[1, 0], [0, 0]], [[1, 0], [0, 0]])


def random_matrix(rng, rows, cols, lo=-5, hi=5):
    return RationalMatrix([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def random_game(rng, m, n, lo=-5, hi=5):
    return BimatrixGame(random_matrix(rng, m, n, lo, hi), random_matrix(rng, m, n, lo, hi))


def random_skew(rng, n, bound=5):
    K = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randint(-bound, bound)
            K[i][j], K[j][i] = v, -v
    return RationalMatrix(K)


def random_rank1(rng, n, bound=5):
    """A = K + ½ c dᵀ with integer skew K and c, d integer multiples of one vector u."""
    K = random_skew(rng, n, bound)
    u = [rng.randint(-bound, bound) for _ in range(n)]
    top = max(1, max(abs(v) for v in u))
    scales = [s for s in (-2, -1, 1, 2) if abs(s) * top <= bound]
    sc, sd = rng.choice(scales), rng.choice(scales)
    c = [sc * v for v in u]
    d = [sd * v for v in u]
    A = K + RationalMatrix.outer(c, d).scale(HALF)
    return A, K, c, d


def random_simplex(rng, n, positive_blocks=None, denom=12):
    """Random rational point of the simplex; ``positive_blocks`` lists index ranges forced nonzero."""
    w = [rng.randint(0, denom) for _ in range(n)]
    for block in positive_blocks or ():
        if not any(w[i] for i in block):
            w[rng.choice(list(block))] = rng.randint(1, denom)
    if not any(w):
        w[rng.randrange(n)] = 1
    total = sum(w)
    return tuple(Fraction(v, total) for v in w)


def random_positive_rational(rng, hi=Fraction(1, 10), denom=1000):
    return Fraction(rng.randint(1, denom), denom) * hi


# further sources with exactly two isolated equilibria (both pure)
TWO_PURE_B = BimatrixGame([[3, 0], [2, 0]], [[1, 0], [2, 2]])
TWO_PURE_C = BimatrixGame([[2, 1], [3, 1]], [[2, 2], [3, 0]])

COUNTING_CORPUS = {
    "matching pennies": (MATCHING_PENNIES, 1),
    "prisoners dilemma": (PRISONERS_DILEMMA, 1),
    "two pure": (TWO_PURE, 2),
    "two pure b": (TWO_PURE_B, 2),
    "two pure c": (TWO_PURE_C, 2),
    "coordination": (COORDINATION, 3),
    "battle of sexes": (BATTLE_OF_SEXES, 3),
    "chicken": (CHICKEN, 3),
}
