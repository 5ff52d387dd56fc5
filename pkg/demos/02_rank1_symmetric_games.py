# Symmetric equilibria of symmetric games with rank(A + Aᵀ) <= 1
import random
from fractions import Fraction as F

from symnash import (RationalMatrix, decompose_rank1, enumerate_symmetric_ne, f_interval,
                     find_fixed_point, is_symmetric_ne, solve_symmetric_rank1)

A = RationalMatrix([[1, 2], [0, 1]])

dec = decompose_rank1(A)  # A = K + ½ c dᵀ
print(dec.K, dec.c, dec.d)

# F(λ): the values of dᵀx over optimal points of the parameterized LP
for lam in (F(0), F(1, 2), F(1)):
    I = f_interval(dec, lam)
    print(lam, "->", [I.lo, I.hi])

sol = find_fixed_point(A)
print(sol.x, sol.lam)  # λ = 1 is a fixed point, x = (1, 0)

# skew-symmetric games take the rank-0 path
rps = RationalMatrix([[0, -1, 1], [1, 0, -1], [-1, 1, 0]])
print(solve_symmetric_rank1(rps))

# random rank-1 games, checked against the enumeration oracle
rng = random.Random(0)
for _ in range(5):
    n = rng.randint(2, 5)
    K = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            K[i][j] = rng.randint(-5, 5)
            K[j][i] = -K[i][j]
    u = [rng.randint(-2, 2) for _ in range(n)]
    A = RationalMatrix(K) + RationalMatrix.outer(u, [2 * v for v in u]).scale(F(1, 2))
    sol = find_fixed_point(A)
    ok = is_symmetric_ne(A, sol.x).holds and sol.x in enumerate_symmetric_ne(A)
    print(n, sol.x, "lambda", sol.lam, "steps", sol.iterations, ok)

# the same answer without the simplest-rational probe, just bisection
print(find_fixed_point(A, shortcut=False).x)
