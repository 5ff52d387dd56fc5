# Exact equilibrium checks and brute-force enumeration
from fractions import Fraction as F

from symnash import BimatrixGame, RationalMatrix, enumerate_ne, enumerate_symmetric_ne, is_nash

# matching pennies: zero-sum, one mixed equilibrium
A = RationalMatrix([[1, -1], [-1, 1]])
pennies = BimatrixGame(A, -A)

half = (F(1, 2), F(1, 2))
print(is_nash(pennies, half, half))  # holds, both players earn 0

cert = is_nash(pennies, (1, 0), (1, 0))
print(cert.holds, cert.violating_index)  # player 2 wants to switch to strategy index 1

# support enumeration lists every equilibrium of a small game
coordination = BimatrixGame(RationalMatrix.identity(2), RationalMatrix.identity(2))
for x, y in enumerate_ne(coordination):
    print(x, y)

# a constant game has a continuum of equilibria; the flag says so
zero = RationalMatrix.constant(2, 2)
print(enumerate_ne(BimatrixGame(zero, zero)).degenerate)

# symmetric equilibria of a symmetric game (A, Aᵀ)
skeleton = RationalMatrix([[0, 4, 0], [2, 0, 4], [3, 2, 0]])
print(enumerate_symmetric_ne(skeleton).equilibria)  # only (2/7, 3/7, 2/7)
