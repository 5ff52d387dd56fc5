# Imitation games (A, I): the column player wants to copy the row player
from fractions import Fraction as F

from symnash import (RationalMatrix, enumerate_ne, enumerate_symmetric_ne, is_nash,
                     lift_to_symmetric, rescale_for_diagonal, witness_for_diagonal)
from symnash.imitation import imitation_game

A = RationalMatrix([[2, 1], [1, 2]])

# every equilibrium (x, y) of (A, I) gives a symmetric equilibrium y of (A, Aᵀ)
for x, y in enumerate_ne(imitation_game(A)):
    print(x, y, lift_to_symmetric(A, x, y))

# a positive diagonal instead of I: reweight the row strategy
diag = (1, 2)
x = rescale_for_diagonal((F(1, 2), F(1, 2)), diag)
print(x)  # (2/3, 1/3)
print(is_nash(imitation_game(A, diag), x, (F(1, 2), F(1, 2))))

# and the converse: a row strategy for each symmetric equilibrium
for y in enumerate_symmetric_ne(A):
    print(y, witness_for_diagonal(A, y, diag))

# uniform weight on all positive payoffs would not work here: Ay = (2, 1)
y = (1, 0)
print(is_nash(imitation_game(A), (F(1, 2), F(1, 2)), y).holds)  # False
print(witness_for_diagonal(A, y, (1, 1)))                 # (1, 0)
