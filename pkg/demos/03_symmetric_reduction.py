# Embedding a bimatrix game in a symmetric game
from symnash import (BimatrixGame, RationalMatrix, backward_map, build_composite,
                     check_counting_correspondence, collapse, count_nonsymmetric_ne,
                     enumerate_ne, forward_map)

coordination = BimatrixGame(RationalMatrix.identity(2), RationalMatrix.identity(2))

bundle = build_composite(coordination)  # payoffs squeezed into [1/20, 1/10]
print(bundle.G)

src = enumerate_ne(bundle.source).equilibria
print(len(src), "source equilibria")

# an ordered pair of different source equilibria gives an asymmetric equilibrium of (G, Gᵀ)
x, y = backward_map(bundle, src[0], src[2])
print(x.flat())
print(y.flat())
print(collapse(x), collapse(y))  # block masses

# and back again
print(forward_map(bundle, x, y) == (src[0], src[2]))

# k equilibria in the source, k(k-1) non-symmetric ones in the composite
print(count_nonsymmetric_ne(bundle.G))
report = check_counting_correspondence(coordination)
print(report.k, report.count, report.holds)

# a game with one equilibrium gives a composite with none
A = RationalMatrix([[1, -1], [-1, 1]])
print(check_counting_correspondence(BimatrixGame(A, -A)).count)
