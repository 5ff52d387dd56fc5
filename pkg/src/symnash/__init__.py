"""Exact symmetric equilibria of rank-1 symmetric games and the reduction from
bimatrix games to symmetric games with matching non-symmetric equilibria."""

from .core import (DEFAULT_CAP, AffineTransformRecord, BimatrixGame, MixedStrategy, Rational,
                   RationalMatrix, SymmetricGame, eta, normalize_positive_small)
from .errors import *  # noqa: F401,F403
from .imitation import (PositiveDiagonal, lift_to_symmetric, rescale_for_diagonal,
                        witness_for_diagonal)
from .lp import LinearProgram, LpOutcome, Status, optimize_over_optimal_face, solve
from .oracle import (EnumerationResult, count_nonsymmetric_ne, enumerate_ne,
                     enumerate_symmetric_ne)
from .rank1 import (LambdaInterval, Rank1Decomposition, build_lp_lambda, decompose_rank1,
                    f_interval, find_fixed_point, witness_check, solve_symmetric_rank1)
from .reduction import (BlockStrategy, EpsilonQuad, ReductionBundle, backward_map,
                        build_composite, check_counting_correspondence, collapse, d_eps,
                        epsilons, forward_map, solve_d_eps)
from .verify import NeCertificate, is_nash, is_symmetric_ne, payoff

__version__ = "0.1.0"
