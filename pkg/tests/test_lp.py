import itertools
import random
from fractions import Fraction

import pytest

from symnash.core import dot, solve_unique
from symnash.errors import MalformedProgram, PrimaryNotOptimal
from symnash.lp import FREE, LinearProgram, Status, optimize_over_optimal_face, solve

F = Fraction


def vertex_optimum(c, A, b):
    """Brute force: best objective over all vertices of {Ax <= b, x >= 0}."""
    n = len(c)
    planes = [(list(r), rhs) for r, rhs in zip(A, b)]
    planes += [([F(-1) if j == i else F(0) for j in range(n)], F(0)) for i in range(n)]
    best = None
    for combo in itertools.combinations(planes, n):
        x = solve_unique([p[0] for p in combo], [p[1] for p in combo])
        if x is None or any(v < 0 for v in x) or any(dot(r, x) > rhs for r, rhs in zip(A, b)):
            continue
        val = dot(c, x)
        best = val if best is None else max(best, val)
    return best


def random_bounded_lp(rng, n, m):
    A = [[F(rng.randint(-4, 6)) for _ in range(n)] for _ in range(m)]
    b = [F(rng.randint(0, 9)) for _ in range(m)]
    # a box keeps the program bounded
    A += [[F(1) if j == i else F(0) for j in range(n)] for i in range(n)]
    b += [F(rng.randint(1, 5))] * n
    c = [F(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(n)]
    return c, A, b


# small worked examples

def test_simplex_vertex():
    out = solve(LinearProgram((1, 0), "max", A_eq=[(1, 1)], b_eq=[1]))
    assert out.status is Status.OPTIMAL
    assert out.solution == (1, 0) and out.objective_value == 1


def test_unbounded():
    assert solve(LinearProgram((1,), "max")).status is Status.UNBOUNDED


def test_infeasible():
    assert solve(LinearProgram((0,), "max", A_ub=[(1,)], b_ub=[-1])).status is Status.INFEASIBLE


def test_min_sense_and_free_variables():
    # min |t - 3| written as min s with s >= t - 3, s >= 3 - t, t free
    lp = LinearProgram((0, 1), "min", A_ub=[(1, -1), (-1, -1)], b_ub=[3, -3], bounds=(FREE, "nonneg"))
    out = solve(lp)
    assert out.objective_value == 0 and out.solution == (3, 0)
    lp = LinearProgram((1,), "min", A_ub=[(-1,)], b_ub=[F(5, 2)], bounds=(FREE,))
    assert solve(lp).objective_value == F(-5, 2)


def test_redundant_equalities():
    lp = LinearProgram((1, 2, 3), "max", A_eq=[(1, 1, 1), (2, 2, 2)], b_eq=[1, 2])
    out = solve(lp)
    assert out.objective_value == 3 and out.solution == (0, 0, 1)


def test_malformed_programs():
    with pytest.raises(MalformedProgram):
        LinearProgram(())
    with pytest.raises(MalformedProgram):
        LinearProgram((1, 2), A_ub=[(1,)], b_ub=[1])
    with pytest.raises(MalformedProgram):
        LinearProgram((1,), A_ub=[(1,)], b_ub=[1, 2])
    with pytest.raises(MalformedProgram):
        LinearProgram((1,), sense="maximize")
    with pytest.raises(MalformedProgram):
        LinearProgram((1,), bounds=("positive",))


# optimal face

def test_optimal_face_examples():
    lp = LinearProgram((1, 1), "max", A_ub=[(1, 1)], b_ub=[1])
    lo = optimize_over_optimal_face(lp, (1, 0), "min")
    hi = optimize_over_optimal_face(lp, (1, 0), "max")
    assert (lo.solution, lo.objective_value) == ((0, 1), 0)
    assert (hi.solution, hi.objective_value) == ((1, 0), 1)


def test_optimal_face_of_unique_optimum():
    lp = LinearProgram((2, 1), "max", A_ub=[(1, 1)], b_ub=[1])
    out = optimize_over_optimal_face(lp, (F(3), F(-7)), "min")
    assert out.solution == (1, 0) and out.objective_value == 3


def test_optimal_face_needs_optimal_primary():
    with pytest.raises(PrimaryNotOptimal):
        optimize_over_optimal_face(LinearProgram((1,)), (1,))
    with pytest.raises(PrimaryNotOptimal):
        optimize_over_optimal_face(LinearProgram((1,), A_ub=[(1,)], b_ub=[-1]), (1,))


# exactness, oracle agreement and duality

@pytest.mark.parametrize("seed", range(40))
def test_random_programs_match_vertex_oracle(seed):
    rng = random.Random(seed)
    n, m = rng.randint(1, 3), rng.randint(1, 3)
    c, A, b = random_bounded_lp(rng, n, m)
    out = solve(LinearProgram(c, "max", A, b))
    assert out.optimal
    lp = LinearProgram(c, "max", A, b)
    assert lp.is_feasible_point(out.solution)
    assert dot(c, out.solution) == out.objective_value
    assert out.objective_value == vertex_optimum(c, A, b)


@pytest.mark.parametrize("seed", range(40))
def test_dual_certificate(seed):
    """max cx, Ax <= b, x >= 0 against min bu, Aᵀu >= c, u >= 0."""
    rng = random.Random(1000 + seed)
    n, m = rng.randint(1, 4), rng.randint(1, 4)
    c, A, b = random_bounded_lp(rng, n, m)
    primal = solve(LinearProgram(c, "max", A, b))
    At = [[-A[i][j] for i in range(len(A))] for j in range(n)]
    dual = solve(LinearProgram(b, "min", At, [-v for v in c]))
    assert primal.optimal and dual.optimal
    u = dual.solution
    assert all(v >= 0 for v in u)
    assert all(sum(A[i][j] * u[i] for i in range(len(A))) >= c[j] for j in range(n))
    assert dot(b, u) == primal.objective_value
    # complementary slackness, exactly
    x = primal.solution
    assert all(u[i] * (b[i] - dot(A[i], x)) == 0 for i in range(len(A)))


# Bland's rule on programs that make textbook pivot rules cycle

def test_beale_cycling_example():
    lp = LinearProgram((F(3, 4), -20, F(1, 2), -6), "max",
                       A_ub=[(F(1, 4), -8, -1, 9), (F(1, 2), -12, F(-1, 2), 3), (0, 0, 1, 0)],
                       b_ub=[0, 0, 1])
    out = solve(lp)
    assert out.objective_value == F(5, 4)
    assert out.solution == (1, 0, 1, 0)


def test_kuhn_cycling_example():
    c = (2, 3, -1, -12)
    A = [(-2, -9, 1, 9), (F(1, 3), 1, F(-1, 3), -2), (2, 3, -1, -12)]
    b = (0, 0, 2)
    out = solve(LinearProgram(c, "max", A, b))
    assert out.optimal and out.objective_value == 2
    assert LinearProgram(c, "max", A, b).is_feasible_point(out.solution)


def test_highly_degenerate_program():
    # many constraints tight at the origin
    n = 4
    A = [[F(v) for v in signs] for signs in itertools.product((-1, 1), repeat=n)]
    b = [F(0)] * len(A)
    A.append([F(1)] * n)
    b.append(F(1))
    out = solve(LinearProgram([F(1)] * n, "max", A, b))
    assert out.optimal and out.objective_value == 0
