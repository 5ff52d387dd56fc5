import io
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cli_cases import TESTS, golden_path, load_cases, run_case
from gamegen import D, MATCHING_PENNIES
from symnash import BimatrixGame, RationalMatrix, SymmetricGame
from symnash.cli import run
from symnash.errors import DimensionMismatch, ParseError
from symnash.gamefile import parse_game, parse_rational, parse_weights, serialize_game

F = Fraction
CASES = load_cases()


# game files

def test_parse_symmetric():
    gf = parse_game("symmetric\n3\n0 4 0\n2 0 4\n3 2 0\n")
    assert gf.kind == "symmetric" and gf.A == D
    assert gf.bimatrix().B == D.T


def test_parse_bimatrix():
    gf = parse_game("bimatrix\n2 2\n1 -1\n-1 1\n-1 1\n1 -1\n")
    assert gf.bimatrix() == MATCHING_PENNIES


def test_parse_exact_rationals_and_decimals():
    gf = parse_game("# header comment\nsymmetric\n2\n1/2 2/3\n\n0.25 -.5\n")
    assert gf.A == [[F(1, 2), F(2, 3)], [F(1, 4), F(-1, 2)]]


@pytest.mark.parametrize("token", ["nan", "inf", "1e3", "1/0", "0x10", "1/2/3", ""])
def test_rejected_tokens(token):
    with pytest.raises(ParseError):
        parse_rational(token)


def test_parse_error_location():
    with pytest.raises(ParseError) as info:
        parse_game("symmetric\n2\n1 2\n3 1e5\n")
    assert (info.value.line, info.value.column) == (4, 3)


@pytest.mark.parametrize("text", ["symmetric\n2\n1 2\n", "symmetric\n2\n1 2 3\n4 5 6\n",
                                  "bimatrix\n1 2\n1 2\n"])
def test_dimension_errors(text):
    with pytest.raises(DimensionMismatch):
        parse_game(text)


@pytest.mark.parametrize("text", ["", "zerosum\n2\n", "symmetric\n", "bimatrix\n2\n1 2\n"])
def test_header_errors(text):
    with pytest.raises(ParseError):
        parse_game(text)


def test_parse_weights():
    assert parse_weights("1/2, 1/2") == parse_weights("1/2 1/2") == (F(1, 2), F(1, 2))
    with pytest.raises(ParseError):
        parse_weights("  ")


entries = st.fractions(min_value=-100, max_value=100, max_denominator=50)


@st.composite
def games(draw):
    m, n = draw(st.integers(1, 4)), draw(st.integers(1, 4))
    rows = lambda r, c: draw(st.lists(st.lists(entries, min_size=c, max_size=c),
                                      min_size=r, max_size=r))
    if draw(st.booleans()):
        return SymmetricGame(rows(m, m))
    return BimatrixGame(rows(m, n), rows(m, n))


@given(games())
def test_serialization_round_trip(game):
    text = serialize_game(game)
    gf = parse_game(text)
    assert gf.game() == game
    assert serialize_game(gf) == text


# in-process runs

def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def test_printed_rationals_reparse():
    code, out, _ = _run("reduce-build", TESTS / "data" / "sexes.txt", "-o", "-")
    assert code == 0
    for line in out.splitlines()[2:]:
        for token in line.split():
            q = parse_rational(token)
            assert token == (f"{q.numerator}/{q.denominator}" if q.denominator > 1 else str(q.numerator))


def test_reduce_build_to_file(tmp_path):
    target = tmp_path / "composite.txt"
    code, out, _ = _run("reduce-build", TESTS / "data" / "pennies.txt", "-o", target)
    assert code == 0 and out == "composite 5x5 (m=2 n=2 cap=1/10)\n"
    assert parse_game(target.read_text()).A.shape == (5, 5)


def test_usage_errors_exit_two():
    assert _run()[0] == 2
    assert _run("enumerate")[0] == 2
    assert _run("verify", TESTS / "data" / "pennies.txt", "--x", "1 0", "--y", "1/2 1/3")[0] == 2


def test_symmetric_command_on_bimatrix_file():
    code, _, err = _run("enumerate", TESTS / "data" / "pennies.txt", "--symmetric-only")
    assert code == 2 and "symmetric" in err


# golden files

@pytest.mark.parametrize("name,args", CASES, ids=[c[0] for c in CASES])
def test_golden(name, args):
    assert run_case(args) == golden_path(name).read_bytes()
