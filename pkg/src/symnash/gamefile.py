"""Plain-text game files.

::

    # comment lines start with '#'
    bimatrix
    2 2
    1 -1
    -1 1
    -1 1
    1 -1

Line 1 is ``bimatrix`` or ``symmetric``, line 2 the dimensions (``m n`` or
``n``), then the rows of A and, for bimatrix games, the rows of B.  Entries are
integers, fractions ``p/q`` or plain decimals such as ``0.25``; exponents,
``nan`` and ``inf`` are rejected.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from .core import BimatrixGame, RationalMatrix, SymmetricGame, format_rational
from .errors import DimensionMismatch, ParseError

_TOKEN = re.compile(r"[+-]?(\d+(/\d+)?|\d+\.\d*|\.\d+)\Z")


def parse_rational(token, line=None, column=None) -> Fraction:
    if not _TOKEN.match(token):
        raise ParseError(f"not an exact rational: {token!r}", line, column)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {token!r}", line, column) from None


def parse_weights(text) -> tuple:
    """Parse a weight list such as ``"1/2 1/2"`` or ``"1/2,1/2"``."""
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ParseError("empty weight list")
    return tuple(parse_rational(t) for t in tokens)


def format_vector(values) -> str:
    return " ".join(format_rational(v) for v in values)


@dataclass(frozen=True)
class GameFile:
    kind: str
    A: RationalMatrix
    B: RationalMatrix = None

    @property
    def dimensions(self):
        return self.A.shape

    def game(self):
        if self.kind == "symmetric":
            return SymmetricGame(self.A)
        return BimatrixGame(self.A, self.B)

    def bimatrix(self) -> BimatrixGame:
        if self.kind == "symmetric":
            return SymmetricGame(self.A).as_bimatrix()
        return BimatrixGame(self.A, self.B)


def _lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            yield number, raw


def _row(number, raw, width):
    values = []
    for m in re.finditer(r"\S+", raw):
        values.append(parse_rational(m.group(), number, m.start() + 1))
    if len(values) != width:
        raise DimensionMismatch(f"line {number}: expected {width} entries, found {len(values)}")
    return values


def _dims(number, raw, count):
    parts = raw.split()
    if len(parts) != count or not all(p.isdigit() and int(p) > 0 for p in parts):
        raise ParseError(f"expected {count} positive integer dimension(s), got {raw.strip()!r}", number, 1)
    return [int(p) for p in parts]


def parse_game(text) -> GameFile:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty game file")
    number, raw = lines[0]
    kind = raw.strip().lower()
    if kind not in ("bimatrix", "symmetric"):
        raise ParseError(f"unknown game kind {raw.strip()!r}", number, 1)
    if len(lines) < 2:
        raise ParseError("missing dimension line", number + 1, 1)
    if kind == "symmetric":
        (n,) = _dims(*lines[1], 1)
        m = n
        expected = n
    else:
        m, n = _dims(*lines[1], 2)
        expected = 2 * m
    body = lines[2:]
    if len(body) != expected:
        last = body[-1][0] if body else lines[1][0]
        raise DimensionMismatch(f"line {last}: expected {expected} matrix rows, found {len(body)}")
    rows = [_row(number, raw, n) for number, raw in body]
    A = RationalMatrix(rows[:m])
    B = RationalMatrix(rows[m:]) if kind == "bimatrix" else None
    return GameFile(kind, A, B)


def serialize_game(game) -> str:
    if isinstance(game, GameFile):
        kind, A, B = game.kind, game.A, game.B
    elif isinstance(game, SymmetricGame):
        kind, A, B = "symmetric", game.A, None
    elif isinstance(game, BimatrixGame):
        kind, A, B = "bimatrix", game.A, game.B
    else:
        kind, A, B = "symmetric", RationalMatrix(game), None
    out = [kind, f"{A.rows}" if kind == "symmetric" else f"{A.rows} {A.cols}"]
    for M in (A, B):
        if M is not None:
            out.extend(format_vector(r) for r in M)
    return "\n".join(out) + "\n"
