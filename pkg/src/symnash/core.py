"""Exact rational numbers, matrices, strategies and games.

Every scalar in the library is a :class:`fractions.Fraction`, which is kept in
lowest terms with a positive denominator and raises ``ZeroDivisionError`` on
division by zero.  Matrices and strategies are immutable.
"""

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import DimensionMismatch, NotAMixedStrategy, ZeroVector

Rational = Fraction

DEFAULT_CAP = Fraction(1, 10)


def to_rational(value) -> Fraction:
    """Convert ints, Fractions and exact strings ("3", "-2/5", "0.25") to a Fraction.

    Floats are refused: they carry binary rounding the caller probably did not
    mean.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not payoffs")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def vector(values) -> tuple:
    return tuple(to_rational(v) for v in values)


def dot(u, v) -> Fraction:
    if len(u) != len(v):
        raise DimensionMismatch(f"dot product of lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def format_rational(q: Fraction) -> str:
    q = to_rational(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class RationalMatrix:
    """Dense immutable matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows):
        data = tuple(tuple(to_rational(v) for v in row) for row in rows)
        if not data:
            raise DimensionMismatch("matrix needs at least one row")
        width = len(data[0])
        if width == 0 or any(len(r) != width for r in data):
            raise DimensionMismatch("ragged or empty matrix rows")
        self.rows = len(data)
        self.cols = width
        self._data = data

    @classmethod
    def _wrap(cls, data):
        # trusted fast path: data is already a tuple of tuples of Fractions
        obj = cls.__new__(cls)
        obj.rows = len(data)
        obj.cols = len(data[0])
        obj._data = data
        return obj

    @classmethod
    def constant(cls, rows, cols, value=0):
        v = to_rational(value)
        return cls._wrap(tuple((v,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n):
        one, zero = Fraction(1), Fraction(0)
        return cls._wrap(tuple(tuple(one if i == j else zero for j in range(n))
                               for i in range(n)))

    @classmethod
    def diagonal(cls, values):
        vals = vector(values)
        zero = Fraction(0)
        n = len(vals)
        return cls._wrap(tuple(tuple(vals[i] if i == j else zero for j in range(n))
                               for i in range(n)))

    @classmethod
    def outer(cls, u, v):
        u, v = vector(u), vector(v)
        return cls._wrap(tuple(tuple(a * b for b in v) for a in u))

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def entries(self):
        """Row-major flat tuple of entries."""
        return tuple(v for row in self._data for v in row)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self._data[i][j]
        return self._data[idx]

    def row(self, i):
        return self._data[i]

    def col(self, j):
        return tuple(r[j] for r in self._data)

    def tolist(self):
        return [list(r) for r in self._data]

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return self.rows

    @property
    def T(self):
        return RationalMatrix._wrap(tuple(zip(*self._data)))

    def is_square(self):
        return self.rows == self.cols

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other):
        self._check_same_shape(other)
        return RationalMatrix._wrap(tuple(tuple(a + b for a, b in zip(r, s))
                                          for r, s in zip(self._data, other._data)))

    def __sub__(self, other):
        self._check_same_shape(other)
        return RationalMatrix._wrap(tuple(tuple(a - b for a, b in zip(r, s))
                                          for r, s in zip(self._data, other._data)))

    def __neg__(self):
        return RationalMatrix._wrap(tuple(tuple(-a for a in r) for r in self._data))

    def scale(self, factor):
        f = to_rational(factor)
        return RationalMatrix._wrap(tuple(tuple(f * a for a in r) for r in self._data))

    def __mul__(self, factor):
        return self.scale(factor)

    __rmul__ = __mul__

    def map(self, fn):
        return RationalMatrix._wrap(tuple(tuple(to_rational(fn(a)) for a in r)
                                          for r in self._data))

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.T._data
            return RationalMatrix._wrap(tuple(tuple(dot(r, c) for c in cols)
                                              for r in self._data))
        v = tuple(other)
        if len(v) != self.cols:
            raise DimensionMismatch(f"matrix with {self.cols} columns times vector of length {len(v)}")
        return tuple(dot(r, v) for r in self._data)

    def __rmatmul__(self, other):
        # row vector times matrix
        v = tuple(other)
        if len(v) != self.rows:
            raise DimensionMismatch(f"vector of length {len(v)} times matrix with {self.rows} rows")
        return tuple(dot(v, c) for c in self.T._data)

    def bilinear(self, u, v):
        """uᵀ M v."""
        return dot(u, self @ v)

    def min(self):
        return min(self.entries)

    def max(self):
        return max(self.entries)

    def is_zero(self):
        return all(a == 0 for a in self.entries)

    def __eq__(self, other):
        if isinstance(other, RationalMatrix):
            return self._data == other._data
        if isinstance(other, (list, tuple)):
            try:
                return self == RationalMatrix(other)
            except (DimensionMismatch, TypeError, ValueError):
                return False
        return NotImplemented

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(v) for v in r) for r in self._data)
        return f"RationalMatrix([{body}])"


def as_matrix(m) -> RationalMatrix:
    return m if isinstance(m, RationalMatrix) else RationalMatrix(m)


class MixedStrategy(tuple):
    """Probability vector of exact weights; nonnegative and summing to exactly 1."""

    def __new__(cls, weights):
        w = tuple(to_rational(v) for v in weights)
        if not w:
            raise NotAMixedStrategy("empty strategy")
        if any(v < 0 for v in w):
            raise NotAMixedStrategy(f"negative weight in {_fmt(w)}")
        if sum(w) != 1:
            raise NotAMixedStrategy(f"weights {_fmt(w)} sum to {sum(w)}, not 1")
        return super().__new__(cls, w)

    @classmethod
    def pure(cls, n, i):
        return cls(1 if j == i else 0 for j in range(n))

    @classmethod
    def uniform(cls, n, support=None):
        support = range(n) if support is None else set(support)
        k = len(support)
        return cls(Fraction(1, k) if j in support else 0 for j in range(n))

    @property
    def support(self):
        return tuple(i for i, v in enumerate(self) if v > 0)

    def __repr__(self):
        return f"MixedStrategy({_fmt(self)})"


def _fmt(values):
    return "(" + ", ".join(format_rational(v) for v in values) + ")"


@dataclass(frozen=True)
class BimatrixGame:
    A: RationalMatrix
    B: RationalMatrix

    def __post_init__(self):
        object.__setattr__(self, "A", as_matrix(self.A))
        object.__setattr__(self, "B", as_matrix(self.B))
        if self.A.shape != self.B.shape:
            raise DimensionMismatch(f"payoff matrices {self.A.shape} and {self.B.shape} differ")

    @property
    def m(self):
        return self.A.rows

    @property
    def n(self):
        return self.A.cols

    @property
    def shape(self):
        return self.A.shape


@dataclass(frozen=True)
class SymmetricGame:
    """Symmetric game (A, Aᵀ); only A is stored."""

    A: RationalMatrix

    def __post_init__(self):
        object.__setattr__(self, "A", as_matrix(self.A))
        if not self.A.is_square():
            raise DimensionMismatch(f"symmetric game needs a square matrix, got {self.A.shape}")

    @property
    def n(self):
        return self.A.rows

    def as_bimatrix(self) -> BimatrixGame:
        return BimatrixGame(self.A, self.A.T)


@dataclass(frozen=True)
class AffineTransformRecord:
    """Payoff map ``new = scale * old + shift`` applied to one matrix."""

    shift: Fraction
    scale: Fraction

    def __post_init__(self):
        if self.scale <= 0:
            raise ValueError("affine payoff transforms must have positive scale")

    def apply(self, value):
        return self.scale * to_rational(value) + self.shift

    def invert(self, value):
        return (to_rational(value) - self.shift) / self.scale


def eta(z) -> MixedStrategy:
    """Scale a nonnegative nonzero vector so that it sums to 1."""
    z = vector(z)
    if any(v < 0 for v in z):
        raise NotAMixedStrategy(f"eta needs a nonnegative vector, got {_fmt(z)}")
    total = sum(z)
    if total == 0:
        raise ZeroVector("cannot normalize the zero vector")
    return MixedStrategy(v / total for v in z)


def normalize_positive_small(M, cap=DEFAULT_CAP):
    """Affinely map the entries of ``M`` into ``[cap/2, cap]``.

    The minimum entry goes to ``cap/2`` and the maximum to ``cap``; a constant
    matrix becomes the constant ``cap/2``.  Returns the new matrix together
    with the :class:`AffineTransformRecord` describing the map.
    """
    M = as_matrix(M)
    cap = to_rational(cap)
    if cap <= 0:
        raise ValueError("cap must be positive")
    lo, hi = M.min(), M.max()
    if hi == lo:
        record = AffineTransformRecord(shift=cap / 2 - lo, scale=Fraction(1))
        return RationalMatrix.constant(M.rows, M.cols, cap / 2), record
    scale = cap / (2 * (hi - lo))
    shift = cap * (hi - 2 * lo) / (2 * (hi - lo))
    record = AffineTransformRecord(shift=shift, scale=scale)
    return M.map(record.apply), record


def solve_affine(rows, rhs):
    """Solve ``rows @ z = rhs`` exactly.

    Returns ``None`` when the system is inconsistent, otherwise
    ``(particular, basis)`` where every solution is ``particular`` plus a
    combination of the nullspace ``basis`` vectors (empty when unique).
    """
    n = len(rows[0]) if rows else 0
    aug = [list(vector(r)) + [to_rational(b)] for r, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        piv = aug[r][c]
        if piv != 1:
            aug[r] = [v / piv for v in aug[r]]
        pr = aug[r]
        for i in range(len(aug)):
            if i != r:
                f = aug[i][c]
                if f != 0:
                    aug[i] = [a - f * b for a, b in zip(aug[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    if any(row[-1] != 0 for row in aug[r:]):
        return None
    particular = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        particular[c] = aug[i][-1]
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -aug[i][f]
        basis.append(tuple(v))
    return tuple(particular), tuple(basis)


def solve_unique(rows, rhs):
    """Unique exact solution of a linear system, or ``None`` if there is none."""
    res = solve_affine(rows, rhs)
    if res is None or res[1]:
        return None
    return res[0]
