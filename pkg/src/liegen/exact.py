"""Exact rational linear algebra: dense matrices, linear spans, real-root isolation.

Everything here is exact.  Scalars are ``fractions.Fraction``; no floating
point enters any computation, so every sign test and every equality test is
a certificate rather than an approximation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

#: Default width of certified root brackets.
DEFAULT_WIDTH = Fraction(1, 2**40)


def _rat(x: Scalar) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Matrix:
    """Dense square matrix over exact rationals.

    Entry access is 1-based, ``M[i, j]``, matching the e_{i,j} convention
    for matrix units.  Instances are immutable.
    """

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        rs = tuple(tuple(_rat(x) for x in row) for row in rows)
        n = len(rs)
        if n == 0 or any(len(r) != n for r in rs):
            raise ValueError("matrix must be square and nonempty")
        self.n = n
        self.rows = rs
        self._hash: Optional[int] = None

    @classmethod
    def zero(cls, n: int) -> "Matrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, n: int, i: int, j: int, value: Scalar = 1) -> "Matrix":
        """The matrix unit e_{i,j} (1-based), optionally scaled."""
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"unit index ({i},{j}) out of range for n={n}")
        rows = [[0] * n for _ in range(n)]
        rows[i - 1][j - 1] = value
        return cls(rows)

    @classmethod
    def from_units(cls, n: int, terms: Iterable[tuple[int, int, Scalar]]) -> "Matrix":
        """Sum of scaled matrix units given as (i, j, coefficient), 1-based."""
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i, j, c in terms:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"unit index ({i},{j}) out of range for n={n}")
            rows[i - 1][j - 1] += _rat(c)
        return cls(rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i - 1][j - 1]

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_dim(other)
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_dim(other)
        return Matrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.rows])

    def __mul__(self, other: Union["Matrix", Scalar]) -> "Matrix":
        if isinstance(other, Matrix):
            self._check_dim(other)
            cols = tuple(zip(*other.rows))
            return Matrix(
                [
                    [sum(a * b for a, b in zip(row, col)) for col in cols]
                    for row in self.rows
                ]
            )
        return Matrix([[a * other for a in row] for row in self.rows])

    def __rmul__(self, other: Scalar) -> "Matrix":
        return Matrix([[other * a for a in row] for row in self.rows])

    def __pow__(self, k: int) -> "Matrix":
        if k < 0:
            raise ValueError("negative matrix powers not supported")
        result = Matrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matrix) and self.n == other.n and self.rows == other.rows
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self) -> str:
        return f"Matrix({[[str(x) for x in row] for row in self.rows]})"

    def _check_dim(self, other: "Matrix") -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def transpose(self) -> "Matrix":
        return Matrix(list(zip(*self.rows)))

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.n)), Fraction(0))

    def is_zero(self) -> bool:
        return all(all(a == 0 for a in row) for row in self.rows)

    def is_diagonal(self) -> bool:
        return all(
            self.rows[i][j] == 0
            for i in range(self.n)
            for j in range(self.n)
            if i != j
        )

    def nilpotency_index(self) -> Optional[int]:
        """Smallest k with M^k = 0, or None if M^n != 0."""
        power = Matrix.identity(self.n)
        for k in range(1, self.n + 1):
            power = power * self
            if power.is_zero():
                return k
        return None

    def is_nilpotent(self) -> bool:
        return self.nilpotency_index() is not None

    def det(self) -> Fraction:
        """Determinant by exact Gaussian elimination."""
        a = [list(row) for row in self.rows]
        n = self.n
        sign = 1
        det = Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                sign = -sign
            det *= a[col][col]
            inv = 1 / a[col][col]
            for r in range(col + 1, n):
                if a[r][col]:
                    f = a[r][col] * inv
                    a[r] = [x - f * y for x, y in zip(a[r], a[col])]
        return sign * det

    def apply(self, v: Sequence[Scalar]) -> tuple[Fraction, ...]:
        """Matrix times column vector."""
        if len(v) != self.n:
            raise ValueError("vector length mismatch")
        vv = [_rat(x) for x in v]
        return tuple(sum(a * b for a, b in zip(row, vv)) for row in self.rows)

    def flatten(self) -> tuple[Fraction, ...]:
        """Row-major flattening to a vector of length n^2."""
        return tuple(x for row in self.rows for x in row)


def bracket(a: Matrix, b: Matrix) -> Matrix:
    """Lie bracket [a, b] = ab - ba, exactly."""
    return a * b - b * a


def _primitive(v: list[int]) -> list[int]:
    g = 0
    for x in v:
        g = math.gcd(g, x)
        if g == 1:
            return v
    return v if g <= 1 else [x // g for x in v]


def _int_flatten(m: Matrix) -> list[int]:
    """Flatten row-major, clear denominators, remove content."""
    flat = m.flatten()
    den = math.lcm(*(x.denominator for x in flat)) if flat else 1
    return _primitive([int(x * den) for x in flat])


class SpanBasis:
    """Row-reduced basis of a subspace of n-by-n matrices.

    Matrices are flattened row-major to vectors of length n^2.  Rows are
    kept as primitive integer vectors in reduced row-echelon form with
    positive pivots, which makes the basis canonical for a given subspace
    and keeps all arithmetic in fast machine/bignum integers.
    """

    def __init__(self, n: int):
        self.n = n
        self._rows: list[list[int]] = []
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list[int]:
        return list(self._pivots)

    def _check(self, length: int) -> None:
        if length != self.n * self.n:
            raise ValueError(f"dimension mismatch: expected n={self.n}")

    def _reduce(self, v: list[int]) -> list[int]:
        for p, row in zip(self._pivots, self._rows):
            vp = v[p]
            if vp:
                rp = row[p]
                v = [a * rp - b * vp for a, b in zip(v, row)]
        return v

    def reduce(self, m: Matrix) -> list[int]:
        """Remainder of m after reduction against the basis (zero iff in span)."""
        v = _int_flatten(m)
        self._check(len(v))
        return _primitive(self._reduce(v))

    def contains(self, m: Matrix) -> bool:
        return all(x == 0 for x in self.reduce(m))

    def insert(self, m: Matrix) -> bool:
        return self.insert_flat(_int_flatten(m))

    def insert_flat(self, v: list[int]) -> bool:
        """Insert an integer row vector; returns True iff the rank grew."""
        self._check(len(v))
        v = self._reduce(v)
        piv = next((k for k, x in enumerate(v) if x), None)
        if piv is None:
            return False
        if v[piv] < 0:
            v = [-x for x in v]
        v = _primitive(v)
        # keep reduced echelon form: clear the new pivot column above
        for idx, row in enumerate(self._rows):
            rp = row[piv]
            if rp:
                self._rows[idx] = _primitive(
                    [a * v[piv] - b * rp for a, b in zip(row, v)]
                )
        pos = next(
            (k for k, p in enumerate(self._pivots) if p > piv), len(self._pivots)
        )
        self._rows.insert(pos, v)
        self._pivots.insert(pos, piv)
        return True

    def copy(self) -> "SpanBasis":
        dup = SpanBasis(self.n)
        dup._rows = [list(r) for r in self._rows]
        dup._pivots = list(self._pivots)
        return dup

    def matrices(self) -> list[Matrix]:
        """The basis rows, unflattened back to matrices."""
        n = self.n
        return [
            Matrix([row[i * n : (i + 1) * n] for i in range(n)]) for row in self._rows
        ]


def span_insert(basis: SpanBasis, m: Matrix) -> tuple[SpanBasis, bool]:
    """Non-mutating insert: returns (new basis, True iff the rank grew)."""
    out = basis.copy()
    grew = out.insert(m)
    return out, grew


class Polynomial:
    """Univariate polynomial with exact rational coefficients, ascending degree."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[Scalar]):
        cs = [_rat(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coefficients = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Polynomial) and self.coefficients == other.coefficients
        )

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coefficients])

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coefficients]})"

    def cleared(self) -> "Polynomial":
        """Scaled by the lcm of coefficient denominators: integer coefficients."""
        if self.is_zero():
            return self
        den = math.lcm(*(c.denominator for c in self.coefficients))
        return Polynomial([c * den for c in self.coefficients])

    def integer_coefficients(self) -> tuple[int, ...]:
        return tuple(int(c) for c in self.cleared().coefficients)


@dataclass(frozen=True)
class RootBracket:
    """Certified bracket [lo, hi] around a root: p(lo) <= 0 < p(hi)."""

    lo: Fraction
    hi: Fraction
    width_bound: Fraction

    def contains(self, x: Scalar) -> bool:
        return self.lo <= x <= self.hi


def _descartes_sign_changes(coeffs: Sequence[Fraction]) -> int:
    signs = [1 if c > 0 else -1 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def isolate_largest_positive_root(
    p: Polynomial, width: Fraction = DEFAULT_WIDTH
) -> Optional[RootBracket]:
    """Bracket the largest positive real root of p to the requested width.

    Requires a positive leading coefficient, so that p is eventually
    positive; the returned bracket satisfies p(lo) <= 0 < p(hi) and p stays
    positive above the Cauchy bound.  Returns None when Descartes' rule
    certifies p > 0 on (0, oo), or when no sign change is found even after
    grid refinement.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has no root bracket")
    cs = p.coefficients
    if p.degree == 0:
        if cs[0] > 0:
            return None
        raise ValueError("negative constant polynomial is never positive")
    if cs[-1] < 0:
        raise ValueError("leading coefficient must be positive")
    if _descartes_sign_changes(cs) == 0:
        return None  # all nonzero coefficients positive: p > 0 on (0, oo)

    lead = cs[-1]
    upper = Fraction(1) + max(abs(c / lead) for c in cs[:-1])
    if p(upper) <= 0:  # cannot happen for a correct Cauchy bound
        raise AssertionError("Cauchy bound violated")

    # coarse scan from the top down for the rightmost sign change
    grid = max(64, 8 * p.degree)
    lo = hi = None
    for _ in range(4):
        step = upper / grid
        for k in range(grid - 1, -1, -1):
            if p(k * step) <= 0:
                lo, hi = k * step, (k + 1) * step
                break
        if lo is not None:
            break
        grid *= 4
    if lo is None:
        return None

    while hi - lo > width:
        mid = (lo + hi) / 2
        if p(mid) <= 0:
            lo = mid
        else:
            hi = mid
    return RootBracket(lo=lo, hi=hi, width_bound=width)
