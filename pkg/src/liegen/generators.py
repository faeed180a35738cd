"""Explicit nilpotent generator pairs of simple matrix Lie algebras.

Builds the shift matrix x = sum e_{i,i+1} together with the various
"second" generators (corner e_{n,1}, double corner e_{n-1,1}+e_{n,2},
lower bidiagonal sum b_i e_{i+1,i}, and the 7x7 G2 pair), plus the two
distinctness criteria that certify generation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .exact import Matrix, Scalar, bracket, _rat

FAMILY_CORNER = "corner"
FAMILY_DOUBLE_CORNER = "double_corner"
FAMILY_LOWER = "lower_bidiagonal"
FAMILY_G2 = "g2_7x7"


@dataclass(frozen=True)
class GeneratorPair:
    """A pair of nilpotent matrices generating a Lie algebra."""

    n: int
    first: Matrix
    second: Matrix
    family: str
    b: Optional[tuple[Fraction, ...]] = None

    def __post_init__(self) -> None:
        for m in (self.first, self.second):
            if m.n != self.n:
                raise ValueError("generator dimension mismatch")
            if not m.is_nilpotent():
                raise ValueError("generator is not nilpotent")


def shift_matrix(n: int) -> Matrix:
    """The upper shift x = e_{1,2} + e_{2,3} + ... + e_{n-1,n}."""
    return Matrix.from_units(n, [(i, i + 1, 1) for i in range(1, n)])


def shift_pair(n: int, family: str = FAMILY_CORNER) -> GeneratorPair:
    """Shift x with corner y = e_{n,1}, or double corner y = e_{n-1,1} + e_{n,2}."""
    if family == FAMILY_CORNER:
        if n < 3:
            raise ValueError("corner pair requires n >= 3")
        y = Matrix.unit(n, n, 1)
    elif family == FAMILY_DOUBLE_CORNER:
        if n < 4:
            raise ValueError("double corner pair requires n >= 4")
        y = Matrix.from_units(n, [(n - 1, 1, 1), (n, 2, 1)])
    else:
        raise ValueError(f"unknown shift family {family!r}")
    return GeneratorPair(n=n, first=shift_matrix(n), second=y, family=family)


def lower_pair(b: Sequence[Scalar]) -> GeneratorPair:
    """Shift x with lower bidiagonal z = sum b_i e_{i+1,i}; all b_i nonzero."""
    bs = tuple(_rat(x) for x in b)
    if any(x == 0 for x in bs):
        raise ValueError("all b_i must be nonzero")
    n = len(bs) + 1
    if n < 3:
        raise ValueError("lower pair requires at least two b entries")
    z = Matrix.from_units(n, [(i + 1, i, bs[i - 1]) for i in range(1, n)])
    return GeneratorPair(n=n, first=shift_matrix(n), second=z, family=FAMILY_LOWER, b=bs)


def doubling_bvector(n: int, size_convention: str = "matrix") -> tuple[Fraction, ...]:
    """The b-vector with entries b_i = 2^{n-1} + ... + 2^{n-i}.

    ``size_convention`` picks the meaning of the exponent base: "matrix"
    uses the matrix size n (so n=4 gives (8, 12, 14)), "rank" uses the
    rank n-1 instead, halving every entry.
    """
    if n < 3:
        raise ValueError("doubling b-vector requires n >= 3")
    if size_convention == "matrix":
        base = n
    elif size_convention == "rank":
        base = n - 1
    else:
        raise ValueError(f"unknown size convention {size_convention!r}")
    return tuple(
        Fraction(sum(2 ** (base - j) for j in range(1, i + 1))) for i in range(1, n)
    )


def g2_pieces() -> tuple[Matrix, Matrix, Matrix, Matrix]:
    """The four 7x7 root-vector matrices (x1, x2, y1, y2) of the G2 realization."""
    x1 = Matrix.from_units(7, [(2, 3, 1), (5, 6, 1)])
    y1 = Matrix.from_units(7, [(3, 2, 1), (6, 5, 1)])
    x2 = Matrix.from_units(7, [(1, 2, 1), (3, 4, 1), (4, 5, 1), (6, 7, 1)])
    y2 = Matrix.from_units(7, [(2, 1, 1), (4, 3, 2), (5, 4, 2), (7, 6, 1)])
    return x1, x2, y1, y2


def g2_pair() -> GeneratorPair:
    """The G2 pair: x = x1 + x2 (the full shift) and z = -y1 + y2."""
    x1, x2, y1, y2 = g2_pieces()
    return GeneratorPair(n=7, first=x1 + x2, second=-y1 + y2, family=FAMILY_G2)


#: b-vector of the G2 second generator z, read off its subdiagonal.
G2_LOWER_B = (
    Fraction(1),
    Fraction(-1),
    Fraction(2),
    Fraction(2),
    Fraction(-1),
    Fraction(1),
)

#: Cartan matrix of type G2 in the ordering used by g2_canonical.
G2_CARTAN = ((2, -3), (-1, 2))


@dataclass(frozen=True)
class CanonicalGenerators:
    """Canonical generator triples (x_i, y_i, h_i) with their Cartan matrix."""

    rank: int
    x_list: tuple[Matrix, ...]
    y_list: tuple[Matrix, ...]
    h_list: tuple[Matrix, ...]
    cartan: tuple[tuple[int, ...], ...]

    def relation_failures(self) -> list[str]:
        """All canonical relations that fail to hold exactly (empty if none)."""
        bad = []
        ell = self.rank
        c = self.cartan
        n = self.x_list[0].n
        zero = Matrix.zero(n)
        for i in range(ell):
            for j in range(ell):
                if bracket(self.h_list[i], self.h_list[j]) != zero:
                    bad.append(f"[h{i+1},h{j+1}] != 0")
                if bracket(self.h_list[i], self.x_list[j]) != c[j][i] * self.x_list[j]:
                    bad.append(f"[h{i+1},x{j+1}] != C({j+1},{i+1}) x{j+1}")
                if bracket(self.h_list[i], self.y_list[j]) != -c[j][i] * self.y_list[j]:
                    bad.append(f"[h{i+1},y{j+1}] != -C({j+1},{i+1}) y{j+1}")
                expected = self.h_list[i] if i == j else zero
                if bracket(self.x_list[i], self.y_list[j]) != expected:
                    bad.append(f"[x{i+1},y{j+1}] wrong")
        return bad

    def verify(self) -> None:
        bad = self.relation_failures()
        if bad:
            raise AssertionError("canonical relations violated: " + "; ".join(bad))


def g2_canonical() -> CanonicalGenerators:
    """Canonical generators of G2 inside sl(7), with relations verified."""
    x1, x2, y1, y2 = g2_pieces()
    gens = CanonicalGenerators(
        rank=2,
        x_list=(x1, x2),
        y_list=(y1, y2),
        h_list=(bracket(x1, y1), bracket(x2, y2)),
        cartan=G2_CARTAN,
    )
    gens.verify()
    return gens


def diagram_automorphism(a: Matrix) -> Matrix:
    """The order-2 automorphism e_{i,j} -> (-1)^{i-j+1} e_{n-j+1,n-i+1}."""
    n = a.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            c = a[i, j]
            if c:
                sign = -1 if (i - j) % 2 == 0 else 1
                rows[n - j][n - i] += sign * c
    return Matrix(rows)


@dataclass(frozen=True)
class CriterionResult:
    """Outcome of a distinctness criterion, with the values it inspected."""

    holds: bool
    values: tuple[Fraction, ...]


def _plus_minus_distinct(values: Sequence[Fraction]) -> bool:
    signed = set()
    for v in values:
        signed.add(v)
        signed.add(-v)
    return len(signed) == 2 * len(values)


def prop2_criterion(
    cartan: Union[Matrix, Sequence[Sequence[Scalar]]], b: Sequence[Scalar]
) -> CriterionResult:
    """Generation criterion for x = sum x_i, y = sum b_i y_i.

    Computes v = C b and holds iff the 2l values {+-v_i} are pairwise
    distinct (in particular no v_i is zero).
    """
    rows = cartan.rows if isinstance(cartan, Matrix) else [list(r) for r in cartan]
    ell = len(rows)
    if any(len(r) != ell for r in rows):
        raise ValueError("Cartan matrix must be square")
    if len(b) != ell:
        raise ValueError("b-vector length must match the Cartan rank")
    bs = [_rat(x) for x in b]
    if any(x == 0 for x in bs):
        raise ValueError("all b_i must be nonzero")
    v = tuple(sum(_rat(c) * x for c, x in zip(row, bs)) for row in rows)
    return CriterionResult(holds=_plus_minus_distinct(v), values=v)


def prop1_criterion(h: Matrix) -> CriterionResult:
    """sl(n) specialization: root values are consecutive diagonal differences."""
    if not h.is_diagonal():
        raise ValueError("h must be diagonal")
    if h.trace() != 0:
        raise ValueError("h must be traceless")
    diffs = tuple(h[i, i] - h[i + 1, i + 1] for i in range(1, h.n))
    return CriterionResult(holds=_plus_minus_distinct(diffs), values=diffs)


def type_a_cartan(ell: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of type A_l."""
    return tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(ell))
        for i in range(ell)
    )
