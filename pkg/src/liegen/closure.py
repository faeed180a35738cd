"""Lie subalgebra closure, dimension-based type classification, bracket identities."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .exact import Matrix, SpanBasis, bracket
from .generators import (
    FAMILY_CORNER,
    FAMILY_DOUBLE_CORNER,
    FAMILY_G2,
)


@dataclass(frozen=True)
class ClosureResult:
    """Bracket-closed span basis with its dimension and sweep count."""

    basis: SpanBasis
    dim: int
    rounds: int


def _int_matrix(m: Matrix) -> list[list[int]]:
    flat = m.flatten()
    den = math.lcm(*(x.denominator for x in flat))
    rows = [[int(x * den) for x in row] for row in m.rows]
    return _int_primitive(rows)


def _int_primitive(rows: list[list[int]]) -> list[list[int]]:
    g = 0
    for row in rows:
        for x in row:
            g = math.gcd(g, x)
            if g == 1:
                return rows
    return rows if g <= 1 else [[x // g for x in row] for row in rows]


def _int_bracket(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    at = list(zip(*a))
    bt = list(zip(*b))
    return [
        [
            sum(x * y for x, y in zip(ra, cb)) - sum(x * y for x, y in zip(rb, ca))
            for cb, ca in zip(bt, at)
        ]
        for ra, rb in zip(a, b)
    ]


def subalgebra_closure(seed: Sequence[Matrix]) -> ClosureResult:
    """Smallest Lie subalgebra of gl(n) containing the seed matrices.

    Full pairwise bracket sweeps over the current spanning set until a
    sweep adds nothing (that last sweep doubles as the closure check).
    Deterministic: seed order first, then discovery order.
    """
    if not seed:
        raise ValueError("seed must be nonempty")
    n = seed[0].n
    if any(m.n != n for m in seed):
        raise ValueError("seed matrices must share a dimension")
    basis = SpanBasis(n)
    spanning: list[list[list[int]]] = []
    for m in seed:
        if basis.insert(m):
            spanning.append(_int_matrix(m))

    full = n * n
    rounds = 0
    while basis.rank < full:
        rounds += 1
        added = False
        snapshot = list(spanning)
        for i in range(len(snapshot)):
            for j in range(i + 1, len(snapshot)):
                c = _int_bracket(snapshot[i], snapshot[j])
                flat = [x for row in c for x in row]
                if any(flat) and basis.insert_flat(flat):
                    spanning.append(_int_primitive(c))
                    added = True
        if not added:
            break
    return ClosureResult(basis=basis, dim=basis.rank, rounds=rounds)


@dataclass(frozen=True)
class TypeLabel:
    """Recognized simple type (or full matrix algebra / unrecognized)."""

    family: str  # "A" | "B" | "C" | "G2" | "full_matrix_algebra" | "unrecognized"
    rank: Optional[int]
    dim: int

    @property
    def name(self) -> str:
        if self.family in ("A", "B", "C"):
            return f"{self.family}{self.rank}"
        return self.family


def classify(n: int, result: ClosureResult) -> TypeLabel:
    """Type lookup by (matrix size, closure dimension).

    B and C share the dimension m(2m+1); n's parity disambiguates.  The
    G2 case is pinned to (n, dim) = (7, 14).
    """
    dim = result.dim
    if dim == n * n:
        return TypeLabel(family="full_matrix_algebra", rank=None, dim=dim)
    if dim == n * n - 1:
        return TypeLabel(family="A", rank=n - 1, dim=dim)
    if n == 7 and dim == 14:
        return TypeLabel(family="G2", rank=2, dim=dim)
    if n % 2 == 0:
        m = n // 2
        if dim == m * (2 * m + 1):
            return TypeLabel(family="C", rank=m, dim=dim)
    else:
        m = (n - 1) // 2
        if dim == m * (2 * m + 1):
            return TypeLabel(family="B", rank=m, dim=dim)
    return TypeLabel(family="unrecognized", rank=None, dim=dim)


def predicted_type(family: str, n: int) -> TypeLabel:
    """The type the generator pair is known to produce."""
    if family == FAMILY_CORNER:
        if n < 3:
            raise ValueError("corner family requires n >= 3")
        if n % 2 == 0:
            m = n // 2
            return TypeLabel(family="C", rank=m, dim=m * (2 * m + 1))
        return TypeLabel(family="A", rank=n - 1, dim=n * n - 1)
    if family == FAMILY_DOUBLE_CORNER:
        if n < 4:
            raise ValueError("double corner family requires n >= 4")
        if n % 2 == 0:
            return TypeLabel(family="A", rank=n - 1, dim=n * n - 1)
        if n == 7:
            return TypeLabel(family="G2", rank=2, dim=14)
        m = (n - 1) // 2
        return TypeLabel(family="B", rank=m, dim=m * (2 * m + 1))
    if family == FAMILY_G2:
        if n != 7:
            raise ValueError("the G2 family lives in dimension 7")
        return TypeLabel(family="G2", rank=2, dim=14)
    raise ValueError(f"unknown family {family!r}")


def c_shift(s: int, i: int) -> int:
    """C(s, i) = binom(s, i) - binom(s, i-1); zero outside -1 < i < s+2."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    if i < 0 or i > s + 1:
        return 0
    return math.comb(s, i) - (math.comb(s, i - 1) if i >= 1 else 0)


def iterated_bracket(x: Matrix, y: Matrix, s: int) -> Matrix:
    """The s-fold left bracket [x, [x, ... [x, y]]]; s = 0 gives y."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    cap = 4 * x.n
    result = y
    for step in range(s):
        if result.is_zero():
            return result
        if step >= cap:
            raise ValueError(
                f"iterated bracket not ad-nilpotent within {cap} steps"
            )
        result = bracket(x, result)
    return result


def closed_form_bracket(n: int, s: int, variant: str) -> Matrix:
    """Closed form of [x^s, y] for the shift x and the corner / double corner y."""
    if not 0 <= s <= 2 * n:
        raise ValueError("s out of range")
    terms = []
    if variant == FAMILY_CORNER:
        for i in range(max(0, s - n + 1), min(s, n - 1) + 1):
            coeff = (-1) ** i * math.comb(s, i)
            terms.append((n - s + i, i + 1, coeff))
    elif variant == FAMILY_DOUBLE_CORNER:
        for i in range(max(0, s - n + 2), min(s + 1, n - 1) + 1):
            coeff = (-1) ** i * c_shift(s, i)
            terms.append((n - s + i - 1, i + 1, coeff))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return Matrix.from_units(n, terms) if terms else Matrix.zero(n)
