"""Exact exponentials of the nilpotent generators, word evaluation, freeness scans.

a(t) = exp(t x) for the shift x, b(s) = exp(s e_{n,1}), c(r) = exp(r z)
for lower bidiagonal z; all are triangular with polynomial entries, so
exponentiation is a finite exact sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .exact import Matrix, Scalar, _rat
from .generators import diagram_automorphism


@dataclass(frozen=True)
class GroupElement:
    """A group matrix, optionally remembering the word that produced it."""

    matrix: Matrix
    provenance: Optional["Word"] = None

    def det(self) -> Fraction:
        return self.matrix.det()


def exp_upper(t: Scalar, n: int) -> GroupElement:
    """a(t) = exp(t x): unipotent upper triangular, entry (i,j) = t^{j-i}/(j-i)!."""
    if n < 2:
        raise ValueError("n must be at least 2")
    t = _rat(t)
    rows = [
        [
            t ** (j - i) / math.factorial(j - i) if j >= i else Fraction(0)
            for j in range(n)
        ]
        for i in range(n)
    ]
    return GroupElement(Matrix(rows))


def exp_corner(s: Scalar, n: int) -> GroupElement:
    """b(s) = exp(s e_{n,1}) = identity plus s in the lower-left corner."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return GroupElement(Matrix.identity(n) + Matrix.unit(n, n, 1, _rat(s)))


def lower_coefficient(b: Sequence[Fraction], j: int, d: int) -> Fraction:
    """c_{d,j} = b_{j-1} b_{j-2} ... b_{j-d} (1 for d = 0)."""
    out = Fraction(1)
    for k in range(1, d + 1):
        out *= b[j - k - 1]
    return out


def exp_lower(r: Scalar, b: Sequence[Scalar]) -> GroupElement:
    """c(r) = exp(r z) for z = sum b_i e_{i+1,i}; entries from the product rule."""
    bs = [_rat(x) for x in b]
    if any(x == 0 for x in bs):
        raise ValueError("all b_i must be nonzero")
    n = len(bs) + 1
    r = _rat(r)
    rows = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for j in range(2, n + 1):
        for i in range(1, j):
            d = j - i
            rows[j - 1][i - 1] = (
                lower_coefficient(bs, j, d) * r**d / math.factorial(d)
            )
    return GroupElement(Matrix(rows))


def exp_nilpotent(m: Matrix, t: Scalar) -> GroupElement:
    """exp(t m) for nilpotent m, by the (finite) exponential series."""
    idx = m.nilpotency_index()
    if idx is None:
        raise ValueError("matrix is not nilpotent")
    t = _rat(t)
    total = Matrix.identity(m.n)
    power = Matrix.identity(m.n)
    for k in range(1, idx):
        power = power * m
        total = total + (t**k / math.factorial(k)) * power
    return GroupElement(total)


@dataclass(frozen=True)
class Word:
    """Reduced alternating word in two generator symbols "A" and "B"."""

    syllables: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        prev = None
        for gen, exp in self.syllables:
            if gen not in ("A", "B"):
                raise ValueError(f"unknown generator symbol {gen!r}")
            if exp == 0:
                raise ValueError("zero exponent in word")
            if gen == prev:
                raise ValueError("word is not reduced: repeated generator")
            prev = gen

    def __len__(self) -> int:
        return len(self.syllables)

    def __str__(self) -> str:
        return " ".join(f"{g}^{e}" for g, e in self.syllables) or "(empty)"


GeneratorMap = Callable[[int], Matrix]


def one_parameter_power(gen: Callable[[Scalar], GroupElement], param: Scalar) -> GeneratorMap:
    """Power map m -> gen(m * param) for a one-parameter subgroup."""
    return lambda m: gen(m * _rat(param)).matrix


def generic_power(g: Matrix) -> GeneratorMap:
    """Power map m -> g^m by binary exponentiation (negative m via inverse)."""
    inv: Optional[Matrix] = None

    def powered(m: int) -> Matrix:
        nonlocal inv
        if m >= 0:
            return g**m
        if inv is None:
            inv = _invert_unimodular(g)
        return inv ** (-m)

    return powered


def _invert_unimodular(g: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination."""
    n = g.n
    a = [list(row) + [Fraction(1) if i == k else Fraction(0) for k in range(n)]
         for i, row in enumerate(g.rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        f = a[col][col]
        a[col] = [x / f for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                fr = a[r][col]
                a[r] = [x - fr * y for x, y in zip(a[r], a[col])]
    return Matrix([row[n:] for row in a])


def word_eval(word: Word, gen_a: GeneratorMap, gen_b: GeneratorMap) -> Matrix:
    """Product of the word's syllables, left to right."""
    maps = {"A": gen_a, "B": gen_b}
    result: Optional[Matrix] = None
    for gen, exp in word.syllables:
        m = maps[gen](exp)
        result = m if result is None else result * m
    if result is None:
        probe = gen_a(1)
        return Matrix.identity(probe.n)
    return result


@dataclass
class ScanReport:
    """Result of an exhaustive identity scan over reduced words."""

    n: int
    max_syllables: int
    max_exponent: int
    words_checked: int
    collisions: list[Word]
    parameters: dict = field(default_factory=dict)

    @property
    def clean(self) -> bool:
        return not self.collisions


def freeness_scan(
    n: int,
    t: Scalar,
    s: Optional[Scalar] = None,
    r: Optional[Scalar] = None,
    b: Optional[Sequence[Scalar]] = None,
    max_syllables: int = 4,
    max_exponent: int = 2,
) -> ScanReport:
    """Evaluate every reduced word up to the given size; collect identity hits.

    The A generator is a(t); the B generator is b(s) when s is given, or
    c(r) with the supplied b-vector when r is given.  An empty collision
    list is freeness evidence (a necessary condition only); any collision
    disproves freeness at these parameters.
    """
    if max_syllables < 1 or max_exponent < 1:
        raise ValueError("max_syllables and max_exponent must be positive")
    if (s is None) == (r is None):
        raise ValueError("give exactly one of s (corner) or r (lower)")
    gen_a = one_parameter_power(lambda u: exp_upper(u, n), t)
    params: dict = {"t": _rat(t)}
    if s is not None:
        gen_b = one_parameter_power(lambda u: exp_corner(u, n), s)
        params["s"] = _rat(s)
    else:
        assert b is not None, "lower scan needs the b-vector"
        if len(b) != n - 1:
            raise ValueError("b-vector length must be n - 1")
        gen_b = one_parameter_power(lambda u: exp_lower(u, b), r)
        params["r"] = _rat(r)
        params["b"] = tuple(_rat(x) for x in b)

    exponents = [e for e in range(-max_exponent, max_exponent + 1) if e != 0]
    syllable_mats = {
        ("A", e): gen_a(e) for e in exponents
    } | {("B", e): gen_b(e) for e in exponents}
    identity = Matrix.identity(n)

    collisions: list[Word] = []
    checked = 0

    def descend(prod: Matrix, gen: str, remaining: int, prefix: list) -> None:
        nonlocal checked
        nxt = "B" if gen == "A" else "A"
        for e in exponents:
            checked += 1
            here = prod * syllable_mats[(gen, e)]
            syls = prefix + [(gen, e)]
            if here == identity:
                collisions.append(Word(tuple(syls)))
            if remaining > 1:
                descend(here, nxt, remaining - 1, syls)

    for start in ("A", "B"):
        descend(identity, start, max_syllables, [])

    return ScanReport(
        n=n,
        max_syllables=max_syllables,
        max_exponent=max_exponent,
        words_checked=checked,
        collisions=collisions,
        parameters=params,
    )


@dataclass(frozen=True)
class ThinPair:
    """Integer generator pair a((n-1)! q), b(s), with a certification flag."""

    n: int
    t: int
    s: int
    first: Matrix
    second: Matrix
    certified: bool
    warning: Optional[str]


def thin_pair(n: int, q: int, s: int) -> ThinPair:
    """Integer pair a((n-1)! q), b(s) in SL(n, Z).

    Certified (free, hence thin by the congruence subgroup property) when
    |t| clears the ping-pong bound and |s| > 2; otherwise emitted with a
    warning flag.
    """
    if n <= 2:
        raise ValueError("thin pairs require n > 2")
    if q == 0:
        raise ValueError("q must be nonzero")
    from .pingpong import compute_t0, s0

    t = math.factorial(n - 1) * q
    a = exp_upper(t, n).matrix
    bmat = exp_corner(s, n).matrix
    assert all(x.denominator == 1 for x in a.flatten())
    t_safe = compute_t0(n).safe_value
    warning = None
    if abs(t) <= t_safe:
        warning = f"|t| = {abs(t)} does not exceed the certified bound {t_safe}"
    elif abs(s) <= s0():
        warning = f"|s| = {abs(s)} does not exceed s0 = {s0()}"
    return ThinPair(
        n=n, t=t, s=s, first=a, second=bmat,
        certified=warning is None, warning=warning,
    )


def thin_lower_pair(q: int, r: int) -> tuple[ThinPair, Sequence[Fraction]]:
    """Integer pair a(6q), c(r) in SL(4, Z) for the doubling b-vector.

    Only the n = 4 instance with t in 6Z is emitted; certification requires
    |t| and |r| to clear the computed bounds.
    """
    from .generators import doubling_bvector
    from .pingpong import compute_r0, compute_t0

    if q == 0:
        raise ValueError("q must be nonzero")
    b = doubling_bvector(4)
    t = 6 * q
    a = exp_upper(t, 4).matrix
    c = exp_lower(r, b).matrix
    warning = None
    if abs(t) <= compute_t0(4).safe_value:
        warning = f"|t| = {abs(t)} does not exceed the certified t bound"
    elif abs(r) <= compute_r0(4, b).safe_value:
        warning = f"|r| = {abs(r)} does not exceed the certified r bound"
    pair = ThinPair(
        n=4, t=t, s=r, first=a, second=c,
        certified=warning is None, warning=warning,
    )
    return pair, b


@dataclass(frozen=True)
class FormMatrix:
    """Anti-diagonal sign matrix J with phi(z) = -J z^T J^{-1}."""

    n: int
    j: Matrix


def form_matrix(n: int) -> FormMatrix:
    """J = sum_i (-1)^i e_{i, n+1-i}: alternating for n even, symmetric for n odd."""
    if n < 2:
        raise ValueError("n must be at least 2")
    j = Matrix.from_units(n, [(i, n + 1 - i, (-1) ** i) for i in range(1, n + 1)])
    # frozen sign convention: J realizes the diagram automorphism
    assert diagram_automorphism(Matrix.unit(n, 1, 2)) == _conjugate(Matrix.unit(n, 1, 2), j)
    return FormMatrix(n=n, j=j)


def _conjugate(z: Matrix, j: Matrix) -> Matrix:
    jt = j * j
    sigma = jt[1, 1]  # J^2 = sigma * identity
    jinv = sigma * j
    return -1 * (j * z.transpose() * jinv)


def check_form(g: Matrix, form: FormMatrix) -> bool:
    """Whether g preserves the bilinear form: g^T J g = J."""
    return g.transpose() * form.j * g == form.j
