"""Ping-pong inequality polynomials, certified parameter bounds, certificates.

The dominance regions X1 (first coordinate strictly largest in absolute
value) and X2 (last coordinate strictly largest) support a ping-pong
argument: a(t)^m maps X2 into X1 once |t| clears a polynomial bound t0,
b(s)^m maps X1 into X2 for |s| > 2, and c(r)^m maps X1 into X2 once |r|
clears the bound r0 from a family of n-1 polynomials.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact import (
    DEFAULT_WIDTH,
    Matrix,
    Polynomial,
    RootBracket,
    Scalar,
    _rat,
    isolate_largest_positive_root,
)
from .closure import ClosureResult, TypeLabel, classify, predicted_type, subalgebra_closure
from .generators import (
    FAMILY_CORNER,
    FAMILY_G2,
    FAMILY_LOWER,
    G2_LOWER_B,
    GeneratorPair,
    g2_pair,
    lower_pair,
    shift_pair,
)
from .groups import exp_corner, exp_lower, exp_upper, lower_coefficient


@dataclass(frozen=True)
class Region:
    """Dominance region: X1 (first coordinate wins) or X2 (last coordinate wins)."""

    kind: str  # "X1" | "X2"
    n: int

    def __post_init__(self) -> None:
        if self.kind not in ("X1", "X2"):
            raise ValueError(f"unknown region kind {self.kind!r}")


def in_region(v: Sequence[Scalar], region: Region) -> bool:
    """Strict membership test with exact absolute-value comparisons."""
    if len(v) != region.n:
        raise ValueError("vector length mismatch")
    mags = [abs(_rat(x)) for x in v]
    top = 0 if region.kind == "X1" else len(mags) - 1
    return all(mags[top] > m for i, m in enumerate(mags) if i != top)


def t_inequality(n: int) -> Polynomial:
    """p(T) = T^{n-1}/(n-1)! - 2 sum_{i=1}^{n-1} T^{i-1}/(i-1)!.

    Positivity of p(|t|) is the condition for a(t)^m X2 in X1.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    coeffs = [Fraction(-2, math.factorial(i - 1)) for i in range(1, n)]
    coeffs.append(Fraction(1, math.factorial(n - 1)))
    return Polynomial(coeffs)


def r_inequalities(n: int, b: Sequence[Scalar]) -> list[Polynomial]:
    """The n-1 polynomials whose joint positivity at |r| gives c(r)^m X1 in X2.

    For each 1 <= j <= n-1 the polynomial is

        R^{n-1}/(n-1)! |c_{n-1,n}| - sum_{i=2}^n R^{n-i}/(n-i)! |c_{n-i,n}|
            - sum_{i=1}^j |c_{j-i,j}| R^{j-i}/(j-i)!

    stored with denominators cleared (integer coefficients, matching the
    displayed paper forms: no further division by the content).
    """
    bs = [_rat(x) for x in b]
    if any(x == 0 for x in bs):
        raise ValueError("all b_i must be nonzero")
    if len(bs) != n - 1:
        raise ValueError("b-vector length must be n - 1")

    lhs = [Fraction(0)] * n
    lhs[n - 1] = abs(lower_coefficient(bs, n, n - 1)) / math.factorial(n - 1)
    for i in range(2, n + 1):
        d = n - i
        lhs[d] -= abs(lower_coefficient(bs, n, d)) / math.factorial(d)

    polys = []
    for j in range(1, n):
        coeffs = list(lhs)
        for i in range(1, j + 1):
            d = j - i
            coeffs[d] -= abs(lower_coefficient(bs, j, d)) / math.factorial(d)
        polys.append(Polynomial(coeffs).cleared())
    return polys


@dataclass(frozen=True)
class PingPongBound:
    """Certified bound: every polynomial is positive at safe_value and beyond."""

    kind: str  # "t_bound" | "r_bound"
    polys: tuple[Polynomial, ...]
    bracket: Optional[RootBracket]
    safe_value: Fraction

    def __post_init__(self) -> None:
        for p in self.polys:
            if p(self.safe_value) <= 0 or p(self.safe_value + 1) <= 0:
                raise AssertionError("safe_value fails positivity check")
        if self.bracket is not None and self.bracket.hi > self.safe_value:
            raise AssertionError("bracket exceeds safe_value")


def _dyadic_above(x: Fraction) -> Fraction:
    up = Fraction(math.ceil(x * 1024), 1024)
    return up + Fraction(1, 1024) if up == x else up


def _bound_from_polys(kind: str, polys: Sequence[Polynomial], width: Fraction) -> PingPongBound:
    brackets = [isolate_largest_positive_root(p, width) for p in polys]
    real = [br for br in brackets if br is not None]
    if not real:
        return PingPongBound(kind=kind, polys=tuple(polys), bracket=None,
                             safe_value=Fraction(0))
    top = max(real, key=lambda br: br.hi)
    safe = _dyadic_above(top.hi)
    while any(p(safe) <= 0 for p in polys):
        safe += Fraction(1, 1024)
    return PingPongBound(kind=kind, polys=tuple(polys), bracket=top, safe_value=safe)


def compute_t0(n: int, width: Fraction = DEFAULT_WIDTH) -> PingPongBound:
    """Certified threshold for Lemma-a style inclusion a(t)^m X2 in X1."""
    return _bound_from_polys("t_bound", [t_inequality(n)], width)


def compute_r0(n: int, b: Sequence[Scalar], width: Fraction = DEFAULT_WIDTH) -> PingPongBound:
    """Certified threshold for the c(r)^m X1 in X2 inclusion."""
    return _bound_from_polys("r_bound", r_inequalities(n, b), width)


def s0() -> Fraction:
    """Threshold for b(s)^m X1 in X2: the constant 2."""
    return Fraction(2)


@dataclass
class SpotcheckReport:
    """Randomized exact check of a region inclusion at a certified parameter."""

    kind: str  # "a" | "b" | "c"
    n: int
    parameter: Fraction
    m_values: tuple[int, ...]
    samples: int
    seed: int
    violations: list[tuple]

    @property
    def clean(self) -> bool:
        return not self.violations


def pingpong_spotcheck(
    n: int,
    kind: str,
    parameter: Scalar,
    b: Optional[Sequence[Scalar]] = None,
    m_values: Sequence[int] = (-3, -2, -1, 1, 2, 3),
    samples: int = 200,
    seed: int = 0,
) -> SpotcheckReport:
    """Sample the source region and verify the target inclusion exactly.

    Refuses parameters at or below the certified bound, where the
    inclusion carries no guarantee.  Any violation at a certified
    parameter indicates a bug.
    """
    parameter = _rat(parameter)
    if any(m == 0 for m in m_values):
        raise ValueError("m = 0 is excluded")
    if kind == "a":
        bound = compute_t0(n).safe_value
        source, target = Region("X2", n), Region("X1", n)
        powered = lambda m: exp_upper(m * parameter, n).matrix
    elif kind == "b":
        bound = s0()
        source, target = Region("X1", n), Region("X2", n)
        powered = lambda m: exp_corner(m * parameter, n).matrix
    elif kind == "c":
        if b is None:
            raise ValueError("kind 'c' needs the b-vector")
        bound = compute_r0(n, b).safe_value
        source, target = Region("X1", n), Region("X2", n)
        powered = lambda m: exp_lower(m * parameter, b).matrix
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    if abs(parameter) <= bound:
        raise ValueError(
            f"parameter {parameter} does not exceed the certified bound {bound}"
        )

    rng = random.Random(seed)
    mats = {m: powered(m) for m in m_values}
    violations: list[tuple] = []
    for _ in range(samples):
        while True:
            v = tuple(Fraction(rng.randint(-100, 100)) for _ in range(n))
            if in_region(v, source):
                break
        for m in m_values:
            image = mats[m].apply(v)
            if not in_region(image, target):
                violations.append((v, m, image))
    return SpotcheckReport(
        kind=kind, n=n, parameter=parameter, m_values=tuple(m_values),
        samples=samples, seed=seed, violations=violations,
    )


CONCLUSION_FREE_DENSE = "free_dense_certified"
CONCLUSION_DENSE_ONLY = "dense_only"
CONCLUSION_INSUFFICIENT = "insufficient"


@dataclass
class Certificate:
    """Joint density (Lie algebra closure) and freeness (ping-pong) certificate."""

    n: int
    family: str
    parameters: dict
    pair: GeneratorPair
    closure: ClosureResult
    type_label: TypeLabel
    target: TypeLabel
    t_bound: Optional[PingPongBound]
    second_bound_kind: str  # "s" | "r"
    second_bound: Optional[PingPongBound]  # None when the threshold is s0 = 2
    conclusion: str


def certify_free_dense(
    n: int,
    family: str,
    t: Scalar,
    s: Optional[Scalar] = None,
    r: Optional[Scalar] = None,
    b: Optional[Sequence[Scalar]] = None,
    width: Fraction = DEFAULT_WIDTH,
) -> Certificate:
    """Certify that <exp(t x), exp(s y)> (or c(r)) is free and Zariski dense.

    Density comes from the exact subalgebra closure of the generator pair;
    freeness from the parameters clearing the certified ping-pong bounds.
    ``insufficient`` is a valid outcome, never an error.
    """
    t = _rat(t)
    params: dict = {"t": t}
    if family == FAMILY_CORNER:
        if s is None:
            raise ValueError("corner family needs s")
        pair = shift_pair(n, FAMILY_CORNER)
        second_kind, second_val, second_bound = "s", _rat(s), None
        second_threshold = s0()
        params["s"] = second_val
    elif family == FAMILY_LOWER:
        if r is None or b is None:
            raise ValueError("lower family needs r and the b-vector")
        pair = lower_pair(b)
        if pair.n != n:
            raise ValueError("b-vector length must be n - 1")
        second_kind, second_val = "r", _rat(r)
        second_bound = compute_r0(n, b, width)
        second_threshold = second_bound.safe_value
        params["r"] = second_val
        params["b"] = pair.b
    elif family == FAMILY_G2:
        if n != 7:
            raise ValueError("the G2 family lives in dimension 7")
        if r is None:
            raise ValueError("G2 family needs r")
        pair = g2_pair()
        second_kind, second_val = "r", _rat(r)
        second_bound = compute_r0(7, G2_LOWER_B, width)
        second_threshold = second_bound.safe_value
        params["r"] = second_val
    else:
        raise ValueError(f"family {family!r} has no certified ping-pong bounds")

    closure = subalgebra_closure([pair.first, pair.second])
    label = classify(n, closure)
    if family == FAMILY_LOWER:
        target = TypeLabel(family="A", rank=n - 1, dim=n * n - 1)
    else:
        target = predicted_type(family, n)

    t_bound = compute_t0(n, width)
    density_ok = closure.dim == target.dim and t != 0 and second_val != 0
    freeness_ok = abs(t) > t_bound.safe_value and abs(second_val) > second_threshold

    if density_ok and freeness_ok:
        conclusion = CONCLUSION_FREE_DENSE
    elif density_ok:
        conclusion = CONCLUSION_DENSE_ONLY
    else:
        conclusion = CONCLUSION_INSUFFICIENT

    return Certificate(
        n=n, family=family, parameters=params, pair=pair,
        closure=closure, type_label=label, target=target,
        t_bound=t_bound, second_bound_kind=second_kind,
        second_bound=second_bound, conclusion=conclusion,
    )
