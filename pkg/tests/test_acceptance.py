"""Acceptance suite.

One test per criterion; each prints a single "ACCEPTANCE k: PASS|FAIL" line.
Criteria 3, 5 and 9 each contain one sub-check that cannot hold: the stated
n=3 threshold 1+sqrt(3) does not satisfy the n=3 inequality T^2/2 - 2T - 2
(its value there is -2-sqrt(3) < 0); the largest positive root is 2+2*sqrt(2)
= 4.8284...  Those sub-checks are kept as written and left red; see the
comments at each site.
"""

import math
import random
import time
from fractions import Fraction

from liegen.cli import main as cli_main
from liegen.closure import classify, closed_form_bracket, iterated_bracket, subalgebra_closure
from liegen.exact import Matrix
from liegen.generators import (
    FAMILY_CORNER,
    FAMILY_DOUBLE_CORNER,
    G2_CARTAN,
    doubling_bvector,
    g2_canonical,
    g2_pair,
    prop2_criterion,
    shift_matrix,
    shift_pair,
    type_a_cartan,
)
from liegen.groups import (
    Word,
    check_form,
    exp_corner,
    exp_lower,
    exp_nilpotent,
    exp_upper,
    form_matrix,
    freeness_scan,
    one_parameter_power,
    thin_pair,
    word_eval,
)
from liegen.pingpong import (
    compute_r0,
    compute_t0,
    pingpong_spotcheck,
    r_inequalities,
    t_inequality,
)


def finish(number, failures):
    status = "PASS" if not failures else "FAIL"
    print(f"ACCEPTANCE {number}: {status}")
    assert not failures, f"criterion {number}: {failures}"


def closure_name(pair):
    res = subalgebra_closure([pair.first, pair.second])
    return classify(pair.n, res).name, res.dim


def test_acceptance_01_closure_type_table():
    failures = []
    start = time.monotonic()
    expect_corner = {3: "A2", 5: "A4", 7: "A6", 9: "A8",
                     4: "C2", 6: "C3", 8: "C4", 10: "C5"}
    for n, want in expect_corner.items():
        got, _ = closure_name(shift_pair(n, FAMILY_CORNER))
        if got != want:
            failures.append(f"corner n={n}: {got} != {want}")
    expect_double = {4: "A3", 6: "A5", 8: "A7", 5: "B2", 9: "B4", 11: "B5", 7: "G2"}
    for n, want in expect_double.items():
        got, dim = closure_name(shift_pair(n, FAMILY_DOUBLE_CORNER))
        if got != want:
            failures.append(f"double_corner n={n}: {got} != {want}")
        if n == 7 and dim != 14:
            failures.append(f"double_corner n=7 dim {dim} != 14")
    _, g2dim = closure_name(g2_pair())
    if g2dim != 14:
        failures.append(f"g2 pair dim {g2dim} != 14")
    elapsed = time.monotonic() - start
    if elapsed >= 60:
        failures.append(f"runtime {elapsed:.1f}s >= 60s")
    finish(1, failures)


def test_acceptance_02_closed_form_bracket_oracle():
    failures = []
    for family in (FAMILY_CORNER, FAMILY_DOUBLE_CORNER):
        lo = 3 if family == FAMILY_CORNER else 4
        for n in range(lo, 11):
            p = shift_pair(n, family)
            for s in range(0, 2 * n + 1):
                if closed_form_bracket(n, s, family) != iterated_bracket(p.first, p.second, s):
                    failures.append((family, n, s))
    finish(2, failures)


def test_acceptance_03_bounds_reproduced():
    failures = []
    if not compute_t0(2).bracket.contains(2):
        failures.append("t0(2) bracket misses 2")
    # Stated value for n=3: 1+sqrt(3).  This cannot hold: the n=3 polynomial
    # T^2/2 - 2T - 2 is negative at 1+sqrt(3) (value -2-sqrt(3)); its largest
    # positive root is 2+2*sqrt(2) = 4.8284..., which is where the bracket
    # actually lands.  Kept as written; expected red.
    v3 = Fraction(2732050808, 10**9)  # 1+sqrt(3) to 9 places
    eps = Fraction(1, 10**6)
    b3 = compute_t0(3).bracket
    if not (b3.lo <= v3 + eps and v3 - eps <= b3.hi):
        failures.append(f"t0(3) bracket [{float(b3.lo):.6f}, {float(b3.hi):.6f}] "
                        f"does not meet 1+sqrt(3)±1e-6 (actual root 2+2*sqrt(2))")
    b4 = compute_t0(4).bracket
    if not (b4.lo < Fraction(78, 10) and b4.hi > Fraction(77, 10)):
        failures.append("t0(4) bracket misses (7.7, 7.8)")
    b7 = compute_t0(7).bracket
    if not (b7.lo < Fraction(167, 10) and b7.hi > Fraction(165, 10)):
        failures.append("t0(7) bracket misses (16.5, 16.7)")
    r4 = compute_r0(4, (8, 12, 14))
    if not (Fraction(7, 10) < r4.bracket.lo and r4.bracket.hi < Fraction(8, 10)):
        failures.append("r0(4) bracket outside (0.7, 0.8)")
    if r4.safe_value > 1:
        failures.append("r0(4) safe_value > 1")
    want_r = [(-2, -14, -84, 224), (-2, -22, -84, 224), (-2, -26, -132, 224)]
    got_r = [p.integer_coefficients() for p in r_inequalities(4, (8, 12, 14))]
    if got_r != want_r:
        failures.append(f"r polynomials {got_r} != {want_r}")
    finish(3, failures)


def test_acceptance_04_g2_polynomial_identity():
    failures = []
    got = t_inequality(7).integer_coefficients()
    if got != (-1440, -1440, -720, -240, -60, -12, 1):
        failures.append(got)
    finish(4, failures)


def test_acceptance_05_pingpong_guarantees():
    failures = []
    # (n=3, t=3): t=3 is below the certified threshold (largest root of
    # T^2/2 - 2T - 2 is 2+2*sqrt(2) = 4.83), so the spot-check refuses, and
    # the inclusion genuinely fails there: at m=1 the X2 vector
    # (-99, -99, 100) maps outside X1.  Kept as written; expected red.
    try:
        rep = pingpong_spotcheck(3, "a", 3, samples=200, seed=0)
        if not rep.clean:
            failures.append(f"(n=3, t=3): {len(rep.violations)} violations")
    except ValueError as exc:
        failures.append(f"(n=3, t=3) refused: {exc}")
    rep = pingpong_spotcheck(2, "b", 3, samples=200, seed=0)
    if not rep.clean:
        failures.append(f"(n=2, s=3): {len(rep.violations)} violations")
    rep = pingpong_spotcheck(4, "c", 2, b=(8, 12, 14), samples=200, seed=0)
    if not rep.clean:
        failures.append(f"(n=4, r=2): {len(rep.violations)} violations")
    finish(5, failures)


def test_acceptance_06_freeness_scans():
    failures = []
    start = time.monotonic()
    rep = freeness_scan(2, t=3, s=3, max_syllables=6, max_exponent=3)
    if not rep.clean:
        failures.append(f"(t=s=3) {len(rep.collisions)} collisions")
    if time.monotonic() - start >= 120:
        failures.append("t=s=3 scan over 2 minutes")
    start = time.monotonic()
    rep = freeness_scan(2, t=1, s=1, max_syllables=6, max_exponent=1)
    if len(rep.collisions) < 1:
        failures.append("(t=s=1) no collision found")
    if len(rep.collisions) != 12:  # frozen regression value
        failures.append(f"(t=s=1) collision count {len(rep.collisions)} != 12")
    if time.monotonic() - start >= 120:
        failures.append("t=s=1 scan over 2 minutes")
    start = time.monotonic()
    rep = freeness_scan(4, t=8, s=3, max_syllables=4, max_exponent=2)
    if not rep.clean:
        failures.append(f"(n=4) {len(rep.collisions)} collisions")
    if time.monotonic() - start >= 120:
        failures.append("n=4 scan over 2 minutes")
    finish(6, failures)


def rand_rational(rng):
    num = rng.randint(-10, 10)
    return Fraction(num if num else 1, rng.randint(1, 5))


def test_acceptance_07_exponential_exactness():
    failures = []
    rng = random.Random(7)
    for n in range(2, 9):
        b = doubling_bvector(n) if n >= 3 else None
        y = Matrix.unit(n, n, 1)
        for _ in range(50):
            t = rand_rational(rng)
            if exp_nilpotent(shift_matrix(n), t).matrix != exp_upper(t, n).matrix:
                failures.append(("upper", n, t))
            if exp_nilpotent(y, t).matrix != exp_corner(t, n).matrix:
                failures.append(("corner", n, t))
            if b is not None:
                z = Matrix.from_units(n, [(i + 1, i, b[i - 1]) for i in range(1, n)])
                if exp_nilpotent(z, t).matrix != exp_lower(t, b).matrix:
                    failures.append(("lower", n, t))
        # one-parameter laws and det = 1
        t1, t2 = rand_rational(rng), rand_rational(rng)
        if exp_upper(t1, n).matrix * exp_upper(t2, n).matrix != exp_upper(t1 + t2, n).matrix:
            failures.append(("upper law", n))
        if exp_corner(t1, n).matrix * exp_corner(t2, n).matrix != exp_corner(t1 + t2, n).matrix:
            failures.append(("corner law", n))
        if exp_upper(t1, n).det() != 1 or exp_corner(t1, n).det() != 1:
            failures.append(("det", n))
        if b is not None:
            if exp_lower(t1, b).matrix * exp_lower(t2, b).matrix != exp_lower(t1 + t2, b).matrix:
                failures.append(("lower law", n))
            if exp_lower(t1, b).det() != 1:
                failures.append(("lower det", n))
    # the two displayed 4x4 matrices, checked at three rational points
    for v in (Fraction(2, 3), Fraction(-5, 7), Fraction(9)):
        want_a = Matrix([
            [1, v, v**2 / 2, v**3 / 6],
            [0, 1, v, v**2 / 2],
            [0, 0, 1, v],
            [0, 0, 0, 1],
        ])
        if exp_upper(v, 4).matrix != want_a:
            failures.append(("a(t) display", v))
        want_c = Matrix([
            [1, 0, 0, 0],
            [8 * v, 1, 0, 0],
            [48 * v**2, 12 * v, 1, 0],
            [224 * v**3, 84 * v**2, 14 * v, 1],
        ])
        if exp_lower(v, (8, 12, 14)).matrix != want_c:
            failures.append(("c(r) display", v))
    finish(7, failures)


def test_acceptance_08_form_preservation():
    failures = []
    for n in (4, 6):
        rng = random.Random(80 + n)
        fm = form_matrix(n)
        gen_a = one_parameter_power(lambda u, n=n: exp_upper(u, n), Fraction(7, 3))
        gen_b = one_parameter_power(lambda u, n=n: exp_corner(u, n), Fraction(-9, 4))
        for k in range(50):
            length = rng.randint(1, 6)
            sym = rng.choice("AB")
            syls = []
            for _ in range(length):
                syls.append((sym, rng.choice([-2, -1, 1, 2])))
                sym = "B" if sym == "A" else "A"
            g = word_eval(Word(tuple(syls)), gen_a, gen_b)
            if not check_form(g, fm):
                failures.append((n, k, syls))
    finish(8, failures)


def test_acceptance_09_thin_emission():
    failures = []
    for n in range(3, 9):
        for q in (1, 2, 3):
            tp = thin_pair(n, q, 3)
            if tp.t != q * math.factorial(n - 1):
                failures.append((n, q, "t"))
            if any(x.denominator != 1 for x in tp.first.flatten()):
                failures.append((n, q, "non-integer a(t)"))
            if any(x.denominator != 1 for x in tp.second.flatten()):
                failures.append((n, q, "non-integer second"))
    # cmd_thin at (n=3, q=2, s=3) is required to certify (exit 0), but
    # t = 2!*2 = 4 sits below the certified n=3 threshold 2+2*sqrt(2) = 4.83
    # (the stated value 1+sqrt(3) does not satisfy T^2/2 - 2T - 2 > 0), so
    # the command exits 1 with a warning.  Kept as written; expected red.
    code = cli_main(["thin", "--n", "3", "--q", "2", "--s", "3"])
    if code != 0:
        failures.append(f"cmd_thin(n=3, q=2, s=3) exit {code} != 0")
    finish(9, failures)


def test_acceptance_10_criteria_checks():
    failures = []
    res = prop2_criterion(type_a_cartan(3), (8, 12, 14))
    if not (res.holds and res.values == (4, 2, 16)):
        failures.append(f"A3 criterion: {res}")
    res = prop2_criterion(G2_CARTAN, (-1, 1))
    if not (res.holds and res.values == (-5, 3)):
        failures.append(f"G2 criterion: {res}")
    bad = g2_canonical().relation_failures()
    if bad:
        failures.append(f"G2 canonical relations: {bad}")
    finish(10, failures)
