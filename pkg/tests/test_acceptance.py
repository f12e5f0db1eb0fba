"""Acceptance suite: every criterion runs exactly, one pass/fail line each.

All comparisons are exact (integer equality, exact zero in Q(lambda)); the
only tolerances are the wall-clock targets on the two beta tables.
"""

import functools
import random
import time

from ncinv.cyclo import CycloNum
from ncinv.ncalg import (
    NcPolynomial,
    downup_spec,
    monomial_basis,
    multiply,
    reduce_word,
    skew_spec,
)
from ncinv.action import (
    apply_power,
    invariant_basis,
    invariant_dimension_trace,
    orbit_sum,
    reynolds,
    standard_action,
)
from ncinv.gendeg import compute_beta, kernel_annihilation, rank
from ncinv.formulas import _kernel_setup, verify_identity


def _report(num: int, name: str, ok: bool, detail: str = "") -> None:
    line = f"ACCEPTANCE {num} [{name}]: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line)


@functools.lru_cache(maxsize=None)
def skew_report(n):
    return compute_beta(standard_action(skew_spec(n)), 5)


@functools.lru_cache(maxsize=None)
def downup_report(alpha, beta, n, max_multiple=5):
    act = standard_action(downup_spec(alpha, beta, n))
    return compute_beta(act, max_multiple)


def test_criterion_1_skew_beta_table():
    expected = {2: 2, 6: 6, 4: 8, 8: 16, 3: 9, 5: 15, 7: 21}
    start = time.monotonic()
    computed = {n: skew_report(n).beta for n in sorted(expected)}
    elapsed = time.monotonic() - start
    ok = computed == expected and elapsed < 300
    _report(1, "skew beta table", ok, f"{computed}, {elapsed:.1f}s")
    assert computed == expected
    assert elapsed < 300


def test_criterion_2_downup_beta_table():
    expected = {1: 3, 2: 4, 3: 9, 4: 8, 5: 15}
    start = time.monotonic()
    computed = {n: downup_report(0, 1, n).beta for n in sorted(expected)}
    elapsed = time.monotonic() - start
    ok = computed == expected and elapsed < 600
    _report(2, "down-up A(0,1) beta table", ok, f"{computed}, {elapsed:.1f}s")
    assert computed == expected
    assert elapsed < 600


def test_criterion_3_kernel_certificates():
    cases = (
        [("skew", n, 2) for n in (4, 8)]
        + [("skew", n, 3) for n in (3, 5, 7)]
        + [("downup", n, 2) for n in (2, 4)]
        + [("downup", n, 3) for n in (1, 3, 5)]
    )
    failures = []
    for kind, n, multiple in cases:
        matrix, vec, dim = _kernel_setup(n, kind, multiple)
        if not kernel_annihilation(matrix, vec):
            failures.append((kind, n, multiple, "annihilation"))
        if not rank(matrix) < dim:
            failures.append((kind, n, multiple, "rank deficiency"))
    _report(3, "kernel-vector certificates", not failures, f"{len(cases)} systems")
    assert failures == []


def test_criterion_4_formula_sweeps():
    jobs = (
        [("prop-invar", n) for n in range(1, 9)]
        + [("eq-4n", n) for n in (2, 4, 6, 8)]
        + [("lemma-multi", n) for n in (1, 3, 5, 7)]
        + [("prop-even-products", n) for n in (2, 4, 6, 8)]
        + [("prop-odd-products", n) for n in (1, 3, 5, 7)]
        + [("normalize-2n", n) for n in (2, 4, 6, 8)]
        + [("normalize-3n", n) for n in (1, 3, 5, 7)]
    )
    bad = []
    checked = 0
    for target, n in jobs:
        report = verify_identity(target, n)
        checked += report["checked"]
        if report["failures"]:
            bad.append((target, n, report["failures"][:2]))
    _report(4, "formula sweeps", not bad, f"{checked} tuples over {len(jobs)} sweeps")
    assert bad == []


def _property_specs():
    return [
        skew_spec(3),
        downup_spec(0, 1, 2),
        downup_spec(0, -1, 2),
        downup_spec(2, -1, 2),
    ]


def test_criterion_5a_confluence():
    rng = random.Random(20250809)
    ok = True
    for spec in _property_specs():
        for _ in range(1000):
            w = "".join(rng.choice(spec.alphabet) for _ in range(rng.randrange(0, 11)))
            if reduce_word(spec, w, "leftmost") != reduce_word(spec, w, "rightmost"):
                ok = False
                break
    _report(5, "confluence, 1000 random words per spec", ok)
    assert ok


def test_criterion_5b_reynolds_and_multiplicativity():
    rng = random.Random(99)
    ok = True
    for spec in _property_specs():
        act = standard_action(spec)
        for _ in range(25):
            d1, d2 = rng.randrange(0, 5), rng.randrange(0, 5)
            p = NcPolynomial.monomial(spec, rng.choice(monomial_basis(spec, d1)))
            q = NcPolynomial.monomial(spec, rng.choice(monomial_basis(spec, d2)))
            r = reynolds(act, p)
            if reynolds(act, r) != r or apply_power(act, 1, r) != r:
                ok = False
            k = rng.randrange(0, act.order)
            if apply_power(act, k, p * q) != apply_power(act, k, p) * apply_power(act, k, q):
                ok = False
    _report(5, "Reynolds projection and automorphism multiplicativity", ok)
    assert ok


def test_criterion_5c_dimension_equals_trace():
    makers = [
        skew_spec,
        lambda n: downup_spec(0, 1, n),
        lambda n: downup_spec(0, -1, n),
        lambda n: downup_spec(2, -1, n),
    ]
    mismatches = []
    for make in makers:
        for n in range(1, 7):
            act = standard_action(make(n))
            for d in range(0, 4 * n + 1):
                basis_dim = len(invariant_basis(act, d))
                trace_dim = invariant_dimension_trace(act, d)
                if basis_dim != trace_dim:
                    mismatches.append((act.spec, d, basis_dim, trace_dim))
    _report(5, "invariant dimension equals trace average, degrees <= 4n, n <= 6",
            not mismatches)
    assert mismatches == []


def test_criterion_6_open_question_reproduction():
    rep_0m1 = downup_report(0, -1, 1, 6)
    rep_2m1 = downup_report(2, -1, 1, 6)
    degree4 = next(r for r in rep_0m1.scanned_degrees if r.degree == 4)
    ok = rep_0m1.beta == 4 and rep_2m1.beta == 2 and degree4.new_gens > 0
    _report(
        6,
        "Question reproduction",
        ok,
        f"A(0,-1): beta={rep_0m1.beta}, new at 4={degree4.new_gens}; "
        f"A(2,-1): beta={rep_2m1.beta}",
    )
    assert rep_0m1.beta == 4
    assert rep_2m1.beta == 2
    assert degree4.new_gens > 0


def test_criterion_7_even_regimes_negative_control():
    ok = True
    details = []
    for n in (4, 8):
        rec = next(r for r in skew_report(n).scanned_degrees if r.degree == 2 * n)
        deficiency = rec.inv_dim - rec.product_dim
        details.append(f"n={n}: codim at 2n = {deficiency}")
        if deficiency < 1:
            ok = False
    for n in (2, 6):
        above = [r for r in skew_report(n).scanned_degrees if r.degree > n]
        if any(r.new_gens != 0 for r in above):
            ok = False
        details.append(f"n={n}: no new generators above n")
    _report(7, "two even regimes distinguished", ok, "; ".join(details))
    assert ok
