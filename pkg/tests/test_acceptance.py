"""Acceptance gate: one test per headline guarantee, with runtime budgets.

Each test prints a single PASS/FAIL line so the gate can be read off the
pytest -s output at a glance.  All comparisons are exact; runtime budgets are
generous upper bounds meant to catch algorithmic regressions, not noise.
"""

import time
from fractions import Fraction

from kinexpand.checks import (
    casimir_centrality,
    contraction_suite,
    identity_corpus,
    structural_suite,
)
from kinexpand.expansion import (
    THEOREM2_POSITIVE_WITNESS,
    run_euclid,
    run_negative_nh,
    run_theorem1,
    run_theorem2,
)
from kinexpand.liealg import catalog
from kinexpand.properties import (
    check_associativity,
    check_pbw_canonicity,
    check_ring_axioms,
    check_uea_jacobi,
)


def _report(label: str, passed: bool, extra: str = "") -> None:
    status = "PASS" if passed else "FAIL"
    suffix = f" ({extra})" if extra else ""
    print(f"[{status}] {label}{suffix}")
    assert passed, label


def test_criterion_1_structural_suite():
    start = time.perf_counter()
    results = structural_suite()
    elapsed = time.perf_counter() - start
    failed = [r.label for r in results if not r.passed]
    _report(
        "criterion 1: Jacobi + automorphisms + decompositions",
        not failed and elapsed < 1.0,
        f"{len(results)} checks, {elapsed:.2f}s" + (f", failed: {failed}" if failed else ""),
    )


def test_criterion_2_identity_corpus():
    start = time.perf_counter()
    results = identity_corpus()
    elapsed = time.perf_counter() - start
    failed = [r.label for r in results if not r.passed]
    _report(
        "criterion 2: exact identity corpus",
        not failed and elapsed < 5.0,
        f"{len(results)} identities, {elapsed:.2f}s" + (f", failed: {failed}" if failed else ""),
    )


def test_criterion_3_casimir_centrality():
    results = casimir_centrality()
    failed = [r.label for r in results if not r.passed]
    _report(
        "criterion 3: Casimir centrality (symbolic curvatures)",
        not failed,
        f"{len(results)} checks",
    )


def test_criterion_4_worldline_expansion_closes():
    start = time.perf_counter()
    run = run_theorem1()
    elapsed = time.perf_counter() - start
    verdicts = {tuple(p.pair): p.verdict for p in run.report.pairs}
    ok = (
        run.ok
        and run.closed_forms_match
        and len(verdicts) == 45
        and verdicts[("P1", "K1")] == "template_match"
        and verdicts[("K1", "K2")] == "template_match"
        and elapsed < 10.0
    )
    _report(
        "criterion 4: worldline expansion reproduces the curved algebra",
        ok,
        f"45 brackets, {elapsed:.2f}s",
    )


def test_criterion_5_euclidean_variant():
    run = run_euclid()
    _report(
        "criterion 5: positive-curvature variant closes onto euclid4",
        run.ok and run.report.target == "euclid4",
    )


def test_criterion_6_spacetime_expansion_closes():
    run = run_theorem2()
    run_pos = run_theorem2(THEOREM2_POSITIVE_WITNESS)
    ok = (
        run.ok
        and run.closed_forms_match
        and run_pos.ok
        and bool(run_pos.report.reductions)
    )
    _report(
        "criterion 6: spacetime expansion closes for both curvature signs",
        ok,
        "kappa=-1 exact witness; kappa=+1 via recorded constraint reduction",
    )


def test_criterion_7_negative_control():
    run = run_negative_nh()
    mismatches = {tuple(p) for p in run.report.mismatches}
    _report(
        "criterion 7: unextended seed fails closure (expected)",
        run.ok and not run.report.passed and ("H", "P1") in mismatches,
        f"mismatching brackets: {sorted(mismatches)}",
    )


def test_criterion_8_contraction_round_trips():
    start = time.perf_counter()
    results = contraction_suite()
    elapsed = time.perf_counter() - start
    failed = [r.label for r in results if not r.passed]
    _report(
        "criterion 8: contraction round-trips recover the flat algebra",
        not failed and elapsed < 1.0,
        f"{len(results)} edges, {elapsed:.2f}s",
    )


def test_criterion_9_property_suite(rng, seed):
    failures = list(check_ring_axioms(rng, catalog("galilei").ctx, samples=200))
    for name in ("galilei", "galilei_ext", "poincare", "newton_hooke"):
        alg = catalog(name)
        failures += check_pbw_canonicity(rng, alg, samples=100)
        failures += check_associativity(rng, alg, samples=100)
        failures += check_uea_jacobi(rng, alg, samples=100)
    _report(
        "criterion 9: randomized property suite",
        not failures,
        f"seed {seed}" + (f", failures: {failures[:3]}" if failures else ""),
    )
