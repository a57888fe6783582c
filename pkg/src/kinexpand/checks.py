"""Batteries of exact checks: enveloping-algebra identity corpus, structural
suite and contraction round-trips.

Every check returns ``CheckResult`` records so the CLI and the test suite can
share one implementation.  All comparisons are exact (residual must vanish in
normal form); there are no tolerances anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .liealg import (
    LieAlgebra,
    automorphism_check,
    catalog,
    decomposition_check,
    iw_contract,
    jacobi_check,
    parameter_contract,
    parity_map,
    parity_time_map,
    spacetime_split,
    substitute_algebra,
    worldline_split,
)
from .uea import UEAElement, format_element, is_central, named_element

_CYCLIC = ((1, 2, 3), (2, 3, 1), (3, 1, 2))

_EPSILON = {
    (1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1,
    (2, 1, 3): -1, (3, 2, 1): -1, (1, 3, 2): -1,
}


@dataclass
class CheckResult:
    label: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"label": self.label, "passed": self.passed, "detail": self.detail}


def _identity(label: str, lhs: UEAElement, rhs: UEAElement) -> CheckResult:
    residual = lhs - rhs
    return CheckResult(
        label, residual.is_zero(), "" if residual.is_zero() else format_element(residual)
    )


def identity_corpus(alg: LieAlgebra | None = None) -> list:
    """The full corpus of enveloping-algebra identities over Galilei.

    Covers the two scalar identities, their squared consequences (and the
    boost analogues), the bracket tables for W, J.P and J.W, the Casimir-
    producing commutators and the [J.W, J.P] expansion.
    """
    g = alg if alg is not None else catalog("galilei")
    zero = UEAElement.zero(g)
    gen = lambda n: UEAElement.generator(g, n)
    H = gen("H")
    P = {i: gen(f"P{i}") for i in (1, 2, 3)}
    K = {i: gen(f"K{i}") for i in (1, 2, 3)}
    J = {i: gen(f"J{i}") for i in (1, 2, 3)}
    W = {i: named_element(g, f"W{i}") for i in (1, 2, 3)}
    JP = named_element(g, "JP")
    JW = named_element(g, "JW")
    KP = named_element(g, "KP")
    C1 = named_element(g, "C1")
    C2 = named_element(g, "C2")

    results = []
    add = results.append

    # scalar identities P.W = 0 and K.W = 0
    add(_identity("A1: P.W = 0", sum((P[i] * W[i] for i in (1, 2, 3)), zero), zero))
    add(_identity("A1: K.W = 0", sum((K[i] * W[i] for i in (1, 2, 3)), zero), zero))

    # squared consequences, for X in {P, K}
    for tag, X in (("P", P), ("K", K)):
        lhs = sum(
            ((X[i] * X[j] * W[i] * W[j]).smul(-2) for i, j in ((1, 2), (1, 3), (2, 3))),
            zero,
        )
        rhs = sum((X[i] * X[i] * W[i] * W[i] for i in (1, 2, 3)), zero)
        add(_identity(f"A2({tag}): cross terms", lhs, rhs))
        for i, a, b in _CYCLIC:
            lhs = (
                X[i] * X[i] * W[i] * W[i]
                - X[a] * X[a] * W[a] * W[a]
                - X[b] * X[b] * W[b] * W[b]
                - (X[a] * X[b] * W[a] * W[b]).smul(2)
            )
            add(_identity(f"A3({tag}): component {i}", lhs, zero))

    # bracket table for the W components
    for i in (1, 2, 3):
        add(_identity(f"A4: [W{i},H] = 0", W[i].commutator(H), zero))
        for j in (1, 2, 3):
            if i != j:
                k = 6 - i - j
                sign = _EPSILON[(i, j, k)]
                add(
                    _identity(
                        f"A4: [W{i},J{j}]", W[i].commutator(J[j]), W[k].smul(sign)
                    )
                )
            add(_identity(f"A4: [W{i},P{j}] = 0", W[i].commutator(P[j]), zero))
            add(_identity(f"A4: [W{i},K{j}] = 0", W[i].commutator(K[j]), zero))
        for j in range(i + 1, 4):
            add(_identity(f"A4: [W{i},W{j}] = 0", W[i].commutator(W[j]), zero))

    # bracket table for J.P
    add(_identity("A5: [J.P,H] = 0", JP.commutator(H), zero))
    for i, a, b in _CYCLIC:
        add(_identity(f"A5: [J.P,J{i}] = 0", JP.commutator(J[i]), zero))
        add(_identity(f"A5: [J.P,P{i}] = 0", JP.commutator(P[i]), zero))
        add(_identity(f"A5: [J.P,K{i}] = W{i}", JP.commutator(K[i]), W[i]))
        add(
            _identity(
                f"A5: [J.P,W{i}]",
                JP.commutator(W[i]),
                -(P[a] * W[b] - P[b] * W[a]),
            )
        )

    # bracket table for J.W
    add(_identity("A6: [J.W,H] = 0", JW.commutator(H), zero))
    for i, a, b in _CYCLIC:
        add(_identity(f"A6: [J.W,J{i}] = 0", JW.commutator(J[i]), zero))
        add(_identity(f"A6: [J.W,W{i}] = 0", JW.commutator(W[i]), zero))
        add(
            _identity(
                f"A6: [J.W,P{i}]", JW.commutator(P[i]), P[a] * W[b] - P[b] * W[a]
            )
        )
        add(
            _identity(
                f"A6: [J.W,K{i}]", JW.commutator(K[i]), K[a] * W[b] - K[b] * W[a]
            )
        )

    # Casimir-producing commutators
    for i, a, b in _CYCLIC:
        add(
            _identity(
                f"A7: [J.P, P{a}W{b}-P{b}W{a}] = C1*W{i}",
                JP.commutator(P[a] * W[b] - P[b] * W[a]),
                C1 * W[i],
            )
        )
        add(
            _identity(
                f"A7: [J.P, K{a}W{b}-K{b}W{a}] = K.P*W{i}",
                JP.commutator(K[a] * W[b] - K[b] * W[a]),
                KP * W[i],
            )
        )
        add(
            _identity(
                f"A8: [J.W, P{a}W{b}-P{b}W{a}] = -C2*P{i}",
                JW.commutator(P[a] * W[b] - P[b] * W[a]),
                -(C2 * P[i]),
            )
        )
        add(
            _identity(
                f"A8: [J.W, K{a}W{b}-K{b}W{a}] = -C2*K{i}",
                JW.commutator(K[a] * W[b] - K[b] * W[a]),
                -(C2 * K[i]),
            )
        )

    # the commutator of the two rotation scalars
    rhs = sum(
        (J[i] * (P[a] * W[b] - P[b] * W[a]) for i, a, b in _CYCLIC), zero
    )
    add(_identity("A9: [J.W, J.P]", JW.commutator(JP), rhs))
    return results


def casimir_centrality() -> list:
    """Centrality of C1, C2 in each catalog algebra, and of the central
    generator in the extended algebra."""
    results = []
    for name in ("galilei", "poincare", "newton_hooke"):
        alg = catalog(name)
        for key in ("C1", "C2"):
            ok, witness = is_central(alg, named_element(alg, key))
            results.append(
                CheckResult(
                    f"centrality: {key} in {name}",
                    ok,
                    "" if ok else f"fails against {witness}",
                )
            )
    ge = catalog("galilei_ext")
    ok, witness = is_central(ge, UEAElement.generator(ge, "Xi"))
    results.append(
        CheckResult(
            "centrality: Xi in galilei_ext", ok, "" if ok else f"fails against {witness}"
        )
    )
    return results


def structural_suite() -> list:
    """Jacobi, involutive automorphisms and decomposition classifications."""
    results = []
    for name in ("galilei", "galilei_ext", "poincare", "newton_hooke"):
        bad = jacobi_check(catalog(name))
        results.append(
            CheckResult(
                f"jacobi: {name}", not bad, "" if not bad else f"{len(bad)} violations"
            )
        )
    for name in ("galilei", "poincare", "newton_hooke"):
        alg = catalog(name)
        for label, fmap in (("parity", parity_map), ("parity-time", parity_time_map)):
            ok, why = automorphism_check(alg, fmap(alg))
            results.append(
                CheckResult(f"automorphism: {label} on {name}", ok, why or "")
            )
    expected_pp = {
        ("galilei", "spacetime"): "zero",
        ("galilei", "worldline"): "zero",
        ("poincare", "spacetime"): "zero",
        ("poincare", "worldline"): "subset_h",
        ("newton_hooke", "spacetime"): "subset_h",
        ("newton_hooke", "worldline"): "zero",
    }
    for (name, split), want in expected_pp.items():
        alg = catalog(name)
        d = spacetime_split(alg) if split == "spacetime" else worldline_split(alg)
        rep = decomposition_check(alg, d)
        ok = rep.hh_in_h and rep.hp_in_p and rep.pp == want
        results.append(
            CheckResult(
                f"decomposition: {name} {split} [p,p]={want}",
                ok,
                "" if ok else f"got hh={rep.hh_in_h} hp={rep.hp_in_p} pp={rep.pp}",
            )
        )
    return results


def contraction_suite() -> list:
    """The contraction edges of the expansion/contraction diagram."""
    results = []
    galilei = catalog("galilei")

    contracted = parameter_contract(catalog("poincare"), "omega")
    results.append(
        CheckResult(
            "contract: poincare at omega->0 equals galilei",
            contracted.same_structure(galilei),
        )
    )
    contracted = parameter_contract(catalog("newton_hooke"), "kappa")
    results.append(
        CheckResult(
            "contract: newton_hooke at kappa->0 equals galilei",
            contracted.same_structure(galilei),
        )
    )
    p_fixed = substitute_algebra(catalog("poincare"), {"omega": Fraction(-1)})
    contracted = iw_contract(p_fixed, worldline_split(p_fixed))
    results.append(
        CheckResult(
            "contract: IW worldline contraction of poincare(omega=-1) equals galilei",
            contracted.same_structure(galilei),
        )
    )
    nh_fixed = substitute_algebra(catalog("newton_hooke"), {"kappa": Fraction(1)})
    contracted = iw_contract(nh_fixed, spacetime_split(nh_fixed))
    results.append(
        CheckResult(
            "contract: IW spacetime contraction of newton_hooke(kappa=1) equals galilei",
            contracted.same_structure(galilei),
        )
    )
    return results
