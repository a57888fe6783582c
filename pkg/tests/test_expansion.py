"""Curvature expansions: Casimir decomposition, seeds, closure drivers."""

from fractions import Fraction

import pytest

from kinexpand.coeffring import Poly
from kinexpand.expansion import (
    EUCLID_WITNESS,
    THEOREM1_WITNESS,
    THEOREM2_POSITIVE_WITNESS,
    THEOREM2_WITNESS,
    ConstraintViolationError,
    build_seed,
    decompose_casimir,
    derive_generators,
    newton_hooke_closed_forms,
    poincare_closed_forms,
    run_euclid,
    run_negative_nh,
    run_theorem1,
    run_theorem2,
    _nh_target_casimirs,
    _poincare_target_casimirs,
)
from kinexpand.liealg import catalog
from kinexpand.uea import UEAElement, named_element


def gen(alg, name):
    return UEAElement.generator(alg, name)


class TestCasimirDecomposition:
    def test_worldline_split_parts(self):
        g = catalog("galilei")
        C1p, C2p = _poincare_target_casimirs(g)
        d1 = decompose_casimir(C1p, "omega")
        # omega-constant part is the flat Casimir P^2; linear part is H^2
        assert d1.base == named_element(g, "C1")
        assert d1.linear == gen(g, "H") * gen(g, "H")
        assert d1.quadratic.is_zero()

        d2 = decompose_casimir(C2p, "omega")
        H = gen(g, "H")
        JW = named_element(g, "JW")
        JP = named_element(g, "JP")
        assert d2.base == named_element(g, "C2")
        assert d2.linear == (H * JW).smul(2) + JP * JP
        J2 = sum(
            (gen(g, f"J{i}") * gen(g, f"J{i}") for i in (1, 2, 3)),
            UEAElement.zero(g),
        )
        assert d2.quadratic == H * H * J2

    def test_recombine_round_trip(self):
        g = catalog("galilei")
        for casimir in _poincare_target_casimirs(g):
            d = decompose_casimir(casimir, "omega")
            assert d.recombine() == casimir

    def test_spacetime_split_parts(self):
        ge = catalog("galilei_ext")
        C1p, C2p = _nh_target_casimirs(ge)
        d1 = decompose_casimir(C1p, "kappa")
        assert d1.base == named_element(ge, "C1")
        assert d1.linear == named_element(ge, "K2")
        assert d1.quadratic.is_zero()
        d2 = decompose_casimir(C2p, "kappa")
        assert d2.linear.is_zero() and d2.quadratic.is_zero()


class TestSeed:
    def test_worldline_seed(self):
        g = catalog("galilei")
        decomps = [
            decompose_casimir(c, "omega") for c in _poincare_target_casimirs(g)
        ]
        seed = build_seed(decomps, ["a1", "a2"])
        H = gen(g, "H")
        a1 = Poly.var(g.ctx, "a1")
        a2 = Poly.var(g.ctx, "a2")
        expected = (H * H).smul(a1) + (
            (H * named_element(g, "JW")).smul(2) + named_element(g, "JP") ** 2
        ).smul(a2)
        assert seed.element == expected
        assert not seed.degenerate

    def test_degenerate_seed(self):
        g = catalog("galilei")
        decomps = [decompose_casimir(c, "kappa") for c in _nh_target_casimirs(g)]
        seed = build_seed(decomps, ["a1", "a2"])
        # plain Galilei: only the K^2 part survives, C2' has no kappa term
        assert seed.element == named_element(g, "K2").smul(Poly.var(g.ctx, "a1"))


class TestDerivedGenerators:
    def test_fixed_sets(self):
        run = run_theorem1()
        assert set(run.generators.fixed_set) == {"H", "J1", "J2", "J3"}
        run2 = run_theorem2()
        assert set(run2.generators.fixed_set) == {
            "Xi", "K1", "K2", "K3", "J1", "J2", "J3",
        }

    def test_worldline_closed_forms(self):
        g = catalog("galilei")
        decomps = [
            decompose_casimir(c, "omega") for c in _poincare_target_casimirs(g)
        ]
        gens = derive_generators(g, build_seed(decomps, ["a1", "a2"]))
        forms = poincare_closed_forms(g)
        for name, expected in forms.items():
            assert gens.elements[name] == expected, name

    def test_spacetime_closed_forms(self):
        ge = catalog("galilei_ext")
        decomps = [decompose_casimir(c, "kappa") for c in _nh_target_casimirs(ge)]
        gens = derive_generators(ge, build_seed(decomps, ["a1", "a2"]))
        forms = newton_hooke_closed_forms(ge)
        for name, expected in forms.items():
            assert gens.elements[name] == expected, name

    def test_rotation_subalgebra_untouched(self):
        run = run_theorem1()
        for name in ("J1", "J2", "J3"):
            alg = catalog("galilei")
            assert run.generators.elements[name] == gen(alg, name)


class TestDrivers:
    def test_theorem1_closes(self):
        run = run_theorem1()
        assert run.ok
        assert run.report.passed
        assert run.closed_forms_match
        verdicts = {tuple(p.pair): p.verdict for p in run.report.pairs}
        assert len(verdicts) == 45
        assert verdicts[("P1", "K1")] == "template_match"
        assert verdicts[("K1", "K2")] == "template_match"
        assert verdicts[("P1", "P2")] == "exact_zero"

    def test_euclid_closes(self):
        run = run_euclid()
        assert run.ok
        assert run.report.target == "euclid4"

    def test_theorem2_closes(self):
        run = run_theorem2()
        assert run.ok
        verdicts = {tuple(p.pair): p.verdict for p in run.report.pairs}
        assert verdicts[("H", "P1")] == "template_match"

    def test_theorem2_positive_curvature_uses_reduction(self):
        run = run_theorem2(THEOREM2_POSITIVE_WITNESS)
        assert run.ok
        assert run.report.reductions, "expected a recorded power-reduction rule"

    def test_negative_control_fails_closure(self):
        run = run_negative_nh()
        assert run.ok  # failure is the expected outcome
        assert not run.report.passed
        mismatch_pairs = {tuple(p) for p in run.report.mismatches}
        assert ("H", "P1") in mismatch_pairs

    def test_bad_witness_rejected(self):
        bad = dict(THEOREM1_WITNESS)
        bad["omega"] = Fraction(5)
        with pytest.raises(ConstraintViolationError):
            run_theorem1(bad)

    def test_alternate_valid_witness(self):
        witness = {
            "c1": Fraction(2),
            "c2": Fraction(1, 8),
            "a2": Fraction(1),
            "a1": Fraction(-1, 16),
            "omega": Fraction(-1),
        }
        assert run_theorem1(witness).ok

    def test_default_witnesses_satisfy_constraints(self):
        w = THEOREM1_WITNESS
        assert w["a1"] * w["c1"] + w["a2"] * w["c2"] == 0
        assert 4 * w["a2"] ** 2 * w["c1"] * w["c2"] + w["omega"] == 0
        w = EUCLID_WITNESS
        assert w["a1"] * w["c1"] + w["a2"] * w["c2"] == 0
        assert 4 * w["a2"] ** 2 * w["c1"] * w["c2"] + w["omega"] == 0
        w = THEOREM2_WITNESS
        assert 4 * w["a1"] ** 2 * w["m"] ** 2 * w["xi"] ** 2 + w["kappa"] == 0

    def test_report_serializes(self):
        doc = run_theorem1().to_dict()
        assert doc["ok"] is True
        assert doc["report"]["passed"] is True
        assert len(doc["report"]["pairs"]) == 45
