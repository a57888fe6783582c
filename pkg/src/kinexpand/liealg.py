"""Finite-dimensional Lie algebras given by structure constants.

An algebra stores an ordered generator basis and a sparse bracket table with
polynomial coefficients; only pairs (i, j) with i < j are stored, so
antisymmetry holds by construction.  Structural checks (Jacobi, involutive
automorphisms, Cartan-style decompositions), Inonu--Wigner contraction,
parameter contraction and the catalog of kinematical algebras live here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .coeffring import (
    KINEMATIC_CONTEXT,
    DivergenceError,
    ParamContext,
    Poly,
)


@dataclass(frozen=True)
class GeneratorId:
    index: int
    name: str


# A vector over the generator basis: sparse map index -> Poly.
Vector = dict


class LieAlgebra:
    """Lie algebra over exact polynomial coefficients.

    ``brackets`` maps (i, j) with i < j to {k: Poly}; lookups with i > j
    negate.  Instances are immutable after construction; the normal-ordering
    kernel attaches a rewrite cache (see :mod:`kinexpand.uea`).
    """

    def __init__(
        self,
        name: str,
        generator_names: Sequence[str],
        ctx: ParamContext,
        brackets: Mapping[tuple, Mapping[int, Poly]] | None = None,
        metadata: Mapping[str, str] | None = None,
    ):
        self.name = name
        self.generators = tuple(
            GeneratorId(i, n) for i, n in enumerate(generator_names)
        )
        if len({g.name for g in self.generators}) != len(self.generators):
            raise ValueError("duplicate generator names")
        self.gen_index = {g.name: g.index for g in self.generators}
        self.ctx = ctx
        self.brackets: dict = {}
        for (i, j), comps in (brackets or {}).items():
            if not 0 <= i < j < len(self.generators):
                raise ValueError(f"bad bracket key ({i}, {j})")
            clean = {k: p for k, p in comps.items() if not p.is_zero()}
            if clean:
                self.brackets[(i, j)] = clean
        self.metadata = dict(metadata or {})
        self._nf_cache: dict = {}  # used by the UEA normal-ordering kernel
        self._pair_rules: dict = {}

    @property
    def dim(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name!r}, dim={self.dim})"

    def zero_poly(self) -> Poly:
        return Poly(self.ctx)

    # -- brackets ---------------------------------------------------------

    def bracket_pair(self, i: int, j: int) -> dict:
        """[X_i, X_j] as a sparse vector {k: Poly}."""
        if i == j:
            return {}
        if i < j:
            return dict(self.brackets.get((i, j), {}))
        return {k: -p for k, p in self.brackets.get((j, i), {}).items()}

    def bracket(self, x: Vector, y: Vector) -> Vector:
        """Bilinear extension of the bracket to coefficient vectors."""
        out: Vector = {}
        for i, a in x.items():
            if a.is_zero():
                continue
            for j, b in y.items():
                if b.is_zero():
                    continue
                ab = a * b
                for k, c in self.bracket_pair(i, j).items():
                    s = out.get(k, self.zero_poly()) + ab * c
                    if s.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = s
        return out

    def basis_vector(self, i: int) -> Vector:
        return {i: Poly.const(self.ctx, 1)}

    # -- equality of structure -------------------------------------------

    def same_structure(self, other: "LieAlgebra") -> bool:
        """Coefficient-exact equality of bases and bracket tables."""
        if tuple(g.name for g in self.generators) != tuple(
            g.name for g in other.generators
        ):
            return False
        if self.ctx != other.ctx:
            return False
        return self.brackets == other.brackets


def format_vector(alg: LieAlgebra, v: Vector) -> str:
    """Human-readable form of a basis vector, e.g. ``J3`` or ``-1*P1``."""
    from .coeffring import format_poly

    if not v:
        return "0"
    parts = []
    for k in sorted(v):
        coeff = v[k]
        name = alg.generators[k].name
        text = format_poly(coeff)
        parts.append(name if text == "1" else f"({text})*{name}" if " " in text else f"{text}*{name}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# Structural checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class JacobiViolation:
    triple: tuple
    residual: dict


def jacobi_check(alg: LieAlgebra) -> list:
    """Exhaustively check the Jacobi identity on all basis triples.

    Returns a list of :class:`JacobiViolation`; empty means pass.
    """
    violations = []
    n = alg.dim
    for i in range(n):
        xi = alg.basis_vector(i)
        for j in range(i + 1, n):
            xj = alg.basis_vector(j)
            for k in range(j + 1, n):
                xk = alg.basis_vector(k)
                res: Vector = {}
                for a, bc in (
                    (xi, alg.bracket(xj, xk)),
                    (xj, alg.bracket(xk, xi)),
                    (xk, alg.bracket(xi, xj)),
                ):
                    for g, p in alg.bracket(a, bc).items():
                        s = res.get(g, alg.zero_poly()) + p
                        if s.is_zero():
                            res.pop(g, None)
                        else:
                            res[g] = s
                if res:
                    violations.append(JacobiViolation((i, j, k), res))
    return violations


class LinearMap:
    """Square matrix of Poly entries over the generator basis."""

    def __init__(self, alg: LieAlgebra, matrix: Sequence[Sequence[Poly]]):
        self.alg = alg
        n = alg.dim
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError("matrix does not match algebra dimension")
        self.matrix = tuple(tuple(row) for row in matrix)

    @classmethod
    def diagonal(cls, alg: LieAlgebra, signs: Mapping[str, int]) -> "LinearMap":
        """Diagonal map from generator name -> +1/-1 (default +1)."""
        n = alg.dim
        zero = alg.zero_poly()
        rows = []
        for i in range(n):
            row = [zero] * n
            row[i] = Poly.const(alg.ctx, signs.get(alg.generators[i].name, 1))
            rows.append(row)
        return cls(alg, rows)

    def apply(self, v: Vector) -> Vector:
        out: Vector = {}
        for j, c in v.items():
            for i in range(self.alg.dim):
                entry = self.matrix[i][j]
                if entry.is_zero():
                    continue
                s = out.get(i, self.alg.zero_poly()) + entry * c
                if s.is_zero():
                    out.pop(i, None)
                else:
                    out[i] = s
        return out


def automorphism_check(alg: LieAlgebra, f: LinearMap):
    """Check that f is an involutive Lie-algebra automorphism.

    Returns (True, None) or (False, description-of-first-violation).
    """
    n = alg.dim
    for j in range(n):
        ff = f.apply(f.apply(alg.basis_vector(j)))
        expected = alg.basis_vector(j)
        if _vec_sub(alg, ff, expected):
            return False, f"f∘f != id on generator {alg.generators[j].name}"
    for i in range(n):
        fi = f.apply(alg.basis_vector(i))
        for j in range(i + 1, n):
            fj = f.apply(alg.basis_vector(j))
            lhs = f.apply(alg.bracket(alg.basis_vector(i), alg.basis_vector(j)))
            rhs = alg.bracket(fi, fj)
            if _vec_sub(alg, lhs, rhs):
                pair = (alg.generators[i].name, alg.generators[j].name)
                return False, f"f([x,y]) != [f(x),f(y)] on {pair}"
    return True, None


def _vec_sub(alg: LieAlgebra, a: Vector, b: Vector) -> Vector:
    out = dict(a)
    for k, p in b.items():
        s = out.get(k, alg.zero_poly()) - p
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


@dataclass(frozen=True)
class Decomposition:
    """Partition of the basis into subalgebra part h and complement p."""

    h: frozenset
    p: frozenset
    label: str = ""

    @classmethod
    def from_names(cls, alg: LieAlgebra, p_names, label: str = "") -> "Decomposition":
        p = frozenset(alg.gen_index[n] for n in p_names)
        h = frozenset(range(alg.dim)) - p
        return cls(h=h, p=p, label=label)


@dataclass(frozen=True)
class DecompositionReport:
    hh_in_h: bool
    hp_in_p: bool
    pp: str  # "zero", "subset_h" or "other"


def decomposition_check(alg: LieAlgebra, d: Decomposition) -> DecompositionReport:
    if d.h | d.p != frozenset(range(alg.dim)) or d.h & d.p:
        raise ValueError("h and p must partition the basis")

    def contained(pairs, allowed) -> bool:
        for i, j in pairs:
            for k in alg.bracket_pair(i, j):
                if k not in allowed:
                    return False
        return True

    def all_zero(pairs) -> bool:
        return all(not alg.bracket_pair(i, j) for i, j in pairs)

    hh = [(i, j) for i in d.h for j in d.h if i < j]
    hp = [(i, j) for i in d.h for j in d.p]
    pp = [(i, j) for i in d.p for j in d.p if i < j]

    if all_zero(pp):
        pp_verdict = "zero"
    elif contained(pp, d.h):
        pp_verdict = "subset_h"
    else:
        pp_verdict = "other"
    return DecompositionReport(
        hh_in_h=contained(hh, d.h),
        hp_in_p=contained(hp, d.p),
        pp=pp_verdict,
    )


# ---------------------------------------------------------------------------
# Contractions
# ---------------------------------------------------------------------------


def iw_contract(alg: LieAlgebra, d: Decomposition) -> LieAlgebra:
    """Simple Inonu--Wigner contraction along the split ``d``.

    The p-generators are rescaled by the contraction parameter and the limit
    is taken on every structure constant.  Raises :class:`DivergenceError`
    when the split is not contractible (a coefficient diverges).
    """
    report = decomposition_check(alg, d)
    if not report.hh_in_h:
        raise ValueError("h is not a subalgebra; contraction undefined")
    eps_name = alg.ctx.laurent
    if eps_name is None:
        raise ValueError("context has no contraction parameter")
    new_brackets: dict = {}
    for (i, j), comps in alg.brackets.items():
        weight_ij = (i in d.p) + (j in d.p)
        out = {}
        for k, coeff in comps.items():
            power = weight_ij - (k in d.p)
            scaled = coeff * Poly.var(alg.ctx, eps_name, power)
            limited = scaled.limit_contraction()
            if not limited.is_zero():
                out[k] = limited
        if out:
            new_brackets[(i, j)] = out
    return LieAlgebra(
        name=f"{alg.name}_contracted",
        generator_names=[g.name for g in alg.generators],
        ctx=alg.ctx,
        brackets=new_brackets,
        metadata={**alg.metadata, "contracted_from": alg.name, "split": d.label},
    )


def parameter_contract(alg: LieAlgebra, param: str) -> LieAlgebra:
    """Set a curvature parameter to zero in all structure constants."""
    new_brackets: dict = {}
    for (i, j), comps in alg.brackets.items():
        out = {}
        for k, coeff in comps.items():
            c = coeff.substitute({param: 0})
            if not c.is_zero():
                out[k] = c
        if out:
            new_brackets[(i, j)] = out
    return LieAlgebra(
        name=f"{alg.name}_at_{param}0",
        generator_names=[g.name for g in alg.generators],
        ctx=alg.ctx,
        brackets=new_brackets,
        metadata={**alg.metadata, "contracted_from": alg.name, "param": param},
    )


def substitute_algebra(alg: LieAlgebra, assignment) -> LieAlgebra:
    """Algebra with the assignment applied to every structure constant."""
    new_brackets: dict = {}
    for (i, j), comps in alg.brackets.items():
        out = {}
        for k, coeff in comps.items():
            c = coeff.substitute(assignment)
            if not c.is_zero():
                out[k] = c
        if out:
            new_brackets[(i, j)] = out
    label = ",".join(f"{k}={v}" for k, v in sorted(assignment.items()))
    return LieAlgebra(
        name=f"{alg.name}[{label}]",
        generator_names=[g.name for g in alg.generators],
        ctx=alg.ctx,
        brackets=new_brackets,
        metadata=dict(alg.metadata),
    )


# ---------------------------------------------------------------------------
# Catalog of kinematical algebras
#
# Basis order follows the PBW convention: central generator first, then H,
# translations P, boosts K, rotations J.
# ---------------------------------------------------------------------------

_EPSILON = {
    (1, 2, 3): 1, (2, 3, 1): 1, (3, 1, 2): 1,
    (2, 1, 3): -1, (3, 2, 1): -1, (1, 3, 2): -1,
}

KINEMATIC_GENERATORS = ("H", "P1", "P2", "P3", "K1", "K2", "K3", "J1", "J2", "J3")


class _BracketBuilder:
    def __init__(self, ctx: ParamContext, gen_names: Sequence[str]):
        self.ctx = ctx
        self.index = {n: i for i, n in enumerate(gen_names)}
        self.table: dict = {}

    def set(self, left: str, right: str, terms):
        """terms: list of (gen_name, Poly-or-int); handles storage order."""
        i, j = self.index[left], self.index[right]
        if i == j:
            raise ValueError("bracket of a generator with itself")
        sign = 1
        if i > j:
            i, j = j, i
            sign = -1
        out = self.table.setdefault((i, j), {})
        for name, coeff in terms:
            if not isinstance(coeff, Poly):
                coeff = Poly.const(self.ctx, coeff)
            k = self.index[name]
            s = out.get(k, Poly(self.ctx)) + coeff.scale(sign)
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s

    def rotations(self, families):
        """[J_i, X_j] = eps_ijk X_k for each family prefix, plus [J,J]."""
        for (i, j, k), sign in _EPSILON.items():
            if i < j:
                self.set(f"J{i}", f"J{j}", [(f"J{k}", sign)])
        for prefix in families:
            for (i, j, k), sign in _EPSILON.items():
                self.set(f"J{i}", f"{prefix}{j}", [(f"{prefix}{k}", sign)])


def _build_galilei(extended: bool) -> LieAlgebra:
    ctx = KINEMATIC_CONTEXT
    gens = (("Xi",) if extended else ()) + KINEMATIC_GENERATORS
    b = _BracketBuilder(ctx, gens)
    b.rotations(["P", "K"])
    for i in range(1, 4):
        b.set("H", f"K{i}", [(f"P{i}", -1)])
    if extended:
        m = Poly.var(ctx, "m")
        for i in range(1, 4):
            b.set(f"P{i}", f"K{i}", [("Xi", m)])
    meta = {
        "iso_class": "iiso(3)" if not extended else "extended iiso(3)",
        "spacetime_dim": "3+1",
        "spacetime_curv": "0",
        "worldline_dim": "3+3",
        "worldline_curv": "0",
    }
    return LieAlgebra(
        "galilei_ext" if extended else "galilei", gens, ctx, b.table, meta
    )


def _build_poincare(euclidean: bool) -> LieAlgebra:
    # Worldline-space curvature enters as the single parameter omega; the
    # Euclidean algebra is the same table with positive-curvature metadata.
    ctx = KINEMATIC_CONTEXT
    gens = KINEMATIC_GENERATORS
    b = _BracketBuilder(ctx, gens)
    b.rotations(["P", "K"])
    omega = Poly.var(ctx, "omega")
    for i in range(1, 4):
        b.set("H", f"K{i}", [(f"P{i}", -1)])
        b.set(f"P{i}", f"K{i}", [("H", omega)])
    for (i, j, k), sign in _EPSILON.items():
        if i < j:
            b.set(f"K{i}", f"K{j}", [(f"J{k}", omega.scale(sign))])
    meta = {
        "iso_class": "iso(4)" if euclidean else "iso(3,1)",
        "spacetime_dim": "3+1",
        "spacetime_curv": "0",
        "worldline_dim": "3+3",
        "worldline_curv": "omega>0" if euclidean else "omega<0",
    }
    return LieAlgebra("euclid4" if euclidean else "poincare", gens, ctx, b.table, meta)


def _build_newton_hooke() -> LieAlgebra:
    ctx = KINEMATIC_CONTEXT
    gens = KINEMATIC_GENERATORS
    b = _BracketBuilder(ctx, gens)
    b.rotations(["P", "K"])
    kappa = Poly.var(ctx, "kappa")
    for i in range(1, 4):
        b.set("H", f"K{i}", [(f"P{i}", -1)])
        b.set("H", f"P{i}", [(f"K{i}", kappa)])
    meta = {
        "iso_class": "t6(so(2)+so(3)) / t6(so(1,1)+so(3))",
        "spacetime_dim": "3+1",
        "spacetime_curv": "kappa",
        "worldline_dim": "3+3",
        "worldline_curv": "0",
    }
    return LieAlgebra("newton_hooke", gens, ctx, b.table, meta)


_CATALOG_BUILDERS = {
    "galilei": lambda: _build_galilei(False),
    "galilei_ext": lambda: _build_galilei(True),
    "poincare": lambda: _build_poincare(False),
    "euclid4": lambda: _build_poincare(True),
    "newton_hooke": _build_newton_hooke,
}

_catalog_cache: dict = {}


def catalog(name: str) -> LieAlgebra:
    """Return a catalog kinematical algebra (Jacobi verified on first load).

    Instances are cached and shared; they are immutable.
    """
    if name not in _CATALOG_BUILDERS:
        raise KeyError(f"unknown catalog algebra {name!r}")
    if name not in _catalog_cache:
        alg = _CATALOG_BUILDERS[name]()
        bad = jacobi_check(alg)
        if bad:
            raise AssertionError(f"catalog algebra {name} fails Jacobi: {bad[:3]}")
        _catalog_cache[name] = alg
    return _catalog_cache[name]


def catalog_names():
    return tuple(_CATALOG_BUILDERS)


# Sign patterns of the two involutive automorphisms: parity and parity*time
# reversal.  The central generator of the extended algebra is even under both.

PI_SIGNS = {"H": 1, "P1": -1, "P2": -1, "P3": -1, "K1": -1, "K2": -1, "K3": -1}
PI_T_SIGNS = {"H": -1, "P1": -1, "P2": -1, "P3": -1, "Xi": -1}


def parity_map(alg: LieAlgebra) -> LinearMap:
    return LinearMap.diagonal(alg, PI_SIGNS)


def parity_time_map(alg: LieAlgebra) -> LinearMap:
    return LinearMap.diagonal(alg, PI_T_SIGNS)


def worldline_split(alg: LieAlgebra) -> Decomposition:
    """p = (P, K), h = (H, J) (+ central): the space-of-worldlines split."""
    return Decomposition.from_names(
        alg, ["P1", "P2", "P3", "K1", "K2", "K3"], label="worldline"
    )


def spacetime_split(alg: LieAlgebra) -> Decomposition:
    """p = (H, P), h = (K, J) (+ central): the spacetime split."""
    return Decomposition.from_names(
        alg, ["H", "P1", "P2", "P3"], label="spacetime"
    )
