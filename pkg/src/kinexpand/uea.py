"""Universal enveloping algebra with PBW normal ordering.

Elements are finite linear combinations of PBW monomials, i.e. exponent
vectors over the algebra's ordered generator basis, with polynomial
coefficients.  Arbitrary words in generators are brought to normal form by
repeatedly rewriting the leftmost out-of-order adjacent pair x_b x_a
(b after a in basis order) into x_a x_b + [x_b, x_a]; every step lowers the
pair (word length, inversion count), so the rewriting terminates and by the
PBW theorem the result is the canonical representative.

Normal forms of whole words are memoised on the algebra instance, which makes
repeated high-degree products (the expansion closure checks go up to degree
eight) tractable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

from .coeffring import Poly, format_poly, grlex_key
from .liealg import LieAlgebra

# A PBW monomial: exponent tuple over the generator basis; () handled as the
# all-zero tuple of the algebra's dimension.
Monomial = Tuple[int, ...]

# A word: tuple of generator indices in arbitrary order.
WordLetters = Tuple[int, ...]

CoeffLike = Union[int, Fraction, Poly]


def word_to_monomial(alg: LieAlgebra, word: WordLetters) -> Monomial:
    exps = [0] * alg.dim
    for g in word:
        exps[g] += 1
    return tuple(exps)


def monomial_to_word(mono: Monomial) -> WordLetters:
    out = []
    for g, e in enumerate(mono):
        out.extend([g] * e)
    return tuple(out)


def _pair_rule(alg: LieAlgebra, b: int, a: int):
    """Rewrite fragments for the inverted pair (b, a), b > a in basis order.

    Returns a list of (fragment, Poly) with x_b x_a = sum fragment * coeff.
    """
    rules = alg._pair_rules
    key = (b, a)
    if key not in rules:
        frags = [((a, b), Poly.const(alg.ctx, 1))]
        for k, c in alg.bracket_pair(b, a).items():
            frags.append(((k,), c))
        rules[key] = frags
    return rules[key]


def _first_inversion(word: WordLetters) -> int:
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            return i
    return -1


def normal_form_word(alg: LieAlgebra, word: WordLetters) -> dict:
    """Normal form of a single word as {monomial: Poly}, memoised.

    Iterative memoised DFS over the rewrite DAG: a word whose children are
    all resolved combines their normal forms; unresolved children are pushed
    first.  The DAG is acyclic because swaps keep length and strictly reduce
    inversions while bracket corrections shorten the word.
    """
    cache = alg._nf_cache
    if word in cache:
        return cache[word]
    stack = [word]
    while stack:
        w = stack[-1]
        if w in cache:
            stack.pop()
            continue
        pos = _first_inversion(w)
        if pos < 0:
            cache[w] = {word_to_monomial(alg, w): Poly.const(alg.ctx, 1)}
            stack.pop()
            continue
        prefix, suffix = w[:pos], w[pos + 2 :]
        children = [
            (prefix + frag + suffix, coeff)
            for frag, coeff in _pair_rule(alg, w[pos], w[pos + 1])
        ]
        missing = [cw for cw, _ in children if cw not in cache]
        if missing:
            stack.extend(missing)
            continue
        combined: dict = {}
        for cw, coeff in children:
            for mono, c in cache[cw].items():
                s = combined.get(mono)
                s = coeff * c if s is None else s + coeff * c
                if s.is_zero():
                    combined.pop(mono, None)
                else:
                    combined[mono] = s
        cache[w] = combined
        stack.pop()
    return cache[word]


class UEAElement:
    """Linear combination of PBW monomials with Poly coefficients."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: LieAlgebra, terms=()):
        self.alg = alg
        clean: dict = {}
        for mono, coeff in dict(terms).items():
            if not isinstance(coeff, Poly):
                coeff = Poly.const(alg.ctx, coeff)
            if coeff.is_zero():
                continue
            clean[tuple(mono)] = coeff
        self.terms = clean

    @classmethod
    def _raw(cls, alg: LieAlgebra, terms: dict) -> "UEAElement":
        el = cls.__new__(cls)
        el.alg = alg
        el.terms = terms
        return el

    @classmethod
    def zero(cls, alg: LieAlgebra) -> "UEAElement":
        return cls._raw(alg, {})

    @classmethod
    def one(cls, alg: LieAlgebra) -> "UEAElement":
        return cls._raw(alg, {(0,) * alg.dim: Poly.const(alg.ctx, 1)})

    @classmethod
    def generator(cls, alg: LieAlgebra, name: str) -> "UEAElement":
        mono = [0] * alg.dim
        mono[alg.gen_index[name]] = 1
        return cls._raw(alg, {tuple(mono): Poly.const(alg.ctx, 1)})

    @classmethod
    def scalar(cls, alg: LieAlgebra, value: CoeffLike) -> "UEAElement":
        coeff = value if isinstance(value, Poly) else Poly.const(alg.ctx, value)
        if coeff.is_zero():
            return cls.zero(alg)
        return cls._raw(alg, {(0,) * alg.dim: coeff})

    # -- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def _check(self, other: "UEAElement") -> None:
        if self.alg is not other.alg and not (
            self.alg.same_structure(other.alg)
        ):
            raise ValueError("elements from different algebras")

    def __eq__(self, other) -> bool:
        if not isinstance(other, UEAElement):
            return NotImplemented
        return self.alg.name == other.alg.name and self.terms == other.terms

    def __hash__(self):
        raise TypeError("UEAElement is not hashable")

    # -- linear operations ------------------------------------------------

    def __add__(self, other: "UEAElement") -> "UEAElement":
        self._check(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = s
        return UEAElement._raw(self.alg, out)

    def __sub__(self, other: "UEAElement") -> "UEAElement":
        return self + (-other)

    def __neg__(self) -> "UEAElement":
        return UEAElement._raw(self.alg, {m: -c for m, c in self.terms.items()})

    def smul(self, value: CoeffLike) -> "UEAElement":
        """Multiply by a scalar (rational or coefficient polynomial)."""
        coeff = value if isinstance(value, Poly) else Poly.const(self.alg.ctx, value)
        if coeff.is_zero():
            return UEAElement.zero(self.alg)
        out = {}
        for mono, c in self.terms.items():
            p = c * coeff
            if not p.is_zero():
                out[mono] = p
        return UEAElement._raw(self.alg, out)

    # -- multiplicative operations ---------------------------------------

    def __mul__(self, other: "UEAElement") -> "UEAElement":
        """Associative product, normal-ordering the concatenated words."""
        self._check(other)
        alg = self.alg
        out: dict = {}
        words_other = [
            (monomial_to_word(m), c) for m, c in other.terms.items()
        ]
        for m1, c1 in self.terms.items():
            w1 = monomial_to_word(m1)
            for w2, c2 in words_other:
                coeff = c1 * c2
                for mono, c in normal_form_word(alg, w1 + w2).items():
                    s = out.get(mono)
                    p = coeff * c
                    s = p if s is None else s + p
                    if s.is_zero():
                        out.pop(mono, None)
                    else:
                        out[mono] = s
        return UEAElement._raw(alg, out)

    def __pow__(self, n: int) -> "UEAElement":
        if n < 0:
            raise ValueError("negative powers are not defined in the UEA")
        result = UEAElement.one(self.alg)
        for _ in range(n):
            result = result * self
        return result

    def commutator(self, other: "UEAElement") -> "UEAElement":
        return self * other - other * self

    # -- display ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"UEAElement({format_element(self)!r})"

    def __str__(self) -> str:
        return format_element(self)


def normal_form(alg: LieAlgebra, words: Iterable[tuple]) -> UEAElement:
    """Normal form of a linear combination of words.

    ``words`` yields (letters, coeff) pairs where letters is a sequence of
    generator indices or names and coeff is a Poly / rational.
    """
    out: dict = {}
    for letters, coeff in words:
        idx = tuple(
            g if isinstance(g, int) else alg.gen_index[g] for g in letters
        )
        if not isinstance(coeff, Poly):
            coeff = Poly.const(alg.ctx, coeff)
        for mono, c in normal_form_word(alg, idx).items():
            s = out.get(mono)
            p = coeff * c
            s = p if s is None else s + p
            if s.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = s
    return UEAElement._raw(alg, out)


def product(a: UEAElement, b: UEAElement) -> UEAElement:
    return a * b


def commutator(a: UEAElement, b: UEAElement) -> UEAElement:
    return a * b - b * a


def is_central(alg: LieAlgebra, x: UEAElement):
    """True iff x commutes with every basis generator.

    Returns (True, None) or (False, first-witness-generator-name).
    """
    for g in alg.generators:
        if not x.commutator(UEAElement.generator(alg, g.name)).is_zero():
            return False, g.name
    return True, None


def format_element(el: UEAElement) -> str:
    """Canonical text form: descending graded-lex monomial order."""
    if el.is_zero():
        return "0"
    alg = el.alg
    parts = []
    for mono in sorted(el.terms, key=grlex_key, reverse=True):
        coeff = el.terms[mono]
        factors = []
        for g, e in enumerate(mono):
            if e == 0:
                continue
            name = alg.generators[g].name
            factors.append(name if e == 1 else f"{name}^{e}")
        body = "*".join(factors)
        ctext = format_poly(coeff)
        if not body:
            text = f"({ctext})" if " " in ctext else ctext
        elif ctext == "1":
            text = body
        elif ctext == "-1":
            text = f"-{body}"
        elif " " in ctext:
            text = f"({ctext})*{body}"
        else:
            text = f"{ctext}*{body}"
        if not parts:
            parts.append(text)
        elif text.startswith("-"):
            parts.append("- " + text[1:])
        else:
            parts.append("+ " + text)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Named elements: the W vector, scalar products and Casimirs per algebra
# family.  Expressions are taken literally left-to-right and then
# normal-ordered.
# ---------------------------------------------------------------------------

_W_PATTERN = {
    # W_i = P_a K_b - P_b K_a with (i, a, b)
    1: (3, 2),
    2: (1, 3),
    3: (2, 1),
}


def _gen(alg, name):
    return UEAElement.generator(alg, name)


def _w_flat(alg: LieAlgebra, i: int) -> UEAElement:
    a, b = _W_PATTERN[i]
    return _gen(alg, f"P{a}") * _gen(alg, f"K{b}") - _gen(alg, f"P{b}") * _gen(
        alg, f"K{a}"
    )


def _dot(alg: LieAlgebra, left: Sequence[UEAElement], right: Sequence[UEAElement]):
    out = UEAElement.zero(alg)
    for x, y in zip(left, right):
        out = out + x * y
    return out


def _family(alg: LieAlgebra) -> str:
    fam = alg.metadata.get("family", alg.name)
    if fam in ("galilei", "galilei_ext"):
        return "galilei"
    if fam in ("poincare", "euclid4"):
        return "poincare"
    if fam == "newton_hooke":
        return "newton_hooke"
    raise KeyError(f"no named elements for algebra {alg.name!r}")


def named_element(alg: LieAlgebra, key: str) -> UEAElement:
    """Catalog of composite elements: W1..W3, JP, JW, KP, K2, C1, C2."""
    fam = _family(alg)

    def w(i: int) -> UEAElement:
        flat = _w_flat(alg, i)
        if fam == "poincare":
            omega = Poly.var(alg.ctx, "omega")
            return _gen(alg, "H").smul(omega) * _gen(alg, f"J{i}") + flat
        return flat

    if key in ("W1", "W2", "W3"):
        return w(int(key[1]))
    js = [_gen(alg, f"J{i}") for i in (1, 2, 3)]
    ps = [_gen(alg, f"P{i}") for i in (1, 2, 3)]
    ks = [_gen(alg, f"K{i}") for i in (1, 2, 3)]
    if key == "JP":
        return _dot(alg, js, ps)
    if key == "JW":
        return _dot(alg, js, [w(1), w(2), w(3)])
    if key == "KP":
        return _dot(alg, ks, ps)
    if key == "K2":
        return _dot(alg, ks, ks)
    if key == "C1":
        p2 = _dot(alg, ps, ps)
        if fam == "poincare":
            return p2 + (_gen(alg, "H") ** 2).smul(Poly.var(alg.ctx, "omega"))
        if fam == "newton_hooke":
            return p2 + _dot(alg, ks, ks).smul(Poly.var(alg.ctx, "kappa"))
        return p2
    if key == "C2":
        w2 = _dot(alg, [w(1), w(2), w(3)], [w(1), w(2), w(3)])
        if fam == "poincare":
            return w2 + (_dot(alg, js, ps) ** 2).smul(Poly.var(alg.ctx, "omega"))
        return w2
    raise KeyError(f"unknown named element {key!r}")


NAMED_ELEMENT_KEYS = ("W1", "W2", "W3", "JP", "JW", "KP", "K2", "C1", "C2")


def verify_identity(alg: LieAlgebra, lhs: UEAElement, rhs: UEAElement):
    """Exact PBW equality check; returns (passed, residual)."""
    residual = lhs - rhs
    return residual.is_zero(), residual
