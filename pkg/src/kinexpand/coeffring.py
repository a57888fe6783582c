"""Exact coefficient arithmetic: rationals and sparse multivariate polynomials.

Coefficients are sparse polynomials over the rationals in a fixed, ordered set
of named commuting parameters (a ``ParamContext``).  A polynomial maps
exponent tuples to ``fractions.Fraction`` values; zero coefficients are never
stored.  One parameter may be designated the *contraction parameter* (``eps``
by convention): it is the only slot where negative exponents are allowed,
giving Laurent behaviour for Inonu--Wigner style limits.

Terms are ordered graded-lexicographically on exponent vectors, which fixes a
canonical serialisation (see :func:`format_poly` / :func:`parse_poly`).
All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction
Exponents = tuple  # one int per context parameter

ScalarLike = Union[int, Fraction]


class ContextMismatchError(ValueError):
    """Raised when polynomials from different parameter contexts are mixed."""


class DivergenceError(ArithmeticError):
    """A contraction limit hit a negative power of the contraction parameter.

    ``power`` carries the most negative exponent encountered.
    """

    def __init__(self, power: int):
        super().__init__(f"divergent term with contraction-parameter power {power}")
        self.power = power


class ParamContext:
    """An ordered, immutable set of parameter names.

    Exponent tuples of every :class:`Poly` in this context are indexed by the
    declared order.  ``laurent`` names the single parameter allowed to carry
    negative exponents (or None).
    """

    __slots__ = ("names", "index", "laurent", "_laurent_idx")

    def __init__(self, names: Iterable[str], laurent: str | None = None):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate parameter names")
        self.index = {n: i for i, n in enumerate(self.names)}
        if laurent is not None and laurent not in self.index:
            raise ValueError(f"laurent parameter {laurent!r} not declared")
        self.laurent = laurent
        self._laurent_idx = self.index[laurent] if laurent is not None else -1

    def __len__(self) -> int:
        return len(self.names)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ParamContext)
            and self.names == other.names
            and self.laurent == other.laurent
        )

    def __hash__(self) -> int:
        return hash((self.names, self.laurent))

    def __repr__(self) -> str:
        return f"ParamContext({self.names!r}, laurent={self.laurent!r})"

    def zero_exps(self) -> Exponents:
        return (0,) * len(self.names)


# Parameters used throughout the kinematical computations: expansion constants
# a1, a2; worldline-space curvature omega; spacetime curvature kappa; mass m
# and central-generator scalar xi; Casimir scalars c1, c2; contraction
# parameter eps.
KINEMATIC_PARAMS = ("a1", "a2", "omega", "kappa", "m", "xi", "c1", "c2", "eps")

KINEMATIC_CONTEXT = ParamContext(KINEMATIC_PARAMS, laurent="eps")


def grlex_key(exps: Exponents):
    """Graded-lexicographic sort key: total degree first, then lex."""
    return (sum(exps), exps)


class Poly:
    """Sparse multivariate polynomial with exact rational coefficients.

    ``terms`` maps exponent tuples to nonzero Fractions.  Use the
    constructors :meth:`const`, :meth:`var` and the operators; the raw
    constructor normalises (drops zeros, coerces to Fraction) and validates
    the negative-exponent rule.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: ParamContext, terms: Mapping[Exponents, ScalarLike] = ()):
        self.ctx = ctx
        clean: dict[Exponents, Fraction] = {}
        n = len(ctx)
        for exps, coeff in dict(terms).items():
            c = Fraction(coeff)
            if c == 0:
                continue
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent tuple {exps} does not fit context of size {n}")
            for i, e in enumerate(exps):
                if e < 0 and i != ctx._laurent_idx:
                    raise ValueError(
                        f"negative exponent for parameter {ctx.names[i]!r}"
                    )
            clean[exps] = c
        self.terms = clean

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, ctx: ParamContext, value: ScalarLike) -> "Poly":
        return cls(ctx, {ctx.zero_exps(): Fraction(value)})

    @classmethod
    def var(cls, ctx: ParamContext, name: str, power: int = 1) -> "Poly":
        exps = [0] * len(ctx)
        exps[ctx.index[name]] = power
        return cls(ctx, {tuple(exps): Fraction(1)})

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ctx.zero_exps() in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (raises if non-constant)."""
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms[self.ctx.zero_exps()]

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def degree_in(self, name: str) -> int:
        i = self.ctx.index[name]
        return max((e[i] for e in self.terms), default=0)

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.ctx != other.ctx:
            raise ContextMismatchError("polynomials from different parameter contexts")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, 0) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return Poly._raw(self.ctx, out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly._raw(self.ctx, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly._raw(self.ctx, out)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial powers are not supported")
        result = Poly.const(self.ctx, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, value: ScalarLike) -> "Poly":
        v = Fraction(value)
        if v == 0:
            return Poly._raw(self.ctx, {})
        return Poly._raw(self.ctx, {e: c * v for e, c in self.terms.items()})

    @classmethod
    def _raw(cls, ctx: ParamContext, terms: dict) -> "Poly":
        # internal: terms already normalised
        p = cls.__new__(cls)
        p.ctx = ctx
        p.terms = terms
        return p

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ctx, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- substitution and limits -----------------------------------------

    def substitute(self, assignment: Mapping[str, Union[ScalarLike, "Poly"]]) -> "Poly":
        """Replace assigned parameters by rationals or polynomials.

        A ring homomorphism: acts term by term, multiplying out the assigned
        values at each term's exponent.  Unassigned parameters are kept.
        Assigning the laurent parameter requires all its exponents to be
        non-negative unless the value is invertible-free (rationals only,
        nonzero, handled via Fraction powers).
        """
        if not assignment:
            return self
        ctx = self.ctx
        idx_val: dict[int, Poly] = {}
        for name, value in assignment.items():
            if name not in ctx.index:
                raise ContextMismatchError(f"unknown parameter {name!r}")
            if isinstance(value, Poly):
                if value.ctx != ctx:
                    raise ContextMismatchError("assignment value from different context")
                idx_val[ctx.index[name]] = value
            else:
                idx_val[ctx.index[name]] = Poly.const(ctx, value)
        out = Poly._raw(ctx, {})
        for exps, coeff in self.terms.items():
            rest = list(exps)
            factor = Poly.const(ctx, coeff)
            for i, value in idx_val.items():
                e = exps[i]
                if e == 0:
                    continue
                rest[i] = 0
                if e < 0:
                    # negative powers only substitutable by nonzero rationals
                    v = value.constant_value()
                    if v == 0:
                        raise ZeroDivisionError(
                            "substituting 0 into a negative power of "
                            f"{ctx.names[i]!r}"
                        )
                    factor = factor.scale(v ** e)
                else:
                    factor = factor * value ** e
            out = out + factor * Poly._raw(ctx, {tuple(rest): Fraction(1)})
        return out

    def substitute_power(self, name: str, power: int, value: ScalarLike) -> "Poly":
        """Reduce every occurrence of ``name ** power`` to ``value``.

        Exponents ``e`` of ``name`` become ``e mod power`` with the
        coefficient multiplied by ``value ** (e // power)``.  Used for
        constraint-aware substitution such as ``a1^2 -> -1``.
        """
        if power <= 0:
            raise ValueError("power must be positive")
        i = self.ctx.index[name]
        v = Fraction(value)
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            q, r = divmod(exps[i], power)
            if q:
                coeff = coeff * v ** q
                exps = exps[:i] + (r,) + exps[i + 1 :]
            if coeff:
                s = out.get(exps, 0) + coeff
                if s:
                    out[exps] = s
                else:
                    out.pop(exps, None)
        return Poly._raw(self.ctx, out)

    def limit_contraction(self) -> "Poly":
        """Send the contraction parameter to zero.

        Terms with positive contraction power are dropped; any term with a
        negative power raises :class:`DivergenceError` carrying the most
        negative power present.
        """
        ctx = self.ctx
        i = ctx._laurent_idx
        if i < 0:
            raise ContextMismatchError("context has no contraction parameter")
        worst = min((e[i] for e in self.terms), default=0)
        if worst < 0:
            raise DivergenceError(worst)
        out = {e: c for e, c in self.terms.items() if e[i] == 0}
        return Poly._raw(ctx, out)


# Operation-style aliases used by callers that prefer free functions.

def poly_add(a: Poly, b: Poly) -> Poly:
    return a + b


def poly_mul(a: Poly, b: Poly) -> Poly:
    return a * b


def substitute(p: Poly, assignment: Mapping[str, Union[ScalarLike, Poly]]) -> Poly:
    return p.substitute(assignment)


def limit_eps_zero(p: Poly) -> Poly:
    return p.limit_contraction()


# ---------------------------------------------------------------------------
# Text grammar
#
#   poly    := term (('+' | '-') term)*
#   term    := ['-'] factor ('*' factor)*
#   factor  := rational | ident ['^' integer] | '(' poly ')'
#   rational:= integer ['/' integer]
#
# Canonical emission: terms in descending graded-lex order, explicit '*'
# between factors, '^' only for powers != 1, e.g. ``-4*a2^2*c1*c2``.
# ---------------------------------------------------------------------------


class PolyParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("ident", text[i:j], i))
            i = j
        elif ch in "+-*/^()":
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise PolyParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _PolyParser:
    def __init__(self, text: str, ctx: ParamContext):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ctx = ctx

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str):
        tok = self.next()
        if tok[0] != kind:
            raise PolyParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def parse(self) -> Poly:
        p = self.parse_poly()
        tok = self.peek()
        if tok[0] != "end":
            raise PolyParseError(f"trailing input {tok[1]!r}", tok[2])
        return p

    def parse_poly(self) -> Poly:
        p = self.parse_term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            q = self.parse_term()
            p = p + q if op == "+" else p - q
        return p

    def parse_term(self) -> Poly:
        sign = 1
        while self.peek()[0] in ("+", "-"):
            if self.next()[0] == "-":
                sign = -sign
        p = self.parse_factor()
        while self.peek()[0] == "*":
            self.next()
            p = p * self.parse_factor()
        return p.scale(sign)

    def parse_factor(self) -> Poly:
        tok = self.next()
        if tok[0] == "int":
            num = int(tok[1])
            if self.peek()[0] == "/":
                self.next()
                den = int(self.expect("int")[1])
                return Poly.const(self.ctx, Fraction(num, den))
            return Poly.const(self.ctx, num)
        if tok[0] == "ident":
            if tok[1] not in self.ctx.index:
                raise PolyParseError(f"unknown parameter {tok[1]!r}", tok[2])
            power = 1
            if self.peek()[0] == "^":
                self.next()
                neg = False
                if self.peek()[0] == "-":
                    self.next()
                    neg = True
                power = int(self.expect("int")[1])
                if neg:
                    power = -power
            return Poly.var(self.ctx, tok[1], power)
        if tok[0] == "(":
            p = self.parse_poly()
            self.expect(")")
            return p
        raise PolyParseError(f"unexpected token {tok[1]!r}", tok[2])


def parse_poly(text: str, ctx: ParamContext) -> Poly:
    """Parse the canonical polynomial grammar."""
    return _PolyParser(text, ctx).parse()


def _format_monomial(ctx: ParamContext, exps: Exponents, coeff: Fraction) -> str:
    """Unsigned monomial string; coeff must be positive."""
    factors = []
    if coeff != 1 or not any(exps):
        factors.append(str(coeff))
    for name, e in zip(ctx.names, exps):
        if e == 0:
            continue
        factors.append(name if e == 1 else f"{name}^{e}")
    return "*".join(factors)


def format_poly(p: Poly) -> str:
    """Canonical emission: descending graded-lex term order, explicit '*'."""
    if p.is_zero():
        return "0"
    out = []
    for exps in sorted(p.terms, key=grlex_key, reverse=True):
        coeff = p.terms[exps]
        mono = _format_monomial(p.ctx, exps, abs(coeff))
        if not out:
            out.append(mono if coeff > 0 else "-" + mono)
        else:
            out.append("+ " + mono if coeff > 0 else "- " + mono)
    return " ".join(out)
