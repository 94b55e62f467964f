"""Sparse multivariate polynomials over a finite field.

A polynomial is a dict from exponent tuples to nonzero field elements; the
tuple length s is fixed per polynomial.  Monomial orders compare exponent
tuples with t1 > t2 > ... > ts; grevlex is the default everywhere downstream.
"""

from __future__ import annotations

import itertools
import re
from typing import Iterable, Iterator, Sequence

from .gf import FieldElement, FiniteField

Exps = tuple  # exponent tuple, one entry per variable


class MonomialOrder:
    """One of lex, grlex, grevlex with the fixed precedence t1 > ... > ts."""

    def __init__(self, kind: str):
        if kind not in ("lex", "grlex", "grevlex"):
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind

    @property
    def is_graded(self) -> bool:
        return self.kind in ("grlex", "grevlex")

    def key(self, exps: Exps):
        """Sort key: bigger key means bigger monomial."""
        if self.kind == "lex":
            return exps
        if self.kind == "grlex":
            return (sum(exps), exps)
        return (sum(exps), tuple(-x for x in reversed(exps)))

    def neg_key(self, exps: Exps):
        """Key that sorts the other way round, for min-heaps of monomials."""
        if self.kind == "lex":
            return tuple(-x for x in exps)
        if self.kind == "grlex":
            return (-sum(exps), tuple(-x for x in exps))
        return (-sum(exps), tuple(reversed(exps)))

    def compare(self, a: Exps, b: Exps) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"MonomialOrder({self.kind!r})"


LEX = MonomialOrder("lex")
GRLEX = MonomialOrder("grlex")
GREVLEX = MonomialOrder("grevlex")

_ORDERS = {"lex": LEX, "grlex": GRLEX, "grevlex": GREVLEX}


def monomial_order(name) -> MonomialOrder:
    if isinstance(name, MonomialOrder):
        return name
    try:
        return _ORDERS[name]
    except KeyError:
        raise ValueError(f"unknown monomial order {name!r}") from None


def exp_divides(a: Exps, b: Exps) -> bool:
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def exp_lcm(a: Exps, b: Exps) -> Exps:
    return tuple(max(x, y) for x, y in zip(a, b))


def exp_mul(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a: Exps, b: Exps) -> Exps:
    return tuple(x - y for x, y in zip(a, b))


def default_names(s: int) -> tuple:
    return tuple(f"t{i+1}" for i in range(s))


class Polynomial:
    """Immutable-by-convention sparse polynomial in s variables."""

    __slots__ = ("field", "s", "terms", "names")

    def __init__(self, field: FiniteField, s: int, terms: dict, names=None):
        self.field = field
        self.s = s
        self.terms = {e: c for e, c in terms.items() if not c.is_zero}
        self.names = tuple(names) if names else None

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field, s, names=None):
        return cls(field, s, {}, names)

    @classmethod
    def constant(cls, field, s, c, names=None):
        if isinstance(c, int):
            c = field.from_int(c)
        return cls(field, s, {(0,) * s: c}, names)

    @classmethod
    def monomial(cls, field, s, exps, coeff=None, names=None):
        if coeff is None:
            coeff = field.one
        return cls(field, s, {tuple(exps): coeff}, names)

    @classmethod
    def variable(cls, field, s, i, names=None):
        exps = tuple(1 if j == i else 0 for j in range(s))
        return cls(field, s, {exps: field.one}, names)

    # ---- queries ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def leading(self, order: MonomialOrder):
        """(exponents, coefficient) of the leading term under order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def leading_monomial(self, order: MonomialOrder) -> Exps:
        return self.leading(order)[0]

    def constant_coefficient(self) -> FieldElement:
        return self.terms.get((0,) * self.s, self.field.zero)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    # ---- arithmetic ---------------------------------------------------

    def _names_with(self, other):
        return self.names or other.names

    def __add__(self, other):
        self._compat(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            cur = terms.get(e)
            terms[e] = c if cur is None else cur + c
        return Polynomial(self.field, self.s, terms, self._names_with(other))

    def __sub__(self, other):
        self._compat(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            cur = terms.get(e)
            terms[e] = -c if cur is None else cur - c
        return Polynomial(self.field, self.s, terms, self._names_with(other))

    def __neg__(self):
        return Polynomial(self.field, self.s, {e: -c for e, c in self.terms.items()}, self.names)

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return self.scale(other)
        self._compat(other)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = exp_mul(e1, e2)
                c = c1 * c2
                cur = terms.get(e)
                terms[e] = c if cur is None else cur + c
        return Polynomial(self.field, self.s, terms, self._names_with(other))

    def scale(self, c: FieldElement):
        if c.is_zero:
            return Polynomial.zero(self.field, self.s, self.names)
        return Polynomial(self.field, self.s, {e: c * x for e, x in self.terms.items()}, self.names)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(self.field, self.s, self.field.one, self.names)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic(self, order: MonomialOrder):
        if self.is_zero:
            return self
        _, c = self.leading(order)
        return self.scale(c.inverse())

    def _compat(self, other):
        if not isinstance(other, Polynomial):
            raise TypeError(f"cannot combine polynomial with {type(other).__name__}")
        if self.field != other.field or self.s != other.s:
            raise ValueError("polynomials over different rings")

    # ---- evaluation ---------------------------------------------------

    def evaluate(self, point: Sequence[FieldElement]) -> FieldElement:
        if len(point) != self.s:
            raise ValueError("point has wrong number of coordinates")
        field = self.field
        pows = [{0: field.one} for _ in range(self.s)]
        total = field.zero
        for e, c in self.terms.items():
            val = c
            for i, k in enumerate(e):
                if not k:
                    continue
                cache = pows[i]
                pk = cache.get(k)
                if pk is None:
                    pk = point[i] ** k
                    cache[k] = pk
                val = val * pk
            total = total + val
        return total

    # ---- comparison / display -----------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.s == other.s and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, self.s, frozenset(self.terms.items())))

    def __str__(self):
        return format_polynomial(self, GREVLEX)

    def __repr__(self):
        return f"Polynomial({self})"


def format_polynomial(poly: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    if poly.is_zero:
        return "0"
    names = poly.names or default_names(poly.s)
    field = poly.field
    parts = []
    for e in sorted(poly.terms, key=order.key, reverse=True):
        c = poly.terms[e]
        mono = "*".join(
            n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
        )
        cs = field.format_element(c)
        if not mono:
            piece = cs
        elif c == field.one:
            piece = mono
        elif "+" in cs or "-" in cs:
            piece = f"({cs})*{mono}"
        else:
            piece = f"{cs}*{mono}"
        parts.append(piece)
    return " + ".join(parts).replace("+ -", "- ")


# ---- division ---------------------------------------------------------


def divide(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder):
    """Multivariate division of f by an ordered list of divisors.

    Returns (quotients, remainder) with f = sum(q_i g_i) + r and no monomial
    of r divisible by any divisor's leading monomial.
    """
    order = monomial_order(order)
    divisors = [g for g in divisors]
    if any(g.is_zero for g in divisors):
        raise ZeroDivisionError("division by the zero polynomial")
    field = f.field
    leads = [g.leading(order) for g in divisors]
    quots = [dict() for _ in divisors]
    rem: dict = {}
    work = dict(f.terms)
    while work:
        e = max(work, key=order.key)
        c = work.pop(e)
        for i, (le, lc) in enumerate(leads):
            if exp_divides(le, e):
                shift = exp_sub(e, le)
                factor = c / lc
                cur = quots[i].get(shift)
                quots[i][shift] = factor if cur is None else cur + factor
                for ge, gc in divisors[i].terms.items():
                    if ge == le:
                        continue
                    te = exp_mul(shift, ge)
                    delta = factor * gc
                    cur = work.get(te, field.zero)
                    nxt = cur - delta
                    if nxt.is_zero:
                        work.pop(te, None)
                    else:
                        work[te] = nxt
                break
        else:
            rem[e] = c
    names = f.names
    return (
        [Polynomial(field, f.s, q, names) for q in quots],
        Polynomial(field, f.s, rem, names),
    )


# ---- monomial enumeration ---------------------------------------------


def monomials_up_to_degree(s: int, d: int) -> Iterator[Exps]:
    """All exponent tuples of total degree <= d, by degree then lex."""
    for k in range(d + 1):
        yield from monomials_of_degree(s, k)


def monomials_of_degree(s: int, d: int) -> Iterator[Exps]:
    """Exponent tuples of total degree exactly d, in lex order."""
    if s == 0:
        if d == 0:
            yield ()
        return
    if s == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(s - 1, d - first):
            yield (first,) + rest


def squarefree_monomials(s: int, d: int, exact: bool = False) -> Iterator[Exps]:
    """Squarefree exponent tuples of degree <= d (or exactly d)."""
    lo = d if exact else 0
    for k in range(lo, d + 1):
        for pos in itertools.combinations(range(s), k):
            e = [0] * s
            for i in pos:
                e[i] = 1
            yield tuple(e)


# ---- parsing ----------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*([0-9]+|[A-Za-z][A-Za-z0-9]*|\^|\*|\+|\-|\(|\))")


class _Parser:
    def __init__(self, text: str, field: FiniteField, names: Sequence[str]):
        self.field = field
        self.names = tuple(names)
        self.s = len(self.names)
        self.symbols = sorted(self.names, key=len, reverse=True)
        self.tokens = self._tokenize(text)
        self.pos = 0

    def _tokenize(self, text):
        tokens = []
        i = 0
        while i < len(text):
            m = _TOKEN_RE.match(text, i)
            if not m:
                raise ValueError(f"bad character {text[i]!r} in {text!r}")
            tok = m.group(1)
            i = m.end()
            if tok[0].isalpha():
                tokens.extend(self._split_symbols(tok, text))
            else:
                tokens.append(tok)
        return tokens

    def _split_symbols(self, run, text):
        # a run of letters/digits may be several juxtaposed symbols: t1t2 -> t1, t2
        out = []
        while run:
            for sym in self.symbols:
                if run.startswith(sym):
                    out.append(sym)
                    run = run[len(sym):]
                    break
            else:
                if run[0] == "a" and self.field.e > 1:
                    out.append("a")
                    run = run[1:]
                elif run[0].isdigit():
                    m = re.match(r"[0-9]+", run)
                    out.append(m.group(0))
                    run = run[m.end():]
                else:
                    raise ValueError(f"unknown symbol near {run!r} in {text!r}")
        return out

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        poly = self.sum()
        if self.peek() is not None:
            raise ValueError(f"trailing input at token {self.peek()!r}")
        return poly

    def sum(self) -> Polynomial:
        sign = 1
        while self.peek() in ("+", "-"):
            if self.next() == "-":
                sign = -sign
        poly = self.term()
        if sign < 0:
            poly = -poly
        while self.peek() in ("+", "-"):
            sign = 1
            while self.peek() in ("+", "-"):
                if self.next() == "-":
                    sign = -sign
            t = self.term()
            poly = poly - t if sign < 0 else poly + t
        return poly

    def term(self) -> Polynomial:
        poly = self.factor()
        while True:
            tok = self.peek()
            if tok == "*":
                self.next()
                poly = poly * self.factor()
            elif tok is not None and tok not in ("+", "-", ")", "^"):
                # implicit product by juxtaposition
                poly = poly * self.factor()
            else:
                return poly

    def factor(self) -> Polynomial:
        tok = self.next()
        if tok is None:
            raise ValueError("unexpected end of input")
        if tok == "(":
            base = self.sum()
            if self.next() != ")":
                raise ValueError("missing closing parenthesis")
        elif tok.isdigit():
            base = Polynomial.constant(self.field, self.s, int(tok), self.names or None)
        elif tok == "a" and self.field.e > 1:
            base = Polynomial.constant(self.field, self.s, self.field.gen, self.names or None)
        elif tok in self.names:
            base = Polynomial.variable(self.field, self.s, self.names.index(tok), self.names)
        else:
            raise ValueError(f"unexpected token {tok!r}")
        if self.peek() == "^":
            self.next()
            exp = self.next()
            if exp is None or not exp.isdigit():
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** int(exp)
        return base


def parse_polynomial(text: str, field: FiniteField, names: Sequence[str]) -> Polynomial:
    """Parse a polynomial literal over the given variable names.

    Names default to t1..ts elsewhere; the extension generator is spelled
    ``a`` and integer literals are taken mod p.
    """
    return _Parser(text, field, names).parse()


def parse_polynomials(text: str, field: FiniteField, names: Sequence[str]) -> list:
    """Parse a semicolon-separated list of polynomial literals."""
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if chunk:
            out.append(parse_polynomial(chunk, field, names))
    return out
