"""Buchberger's algorithm, normal forms, footprints and degrees.

Everything here is aimed at zero-dimensional ideals: the footprint (the set
of standard monomials, i.e. monomials outside the initial ideal) is finite
exactly when the initial ideal contains a pure power of every variable, and
its size is the degree of the quotient ring.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .gf import FiniteField
from .mpoly import (
    GREVLEX,
    Exps,
    MonomialOrder,
    Polynomial,
    divide,
    exp_divides,
    exp_lcm,
    exp_mul,
    exp_sub,
    monomial_order,
)


class GroebnerBasis:
    """A monic reduced Groebner basis together with its order.

    Generators are stored monic with strictly decreasing leading monomials.
    An empty generator list represents the zero ideal; the unit ideal is
    represented by the single generator 1.
    """

    def __init__(self, field: FiniteField, s: int, order: MonomialOrder,
                 generators: Sequence[Polynomial]):
        self.field = field
        self.s = s
        self.order = monomial_order(order)
        self.generators = tuple(
            sorted(generators, key=lambda g: self.order.key(g.leading_monomial(self.order)),
                   reverse=True)
        )
        self.initial_gens = tuple(g.leading_monomial(self.order) for g in self.generators)
        self._footprint = None

    @property
    def is_zero_ideal(self) -> bool:
        return not self.generators

    @property
    def is_unit_ideal(self) -> bool:
        return any(not any(e) for e in self.initial_gens)

    @property
    def zero_dimensional(self) -> bool:
        """Syntactic test: every variable has a pure power among the leads."""
        if self.is_unit_ideal:
            return True
        for i in range(self.s):
            if not any(e[i] > 0 and sum(e) == e[i] for e in self.initial_gens):
                return False
        return True

    def pure_power_bounds(self) -> list:
        """For each variable, the least pure-power exponent among the leads."""
        bounds = []
        for i in range(self.s):
            cands = [e[i] for e in self.initial_gens if e[i] > 0 and sum(e) == e[i]]
            if not cands:
                raise ValueError("ideal is not zero-dimensional (no pure power "
                                 f"of variable {i + 1} in the initial ideal)")
            bounds.append(min(cands))
        return bounds

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return (self.field == other.field and self.s == other.s
                and self.order == other.order and self.generators == other.generators)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"GroebnerBasis[{self.order.kind}]({gens})"


def _reduce_full(terms: dict, gens: Sequence[Polynomial], leads, order, field) -> dict:
    """Full remainder of the polynomial given by `terms` modulo gens.

    The pending terms sit in a dict; a lazy heap picks the largest remaining
    monomial without rescanning the whole dict on every step.  Over a prime
    field the whole computation runs on plain integer residues.
    """
    import heapq

    if field.e == 1:
        return _reduce_full_prime(terms, gens, leads, order, field)
    neg_key = order.neg_key
    work = dict(terms)
    heap = [(neg_key(e), e) for e in work]
    heapq.heapify(heap)
    rem: dict = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = work.pop(e, None)
        if c is None:
            continue  # stale heap entry, term already cancelled
        for g, (le, lc) in zip(gens, leads):
            if exp_divides(le, e):
                shift = exp_sub(e, le)
                factor = c / lc
                for ge, gc in g.terms.items():
                    if ge == le:
                        continue
                    te = exp_mul(shift, ge)
                    cur = work.get(te)
                    if cur is None:
                        work[te] = -(factor * gc)
                        heapq.heappush(heap, (neg_key(te), te))
                    else:
                        nxt = cur - factor * gc
                        if nxt.is_zero:
                            del work[te]
                        else:
                            work[te] = nxt
                break
        else:
            rem[e] = c
    return rem


def _reduce_full_prime(terms: dict, gens, leads, order, field) -> dict:
    """Same reduction, but with coefficients as ints mod p."""
    import heapq

    p = field.p
    neg_key = order.neg_key
    packed = []
    for g, (le, lc) in zip(gens, leads):
        inv_lc = pow(lc.coeffs[0], p - 2, p)
        tail = [(ge, gc.coeffs[0]) for ge, gc in g.terms.items() if ge != le]
        packed.append((le, inv_lc, tail))
    work = {e: c.coeffs[0] for e, c in terms.items()}
    heap = [(neg_key(e), e) for e in work]
    heapq.heapify(heap)
    rem: dict = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = work.pop(e, None)
        if c is None:
            continue
        for le, inv_lc, tail in packed:
            if exp_divides(le, e):
                shift = exp_sub(e, le)
                factor = c * inv_lc % p
                for ge, gc in tail:
                    te = exp_mul(shift, ge)
                    cur = work.get(te)
                    if cur is None:
                        work[te] = -factor * gc % p
                        heapq.heappush(heap, (neg_key(te), te))
                    else:
                        nxt = (cur - factor * gc) % p
                        if nxt:
                            work[te] = nxt
                        else:
                            del work[te]
                break
        else:
            rem[e] = c
    return {e: field.element((c,)) for e, c in rem.items()}


def normal_form(f: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of f on division by the (reduced) basis; canonical coset rep."""
    if gb.is_zero_ideal:
        return f
    leads = [g.leading(gb.order) for g in gb.generators]
    rem = _reduce_full(f.terms, gb.generators, leads, gb.order, gb.field)
    return Polynomial(gb.field, gb.s, rem, f.names)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    ef, cf = f.leading(order)
    eg, cg = g.leading(order)
    l = exp_lcm(ef, eg)
    mf = Polynomial.monomial(f.field, f.s, exp_sub(l, ef), cf.inverse())
    mg = Polynomial.monomial(g.field, g.s, exp_sub(l, eg), cg.inverse())
    return mf * f - mg * g


def buchberger(gens: Iterable[Polynomial], order=GREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis by Buchberger's algorithm.

    Pair selection is the normal strategy: least lcm degree first, ties by
    the lex order on pair indices.  Pair bookkeeping follows Gebauer and
    Moller: the coprime-lead and chain criteria prune pairs on insertion,
    and generators whose lead becomes divisible by a newer lead stop
    spawning pairs (they stay available as reducers).
    """
    order = monomial_order(order)
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        raise ValueError("no nonzero generators")
    field = gens[0].field
    s = gens[0].s

    basis: list = []
    leads: list = []
    alive: list = []
    pairs: set = set()

    def add_generator(h: Polynomial):
        k = len(basis)
        basis.append(h)
        tk = h.leading_monomial(order)
        leads.append(h.leading(order))
        live = [i for i in range(k) if alive[i]]
        lcms = {i: exp_lcm(leads[i][0], tk) for i in live}
        # chain criterion among the new pairs: drop (i,k) when some other
        # new pair's lcm strictly divides its lcm
        kept = [
            i for i in live
            if not any(
                j != i and lcms[j] != lcms[i] and exp_divides(lcms[j], lcms[i])
                for j in live
            )
        ]
        # group equal lcms: one survivor per lcm, none if a coprime pair hits it
        groups: dict = {}
        for i in kept:
            groups.setdefault(lcms[i], []).append(i)
        for l, idxs in groups.items():
            if any(exp_mul(leads[i][0], tk) == l for i in idxs):
                continue
            pairs.add((idxs[0], k))
        # chain criterion against the old pairs
        for (i, j) in list(pairs):
            if j == k:
                continue
            l = exp_lcm(leads[i][0], leads[j][0])
            if (exp_divides(tk, l)
                    and exp_lcm(leads[i][0], tk) != l
                    and exp_lcm(leads[j][0], tk) != l):
                pairs.discard((i, j))
        for i in range(k):
            if alive[i] and exp_divides(tk, leads[i][0]) and leads[i][0] != tk:
                alive[i] = False
        alive.append(True)

    seeds = []
    for g in gens:
        g = g.monic(order)
        if g not in seeds:
            seeds.append(g)
    for g in seeds:
        add_generator(g)

    def pair_key(pair):
        i, j = pair
        return (sum(exp_lcm(leads[i][0], leads[j][0])), i, j)

    while pairs:
        i, j = min(pairs, key=pair_key)
        pairs.remove((i, j))
        sp = s_polynomial(basis[i], basis[j], order)
        rem = _reduce_full(sp.terms, basis, leads, order, field)
        if rem:
            h = Polynomial(field, s, rem).monic(order)
            add_generator(h)
            if not any(leads[-1][0]):
                break  # reached the unit ideal
    return _interreduce(basis, order, field, s)


def _interreduce(basis, order, field, s) -> GroebnerBasis:
    # minimalize: drop generators whose lead is divisible by another lead
    basis = sorted(basis, key=lambda g: order.key(g.leading_monomial(order)))
    keep = []
    for g in basis:
        e = g.leading_monomial(order)
        if not any(exp_divides(h.leading_monomial(order), e) for h in keep):
            keep.append(g)
    # reduce each generator's tail against the others
    changed = True
    while changed:
        changed = False
        for idx in range(len(keep)):
            others = keep[:idx] + keep[idx + 1:]
            leads = [g.leading(order) for g in others]
            rem = _reduce_full(keep[idx].terms, others, leads, order, field)
            h = Polynomial(field, s, rem).monic(order)
            if h.terms != keep[idx].terms:
                keep[idx] = h
                changed = True
    return GroebnerBasis(field, s, order, keep)


# ---- footprints and degrees -------------------------------------------


class Footprint:
    """The finite set of standard monomials of a zero-dimensional ideal."""

    def __init__(self, monomials: Sequence[Exps], order: MonomialOrder):
        self.order = order
        self.monomials = tuple(sorted(monomials, key=order.key))

    def __len__(self):
        return len(self.monomials)

    def __iter__(self):
        return iter(self.monomials)

    def up_to_degree(self, d: int) -> list:
        return [e for e in self.monomials if sum(e) <= d]

    def of_degree(self, d: int) -> list:
        return [e for e in self.monomials if sum(e) == d]

    def max_degree(self) -> int:
        return max((sum(e) for e in self.monomials), default=0)


def standard_monomials(gb: GroebnerBasis) -> Footprint:
    """Footprint of a zero-dimensional ideal, cached on the basis."""
    if gb._footprint is not None:
        return gb._footprint
    if gb.is_unit_ideal:
        gb._footprint = Footprint((), gb.order)
        return gb._footprint
    bounds = gb.pure_power_bounds()
    leads = [e for e in gb.initial_gens if any(e)]
    monos = [
        e for e in itertools.product(*(range(b) for b in bounds))
        if not any(exp_divides(l, e) for l in leads)
    ]
    gb._footprint = Footprint(monos, gb.order)
    return gb._footprint


def affine_hilbert_function(gb: GroebnerBasis, d: int) -> int:
    """Number of standard monomials of total degree at most d."""
    return len(standard_monomials(gb).up_to_degree(d))


def quotient_degree(gb: GroebnerBasis) -> int:
    """deg of the quotient ring = footprint size = number of points for I(X)."""
    return len(standard_monomials(gb))


def regularity_index(gb: GroebnerBasis) -> int:
    """Least d with H(d) equal to the degree; the max footprint degree."""
    return standard_monomials(gb).max_degree()


def monomial_ideal_degree(initial_gens: Sequence[Exps], extra: Sequence[Exps], s: int) -> int:
    """Degree of S/(M + N) for monomial ideals given by exponent tuples.

    Counts, by direct sieve, monomials in the box bounded by the pure powers
    that are divisible by no generator.  Raises if some variable has no pure
    power among the combined generators (the count would be infinite).
    """
    gens = [tuple(e) for e in initial_gens] + [tuple(e) for e in extra]
    if any(not any(e) for e in gens):
        return 0
    bounds = []
    for i in range(s):
        cands = [e[i] for e in gens if e[i] > 0 and sum(e) == e[i]]
        if not cands:
            raise ValueError(f"no pure power of variable {i + 1}; degree is infinite")
        bounds.append(min(cands))
    count = 0
    for e in itertools.product(*(range(b) for b in bounds)):
        if not any(exp_divides(g, e) for g in gens):
            count += 1
    return count


def box_degree(box: Sequence[int], exps: Sequence[int]) -> int:
    """Degree of S/(t1^d1,...,ts^ds, t1^a1...ts^as) with 0 <= ai <= di.

    Equals prod(di) - prod(di - ai): the box minus the sub-box of multiples.
    """
    if len(box) != len(exps):
        raise ValueError("dimension mismatch")
    total = 1
    inner = 1
    for d, a in zip(box, exps):
        if a < 0 or a > d:
            raise ValueError("exponent outside the box")
        total *= d
        inner *= d - a
    return total - inner
