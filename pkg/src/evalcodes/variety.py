"""Point sets over finite fields and their vanishing ideals.

The vanishing ideal of a finite point set is interpolated directly with the
Buchberger-Moller algorithm, which yields the monic reduced Groebner basis
without ever running Buchberger on generators.  Going the other way, the
points of an affine variety cut out by polynomials G inside F_q^s are carried
by the ideal (t1^q-t1, ..., ts^q-ts, G), whose Groebner basis is again the
basis of the vanishing ideal of the zero set.
"""

from __future__ import annotations

import heapq
from typing import Iterable, Sequence

from .gf import FieldElement, FieldError, FiniteField, field_for_q, parse_element
from .groebner import GroebnerBasis, buchberger, quotient_degree, standard_monomials
from .mpoly import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    exp_divides,
    monomial_order,
)


class EmptyVarietyError(ValueError):
    pass


class PointSet:
    """An ordered tuple of distinct points of F_q^s (or representatives in P^(s-1))."""

    def __init__(self, field: FiniteField, s: int, points: Iterable, projective: bool = False,
                 label: str | None = None):
        self.field = field
        self.s = s
        pts = tuple(tuple(c) for c in points)
        for pt in pts:
            if len(pt) != s:
                raise ValueError("point with wrong number of coordinates")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be distinct")
        if projective:
            for pt in pts:
                nz = next((c for c in pt if not c.is_zero), None)
                if nz is None:
                    raise ValueError("projective point must be nonzero")
                if nz != field.one:
                    raise ValueError("projective representatives must have first "
                                     "nonzero coordinate 1")
        self.points = pts
        self.projective = projective
        self.label = label

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __repr__(self):
        tag = "projective " if self.projective else ""
        return f"PointSet({tag}{len(self.points)} points over F_{self.field.q})"


def torus(q_or_field, s: int) -> PointSet:
    """The affine torus T = (F_q^*)^s in its deterministic enumeration order."""
    field = q_or_field if isinstance(q_or_field, FiniteField) else field_for_q(q_or_field)
    pts = [()]
    for _ in range(s):
        pts = [p + (c,) for p in pts for c in field.elements(units_only=True)]
    return PointSet(field, s, pts, label=f"torus q={field.q} s={s}")


def affine_space(q_or_field, s: int) -> PointSet:
    """All of F_q^s in its deterministic enumeration order."""
    field = q_or_field if isinstance(q_or_field, FiniteField) else field_for_q(q_or_field)
    pts = [()]
    for _ in range(s):
        pts = [p + (c,) for p in pts for c in field.elements()]
    return PointSet(field, s, pts, label=f"affine q={field.q} s={s}")


class _PowerCache:
    """Per-point coordinate powers, grown on demand."""

    def __init__(self, point, field):
        self.point = point
        self.field = field
        self.pows = [[field.one, c] for c in point]

    def monomial(self, exps):
        val = self.field.one
        for i, k in enumerate(exps):
            if not k:
                continue
            col = self.pows[i]
            while len(col) <= k:
                col.append(col[-1] * col[1])
            val = val * col[k]
        return val


def vanishing_ideal(X: PointSet, order=GREVLEX) -> GroebnerBasis:
    """Monic reduced Groebner basis of I(X) by Buchberger-Moller interpolation.

    Monomials are visited in increasing order; each either joins the standard
    monomials (its evaluation vector is independent of theirs) or produces a
    basis element whose tail is supported on smaller standard monomials.
    """
    order = monomial_order(order)
    field = X.field
    s = X.s
    m = len(X)
    if m == 0:
        raise ValueError("empty point set has no interpolation basis")
    caches = [_PowerCache(pt, field) for pt in X]

    echelon = []   # (vector, pivot index, poly terms) with vector[pivot] == 1
    std = []
    gen_leads = []
    gens = []
    seen = set()
    start = (0,) * s
    heap = [(order.key(start), start)]
    seen.add(start)
    while heap:
        _, e = heapq.heappop(heap)
        if any(exp_divides(l, e) for l in gen_leads):
            continue
        vec = [c.monomial(e) for c in caches]
        poly = {e: field.one}
        for evec, pivot, epoly in echelon:
            c = vec[pivot]
            if c.is_zero:
                continue
            for i, v in enumerate(evec):
                if not v.is_zero:
                    vec[i] = vec[i] - c * v
            for te, tc in epoly.items():
                cur = poly.get(te, field.zero)
                nxt = cur - c * tc
                if nxt.is_zero:
                    poly.pop(te, None)
                else:
                    poly[te] = nxt
        pivot = next((i for i, v in enumerate(vec) if not v.is_zero), None)
        if pivot is None:
            gens.append(Polynomial(field, s, poly))
            gen_leads.append(e)
        else:
            inv = vec[pivot].inverse()
            vec = [v * inv for v in vec]
            poly = {te: tc * inv for te, tc in poly.items()}
            echelon.append((vec, pivot, poly))
            std.append(e)
            for i in range(s):
                child = tuple(x + (1 if j == i else 0) for j, x in enumerate(e))
                if child not in seen:
                    seen.add(child)
                    heapq.heappush(heap, (order.key(child), child))
    gb = GroebnerBasis(field, s, order, gens)
    assert quotient_degree(gb) == m
    return gb


def zero_set(F: Sequence[Polynomial], X: PointSet) -> PointSet:
    """Points of X where every polynomial of F vanishes, in X's order."""
    pts = [pt for pt in X if all(f.evaluate(pt).is_zero for f in F)]
    return PointSet(X.field, X.s, pts, projective=X.projective)


def count_zeros_degree_method(gbI: GroebnerBasis, F: Sequence[Polynomial]) -> int:
    """|V_X(F)| computed as deg S/(I(X) + (F)), without touching the points."""
    F = [f for f in F if not f.is_zero]
    if not F:
        return quotient_degree(gbI)
    gb = buchberger(list(gbI.generators) + F, gbI.order)
    if gb.is_unit_ideal:
        return 0
    return quotient_degree(gb)


def variety_ideal_nullstellensatz(G: Sequence[Polynomial], field: FiniteField, s: int,
                                  order=GREVLEX) -> GroebnerBasis:
    """Groebner basis of I(V(G)) over F_q, via the field equations.

    Adjoining t_i^q - t_i makes the ideal radical, so the result is the full
    vanishing ideal of the zero set inside F_q^s.  Raises EmptyVarietyError
    when the system has no solution (the combined ideal is the unit ideal).
    """
    order = monomial_order(order)
    q = field.q
    names = next((g.names for g in G if g.names is not None), None)
    gens = []
    for i in range(s):
        e = tuple(q if j == i else 0 for j in range(s))
        e1 = tuple(1 if j == i else 0 for j in range(s))
        gens.append(Polynomial(field, s, {e: field.one, e1: -field.one},
                               names=names))
    gens.extend(G)
    gb = buchberger(gens, order)
    if gb.is_unit_ideal:
        raise EmptyVarietyError("the system has no zeros over this field")
    if names is not None:
        # polynomials built during reduction lose the display names
        for g in gb.generators:
            g.names = names
    return gb


def affine_variety_points(G: Sequence[Polynomial], field: FiniteField, s: int) -> PointSet:
    """Zero set of G inside F_q^s by direct enumeration."""
    return zero_set(G, affine_space(field, s))


def projective_variety_points(G: Sequence[Polynomial], field: FiniteField, s: int) -> PointSet:
    """Zero set of homogeneous G in P^(s-1), as normalized affine representatives.

    Representatives have first nonzero coordinate 1 and are enumerated by the
    position of that coordinate, then by the remaining coordinates in field
    enumeration order.
    """
    for g in G:
        if not g.is_homogeneous():
            raise ValueError(f"{g} is not homogeneous")
    pts = []
    for lead in range(s):
        tails = [()]
        for _ in range(s - lead - 1):
            tails = [t + (c,) for t in tails for c in field.elements()]
        for tail in tails:
            pt = (field.zero,) * lead + (field.one,) + tail
            if all(g.evaluate(pt).is_zero for g in G):
                pts.append(pt)
    if not pts:
        raise EmptyVarietyError("the system has no projective zeros over this field")
    return PointSet(field, s, pts, projective=True)


# ---- point files -------------------------------------------------------


def read_point_file(path_or_lines) -> PointSet:
    """Read a point set from the plain text format.

    First non-comment line: ``q=<int> s=<int> [modulus=c0,c1,...] [projective]``.
    Each following line is one point: comma-separated element literals.
    ``#`` starts a comment; blank lines are skipped.
    """
    if isinstance(path_or_lines, str):
        with open(path_or_lines, "r", encoding="utf-8") as fh:
            lines = fh.readlines()
    else:
        lines = list(path_or_lines)
    body = []
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if line:
            body.append(line)
    if not body:
        raise ValueError("point file has no content")
    header, *rows = body
    q = s = None
    modulus = None
    projective = False
    for tok in header.split():
        if tok == "projective":
            projective = True
        elif "=" in tok:
            key, val = tok.split("=", 1)
            if key == "q":
                q = int(val)
            elif key == "s":
                s = int(val)
            elif key == "modulus":
                modulus = [int(x) for x in val.split(",")]
            else:
                raise ValueError(f"unknown header field {key!r}")
        else:
            raise ValueError(f"bad header token {tok!r}")
    if q is None or s is None:
        raise ValueError("point file header must give q= and s=")
    field = field_for_q(q, modulus)
    pts = []
    for row in rows:
        coords = [parse_element(x.strip(), field) for x in row.split(",")]
        if len(coords) != s:
            raise ValueError(f"point {row!r} has {len(coords)} coordinates, expected {s}")
        pts.append(tuple(coords))
    return PointSet(field, s, pts, projective=projective)


def write_point_file(X: PointSet, path: str) -> None:
    field = X.field
    header = f"q={field.q} s={X.s}"
    if field.e > 1:
        header += " modulus=" + ",".join(str(c) for c in field.modulus)
    if X.projective:
        header += " projective"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(header + "\n")
        for pt in X:
            fh.write(",".join(field.format_element(c) for c in pt) + "\n")
