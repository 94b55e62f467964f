"""Evaluation codes on finite point sets.

A code is built from a point set X and a linear space of polynomials L: the
codewords are the evaluation vectors of L at the points of X.  Before
evaluating, the basis is standardized: each polynomial is replaced by its
normal form modulo I(X) and the results are Gaussian-triangularized into a
monic sequence with strictly decreasing distinct leading monomials.  The
standardized basis spans the same code and its leading monomials are
distinct standard monomials, which is what the weight machinery needs.
"""

from __future__ import annotations

import json
from typing import Sequence

from .gf import FiniteField, field_for_q
from .groebner import GroebnerBasis, normal_form, standard_monomials
from .mpoly import (
    GREVLEX,
    MonomialOrder,
    Polynomial,
    format_polynomial,
    monomial_order,
    monomials_of_degree,
    squarefree_monomials,
)
from .variety import PointSet, torus, vanishing_ideal


def standardize(basis: Sequence[Polynomial], gbI: GroebnerBasis,
                order=None) -> list:
    """Normal forms of the basis, triangularized by leading monomial.

    Returns monic polynomials with strictly decreasing distinct leading
    monomials spanning the same space modulo I(X).  Polynomials that reduce
    into the span of earlier ones are dropped.
    """
    order = monomial_order(order or gbI.order)
    pivots: dict = {}
    for f in basis:
        g = normal_form(f, gbI)
        while not g.is_zero:
            e, c = g.leading(order)
            piv = pivots.get(e)
            if piv is None:
                pivots[e] = g.scale(c.inverse())
                break
            g = g - piv.scale(c)
    return [pivots[e] for e in sorted(pivots, key=order.key, reverse=True)]


def _rank(rows, field):
    """Rank of a list of evaluation vectors by Gaussian elimination."""
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if not rows[i][col].is_zero), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [x * inv for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and not rows[i][col].is_zero:
                c = rows[i][col]
                rows[i] = [x - c * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


class EvaluationCode:
    """An evaluation code together with its standardized polynomial basis."""

    def __init__(self, X: PointSet, basis: Sequence[Polynomial], order=GREVLEX,
                 gbI: GroebnerBasis | None = None, check: bool = True,
                 label: str | None = None):
        self.X = X
        self.order = monomial_order(order)
        self.gbI = gbI if gbI is not None else vanishing_ideal(X, self.order)
        self.std_basis = standardize(basis, self.gbI, self.order)
        if not self.std_basis:
            raise ValueError("basis evaluates to the zero code")
        self.lead_monos = tuple(g.leading_monomial(self.order) for g in self.std_basis)
        self.generator_matrix = tuple(
            tuple(g.evaluate(pt) for pt in X) for g in self.std_basis
        )
        self.label = label
        if check:
            orig = [tuple(f.evaluate(pt) for pt in X) for f in basis
                    if not f.is_zero]
            field = X.field
            r_std = len(self.std_basis)  # std rows are triangular, full rank
            assert _rank(list(self.generator_matrix), field) == r_std
            assert _rank(orig + list(self.generator_matrix), field) == r_std, \
                "standardized basis spans a different code"
            assert _rank(orig, field) == r_std

    @property
    def field(self) -> FiniteField:
        return self.X.field

    @property
    def m(self) -> int:
        """Block length."""
        return len(self.X)

    @property
    def k(self) -> int:
        """Dimension."""
        return len(self.std_basis)

    def parameters(self) -> tuple:
        return (self.m, self.k)

    def __repr__(self):
        return f"EvaluationCode[{self.m},{self.k}] over F_{self.field.q}"

    # ---- export -------------------------------------------------------

    def matrix_tsv(self) -> str:
        """Generator matrix as TSV: header line ``k m q``, then k rows."""
        field = self.field
        lines = [f"{self.k}\t{self.m}\t{field.q}"]
        for row in self.generator_matrix:
            lines.append("\t".join(field.format_element(x) for x in row))
        return "\n".join(lines) + "\n"

    def metadata(self) -> dict:
        return {
            "length": self.m,
            "dimension": self.k,
            "q": self.field.q,
            "order": self.order.kind,
            "basis": [format_polynomial(g, self.order) for g in self.std_basis],
        }

    def metadata_json(self) -> str:
        return json.dumps(self.metadata(), indent=2)


def evaluation_code(X: PointSet, basis: Sequence[Polynomial], order=GREVLEX,
                    gbI: GroebnerBasis | None = None) -> EvaluationCode:
    return EvaluationCode(X, basis, order, gbI)


def rm_code(X: PointSet, d: int, order=GREVLEX,
            gbI: GroebnerBasis | None = None) -> EvaluationCode:
    """Reed-Muller-type code: all polynomials of total degree at most d on X.

    The standard monomials of degree <= d already span the normal forms, so
    they are the basis; the dimension is the Hilbert function at d.
    """
    order = monomial_order(order)
    if not order.is_graded:
        raise ValueError("degree filtration needs a graded order")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    gbI = gbI if gbI is not None else vanishing_ideal(X, order)
    field = X.field
    fp = standard_monomials(gbI)
    basis = [Polynomial.monomial(field, X.s, e) for e in fp.up_to_degree(d)]
    return EvaluationCode(X, basis, order, gbI, label=f"rm d={d}")


def projective_rm_code(X: PointSet, d: int, order=GREVLEX) -> EvaluationCode:
    """Projective Reed-Muller-type code of degree d on normalized representatives.

    Evaluates the homogeneous monomials of degree exactly d at the affine
    representative tuples (first nonzero coordinate 1).
    """
    order = monomial_order(order)
    if d < 1:
        raise ValueError("projective degree must be at least 1")
    if not X.projective:
        raise ValueError("point set is not projective")
    field = X.field
    basis = [Polynomial.monomial(field, X.s, e) for e in monomials_of_degree(X.s, d)]
    gbI = vanishing_ideal(X, order)
    return EvaluationCode(X, basis, order, gbI, label=f"projective rm d={d}")


def toric_hypersimplex_code(q_or_field, s: int, d: int, order=GREVLEX) -> EvaluationCode:
    """Toric code on the torus from the squarefree monomials of degree exactly d."""
    field = q_or_field if isinstance(q_or_field, FiniteField) else field_for_q(q_or_field)
    if not 1 <= d <= s:
        raise ValueError("need 1 <= d <= s")
    X = torus(field, s)
    basis = [Polynomial.monomial(field, s, e) for e in squarefree_monomials(s, d, exact=True)]
    return EvaluationCode(X, basis, order, label=f"toric hypersimplex d={d}")


def squarefree_code(q_or_field, s: int, d: int, order=GREVLEX) -> EvaluationCode:
    """Torus code from all squarefree monomials of degree at most d."""
    field = q_or_field if isinstance(q_or_field, FiniteField) else field_for_q(q_or_field)
    if not 1 <= d <= s:
        raise ValueError("need 1 <= d <= s")
    X = torus(field, s)
    basis = [Polynomial.monomial(field, s, e) for e in squarefree_monomials(s, d)]
    return EvaluationCode(X, basis, order, label=f"squarefree d={d}")


def generalized_toric_code(q_or_field, s: int, exponents: Sequence, order=GREVLEX) -> EvaluationCode:
    """Torus code spanned by an arbitrary list of monomial exponent tuples."""
    field = q_or_field if isinstance(q_or_field, FiniteField) else field_for_q(q_or_field)
    X = torus(field, s)
    basis = [Polynomial.monomial(field, s, tuple(e)) for e in exponents]
    return EvaluationCode(X, basis, order, label="generalized toric")
