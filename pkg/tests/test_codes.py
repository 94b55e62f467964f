import math
import random

import pytest

from evalcodes import (
    GREVLEX,
    LEX,
    FiniteField,
    PointSet,
    Polynomial,
    affine_hilbert_function,
    evaluation_code,
    field_for_q,
    generalized_toric_code,
    parse_polynomial,
    projective_variety_points,
    projective_rm_code,
    rm_code,
    squarefree_code,
    standardize,
    toric_hypersimplex_code,
    torus,
    vanishing_ideal,
)


def _random_pointset(field, s, n, rng):
    elems = list(field.elements())
    pts = {tuple(rng.choice(elems) for _ in range(s)) for _ in range(n)}
    return PointSet(field, s, [list(p) for p in pts])


def test_standardize_triangular_monic():
    rng = random.Random(31)
    F5 = FiniteField(5)
    X = _random_pointset(F5, 2, 8, rng)
    gb = vanishing_ideal(X)
    elems = list(F5.elements())
    basis = [Polynomial(F5, 2, {
        (rng.randrange(4), rng.randrange(4)): rng.choice(elems[1:])
        for _ in range(3)
    }) for _ in range(5)]
    std = standardize(basis, gb)
    leads = [g.leading(GREVLEX) for g in std]
    # monic, strictly decreasing distinct leading monomials
    assert all(c == F5.one for _, c in leads)
    monos = [e for e, _ in leads]
    assert len(set(monos)) == len(monos)
    assert monos == sorted(monos, key=GREVLEX.key, reverse=True)


def test_evaluation_code_rejects_zero_code():
    F3 = FiniteField(3)
    X = torus(F3, 2)
    gb = vanishing_ideal(X)
    # t1^2 - 1 vanishes identically on the torus
    f = parse_polynomial("t1^2-1", F3, ("t1", "t2"))
    with pytest.raises(ValueError):
        evaluation_code(X, [f], gbI=gb)


def test_rm_dimension_equals_hilbert_function():
    rng = random.Random(17)
    for q in (3, 4):
        field = field_for_q(q)
        X = _random_pointset(field, 2, 7, rng)
        gb = vanishing_ideal(X)
        for d in range(0, 4):
            C = rm_code(X, d, gbI=gb)
            assert C.k == affine_hilbert_function(gb, d)
            assert C.m == len(X)
    with pytest.raises(ValueError):
        rm_code(X, 1, order=LEX)


def test_duplicate_basis_polynomials_collapse():
    F3 = FiniteField(3)
    X = torus(F3, 2)
    t1 = Polynomial.variable(F3, 2, 0)
    t2 = Polynomial.variable(F3, 2, 1)
    C = evaluation_code(X, [t1, t1, t1 + t2, t2])
    assert C.k == 2


def test_projective_rm_code():
    F4 = field_for_q(4)
    g = parse_polynomial("y^3+x*z^2+x^2*z", F4, ("x", "y", "z"))
    X = projective_variety_points([g], F4, 3)
    C = projective_rm_code(X, 1)
    assert (C.m, C.k) == (9, 3)
    with pytest.raises(ValueError):
        projective_rm_code(torus(F4, 2), 1)


def test_toric_and_squarefree_dimensions():
    for q, s in ((3, 3), (4, 2), (5, 3)):
        for d in range(1, s + 1):
            C = toric_hypersimplex_code(q, s, d)
            assert C.m == (q - 1) ** s
            assert C.k == math.comb(s, d)
            D = squarefree_code(q, s, d)
            assert D.k == sum(math.comb(s, i) for i in range(d + 1))
    # q = 2: the torus is a single point
    C = toric_hypersimplex_code(2, 3, 2)
    assert (C.m, C.k) == (1, 1)


def test_generalized_toric_code():
    C = generalized_toric_code(5, 2, [(0, 0), (3, 0), (1, 2), (0, 3), (1, 1), (2, 4)])
    assert (C.m, C.k) == (16, 6)


def test_matrix_tsv_shape():
    C = toric_hypersimplex_code(3, 2, 1)
    lines = C.matrix_tsv().strip().split("\n")
    k, m, q = (int(x) for x in lines[0].split("\t"))
    assert (k, m, q) == (C.k, C.m, 3)
    assert len(lines) == 1 + k
    assert all(len(l.split("\t")) == m for l in lines[1:])


def test_metadata_fields():
    C = rm_code(torus(3, 2), 1)
    meta = C.metadata()
    assert meta["length"] == 4 and meta["dimension"] == 3
    assert meta["q"] == 3 and meta["order"] == "grevlex"
    assert len(meta["basis"]) == 3
