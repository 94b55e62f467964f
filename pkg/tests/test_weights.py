import itertools
import random

import pytest

from evalcodes import (
    GREVLEX,
    LEX,
    BudgetError,
    FiniteField,
    PointSet,
    Polynomial,
    evaluation_code,
    field_for_q,
    footprint_bound,
    gaussian_binomial,
    ghw,
    ghw_bruteforce,
    max_zeros_bounds,
    min_distance_recursive,
    rm_code,
    rm_footprint,
    rref_matrices,
    squarefree_code,
    squarefree_dimension,
    squarefree_footprint,
    squarefree_min_distance,
    squarefree_second_weight,
    toric_dimension,
    toric_hypersimplex_code,
    toric_min_distance,
    torus,
    two_product_common_zeros,
    vanishing_ideal,
    zero_set,
)


def _random_pointset(field, s, n, rng):
    elems = list(field.elements())
    pts = {tuple(rng.choice(elems) for _ in range(s)) for _ in range(n)}
    return PointSet(field, s, [list(p) for p in pts])


@pytest.mark.parametrize("q,k,r", [(2, 4, 2), (3, 3, 1), (3, 3, 2), (4, 3, 2), (5, 2, 1)])
def test_rref_enumeration_is_canonical(q, k, r):
    field = field_for_q(q)
    mats = list(rref_matrices(field, k, r))
    assert len(mats) == gaussian_binomial(q, k, r)
    assert len(set(mats)) == len(mats)
    one, zero = field.one, field.zero
    for mat in mats:
        pivots = []
        for row in mat:
            j = next(i for i, c in enumerate(row) if not c.is_zero)
            assert row[j] == one
            pivots.append(j)
        assert pivots == sorted(pivots)
        for i, j in enumerate(pivots):
            assert all(mat[t][j] == (one if t == i else zero) for t in range(r))


def test_gaussian_binomial_values():
    assert gaussian_binomial(2, 4, 2) == 35
    assert gaussian_binomial(3, 3, 1) == 13
    assert gaussian_binomial(3, 9, 2) == 8_069_620
    assert gaussian_binomial(5, 3, 3) == 1
    assert gaussian_binomial(5, 3, 4) == 0


def test_degree_route_matches_matrix_oracle_random():
    rng = random.Random(404)
    for q in (2, 3, 4):
        field = field_for_q(q)
        for _ in range(4):
            X = _random_pointset(field, 2, rng.randrange(4, 8), rng)
            gb = vanishing_ideal(X)
            C = rm_code(X, 1, gbI=gb)
            for r in range(1, C.k + 1):
                rep = ghw(C, r)
                assert rep.status == "exact"
                assert rep.value == ghw_bruteforce(C, r)


def test_candidate_resampling_through_degree_method():
    """Re-verify a slice of the subspace candidates through the other route:
    for every sampled RREF matrix, the support weight from the generator
    matrix must equal the point count complement from polynomial evaluation."""
    C = rm_code(torus(5, 2), 1)
    field, m = C.field, C.m
    mats = list(rref_matrices(field, C.k, 2))
    sample = mats[:: max(1, len(mats) // max(3, len(mats) // 100))]
    for mat in sample:
        # matrix route: support of the row space of A*G
        rows = [
            [sum((c * g for c, g in zip(arow, col)), field.zero)
             for col in zip(*C.generator_matrix)]
            for arow in mat
        ]
        support = sum(1 for j in range(m) if any(not row[j].is_zero for row in rows))
        # degree route: points where all r combined polynomials vanish
        polys = []
        for arow in mat:
            f = Polynomial.zero(field, C.X.s)
            for c, g in zip(arow, C.std_basis):
                f = f + g.scale(c)
            polys.append(f)
        zeros = sum(
            1 for pt in C.X if all(f.evaluate(pt).is_zero for f in polys)
        )
        assert support == m - zeros


def test_witness_subspace_attains_reported_value():
    C = toric_hypersimplex_code(4, 2, 1)
    rep = ghw(C, 1)
    assert rep.status == "exact"
    (w,) = rep.witness
    zeros = sum(1 for pt in C.X if w.evaluate(pt).is_zero)
    assert C.m - zeros == rep.value


def test_nongraded_order_reports_upper_bound():
    F3 = FiniteField(3)
    X = torus(F3, 2)
    basis = [Polynomial.constant(F3, 2, 1),
             Polynomial.variable(F3, 2, 0),
             Polynomial.variable(F3, 2, 1)]
    exact = ghw(evaluation_code(X, basis, GREVLEX), 1)
    assert exact.status == "exact"
    rep = ghw(evaluation_code(X, basis, LEX), 1)
    assert rep.status == "upper_bound"
    assert rep.value >= exact.value


def test_wei_bounds_and_strict_hierarchy():
    for C in (rm_code(torus(3, 2), 1), toric_hypersimplex_code(4, 2, 1),
              rm_code(torus(3, 3), 1)):
        m, k = C.m, C.k
        values = [ghw(C, r).value for r in range(1, k + 1)]
        for r, v in enumerate(values, start=1):
            assert r <= v <= m - k + r
            assert footprint_bound(C, r) <= v
        assert all(a < b for a, b in zip(values, values[1:]))
        assert values[-1] == m  # the whole code covers every position


def test_min_distance_monotone_in_degree():
    F3 = FiniteField(3)
    from evalcodes import affine_space
    X = affine_space(F3, 2)
    gb = vanishing_ideal(X)
    dists = [min_distance_recursive(X, d, gbI=gb) for d in range(1, 5)]
    assert dists == sorted(dists, reverse=True)
    assert dists[0] == 6  # (q - d) * q^(s-1) for the affine code at d = 1
    assert dists[-1] == 1  # degree reaches the regularity index
    C = rm_code(X, 2, gbI=gb)
    assert ghw(C, 1).value == min_distance_recursive(X, 2, gbI=gb)
    with pytest.raises(ValueError):
        min_distance_recursive(X, 1, order=LEX)


def test_footprint_bound_special_cases():
    # d = regularity: the code is the whole space, fp_k = m
    F3 = FiniteField(3)
    X = torus(F3, 2)
    C = rm_code(X, 4)
    assert C.k == 4
    assert footprint_bound(C, C.k) == C.m
    assert rm_footprint(X, 1, 1) <= ghw(rm_code(X, 1), 1).value


def test_toric_formulas_match_bruteforce():
    for q in (3, 4):
        for s in (2, 3):
            for d in range(1, s + 1):
                C = toric_hypersimplex_code(q, s, d)
                assert C.k == toric_dimension(q, s, d)
                assert ghw_bruteforce(C, 1) == toric_min_distance(q, s, d)
                D = squarefree_code(q, s, d)
                assert D.k == squarefree_dimension(q, s, d)
                assert ghw_bruteforce(D, 1) == squarefree_min_distance(q, s, d)
                if D.k >= 2 and gaussian_binomial(q, D.k, 2) < 200_000:
                    assert ghw_bruteforce(D, 2) == squarefree_second_weight(q, s, d)
                assert squarefree_footprint(q, s, d, 1) <= squarefree_min_distance(q, s, d)


def test_q2_degenerate_cases():
    assert toric_min_distance(2, 3, 2) == 1
    assert toric_dimension(2, 3, 2) == 1
    assert squarefree_dimension(2, 4, 2) == 1
    with pytest.raises(ValueError):
        squarefree_second_weight(2, 3, 1)
    with pytest.raises(ValueError):
        toric_min_distance(3, 2, 3)


def test_paired_difference_zero_counts():
    """|V_T((t1-t2)(t3-t4)...)| with d factors equals
    (q-1)^s - (q-2)^d (q-1)^(s-d), checked by enumeration."""
    for q in (2, 3, 4):
        field = field_for_q(q)
        for s in range(2, 7):
            T = torus(field, s)
            for d in range(1, s // 2 + 1):
                f = Polynomial.constant(field, s, 1)
                for i in range(d):
                    f = f * (Polynomial.variable(field, s, 2 * i)
                             - Polynomial.variable(field, s, 2 * i + 1))
                count = sum(1 for pt in T if f.evaluate(pt).is_zero)
                assert count == (q - 1) ** s - (q - 2) ** d * (q - 1) ** (s - d)


def test_two_product_common_zeros_vs_enumeration():
    for q in (3, 4):
        field = field_for_q(q)
        s = 4
        T = torus(field, s)
        one = Polynomial.constant(field, s, 1)
        for A, B in (((0, 1), (1, 2)), ((0,), (1, 2, 3)), ((0, 1), (0, 1)),
                     ((0, 1), (2, 3))):
            fa = one
            for i in A:
                fa = fa * (Polynomial.variable(field, s, i) - one)
            fb = one
            for i in B:
                fb = fb * (Polynomial.variable(field, s, i) - one)
            count = sum(
                1 for pt in T
                if fa.evaluate(pt).is_zero and fb.evaluate(pt).is_zero
            )
            assert count == two_product_common_zeros(q, s, A, B)
    with pytest.raises(ValueError):
        two_product_common_zeros(3, 2, (), (0,))


def test_max_zeros_witnesses_attain_bounds():
    for q, s, d in ((3, 3, 2), (4, 3, 2), (3, 4, 3), (5, 2, 1)):
        out = max_zeros_bounds(q, s, d)
        field = field_for_q(q)
        T = torus(field, s)
        w = out["affine"]["witness"]
        assert w.degree() == d
        count = sum(1 for pt in T if w.evaluate(pt).is_zero)
        assert count == out["affine"]["bound"]
        if "homogeneous" in out:
            g = out["homogeneous"]["witness"]
            assert g.is_homogeneous() and g.degree() == d
            count = sum(1 for pt in T if g.evaluate(pt).is_zero)
            assert count == out["homogeneous"]["bound"]


def test_budget_handling():
    C = rm_code(torus(3, 3), 2)  # k = 7 over F_3
    assert gaussian_binomial(3, C.k, 2) > 50
    rep = ghw(C, 2, budget=50)
    assert rep.status == "upper_bound"
    assert rep.searched == 50
    exact = ghw(C, 2)
    assert exact.status == "exact"
    assert rep.value >= exact.value
    with pytest.raises(BudgetError):
        ghw_bruteforce(C, 2, budget=50)
    with pytest.raises(BudgetError):
        footprint_bound(C, 3, budget=10)


def test_extension_field_weights():
    F4 = field_for_q(4)
    X = torus(F4, 2)
    C = rm_code(X, 1)
    assert (C.m, C.k) == (9, 3)
    for r in (1, 2, 3):
        assert ghw(C, r).value == ghw_bruteforce(C, r)
