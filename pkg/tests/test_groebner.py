import random

import pytest

from evalcodes import (
    GREVLEX,
    GRLEX,
    LEX,
    FiniteField,
    PointSet,
    Polynomial,
    affine_hilbert_function,
    box_degree,
    buchberger,
    field_for_q,
    monomial_ideal_degree,
    normal_form,
    parse_polynomial,
    quotient_degree,
    regularity_index,
    standard_monomials,
    vanishing_ideal,
)
from evalcodes.groebner import s_polynomial
from evalcodes.mpoly import exp_divides


def _random_pointset(field, s, n, rng):
    elems = list(field.elements())
    pts = {tuple(rng.choice(elems) for _ in range(s)) for _ in range(n)}
    return PointSet(field, s, [list(p) for p in pts])


@pytest.mark.parametrize("order", [LEX, GRLEX, GREVLEX])
def test_buchberger_matches_interpolation(order):
    """Dual-route check: Buchberger on the interpolated generators must
    reproduce the reduced basis computed by interpolation from the points."""
    rng = random.Random(2024)
    for q in (2, 3, 4, 5):
        field = field_for_q(q)
        for s in (2, 3):
            for _ in range(3):
                X = _random_pointset(field, s, rng.randrange(3, 9), rng)
                gb = vanishing_ideal(X, order)
                again = buchberger(list(gb.generators), order)
                assert again == gb
                # shuffled, rescaled generators give the same reduced basis
                units = list(field.elements(units_only=True))
                gens = [g.scale(rng.choice(units)) for g in gb.generators]
                rng.shuffle(gens)
                assert buchberger(gens, order) == gb


def test_groebner_properties():
    rng = random.Random(5)
    F3 = FiniteField(3)
    X = _random_pointset(F3, 3, 7, rng)
    for order in (LEX, GRLEX, GREVLEX):
        gb = vanishing_ideal(X, order)
        gens = gb.generators
        # reduced: monic, and no term divisible by another lead
        for i, g in enumerate(gens):
            assert g.leading(order)[1] == F3.one
            for j, h in enumerate(gens):
                if i == j:
                    continue
                lead = h.leading_monomial(order)
                assert not any(exp_divides(lead, e) for e in g.terms)
        # every S-polynomial reduces to zero
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                sp = s_polynomial(gens[i], gens[j], order)
                assert normal_form(sp, gb).is_zero
        # generators vanish on X
        for g in gens:
            assert all(g.evaluate(pt).is_zero for pt in X)
        assert quotient_degree(gb) == len(X)


def test_normal_form_is_linear_and_idempotent():
    rng = random.Random(13)
    F5 = FiniteField(5)
    X = _random_pointset(F5, 2, 6, rng)
    gb = vanishing_ideal(X)
    elems = list(F5.elements())
    for _ in range(10):
        f = Polynomial(F5, 2, {
            (rng.randrange(5), rng.randrange(5)): rng.choice(elems[1:])
            for _ in range(4)
        })
        g = Polynomial(F5, 2, {
            (rng.randrange(5), rng.randrange(5)): rng.choice(elems[1:])
            for _ in range(4)
        })
        nf, ng = normal_form(f, gb), normal_form(g, gb)
        assert normal_form(nf, gb) == nf
        assert normal_form(f + g, gb) == nf + ng
        # normal form preserves values on X
        for pt in X:
            assert nf.evaluate(pt) == f.evaluate(pt)


def test_unit_and_zero_ideal():
    F3 = FiniteField(3)
    one = Polynomial.constant(F3, 2, 1)
    assert buchberger([one]).is_unit_ideal
    with pytest.raises(ValueError):
        buchberger([Polynomial.zero(F3, 2)])


def test_footprint_and_hilbert_function():
    F3 = FiniteField(3)
    X = PointSet(F3, 2, [[F3.from_int(a), F3.from_int(b)]
                         for a in range(3) for b in range(3)])
    gb = vanishing_ideal(X)
    fp = standard_monomials(gb)
    assert len(fp) == 9
    assert sorted(fp) == [(a, b) for a in range(3) for b in range(3)]
    assert [affine_hilbert_function(gb, d) for d in range(5)] == [1, 3, 6, 8, 9]
    assert regularity_index(gb) == 4
    assert fp.max_degree() == 4


def test_monomial_ideal_degree_and_box():
    # lex-style pure-power box [0,1] x [0,70] minus nothing: 2 * 71 = 142
    assert monomial_ideal_degree([(2, 0), (0, 71)], [], 2) == 142
    assert box_degree((3, 3), (1, 1)) == 9 - 4
    assert box_degree((4,), (2,)) == 2
    # adding a generator can only drop the count
    full = monomial_ideal_degree([(3, 0), (0, 3)], [], 2)
    cut = monomial_ideal_degree([(3, 0), (0, 3)], [(1, 1)], 2)
    assert cut < full == 9


def test_nongenerating_input_still_reduced():
    F3 = FiniteField(3)
    names = ("x", "y")
    gens = [parse_polynomial(t, F3, names) for t in ("x^2-y", "y^2-x")]
    gb = buchberger(gens, LEX)
    # x^2 - y, y^2 - x generate; lex basis eliminates x
    assert quotient_degree(gb) == 4
    assert all(normal_form(g, gb).is_zero for g in gens)
