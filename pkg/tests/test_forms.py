"""Differential forms: exterior derivative, wedges, degrees, independence."""

from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from tame3 import forms, poly

from fixtures import CUBIC, NAGATA, P, X1, X2, X3

coeffs = st.builds(F, st.integers(-9, 9), st.integers(1, 5))
exponents = st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4))
polys = st.dictionaries(exponents, coeffs, max_size=5).map(
    lambda d: {e: c for e, c in d.items() if c}
)
one_forms = st.tuples(polys, polys, polys).map(forms.OneForm)


# -- exterior derivative ------------------------------------------------------


def test_differential_of_constant_vanishes():
    assert forms.is_zero_form(forms.differential(P((7, 0, 0, 0))))
    assert forms.is_zero_form(forms.differential({}))


def test_differential_of_coordinates():
    assert forms.differential(X1).coefficients == (P((1, 0, 0, 0)), {}, {})
    assert forms.differential(X3).coefficients == ({}, {}, P((1, 0, 0, 0)))


@given(polys, polys)
def test_differential_is_additive(p, q):
    dp, dq = forms.differential(p), forms.differential(q)
    expected = tuple(poly.add(a, b) for a, b in zip(dp.coefficients, dq.coefficients))
    assert forms.differential(poly.add(p, q)).coefficients == expected


@given(polys, polys)
def test_differential_leibniz_rule(p, q):
    # d(pq) = p·dq + q·dp, checked coefficientwise
    dp, dq = forms.differential(p), forms.differential(q)
    got = forms.differential(poly.mul(p, q))
    for i in range(3):
        expected = poly.add(
            poly.mul(p, dq.coefficients[i]), poly.mul(q, dp.coefficients[i])
        )
        assert got.coefficients[i] == expected


# -- wedge products -----------------------------------------------------------


def test_wedge_of_coordinate_differentials_is_oriented_basis():
    d1, d2, d3 = (forms.differential(x) for x in (X1, X2, X3))
    w = forms.wedge11(d1, d2)
    assert w.coefficients == (P((1, 0, 0, 0)), {}, {})
    top = forms.wedge21(w, d3)
    assert top.coefficient == P((1, 0, 0, 0))


@given(one_forms)
def test_wedge_with_self_vanishes(a):
    assert forms.is_zero_form(forms.wedge11(a, a))


@given(one_forms, one_forms)
def test_wedge_antisymmetry(a, b):
    ab = forms.wedge11(a, b)
    ba = forms.wedge11(b, a)
    for u, v in zip(ab.coefficients, ba.coefficients):
        assert u == poly.neg(v)


# -- degrees ------------------------------------------------------------------


def test_zero_forms_have_no_degree():
    assert forms.deg_form(forms.zero_one_form()) is None
    assert forms.deg_form(forms.TwoForm(({}, {}, {}))) is None
    assert forms.deg_form(forms.ThreeForm({})) is None


@given(polys)
def test_degree_of_differential_equals_degree(p):
    assume(poly.deg(p) not in (None, (0, 0, 0)))
    assert forms.deg_form(forms.differential(p)) == poly.deg(p)


@settings(max_examples=60)
@given(one_forms, one_forms)
def test_wedge_degree_is_subadditive(a, b):
    da, db = forms.deg_form(a), forms.deg_form(b)
    assume(da is not None and db is not None)
    dw = forms.deg_form(forms.wedge11(a, b))
    assert dw is None or poly.mdeg_le(dw, poly.mdeg_add(da, db))


@given(polys, one_forms)
def test_scaling_adds_degrees(g, w):
    assume(not poly.is_zero(g))
    assume(forms.deg_form(w) is not None)
    expected = poly.mdeg_add(poly.deg(g), forms.deg_form(w))
    assert forms.deg_form(forms.scale_form(g, w)) == expected


def test_basis_monomial_degrees():
    d1 = forms.differential(X1)
    assert forms.deg_form(d1) == (1, 0, 0)
    w = forms.wedge11(d1, forms.differential(X3))
    assert forms.deg_form(w) == (1, 0, 1)
    top = forms.wedge21(
        forms.wedge11(d1, forms.differential(X2)), forms.differential(X3)
    )
    assert forms.deg_form(top) == (1, 1, 1)


# -- algebraic independence ---------------------------------------------------


def test_coordinates_are_independent():
    assert forms.independent(X1)
    assert forms.independent(X1, X2)
    assert forms.independent(X1, X2, X3)
    assert forms.independent(poly.add(X1, X2), X2, X3)


def test_dependence_is_detected():
    assert not forms.independent(P((3, 0, 0, 0)))
    assert not forms.independent(X1, poly.mul(X1, X1))
    # f, g, f·g are algebraically dependent
    f = poly.add(X1, poly.mul(X2, X2))
    g = poly.add(X2, X3)
    assert not forms.independent(f, g, poly.mul(f, g))


def test_independence_arity_is_checked():
    with pytest.raises(ValueError):
        forms.independent()
    with pytest.raises(ValueError):
        forms.independent(X1, X1, X2, X3)


def test_automorphism_components_have_unit_jacobian_degree():
    # components of any polynomial automorphism wedge to a nonzero constant
    for f in (NAGATA, CUBIC):
        f1, f2, f3 = f.components
        d1, d2, d3 = (forms.differential(c) for c in (f1, f2, f3))
        top = forms.wedge21(forms.wedge11(d1, d2), d3)
        assert forms.deg_form(top) == (1, 1, 1)


def test_wedge_degrees_of_nagata_map():
    f1, f2, f3 = NAGATA.components
    d1, d2, d3 = (forms.differential(c) for c in (f1, f2, f3))
    assert forms.deg_form(forms.wedge11(d1, d2)) == (3, 0, 5)
    assert forms.deg_form(forms.wedge11(d1, d3)) == (2, 0, 4)
    assert forms.deg_form(forms.wedge11(d2, d3)) == (1, 0, 3)
