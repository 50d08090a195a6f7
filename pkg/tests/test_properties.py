"""Randomized checks of algebraic laws and involutions."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from bhdual.atlas import default_atlas
from bhdual.invariants import dolgachev, milnor_number
from bhdual.invertible import (TypedForm, WeightSystem, canonical_weights, classify,
                               input_polynomial, transpose)
from bhdual.poly import Polynomial, exponent_matrix, parse_polynomial, render, substitute
from bhdual.series import characteristic_function, saito_dual
from bhdual.verify import enumerate_forms

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
monos = st.tuples(*[st.integers(0, 3)] * 3)
polys = st.dictionaries(monos, coeffs, max_size=5).map(Polynomial)
maps = st.fixed_dictionaries({v: polys for v in "xyz"})

FORMS = list(enumerate_forms(5))
forms = st.sampled_from(FORMS)


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Polynomial()


@settings(max_examples=40)
@given(polys, polys, maps)
def test_substitute_distributes_over_addition(p, q, sigma):
    assert substitute(p + q, sigma) == substitute(p, sigma) + substitute(q, sigma)


@given(polys)
def test_render_parse_fixpoint(p):
    text = render(p)
    assert parse_polynomial(text) == p
    assert render(parse_polynomial(text)) == text


@given(forms, st.permutations(range(3)))
def test_exponent_matrix_ignores_term_order(tf, order):
    p = input_polynomial(tf)
    terms = sorted(p.items())
    shuffled = Polynomial(dict(terms[i] for i in order))
    assert exponent_matrix(shuffled) == exponent_matrix(p)


@given(forms)
def test_transpose_is_an_involution_on_supports(tf):
    p = input_polynomial(tf)
    assert transpose(transpose(p)).support() == p.support()


@given(forms)
def test_saito_dual_is_an_involution(tf):
    W = canonical_weights(tf)
    phi = characteristic_function(W, dolgachev(tf))
    assert saito_dual(saito_dual(phi, W.d), W.d) == phi


@given(forms, st.integers(2, 5))
def test_milnor_number_scale_invariant(tf, k):
    W = canonical_weights(tf)
    assert milnor_number(W.scaled(k)) == milnor_number(W)


@given(forms, st.permutations(range(3)))
def test_classification_ignores_variable_names(tf, perm):
    p = input_polynomial(tf)
    names = "xyz"
    q = substitute(p, {names[i]: Polynomial.var(names[perm[i]]) for i in range(3)})
    a, b = classify(p), classify(q)
    assert (a.type_tag, a.params) == (b.type_tag, b.params)


@given(st.sampled_from([e for e in default_atlas().entries() if e.f]))
def test_dual_name_involution(entry):
    atlas = default_atlas()
    assert atlas.dual_entry(atlas.dual_entry(entry)).key == entry.key
