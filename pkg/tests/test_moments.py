"""Moment tables: evaluation, pullback, unitization, scaling, documents."""

import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ncindep import (
    AlgebraSignature,
    DegreeExceeded,
    Homomorphism,
    MomentFunctional,
    Monomial,
    Polynomial,
    RegimeMismatch,
    StateDocumentError,
    all_monomials,
    eval_functional,
    pullback,
    scale,
    state_from_json,
    state_to_json,
    unitize,
)
from ncindep.moments import dump_state, load_state
from ncindep.rational import ONE, ZERO, as_rational
from conftest import A1, G1, N1, mono, total_state

X = AlgebraSignature("X", True, (("x", 0), ("y", 0)))
XN = AlgebraSignature("X", False, (("x", 0),))


def poly(monomial, coeff=1):
    return Polynomial.from_monomial(monomial, 0, as_rational(coeff))


# ---------------------------------------------------------------------------
# evaluation


def test_eval_is_a_table_lookup():
    phi = total_state(X, 2, {"x": "1/2"})
    assert phi(mono(X, "x")) == as_rational("1/2")


def test_unital_functional_sends_unit_to_one():
    phi = total_state(X, 2)
    assert phi(mono(X, "")) == ONE
    assert eval_functional(phi, poly(mono(X, ""))) == ONE


def test_eval_functional_is_linear():
    phi = total_state(X, 1, {"x": "1/2", "y": "1/3"})
    p = poly(mono(X, "x"), 2) + poly(mono(X, "y"), 3)
    assert eval_functional(phi, p) == as_rational(2)


def test_unknown_long_monomials_raise_not_zero():
    phi = total_state(X, 2)
    with pytest.raises(DegreeExceeded):
        phi(mono(X, "x x x"))
    assert phi(mono(X, "x x")) == ZERO  # within bound: a real entry


def test_moment_table_must_be_total():
    table = {Monomial(X, ()): ONE, Monomial(X, ("x",)): ONE}
    with pytest.raises(ValueError):
        MomentFunctional(X, 1, table)  # "y" missing


def test_unit_entry_must_be_one():
    table = {m: ONE for m in all_monomials(X, 1)}
    table[Monomial(X, ())] = as_rational(2)
    with pytest.raises(ValueError):
        MomentFunctional(X, 1, table)


def test_non_unital_table_has_no_unit_entry():
    phi = total_state(XN, 2, {"x": 1})
    assert not phi.unital
    with pytest.raises(RegimeMismatch):
        eval_functional(phi, Polynomial.from_word((__import__("ncindep").EMPTY_WORD)))


@given(st.integers(-5, 5), st.integers(-5, 5))
def test_linearity_in_random_coefficients(c1, c2):
    phi = total_state(X, 2, {"x": "1/2", "x x": "1/3", "y": "-2"})
    p1, p2 = poly(mono(X, "x")), poly(mono(X, "x x"))
    combined = eval_functional(phi, p1.scaled(as_rational(c1)) + p2.scaled(as_rational(c2)))
    assert combined == c1 * phi(mono(X, "x")) + c2 * phi(mono(X, "x x"))


# ---------------------------------------------------------------------------
# pullback


def test_pullback_along_identity_is_the_same_table():
    phi = total_state(X, 2, {"x": "1/2", "y": "1/3"})
    pulled = pullback(phi, Homomorphism.identity(X))
    assert pulled.table == phi.table


def test_pullback_along_squaring():
    single = AlgebraSignature("X", True, (("x", 0),))
    phi = total_state(single, 4, {"x x": 1, "x x x x": 3})
    h = Homomorphism(single, single, {"x": poly(Monomial(single, ("x", "x")))})
    pulled = pullback(phi, h)
    assert pulled.max_degree == 2
    assert pulled(Monomial(single, ("x",))) == ONE
    assert pulled(Monomial(single, ("x", "x"))) == as_rational(3)


def test_pullback_is_linear_in_images():
    phi = total_state(X, 1, {"x": "2/3", "y": "1/5"})
    h = Homomorphism(X, X, {"x": poly(mono(X, "x")) + poly(mono(X, "y")), "y": poly(mono(X, "y"))})
    pulled = pullback(phi, h)
    assert pulled(mono(X, "x")) == as_rational("2/3") + as_rational("1/5")


def test_pullback_is_contravariantly_functorial():
    single = AlgebraSignature("X", True, (("x", 0),))
    phi = total_state(single, 8, {("x",) * n: "1/%d" % n for n in range(1, 9)})
    j = Homomorphism(single, single, {"x": poly(Monomial(single, ("x", "x")))})
    k = Homomorphism(single, single, {"x": poly(Monomial(single, ("x", "x")))})
    twice = pullback(pullback(phi, j), k)
    # j o k sends x to x^4
    jk = Homomorphism(single, single, {"x": poly(Monomial(single, ("x",) * 4))})
    direct = pullback(phi, jk)
    assert twice.max_degree == direct.max_degree
    assert twice.table == direct.table


def test_pullback_degree_request_beyond_feasible_raises():
    single = AlgebraSignature("X", True, (("x", 0),))
    phi = total_state(single, 3, {"x": 1, "x x": 1, "x x x": 1})
    h = Homomorphism(single, single, {"x": poly(Monomial(single, ("x", "x")))})
    with pytest.raises(DegreeExceeded):
        pullback(phi, h, max_degree=2)


# ---------------------------------------------------------------------------
# unitize and scale


def test_unitize_adds_the_unit_row():
    phi = total_state(XN, 1, {"x": "1/2"})
    extended = unitize(phi)
    assert extended.unital
    assert extended(Monomial(extended.algebra, ())) == ONE
    assert extended(Monomial(extended.algebra, ("x",))) == as_rational("1/2")


def test_unitize_of_zero_functional_is_delta_like():
    phi = total_state(XN, 2)
    extended = unitize(phi)
    assert extended(Monomial(extended.algebra, ())) == ONE
    assert all(
        extended(m) == ZERO
        for m in all_monomials(extended.algebra, 2)
        if not m.is_unit
    )


def test_unitize_preserves_evenness():
    gn = AlgebraSignature("G", False, (("a", 1), ("b", 0)))
    phi = total_state(gn, 2, {"b": "1/2", "a a": 1})
    assert phi.is_even
    assert unitize(phi).is_even


def test_scale_by_one_is_identity():
    phi = total_state(XN, 2, {"x": "1/3"})
    assert scale(phi, 1).table == phi.table


def test_scale_multiplies_every_entry():
    phi = total_state(XN, 1, {"x": "1/3"})
    assert scale(phi, "1/2")(Monomial(XN, ("x",))) == as_rational("1/6")


def test_scale_round_trips():
    phi = total_state(XN, 2, {"x": "5/7", "x x": "-2"})
    assert scale(scale(phi, "3/4"), "4/3").table == phi.table


def test_scale_rejects_unital_and_zero():
    with pytest.raises(RegimeMismatch):
        scale(total_state(X, 1), 2)
    with pytest.raises(ValueError):
        scale(total_state(XN, 1), 0)


# ---------------------------------------------------------------------------
# evenness


def test_even_functional_vanishes_on_odd_monomials():
    phi = total_state(G1, 3, {"a a": 1, "b": "1/2"})
    assert phi.is_even
    for m in all_monomials(G1, 3):
        if m.degree == 1:
            assert phi(m) == ZERO


def test_odd_entry_breaks_evenness():
    phi = total_state(G1, 1, {"a": 1})
    assert not phi.is_even


# ---------------------------------------------------------------------------
# JSON documents


def test_document_round_trip():
    phi = total_state(G1, 2, {"a a": 1, "b": "1/2"})
    doc = state_to_json(phi)
    again = state_from_json(doc)
    assert again.algebra == phi.algebra
    assert again.max_degree == phi.max_degree
    assert again.table == phi.table


def test_document_file_round_trip(tmp_path):
    phi = total_state(XN, 2, {"x": "2/3"})
    path = tmp_path / "state.json"
    dump_state(phi, path)
    assert load_state(path).table == phi.table


def test_document_uses_empty_string_for_unit():
    doc = state_to_json(total_state(X, 1, {"x": "1/2"}))
    assert doc["moments"][""] == "1"
    assert doc["moments"]["x"] == "1/2"


def test_document_rejects_missing_moment():
    doc = state_to_json(total_state(X, 1, {"x": "1/2"}))
    del doc["moments"]["y"]
    with pytest.raises(StateDocumentError):
        state_from_json(doc)


def test_document_rejects_bad_rational():
    doc = state_to_json(total_state(X, 1))
    doc["moments"]["x"] = "0.5"
    with pytest.raises(StateDocumentError):
        state_from_json(doc)


def test_document_rejects_wrong_shape():
    for broken in ({}, {"algebra": {}}, {"algebra": {"name": "X"}, "max_degree": 1}):
        with pytest.raises(StateDocumentError):
            state_from_json(broken)


def test_document_text_is_deterministic():
    phi = total_state(X, 2, {"x": "1/2", "y x": "7/8"})
    assert dump_state(phi) == dump_state(phi)
    assert json.loads(dump_state(phi)) == state_to_json(phi)
