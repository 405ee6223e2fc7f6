from __future__ import annotations

import pytest

from umrow.algebra import (
    adjoin_unit_variable,
    element_equal,
    hom_compose,
    hom_make,
    identity_hom,
    make_algebra,
)
from umrow.errors import (
    DuplicateVariable,
    NotWellDefined,
    RingMismatch,
    ZeroRing,
)
from umrow.fields import RATIONALS, prime_field


def laurent():
    return make_algebra(RATIONALS, ["x1", "y1"], ["x1*y1 - 1"])


def even_quadric_2():
    return make_algebra(RATIONALS, ["x1", "y1", "z"], ["x1*y1 - z + z^2"])


def test_make_algebra_examples():
    laurent()
    even_quadric_2()
    with pytest.raises(ZeroRing):
        make_algebra(RATIONALS, ["x"], ["x", "1 - x"])


def test_element_equality_under_relations():
    alg = even_quadric_2()
    lhs = alg.var("x1") * alg.var("y1")
    rhs = alg.var("z") - alg.var("z") * alg.var("z")
    assert element_equal(lhs, rhs)
    assert lhs == lhs
    lau = laurent()
    assert lau.var("x1") != lau.var("y1")


def test_element_equal_requires_same_parent():
    with pytest.raises(RingMismatch):
        element_equal(laurent().var("x1"), even_quadric_2().var("x1"))


def test_canonical_normal_forms():
    alg = even_quadric_2()
    a = alg.element("x1*y1")
    b = alg.element("z - z^2")
    assert a.rep == b.rep  # identical stored representation, not just equality
    assert hash(a) == hash(b)


def test_is_unit_in_quotient():
    # Quotient of the 5-dimensional odd quadric ring by x1, x2: there the
    # last coordinate is invertible with inverse y3.
    alg = make_algebra(
        RATIONALS,
        ["x1", "x2", "x3", "y1", "y2", "y3"],
        ["x1*y1 + x2*y2 + x3*y3 - 1", "x1", "x2"],
    )
    inv = alg.var("x3").is_unit()
    assert inv is not None
    assert inv == alg.var("y3")
    assert alg.var("x3") * inv == alg.one()


def test_is_unit_nilpotent_perturbation():
    alg = make_algebra(RATIONALS, ["x"], ["x^2"])
    inv = (alg.one() + alg.var("x")).is_unit()
    assert inv == alg.one() - alg.var("x")


def test_is_unit_absent():
    alg = make_algebra(RATIONALS, ["x"], [])
    assert alg.var("x").is_unit() is None


def test_hom_well_definedness_failure():
    lau = laurent()
    target = make_algebra(RATIONALS, ["x"], [])
    with pytest.raises(NotWellDefined) as info:
        hom_make(lau, target, [target.var("x"), target.var("x")])
    assert info.value.index == 0
    assert not info.value.residue.is_zero()


def test_identity_hom_and_compose():
    alg = even_quadric_2()
    ident = identity_hom(alg)
    f = hom_make(alg, alg, [alg.var("y1"), alg.var("x1"), alg.var("z")])
    assert hom_compose(f, ident) == f
    assert hom_compose(ident, f) == f
    g = hom_make(alg, alg, [alg.var("x1"), alg.var("y1"), alg.one() - alg.var("z")])
    assert hom_compose(hom_compose(f, g), f) == hom_compose(f, hom_compose(g, f))


def test_hom_application_is_substitution():
    alg = even_quadric_2()
    swap = hom_make(alg, alg, [alg.var("y1"), alg.var("x1"), alg.var("z")])
    value = swap(alg.element("x1^2 + 2*z"))
    assert value == alg.element("y1^2 + 2*z")


def test_hom_compose_direction():
    lau = laurent()
    target = adjoin_unit_variable(make_algebra(RATIONALS, [], []), "t")
    to_t = hom_make(lau, target, [target.var("t"), target.var("t_inv")])
    square = hom_make(lau, lau, [lau.element("x1^2"), lau.element("y1^2")])
    composite = hom_compose(to_t, square)
    assert composite.images[0] == target.element("t^2")


def test_adjoin_unit_variable():
    base = make_algebra(RATIONALS, [], [])
    gm = adjoin_unit_variable(base, "t")
    assert gm.variables == ("t", "t_inv")
    assert gm.var("t") * gm.var("t_inv") == gm.one()
    double = adjoin_unit_variable(gm, "u")
    assert len(double.variables) == 4
    assert len(double.relations) == 2
    with pytest.raises(DuplicateVariable):
        adjoin_unit_variable(gm, "t")


def test_adjoin_over_prime_field():
    base = make_algebra(prime_field(5), ["x"], [])
    gm = adjoin_unit_variable(base, "t")
    assert gm.var("t") * gm.var("t_inv") == gm.one()


def test_hom_requires_matching_fields():
    a = make_algebra(RATIONALS, ["x"], [])
    b = make_algebra(prime_field(5), ["x"], [])
    with pytest.raises(RingMismatch):
        hom_make(a, b, [b.var("x")])
