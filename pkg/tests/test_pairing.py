from fractions import Fraction

import pytest
from hypothesis import given

from finmeas import (
    Dist,
    DomainError,
    FiniteSpace,
    FunTable,
    NoDensityError,
    TestFn,
    check_frobenius,
    check_switch,
    constant_one,
    density,
    dirac,
    eval_at_eta,
    fn_action,
    fn_pointwise_mul,
    pair,
    semantics,
    total,
)
from finmeas.pairing import pairing_equals_action_total

from .conftest import atom_dists


def test_pairing_on_dirac_evaluates():
    phi = {"x": Fraction(7, 2)}
    assert pair(dirac("x"), phi) == Fraction(7, 2)


def test_pairing_weighted_sum_by_hand():
    p = Dist({"a": 2, "b": 3})
    phi = {"a": 5, "b": 7}
    assert pair(p, phi) == 31


def test_pairing_against_one_is_total():
    p = Dist({"a": Fraction(1, 2), "b": Fraction(1, 3)})
    assert pair(p, constant_one()) == total(p) == Fraction(5, 6)


def test_pairing_undefined_point_is_domain_error():
    p = Dist({"a": 1, "b": 1})
    with pytest.raises(DomainError):
        pair(p, {"a": 1})


def test_pairing_with_distribution_values():
    p = Dist({"a": 2, "b": 1})
    psi = {"a": Dist({"u": 1}), "b": Dist({"u": -2, "v": 1})}
    assert pair(p, psi) == Dist({"v": 1})


def test_pairing_of_empty_uses_codomain_zero():
    empty = Dist.empty()
    assert pair(empty, {"a": Fraction(1)}) == 0
    table = FunTable(FiniteSpace(("a",)), {"a": Dist({"u": 1})})
    assert pair(empty, table) == Dist.empty()
    assert pair(empty, TestFn.dist_valued(lambda x: dirac(x))) == Dist.empty()


def test_semantics_evaluates_test_functions():
    functional = semantics(dirac("x"))
    assert functional({"x": Fraction(4)}) == 4


def test_semantics_of_empty_is_zero_functional():
    functional = semantics(Dist.empty())
    assert functional(TestFn.scalar(lambda x: Fraction(9))) == 0
    assert functional(TestFn.dist_valued(dirac)) == Dist.empty()


@given(atom_dists())
def test_enough_test_functions(p):
    assert eval_at_eta(semantics(p)) == p


def test_fn_action_on_dirac():
    phi = {"x": Fraction(3, 4)}
    assert fn_action(dirac("x"), phi) == Dist({"x": Fraction(3, 4)})


def test_fn_action_drops_zeros():
    p = Dist({"a": 2, "b": 4})
    phi = {"a": Fraction(1, 2), "b": 0}
    assert fn_action(p, phi) == Dist({"a": 1})


def test_fn_action_unit():
    p = Dist({"a": 2, "b": -5})
    assert fn_action(p, constant_one()) == p


def test_action_is_associative():
    p = Dist({"a": 2, "b": 3})
    phi1 = {"a": Fraction(1, 2), "b": 2}
    phi2 = {"a": 4, "b": Fraction(1, 3)}
    assert fn_action(fn_action(p, phi1), phi2) == fn_action(
        p, fn_pointwise_mul(phi1, phi2)
    )


def test_density_pointwise_ratio():
    q = Dist({"a": 2, "b": 3})
    p = Dist({"a": 1, "b": 1})
    phi = density(q, p)
    assert phi("a") == 2 and phi("b") == 3
    assert fn_action(p, phi) == q


def test_density_of_self_is_one():
    p = Dist({"a": 5, "b": Fraction(-1, 3)})
    phi = density(p, p)
    assert set(phi.values()) == {Fraction(1)}


def test_density_support_violation():
    with pytest.raises(NoDensityError):
        density(Dist({"c": 1}), Dist({"a": 1}))


def test_density_handles_missing_points_of_q():
    p = Dist({"a": 2, "b": 4})
    q = Dist({"a": 1})
    phi = density(q, p)
    assert phi("b") == 0
    assert fn_action(p, phi) == q


def test_switch_identity_instances():
    p = Dist({"a": 2, "b": -1})
    phi = {"a": Fraction(1, 2), "b": 3}
    psi = TestFn.from_table(
        FunTable(FiniteSpace(("a", "b")), {"a": Dist({"u": 1}), "b": Dist({"v": 2})})
    )
    assert check_switch(p, phi, psi)
    assert check_switch(Dist.empty(), phi, psi)
    chi = {"a": Fraction(7), "b": Fraction(0)}
    assert check_switch(p, phi, chi)


def test_frobenius_instances():
    p = Dist({"a": 2, "b": -1, "c": Fraction(1, 3)})
    f = {"a": "u", "b": "u", "c": "v"}.__getitem__
    phi = {"u": Fraction(5), "v": Fraction(-2)}
    assert check_frobenius(f, p, phi)
    assert check_frobenius(f, Dist.empty(), phi)


def test_pairing_total_corollary():
    p = Dist({"a": 2, "b": -1})
    phi = {"a": Fraction(1, 2), "b": 3}
    assert pairing_equals_action_total(p, phi)
    assert pair(p, phi) == total(fn_action(p, phi))
