import pytest
from hypothesis import given

from assprime.core import MonomialIdeal, colon_ideal, power
from assprime.errors import DomainError
from assprime.persistence import (
    lemma_equivalences_check,
    persistence_check,
    persistence_transfer_check,
    ratliff_rush,
    socle_colon_check,
    strong_persistence_check,
)
from conftest import NONPERSISTENT_TEXT, ideal, monomial_ideals


def test_nonpersistent_is_not_persistent():
    rep = persistence_check(ideal(NONPERSISTENT_TEXT), 5)
    assert not rep.persistent
    n, witness = rep.first_failure
    assert n == 1 and witness.names == ["a", "b", "c"]
    assert rep.inclusions == [False, True, True, True]


def test_nonpersistent_fails_strong_persistence_at_one():
    assert strong_persistence_check(ideal(NONPERSISTENT_TEXT), 3)[0] is False
    rep = lemma_equivalences_check(ideal(NONPERSISTENT_TEXT), 4)
    assert rep.condition_i[0] is False
    assert rep.agree


def test_ratliff_rush_closure():
    I = ideal("ring x y\nideal I = x^4, x^3*y, x*y^3, y^4")
    rep = ratliff_rush(I)
    assert rep.closure == power(ideal("ring x y\nideal I = x, y"), 4)
    assert not rep.cap_hit


def _closure_oracle(I, k_max=6):
    """Union of I^(k+1) : I^k for k <= k_max."""
    out = I
    for k in range(1, k_max + 1):
        out = out + colon_ideal(power(I, k + 1), power(I, k))
    return out


@given(monomial_ideals(max_vars=2, max_gens=3, max_deg=4))
def test_ratliff_rush_contains_ideal(I):
    rep = ratliff_rush(I)
    assert I <= rep.closure
    if not rep.cap_hit:
        assert rep.closure == _closure_oracle(I)


def test_ratliff_rush_cap():
    I = ideal("ring x y\nideal I = x^4, x^3*y, x*y^3, y^4")
    rep = ratliff_rush(I, cap=1)
    assert rep.cap_hit
    with pytest.raises(DomainError):
        ratliff_rush(I, cap=0)


@given(monomial_ideals(max_vars=3, max_gens=3, max_deg=3))
def test_lemma_conditions_agree(I):
    rep = lemma_equivalences_check(I, 3)
    assert rep.agree
    assert rep.implication_holds


@given(monomial_ideals(max_vars=3, max_gens=3, max_deg=3))
def test_socle_colon_inside_previous_power(I):
    assert all(socle_colon_check(I, 4))


def test_normal_ideal_is_persistent():
    rep = persistence_check(ideal("ring x y\nideal I = x, y"), 4)
    assert rep.persistent and rep.first_failure is None


def test_transfer_statuses():
    persistent = ideal("ring x1 x2\nideal I = x1^2, x1*x2")
    J = ideal("ring y1\nideal J = y1^2", "J")
    assert persistence_transfer_check(persistent, J, 3).status == "passed"
    assert persistence_transfer_check(ideal(NONPERSISTENT_TEXT), J, 3).status == "hypothesis not met"


def test_rejects_unit_ideal():
    I = ideal("ring x\nideal I = x")
    with pytest.raises(DomainError):
        persistence_check(MonomialIdeal.unit(I.ring), 2)
