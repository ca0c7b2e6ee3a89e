import pytest
from hypothesis import given, strategies as st

from assprime.ass import ass_ring_quotient
from assprime.core import MonomialIdeal, Ring
from assprime.corpus import corpus_pairs
from assprime.errors import JoinError, ResourceError
from assprime.sums import (
    asymptotic_ass_sum,
    bounds_ass_sum,
    direct_ass_sum,
    disjoint_intersection_check,
    formula_ass_sum,
    verify_decomposition,
    verify_sum_formula,
    verify_sum_formula_range,
)
from conftest import NONPERSISTENT_TEXT, ideal, monomial_ideals


def names(supports):
    return [p.names for p in supports]


def _right(I):
    """Rename x-variables to y-variables so the pair has disjoint rings."""
    R = Ring(tuple("y" + v[1:] for v in I.ring.vars))
    return MonomialIdeal(R, I.exponents)


def test_powers_of_variables():
    I = ideal("ring x\nideal I = x^2")
    J = ideal("ring y\nideal J = y^3", "J")
    for n in range(1, 4):
        assert names(direct_ass_sum(I, J, n)) == [["x", "y"]]
        assert formula_ass_sum(I, J, n) == direct_ass_sum(I, J, n)


def test_nonpersistent_with_principal_right_ideal():
    I = ideal(NONPERSISTENT_TEXT)
    J = ideal("ring y\nideal J = y^2", "J")
    want = [["a", "b", "y"], ["a", "b", "c", "y"]]
    for rep in verify_sum_formula_range(I, J, 3):
        assert rep.match and rep.sandwich
        assert names(rep.formula_value) == want


def test_bounds_contain_direct():
    I = ideal("ring x1 x2\nideal I = x1^2, x1*x2")
    J = ideal("ring y1 y2\nideal J = y1*y2", "J")
    for n in range(1, 4):
        lower, upper = bounds_ass_sum(I, J, n)
        direct = direct_ass_sum(I, J, n)
        assert set(lower) <= set(direct) <= set(upper)


@given(monomial_ideals(max_vars=2, max_gens=3, max_deg=3),
       monomial_ideals(max_vars=2, max_gens=3, max_deg=3),
       st.integers(1, 3))
def test_formula_matches_direct(I, J, n):
    rep = verify_sum_formula(I, _right(J), n)
    assert rep.match


def test_overlapping_rings_rejected():
    I = ideal("ring x\nideal I = x")
    with pytest.raises(JoinError):
        direct_ass_sum(I, I, 1)


def test_size_guard():
    I = ideal("ring x\nideal I = x^13")
    J = ideal("ring y\nideal J = y", "J")
    with pytest.raises(ResourceError):
        direct_ass_sum(I, J, 1)


def test_decomposition_small_pairs():
    I = ideal("ring x\nideal I = x^2")
    J = ideal("ring y\nideal J = y^3", "J")
    assert verify_decomposition(I, J, 2, 8)
    assert disjoint_intersection_check(I, J)
    for I, J in corpus_pairs(3, 20, 2, 3, 3):
        assert verify_decomposition(I, J, 2, 6)


def test_asymptotic_nonpersistent():
    I = ideal(NONPERSISTENT_TEXT)
    J = ideal("ring y\nideal J = y^2", "J")
    rep = asymptotic_ass_sum(I, J, 5)
    assert (rep.astab_I, rep.astab_J, rep.threshold) == (2, 1, 2)
    assert rep.status == "verified"
    assert names(rep.asymptotic_set) == [["a", "b", "y"], ["a", "b", "c", "y"]]


def test_asymptotic_inconclusive_on_short_window():
    I = ideal(NONPERSISTENT_TEXT)
    J = ideal("ring y\nideal J = y^2", "J")
    assert asymptotic_ass_sum(I, J, 1).status == "inconclusive"


@given(monomial_ideals(max_vars=2, max_gens=3, max_deg=3),
       monomial_ideals(max_vars=2, max_gens=3, max_deg=3),
       st.integers(1, 3))
def test_formula_symmetric_in_blocks(I, J, n):
    J = _right(J)
    a = formula_ass_sum(I, J, n)
    b = formula_ass_sum(J, I, n)
    assert sorted(p.names for p in a) == sorted(sorted(p.names) for p in b)


@given(monomial_ideals(max_vars=2, max_gens=3, max_deg=3),
       monomial_ideals(max_vars=2, max_gens=3, max_deg=3))
def test_first_power_is_product_of_primes(I, J):
    J = _right(J)
    expect = sorted(sorted(p.names + q.names)
                    for p in ass_ring_quotient(I) for q in ass_ring_quotient(J))
    assert sorted(sorted(p.names) for p in direct_ass_sum(I, J, 1)) == expect
