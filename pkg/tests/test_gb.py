from itertools import product

import pytest
from hypothesis import given, strategies as st

from assprime.core import Ring
from assprime.errors import DomainError, RingMismatchError, TruncationError
from assprime.gb import (
    FieldSpec,
    Polynomial,
    buchberger_truncated,
    check_quadruple,
    derivative_ideal,
    ideal_power_generators,
    is_prime,
)
from assprime.gbexamples import example_names, gorenstein_ideal_generators, named_example
from assprime.parsing import parse_polynomial

R3 = Ring(("x", "y", "z"))
F7 = FieldSpec(7)


def P(text, ring=R3, field=F7):
    return parse_polynomial(ring, field, text)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert is_prime(32003)
    with pytest.raises(DomainError):
        FieldSpec(9)


def test_arithmetic_mod_p():
    f = P("x + 6*y")
    assert str(f * f) == "x^2 + 5*x*y + y^2"
    assert (f - f).is_zero()
    assert P("3*x^2*y").derivative(0) == P("6*x*y")
    assert F7.inverse(3) * 3 % 7 == 1
    assert not FieldSpec(2).has_half


def test_grevlex_leading_monomial():
    # the smaller power of the last variable wins ties in degree
    assert P("x*z^2 + y^3 + x^2*z").leading_monomial() == (0, 3, 0)
    assert P("x*z^2 + x^2*z").leading_monomial() == (2, 0, 1)


def test_division_identity():
    G = buchberger_truncated([P("x^2 - y*z"), P("x*y - z^2")], 6)
    f = P("x^3*y + 2*x*y*z^2 + z^4")
    quotients, r = G.divide(f)
    total = r
    for i, q in quotients.items():
        total = total + q * G.gens[i]
    assert total == f


def test_truncation_errors():
    G = buchberger_truncated([P("x^2")], 3)
    with pytest.raises(TruncationError):
        G.contains(P("x^4"))
    with pytest.raises(TruncationError):
        buchberger_truncated([P("x^3")], 2)
    with pytest.raises(DomainError):
        buchberger_truncated([P("x^2 + y")], 4)
    with pytest.raises(RingMismatchError):
        buchberger_truncated([P("x"), P("x", field=FieldSpec(5))], 2)


def _homogeneous(draw_terms, degree, p):
    terms = {}
    for e, c in draw_terms:
        e = (e[0], e[1], degree - e[0] - e[1])
        if e[2] >= 0:
            terms[e] = (terms.get(e, 0) + c) % p
    return Polynomial(R3, FieldSpec(p), terms)


homogeneous_sets = st.lists(
    st.tuples(st.integers(1, 3),
              st.lists(st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                                 st.integers(1, 6)), min_size=1, max_size=4)),
    min_size=1, max_size=3)


@given(homogeneous_sets)
def test_lead_ideal_matches_sympy(shape):
    """Degreewise counts of the leading-term ideal agree with a full sympy basis."""
    sympy = pytest.importorskip("sympy")
    gens = [_homogeneous(terms, d, 7) for d, terms in shape]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return
    dmax = 6
    G = buchberger_truncated(gens, dmax)
    x, y, z = sympy.symbols("x y z")
    exprs = [sympy.sympify(str(g).replace("^", "**")) for g in gens]
    S = sympy.groebner(exprs, x, y, z, modulus=7, order="grevlex")
    s_leads = [sympy.Poly(g, x, y, z).monoms(order="grevlex")[0] for g in S.exprs]
    ours = G._lead_list
    for d in range(dmax + 1):
        mons = [e for e in product(range(d + 1), repeat=3) if sum(e) == d]
        div = lambda leads, e: any(all(a <= b for a, b in zip(l, e)) for l in leads)
        assert [div(ours, e) for e in mons] == [div(s_leads, e) for e in mons]


def test_membership_matches_sympy():
    sympy = pytest.importorskip("sympy")
    gens = [P("x^2 - y*z"), P("x*y - z^2"), P("y^3 + 3*x*z^2")]
    G = buchberger_truncated(gens, 6)
    x, y, z = sympy.symbols("x y z")
    S = sympy.groebner([x**2 - y*z, x*y - z**2, y**3 + 3*x*z**2], x, y, z,
                       modulus=7, order="grevlex")
    for text in ["x^3", "x^2*y - y^2*z", "z^4", "x*z^3 - y^2*z^2", "y^4", "x^2*z^2"]:
        expr = sympy.sympify(text.replace("^", "**"))
        assert G.contains(P(text)) == S.contains(expr), text


def test_power_generators_and_derivatives():
    gens = [P("x"), P("y"), P("z")]
    assert len(ideal_power_generators(gens, 2)) == 6
    d = derivative_ideal([P("x^2*y")])
    assert set(map(str, d)) == {"2*x*y", "x^2"}


def test_quadruple_on_maximal_ideal_square():
    # f = x is in I, so the first verdict fails
    gens = [P("x"), P("y"), P("z")]
    rep = check_quadruple(P("x"), gens, ideal_power_generators(gens, 2))
    assert not rep.not_in_I and not rep.passed


def test_gorenstein_generators():
    ring, gens, f = gorenstein_ideal_generators(FieldSpec(2))
    assert len(gens) == 36 and all(g.degree == 2 for g in gens)
    assert f.degree == 3


@pytest.mark.parametrize("name", ["gr-depth-zero", "derivative-remark"])
def test_fast_examples_pass(name):
    rep = named_example(name)
    assert rep.passed
    assert "char-proxy" in rep.caveats


def test_example_registry():
    assert example_names() == ["derivative-remark", "gorenstein-char2", "gr-depth-zero"]
