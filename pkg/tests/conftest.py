"""Shared fixtures, strategies and the acceptance summary printer."""

import pytest
from hypothesis import settings, strategies as st

from assprime.core import MonomialIdeal, Ring
from assprime.parsing import parse_ideal_file

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

NONPERSISTENT_TEXT = "ring a b c\nideal I = a^4, a^3*b, a*b^3, b^4, a^2*b^2*c\nideal M = a, b\n"

# criterion number -> (passed, detail); filled by tests/test_acceptance.py
ACCEPTANCE_RESULTS: dict = {}


def ideal(text: str, name: str = "I") -> MonomialIdeal:
    """Parse a one-file ideal, e.g. ideal("ring x y\\nideal I = x^2, x*y")."""
    return parse_ideal_file(text).monomial_ideal(name)


@st.composite
def monomial_ideals(draw, max_vars=3, max_gens=4, max_deg=4, proper=True):
    v = draw(st.integers(1, max_vars))
    ring = Ring(tuple(f"x{i + 1}" for i in range(v)))
    vec = st.tuples(*[st.integers(0, max_deg)] * v)
    if proper:
        vec = vec.filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return MonomialIdeal(ring, gens)


@st.composite
def ideal_pairs_same_ring(draw, nvars=3, max_gens=3, max_deg=3):
    ring = Ring(tuple(f"x{i + 1}" for i in range(nvars)))
    vec = st.tuples(*[st.integers(0, max_deg)] * nvars)
    I = MonomialIdeal(ring, draw(st.lists(vec, min_size=1, max_size=max_gens)))
    J = MonomialIdeal(ring, draw(st.lists(vec, min_size=1, max_size=max_gens)))
    return I, J


@pytest.fixture
def nonpersistent():
    return parse_ideal_file(NONPERSISTENT_TEXT)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
