import pytest

from assprime.errors import UnknownNameError
from assprime.registry import case_names, get_case, run_case

FAST = [n for n in case_names() if n != "gorenstein-char2"]


def test_all_names_present():
    assert case_names() == [
        "sect5-persistence-failure", "thm4-monomial-formula", "prop21-decomposition",
        "gorenstein-char2", "gr-depth-zero", "derivative-remark", "asymptotic-bound",
    ]
    for name in case_names():
        assert get_case(name)["source"] in ("literature", "computed")


@pytest.mark.parametrize("name", FAST)
def test_case_passes(name):
    result = run_case(name)
    assert result["passed"], result["mismatches"]


def test_unknown_case():
    with pytest.raises(UnknownNameError):
        get_case("nope")
