"""Reproduction cases stored as data in ``cases.json``.

Each entry names a runner ``kind``, its inputs and the expected outputs; the
runner computes the same keys and the case passes when they all agree.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from .core import MonomialIdeal, power
from .errors import UnknownNameError
from .gbexamples import named_example
from .parsing import parse_ideal_file
from .persistence import persistence_check
from .serialize import to_jsonable
from .sums import (
    asymptotic_ass_sum,
    disjoint_intersection_check,
    verify_decomposition,
    verify_sum_formula_range,
)


@lru_cache(maxsize=1)
def load_cases() -> tuple:
    text = resources.files(__package__).joinpath("cases.json").read_text(encoding="utf-8")
    return tuple(json.loads(text))


def case_names() -> list:
    return [c["name"] for c in load_cases()]


def get_case(name: str) -> dict:
    for c in load_cases():
        if c["name"] == name:
            return c
    raise UnknownNameError(f"unknown case {name!r}; have {case_names()}")


def _ideal(text: str, name: str) -> MonomialIdeal:
    return parse_ideal_file(text).monomial_ideal(name)


def _run_persistence(inp: dict) -> dict:
    parsed = parse_ideal_file(inp["file"])
    I = parsed.monomial_ideal(inp["ideal"])
    rep = persistence_check(I, inp["max_n"])
    out = {
        "first_failure": None if rep.first_failure is None else
        {"n": rep.first_failure[0], "witness": rep.first_failure[1].names},
        "ass_sets": to_jsonable(rep.ass_sets),
    }
    if "power_target" in inp:
        # n with I^n == M^(k n)
        M = parsed.monomial_ideal(inp["power_target"])
        k = inp["power_factor"]
        out["powers_equal_target"] = [n for n in range(1, inp["max_n"] + 1)
                                      if power(I, n) == power(M, k * n)]
    return out


def _pair(inp: dict) -> tuple:
    return _ideal(inp["left_file"], inp["left"]), _ideal(inp["right_file"], inp["right"])


def _run_sum_formula(inp: dict) -> dict:
    I, J = _pair(inp)
    reports = verify_sum_formula_range(I, J, inp["max_n"])
    return {
        "match": [r.match for r in reports],
        "formula_value": [to_jsonable(r.formula_value) for r in reports],
        "direct_value": [to_jsonable(r.direct_value) for r in reports],
        "sandwich": [r.sandwich for r in reports],
    }


def _run_decomposition(inp: dict) -> dict:
    I, J = _pair(inp)
    return {
        "holds": verify_decomposition(I, J, inp["n"], inp["dmax"]),
        "intersection_is_product": disjoint_intersection_check(I, J),
    }


def _run_gb_example(inp: dict) -> dict:
    rep = named_example(inp["example"])
    out = to_jsonable(rep)
    out.update(rep.facts)
    return out


def _run_asymptotic(inp: dict) -> dict:
    I, J = _pair(inp)
    return to_jsonable(asymptotic_ass_sum(I, J, inp["window"]))


_RUNNERS = {
    "persistence": _run_persistence,
    "sum-formula": _run_sum_formula,
    "decomposition": _run_decomposition,
    "gb-example": _run_gb_example,
    "asymptotic": _run_asymptotic,
}


def run_case(name: str) -> dict:
    case = get_case(name)
    actual = _RUNNERS[case["kind"]](case["inputs"])
    mismatches = [k for k, v in case["expected"].items() if actual.get(k) != v]
    return {
        "case": name,
        "kind": case["kind"],
        "source": case["source"],
        "expected": case["expected"],
        "actual": actual,
        "mismatches": mismatches,
        "passed": not mismatches,
    }
