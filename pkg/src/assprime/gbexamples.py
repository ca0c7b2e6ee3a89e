"""Registered polynomial examples checked with truncated Groebner bases."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .core import Ring
from .errors import UnknownNameError
from .gb import (
    FieldSpec,
    Polynomial,
    buchberger_truncated,
    derivative_ideal,
    ideal_power_generators,
)
from .parsing import parse_polynomial

PROXY_CHARACTERISTIC = 32003


@dataclass
class Verdict:
    description: str
    expected: bool
    actual: bool

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass
class ExampleReport:
    name: str
    characteristic: int
    dmax: int
    verdicts: list = field(default_factory=list)
    facts: dict = field(default_factory=dict)
    caveats: list = field(default_factory=list)
    timing_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)


def gorenstein_ideal_generators(field_spec: FieldSpec) -> tuple:
    """2-minors of the generic 3x3 matrix plus the squares of its rows and columns.

    Returns (ring, generators, f) with f = x1*y2*z3 + x2*y3*z1 + x3*y1*z2.
    """
    ring = Ring(("x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3"))
    P = lambda s: parse_polynomial(ring, field_spec, s)
    rows = ["x", "y", "z"]
    gens = []
    for r1 in range(3):
        for r2 in range(r1 + 1, 3):
            for c1 in range(1, 4):
                for c2 in range(c1 + 1, 4):
                    a, b = rows[r1], rows[r2]
                    gens.append(P(f"{a}{c1}*{b}{c2} - {a}{c2}*{b}{c1}"))
    squares = set()
    for c in range(1, 4):
        col = [f"{r}{c}" for r in rows]
        squares.update(_pair_products(col))
    for r in rows:
        row = [f"{r}{c}" for c in range(1, 4)]
        squares.update(_pair_products(row))
    gens.extend(P(s) for s in sorted(squares))
    f = P("x1*y2*z3 + x2*y3*z1 + x3*y1*z2")
    return ring, gens, f


def _pair_products(names: list) -> set:
    out = set()
    for i in range(len(names)):
        for j in range(i, len(names)):
            out.add("*".join(sorted([names[i], names[j]])))
    return out


def _gorenstein(characteristic: int, dmax: int) -> ExampleReport:
    fs = FieldSpec(characteristic)
    ring, gens, f = gorenstein_ideal_generators(fs)
    report = ExampleReport("gorenstein-char2", characteristic, dmax)
    GI = buchberger_truncated(gens, dmax)
    quadrics = GI.degree_counts().get(2, 0)
    report.facts["generator_count"] = quadrics
    report.facts["input_generators"] = len(gens)
    I2 = ideal_power_generators(gens, 2)
    report.facts["square_generators"] = len(I2)
    GI2 = buchberger_truncated(I2, dmax)
    expected_socle = characteristic == 2
    report.verdicts.append(Verdict("ideal has 36 minimal quadric generators", True, quadrics == 36))
    report.verdicts.append(Verdict("f not in I", True, not GI.contains(f)))
    report.verdicts.append(Verdict("f not in I^2", True, not GI2.contains(f)))
    for name, x in zip(ring.vars, Polynomial.variables(ring, fs)):
        report.verdicts.append(Verdict(f"f*{name} in I^2", expected_socle, GI2.contains(f * x)))
    if characteristic != 2:
        report.caveats.append("expected values for f*x_i assume the char-0 behaviour I^2:m in I")
    return report


def _gr_depth_zero(characteristic: int, dmax: int) -> ExampleReport:
    fs = FieldSpec(characteristic)
    ring = Ring(("x", "y", "z", "t"))
    P = lambda s: parse_polynomial(ring, fs, s)
    gens = [P(s) for s in ("x^4 + y^3*z", "x^3*y", "x^2*t^2", "y^4", "y^2*z^2")]
    report = ExampleReport("gr-depth-zero", characteristic, dmax)
    GI = buchberger_truncated(gens, dmax)
    GI2 = buchberger_truncated(ideal_power_generators(gens, 2), dmax)
    w = P("x^2*y^3*z")
    report.verdicts.append(Verdict("x^2*y^3*z not in I", True, not GI.contains(w)))
    for i, g in enumerate(gens):
        report.verdicts.append(Verdict(f"x^2*y^3*z * g{i + 1} in I^2 (g{i + 1} = {g})", True,
                                       GI2.contains(w * g)))
    s = P("x^2*y^3*z*t")
    report.verdicts.append(Verdict("x^2*y^3*z*t not in I", True, not GI.contains(s)))
    for name, x in zip(ring.vars, Polynomial.variables(ring, fs)):
        report.verdicts.append(Verdict(f"x^2*y^3*z*t * {name} in I", True, GI.contains(s * x)))
    if characteristic != 2:
        report.caveats.append("char-proxy")
    return report


def _derivative_remark(characteristic: int, dmax: int) -> ExampleReport:
    fs = FieldSpec(characteristic)
    ring = Ring(("x", "y", "z"))
    P = lambda s: parse_polynomial(ring, fs, s)
    f = P("x^5 + x^4*y + y^4*z")
    x, y, z = Polynomial.variables(ring, fs)
    D = derivative_ideal([x * f, y * f])
    G = buchberger_truncated(D, dmax)
    report = ExampleReport("derivative-remark", characteristic, dmax)
    report.facts["derivative_generators"] = len(D)
    report.verdicts.append(Verdict("x*f in d(I)", True, G.contains(x * f)))
    report.verdicts.append(Verdict("y*f in d(I)", True, G.contains(y * f)))
    report.verdicts.append(Verdict("f not in d(I)", True, not G.contains(f)))
    report.verdicts.append(Verdict("z*f not in d(I)", True, not G.contains(z * f)))
    report.caveats.append("char-proxy")
    return report


_REGISTRY: dict = {
    "gorenstein-char2": (_gorenstein, 2, 5),
    "gr-depth-zero": (_gr_depth_zero, PROXY_CHARACTERISTIC, 10),
    "derivative-remark": (_derivative_remark, PROXY_CHARACTERISTIC, 6),
}


def example_names() -> list:
    return sorted(_REGISTRY)


def named_example(name: str, characteristic: Optional[int] = None,
                  dmax: Optional[int] = None) -> ExampleReport:
    try:
        builder, default_char, default_dmax = _REGISTRY[name]
    except KeyError:
        raise UnknownNameError(f"unknown example {name!r}; have {example_names()}") from None
    start = time.perf_counter()
    report = builder(characteristic or default_char, dmax or default_dmax)
    report.timing_ms = round((time.perf_counter() - start) * 1000, 3)
    return report
