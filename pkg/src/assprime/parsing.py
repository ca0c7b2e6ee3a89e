"""Reader for ideal files.

Grammar (one statement per line, ``#`` starts a comment)::

    ring  <name> <name> ...
    field <prime>
    ideal <Name> = <gen> , <gen> , ...

A generator is a sum of terms ``[<int> *] x^2*y*z^3`` separated by ``+`` or
``-``; a bare integer is a constant term.  Monomial commands need every
generator to be a single term with coefficient 1; ``0`` alone denotes the
zero ideal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .core import MonomialIdeal, Ring
from .errors import DomainError, ParseError, UnknownNameError
from .gb import FieldSpec, Polynomial

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<int>\d+)|(?P<op>[\^*+\-,=]))")


@dataclass
class Generator:
    terms: dict
    line: int
    column: int


@dataclass
class IdealFile:
    ring: Ring
    field: Optional[FieldSpec] = None
    ideals: dict = dc_field(default_factory=dict)

    def names(self) -> list:
        return list(self.ideals)

    def _get(self, name: str) -> list:
        try:
            return self.ideals[name]
        except KeyError:
            raise UnknownNameError(f"no ideal named {name!r}; have {self.names()}") from None

    def monomial_ideal(self, name: str) -> MonomialIdeal:
        gens = []
        for g in self._get(name):
            if not g.terms:
                continue
            if len(g.terms) != 1 or next(iter(g.terms.values())) != 1:
                raise ParseError(f"ideal {name} needs monomial generators", g.line, g.column,
                                 ["monomial"])
            gens.append(next(iter(g.terms)))
        return MonomialIdeal(self.ring, gens)

    def polynomials(self, name: str, field: Optional[FieldSpec] = None) -> list:
        fs = field or self.field
        if fs is None:
            raise DomainError("polynomial ideals need a 'field <p>' declaration")
        return [Polynomial(self.ring, fs, g.terms) for g in self._get(name)]


class _Line:
    def __init__(self, text: str, lineno: int):
        self.lineno = lineno
        self.tokens = []
        pos = 0
        stripped = text.split("#", 1)[0].rstrip()
        while pos < len(stripped):
            m = _TOKEN.match(stripped, pos)
            if m is None or m.end() == pos:
                col = pos + 1
                while col <= len(stripped) and stripped[col - 1].isspace():
                    col += 1
                raise ParseError(f"unexpected character {stripped[col - 1]!r}", lineno, col)
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind) + 1))
            pos = m.end()
        self.i = 0
        self.end_col = len(stripped) + 1

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None, self.end_col)

    def take(self, kind: str, value: Optional[str] = None, expected: Optional[str] = None):
        k, v, col = self.peek()
        if k != kind or (value is not None and v != value):
            want = expected or (repr(value) if value else kind)
            got = "end of line" if k is None else repr(v)
            raise ParseError(f"unexpected {got}", self.lineno, col, [want])
        self.i += 1
        return v, col

    def at_end(self) -> bool:
        return self.i >= len(self.tokens)


def _parse_term(line: _Line, ring: Ring) -> tuple:
    exps = [0] * ring.nvars
    coeff = 1
    k, v, col = line.peek()
    if k == "int":
        coeff = int(v)
        line.i += 1
        if line.peek()[1] != "*":
            return tuple(exps), coeff
        line.i += 1
    while True:
        name, col = line.take("name", expected="variable")
        if name not in ring.vars:
            raise ParseError(f"unknown variable {name!r}", line.lineno, col, list(ring.vars))
        power = 1
        if line.peek()[1] == "^":
            line.i += 1
            digits, _ = line.take("int", expected="integer exponent")
            power = int(digits)
        exps[ring.vars.index(name)] += power
        if line.peek()[1] != "*":
            return tuple(exps), coeff
        line.i += 1


def _parse_generator(line: _Line, ring: Ring) -> Generator:
    _, _, col = line.peek()
    terms: dict = {}
    sign = 1
    if line.peek()[1] == "-":
        sign = -1
        line.i += 1
    while True:
        e, c = _parse_term(line, ring)
        terms[e] = terms.get(e, 0) + sign * c
        op = line.peek()[1]
        if op == "+":
            sign = 1
        elif op == "-":
            sign = -1
        else:
            break
        line.i += 1
    terms = {e: c for e, c in terms.items() if c}
    return Generator(terms, line.lineno, col)


def parse_ideal_file(text: str) -> IdealFile:
    """Parse the text of an ideal file; raises :class:`ParseError` with a position."""
    ring: Optional[Ring] = None
    fs: Optional[FieldSpec] = None
    ideals: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _Line(raw, lineno)
        if line.at_end():
            continue
        keyword, col = line.take("name", expected="'ring', 'field' or 'ideal'")
        if keyword == "ring":
            if ring is not None:
                raise ParseError("ring declared twice", lineno, col)
            names = []
            while not line.at_end():
                name, ncol = line.take("name", expected="variable name")
                if name in names:
                    raise ParseError(f"duplicate variable {name!r}", lineno, ncol)
                names.append(name)
            if not names:
                raise ParseError("ring needs variables", lineno, line.end_col, ["variable name"])
            ring = Ring(tuple(names))
        elif keyword == "field":
            digits, pcol = line.take("int", expected="prime characteristic")
            try:
                fs = FieldSpec(int(digits))
            except DomainError as exc:
                raise ParseError(str(exc), lineno, pcol, ["prime"]) from None
        elif keyword == "ideal":
            if ring is None:
                raise ParseError("ideal before ring declaration", lineno, col, ["ring"])
            name, ncol = line.take("name", expected="ideal name")
            if name in ideals:
                raise ParseError(f"ideal {name!r} defined twice", lineno, ncol)
            line.take("op", "=", expected="'='")
            gens = [_parse_generator(line, ring)]
            while line.peek()[1] == ",":
                line.i += 1
                gens.append(_parse_generator(line, ring))
            ideals[name] = gens
        else:
            raise ParseError(f"unknown statement {keyword!r}", lineno, col,
                             ["ring", "field", "ideal"])
        if not line.at_end():
            _, v, c = line.peek()
            raise ParseError(f"unexpected {v!r}", lineno, c, ["',' or end of line"])
    if ring is None:
        raise ParseError("missing ring declaration", 1, 1, ["ring"])
    return IdealFile(ring, fs, ideals)


def parse_polynomial(ring: Ring, field: FieldSpec, text: str) -> Polynomial:
    """Parse a single polynomial expression over ``ring``."""
    line = _Line(text, 1)
    gen = _parse_generator(line, ring)
    if not line.at_end():
        _, v, c = line.peek()
        raise ParseError(f"unexpected {v!r}", 1, c, ["end of input"])
    return Polynomial(ring, field, gen.terms)


def format_ideal_file(ring: Ring, ideals: dict, field: Optional[FieldSpec] = None) -> str:
    """Serialize monomial ideals (name -> MonomialIdeal) back to file syntax."""
    lines = ["ring " + " ".join(ring.vars)]
    if field is not None:
        lines.append(f"field {field.characteristic}")
    for name, I in ideals.items():
        body = ", ".join(str(g) for g in I.gens) if not I.is_zero() else "0"
        lines.append(f"ideal {name} = {body}")
    return "\n".join(lines) + "\n"
