"""Sparse polynomials over prime fields and a degree-truncated Buchberger procedure.

Polynomials are dictionaries ``{exponent tuple: coefficient}`` with
coefficients in ``range(1, p)``.  The monomial order is graded reverse
lexicographic throughout.  Bases are computed degree by degree for
homogeneous input only, which is what makes truncation sound: a homogeneous
element of degree d lies in the ideal iff it reduces to zero modulo the basis
elements of degree <= d.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Sequence

from .core import Ring, format_exponents
from .errors import DomainError, RingMismatchError, TruncationError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int

    def __post_init__(self):
        if not is_prime(self.characteristic):
            raise DomainError(f"{self.characteristic} is not prime")

    @property
    def has_half(self) -> bool:
        """Whether 1/2 exists in the field."""
        return self.characteristic != 2

    def inverse(self, a: int) -> int:
        a %= self.characteristic
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return pow(a, -1, self.characteristic)


@lru_cache(maxsize=None)
def grevlex_key(e: tuple) -> tuple:
    """Sort key: larger key means larger monomial in grevlex."""
    return (sum(e), tuple(-x for x in reversed(e)))


def _heap_key(e: tuple) -> tuple:
    # min-heap order equals descending grevlex
    return (-sum(e), e[::-1])


def _add_scaled(target: dict, src: dict, shift: tuple, c: int, p: int, heap=None):
    """target -= c * x^shift * src  (in place)."""
    for e, a in src.items():
        m = tuple(x + y for x, y in zip(e, shift)) if shift else e
        v = (target.get(m, 0) - c * a) % p
        if v:
            if heap is not None and m not in target:
                heapq.heappush(heap, (_heap_key(m), m))
            target[m] = v
        else:
            target.pop(m, None)


class Polynomial:
    """An element of ``ring`` with coefficients in GF(p)."""

    __slots__ = ("ring", "field", "terms")

    def __init__(self, ring: Ring, field: FieldSpec, terms: Optional[dict] = None):
        p = field.characteristic
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != ring.nvars:
                raise RingMismatchError(f"exponent {e} does not belong to {ring}")
            c %= p
            if c:
                clean[e] = (clean.get(e, 0) + c) % p
                if not clean[e]:
                    del clean[e]
        self.ring = ring
        self.field = field
        self.terms = clean

    @classmethod
    def _raw(cls, ring, field, terms):
        obj = cls.__new__(cls)
        obj.ring, obj.field, obj.terms = ring, field, terms
        return obj

    @classmethod
    def monomial(cls, ring: Ring, field: FieldSpec, exps: Sequence[int], coeff: int = 1):
        return cls(ring, field, {tuple(exps): coeff})

    @classmethod
    def variable(cls, ring: Ring, field: FieldSpec, name: str):
        return cls.monomial(ring, field, ring.variable(ring.index(name)))

    @classmethod
    def variables(cls, ring: Ring, field: FieldSpec) -> list:
        return [cls.monomial(ring, field, ring.variable(i)) for i in range(ring.nvars)]

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring or self.field != other.field:
            raise RingMismatchError("polynomials over different rings or fields")

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def leading_monomial(self) -> tuple:
        if not self.terms:
            raise DomainError("zero polynomial has no leading term")
        return max(self.terms, key=grevlex_key)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        _add_scaled(out, other.terms, (), self.field.characteristic - 1, self.field.characteristic)
        return Polynomial._raw(self.ring, self.field, out)

    def __neg__(self) -> "Polynomial":
        p = self.field.characteristic
        return Polynomial._raw(self.ring, self.field, {e: p - c for e, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        _add_scaled(out, other.terms, (), 1, self.field.characteristic)
        return Polynomial._raw(self.ring, self.field, out)

    def __mul__(self, other) -> "Polynomial":
        p = self.field.characteristic
        if isinstance(other, int):
            return Polynomial(self.ring, self.field, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(e1, e2))
                v = (out.get(m, 0) + c1 * c2) % p
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Polynomial._raw(self.ring, self.field, out)

    __rmul__ = __mul__

    def derivative(self, i: int) -> "Polynomial":
        """Partial derivative with respect to the i-th variable."""
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
        return Polynomial(self.ring, self.field, out)

    def monic(self) -> "Polynomial":
        lead = self.leading_monomial()
        inv = self.field.inverse(self.terms[lead])
        return self * inv

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.field, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({str(self)!r}, GF({self.field.characteristic}))"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = format_exponents(self.ring, e)
            if c == 1:
                parts.append(mono)
            elif mono == "1":
                parts.append(str(c))
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


class GBasis:
    """A Groebner basis complete up to ``truncation_degree`` (grevlex, homogeneous input).

    ``gens`` are monic; ``_leads`` maps each leading monomial to its index.
    """

    order = "grevlex"

    def __init__(self, ring: Ring, field: FieldSpec, gens: list, truncation_degree: int):
        self.ring = ring
        self.field = field
        self.gens = gens
        self.truncation_degree = truncation_degree
        self._lead_list = [g.leading_monomial() for g in gens]
        self._leads = {e: i for i, e in enumerate(self._lead_list)}
        self._lead_degrees = sorted({sum(e) for e in self._leads})

    def __len__(self):
        return len(self.gens)

    def degree_counts(self) -> dict:
        counts: dict = {}
        for e in self._leads:
            counts[sum(e)] = counts.get(sum(e), 0) + 1
        return dict(sorted(counts.items()))

    def _divisor(self, t: tuple) -> Optional[int]:
        deg = sum(t)
        leads = self._leads
        if t in leads:
            return leads[t]
        for d in self._lead_degrees:
            if d >= deg:
                break
            # enumerate divisors of t of total degree d
            for e in _divisors_of_degree(t, d):
                idx = leads.get(e)
                if idx is not None:
                    return idx
        return None

    def _reduce(self, terms: dict, quotients: Optional[dict] = None) -> dict:
        p = self.field.characteristic
        f = dict(terms)
        heap = [(_heap_key(e), e) for e in f]
        heapq.heapify(heap)
        rem = {}
        while heap:
            _, t = heapq.heappop(heap)
            c = f.get(t)
            if c is None:
                continue
            idx = self._divisor(t)
            if idx is None:
                rem[t] = f.pop(t)
                continue
            g = self.gens[idx].terms
            lead = self._lead_list[idx]
            shift = tuple(x - y for x, y in zip(t, lead))
            if quotients is not None:
                q = quotients.setdefault(idx, {})
                q[shift] = (q.get(shift, 0) + c) % p
            _add_scaled(f, g, shift, c, p, heap)
        return rem

    def _check_poly(self, f: Polynomial):
        if f.ring != self.ring or f.field != self.field:
            raise RingMismatchError("polynomial and basis live over different rings or fields")
        if f.degree > self.truncation_degree:
            raise TruncationError(
                f"degree {f.degree} exceeds truncation degree {self.truncation_degree}")

    def normal_form(self, f: Polynomial) -> Polynomial:
        self._check_poly(f)
        return Polynomial._raw(self.ring, self.field, self._reduce(f.terms))

    def divide(self, f: Polynomial) -> tuple:
        """(quotients, remainder) with f = sum(quotients[i] * gens[i]) + remainder."""
        self._check_poly(f)
        raw: dict = {}
        rem = self._reduce(f.terms, raw)
        quotients = {i: Polynomial(self.ring, self.field, q) for i, q in raw.items()}
        return quotients, Polynomial._raw(self.ring, self.field, rem)

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()


def _divisors_of_degree(t: tuple, d: int):
    n = len(t)
    # recursive distribution of d units among coordinates bounded by t
    def rec(i, left):
        if i == n - 1:
            if left <= t[i]:
                yield (left,)
            return
        rest_cap = sum(t[i + 1:])
        lo = max(0, left - rest_cap)
        for k in range(min(t[i], left), lo - 1, -1):
            for tail in rec(i + 1, left - k):
                yield (k,) + tail
    return rec(0, d)


def _common_ring(gens: Sequence[Polynomial]) -> tuple:
    if not gens:
        raise DomainError("need at least one generator")
    ring, field = gens[0].ring, gens[0].field
    for g in gens:
        if g.ring != ring or g.field != field:
            raise RingMismatchError("generators live over different rings or fields")
    return ring, field


def buchberger_truncated(gens: Iterable[Polynomial], dmax: int) -> GBasis:
    """Groebner basis of the homogeneous ideal (gens), complete through degree dmax.

    Degree-by-degree normal strategy.  S-pairs with lcm degree above dmax are
    discarded; pairs with coprime leading monomials are skipped.
    """
    gens = list(gens)
    ring, field = _common_ring(gens)
    p = field.characteristic
    for g in gens:
        if g.is_zero():
            raise DomainError("zero generator")
        if not g.is_homogeneous():
            raise DomainError(f"inhomogeneous generator {g}; truncation needs homogeneous input")
    top = max(g.degree for g in gens)
    if dmax < top:
        raise TruncationError(f"dmax={dmax} is below the largest generator degree {top}")

    basis = GBasis(ring, field, [], dmax)
    by_degree: dict = {}
    for g in gens:
        by_degree.setdefault(g.degree, []).append(g.terms)
    pairs: dict = {}

    def add(poly_terms: dict):
        poly = Polynomial._raw(ring, field, poly_terms).monic()
        lead = poly.leading_monomial()
        new = len(basis.gens)
        for i, other in enumerate(basis._lead_list):
            if not any(a and b for a, b in zip(lead, other)):
                continue
            lcm = tuple(max(a, b) for a, b in zip(lead, other))
            deg = sum(lcm)
            if deg <= dmax:
                pairs.setdefault(deg, []).append((i, new, lcm))
        basis.gens.append(poly)
        basis._lead_list.append(lead)
        basis._leads[lead] = new
        if sum(lead) not in basis._lead_degrees:
            basis._lead_degrees = sorted(set(basis._lead_degrees) | {sum(lead)})

    for d in range(min(by_degree), dmax + 1):
        work = []
        for i, j, lcm in sorted(pairs.pop(d, []), key=lambda t: (grevlex_key(t[2]), t[0], t[1])):
            fi, fj = basis.gens[i], basis.gens[j]
            li, lj = basis._lead_list[i], basis._lead_list[j]
            s = {}
            _add_scaled(s, fi.terms, tuple(a - b for a, b in zip(lcm, li)), p - 1, p)
            _add_scaled(s, fj.terms, tuple(a - b for a, b in zip(lcm, lj)), 1, p)
            work.append(s)
        work.extend(by_degree.get(d, []))
        for s in work:
            r = basis._reduce(s)
            if r:
                add(r)
    return basis


def ideal_power_generators(gens: Sequence[Polynomial], n: int = 2) -> list:
    """All products of n generators (with repetition); no minimalization."""
    out = []
    for combo in combinations_with_replacement(range(len(gens)), n):
        prod = gens[combo[0]]
        for k in combo[1:]:
            prod = prod * gens[k]
        out.append(prod)
    return out


def derivative_ideal(gens: Iterable[Polynomial]) -> list:
    """All first partial derivatives of the generators, zeros dropped."""
    out = []
    for g in gens:
        if g.is_zero():
            raise DomainError("zero generator")
        for i in range(g.ring.nvars):
            d = g.derivative(i)
            if not d.is_zero():
                out.append(d)
    return out


@dataclass
class QuadrupleReport:
    """Verdicts for f in (I^2 : m) \\ I."""

    not_in_I: bool
    not_in_I2: bool
    products_in_I2: dict
    passed: bool


def check_quadruple(f: Polynomial, I_gens: Sequence[Polynomial], I2_gens: Sequence[Polynomial],
                    dmax: Optional[int] = None) -> QuadrupleReport:
    """f not in I, f not in I^2, and f * x_i in I^2 for every variable x_i."""
    if f.is_zero():
        raise DomainError("f must be nonzero")
    if not f.is_homogeneous():
        raise DomainError("f must be homogeneous")
    if dmax is None:
        dmax = f.degree + 1
    if dmax < f.degree + 1:
        raise TruncationError("dmax must be at least deg(f) + 1")
    GI = buchberger_truncated(I_gens, max(dmax, max(g.degree for g in I_gens)))
    GI2 = buchberger_truncated(I2_gens, max(dmax, max(g.degree for g in I2_gens)))
    not_in_I = not GI.contains(f)
    not_in_I2 = not GI2.contains(f)
    prods = {}
    for name, x in zip(f.ring.vars, Polynomial.variables(f.ring, f.field)):
        prods[name] = GI2.contains(f * x)
    return QuadrupleReport(not_in_I, not_in_I2, prods,
                           not_in_I and not_in_I2 and all(prods.values()))
