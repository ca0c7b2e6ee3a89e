"""Exact arithmetic on rings, monomials and monomial ideals.

Monomials are exponent vectors over an ordered list of variables.  A
:class:`MonomialIdeal` always stores its *minimal* generating set in a
canonical order (total degree, then lexicographic on exponents), so equal
ideals compare equal and print identically.

Internally every routine works on plain ``tuple[int, ...]`` exponent vectors;
the :class:`Monomial` wrapper exists for the public surface.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb
from operator import le
from typing import Iterable, Iterator, Sequence, Union

from .errors import (
    ContainmentError,
    DomainError,
    ExponentOverflowError,
    JoinError,
    ResourceError,
    RingMismatchError,
)

MAX_EXPONENT = 2**63 - 1
HILBERT_ENUMERATION_LIMIT = 10**7

Exps = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class Ring:
    """Polynomial ring over a field, described by its ordered variable names."""

    vars: tuple

    def __post_init__(self):
        names = tuple(self.vars)
        if not names:
            raise DomainError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise DomainError(f"duplicate variable names in {names}")
        for name in names:
            if not isinstance(name, str) or not name:
                raise DomainError(f"invalid variable name {name!r}")
        object.__setattr__(self, "vars", names)

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise DomainError(f"variable {name!r} not in ring {self}") from None

    def one(self) -> Exps:
        return (0,) * len(self.vars)

    def variable(self, i: int) -> Exps:
        e = [0] * len(self.vars)
        e[i] = 1
        return tuple(e)

    def __str__(self):
        return "k[" + ",".join(self.vars) + "]"


def join_rings(A: Ring, B: Ring) -> Ring:
    """The ring A (x) B on the concatenated variable list."""
    shared = set(A.vars) & set(B.vars)
    if shared:
        raise JoinError(f"rings share variables {sorted(shared)}")
    return Ring(A.vars + B.vars)


def format_exponents(ring: Ring, e: Sequence[int]) -> str:
    parts = []
    for name, k in zip(ring.vars, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class Monomial:
    ring: Ring
    exponents: tuple

    def __post_init__(self):
        e = tuple(int(k) for k in self.exponents)
        if len(e) != self.ring.nvars:
            raise DomainError(
                f"exponent vector of length {len(e)} for ring with {self.ring.nvars} variables")
        if any(k < 0 for k in e):
            raise DomainError(f"negative exponent in {e}")
        if any(k > MAX_EXPONENT for k in e):
            raise ExponentOverflowError(f"exponent overflow in {e}")
        object.__setattr__(self, "exponents", e)

    @classmethod
    def from_dict(cls, ring: Ring, powers: dict) -> "Monomial":
        e = [0] * ring.nvars
        for name, k in powers.items():
            e[ring.index(name)] += k
        return cls(ring, tuple(e))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        _check_same(self.ring, other.ring)
        return _divides(self.exponents, other.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_same(self.ring, other.ring)
        return Monomial(self.ring, _mul(self.exponents, other.exponents))

    def __str__(self):
        return format_exponents(self.ring, self.exponents)


@dataclass(frozen=True)
class PrimeSupport:
    """The monomial prime generated by the variables indexed by ``support``."""

    ring: Ring
    support: tuple

    def __post_init__(self):
        s = tuple(sorted(set(int(i) for i in self.support)))
        if s and (s[0] < 0 or s[-1] >= self.ring.nvars):
            raise DomainError(f"support {s} out of range for {self.ring}")
        object.__setattr__(self, "support", s)

    @classmethod
    def from_names(cls, ring: Ring, names: Iterable[str]) -> "PrimeSupport":
        return cls(ring, tuple(ring.index(n) for n in names))

    @property
    def names(self) -> list:
        return [self.ring.vars[i] for i in self.support]

    def sort_key(self):
        return (len(self.support), self.support)

    def __lt__(self, other: "PrimeSupport"):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "(" + ",".join(self.names) + ")" if self.support else "(0)"


def sort_supports(supports: Iterable[PrimeSupport]) -> tuple:
    """Canonical, duplicate-free ordering for a set of prime supports."""
    return tuple(sorted(set(supports), key=PrimeSupport.sort_key))


def _check_same(r1: Ring, r2: Ring):
    if r1 != r2:
        raise RingMismatchError(f"{r1} != {r2}")


def _divides(a: Exps, b: Exps) -> bool:
    return all(map(le, a, b))


def _mul(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def _lcm(a: Exps, b: Exps) -> Exps:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _quotient(a: Exps, b: Exps) -> Exps:
    """a / gcd(a, b)."""
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def _canon_key(e: Exps):
    # degree first, then lex with the first variable largest
    return (sum(e), tuple(-k for k in e))


def _minimal(exps: Iterable[Exps]) -> tuple:
    kept: list = []
    for e in sorted(set(exps), key=_canon_key):
        for k in kept:
            if all(map(le, k, e)):
                break
        else:
            kept.append(e)
    return tuple(kept)


MonomialLike = Union[Monomial, Sequence[int]]


class MonomialIdeal:
    """A monomial ideal held by its canonical minimal generating set."""

    __slots__ = ("ring", "_exps", "_hash")

    def __init__(self, ring: Ring, gens: Iterable[MonomialLike] = ()):
        exps = []
        for g in gens:
            if isinstance(g, Monomial):
                _check_same(ring, g.ring)
                exps.append(g.exponents)
            else:
                e = tuple(int(k) for k in g)
                if len(e) != ring.nvars or any(k < 0 for k in e):
                    raise RingMismatchError(f"exponent vector {e} does not belong to {ring}")
                exps.append(e)
        self.ring = ring
        self._exps = _minimal(exps)
        self._hash = None

    @classmethod
    def _trusted(cls, ring: Ring, minimal_exps: tuple) -> "MonomialIdeal":
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._exps = minimal_exps
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, ring: Ring) -> "MonomialIdeal":
        return cls._trusted(ring, ())

    @classmethod
    def unit(cls, ring: Ring) -> "MonomialIdeal":
        return cls._trusted(ring, (ring.one(),))

    @classmethod
    def maximal(cls, ring: Ring) -> "MonomialIdeal":
        """The graded maximal ideal (all variables)."""
        return cls(ring, [ring.variable(i) for i in range(ring.nvars)])

    @property
    def exponents(self) -> tuple:
        return self._exps

    @property
    def gens(self) -> tuple:
        return tuple(Monomial(self.ring, e) for e in self._exps)

    @property
    def ngens(self) -> int:
        return len(self._exps)

    def is_zero(self) -> bool:
        return not self._exps

    def is_unit(self) -> bool:
        return bool(self._exps) and sum(self._exps[0]) == 0

    def is_proper_nonzero(self) -> bool:
        return not self.is_zero() and not self.is_unit()

    def max_exponents(self) -> tuple:
        """Largest exponent of each variable among the minimal generators."""
        if not self._exps:
            return self.ring.one()
        return tuple(max(col) for col in zip(*self._exps))

    def max_degree(self) -> int:
        return max((sum(e) for e in self._exps), default=0)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self._exps == other._exps

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self._exps))
        return self._hash

    def __le__(self, other: "MonomialIdeal") -> bool:
        return is_subideal(self, other)

    def __contains__(self, m: MonomialLike) -> bool:
        return contains(self, m)

    def __mul__(self, other):
        return multiply(self, other)

    def __pow__(self, n: int):
        return power(self, n)

    def __add__(self, other):
        _check_same(self.ring, other.ring)
        return MonomialIdeal._trusted(self.ring, _minimal(self._exps + other._exps))

    def __and__(self, other):
        return intersect(self, other)

    def __repr__(self):
        return f"MonomialIdeal({self.ring.vars!r}, {str(self)})"

    def __str__(self):
        if not self._exps:
            return "(0)"
        return "(" + ", ".join(format_exponents(self.ring, e) for e in self._exps) + ")"


def minimalize(ring: Ring, gens: Iterable[MonomialLike]) -> MonomialIdeal:
    """Drop generators divisible by other generators and sort canonically."""
    return MonomialIdeal(ring, gens)


def _as_exps(ring: Ring, m: MonomialLike) -> Exps:
    if isinstance(m, Monomial):
        _check_same(ring, m.ring)
        return m.exponents
    e = tuple(m)
    if len(e) != ring.nvars:
        raise RingMismatchError(f"exponent vector {e} does not belong to {ring}")
    return e


def _member(exps: tuple, e: Exps) -> bool:
    for g in exps:
        if all(map(le, g, e)):
            return True
    return False


def contains(I: MonomialIdeal, m: MonomialLike) -> bool:
    return _member(I._exps, _as_exps(I.ring, m))


def is_subideal(V: MonomialIdeal, U: MonomialIdeal) -> bool:
    """V <= U, decided on the generators of V."""
    _check_same(V.ring, U.ring)
    return all(_member(U._exps, g) for g in V._exps)


def _overflow_guard(exps: tuple):
    for e in exps:
        if max(e, default=0) > MAX_EXPONENT:
            raise ExponentOverflowError("exponent exceeds machine width")


def multiply(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I.ring, J.ring)
    exps = _minimal(_mul(a, b) for a in I._exps for b in J._exps)
    _overflow_guard(exps)
    return MonomialIdeal._trusted(I.ring, exps)


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """I^n by repeated multiplication, minimalizing after every step.  I^0 is the unit ideal."""
    if n < 0:
        raise DomainError("negative power")
    result = MonomialIdeal.unit(I.ring)
    for _ in range(n):
        result = multiply(result, I)
    return result


def powers(I: MonomialIdeal, n: int) -> list:
    """[I^0, I^1, ..., I^n]."""
    out = [MonomialIdeal.unit(I.ring)]
    for _ in range(n):
        out.append(multiply(out[-1], I))
    return out


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_same(I.ring, J.ring)
    return MonomialIdeal._trusted(I.ring, _minimal(_lcm(a, b) for a in I._exps for b in J._exps))


def colon(I: MonomialIdeal, m: MonomialLike) -> MonomialIdeal:
    """I : m for a single monomial m."""
    e = _as_exps(I.ring, m)
    return MonomialIdeal._trusted(I.ring, _minimal(_quotient(g, e) for g in I._exps))


def colon_ideal(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """I : J as the intersection of I : h over the generators h of J."""
    _check_same(I.ring, J.ring)
    if J.is_zero():
        raise DomainError("colon by the zero ideal is rejected")
    result = None
    for h in J._exps:
        c = colon(I, h)
        result = c if result is None else intersect(result, c)
        if result.is_zero():
            break
    return result


def lift(I: MonomialIdeal, into: Ring, side: str = "left") -> MonomialIdeal:
    """Extend I to a joined ring where I's variables form the left or right block."""
    k = I.ring.nvars
    pad = into.nvars - k
    if side == "left":
        if into.vars[:k] != I.ring.vars:
            raise JoinError(f"{I.ring} is not the left block of {into}")
        exps = tuple(e + (0,) * pad for e in I._exps)
    elif side == "right":
        if into.vars[pad:] != I.ring.vars:
            raise JoinError(f"{I.ring} is not the right block of {into}")
        exps = tuple((0,) * pad + e for e in I._exps)
    else:
        raise DomainError(f"side must be 'left' or 'right', got {side!r}")
    # padding preserves minimality and canonical order
    return MonomialIdeal._trusted(into, exps)


def sum_disjoint(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """IR + JR in R = A (x) B."""
    R = join_rings(I.ring, J.ring)
    left, right = lift(I, R, "left"), lift(J, R, "right")
    return MonomialIdeal._trusted(R, _minimal(left._exps + right._exps))


def monomials_of_degree(nvars: int, d: int) -> Iterator[Exps]:
    if nvars == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(nvars - 1, d - first):
            yield (first,) + rest


def hilbert_count(U: MonomialIdeal, V: MonomialIdeal, d: int) -> int:
    """Number of degree-d monomials in U but not in V (the dimension of (U/V)_d)."""
    _check_same(U.ring, V.ring)
    if d < 0:
        raise DomainError("degree must be nonnegative")
    if not is_subideal(V, U):
        raise ContainmentError(f"{V} is not contained in {U}")
    v = U.ring.nvars
    total = comb(d + v - 1, v - 1)
    if total > HILBERT_ENUMERATION_LIMIT:
        raise ResourceError(f"{total} monomials of degree {d} exceed the enumeration limit")
    u_exps = tuple(e for e in U._exps if sum(e) <= d)
    v_exps = tuple(e for e in V._exps if sum(e) <= d)
    count = 0
    for e in monomials_of_degree(v, d):
        if _member(u_exps, e) and not _member(v_exps, e):
            count += 1
    return count


def box(bounds: Sequence[int]) -> Iterator[Exps]:
    """All exponent vectors with 0 <= e_i <= bounds[i], in graded lexicographic order."""
    pts = list(product(*(range(b + 1) for b in bounds)))
    pts.sort(key=lambda e: (sum(e), tuple(-x for x in e)))
    return iter(pts)
