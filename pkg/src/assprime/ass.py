"""Associated primes of monomial quotients.

Two independent routes are provided:

* the *decomposition* route reads Ass(A/I) off an irredundant irreducible
  decomposition of I (supports of the components);
* the *witness* route decides, support by support, whether the localized
  quotient U/V has a nonzero socle.  The socle search either walks the
  exponent box literally (``method="box"``) or enumerates the minimal
  generators of ``(V : m_S) cap U`` (``method="socle"``), which are exactly the
  minimal elements of the same box region.

A third, brute-force oracle (:func:`ass_bruteforce`) enumerates colon ideals
``I : m`` over the full exponent box and is only meant for tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .core import (
    MonomialIdeal,
    PrimeSupport,
    Ring,
    _lcm,
    _member,
    _minimal,
    box,
    colon,
    is_subideal,
    powers,
    sort_supports,
)
from .errors import ContainmentError, DomainError, TheoremViolation

FULL_SUBSET_LIMIT = 20


@dataclass(frozen=True)
class IrreducibleComponent:
    """The irreducible ideal (x_i^{a_i} : i in keys), stored as sorted (i, a_i) pairs."""

    ring: Ring
    pure_powers: tuple

    def __post_init__(self):
        pairs = self.pure_powers
        if isinstance(pairs, dict):
            pairs = pairs.items()
        pairs = tuple(sorted((int(i), int(a)) for i, a in pairs))
        if any(a <= 0 for _, a in pairs):
            raise DomainError("pure powers must have positive exponents")
        object.__setattr__(self, "pure_powers", pairs)

    def as_dict(self) -> dict:
        return dict(self.pure_powers)

    def support(self) -> PrimeSupport:
        return PrimeSupport(self.ring, tuple(i for i, _ in self.pure_powers))

    def ideal(self) -> MonomialIdeal:
        if not self.pure_powers:
            return MonomialIdeal.unit(self.ring)
        gens = []
        for i, a in self.pure_powers:
            e = [0] * self.ring.nvars
            e[i] = a
            gens.append(tuple(e))
        return MonomialIdeal(self.ring, gens)

    def __str__(self):
        return str(self.ideal())


def _require_proper_nonzero(I: MonomialIdeal):
    if I.is_zero():
        raise DomainError("the zero ideal is not allowed here")
    if I.is_unit():
        raise DomainError("the unit ideal is not allowed here")


def _support_size(e) -> int:
    return sum(1 for k in e if k)


def _split(exps: tuple, memo: dict) -> frozenset:
    """Irreducible components (as exponent vectors, 0 = absent) of the ideal on ``exps``."""
    hit = memo.get(exps)
    if hit is not None:
        return hit
    pivot = None
    best = 1
    for g in exps:
        s = _support_size(g)
        if s > best:
            pivot, best = g, s
    if pivot is None:
        comp = [0] * len(exps[0])
        for g in exps:
            for i, k in enumerate(g):
                if k:
                    comp[i] = k
        result = frozenset([tuple(comp)])
    else:
        top = max(pivot)
        i = pivot.index(top)
        u = tuple(top if j == i else 0 for j in range(len(pivot)))
        v = tuple(0 if j == i else k for j, k in enumerate(pivot))
        left = _split(_minimal(exps + (u,)), memo)
        right = _split(_minimal(exps + (v,)), memo)
        result = left | right
    memo[exps] = result
    return result


def _component_contains(small, big) -> bool:
    """Whether irreducible ideal ``small`` is contained in irreducible ideal ``big``."""
    for a, b in zip(small, big):
        if a and (not b or b > a):
            return False
    return True


def _irredundant(comps) -> list:
    comps = sorted(comps, key=lambda c: (_support_size(c), c))
    keep = []
    for c in comps:
        if any(_component_contains(k, c) for k in comps if k != c):
            continue
        keep.append(c)
    return keep


def _components_to_ideal(ring: Ring, comps) -> MonomialIdeal:
    result = MonomialIdeal.unit(ring)
    for c in comps:
        gens = []
        for i, a in enumerate(c):
            if a:
                e = [0] * len(c)
                e[i] = a
                gens.append(tuple(e))
        result = result & MonomialIdeal(ring, gens)
    return result


def _incremental(exps: tuple) -> list:
    """Decomposition built one generator at a time.

    With I = cap C, adding g gives cap (C + (g)); if g is not in C then
    C + (g) = cap_{i in supp g} (C + x_i^{g_i}), each again irreducible.
    """
    comps = [tuple(k if j == i else 0 for j, k in enumerate(exps[0]))
             for i in range(len(exps[0])) if exps[0][i]]
    for g in exps[1:]:
        kept, fresh = [], set()
        for c in comps:
            if any(ci and gi >= ci for ci, gi in zip(c, g)):
                kept.append(c)
                continue
            for i, gi in enumerate(g):
                if gi:
                    d = list(c)
                    d[i] = gi if not c[i] else min(c[i], gi)
                    fresh.add(tuple(d))
        # old components stay irredundant; only the fresh ones can be redundant
        fresh = sorted(fresh, key=lambda c: (_support_size(c), c))
        accepted = []
        for d in fresh:
            if any(_component_contains(k, d) for k in kept):
                continue
            if any(k != d and _component_contains(k, d) for k in fresh):
                continue
            accepted.append(d)
        comps = kept + accepted
    return comps


def irreducible_decomposition(I: MonomialIdeal, verify: bool = True,
                              algorithm: str = "incremental") -> list:
    """Irredundant decomposition of I into ideals generated by pure variable powers.

    ``algorithm="split"`` splits on the generator with the largest support, at
    its highest variable power: ``I = (I + x_i^a) cap (I + g/x_i^a)``, then drops
    components containing another component.  ``"incremental"`` (default)
    intersects in one generator at a time and is much faster on powers.  With
    ``verify`` the intersection is recomputed and compared against I.
    """
    _require_proper_nonzero(I)
    if algorithm == "split":
        comps = _irredundant(_split(I.exponents, {}))
    elif algorithm == "incremental":
        comps = sorted(_incremental(I.exponents), key=lambda c: (_support_size(c), c))
    else:
        raise DomainError(f"unknown algorithm {algorithm!r}")
    if verify and _components_to_ideal(I.ring, comps) != I:
        raise TheoremViolation(f"decomposition of {I} does not intersect back to it")
    return [IrreducibleComponent(I.ring, tuple((i, a) for i, a in enumerate(c) if a))
            for c in comps]


def ass_ring_quotient(I: MonomialIdeal, algorithm: str = "incremental") -> tuple:
    """Ass(A/I) from the supports of an irredundant irreducible decomposition."""
    comps = irreducible_decomposition(I, verify=False, algorithm=algorithm)
    return sort_supports(c.support() for c in comps)


def candidate_supports(ring: Ring, V: MonomialIdeal) -> list:
    """Nonempty variable subsets to test, smallest first."""
    v = ring.nvars
    if v <= FULL_SUBSET_LIMIT:
        out = [s for r in range(1, v + 1) for s in combinations(range(v), r)]
    else:
        gen_supports = {tuple(i for i, k in enumerate(g) if k) for g in V.exponents}
        seen = set()
        for r in range(1, len(gen_supports) + 1):
            for group in combinations(sorted(gen_supports), r):
                seen.add(tuple(sorted(set().union(*group))))
        out = sorted(seen, key=lambda s: (len(s), s))
    return out


def _localize(exps: tuple, S: tuple) -> tuple:
    return _minimal(tuple(e[i] for i in S) for e in exps)


def _socle_witness(Ue: Optional[tuple], Ve: tuple, k: int):
    """A monomial m in U \\ V with m*x_i in V for all i, or None.  ``Ue=None`` means U = (1)."""
    # (V : x_i) = V + N_i; monomial ideals form a distributive lattice, so
    # (V : m) cap U = V + (N_1 cap ... cap N_k cap U) and we only track the N part.
    acc = None
    for i in range(k):
        new = []
        for g in Ve:
            if g[i]:
                q = g[:i] + (g[i] - 1,) + g[i + 1:]
                if not _member(Ve, q):
                    new.append(q)
        if not new:
            return None
        new = _minimal(new)
        if acc is None:
            acc = new
        else:
            acc = _minimal(m for m in (_lcm(a, b) for a in acc for b in new)
                           if not _member(Ve, m))
            if not acc:
                return None
    if Ue is not None:
        acc = _minimal(m for m in (_lcm(a, b) for a in acc for b in Ue)
                       if not _member(Ve, m))
    return acc[0] if acc else None


def _box_witness(Ue: Optional[tuple], Ve: tuple, k: int):
    bounds = [max(e[i] for e in Ve) - 1 for i in range(k)]
    if min(bounds) < 0:
        return None
    for m in box(bounds):
        if Ue is not None and not _member(Ue, m):
            continue
        if _member(Ve, m):
            continue
        if all(_member(Ve, m[:i] + (m[i] + 1,) + m[i + 1:]) for i in range(k)):
            return m
    return None


def ass_module(U: MonomialIdeal, V: MonomialIdeal, method: str = "socle") -> tuple:
    """Ass(U/V) for monomial ideals V <= U.

    For each candidate support S the variables off S are set to 1; S is
    associated iff the localized quotient has a monomial m with m in U, m not
    in V and m*x_i in V for all i in S.
    """
    if not is_subideal(V, U):
        raise ContainmentError(f"{V} is not contained in {U}")
    if V.is_zero():
        raise DomainError("Ass of a quotient by the zero ideal contains (0); not supported")
    if V == U:
        return ()
    finder = {"socle": _socle_witness, "box": _box_witness}.get(method)
    if finder is None:
        raise DomainError(f"unknown method {method!r}")
    unit_top = U.is_unit()
    found = []
    for S in candidate_supports(U.ring, V):
        Ve = _localize(V.exponents, S)
        if sum(Ve[0]) == 0:
            continue
        Ue = None if unit_top else _localize(U.exponents, S)
        if finder(Ue, Ve, len(S)) is not None:
            found.append(PrimeSupport(U.ring, S))
    return sort_supports(found)


def ass_bruteforce(I: MonomialIdeal) -> tuple:
    """Ass(A/I) by scanning every monomial m in the exponent box of I.

    A support S is kept when I : m is generated by the variables of S.  Exponents
    above the box never change I : m, so the box is exhaustive.
    """
    _require_proper_nonzero(I)
    found = set()
    for m in box(I.max_exponents()):
        c = colon(I, m)
        if c.is_unit():
            continue
        if all(sum(e) == 1 for e in c.exponents):
            found.add(PrimeSupport(I.ring, tuple(e.index(1) for e in c.exponents)))
    return sort_supports(found)


def _stabilization(lists) -> Optional[int]:
    n = len(lists)
    m = n
    while m > 1 and lists[m - 2] == lists[n - 1]:
        m -= 1
    return m if m < n else None


@dataclass
class AssProfile:
    """Associated primes of A/I^n and I^{n-1}/I^n for n = 1..max_n.

    ``astab_window`` is the least m < max_n with both families constant on
    [m, max_n]; None when the window shows no constant tail.  It is an
    empirical, windowed value, never a claim about all n.
    """

    ideal: MonomialIdeal
    max_n: int
    ass_ring_quotients: list
    ass_consecutive: list
    astab_window: Optional[int] = None
    windowed: bool = field(default=True)

    def ass_star(self) -> tuple:
        """Union of Ass(A/I^n) over the window."""
        return sort_supports(p for s in self.ass_ring_quotients for p in s)

    def ass_infinity(self) -> tuple:
        """Ass(A/I^n) at the end of the window."""
        return self.ass_ring_quotients[-1]

    def quotient(self, n: int) -> tuple:
        return self.ass_ring_quotients[n - 1]

    def consecutive(self, n: int) -> tuple:
        return self.ass_consecutive[n - 1]


def ass_profile(I: MonomialIdeal, max_n: int, quotient_route: str = "decomposition") -> AssProfile:
    _require_proper_nonzero(I)
    if max_n < 1:
        raise DomainError("max_n must be positive")
    pw = powers(I, max_n)
    quotients, consecutive = [], []
    for n in range(1, max_n + 1):
        if quotient_route == "decomposition":
            quotients.append(ass_ring_quotient(pw[n]))
        else:
            quotients.append(ass_module(pw[0], pw[n], method=quotient_route))
        consecutive.append(ass_module(pw[n - 1], pw[n]))
    pairs = list(zip(quotients, consecutive))
    return AssProfile(I, max_n, quotients, consecutive, _stabilization(pairs))


def union_ass_check(profile: AssProfile) -> bool:
    """Prefix unions of Ass(A/I^i) and Ass(I^{i-1}/I^i) agree for every n in the window."""
    left, right = set(), set()
    for q, c in zip(profile.ass_ring_quotients, profile.ass_consecutive):
        left.update(q)
        right.update(c)
        if left != right:
            return False
    return True


def minimal_supports(supports) -> tuple:
    sets = [frozenset(p.support) for p in supports]
    return sort_supports(p for p, s in zip(supports, sets) if not any(t < s for t in sets))
