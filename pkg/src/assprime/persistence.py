"""Persistence-type properties of powers of a monomial ideal.

Every verdict here covers a finite window n <= max_n only.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .ass import AssProfile, ass_profile
from .core import (
    MonomialIdeal,
    colon_ideal,
    intersect,
    is_subideal,
    powers,
    sum_disjoint,
)
from .errors import DomainError
from .sums import direct_ass_sums


def _require(I: MonomialIdeal):
    if not I.is_proper_nonzero():
        raise DomainError(f"ideal must be proper and nonzero, got {I}")


@dataclass
class PersistenceReport:
    ideal: MonomialIdeal
    max_n: int
    inclusions: list
    first_failure: Optional[tuple] = None
    ass_sets: list = field(default_factory=list)

    @property
    def persistent(self) -> bool:
        return all(self.inclusions)


def _persistence_from_sets(I: MonomialIdeal, max_n: int, sets: list) -> PersistenceReport:
    inclusions, failure = [], None
    for n in range(1, max_n):
        lost = [p for p in sets[n - 1] if p not in sets[n]]
        inclusions.append(not lost)
        if lost and failure is None:
            failure = (n, lost[0])
    return PersistenceReport(I, max_n, inclusions, failure, list(sets))


def persistence_check(I: MonomialIdeal, max_n: int,
                      profile: Optional[AssProfile] = None) -> PersistenceReport:
    """Ass(A/I^n) <= Ass(A/I^{n+1}) for n = 1..max_n-1."""
    _require(I)
    if profile is None or profile.max_n < max_n:
        profile = ass_profile(I, max_n)
    return _persistence_from_sets(I, max_n, profile.ass_ring_quotients[:max_n])


def strong_persistence_check(I: MonomialIdeal, max_n: int) -> list:
    """[I^{n+1} : I == I^n for n = 1..max_n]."""
    _require(I)
    pw = powers(I, max_n + 1)
    return [colon_ideal(pw[n + 1], I) == pw[n] for n in range(1, max_n + 1)]


@dataclass
class RatliffRushReport:
    closure: MonomialIdeal
    stabilized_at: int
    cap_hit: bool
    chain: list = field(default_factory=list)


def ratliff_rush(I: MonomialIdeal, cap: int = 10) -> RatliffRushReport:
    """Iterate C_i = I^{i+1} : I^i until two consecutive terms agree or i reaches cap."""
    _require(I)
    if cap < 1:
        raise DomainError("cap must be positive")
    prev_power, cur_power = I, I * I
    chain = [colon_ideal(cur_power, prev_power)]
    i = 1
    while i < cap:
        prev_power, cur_power = cur_power, cur_power * I
        nxt = colon_ideal(cur_power, prev_power)
        chain.append(nxt)
        if nxt == chain[-2]:
            return RatliffRushReport(chain[-2], i, False, chain)
        i += 1
    return RatliffRushReport(chain[-1], i, True, chain)


@dataclass
class LemmaReport:
    """Verdicts of the three windowed conditions for n = 1..max_n.

    condition_i:   I^{n+1} : I == I^n
    condition_ii:  (I^{n+1} : I) cap I^{n-1} == I^n
    condition_iv:  I^n equals its Ratliff-Rush closure, windowed as the union of
                   I^{n+k} : I^k over k = 1..max_n-n+1
    The depth of the associated graded ring is not computed.
    """

    max_n: int
    condition_i: list
    condition_ii: list
    condition_iv: list
    agree: bool
    persistence: list
    implication_holds: bool
    notes: str = "depth of gr_I(A) not computed; verdicts hold up to max_n only"


def lemma_equivalences_check(I: MonomialIdeal, max_n: int) -> LemmaReport:
    _require(I)
    if max_n < 1:
        raise DomainError("max_n must be positive")
    pw = powers(I, max_n + 1)
    cond_i, cond_ii, cond_iv = [], [], []
    for n in range(1, max_n + 1):
        c = colon_ideal(pw[n + 1], I)
        cond_i.append(c == pw[n])
        cond_ii.append(intersect(c, pw[n - 1]) == pw[n])
        # with (i) known only up to max_n, k is limited so that (i) => (iv) stays provable
        closed = True
        for k in range(1, max_n - n + 2):
            if not is_subideal(colon_ideal(pw[n + k], pw[k]), pw[n]):
                closed = False
                break
        cond_iv.append(closed)
    agree = all(cond_i) == all(cond_ii) == all(cond_iv)
    persistence = persistence_check(I, max_n).inclusions
    implication = not all(cond_i) or all(persistence)
    return LemmaReport(max_n, cond_i, cond_ii, cond_iv, agree, persistence, implication)


def socle_colon_check(I: MonomialIdeal, max_n: int) -> list:
    """[I^n : m <= I^{n-1} for n = 2..max_n], m the graded maximal ideal."""
    _require(I)
    m = MonomialIdeal.maximal(I.ring)
    pw = powers(I, max_n)
    return [is_subideal(colon_ideal(pw[n], m), pw[n - 1]) for n in range(2, max_n + 1)]


@dataclass
class TransferReport:
    """status: "passed", "hypothesis not met" or "violation"."""

    status: str
    left: PersistenceReport
    joined: Optional[PersistenceReport] = None


def persistence_transfer_check(I: MonomialIdeal, J: MonomialIdeal, max_n: int) -> TransferReport:
    """If I is persistent on the window, I + J must be persistent on the window too."""
    left = persistence_check(I, max_n)
    if not left.persistent:
        return TransferReport("hypothesis not met", left)
    Q = sum_disjoint(I, J)
    joined = _persistence_from_sets(Q, max_n, direct_ass_sums(I, J, max_n))
    return TransferReport("passed" if joined.persistent else "violation", left, joined)
