"""Associated primes of powers of I + J for ideals in disjoint variable sets.

I lives in A, J in B, and everything here happens in the joined ring
R = A (x) B.  For monomial ideals every associated prime is a variable prime,
so p + q is again prime and the Min step of the general statements is the
identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .ass import AssProfile, ass_profile, ass_ring_quotient
from .core import (
    MonomialIdeal,
    PrimeSupport,
    Ring,
    hilbert_count,
    intersect,
    join_rings,
    lift,
    multiply,
    power,
    powers,
    sort_supports,
    sum_disjoint,
)
from .errors import DomainError, ResourceError, TheoremViolation

MAX_JOINED_VARS = 12
MAX_INPUT_DEGREE = 12


def _require_pair(I: MonomialIdeal, J: MonomialIdeal) -> Ring:
    for name, K in (("left", I), ("right", J)):
        if not K.is_proper_nonzero():
            raise DomainError(f"{name} ideal must be proper and nonzero, got {K}")
    return join_rings(I.ring, J.ring)


def _guard(I: MonomialIdeal, J: MonomialIdeal, R: Ring):
    if R.nvars > MAX_JOINED_VARS:
        raise ResourceError(f"joined ring has {R.nvars} variables (limit {MAX_JOINED_VARS})")
    deg = max(I.max_degree(), J.max_degree())
    if deg > MAX_INPUT_DEGREE:
        raise ResourceError(f"generator degree {deg} exceeds limit {MAX_INPUT_DEGREE}")


def join_supports(R: Ring, p: PrimeSupport, q: PrimeSupport) -> PrimeSupport:
    """p + q in R, with q's indices shifted past the left block."""
    shift = p.ring.nvars
    return PrimeSupport(R, p.support + tuple(shift + j for j in q.support))


def _product_set(R: Ring, ps, qs) -> set:
    return {join_supports(R, p, q) for p in ps for q in qs}


class _Profiles:
    """Lazily grown associated-prime profiles of I and J."""

    def __init__(self, I: MonomialIdeal, J: MonomialIdeal, n: int,
                 pI: Optional[AssProfile] = None, pJ: Optional[AssProfile] = None):
        self.I = pI if pI is not None and pI.max_n >= n else ass_profile(I, n)
        self.J = pJ if pJ is not None and pJ.max_n >= n else ass_profile(J, n)


def formula_ass_sum(I: MonomialIdeal, J: MonomialIdeal, n: int,
                    profiles: Optional[_Profiles] = None) -> tuple:
    """Ass(R/(I+J)^n) as the union over i of {p + q : p in Ass(A/I^i), q in Ass(B/J^{n-i+1})}."""
    R = _require_pair(I, J)
    if n < 1:
        raise DomainError("n must be positive")
    pr = profiles or _Profiles(I, J, n)
    out = set()
    for i in range(1, n + 1):
        out |= _product_set(R, pr.I.quotient(i), pr.J.quotient(n - i + 1))
    return sort_supports(out)


def bounds_ass_sum(I: MonomialIdeal, J: MonomialIdeal, n: int,
                   profiles: Optional[_Profiles] = None) -> tuple:
    """(lower, upper) containment bounds for Ass(R/(I+J)^n).

    lower: p in Ass(I^{i-1}/I^i),  q in Ass(J^{n-i}/J^{n-i+1});
    upper: p in Ass(A/I^i),        q in Ass(J^{n-i}/J^{n-i+1}).
    The index n - i = 0 term uses J^0 = B, i.e. Ass(B/J).
    """
    R = _require_pair(I, J)
    if n < 1:
        raise DomainError("n must be positive")
    pr = profiles or _Profiles(I, J, n)
    lower, upper = set(), set()
    for i in range(1, n + 1):
        qs = pr.J.consecutive(n - i + 1)
        lower |= _product_set(R, pr.I.consecutive(i), qs)
        upper |= _product_set(R, pr.I.quotient(i), qs)
    return sort_supports(lower), sort_supports(upper)


def direct_ass_sum(I: MonomialIdeal, J: MonomialIdeal, n: int) -> tuple:
    """Ground truth: decompose (I + J)^n in the joined ring."""
    R = _require_pair(I, J)
    _guard(I, J, R)
    if n < 1:
        raise DomainError("n must be positive")
    return ass_ring_quotient(power(sum_disjoint(I, J), n))


def direct_ass_sums(I: MonomialIdeal, J: MonomialIdeal, max_n: int) -> list:
    """[Ass(R/(I+J)^n) for n = 1..max_n], sharing the power computations."""
    R = _require_pair(I, J)
    _guard(I, J, R)
    pw = powers(sum_disjoint(I, J), max_n)
    return [ass_ring_quotient(P) for P in pw[1:]]


@dataclass
class SumAssReport:
    n: int
    lower_bound: tuple
    upper_bound: tuple
    formula_value: tuple
    direct_value: tuple
    match: bool
    sandwich: bool = True


def verify_sum_formula(I: MonomialIdeal, J: MonomialIdeal, n: int,
                       profiles: Optional[_Profiles] = None,
                       direct: Optional[tuple] = None) -> SumAssReport:
    """Compare the closed formula with the direct computation.

    Raises :class:`TheoremViolation` if lower <= direct <= upper fails; a
    formula mismatch is reported through ``match``.
    """
    pr = profiles or _Profiles(I, J, n)
    lower, upper = bounds_ass_sum(I, J, n, pr)
    formula = formula_ass_sum(I, J, n, pr)
    if direct is None:
        direct = direct_ass_sum(I, J, n)
    sandwich = set(lower) <= set(direct) <= set(upper)
    report = SumAssReport(n, lower, upper, formula, direct, formula == direct, sandwich)
    if not sandwich:
        raise TheoremViolation(f"containment bounds fail for {I} + {J} at n={n}: {report}")
    return report


def verify_sum_formula_range(I: MonomialIdeal, J: MonomialIdeal, max_n: int) -> list:
    """verify_sum_formula for n = 1..max_n with shared profiles and powers."""
    pr = _Profiles(I, J, max_n)
    directs = direct_ass_sums(I, J, max_n)
    return [verify_sum_formula(I, J, n, pr, directs[n - 1]) for n in range(1, max_n + 1)]


def verify_decomposition(I: MonomialIdeal, J: MonomialIdeal, n: int, dmax: int) -> bool:
    """Degreewise check of Q^{n-1}/Q^n = sum_i (I^{i-1}/I^i) (x) (J^{n-i}/J^{n-i+1}).

    Compares Hilbert counts for every degree d <= dmax, with Q = I + J.
    """
    _require_pair(I, J)
    if n < 1:
        raise DomainError("n must be positive")
    pI, pJ = powers(I, n), powers(J, n)
    pQ = powers(sum_disjoint(I, J), n)

    @lru_cache(maxsize=None)
    def left_count(i, a):
        return hilbert_count(pI[i - 1], pI[i], a)

    @lru_cache(maxsize=None)
    def right_count(j, b):
        return hilbert_count(pJ[j - 1], pJ[j], b)

    for d in range(dmax + 1):
        lhs = hilbert_count(pQ[n - 1], pQ[n], d)
        rhs = 0
        for i in range(1, n + 1):
            j = n - i + 1
            for a in range(d + 1):
                ca = left_count(i, a)
                if ca:
                    rhs += ca * right_count(j, d - a)
        if lhs != rhs:
            return False
    return True


def disjoint_intersection_check(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """IR cap JR = IR * JR for ideals in disjoint variables."""
    R = join_rings(I.ring, J.ring)
    left, right = lift(I, R, "left"), lift(J, R, "right")
    return intersect(left, right) == multiply(left, right)


@dataclass
class AsymptoticReport:
    """Windowed check of the asymptotic description of Ass(R/(I+J)^n).

    ``status`` is "verified", "violated" or "inconclusive" (window too short to
    observe stabilization).  All stabilization indices are empirical within
    ``window``.
    """

    astab_I: Optional[int]
    astab_J: Optional[int]
    threshold: Optional[int]
    asymptotic_set: tuple
    verified_range: Optional[tuple]
    status: str
    direct_values: dict = field(default_factory=dict)
    windowed: bool = True


def asymptotic_ass_sum(I: MonomialIdeal, J: MonomialIdeal, window: int) -> AsymptoticReport:
    """Evaluate Ass*(I) x Ass^inf(J) cup Ass^inf(I) x Ass*(J) and compare with the direct
    Ass(R/(I+J)^n) for n from astab(I) + astab(J) - 1 up to the window."""
    R = _require_pair(I, J)
    if window < 1:
        raise DomainError("window must be positive")
    pI, pJ = ass_profile(I, window), ass_profile(J, window)
    sI, sJ = pI.astab_window, pJ.astab_window
    if sI is None or sJ is None:
        return AsymptoticReport(sI, sJ, None, (), None, "inconclusive")
    threshold = sI + sJ - 1
    asym = sort_supports(_product_set(R, pI.ass_star(), pJ.ass_infinity())
                         | _product_set(R, pI.ass_infinity(), pJ.ass_star()))
    if threshold > window:
        return AsymptoticReport(sI, sJ, threshold, asym, None, "inconclusive")
    directs = direct_ass_sums(I, J, window)
    values = {n: directs[n - 1] for n in range(threshold, window + 1)}
    ok = all(v == asym for v in values.values())
    return AsymptoticReport(sI, sJ, threshold, asym, (threshold, window),
                            "verified" if ok else "violated", values)
