"""Seeded differential fuzzing over the random corpus.

Every mode draws ``count`` instances from the corpus generator and checks one
identity per instance.  Instances are independent; with ``jobs > 1`` they run
in a process pool and results are merged back in input order.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .ass import (
    ass_bruteforce,
    ass_module,
    ass_profile,
    ass_ring_quotient,
    union_ass_check,
)
from .core import MonomialIdeal
from .corpus import corpus_ideals, corpus_pairs
from .errors import DomainError
from .persistence import (
    lemma_equivalences_check,
    persistence_transfer_check,
    socle_colon_check,
)
from .serialize import to_jsonable
from .sums import (
    asymptotic_ass_sum,
    disjoint_intersection_check,
    verify_decomposition,
    verify_sum_formula_range,
)


def _sum_verify(pair, max_n):
    I, J = pair
    reports = verify_sum_formula_range(I, J, max_n)
    bad = [r for r in reports if not r.match or not r.sandwich]
    return not bad, {"reports": reports} if bad else None


def _ass_triangle(I, max_n):
    a = ass_ring_quotient(I)
    unit = MonomialIdeal.unit(I.ring)
    b = ass_module(unit, I, method="socle")
    c = ass_module(unit, I, method="box")
    d = ass_bruteforce(I)
    ok = a == b == c == d
    return ok, None if ok else {"decomposition": a, "socle": b, "box": c, "bruteforce": d}


def _decomposition(pair, max_n, dmax=10):
    I, J = pair
    meet = disjoint_intersection_check(I, J)
    failed = [n for n in range(1, max_n + 1) if not verify_decomposition(I, J, n, dmax)]
    ok = meet and not failed
    return ok, None if ok else {"intersection_is_product": meet, "failed_n": failed}


def _question3(I, max_n):
    prof = ass_profile(I, max_n)
    ok = prof.ass_ring_quotients == prof.ass_consecutive and union_ass_check(prof)
    return ok, None if ok else {"profile": prof}


def _lemma(I, max_n):
    rep = lemma_equivalences_check(I, max_n)
    ok = rep.agree and rep.implication_holds
    return ok, None if ok else {"report": rep}


def _socle(I, max_n):
    verdicts = socle_colon_check(I, max_n)
    return all(verdicts), None if all(verdicts) else {"verdicts": verdicts}


def _asymptotic(pair, max_n):
    rep = asymptotic_ass_sum(*pair, max_n)
    return rep.status != "violated", None if rep.status != "violated" else {"report": rep}


def _transfer(pair, max_n):
    rep = persistence_transfer_check(*pair, max_n)
    return rep.status != "violation", None if rep.status != "violation" else {"report": rep}


MODES = {
    "sum-verify": (_sum_verify, "pairs"),
    "ass-triangle": (_ass_triangle, "ideals"),
    "decomposition": (_decomposition, "pairs"),
    "question3": (_question3, "ideals"),
    "lemma": (_lemma, "ideals"),
    "socle": (_socle, "ideals"),
    "asymptotic": (_asymptotic, "pairs"),
    "transfer": (_transfer, "pairs"),
}


def _instances(mode: str, seed: int, count: int, max_vars: int, max_gens: int, max_deg: int):
    kind = MODES[mode][1]
    if kind == "pairs":
        return list(corpus_pairs(seed, count, max_vars, max_gens, max_deg))
    return list(corpus_ideals(seed, count, max_vars, max_gens, max_deg))


def _run_one(args):
    mode, instance, max_n = args
    ok, detail = MODES[mode][0](instance, max_n)
    return ok, detail


@dataclass
class FuzzSummary:
    mode: str
    seed: int
    count: int
    passed: int
    failed: int
    summary: str
    first_counterexample: Optional[dict] = None
    params: dict = field(default_factory=dict)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("ASSPRIME_JOBS", "1")))
    except ValueError:
        return 1


def run_fuzz(mode: str = "sum-verify", seed: int = 0, count: int = 100, max_vars: int = 3,
             max_gens: int = 4, max_deg: int = 4, max_n: int = 4,
             jobs: Optional[int] = None) -> FuzzSummary:
    if mode not in MODES:
        raise DomainError(f"unknown fuzz mode {mode!r}; have {sorted(MODES)}")
    if count < 0 or max_n < 1:
        raise DomainError("count must be >= 0 and max-n >= 1")
    instances = _instances(mode, seed, count, max_vars, max_gens, max_deg)
    tasks = [(mode, inst, max_n) for inst in instances]
    jobs = jobs or default_jobs()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, tasks, chunksize=4))
    else:
        results = [_run_one(t) for t in tasks]
    passed = sum(1 for ok, _ in results if ok)
    first = None
    for idx, (ok, detail) in enumerate(results):
        if not ok:
            inst = instances[idx]
            ideals = list(inst) if isinstance(inst, tuple) else [inst]
            first = {"index": idx, "ideals": to_jsonable(ideals), "detail": to_jsonable(detail)}
            break
    params = {"max_vars": max_vars, "max_gens": max_gens, "max_deg": max_deg, "max_n": max_n}
    return FuzzSummary(mode, seed, count, passed, count - passed,
                       f"{passed}/{count} match", first, params)
