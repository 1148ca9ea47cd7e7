"""Forward probable-prime search with per-stage instrumentation.

Counting conventions, fixed so reports are comparable across runs:

- candidates_scanned counts every odd value the search looked at, including
  the one it returned; the even/odd parity skip is free and not counted.
- mr_candidates counts values that survived trial division and reached
  Miller-Rabin (at depth 0 every scanned candidate reaches it).
- The start value itself is never a candidate, even when it is prime.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from collections.abc import Iterable

from .errors import DomainError
from .primality import PRIME, MrPolicy, TrialPolicy, miller_rabin, trial_division


@dataclass(frozen=True)
class SearchReport:
    """One search: what was found and what each stage cost."""

    found: int
    candidates_scanned: int
    mr_candidates: int
    trial_depth: int
    total_s: float
    trial_s: float
    mr_s: float


@dataclass(frozen=True)
class SweepRow:
    """One depth of a sweep; `a` is the Miller-Rabin candidate count."""

    depth: int
    mr_candidates: int
    found: int
    total_s: float
    trial_s: float
    mr_s: float


def next_probable_prime(
    start: int,
    trial: TrialPolicy = TrialPolicy(),
    mr: MrPolicy = MrPolicy(),
) -> SearchReport:
    """First probable prime strictly greater than `start`.

    Scans odd values above start in +2 steps, running trial division then
    Miller-Rabin per the policies. The Miller-Rabin base stream is seeded
    once per call from the policy.
    """
    if start < 3:
        raise DomainError(f"start must be >= 3, got {start}")
    divisors = trial.divisors() if trial.depth else ()
    rng = mr.make_rng()
    clock = time.perf_counter
    candidate = start + (1 if start % 2 == 0 else 2)
    scanned = 0
    mr_candidates = 0
    trial_s = 0.0
    mr_s = 0.0
    t_begin = clock()
    while True:
        scanned += 1
        if divisors:
            t0 = clock()
            verdict = trial_division(candidate, divisors)
            trial_s += clock() - t0
            if verdict.is_composite:
                candidate += 2
                continue
            if verdict.kind == PRIME:
                break
        t0 = clock()
        verdict = miller_rabin(candidate, mr, rng)
        mr_s += clock() - t0
        mr_candidates += 1
        if verdict.passed:
            break
        candidate += 2
    total_s = clock() - t_begin
    return SearchReport(
        found=candidate,
        candidates_scanned=scanned,
        mr_candidates=mr_candidates,
        trial_depth=trial.depth,
        total_s=total_s,
        trial_s=trial_s,
        mr_s=mr_s,
    )


def depth_sweep(
    start: int,
    depths: Iterable[int],
    mr: MrPolicy = MrPolicy(),
) -> list[SweepRow]:
    """Run the same search once per trial depth.

    The Miller-Rabin stream is re-seeded identically for every row, so rows
    differ only in how much trial division filters. With an unseeded policy
    one seed is drawn up front and shared by all rows.
    """
    seed = mr.seed if mr.seed is not None else random.SystemRandom().getrandbits(64)
    rows = []
    for depth in depths:
        report = next_probable_prime(
            start, TrialPolicy(depth=depth), MrPolicy(rounds=mr.rounds, seed=seed)
        )
        rows.append(
            SweepRow(
                depth=depth,
                mr_candidates=report.mr_candidates,
                found=report.found,
                total_s=report.total_s,
                trial_s=report.trial_s,
                mr_s=report.mr_s,
            )
        )
    return rows
