"""Pair censuses over even numbers, and prime generation assisted by them.

For even two_n, a pair is (p, q) with p + q = two_n, p an odd prime, and
p <= two_n/2 - 1 (so q = two_n - p is odd and at least two_n/2 + 1). The
census counts three nested families:

- star1: all such pairs (only p is required to be prime);
- star2: star1 pairs whose q is congruent to 1 or 5 mod 6;
- gc:    star1 pairs whose q is itself prime.

gc <= star2 <= star1 always; for two_n >= 14 every prime q > 3 lands in the
mod-6 classes 1 or 5, which is what star2 approximates cheaply.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DomainError, ResourceLimitError, SearchBudgetError
from .modmath import random_bignat
from .primality import MrPolicy, TrialPolicy, is_probable_prime, random_probable_prime
from .primesearch import next_probable_prime
from .smallprimes import PrimeTable

PAIR_LIST_CAP = 1 << 24  # explicit enumeration only below this
_CHUNK = 1 << 21  # census works value ranges of this width to bound peak memory


@dataclass(frozen=True)
class GoldbachCensus:
    two_n: int
    star1: int
    star2: int
    gc: int
    elapsed_s: float  # pair scan only; table construction is the caller's


class GcPair(NamedTuple):
    p: int
    q: int


def _check_census_args(two_n: int, primes: PrimeTable) -> None:
    if two_n < 6 or two_n % 2:
        raise DomainError(f"census needs an even two_n >= 6, got {two_n}")
    if primes.limit < two_n:
        raise ResourceLimitError(
            f"prime table covers {primes.limit}, need at least {two_n}"
        )


def census(two_n: int, primes: PrimeTable, chunk: int = _CHUNK) -> GoldbachCensus:
    """Count star1/star2/gc pairs for two_n using a prepared prime table.

    The table must cover two_n (q values reach two_n - 3). Work proceeds in
    value-range chunks; counts are independent of the chunk size.
    """
    _check_census_args(two_n, primes)
    if chunk < 2:
        raise DomainError(f"chunk must be >= 2, got {chunk}")
    n = two_n // 2
    t_begin = time.perf_counter()
    star1 = star2 = gc = 0
    lo = 3
    while lo <= n - 1:
        hi = min(lo + 2 * chunk - 1, n - 1)
        ps = primes.primes_between(lo, hi)
        if ps.size:
            q = two_n - ps
            star1 += int(ps.size)
            gc += int(primes.is_prime_array(q).sum())
            r = q % 6
            star2 += int(((r == 1) | (r == 5)).sum())
        lo = hi + 1
    elapsed = time.perf_counter() - t_begin
    return GoldbachCensus(two_n=two_n, star1=star1, star2=star2, gc=gc, elapsed_s=elapsed)


def enumerate_gc_pairs(two_n: int, primes: PrimeTable) -> list[GcPair]:
    """Materialize the gc pairs for two_n, ascending by p.

    Only allowed for two_n <= 2**24; larger inputs raise ResourceLimitError
    (use census for counts at scale).
    """
    if two_n > PAIR_LIST_CAP:
        raise ResourceLimitError(f"pair enumeration is capped at 2**24, got {two_n}")
    _check_census_args(two_n, primes)
    n = two_n // 2
    if n - 1 < 3:
        return []
    ps = primes.primes_between(3, n - 1)
    q = two_n - ps
    keep = primes.is_prime_array(q)
    return [GcPair(int(a), int(b)) for a, b in zip(ps[keep], q[keep])]


@dataclass(frozen=True)
class GcAssistResult:
    """Outcome of a pair-assisted prime draw.

    q is the prime produced. In retry mode p + q == two_n always holds; in
    fallback mode q may have been found by forward search above two_n - p,
    in which case the sum no longer matches.
    """

    q: int
    p: int
    two_n: int
    attempts: int


def gc_assisted_prime(
    total_bits: int,
    small_bits: int,
    mode: str = "retry",
    trial: TrialPolicy = TrialPolicy(),
    mr: MrPolicy = MrPolicy(),
    rng: random.Random | None = None,
    max_attempts: int | None = None,
) -> GcAssistResult:
    """Draw a large prime q as (random even two_n) - (random small prime p).

    Each attempt draws a fresh even total_bits-bit two_n and a fresh
    small_bits-bit probable prime p, then tests q = two_n - p. "retry" mode
    redraws both on failure until the budget (default 10 * total_bits) runs
    out; "fallback" mode instead forward-searches upward from a failed q and
    returns after the first attempt.
    """
    if small_bits < 8:
        raise DomainError(f"small_bits must be >= 8, got {small_bits}")
    if total_bits <= small_bits + 2:
        raise DomainError(
            f"total_bits must exceed small_bits + 2, got {total_bits} vs {small_bits}"
        )
    if mode not in ("retry", "fallback"):
        raise DomainError(f"mode must be 'retry' or 'fallback', got {mode!r}")
    if rng is None:
        rng = mr.make_rng()
    budget = 10 * total_bits if max_attempts is None else max_attempts
    if budget < 1:
        raise DomainError("attempt budget must be >= 1")
    for attempt in range(1, budget + 1):
        two_n = random_bignat(total_bits, rng) & ~1
        p = random_probable_prime(small_bits, trial, mr, rng)
        q = two_n - p
        verdict, _ = is_probable_prime(q, trial, mr, rng)
        if verdict.passed:
            return GcAssistResult(q=q, p=p, two_n=two_n, attempts=attempt)
        if mode == "fallback":
            # Seed the forward search off the live stream so the whole call
            # stays deterministic under a seeded policy.
            policy = MrPolicy(rounds=mr.rounds, seed=rng.getrandbits(64))
            report = next_probable_prime(q, trial, policy)
            return GcAssistResult(q=report.found, p=p, two_n=two_n, attempts=attempt)
    raise SearchBudgetError(f"no prime difference found in {budget} attempts")
