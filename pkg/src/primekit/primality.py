"""Primality pipeline: trial division by small odd primes, then Miller-Rabin.

A Verdict says what a stage concluded. "prime" and "composite" are proven
(composites carry a certificate: a divisor from trial division or a witness
base from Miller-Rabin); "probable_prime" means every round passed, which
bounds the error at 4**-rounds per composite.
"""

from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import DomainError, SearchBudgetError
from .modmath import mod_exp, random_bignat
from .smallprimes import first_k_odd_primes

COMPOSITE = "composite"
PROBABLE_PRIME = "probable_prime"
PRIME = "prime"

DEFAULT_TRIAL_DEPTH = 60  # near the flat bottom of the cost curve for big candidates
DEFAULT_MR_ROUNDS = 25


@dataclass(frozen=True)
class Verdict:
    kind: str
    certificate: int | None = None

    @classmethod
    def composite(cls, certificate: int) -> "Verdict":
        return cls(COMPOSITE, certificate)

    @classmethod
    def probable_prime(cls) -> "Verdict":
        return _PROBABLE

    @classmethod
    def prime(cls) -> "Verdict":
        return _PRIME

    @property
    def is_composite(self) -> bool:
        return self.kind == COMPOSITE

    @property
    def passed(self) -> bool:
        """True when the stage did not prove compositeness."""
        return self.kind != COMPOSITE


_PROBABLE = Verdict(PROBABLE_PRIME)
_PRIME = Verdict(PRIME)


@dataclass(frozen=True)
class TrialPolicy:
    """How deep trial division goes.

    depth counts odd primes: depth 3 divides by 3, 5, 7. Parity is screened
    before the divisor loop, so 2 never appears in the list; depth 0 skips
    the stage entirely.
    """

    depth: int = DEFAULT_TRIAL_DEPTH

    def __post_init__(self):
        if self.depth < 0:
            raise DomainError(f"trial depth must be non-negative, got {self.depth}")

    def divisors(self) -> tuple[int, ...]:
        return first_k_odd_primes(self.depth)


@dataclass(frozen=True)
class MrPolicy:
    """Miller-Rabin round count and base-stream seed.

    seed None draws bases from OS entropy; any int gives a reproducible
    stream via make_rng().
    """

    rounds: int = DEFAULT_MR_ROUNDS
    seed: int | None = None

    def __post_init__(self):
        if self.rounds < 1:
            raise DomainError(f"rounds must be >= 1, got {self.rounds}")

    def make_rng(self) -> random.Random:
        return random.Random(self.seed)


@dataclass(frozen=True)
class StageStats:
    """Which stage settled a candidate."""

    trial_rejected: bool = False
    mr_invoked: bool = False


def trial_division(n: int, primes: Sequence[int]) -> Verdict:
    """Divide n by an ascending prime list.

    Returns composite(p) on the first divisor p < n, prime when n itself
    appears in the list, probable_prime otherwise (the stage proves nothing
    about survivors).
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    for p in primes:
        if p >= n:
            return _PRIME if p == n else _PROBABLE
        if n % p == 0:
            return Verdict.composite(p)
    return _PROBABLE


def miller_rabin(n: int, mr: MrPolicy, rng: random.Random | None = None) -> Verdict:
    """mr.rounds strong-pseudoprime tests with bases uniform in [2, n-2].

    n must be odd and >= 3. n == 3 passes vacuously (no bases exist).
    A composite verdict carries the witness base.
    """
    if n < 3 or n % 2 == 0:
        raise DomainError(f"miller_rabin needs an odd n >= 3, got {n}")
    if n == 3:
        return _PROBABLE
    if rng is None:
        rng = mr.make_rng()
    m = n - 1
    s = (m & -m).bit_length() - 1
    d = m >> s
    for _ in range(mr.rounds):
        a = rng.randrange(2, n - 1)
        x = mod_exp(a, d, n)
        if x == 1 or x == m:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == m:
                break
        else:
            return Verdict.composite(a)
    return _PROBABLE


def is_probable_prime(
    n: int,
    trial: TrialPolicy = TrialPolicy(),
    mr: MrPolicy = MrPolicy(),
    rng: random.Random | None = None,
) -> tuple[Verdict, StageStats]:
    """Two-stage verdict: parity screen, divisor sweep, Miller-Rabin.

    Returns the verdict plus StageStats saying whether trial division
    rejected the candidate and whether Miller-Rabin ran. Pass `rng` to keep
    one base stream across many calls; otherwise each call seeds its own
    from the policy.
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    if n == 2:
        return _PRIME, StageStats()
    if n % 2 == 0:
        return Verdict.composite(2), StageStats(trial_rejected=True)
    if trial.depth:
        verdict = trial_division(n, trial.divisors())
        if verdict.is_composite:
            return verdict, StageStats(trial_rejected=True)
        if verdict.kind == PRIME:
            return verdict, StageStats()
    return miller_rabin(n, mr, rng), StageStats(mr_invoked=True)


def random_probable_prime(
    bits: int,
    trial: TrialPolicy = TrialPolicy(),
    mr: MrPolicy = MrPolicy(),
    rng: random.Random | None = None,
    max_attempts: int | None = None,
) -> int:
    """Draw odd `bits`-bit values until one passes the pipeline.

    The expected number of draws is about bits * ln(2) / 2; the default
    budget of 64 * bits makes exhaustion astronomically unlikely for any
    bits >= 8.
    """
    if bits < 2:
        raise DomainError(f"bits must be >= 2, got {bits}")
    if rng is None:
        rng = mr.make_rng()
    budget = 64 * bits if max_attempts is None else max_attempts
    for _ in range(budget):
        candidate = random_bignat(bits, rng) | 1
        verdict, _ = is_probable_prime(candidate, trial, mr, rng)
        if verdict.passed:
            return candidate
    raise SearchBudgetError(f"no {bits}-bit probable prime in {budget} draws")
