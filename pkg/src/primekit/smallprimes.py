"""Small-prime tables: a bit-packed odd-only sieve plus first-k prefixes.

PrimeTable stores one bit per odd number (2 is special-cased), so a table
covering the full 2**28 cap packs into 16 MiB and is cheap to share.
"""

from __future__ import annotations

import functools
import math

import numpy as np

from .errors import DomainError, ResourceLimitError

SIEVE_CAP = 1 << 28


class PrimeTable:
    """Immutable primality table for every n <= limit.

    Bit i of the packed array says whether 2*i + 1 is prime. Instances are
    read-only after construction and safe to share across threads.
    """

    __slots__ = ("limit", "_packed", "_odd_count")

    def __init__(self, limit: int, packed: np.ndarray, odd_count: int):
        self.limit = limit
        self._packed = packed
        self._odd_count = odd_count

    def __repr__(self) -> str:
        return f"PrimeTable(limit={self.limit})"

    def is_prime(self, n: int) -> bool:
        if n > self.limit:
            raise DomainError(f"{n} is beyond this table's limit {self.limit}")
        if n < 2:
            return False
        if n % 2 == 0:
            return n == 2
        i = n >> 1
        return bool((self._packed[i >> 3] >> (i & 7)) & 1)

    def is_prime_array(self, values: np.ndarray) -> np.ndarray:
        """Vectorized membership test; returns a bool array of values' shape."""
        v = np.asarray(values, dtype=np.int64)
        if v.size == 0:
            return np.zeros(v.shape, dtype=bool)
        if int(v.max()) > self.limit or int(v.min()) < 0:
            raise DomainError("values must lie in [0, limit]")
        out = np.zeros(v.shape, dtype=bool)
        odd = (v & 1).astype(bool) & (v >= 3)
        idx = v[odd] >> 1
        bits = (self._packed[idx >> 3] >> (idx & 7).astype(np.uint8)) & 1
        out[odd] = bits.astype(bool)
        out[v == 2] = True
        return out

    def _unpack(self, i0: int, i1: int) -> np.ndarray:
        """Bool array for odd indices [i0, i1)."""
        b0, b1 = i0 >> 3, (i1 + 7) >> 3
        bits = np.unpackbits(self._packed[b0:b1], bitorder="little")
        return bits[i0 - 8 * b0 : i1 - 8 * b0]

    def primes_between(self, lo: int, hi: int) -> np.ndarray:
        """Ascending int64 array of primes p with lo <= p <= hi (inclusive)."""
        if hi > self.limit:
            raise DomainError(f"upper bound {hi} exceeds table limit {self.limit}")
        lo = max(lo, 2)
        if lo > hi:
            return np.empty(0, dtype=np.int64)
        i0 = max(lo, 3) >> 1
        i1 = ((hi - 1) >> 1) + 1
        if i1 > i0:
            bits = self._unpack(i0, i1)
            odds = (np.flatnonzero(bits).astype(np.int64) + i0) * 2 + 1
        else:
            odds = np.empty(0, dtype=np.int64)
        if lo <= 2 <= hi:
            return np.concatenate((np.array([2], dtype=np.int64), odds))
        return odds

    def primes(self) -> np.ndarray:
        """Every prime <= limit, ascending, as int64."""
        return self.primes_between(2, self.limit)

    def count(self) -> int:
        """Number of primes <= limit."""
        bits = np.unpackbits(self._packed, count=self._odd_count, bitorder="little")
        return int(bits.sum()) + 1  # + the prime 2


def sieve_upto(limit: int) -> PrimeTable:
    """Sieve of Eratosthenes over [2, limit], odd numbers only.

    limit must be in [2, 2**28]; the cap keeps the working set bounded.
    """
    if limit < 2:
        raise DomainError(f"limit must be >= 2, got {limit}")
    if limit > SIEVE_CAP:
        raise ResourceLimitError(f"limit {limit} exceeds the sieve cap 2**28")
    odd_count = (limit + 1) // 2
    mask = np.ones(odd_count, dtype=bool)
    mask[0] = False  # 1 is not prime
    for i in range(1, (math.isqrt(limit) - 1) // 2 + 1):
        if mask[i]:
            p = 2 * i + 1
            mask[p * p // 2 :: p] = False
    return PrimeTable(limit, np.packbits(mask, bitorder="little"), odd_count)


def _kth_prime_bound(k: int) -> int:
    # Rosser's bound p_k < k*(ln k + ln ln k) holds for k >= 6.
    if k < 6:
        return 13
    return int(k * (math.log(k) + math.log(math.log(k)))) + 1


@functools.lru_cache(maxsize=None)
def first_k_primes(k: int) -> tuple[int, ...]:
    """The first k primes (2, 3, 5, ...) as a tuple; k = 0 gives ()."""
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    if k == 0:
        return ()
    bound = _kth_prime_bound(k)
    if bound > SIEVE_CAP:
        raise ResourceLimitError(f"first {k} primes would need a sieve past 2**28")
    ps = sieve_upto(bound).primes()
    return tuple(int(p) for p in ps[:k])


@functools.lru_cache(maxsize=None)
def first_k_odd_primes(k: int) -> tuple[int, ...]:
    """The first k odd primes (3, 5, 7, ...); the divisor list for depth k."""
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    return first_k_primes(k + 1)[1:]
