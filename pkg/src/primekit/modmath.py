"""Arbitrary-precision building blocks: bit-pattern construction, modular
exponentiation, the extended Euclidean algorithm, and random values.

Plain Python ints carry all big numbers. Everything here treats inputs as
non-negative; the only negative values that ever appear are the Bezout
coefficients returned by ext_gcd.
"""

from __future__ import annotations

import random
from collections.abc import Iterable

from .errors import DomainError, NotInvertibleError


def from_bit_positions(positions: Iterable[int]) -> int:
    """Build the integer whose set bits are exactly `positions`.

    Positions must be strictly ascending and non-negative; duplicates or
    out-of-order indices raise DomainError. The empty sequence gives 0.
    """
    value = 0
    prev = -1
    for pos in positions:
        if pos < 0:
            raise DomainError(f"bit index must be non-negative, got {pos}")
        if pos <= prev:
            raise DomainError(
                f"bit indices must be strictly ascending, got {pos} after {prev}"
            )
        value |= 1 << pos
        prev = pos
    return value


def bit_positions(value: int) -> list[int]:
    """Ascending indices of the set bits of `value`; inverse of from_bit_positions."""
    if value < 0:
        raise DomainError("value must be non-negative")
    return [i for i in range(value.bit_length()) if (value >> i) & 1]


def mod_exp(base: int, exponent: int, modulus: int) -> int:
    """base**exponent mod modulus via left-to-right square-and-multiply.

    Runs one squaring per exponent bit plus one multiply per set bit.
    exponent == 0 gives 1 for any base.
    """
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    if exponent < 0:
        raise DomainError(f"exponent must be non-negative, got {exponent}")
    base %= modulus
    result = 1
    # bin() renders the exponent once; indexing bits off the big int each
    # iteration would cost another full-length scan per step.
    for bit in bin(exponent)[2:]:
        result = result * result % modulus
        if bit == "1":
            result = result * base % modulus
    return result


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, x, y) with g = gcd(a, b) and a*x + b*y = g.

    Iterative, so call depth stays flat for thousand-bit inputs.
    """
    if a < 0 or b < 0:
        raise DomainError("ext_gcd expects non-negative inputs")
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def mod_inverse(a: int, m: int) -> int:
    """The unique d in [1, m) with a*d = 1 (mod m).

    Raises NotInvertibleError when gcd(a, m) != 1.
    """
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    g, x, _ = ext_gcd(a % m, m)
    if g != 1:
        raise NotInvertibleError(f"{a} is not invertible modulo {m} (gcd {g})")
    return x % m


def random_bignat(bits: int, rng: random.Random) -> int:
    """Uniform random integer of exactly `bits` bits (top bit forced to 1)."""
    if bits < 1:
        raise DomainError(f"bits must be >= 1, got {bits}")
    return rng.getrandbits(bits) | (1 << (bits - 1))


def random_even(bits: int, rng: random.Random) -> int:
    """Uniform random even integer of exactly `bits` bits."""
    if bits < 2:
        raise DomainError(f"an even value needs bits >= 2, got {bits}")
    return random_bignat(bits, rng) & ~1
