"""Textbook RSA over the toolkit's own primitives, plus two census-flavored
key-publication schemes: a digest table keyed by pair counts, and a public
exponent derived from a pair count.

None of this is hardened cryptography: no padding, no constant-time
arithmetic, no side-channel hygiene. It exists to exercise the number
theory, not to protect data.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass

from .errors import (
    CorruptTableError,
    DomainError,
    MessageTooLargeError,
    ResourceLimitError,
    SearchBudgetError,
)
from .goldbach import census
from .modmath import mod_exp, mod_inverse
from .primality import MrPolicy, TrialPolicy, random_probable_prime
from .smallprimes import PrimeTable, sieve_upto

DEFAULT_PUBLIC_EXPONENT = 65537
MAX_TABLE_PRIME_BITS = 14  # keeps p*q + 1 inside the sieve cap
GC_TABLE_MAGIC = "gc-table"
GC_TABLE_VERSION = "v1"


@dataclass(frozen=True)
class RsaKeyPair:
    p: int
    q: int
    n: int
    phi: int
    e: int
    d: int


def keypair_from_primes(p: int, q: int, e: int) -> RsaKeyPair:
    """Assemble a keypair from given primes.

    Validates structure (distinctness, exponent range, invertibility), not
    the primality of p and q; that is the caller's claim.
    """
    if p < 2 or q < 2:
        raise DomainError("p and q must be >= 2")
    if p == q:
        raise DomainError("p and q must be distinct")
    n = p * q
    phi = (p - 1) * (q - 1)
    if not 1 < e < phi:
        raise DomainError(f"public exponent must satisfy 1 < e < phi, got {e}")
    d = mod_inverse(e, phi)  # NotInvertibleError when gcd(e, phi) != 1
    return RsaKeyPair(p=p, q=q, n=n, phi=phi, e=e, d=d)


def keygen(
    bits: int,
    e: int = DEFAULT_PUBLIC_EXPONENT,
    e_strategy: str = "fixed",
    trial: TrialPolicy = TrialPolicy(),
    mr: MrPolicy = MrPolicy(),
    rng: random.Random | None = None,
    max_attempts: int = 200,
) -> RsaKeyPair:
    """Generate a keypair from two fresh `bits`-bit probable primes.

    e_strategy "fixed" keeps the given e and redraws primes until
    gcd(e, phi) == 1. e_strategy "gc_derived" derives e from the pair count
    of n + 1 (see semi_public_e); that census caps bits at 14.
    """
    if bits < 8:
        raise DomainError(f"bits must be >= 8, got {bits}")
    if e_strategy == "fixed":
        if e < 3 or e % 2 == 0:
            raise DomainError(f"fixed e must be odd and >= 3, got {e}")
    elif e_strategy == "gc_derived":
        if bits > MAX_TABLE_PRIME_BITS:
            raise ResourceLimitError(
                f"gc_derived needs bits <= {MAX_TABLE_PRIME_BITS}, got {bits}"
            )
    else:
        raise DomainError(f"unknown e_strategy {e_strategy!r}")
    if rng is None:
        rng = mr.make_rng()
    for _ in range(max_attempts):
        p = random_probable_prime(bits, trial, mr, rng)
        q = random_probable_prime(bits, trial, mr, rng)
        if p == q:
            continue
        phi = (p - 1) * (q - 1)
        if e_strategy == "fixed":
            if math.gcd(e, phi) != 1:
                continue
            return keypair_from_primes(p, q, e)
        table = sieve_upto(p * q + 1)
        try:
            derived = semi_public_e(p * q + 1, phi, table)
        except DomainError:
            continue  # degenerate census for this modulus; redraw primes
        return keypair_from_primes(p, q, derived)
    raise SearchBudgetError(f"no usable keypair in {max_attempts} attempts")


def encrypt(m: int, n: int, e: int) -> int:
    """c = m**e mod n. The message must already be an integer in [0, n)."""
    if not 0 <= m < n:
        raise MessageTooLargeError(f"message must lie in [0, n), got {m}")
    return mod_exp(m, e, n)


def decrypt(c: int, n: int, d: int) -> int:
    """m = c**d mod n."""
    if not 0 <= c < n:
        raise MessageTooLargeError(f"ciphertext must lie in [0, n), got {c}")
    return mod_exp(c, d, n)


def text_to_int(text: str) -> int:
    """Big-endian concatenation of the ASCII bytes ('rat' -> 0x726174)."""
    try:
        data = text.encode("ascii")
    except UnicodeEncodeError as exc:
        raise DomainError(f"text must be ASCII: {exc}") from None
    return int.from_bytes(data, "big")


def int_to_text(value: int) -> str:
    """Inverse of text_to_int; raises DomainError for non-ASCII byte values."""
    if value < 0:
        raise DomainError("value must be non-negative")
    data = value.to_bytes((value.bit_length() + 7) // 8 or 1, "big")
    try:
        return data.decode("ascii")
    except UnicodeDecodeError as exc:
        raise DomainError(f"value does not decode as ASCII: {exc}") from None


# --- pair-count key table -------------------------------------------------


@dataclass(frozen=True)
class GcKeyTableRow:
    """A published modulus-plus-one and the digests that look it up."""

    two_n: int
    h_star1: bytes
    h_gc: bytes


def count_digest(count: int, hash_id: str = "sha256") -> bytes:
    """Digest of the decimal rendering of a count."""
    if count < 0:
        raise DomainError("count must be non-negative")
    _check_hash_id(hash_id)
    return hashlib.new(hash_id, str(count).encode("ascii")).digest()


def _check_hash_id(hash_id: str) -> int:
    try:
        return hashlib.new(hash_id).digest_size
    except (ValueError, TypeError):
        raise DomainError(f"unknown hash algorithm {hash_id!r}") from None


def gc_table_build(
    rows: int,
    prime_bits: int,
    hash_id: str = "sha256",
    trial: TrialPolicy = TrialPolicy(),
    mr: MrPolicy = MrPolicy(),
    rng: random.Random | None = None,
) -> list[GcKeyTableRow]:
    """Build `rows` table rows, each from a fresh pair of prime_bits-bit primes.

    A row publishes two_n = p1*q1 + 1 along with digests of its star1 and gc
    counts. Digest pairs are unique within the table: colliding rows are
    regenerated (up to 1000 tries per row).
    """
    if rows < 1:
        raise DomainError(f"rows must be >= 1, got {rows}")
    if prime_bits < 8:
        raise DomainError(f"prime_bits must be >= 8, got {prime_bits}")
    if prime_bits > MAX_TABLE_PRIME_BITS:
        raise ResourceLimitError(
            f"prime_bits is capped at {MAX_TABLE_PRIME_BITS}, got {prime_bits}"
        )
    _check_hash_id(hash_id)
    if rng is None:
        rng = mr.make_rng()
    table = sieve_upto(1 << (2 * prime_bits))  # covers every p1*q1 + 1
    out: list[GcKeyTableRow] = []
    seen: set[tuple[bytes, bytes]] = set()
    for _ in range(rows):
        for _ in range(1000):
            p1 = random_probable_prime(prime_bits, trial, mr, rng)
            q1 = random_probable_prime(prime_bits, trial, mr, rng)
            if p1 == q1:
                continue
            two_n = p1 * q1 + 1
            counts = census(two_n, table)
            key = (count_digest(counts.star1, hash_id), count_digest(counts.gc, hash_id))
            if key in seen:
                continue
            seen.add(key)
            out.append(GcKeyTableRow(two_n=two_n, h_star1=key[0], h_gc=key[1]))
            break
        else:
            raise SearchBudgetError(
                f"could not find a fresh digest pair at prime_bits={prime_bits}"
            )
    return out


def gc_table_serialize(rows: list[GcKeyTableRow], hash_id: str = "sha256") -> str:
    """Render a table in its file format.

    Header line `gc-table v1 <hash_id>`, then one `<two_n> <h_star1 hex>
    <h_gc hex>` line per row, newline-terminated.
    """
    _check_hash_id(hash_id)
    lines = [f"{GC_TABLE_MAGIC} {GC_TABLE_VERSION} {hash_id}"]
    for row in rows:
        lines.append(f"{row.two_n} {row.h_star1.hex()} {row.h_gc.hex()}")
    return "\n".join(lines) + "\n"


def gc_table_parse(text: str) -> tuple[str, list[GcKeyTableRow]]:
    """Parse a serialized table; returns (hash_id, rows).

    Any malformed header, malformed row, wrong digest length, or duplicate
    digest pair raises CorruptTableError.
    """
    lines = text.splitlines()
    if not lines:
        raise CorruptTableError("empty table")
    head = lines[0].split()
    if len(head) != 3 or head[0] != GC_TABLE_MAGIC or head[1] != GC_TABLE_VERSION:
        raise CorruptTableError(f"bad header line {lines[0]!r}")
    hash_id = head[2]
    try:
        digest_size = hashlib.new(hash_id).digest_size
    except (ValueError, TypeError):
        raise CorruptTableError(f"unknown hash algorithm {hash_id!r}") from None
    rows: list[GcKeyTableRow] = []
    seen: set[tuple[bytes, bytes]] = set()
    for number, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 3:
            raise CorruptTableError(f"line {number}: expected 3 fields, got {len(parts)}")
        try:
            two_n = int(parts[0])
            h_star1 = bytes.fromhex(parts[1])
            h_gc = bytes.fromhex(parts[2])
        except ValueError as exc:
            raise CorruptTableError(f"line {number}: {exc}") from None
        if two_n < 6 or two_n % 2:
            raise CorruptTableError(f"line {number}: two_n must be even and >= 6")
        if len(h_star1) != digest_size or len(h_gc) != digest_size:
            raise CorruptTableError(f"line {number}: digest length != {digest_size}")
        key = (h_star1, h_gc)
        if key in seen:
            raise CorruptTableError(f"line {number}: duplicate digest pair")
        seen.add(key)
        rows.append(GcKeyTableRow(two_n=two_n, h_star1=h_star1, h_gc=h_gc))
    return hash_id, rows


def gc_table_resolve(
    h_star1: bytes, h_gc: bytes, rows: list[GcKeyTableRow]
) -> int | None:
    """Look up the two_n whose digests match; None when absent.

    More than one match means the table's uniqueness guarantee is broken,
    which raises CorruptTableError. The caller's modulus is two_n - 1.
    """
    matches = [row.two_n for row in rows if row.h_star1 == h_star1 and row.h_gc == h_gc]
    if not matches:
        return None
    if len(matches) > 1:
        raise CorruptTableError("digest pair matches more than one row")
    return matches[0]


def semi_public_e(two_n: int, phi: int, primes: PrimeTable) -> int:
    """Public exponent derived from the gc count of two_n.

    Returns the count itself when it is >= 2 and coprime to phi, otherwise
    the next larger integer coprime to phi. Everything below phi failing
    coprimality (or the count already reaching phi) raises DomainError.
    """
    if phi < 3:
        raise DomainError(f"phi must be >= 3, got {phi}")
    e = max(census(two_n, primes).gc, 2)
    while e < phi:
        if math.gcd(e, phi) == 1:
            return e
        e += 1
    raise DomainError("no exponent available between the pair count and phi")
