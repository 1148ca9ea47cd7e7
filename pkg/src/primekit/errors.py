"""Exception taxonomy shared across the toolkit.

DomainError covers inputs outside an operation's mathematical domain,
ResourceLimitError covers work that would exceed a configured cap, and
SearchBudgetError covers randomized searches that ran out of attempts.
"""


class PrimekitError(Exception):
    """Base class for every error raised by this package."""


class DomainError(PrimekitError, ValueError):
    """Input lies outside the operation's domain (wrong parity, range, shape)."""


class NotInvertibleError(DomainError):
    """No modular inverse exists because gcd(a, m) != 1."""


class MessageTooLargeError(DomainError):
    """RSA plaintext or ciphertext is not in [0, n)."""


class ResourceLimitError(PrimekitError, RuntimeError):
    """Requested work exceeds a hard cap (sieve bound, pair-list bound)."""


class SearchBudgetError(PrimekitError, RuntimeError):
    """A randomized search exhausted its attempt budget."""


class CorruptTableError(PrimekitError, RuntimeError):
    """A key table is malformed or violates its uniqueness guarantee."""
