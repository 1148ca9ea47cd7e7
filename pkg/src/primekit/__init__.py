"""primekit: probable-prime search with tunable trial division, pair
censuses over even numbers, and textbook RSA tooling built on both."""

__version__ = "0.1.0"

from .errors import (
    CorruptTableError,
    DomainError,
    MessageTooLargeError,
    NotInvertibleError,
    PrimekitError,
    ResourceLimitError,
    SearchBudgetError,
)
from .goldbach import (
    PAIR_LIST_CAP,
    GcAssistResult,
    GcPair,
    GoldbachCensus,
    census,
    enumerate_gc_pairs,
    gc_assisted_prime,
)
from .modmath import (
    bit_positions,
    ext_gcd,
    from_bit_positions,
    mod_exp,
    mod_inverse,
    random_bignat,
    random_even,
)
from .primality import (
    COMPOSITE,
    DEFAULT_MR_ROUNDS,
    DEFAULT_TRIAL_DEPTH,
    PRIME,
    PROBABLE_PRIME,
    MrPolicy,
    StageStats,
    TrialPolicy,
    Verdict,
    is_probable_prime,
    miller_rabin,
    random_probable_prime,
    trial_division,
)
from .primesearch import SearchReport, SweepRow, depth_sweep, next_probable_prime
from .rsa import (
    DEFAULT_PUBLIC_EXPONENT,
    GcKeyTableRow,
    RsaKeyPair,
    count_digest,
    decrypt,
    encrypt,
    gc_table_build,
    gc_table_parse,
    gc_table_resolve,
    gc_table_serialize,
    int_to_text,
    keygen,
    keypair_from_primes,
    semi_public_e,
    text_to_int,
)
from .smallprimes import (
    SIEVE_CAP,
    PrimeTable,
    first_k_odd_primes,
    first_k_primes,
    sieve_upto,
)

__all__ = [
    "__version__",
    "PrimekitError",
    "DomainError",
    "NotInvertibleError",
    "MessageTooLargeError",
    "ResourceLimitError",
    "SearchBudgetError",
    "CorruptTableError",
    "from_bit_positions",
    "bit_positions",
    "mod_exp",
    "ext_gcd",
    "mod_inverse",
    "random_bignat",
    "random_even",
    "SIEVE_CAP",
    "PrimeTable",
    "sieve_upto",
    "first_k_primes",
    "first_k_odd_primes",
    "COMPOSITE",
    "PROBABLE_PRIME",
    "PRIME",
    "DEFAULT_TRIAL_DEPTH",
    "DEFAULT_MR_ROUNDS",
    "Verdict",
    "StageStats",
    "TrialPolicy",
    "MrPolicy",
    "trial_division",
    "miller_rabin",
    "is_probable_prime",
    "random_probable_prime",
    "SearchReport",
    "SweepRow",
    "next_probable_prime",
    "depth_sweep",
    "PAIR_LIST_CAP",
    "GoldbachCensus",
    "GcPair",
    "GcAssistResult",
    "census",
    "enumerate_gc_pairs",
    "gc_assisted_prime",
    "DEFAULT_PUBLIC_EXPONENT",
    "RsaKeyPair",
    "keypair_from_primes",
    "keygen",
    "encrypt",
    "decrypt",
    "text_to_int",
    "int_to_text",
    "GcKeyTableRow",
    "count_digest",
    "gc_table_build",
    "gc_table_serialize",
    "gc_table_parse",
    "gc_table_resolve",
    "semi_public_e",
]
