import pytest

import oracles
from primekit.smallprimes import sieve_upto


@pytest.fixture(scope="session")
def table_64k():
    """Package sieve covering [2, 2**16], shared across test modules."""
    return sieve_upto(1 << 16)


@pytest.fixture(scope="session")
def oracle_sieve_64k():
    """Independent boolean sieve over the same range."""
    return oracles.boolean_sieve(1 << 16)
