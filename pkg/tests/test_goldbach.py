import random

import pytest
import sympy

import oracles
from primekit.errors import DomainError, ResourceLimitError, SearchBudgetError
from primekit.goldbach import (
    PAIR_LIST_CAP,
    GcPair,
    census,
    enumerate_gc_pairs,
    gc_assisted_prime,
)
from primekit.primality import MrPolicy
from primekit.smallprimes import sieve_upto


@pytest.fixture(scope="module")
def table_100k():
    return sieve_upto(10**5 + 2)


@pytest.fixture(scope="module")
def oracle_sieve_100k():
    return oracles.boolean_sieve(10**5 + 2)


class TestCensus:
    def test_known_small_counts(self, table_64k):
        for two_n, want in {
            6: (0, 0, 0),
            8: (1, 1, 1),
            10: (1, 1, 1),
            12: (2, 1, 1),
            16: (3, 2, 2),
            100: (14, 8, 6),
            1024: (96, 51, 22),
        }.items():
            got = census(two_n, table_64k)
            assert (got.star1, got.star2, got.gc) == want, two_n

    def test_matches_oracle_exhaustively(self, table_64k, oracle_sieve_64k):
        for two_n in range(6, 10_001, 2):
            got = census(two_n, table_64k)
            want = oracles.census_counts(two_n, oracle_sieve_64k)
            assert (got.star1, got.star2, got.gc) == want, two_n

    def test_matches_oracle_random_midsize(self, table_100k, oracle_sieve_100k):
        rng = random.Random(41)
        for _ in range(300):
            two_n = rng.randrange(5_001, 50_001) * 2
            got = census(two_n, table_100k)
            want = oracles.census_counts(two_n, oracle_sieve_100k)
            assert (got.star1, got.star2, got.gc) == want, two_n

    def test_nesting(self, table_100k):
        rng = random.Random(42)
        for _ in range(50):
            two_n = rng.randrange(3, 50_000) * 2
            got = census(two_n, table_100k)
            assert got.gc <= got.star2 <= got.star1

    def test_counts_independent_of_chunk(self, table_100k):
        sizes = [(10**4, (2, 64, 10**6)), (99_990, (4096, 7, 10**6))]
        for two_n, chunks in sizes:
            base = census(two_n, table_100k)
            for chunk in chunks:
                got = census(two_n, table_100k, chunk=chunk)
                assert (got.star1, got.star2, got.gc) == (
                    base.star1,
                    base.star2,
                    base.gc,
                ), (two_n, chunk)

    def test_elapsed_is_non_negative(self, table_64k):
        assert census(1000, table_64k).elapsed_s >= 0.0

    def test_rejects_odd_or_tiny(self, table_64k):
        for two_n in (7, 4, 0, -6):
            with pytest.raises(DomainError):
                census(two_n, table_64k)

    def test_rejects_uncovered_table(self, table_64k):
        with pytest.raises(ResourceLimitError):
            census((1 << 16) + 2, table_64k)

    def test_rejects_bad_chunk(self, table_64k):
        with pytest.raises(DomainError):
            census(100, table_64k, chunk=1)


class TestEnumerateGcPairs:
    def test_known_pairs(self, table_64k):
        assert enumerate_gc_pairs(10, table_64k) == [GcPair(3, 7)]
        assert enumerate_gc_pairs(6, table_64k) == []
        assert enumerate_gc_pairs(16, table_64k) == [GcPair(3, 13), GcPair(5, 11)]

    def test_pair_invariants_and_census_agreement(self, table_64k, oracle_sieve_64k):
        rng = random.Random(43)
        for _ in range(50):
            two_n = rng.randrange(3, 1 << 13) * 2
            pairs = enumerate_gc_pairs(two_n, table_64k)
            assert len(pairs) == census(two_n, table_64k).gc
            assert [p.p for p in pairs] == sorted({p.p for p in pairs})
            for p, q in pairs:
                assert p + q == two_n
                assert p <= two_n // 2 - 1
                assert oracle_sieve_64k[p] and oracle_sieve_64k[q]

    def test_cap_checked_before_table_coverage(self, table_64k):
        with pytest.raises(ResourceLimitError, match="capped"):
            enumerate_gc_pairs(PAIR_LIST_CAP + 2, table_64k)


class TestGcAssistedPrime:
    def test_retry_first_attempt_success(self):
        result = gc_assisted_prime(64, 16, mode="retry", mr=MrPolicy(rounds=25, seed=34))
        assert result.attempts == 1
        assert result.q == 15810189740321772671
        assert result.p == 47797
        assert result.p + result.q == result.two_n

    def test_retry_multiple_attempts(self):
        result = gc_assisted_prime(64, 16, mode="retry", mr=MrPolicy(rounds=25, seed=1))
        assert result.attempts == 5
        assert result.p + result.q == result.two_n

    def test_result_shape_and_primality(self):
        for seed in (1, 34, 50):
            r = gc_assisted_prime(64, 16, mode="retry", mr=MrPolicy(rounds=25, seed=seed))
            assert r.two_n % 2 == 0
            assert r.two_n.bit_length() == 64
            assert r.p.bit_length() == 16
            assert r.q.bit_length() in (63, 64)
            assert oracles.det_is_prime(r.p)
            assert oracles.det_is_prime(r.q)
            assert sympy.isprime(r.q)

    def test_seed_determinism(self):
        a = gc_assisted_prime(64, 16, mr=MrPolicy(rounds=25, seed=77))
        b = gc_assisted_prime(64, 16, mr=MrPolicy(rounds=25, seed=77))
        assert a == b

    def test_fallback_moves_forward_to_first_prime(self):
        # seed 0 fails its first attempt, so fallback searches upward from q
        result = gc_assisted_prime(
            64, 16, mode="fallback", mr=MrPolicy(rounds=25, seed=0)
        )
        assert result.attempts == 1
        assert result.q == 16329893639329881151
        failed_q = result.two_n - result.p
        assert result.q > failed_q
        assert result.p + result.q != result.two_n
        assert oracles.det_is_prime(result.q)
        for between in oracles.forward_candidates(failed_q, result.q - 2):
            assert not oracles.det_is_prime(between)

    def test_fallback_determinism(self):
        a = gc_assisted_prime(64, 16, mode="fallback", mr=MrPolicy(rounds=25, seed=0))
        b = gc_assisted_prime(64, 16, mode="fallback", mr=MrPolicy(rounds=25, seed=0))
        assert a == b

    def test_budget_exhaustion_in_retry_mode(self):
        with pytest.raises(SearchBudgetError):
            gc_assisted_prime(
                64, 16, mode="retry", mr=MrPolicy(rounds=25, seed=0), max_attempts=1
            )

    def test_argument_validation(self):
        with pytest.raises(DomainError):
            gc_assisted_prime(64, 7)
        with pytest.raises(DomainError):
            gc_assisted_prime(18, 16)
        with pytest.raises(DomainError):
            gc_assisted_prime(64, 16, mode="sideways")
        with pytest.raises(DomainError):
            gc_assisted_prime(64, 16, max_attempts=0)
