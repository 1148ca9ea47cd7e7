"""Acceptance gate: twelve numbered end-to-end criteria.

Each test prints exactly one `[PASS] criterion N: ...` or `[FAIL] ...` line
(pytest runs with -s so the lines reach the console). Expected values follow
the rule documented in tests/reference_data.py: published reference numbers
are asserted only where an independent oracle confirms them; where the two
disagree, the oracle value is pinned and the difference is documented in
docs/reference-deviations.md.

The big fixtures (a 2^27 sieve both as the package table and as a plain
bytearray oracle) are shared module-wide; everything else runs per test.
"""

import math
import random
import time
from array import array
from contextlib import contextmanager
from pathlib import Path

import pytest

import oracles
from primekit.goldbach import census, gc_assisted_prime
from primekit.modmath import from_bit_positions, mod_exp
from primekit.primality import (
    MrPolicy,
    TrialPolicy,
    is_probable_prime,
    miller_rabin,
)
from primekit.primesearch import depth_sweep, next_probable_prime
from primekit.rsa import (
    decrypt,
    encrypt,
    gc_table_build,
    gc_table_parse,
    gc_table_resolve,
    gc_table_serialize,
    keygen,
    keypair_from_primes,
)
from primekit.smallprimes import first_k_odd_primes, sieve_upto
from reference_data import (
    CENSUS_GC_ORACLE,
    CENSUS_GC_PUBLISHED,
    CENSUS_RATIO_PUBLISHED,
    CENSUS_SIZES,
    CENSUS_STAR1_ORACLE,
    CENSUS_STAR1_PUBLISHED,
    REF513_A_CORRECTED,
    REF513_A_PUBLISHED,
    REF513_DEPTHS,
    REF513_START_BITS,
    REF513_TARGET_BITS,
    REF1024_A_PUBLISHED,
    REF1024_DEPTHS,
    REF1024_START_BITS,
    REF1024_TARGET_BITS,
    REF1500_A_CORRECTED,
    REF1500_A_PUBLISHED,
    REF1500_DEPTHS,
    REF1500_START_BITS,
    REF1500_TARGET_BITS,
    corrected_a_row,
)

START_513 = from_bit_positions(REF513_START_BITS)
TARGET_513 = from_bit_positions(REF513_TARGET_BITS)
START_1024 = from_bit_positions(REF1024_START_BITS)
TARGET_1024 = from_bit_positions(REF1024_TARGET_BITS)
START_1500 = from_bit_positions(REF1500_START_BITS)
TARGET_1500 = from_bit_positions(REF1500_TARGET_BITS)

SWEEP_SEED = 11


@contextmanager
def criterion(num: int, label: str):
    try:
        yield
    except BaseException:
        print(f"\n[FAIL] criterion {num}: {label}")
        raise
    print(f"\n[PASS] criterion {num}: {label}")


@pytest.fixture(scope="module")
def big_table():
    return sieve_upto(1 << 27)


@pytest.fixture(scope="module")
def oracle_sieve():
    return oracles.boolean_sieve(1 << 27)


@pytest.fixture(scope="module")
def oracle_odd_primes(oracle_sieve):
    # ascending odd primes up to 2^26 - 1: every p <= n - 1 any census needs
    return array("q", (i for i in range(3, 1 << 26, 2) if oracle_sieve[i]))


@pytest.fixture(scope="module")
def census_data(big_table, oracle_odd_primes, oracle_sieve):
    t0 = time.monotonic()
    package = [census(two_n, big_table) for two_n in CENSUS_SIZES]
    elapsed = time.monotonic() - t0
    oracle = [
        oracles.census_counts_from_primes(two_n, oracle_odd_primes, oracle_sieve)
        for two_n in CENSUS_SIZES
    ]
    return package, oracle, elapsed


def test_criterion_01_gc_census(census_data):
    with criterion(1, "prime-pair counts match the sieve oracle at all five sizes"):
        package, oracle, elapsed = census_data
        for i, two_n in enumerate(CENSUS_SIZES):
            live_gc = oracle[i][2]
            assert live_gc == CENSUS_GC_ORACLE[i], two_n
            assert package[i].gc == live_gc, two_n
            drift = abs(package[i].gc - CENSUS_GC_PUBLISHED[i]) / CENSUS_GC_PUBLISHED[i]
            assert drift < 0.005, two_n  # documented definitional gap stays small
        assert elapsed < 300.0


def test_criterion_02_star1_census(census_data):
    with criterion(2, "star1 counts oracle-exact and within 0.2% of the reference"):
        package, oracle, _ = census_data
        for i, two_n in enumerate(CENSUS_SIZES):
            live_star1 = oracle[i][0]
            assert live_star1 == CENSUS_STAR1_ORACLE[i], two_n
            assert package[i].star1 == live_star1, two_n
            drift = (
                abs(package[i].star1 - CENSUS_STAR1_PUBLISHED[i])
                / CENSUS_STAR1_PUBLISHED[i]
            )
            assert drift <= 0.002, two_n


def test_criterion_03_census_ratio(census_data):
    with criterion(3, "gc/star1 ratios within 0.02 points of the reference row"):
        package, _, _ = census_data
        for i in range(len(CENSUS_SIZES)):
            ratio = 100.0 * package[i].gc / package[i].star1
            assert abs(ratio - CENSUS_RATIO_PUBLISHED[i]) < 0.02, CENSUS_SIZES[i]


def test_criterion_04_search_1024():
    with criterion(4, "1024-bit search finds the exact target, 584 candidates"):
        t0 = time.monotonic()
        report = next_probable_prime(
            START_1024, TrialPolicy(depth=0), MrPolicy(rounds=25, seed=SWEEP_SEED)
        )
        elapsed = time.monotonic() - t0
        assert report.found == TARGET_1024
        assert report.candidates_scanned == 584
        assert report.mr_candidates == 584
        assert elapsed < 120.0


def test_criterion_05_sweep_1024():
    with criterion(5, "1024-bit sweep a-column exact at all seven depths"):
        depths = REF1024_DEPTHS[1:]
        want = REF1024_A_PUBLISHED[1:]
        assert want == (178, 129, 115, 111, 107, 105, 101)
        rows = depth_sweep(START_1024, depths, MrPolicy(rounds=25, seed=SWEEP_SEED))
        assert all(row.found == TARGET_1024 for row in rows)
        assert tuple(row.mr_candidates for row in rows) == want
        for depth, a in zip(depths, want):
            survivors = oracles.residue_survivors(
                START_1024, TARGET_1024, first_k_odd_primes(depth)
            )
            assert survivors == a, depth


def test_criterion_06_searches_513_and_1500():
    with criterion(6, "513/1500-bit searches: exact targets, oracle a-rows, doc"):
        cases = (
            (START_513, TARGET_513, REF513_DEPTHS, REF513_A_PUBLISHED, REF513_A_CORRECTED),
            (START_1500, TARGET_1500, REF1500_DEPTHS, REF1500_A_PUBLISHED, REF1500_A_CORRECTED),
        )
        for start, target, depths, published, corrected in cases:
            want = corrected_a_row(depths, published, corrected)
            rows = depth_sweep(start, depths, MrPolicy(rounds=25, seed=SWEEP_SEED))
            assert all(row.found == target for row in rows)
            assert tuple(row.mr_candidates for row in rows) == want
            for depth, a in zip(depths, want):
                survivors = oracles.residue_survivors(
                    start, target, first_k_odd_primes(depth)
                )
                assert survivors == a, depth
        report = Path(__file__).resolve().parents[1] / "docs" / "reference-deviations.md"
        assert report.is_file()
        body = report.read_text()
        for token in ("353", "356", "50", "52"):  # the corrected depth-0 counts
            assert token in body


def test_criterion_07_sweep_timing_structure():
    with criterion(7, "sweep timing structure: a falls, e grows, optimum >= 10"):
        runs = [
            depth_sweep(START_513, REF513_DEPTHS, MrPolicy(rounds=25, seed=SWEEP_SEED))
            for _ in range(3)
        ]
        a_row = tuple(row.mr_candidates for row in runs[0])
        assert all(tuple(row.mr_candidates for row in run) == a_row for run in runs)
        assert all(x >= y for x, y in zip(a_row, a_row[1:]))  # (a) non-increasing

        n_rows = len(REF513_DEPTHS)
        min_c = [min(run[i].total_s for run in runs) for i in range(n_rows)]
        min_e = [min(run[i].trial_s for run in runs) for i in range(n_rows)]

        # (b) trial time grows with depth; min-of-3 smooths scheduler noise
        assert min_e[0] == 0.0  # depth 0 never enters the trial stage
        slack = 1e-4
        assert all(later >= earlier - slack for earlier, later in zip(min_e, min_e[1:]))
        assert min_e[-1] > min_e[1]

        # (c) the fastest depth is never 0: filtering must pay for itself
        best = REF513_DEPTHS[min(range(n_rows), key=min_c.__getitem__)]
        assert 10 <= best <= 200


def test_criterion_08_exhaustive_soundness():
    with criterion(8, "verdicts match the sieve for every n < 2^20; Carmichaels"):
        limit = 1 << 20
        sieve = oracles.boolean_sieve(limit)
        trial = TrialPolicy(depth=60)
        mrp = MrPolicy(rounds=25, seed=8)
        rng = mrp.make_rng()
        t0 = time.monotonic()
        bad = [
            n
            for n in range(2, limit)
            if is_probable_prime(n, trial, mrp, rng)[0].passed != bool(sieve[n])
        ]
        elapsed = time.monotonic() - t0
        assert bad == []
        assert elapsed < 60.0

        carmichaels = oracles.carmichael_numbers_below(10**6)
        assert len(carmichaels) == 43
        assert carmichaels[0] == 561
        for n in carmichaels:
            verdict, _ = is_probable_prime(n, trial, mrp, rng)
            assert verdict.is_composite, n


def test_criterion_09_mod_exp_oracle():
    with criterion(9, "mod_exp equals naive repeated multiplication, 10^4 triples"):
        rng = random.Random(9)
        for _ in range(10_000):
            a = rng.randrange(1 << 16)
            b = rng.randrange(1 << 11)
            m = rng.randrange(2, 1 << 12)
            assert mod_exp(a, b, m) == oracles.naive_mod_exp(a, b, m), (a, b, m)


def test_criterion_10_rsa_keygen_and_roundtrips():
    with criterion(10, "100 seeded 256-bit keypairs: invariants, 10^3 roundtrips"):
        forced = keypair_from_primes(11, 17, 3)
        assert forced.d == 107
        msg_rng = random.Random(10)
        for seed in range(100):
            pair = keygen(256, mr=MrPolicy(rounds=25, seed=seed))
            oracles.check_keypair(pair, 256)
            for _ in range(1000):
                m = msg_rng.randrange(pair.n)
                assert decrypt(encrypt(m, pair.n, pair.e), pair.n, pair.d) == m
            m = msg_rng.randrange(pair.n)
            assert encrypt(m, pair.n, pair.e) == pow(m, pair.e, pair.n)


def test_criterion_11_gc_assisted_generation():
    with criterion(11, "50 assisted runs: exact sums, independent 25-round check"):
        checker = MrPolicy(rounds=25, seed=77)
        attempts = []
        for i in range(50):
            result = gc_assisted_prime(
                256, 64, mode="retry", mr=MrPolicy(rounds=25, seed=1000 + i)
            )
            assert result.q == result.two_n - result.p
            assert result.q.bit_length() == 256
            assert miller_rabin(result.q, checker).passed
            attempts.append(result.attempts)
        mean = sum(attempts) / len(attempts)
        expected = 256 * math.log(2) / 2  # ~88.7 by prime density
        assert expected / 2 <= mean <= expected * 2


def test_criterion_12_gc_key_table(tmp_path):
    with criterion(12, "100-row key table: resolve roundtrips, byte-stable file"):
        rows = gc_table_build(100, 12, mr=MrPolicy(rounds=25, seed=12))
        assert len(rows) == 100
        text = gc_table_serialize(rows)

        path = tmp_path / "keys.gct"
        path.write_text(text)
        stored = path.read_text()
        hash_id, parsed = gc_table_parse(stored)
        assert hash_id == "sha256"
        assert parsed == rows
        assert gc_table_serialize(parsed, hash_id) == stored

        for row in rows:
            two_n = gc_table_resolve(row.h_star1, row.h_gc, parsed)
            assert two_n == row.two_n
            assert (two_n - 1) % 2 == 1  # published modulus is the odd 2n - 1
