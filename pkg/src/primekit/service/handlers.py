"""Transport-free request handlers: validated schema in, schema out.

The FastAPI routes and the CLI both call these, so behavior (including the
error taxonomy) cannot drift between the two front ends. UsageError marks
problems a validator could not see without cross-field or semantic checks;
the core's own exceptions pass through untouched.
"""

from __future__ import annotations

import functools
import random

from .. import rsa
from ..errors import DomainError, PrimekitError, ResourceLimitError
from ..goldbach import census, gc_assisted_prime
from ..modmath import from_bit_positions, random_bignat
from ..primality import MrPolicy, TrialPolicy
from ..primesearch import SearchReport, depth_sweep, next_probable_prime
from ..smallprimes import SIEVE_CAP, PrimeTable, sieve_upto
from . import schemas


class UsageError(ValueError):
    """Request is well-typed but not usable as asked."""


def _ms(seconds: float) -> int:
    return int(round(seconds * 1000))


def _start_from_pattern(pattern: list[int]) -> int:
    start = from_bit_positions(sorted(pattern))
    if start < 3:
        raise UsageError(f"pattern start must be >= 3, got {start}")
    return start


@functools.lru_cache(maxsize=2)
def _census_table(limit: int) -> PrimeTable:
    return sieve_upto(limit)


def _table_covering(two_n: int) -> PrimeTable:
    # Round the limit up to a power of two so repeated nearby requests share
    # one cached table instead of re-sieving per size.
    if two_n > SIEVE_CAP:
        raise ResourceLimitError(f"census is capped at two_n <= 2**28, got {two_n}")
    return _census_table(max(64, 1 << (two_n - 1).bit_length()))


def run_depth_sweep(req: schemas.DepthSweepRequest) -> schemas.DepthSweepResponse:
    start = _start_from_pattern(req.pattern)
    rows = depth_sweep(start, req.depths, MrPolicy(rounds=req.mr_rounds, seed=req.seed))
    found = {row.found for row in rows}
    if len(found) != 1:
        raise PrimekitError(f"sweep rows disagree on the found prime: {sorted(found)}")
    return schemas.DepthSweepResponse(
        found_hex=format(rows[0].found, "x"),
        rows=[
            schemas.SweepRowOut(
                b=row.depth,
                a=row.mr_candidates,
                c_ms=_ms(row.total_s),
                d_ms=_ms(row.mr_s),
                e_ms=_ms(row.trial_s),
            )
            for row in rows
        ],
    )


def run_census(req: schemas.CensusRequest) -> schemas.CensusResponse:
    counts = census(req.two_n, _table_covering(req.two_n))
    wanted = set(req.variants)
    return schemas.CensusResponse(
        two_n=counts.two_n,
        star1=counts.star1 if "star1" in wanted else None,
        star2=counts.star2 if "star2" in wanted else None,
        gc=counts.gc if "gc" in wanted else None,
        elapsed_ms=_ms(counts.elapsed_s),
    )


def _report_out(report: SearchReport) -> schemas.SearchReportOut:
    return schemas.SearchReportOut(
        candidates_scanned=report.candidates_scanned,
        mr_candidates=report.mr_candidates,
        trial_depth=report.trial_depth,
        total_ms=_ms(report.total_s),
        trial_ms=_ms(report.trial_s),
        mr_ms=_ms(report.mr_s),
    )


def run_genprime(req: schemas.GenPrimeRequest) -> schemas.GenPrimeResponse:
    trial = TrialPolicy(depth=req.trial_depth)
    mr = MrPolicy(rounds=req.mr_rounds, seed=req.seed)
    if req.mode == "search":
        if req.pattern is not None:
            start = _start_from_pattern(req.pattern)
        else:
            start = random_bignat(req.bits, random.Random(req.seed))
        report = next_probable_prime(start, trial, mr)
        return schemas.GenPrimeResponse(
            prime_hex=format(report.found, "x"),
            prime_dec=str(report.found),
            report=_report_out(report),
        )
    result = gc_assisted_prime(req.bits, req.small_bits, mode=req.gc_mode, trial=trial, mr=mr)
    return schemas.GenPrimeResponse(
        prime_hex=format(result.q, "x"),
        prime_dec=str(result.q),
        gc_assist=schemas.GcAssistOut(
            p_dec=str(result.p),
            two_n_dec=str(result.two_n),
            attempts=result.attempts,
            exact_sum=result.p + result.q == result.two_n,
        ),
    )


def run_keygen(req: schemas.KeygenRequest) -> schemas.KeyPairOut:
    pair = rsa.keygen(
        req.bits,
        e=req.e,
        e_strategy=req.e_strategy.replace("-", "_"),
        trial=TrialPolicy(depth=req.trial_depth),
        mr=MrPolicy(rounds=req.mr_rounds, seed=req.seed),
    )
    return schemas.KeyPairOut(
        bits=req.bits,
        n_dec=str(pair.n),
        n_hex=format(pair.n, "x"),
        e_dec=str(pair.e),
        d_dec=str(pair.d),
        p_dec=str(pair.p),
        q_dec=str(pair.q),
        phi_dec=str(pair.phi),
    )


def run_encrypt(req: schemas.EncryptRequest) -> schemas.EncryptResponse:
    n, e = int(req.n_dec), int(req.e_dec)
    if req.text is not None:
        m = rsa.text_to_int(req.text)
    else:
        m = int(req.m_dec)
    c = rsa.encrypt(m, n, e)
    return schemas.EncryptResponse(c_dec=str(c), c_hex=format(c, "x"))


def run_decrypt(req: schemas.DecryptRequest) -> schemas.DecryptResponse:
    n, d, c = int(req.n_dec), int(req.d_dec), int(req.c_dec)
    m = rsa.decrypt(c, n, d)
    try:
        text = rsa.int_to_text(m)
    except DomainError:
        text = None
    return schemas.DecryptResponse(m_dec=str(m), m_hex=format(m, "x"), text=text)


def run_gc_table(req: schemas.GcTableRequest) -> schemas.GcTableResponse:
    rows = rsa.gc_table_build(
        req.rows,
        req.prime_bits,
        hash_id=req.hash_id,
        trial=TrialPolicy(depth=req.trial_depth),
        mr=MrPolicy(rounds=req.mr_rounds, seed=req.seed),
    )
    return schemas.GcTableResponse(
        hash_id=req.hash_id,
        rows=[
            schemas.GcTableRowOut(
                two_n=row.two_n, h_star1=row.h_star1.hex(), h_gc=row.h_gc.hex()
            )
            for row in rows
        ],
        table_text=rsa.gc_table_serialize(rows, req.hash_id),
    )


def run_resolve(req: schemas.ResolveRequest) -> schemas.ResolveResponse:
    _, rows = rsa.gc_table_parse(req.table_text)
    two_n = rsa.gc_table_resolve(bytes.fromhex(req.h_star1), bytes.fromhex(req.h_gc), rows)
    if two_n is None:
        return schemas.ResolveResponse(found=False)
    return schemas.ResolveResponse(found=True, two_n=two_n, modulus=two_n - 1)
