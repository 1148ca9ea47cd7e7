"""Command-line front end.

Every subcommand builds the same request models the HTTP service accepts,
then either calls the shared handlers in-process (default) or POSTs to a
running service when --server is given. Outputs are identical either way.

Exit codes: 0 success, 2 usage, 3 internal/transport, 4 resource cap,
5 domain (bad numbers, oversized messages, corrupt tables).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import httpx
from pydantic import BaseModel, ValidationError

from .errors import CorruptTableError, DomainError, PrimekitError, ResourceLimitError
from .service import handlers, schemas
from .service.handlers import UsageError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3
EXIT_RESOURCE = 4
EXIT_DOMAIN = 5


def _csv_ints(text: str) -> list[int]:
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise ValueError(f"expected a comma-separated integer list, got {text!r}")
    return [int(p) for p in parts]


def _csv_names(text: str) -> list[str]:
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise ValueError(f"expected a comma-separated list, got {text!r}")
    return parts


def _decimal_literal(text: str) -> str:
    """Accept decimal or 0x-prefixed hex; normalize to a decimal string."""
    s = text.strip()
    value = int(s, 16) if s.lower().startswith("0x") else int(s)
    if value < 0:
        raise ValueError("value must be non-negative")
    return str(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primekit",
        description="Probable-prime search, pair censuses, and RSA tooling.",
    )
    parser.add_argument(
        "--server",
        metavar="URL",
        help="send the request to a running service instead of computing in-process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_search_knobs(p: argparse.ArgumentParser, trial_depth: bool = True) -> None:
        p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
        p.add_argument("--mr-rounds", type=int, default=25, help="Miller-Rabin rounds (default 25)")
        if trial_depth:
            p.add_argument("--trial-depth", type=int, default=60, help="odd primes to divide by (default 60)")

    bench = sub.add_parser("bench-depth", help="sweep trial depths over one search")
    bench.add_argument("--pattern", type=_csv_ints, required=True, metavar="BITS", help="set-bit indices of the start value, e.g. 1023,100,0")
    bench.add_argument("--depths", type=_csv_ints, required=True, metavar="LIST", help="trial depths to sweep, e.g. 0,10,60")
    add_search_knobs(bench, trial_depth=False)
    bench.add_argument("--format", choices=["csv", "json"], default="csv")
    bench.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")

    cen = sub.add_parser("census", help="count pair decompositions of an even number")
    cen.add_argument("two_n", help="even number >= 6; decimal or 2^k")
    cen.add_argument("--variants", type=_csv_names, default=["star1", "star2", "gc"], metavar="LIST", help="subset of star1,star2,gc")
    cen.add_argument("--format", choices=["json", "csv"], default="json")
    cen.add_argument("--out", metavar="FILE")

    gen = sub.add_parser("genprime", help="produce a probable prime")
    gen.add_argument("--mode", choices=["search", "gc-assist"], default="search")
    gen.add_argument("--bits", type=int, help="size of the value to produce")
    gen.add_argument("--pattern", type=_csv_ints, metavar="BITS", help="search mode: explicit start value bits")
    gen.add_argument("--small-bits", type=int, help="gc-assist mode: size of the subtracted prime")
    gen.add_argument("--gc-mode", choices=["retry", "fallback"], default="retry")
    add_search_knobs(gen)
    gen.add_argument("--out", metavar="FILE")

    rsa_cmd = sub.add_parser("rsa", help="keypairs, encryption, pair-count key tables")
    rsa_sub = rsa_cmd.add_subparsers(dest="rsa_command", required=True)

    keygen = rsa_sub.add_parser("keygen", help="generate a keypair")
    keygen.add_argument("--bits", type=int, required=True, help="bit size of each prime")
    keygen.add_argument("--e", type=int, default=65537, help="public exponent (fixed strategy)")
    keygen.add_argument("--e-strategy", choices=["fixed", "gc-derived"], default="fixed")
    add_search_knobs(keygen)
    keygen.add_argument("--out", metavar="FILE")

    enc = rsa_sub.add_parser("encrypt", help="c = m^e mod n")
    enc.add_argument("--n", type=_decimal_literal, required=True, metavar="N")
    enc.add_argument("--e", type=_decimal_literal, required=True, metavar="E")
    enc_src = enc.add_mutually_exclusive_group(required=True)
    enc_src.add_argument("--text", help="ASCII plaintext")
    enc_src.add_argument("--value", type=_decimal_literal, metavar="M", help="integer plaintext")
    enc.add_argument("--out", metavar="FILE")

    dec = rsa_sub.add_parser("decrypt", help="m = c^d mod n")
    dec.add_argument("--n", type=_decimal_literal, required=True, metavar="N")
    dec.add_argument("--d", type=_decimal_literal, required=True, metavar="D")
    dec.add_argument("--value", type=_decimal_literal, required=True, metavar="C")
    dec.add_argument("--out", metavar="FILE")

    table = rsa_sub.add_parser("gc-table", help="build a pair-count key table")
    table.add_argument("--rows", type=int, required=True)
    table.add_argument("--prime-bits", type=int, required=True)
    table.add_argument("--hash", default="sha256", dest="hash_id", help="digest algorithm (default sha256)")
    add_search_knobs(table)
    table.add_argument("--format", choices=["table", "json"], default="table", help="'table' emits the normative file format")
    table.add_argument("--out", metavar="FILE")

    resolve = rsa_sub.add_parser("resolve", help="look a modulus up in a table file")
    resolve.add_argument("--table", required=True, metavar="FILE", help="table file to search")
    resolve.add_argument("--h-star1", required=True, metavar="HEX")
    resolve.add_argument("--h-gc", required=True, metavar="HEX")
    resolve.add_argument("--out", metavar="FILE")

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)

    return parser


_ROUTES = {
    "bench-depth": ("/v1/bench/depth-sweep", handlers.run_depth_sweep, schemas.DepthSweepResponse),
    "census": ("/v1/census", handlers.run_census, schemas.CensusResponse),
    "genprime": ("/v1/genprime", handlers.run_genprime, schemas.GenPrimeResponse),
    "rsa keygen": ("/v1/rsa/keygen", handlers.run_keygen, schemas.KeyPairOut),
    "rsa encrypt": ("/v1/rsa/encrypt", handlers.run_encrypt, schemas.EncryptResponse),
    "rsa decrypt": ("/v1/rsa/decrypt", handlers.run_decrypt, schemas.DecryptResponse),
    "rsa gc-table": ("/v1/rsa/gc-table", handlers.run_gc_table, schemas.GcTableResponse),
    "rsa resolve": ("/v1/rsa/gc-table/resolve", handlers.run_resolve, schemas.ResolveResponse),
}


def _command_key(args: argparse.Namespace) -> str:
    if args.command == "rsa":
        return f"rsa {args.rsa_command}"
    return args.command


def _build_request(args: argparse.Namespace) -> BaseModel:
    key = _command_key(args)
    if key == "bench-depth":
        return schemas.DepthSweepRequest(
            pattern=args.pattern, depths=args.depths, mr_rounds=args.mr_rounds, seed=args.seed
        )
    if key == "census":
        return schemas.CensusRequest(two_n=args.two_n, variants=args.variants)
    if key == "genprime":
        return schemas.GenPrimeRequest(
            mode=args.mode,
            bits=args.bits,
            pattern=args.pattern,
            small_bits=args.small_bits,
            gc_mode=args.gc_mode,
            trial_depth=args.trial_depth,
            mr_rounds=args.mr_rounds,
            seed=args.seed,
        )
    if key == "rsa keygen":
        return schemas.KeygenRequest(
            bits=args.bits,
            e=args.e,
            e_strategy=args.e_strategy,
            trial_depth=args.trial_depth,
            mr_rounds=args.mr_rounds,
            seed=args.seed,
        )
    if key == "rsa encrypt":
        return schemas.EncryptRequest(n_dec=args.n, e_dec=args.e, m_dec=args.value, text=args.text)
    if key == "rsa decrypt":
        return schemas.DecryptRequest(n_dec=args.n, d_dec=args.d, c_dec=args.value)
    if key == "rsa gc-table":
        return schemas.GcTableRequest(
            rows=args.rows,
            prime_bits=args.prime_bits,
            hash_id=args.hash_id,
            trial_depth=args.trial_depth,
            mr_rounds=args.mr_rounds,
            seed=args.seed,
        )
    if key == "rsa resolve":
        try:
            table_text = Path(args.table).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read table file: {exc}") from None
        return schemas.ResolveRequest(table_text=table_text, h_star1=args.h_star1, h_gc=args.h_gc)
    raise UsageError(f"unknown command {key!r}")


def _make_client(server: str) -> httpx.Client:
    return httpx.Client(base_url=server, timeout=None)


def _raise_remote_error(status: int, body: object) -> None:
    message = ""
    code = None
    if isinstance(body, dict):
        err = body.get("error")
        if isinstance(err, dict):
            code = err.get("code")
            message = str(err.get("message", ""))
        elif "detail" in body:
            raise UsageError(f"request rejected: {body['detail']}")
    if code == "usage":
        raise UsageError(message)
    if code == "domain":
        raise DomainError(message)
    if code == "resource":
        raise ResourceLimitError(message)
    raise PrimekitError(f"server returned {status}: {message or body}")


def _dispatch(args: argparse.Namespace, request: BaseModel) -> BaseModel:
    path, handler, response_model = _ROUTES[_command_key(args)]
    if not args.server:
        return handler(request)
    with _make_client(args.server) as client:
        resp = client.post(path, json=request.model_dump(mode="json"))
    if resp.status_code != 200:
        try:
            body = resp.json()
        except ValueError:
            body = resp.text
        _raise_remote_error(resp.status_code, body)
    return response_model.model_validate(resp.json())


def _sweep_csv(resp: schemas.DepthSweepResponse) -> str:
    lines = ["b,a,c_ms,d_ms,e_ms"]
    for row in resp.rows:
        lines.append(f"{row.b},{row.a},{row.c_ms},{row.d_ms},{row.e_ms}")
    return "\n".join(lines) + "\n"


def _census_csv(resp: schemas.CensusResponse) -> str:
    fields = {"two_n": resp.two_n, "star1": resp.star1, "star2": resp.star2, "gc": resp.gc, "elapsed_ms": resp.elapsed_ms}
    present = {k: v for k, v in fields.items() if v is not None}
    header = ",".join(present)
    values = ",".join(str(v) for v in present.values())
    return f"{header}\n{values}\n"


def _render(args: argparse.Namespace, resp: BaseModel) -> str:
    key = _command_key(args)
    fmt = getattr(args, "format", "json")
    if key == "bench-depth" and fmt == "csv":
        return _sweep_csv(resp)
    if key == "census" and fmt == "csv":
        return _census_csv(resp)
    if key == "rsa gc-table" and fmt == "table":
        return resp.table_text
    return resp.model_dump_json(indent=2, exclude_none=True) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("primekit.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed its message; keep main() embeddable.
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        if args.command == "serve":
            return _serve(args)
        request = _build_request(args)
        response = _dispatch(args, request)
        _emit(_render(args, response), args.out)
        return EXIT_OK
    except (UsageError, ValidationError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (DomainError, CorruptTableError) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except httpx.HTTPError as exc:
        print(f"transport error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except PrimekitError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # last resort: never leak a traceback as the UI
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


def entrypoint() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entrypoint()
