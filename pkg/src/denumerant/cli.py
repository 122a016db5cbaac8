"""Command-line front end: ``denumerant {count,batch,oracle,bench}``.

Exit codes: 0 ok, 2 invalid input, 3 internal assertion, 4 ``--verify``
mismatch.  ``DENUM_SEED`` supplies the default seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import random
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from math import gcd
from typing import Optional, Sequence

from .ctcore import step_bound
from .errors import InternalError, InvalidInputError
from .pipeline import oracle_count, solve
from .trace import TraceLog

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INTERNAL = 3
EXIT_MISMATCH = 4

BATCH_HEADER = ["n", "a", "b", "c"]


def _default_seed() -> Optional[int]:
    raw = os.environ.get("DENUM_SEED")
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise InvalidInputError(f"DENUM_SEED must be an integer, got {raw!r}") from None


def _parse_mu(text: str) -> tuple[int, int, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"--mu needs three comma-separated integers, got {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--mu needs integers, got {text!r}") from None


def _seed(args) -> Optional[int]:
    return args.seed if args.seed is not None else _default_seed()


def cmd_count(args, out) -> int:
    trace = TraceLog() if args.trace else None
    try:
        sol = solve(args.n, args.a, args.b, args.c, mu=args.mu, seed=_seed(args), trace=trace)
    finally:
        if trace is not None:
            with open(args.trace, "w", encoding="utf-8", newline="\n") as fh:
                fh.writelines(line + "\n" for line in trace.lines())
    print(sol.count, file=out)
    if args.verify:
        expected = oracle_count(args.n, args.a, args.b, args.c, limit=args.oracle_limit)
        if expected != sol.count:
            print(f"verify mismatch: oracle gives {expected}", file=sys.stderr)
            return EXIT_MISMATCH
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    print(oracle_count(args.n, args.a, args.b, args.c, limit=args.limit), file=out)
    return EXIT_OK


def _batch_line(item: tuple[list[str], Optional[int]]) -> str:
    fields, seed = item
    try:
        if len(fields) != 4:
            raise InvalidInputError(f"expected 4 fields, got {len(fields)}")
        try:
            n, a, b, c = (int(f.strip()) for f in fields)
        except ValueError:
            raise InvalidInputError(f"non-integer field in {fields}") from None
        count = solve(n, a, b, c, seed=seed).count
        return f"{n},{a},{b},{c},{count}"
    except InvalidInputError:
        return ",".join(f.strip() for f in fields) + f",error:{EXIT_INVALID}"
    except InternalError:
        return ",".join(f.strip() for f in fields) + f",error:{EXIT_INTERNAL}"


def read_batch(text: str) -> list[list[str]]:
    """Parse batch input: comma-separated ``n,a,b,c`` rows, optional header."""
    rows = [row for row in csv.reader(io.StringIO(text)) if row and any(f.strip() for f in row)]
    if rows and [f.strip().lower() for f in rows[0]] == BATCH_HEADER:
        rows = rows[1:]
    return rows


def cmd_batch(args, out) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    rows = read_batch(text)
    seed = _seed(args)
    items = [(row, seed) for row in rows]
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_batch_line, items, chunksize=64))
    else:
        results = [_batch_line(item) for item in items]
    payload = "".join(line + "\n" for line in results)
    if args.output in (None, "-"):
        out.write(payload)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(payload)
    return EXIT_OK


def sample_instance(rng: random.Random, bits: int) -> tuple[int, int, int, int]:
    """A random coprime triple ``a < b < c`` with ``b`` of exactly ``bits`` bits."""
    if bits < 2:
        raise InvalidInputError("--bits must be at least 2")
    while True:
        b = rng.randrange(1 << (bits - 1), 1 << bits)
        a = rng.randrange(1, b)
        c = rng.randrange(b + 1, 1 << (bits + 1))
        if gcd(a, b, c) == 1:
            n = rng.randrange(0, 1 << (2 * bits))
            return n, a, b, c


def run_bench(bits: int, samples: int, seed: Optional[int] = None,
              verify_limit: int = 1 << 20) -> dict:
    """Time ``samples`` random instances and audit the recursion step counts."""
    rng = random.Random(seed)
    rows = []
    for _ in range(samples):
        n, a, b, c = sample_instance(rng, bits)
        t0 = time.perf_counter()
        sol = solve(n, a, b, c, seed=seed)
        elapsed = time.perf_counter() - t0
        # short-circuited zero counts run no reduction at all
        ra, rb = (sol.reduced.a, sol.reduced.b) if sol.reduced else (a, b)
        oracle = oracle_count(n, a, b, c, limit=verify_limit) if n <= verify_limit else None
        rows.append({
            "n": n, "a": a, "b": b, "c": c, "count": sol.count, "seconds": elapsed,
            "steps_a": sol.steps_a, "steps_b": sol.steps_b,
            "step_bound_a": step_bound(ra), "step_bound_b": step_bound(rb),
            "terms": len(sol.terms),
            "term_bound": (ra.bit_length() - 1) + (rb.bit_length() - 1) + 2,
            "oracle": oracle,
        })
    times = sorted(r["seconds"] for r in rows)
    report = {
        "bits": bits, "samples": samples,
        "median_ms": statistics.median(times) * 1e3 if times else None,
        "p95_ms": times[min(len(times) - 1, int(0.95 * len(times)))] * 1e3 if times else None,
        "max_steps": max((max(r["steps_a"], r["steps_b"]) for r in rows), default=0),
        "max_terms": max((r["terms"] for r in rows), default=0),
        "max_term_bound": max((r["term_bound"] for r in rows), default=0),
        "step_violations": sum(r["steps_a"] > r["step_bound_a"] or r["steps_b"] > r["step_bound_b"]
                               for r in rows),
        "term_violations": sum(r["terms"] > r["term_bound"] for r in rows),
        "verified": sum(r["oracle"] is not None for r in rows),
        "mismatches": sum(r["oracle"] is not None and r["oracle"] != r["count"] for r in rows),
        "rows": rows,
    }
    return report


def cmd_bench(args, out) -> int:
    report = run_bench(args.bits, args.samples, _seed(args), args.verify_limit)
    keys = ["bits", "samples", "median_ms", "p95_ms", "max_steps", "max_terms",
            "max_term_bound", "step_violations", "term_violations", "verified", "mismatches"]
    for key in keys:
        value = report[key]
        if isinstance(value, float):
            value = f"{value:.4f}"
        print(f"{key}={value}", file=out)
    if report["step_violations"] or report["term_violations"]:
        return EXIT_INTERNAL
    if report["mismatches"]:
        return EXIT_MISMATCH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="denumerant",
        description="Count non-negative solutions of a*x + b*y + c*z = n exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="compute d(n; a, b, c)")
    for name in ("n", "a", "b", "c"):
        p.add_argument(name, type=int)
    p.add_argument("--mu", type=_parse_mu, help="slack direction, e.g. 0,1,1")
    p.add_argument("--seed", type=int)
    p.add_argument("--trace", metavar="PATH", help="write one key=value record per step")
    p.add_argument("--verify", action="store_true", help="cross-check with the brute-force table")
    p.add_argument("--oracle-limit", type=int, default=10**7)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("batch", help="process a CSV file of n,a,b,c rows")
    p.add_argument("input")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("oracle", help="brute-force d(n; a, b, c) by dynamic programming")
    for name in ("n", "a", "b", "c"):
        p.add_argument(name, type=int)
    p.add_argument("--limit", type=int, default=10**7)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="time random instances and audit step counts")
    p.add_argument("--bits", type=int, default=40)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int)
    p.add_argument("--verify-limit", type=int, default=1 << 20,
                   help="oracle-check instances with n at most this")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InvalidInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
