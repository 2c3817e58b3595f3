"""Command-line interface.

Exit codes: 0 success, 1 a verification check failed, 2 bad usage or
malformed input, 3 a freshly generated frame failed self-verification.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import constructions as cons
from .errors import EtfError, FrameFormatError
from .finite_field import make_field, prime_power
from .frame_io import format_float, read_frame, write_frame
from .frames import CONSTRUCTIONS, Frame
from .verification import verify_frame, welch_target_fraction

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SELFCHECK = 0, 1, 2, 3
CATALOG_MAX_N = 128
EXPERIMENT_MAX_K = 8


class UsageError(Exception):
    pass


def _is_mersenne(n: int) -> bool:
    return n >= 3 and (n + 1) & n == 0


def _field_for(q: int):
    pm = prime_power(q)
    if pm is None:
        return None
    return make_field(*pm)


def _requested_q(args, offset: int = 0) -> int:
    """Field order from --q, --p/--m, or --n (with ``n = q + offset``)."""
    if args.q is not None:
        return args.q
    if args.p is not None:
        return args.p ** (args.m or 1)
    if args.n is not None:
        return args.n - offset
    raise UsageError("give the field order with --n, --q or --p/--m")


def _odd_field(q: int):
    F = _field_for(q)
    if F is None:
        raise UsageError(f"{q} is not a prime power")
    if F.p == 2:
        raise UsageError(f"{q} is even; quadratic residues need an odd prime power")
    return F


def _paley_field(q: int):
    F = _field_for(q)
    if F is None:
        hint = "; use --construction conference" if _is_mersenne(q) else ""
        raise UsageError(f"{q} is not a prime power{hint}")
    if q % 4 != 3:
        hint = "; use --construction conference" if _is_mersenne(q) else ""
        raise UsageError(f"{q} is not 3 mod 4, so there is no Paley tournament{hint}")
    return F


def _conference_k(args, offset: int) -> int:
    if args.k is not None:
        k = args.k
    elif args.n is not None:
        m = args.n + offset
        if m < 2 or m & (m - 1):
            raise UsageError(f"n = {args.n} is not of the form 2^k - {offset}"
                             if offset else f"n = {args.n} is not a power of two")
        k = m.bit_length() - 1
    else:
        raise UsageError("give --k or --n")
    if k < 2:
        raise UsageError(f"k = {k} gives fewer than {cons.MIN_SIZE} vectors")
    if 2**k > 4096:
        raise UsageError(f"k = {k} is above the size bound")
    return k


def build_frame(args) -> Frame:
    kind = args.construction
    if kind in ("paley-upper", "paley-lower"):
        F = _paley_field(_requested_q(args))
        return cons.paley_frame(F, upper=kind == "paley-upper")
    if kind in ("conference-upper", "conference-lower"):
        k = _conference_k(args, 1)
        return cons.conference_frame(k, upper=kind == "conference-upper")
    if kind == "conference-etf":
        return cons.conference_etf(cons.conference_skew(_conference_k(args, 0)))
    if kind == "zauner":
        F = _odd_field(_requested_q(args, offset=1))
        return cons.zauner_frame(F, args.character_c)
    if kind == "drop-one-canonical":
        if args.k is not None:
            source = cons.conference_etf(cons.conference_skew(_conference_k(args, 0)))
        else:
            F = _odd_field(_requested_q(args))
            source = cons.zauner_frame(F, args.character_c)
        return cons.drop_one_canonical(source, args.drop_index)
    raise UsageError(f"unknown construction {kind!r}")


def _summary(report) -> str:
    parts = ", ".join(f"{c.name} dev={c.deviation:.2e}" for c in report.checks)
    return f"verification {'PASS' if report.verdict else 'FAIL'} ({parts})"


def cmd_generate(args) -> int:
    try:
        frame = build_frame(args)
    except (UsageError, EtfError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        write_frame(frame, args.out)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    target = welch_target_fraction(frame.n, frame.d)
    report = verify_frame(frame, args.tol)
    print(f"{frame.construction} (n, d) = ({frame.n}, {frame.d})")
    print(f"target |<phi_j, phi_k>|^2 = {target} = {float(target)!r}")
    print(_summary(report))
    return EXIT_OK if report.verdict else EXIT_SELFCHECK


def cmd_verify(args) -> int:
    try:
        frame = read_frame(args.path)
    except FrameFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = verify_frame(frame, args.tol)
    print(json.dumps(report.to_dict(), indent=2))
    if not report.verdict:
        print(f"failed checks: {', '.join(report.failing())}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def catalog_rows(max_n: int, tol: float = 1e-9) -> list[dict]:
    """Construct and verify every frame the library offers with n <= max_n.

    Zauner and conference-ETF rows are indexed by their source order, so
    they may exceed ``max_n`` by one.
    """
    jobs = []
    for n in range(cons.MIN_SIZE, max_n + 1):
        if _is_mersenne(n):
            k = (n + 1).bit_length() - 1
            jobs.append(("conference-upper", lambda k=k: cons.conference_frame(k, True)))
            jobs.append(("conference-lower", lambda k=k: cons.conference_frame(k, False)))
            jobs.append(("conference-etf",
                         lambda k=k: cons.conference_etf(cons.conference_skew(k))))
        F = _field_for(n)
        if F is None or F.p == 2:
            continue
        jobs.append(("zauner", lambda F=F: cons.zauner_frame(F)))
        if n % 4 == 3:
            jobs.append(("paley-upper", lambda F=F: cons.paley_frame(F, True)))
            jobs.append(("paley-lower", lambda F=F: cons.paley_frame(F, False)))
            jobs.append(("drop-one-canonical",
                         lambda F=F: cons.drop_one_canonical(cons.zauner_frame(F), 0)))
    rows = []
    for tag, build in jobs:
        frame = build()
        rows.append({
            "n": frame.n,
            "d": frame.d,
            "construction": tag,
            "target_overlap_sq": float(welch_target_fraction(frame.n, frame.d)),
            "verified": verify_frame(frame, tol).verdict,
        })
    rows.sort(key=lambda r: (r["n"], r["d"], r["construction"]))
    return rows


def cmd_catalog(args) -> int:
    if not cons.MIN_SIZE <= args.max_n <= args.limit:
        print(f"error: --max-n must lie in [{cons.MIN_SIZE}, {args.limit}]", file=sys.stderr)
        return EXIT_USAGE
    try:
        fh = open(args.out, "w", newline="")
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
        return EXIT_USAGE
    rows = catalog_rows(args.max_n)
    with fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["n", "d", "construction", "target_overlap_sq", "verified"])
        for r in rows:
            writer.writerow([r["n"], r["d"], r["construction"],
                             format_float(r["target_overlap_sq"]),
                             "true" if r["verified"] else "false"])
    print(f"{len(rows)} rows written to {args.out}")
    return EXIT_OK if all(r["verified"] for r in rows) else EXIT_FAIL


def cmd_experiment(args) -> int:
    if not 2 <= args.k <= EXPERIMENT_MAX_K:
        print(f"error: k must lie in [2, {EXPERIMENT_MAX_K}]", file=sys.stderr)
        return EXIT_USAGE
    report = cons.conjecture_experiment(args.k, args.tol)
    print(json.dumps(report.to_dict(), indent=2))
    print(f"k={args.k}: derived ({report.subject['n']}, {report.subject['d']}) set is "
          f"{'an ETF' if report.verdict else 'NOT an ETF'}; "
          f"Gram comparison verdict: {report.extra.value}", file=sys.stderr)
    return EXIT_OK if report.verdict else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paley-etf",
        description="Construct and verify equiangular tight frames.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="construct a frame and write it to a file")
    g.add_argument("--construction", required=True, choices=CONSTRUCTIONS)
    g.add_argument("--n", type=int, help="number of frame vectors")
    g.add_argument("--q", type=int, help="field order")
    g.add_argument("--p", type=int, help="field characteristic")
    g.add_argument("--m", type=int, help="field extension degree")
    g.add_argument("--k", type=int, help="conference matrix order 2^k")
    g.add_argument("--drop-index", type=int, default=0)
    g.add_argument("--character-c", type=int, default=1,
                   help="encoding of c in the additive character psi_c")
    g.add_argument("--out", required=True)
    g.add_argument("--format", choices=["json"], default="json")
    g.add_argument("--tol", type=float, default=1e-9)
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="check a frame file for equiangularity and tightness")
    v.add_argument("path")
    v.add_argument("--tol", type=float, default=1e-9)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("catalog", help="tabulate every constructible (n, d) up to --max-n")
    c.add_argument("--max-n", type=int, required=True)
    c.add_argument("--out", required=True)
    c.add_argument("--limit", type=int, default=CATALOG_MAX_N, help=argparse.SUPPRESS)
    c.set_defaults(func=cmd_catalog)

    e = sub.add_parser("experiment", help="drop-one test on the conference route")
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--tol", type=float, default=1e-9)
    e.set_defaults(func=cmd_experiment)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
