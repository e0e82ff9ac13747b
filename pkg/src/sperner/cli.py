"""Command line: bounds, tables, figure data, constructions, verification, brute force.

Exit codes: 0 success, 2 precondition or not applicable, 3 verification
failure, 4 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .bounds import Params, aggregate, exact_known, mms_floor, nlb, thm_applicable, thm_upper
from .errors import NotApplicable, RealizationError, TripleHypothesisError
from .io import SystemFileError, load_system, save_system
from .report import FIGURE_HEADER, TABLE_HEADER, figure_rows, table_rows, to_csv
from .verify import to_detecting_array, verify_almost_uniform, verify_detecting, verify_system

EXIT_OK, EXIT_NA, EXIT_VERIFY, EXIT_IO = 0, 2, 3, 4

log = logging.getLogger("sperner")


class _Fail(Exception):
    def __init__(self, code: int, msg: str):
        super().__init__(msg)
        self.code = code


def _params(n: int, k: int) -> Params:
    try:
        return Params(n, k)
    except ValueError as exc:
        raise _Fail(EXIT_NA, str(exc)) from None


def _write(path, text: str):
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot write {path}: {exc.strerror}") from None


def cmd_bound(args) -> int:
    params = _params(args.n, args.k)
    cell = aggregate(params.k, params.n)[params.n]
    why = thm_applicable(params)
    ex = exact_known(params)
    record = {
        "n": params.n,
        "k": params.k,
        "nlb": nlb(params),
        "mms_floor": mms_floor(params),
        "thm_upper": thm_upper(params) if why is None else None,
        "lower": cell.lower.value,
        "lower_source": cell.lower.source,
        "upper": cell.upper.value,
        "upper_source": cell.upper.source,
        "exact": ex.value if ex is not None else None,
    }
    if args.json:
        print(json.dumps(record, indent=2))
        return EXIT_OK
    for key, value in record.items():
        if key == "thm_upper" and value is None:
            value = f"n/a ({why})"
        elif value is None:
            value = "unknown"
        print(f"{key:12} {value}")
    return EXIT_OK


def cmd_table(args) -> int:
    try:
        rows = table_rows(args.k_min, args.k_max, args.n_max)
    except ValueError as exc:
        raise _Fail(EXIT_NA, str(exc)) from None
    text = to_csv(TABLE_HEADER, rows)
    if args.csv:
        _write(args.csv, text)
        print(f"wrote {len(rows)} rows to {args.csv}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_figure(args) -> int:
    try:
        rows = figure_rows(args.k, args.n_max)
    except ValueError as exc:
        raise _Fail(EXIT_NA, str(exc)) from None
    text = to_csv(FIGURE_HEADER, rows)
    if args.csv:
        _write(args.csv, text)
        print(f"wrote {len(rows)} rows to {args.csv}")
    else:
        sys.stdout.write(text)
    if args.plot:
        from .plotting import plot_figure

        target = Path(args.plot) if args.plot != "auto" else None
        if target is None:
            if not args.csv:
                raise _Fail(EXIT_NA, "--plot without a path needs --csv")
            target = Path(args.csv).with_suffix(".png")
        try:
            plot_figure(rows, args.k, target)
        except OSError as exc:
            raise _Fail(EXIT_IO, f"cannot write {target}: {exc.strerror}") from None
        print(f"wrote plot to {target}")
    return EXIT_OK


def _build(args):
    from . import construct as C

    params = _params(args.n, args.k)
    method = args.method
    if method in ("main", "alt"):
        if params.n % 2:
            raise NotApplicable("n even")
        admissible = C.main_admissible_us if method == "main" else C.alt_admissible_us
        size = C.main_construction_p if method == "main" else C.alt_construction_p
        u = args.u
        if u is None:
            us = admissible(params)
            if not us:
                size(params, 1)   # raises with the violated condition named
                raise NotApplicable(f"no admissible u for {method} at {params}")
            u = max(us, key=lambda v: (size(params, v), -v))
        plan = C.plan_main(params, u) if method == "main" else C.plan_alt(params, u)
        return C.realize(plan, args.seed)
    if method == "family3k6":
        if params.n != 3 * params.k - 6:
            raise NotApplicable("n = 3k - 6")
        return C.build_3k6(params.k, args.seed)
    if method == "product":
        if args.m is None:
            raise NotApplicable("--m is required for the product method")
        if not params.k <= args.m <= params.n - params.k:
            raise NotApplicable(f"k <= m <= n - k (got m={args.m})")
        left = C.build_direct(args.m, params.k, args.seed)
        right = C.build_direct(params.n - args.m, params.k, args.seed)
        return C.product_build(left, right)
    raise NotApplicable(f"unknown method {method}")


def cmd_construct(args) -> int:
    try:
        system = _build(args)
    except (NotApplicable, TripleHypothesisError) as exc:
        raise _Fail(EXIT_NA, f"{args.method} construction not applicable: {exc}") from None
    except RealizationError as exc:
        raise _Fail(EXIT_VERIFY, str(exc)) from None
    report = verify_system(system)
    if not report.ok:
        raise _Fail(EXIT_VERIFY, f"refusing to write an unverified system: {report.message}")
    uniform = verify_almost_uniform(system, Params(system.n, system.k))
    try:
        save_system(system, args.out)
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot write {args.out}: {exc.strerror}") from None
    print(f"partitions   {len(system)}")
    print(f"verified     {'pass' if report.ok else 'fail'}")
    print(f"almost uniform {'yes' if uniform else 'no'}")
    print(f"wrote        {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        system = load_system(args.path)
    except OSError as exc:
        raise _Fail(EXIT_IO, f"cannot read {args.path}: {exc.strerror}") from None
    except SystemFileError as exc:
        raise _Fail(EXIT_IO, str(exc)) from None
    report = verify_system(system)
    print(f"system       n={system.n} k={system.k} partitions={len(system)}")
    print(f"sperner      {'pass' if report.ok else 'fail: ' + report.message}")
    if not report.ok:
        print(f"witness      {report.witness} ({report.relation})")
    ok = report.ok
    if args.detecting:
        det = verify_detecting(to_detecting_array(system))
        print(f"detecting    {'pass' if det.ok else 'fail: ' + det.message}")
        ok = ok and det.ok
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_brute(args) -> int:
    from .construct.brute import brute_force_sp

    params = _params(args.n, args.k)
    try:
        res = brute_force_sp(params.n, params.k, cap=args.cap, symmetric=args.symmetric)
    except ValueError as exc:
        raise _Fail(EXIT_NA, str(exc)) from None
    print(f"SP({params.n},{params.k}) = {res.value}")
    print(f"vertices {res.vertices}, search nodes {res.nodes}")
    for part in res.witness.to_lists():
        print("  " + " | ".join(" ".join(map(str, cls)) for cls in part))
    if args.out:
        try:
            save_system(res.witness, args.out)
        except OSError as exc:
            raise _Fail(EXIT_IO, f"cannot write {args.out}: {exc.strerror}") from None
        print(f"wrote witness to {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sperner", description="Bounds and constructions for Sperner partition systems.")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="bounds on SP(n,k) for one pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--json", action="store_true", help="print a JSON record")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("table", help="bounds table as CSV")
    p.add_argument("--k-min", type=int, default=4)
    p.add_argument("--k-max", type=int, default=7)
    p.add_argument("--n-max", type=int, default=33)
    p.add_argument("--csv", help="output path (default: stdout)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("figure", help="best-known bounds for one k as CSV")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("--csv", help="output path (default: stdout)")
    p.add_argument("--plot", nargs="?", const="auto",
                   help="also render a PNG (default path: the CSV path with .png)")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("construct", help="build, verify and save a system")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=["main", "alt", "family3k6", "product"], required=True)
    p.add_argument("--u", type=int, help="construction parameter (default: the best admissible)")
    p.add_argument("--m", type=int, help="split point for the product method")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a system file")
    p.add_argument("path")
    p.add_argument("--detecting", action="store_true", help="also check the detecting-array form")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("brute", help="exact SP(n,k) by exhaustive search (tiny n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cap", type=int, default=9, help="largest n accepted")
    p.add_argument("--symmetric", action="store_true",
                   help="fix the first partition up to relabelling (faster)")
    p.add_argument("--out", help="write the witness system here")
    p.set_defaults(func=cmd_brute)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except _Fail as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
