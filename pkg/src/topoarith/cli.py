"""Command-line front end: ``topoarith render|verify|embed|probe``.

Exit status is 0 when every record passes, 1 when a verification record
fails and 2 on a usage error.  Probe records never change the status.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence, TextIO

from .embedding import BackAndForthState, embedding_table
from .errors import TopoArithError
from .orders import OrderKind
from .render import FORMATS, RenderSpec, render_order
from .verify import CLAIMS, SUITES, any_failed, dumps, run_probe, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def count(text: str) -> int:
    """A non-negative count, written ``4096``, ``2^12`` or ``2**12``."""
    m = re.fullmatch(r"\s*(\d+)\s*(?:(?:\^|\*\*)\s*(\d+))?\s*", text)
    if not m:
        raise argparse.ArgumentTypeError(f"not a count: {text!r}")
    base = int(m.group(1))
    if m.group(2) is None:
        return base
    exp = int(m.group(2))
    if exp > 64:
        raise argparse.ArgumentTypeError(f"exponent too large: {text!r}")
    return base**exp


def _order(text: str) -> OrderKind:
    try:
        return OrderKind(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown order {text!r}; expected fd, variant or signed") from None


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="topoarith", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("render", help="draw an order tree")
    r.add_argument("--order", type=_order, default=OrderKind.FINAL_DIGITS, help="fd, variant or signed")
    r.add_argument("--depth", type=count, default=5)
    r.add_argument("--format", choices=FORMATS, default="text")
    r.add_argument("--out", help="write here instead of stdout")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=["all", *SUITES], default="all")
    v.add_argument("--max", type=count, default=1 << 12, help="truncation bound, e.g. 4096 or 2^12")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out", help="write records here instead of stdout")
    v.add_argument("--timings", action="store_true", help="fill in durations (breaks byte-identical output)")

    e = sub.add_parser("embed", help="run the back-and-forth construction")
    e.add_argument("--steps", type=count, default=20)
    e.add_argument("--table", action="store_true", help="rows sorted by n instead of the step log")
    e.add_argument("--out")

    pr = sub.add_parser("probe", help="gather evidence on an open claim")
    pr.add_argument("--claim", choices=CLAIMS, required=True)
    pr.add_argument("--bound", type=count, default=8)
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("--out")
    pr.add_argument("--timings", action="store_true")
    return p


def _write(text: str, path: Optional[str], stdout: TextIO) -> None:
    if path is None:
        stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _embed_lines(state: BackAndForthState, table: bool) -> str:
    if table:
        rows = embedding_table(state)
    else:
        rows = [
            {"step": t, "direction": d, "n": n, "e": str(q)} for t, d, n, q in state.log
        ]
    return "".join(json.dumps(row, separators=(",", ":")) + "\n" for row in rows)


def main(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse has already printed the message
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "render":
            _write(render_order(RenderSpec(args.order, args.depth, args.format)), args.out, stdout)
            return EXIT_OK
        if args.command == "verify":
            records = run_suite(args.suite, args.max, args.seed, timings=args.timings)
            _write(dumps(records), args.out, stdout)
            return EXIT_FAIL if any_failed(records) else EXIT_OK
        if args.command == "embed":
            state = BackAndForthState(budget=None).run(args.steps)
            _write(_embed_lines(state, args.table), args.out, stdout)
            return EXIT_OK
        if args.command == "probe":
            if args.bound > 16:
                # the order-topology probe sorts 2**bound numbers
                parser.error("probe bounds above 16 are not supported")
            _write(dumps(run_probe(args.claim, args.bound, args.seed, timings=args.timings)), args.out, stdout)
            return EXIT_OK
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    except (TopoArithError, OSError) as exc:
        print(f"topoarith: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
