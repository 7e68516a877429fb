"""Command-line front end.

Subcommands: decide a graph file (exit 0 = its bicircular matroid is the
frame matroid of a signed graph, 1 = it is not, 2 = error), mine the
forbidden-pattern set, verify a certificate against a graph, and run the
acceptance suite.  A bundled pattern file ships with the package so decide
works out of the box; regenerate it with `skein mine`.  SKEIN_THREADS caps
the process fan-out of the batch commands.
"""

from __future__ import annotations

import argparse
import sys
import time
from importlib import resources
from pathlib import Path

from . import miner, selfcheck
from .decider import (InternalInconsistency, decide, parse_certificate,
                      verify_certificate, write_certificate)
from .multigraph import ParseError, parse_graph


def _write_atomic(path, text):
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    tmp.replace(path)


def bundled_patterns():
    text = (resources.files("skein") / "data" / "obstructions.txt").read_text()
    return miner.parse_patterns(text, source="<bundled>")


def load_patterns(path):
    if path is None:
        return bundled_patterns()
    return miner.parse_patterns(Path(path).read_text(), source=str(path))


def cmd_decide(args):
    try:
        graph_text = Path(args.graph).read_text()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        g = parse_graph(graph_text, source=args.graph)
        patterns = load_patterns(args.patterns)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    cert_path = out_dir / (Path(args.graph).stem + ".cert.txt")
    t0 = time.time()
    try:
        result = decide(g, patterns, exhaustive_limit=args.exhaustive_limit)
    except InternalInconsistency as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.cond4 is not None:
            print(f"structural test: accepted={exc.cond4.accepted} "
                  f"rejection={exc.cond4.rejection}", file=sys.stderr)
        if exc.cond5 is not None:
            print(f"subdivision test: pattern {exc.cond5.pattern_index} "
                  f"embeds", file=sys.stderr)
        else:
            print("subdivision test: no pattern embeds", file=sys.stderr)
        return 2
    _write_atomic(cert_path, write_certificate(result.certificate))
    verdict = "signed-graphic" if result.signed_graphic else "not-signed-graphic"
    print(f"RESULT {args.graph} {verdict} {cert_path}")
    print(f"# decided in {time.time() - t0:.2f}s, verification "
          f"{result.verification}", file=sys.stderr)
    return 0 if result.signed_graphic else 1


def cmd_mine(args):
    if args.nmax < miner.DEFAULT_BOUNDS[0] or args.mmax < miner.DEFAULT_BOUNDS[1]:
        print(f"# incomplete bounds: ({args.nmax},{args.mmax}) below the "
              f"defaults {miner.DEFAULT_BOUNDS[:2]}, the mined set may be a "
              "proper subset", file=sys.stderr)
    t0 = time.time()
    s = miner.mine(args.nmax, args.mmax, args.pcap, args.lcap)
    report = miner.sanity(s)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    _write_atomic(out, miner.write_patterns(s.classes, bounds=s.bounds))
    sanity_path = out.with_suffix(out.suffix + ".sanity")
    _write_atomic(sanity_path, report.render())
    print(f"{len(s.classes)} pattern classes ({len(s.patterns)} graphs) "
          f"-> {out}")
    print(f"sanity report -> {sanity_path}")
    if not report.all_have_minor:
        print("warning: some member lacks a uniform minor", file=sys.stderr)
    print(f"# mined in {time.time() - t0:.1f}s", file=sys.stderr)
    return 0


def cmd_selfcheck(args):
    try:
        patterns = (miner.parse_patterns(Path(args.patterns).read_text(),
                                         source=args.patterns)
                    if args.patterns else None)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    ok, _ = selfcheck.run_all(bounds=(args.nmax, args.mmax, 5, 2),
                              patterns=patterns)
    print("selfcheck: " + ("all checks passed" if ok else "FAILURES above"))
    return 0 if ok else 1


def cmd_verify(args):
    try:
        g = parse_graph(Path(args.graph).read_text(), source=args.graph)
        cert = parse_certificate(Path(args.certificate).read_text(),
                                 source=args.certificate)
    except (OSError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    ok = verify_certificate(g, cert, exhaustive_limit=args.exhaustive_limit)
    print(f"VERIFY {args.graph} {args.certificate} "
          f"{'valid' if ok else 'INVALID'}")
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="skein",
        description="Decide whether the bicircular matroid of a multigraph "
                    "is the frame matroid of a signed graph; every verdict "
                    "ships with a machine-checked certificate.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="decide one graph file")
    p.add_argument("graph")
    p.add_argument("--patterns", default=None,
                   help="pattern file (default: bundled set)")
    p.add_argument("--out", default=".", help="certificate output directory")
    p.add_argument("--exhaustive-limit", type=int, default=18,
                   help="verify all subsets up to this many edges, sample beyond")
    p.set_defaults(fn=cmd_decide)

    p = sub.add_parser("mine", help="recompute the forbidden-pattern set")
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--mmax", type=int, default=8)
    p.add_argument("--pcap", type=int, default=5)
    p.add_argument("--lcap", type=int, default=2)
    p.add_argument("--out", required=True, help="output pattern file")
    p.set_defaults(fn=cmd_mine)

    p = sub.add_parser("selfcheck", help="run the acceptance suite")
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--mmax", type=int, default=7)
    p.add_argument("--patterns", default=None,
                   help="pattern file for the sweep (default: mine fresh)")
    p.set_defaults(fn=cmd_selfcheck)

    p = sub.add_parser("verify", help="verify a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.add_argument("--exhaustive-limit", type=int, default=18)
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
