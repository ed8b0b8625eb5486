"""Command-line interface: arborcount.

Subcommands:
  count      exact count of a family at one size (series engine)
  series     the counting sequence as a b-file, JSON, or CSV
  enumerate  explicit canonical trees for small sizes (brute-force engine)
  verify     cross-check the series engine against the brute-force engine
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Tuple

from . import oracle, trees
from .multiset import multisets, pairs
from .series import PowerSeries
from .trees import TreeFamily

DEFAULT_CEILING = 5000

ENUM_FAMILIES = ("rooted", "unrooted", "stree", "hit")


@dataclass
class SequenceReport:
    """A counting sequence for one family, ready for formatting."""

    family: TreeFamily
    entries: List[Tuple[int, int]]
    generator: str  # "series" or "oracle"

    def to_bfile(self) -> str:
        return "".join("%d %d\n" % (n, c) for n, c in self.entries)

    def to_json(self) -> str:
        return json.dumps(
            {"family": self.family.value, "counts": [c for _, c in self.entries]}
        )

    def to_csv(self) -> str:
        return "n,count\n" + "".join("%d,%d\n" % (n, c) for n, c in self.entries)


def parse_bfile(text: str, family: TreeFamily, generator: str = "series") -> SequenceReport:
    entries = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        n, c = line.split()
        entries.append((int(n), int(c)))
    return SequenceReport(family, entries, generator)


def series_report(family: TreeFamily, terms: int) -> SequenceReport:
    coeffs = trees.series_for(family, terms)
    return SequenceReport(family, [(n, coeffs[n]) for n in range(1, terms + 1)], "series")


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arborcount",
        description="Exact counting and enumeration of unlabeled trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    families = [f.value for f in TreeFamily]

    p_count = sub.add_parser("count", help="count trees of one size")
    p_count.add_argument("family", choices=families)
    p_count.add_argument("--n", type=_positive_int, required=True)
    p_count.add_argument(
        "--ceiling",
        type=_positive_int,
        default=DEFAULT_CEILING,
        help="largest accepted n (time grows quadratically)",
    )

    p_series = sub.add_parser("series", help="print the counting sequence")
    p_series.add_argument("family", choices=families)
    p_series.add_argument("--terms", type=_positive_int, required=True)
    p_series.add_argument("--format", choices=("bfile", "json", "csv"), default="bfile")
    p_series.add_argument("--ceiling", type=_positive_int, default=DEFAULT_CEILING)

    p_enum = sub.add_parser("enumerate", help="list the trees themselves")
    p_enum.add_argument("family", choices=ENUM_FAMILIES)
    p_enum.add_argument("--n", type=_positive_int, required=True)
    p_enum.add_argument("--format", choices=("text", "dot"), default="text")
    p_enum.add_argument(
        "--cap",
        type=_positive_int,
        default=oracle.DEFAULT_CAP,
        help="enumeration size cap",
    )

    p_verify = sub.add_parser("verify", help="series engine vs brute force")
    p_verify.add_argument("--max-n", type=_positive_int, default=10)
    p_verify.add_argument("--cap", type=_positive_int, default=oracle.DEFAULT_CAP)

    return parser


def cmd_count(args, out) -> int:
    if args.n > args.ceiling:
        print(
            "n=%d exceeds the ceiling %d (raise it with --ceiling)"
            % (args.n, args.ceiling),
            file=sys.stderr,
        )
        return 2
    family = TreeFamily(args.family)
    print(trees.series_for(family, args.n)[args.n], file=out)
    return 0


def cmd_series(args, out) -> int:
    if args.terms > args.ceiling:
        print(
            "terms=%d exceeds the ceiling %d (raise it with --ceiling)"
            % (args.terms, args.ceiling),
            file=sys.stderr,
        )
        return 2
    report = series_report(TreeFamily(args.family), args.terms)
    if args.format == "bfile":
        out.write(report.to_bfile())
    elif args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        out.write(report.to_csv())
    return 0


def _enumerate_lines(family: TreeFamily, n: int, cap: int):
    if family in (TreeFamily.ROOTED, TreeFamily.STREE):
        items = oracle.gen_rooted(n, cap)
        if family is TreeFamily.STREE:
            items = [t for t in items if oracle._is_stree(t)]
        return sorted(t.encode() for t in items), [t.to_adjacency() for t in items]
    forms = oracle.gen_free(n, cap)
    if family is TreeFamily.HIT:
        forms = oracle.filter_hit(forms)
    return sorted(f.encode() for f in forms), [f.to_adjacency() for f in forms]


def _dot_graph(name: str, adj) -> str:
    lines = ["graph %s {" % name]
    for v in sorted(adj):
        lines.append("  v%d;" % v)
    for v in sorted(adj):
        for u in adj[v]:
            if v < u:
                lines.append("  v%d -- v%d;" % (v, u))
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_enumerate(args, out) -> int:
    family = TreeFamily(args.family)
    try:
        lines, adjacencies = _enumerate_lines(family, args.n, args.cap)
    except oracle.CapExceeded as exc:
        print(str(exc), file=sys.stderr)
        return 2
    if args.format == "text":
        for line in lines:
            out.write(line + "\n")
    else:
        for i, adj in enumerate(adjacencies):
            out.write(_dot_graph("t%d" % i, adj))
    return 0


def cmd_verify(args, out) -> int:
    max_n = args.max_n
    if max_n > args.cap:
        print(
            "max-n=%d exceeds the enumeration cap %d (raise it with --cap)"
            % (max_n, args.cap),
            file=sys.stderr,
        )
        return 2
    ok = True
    out.write("family                    n  series  oracle\n")
    for family in TreeFamily:
        coeffs = trees.series_for(family, max_n)
        for n in range(1, max_n + 1):
            expected = oracle.count_family(family, n, args.cap)
            got = coeffs[n]
            line = "%-24s %3d %7d %7d" % (family.value, n, got, expected)
            if got != expected:
                ok = False
                line += "  FAIL"
            out.write(line + "\n")

    for name, holds in _identity_checks(max_n):
        out.write("identity: %-40s %s\n" % (name, "ok" if holds else "FAIL"))
        ok = ok and holds

    out.write("verify: %s\n" % ("PASS" if ok else "FAIL"))
    return 0 if ok else 1


def _identity_checks(order: int):
    r = trees.rooted_series(order)
    s = trees.stree_series(order)
    u = trees.unrooted_series(order)
    x = PowerSeries.x(order)
    one_plus_x = PowerSeries.from_coeffs([1, 1], order)

    hit_combined = (
        trees.hit_vertex_rooted_series(order)
        + trees.hit_edge_rooted_series(order)
        - trees.hit_vertex_edge_rooted_series(order)
    )
    return [
        ("unrooted = rooted + pairs(rooted) - rooted^2", r + pairs(r) - r * r == u),
        ("hit = vertex + edge - vertex_edge rootings", trees.hit_series(order) == hit_combined),
        ("(1+x)*stree = x*multisets(stree)", one_plus_x * s == x * multisets(s)),
    ]


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "count": cmd_count,
        "series": cmd_series,
        "enumerate": cmd_enumerate,
        "verify": cmd_verify,
    }
    return handlers[args.command](args, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
