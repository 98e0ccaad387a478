"""Command-line front end.

Exit codes: 0 on success, 1 on usage or I/O errors, 2 when `verify` rejects
a cover.  Data goes to standard output, diagnostics to standard error.
"""

from __future__ import annotations

import argparse
import sys

from .bounds import vertex_sum_bound
from .fileio import (
    parse_cover_file,
    parse_graph_file,
    write_cover_file,
    write_graph_file,
)
from .plane import plane_cover
from .primes import pi_window, prime_window
from .report import format_ratio_table, ratio_table
from .solver import max_cover_over_graphs, max_cover_sum
from .verify import verify


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; 2 is taken by "verification
    # failed", so usage problems are remapped to 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def _fmt_edges(edges) -> str:
    if not edges:
        return "none"
    return ", ".join(f"({u},{v})" for u, v in edges)


def _cmd_bound(args) -> int:
    b = vertex_sum_bound(args.n)
    print(f"n: {b.n}")
    print(f"mean_cap: {b.mean_cap:.6f}")
    print(f"total: {b.total:.6f}")
    return 0


def _cmd_construct(args) -> int:
    g, cover = plane_cover(args.p)
    if args.graph_out:
        with open(args.graph_out, "w") as fh:
            fh.write(write_graph_file(g))
    if args.cover_out:
        with open(args.cover_out, "w") as fh:
            fh.write(write_cover_file(cover))
    else:
        sys.stdout.write(write_cover_file(cover))
    return 0


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def _cmd_verify(args) -> int:
    g = parse_graph_file(_read(args.graph))
    cover = parse_cover_file(_read(args.cover), n=g.n)
    report = verify(g, cover)
    print(f"cliques_valid: {_fmt(report.cliques_valid)}")
    print(f"edge_disjoint: {_fmt(report.edge_disjoint)}")
    print(f"covers_all_edges: {_fmt(report.covers_all_edges)}")
    print(f"count_matches: {_fmt(report.count_matches)}")
    print(f"vertex_sum: {report.vertex_sum}")
    print(f"bound_total: {report.bound_total:.6f}")
    print(f"within_bound: {_fmt(report.within_bound)}")
    print(f"multiply_covered: {_fmt_edges(report.multiply_covered)}")
    print(f"uncovered: {_fmt_edges(report.uncovered)}")
    return 0 if report.all_valid else 2


def _cmd_solve(args) -> int:
    g = parse_graph_file(_read(args.graph))
    k = g.n if args.cliques is None else args.cliques
    res = max_cover_sum(g, k)
    print(f"feasible: {_fmt(res.feasible)}")
    if res.feasible:
        print(f"best_sum: {res.best_sum}")
        sys.stdout.write(write_cover_file(res.witness))
    return 0


def _cmd_texact(args) -> int:
    best_sum, g, cover = max_cover_over_graphs(args.n)
    print(f"best_sum: {best_sum}")
    print("# witness graph")
    sys.stdout.write(write_graph_file(g))
    print("# witness cover")
    sys.stdout.write(write_cover_file(cover))
    return 0


def _cmd_prime_window(args) -> int:
    r = prime_window(args.n, args.epsilon)
    print(f"found: {_fmt(r.found)}")
    print(f"p: {_fmt(r.p)}")
    print(f"plane_n: {_fmt(r.plane_n)}")
    print(f"lo: {r.lo:.6f}")
    print(f"hi: {r.hi}")
    return 0


def _cmd_lemma1(args) -> int:
    count = pi_window(args.n, args.epsilon)
    print(f"n: {args.n}")
    print(f"epsilon: {args.epsilon:.6f}")
    print(f"count: {count}")
    return 0


def _cmd_ratio_table(args) -> int:
    rows = ratio_table(args.start, args.stop, args.step)
    sys.stdout.write(format_ratio_table(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cliquecover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="analytic vertex-sum cap for n cliques")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("construct", help="plane cover of the complete graph")
    p.add_argument("p", type=int)
    p.add_argument("--graph-out", metavar="PATH")
    p.add_argument("--cover-out", metavar="PATH")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="check a cover file against a graph file")
    p.add_argument("--graph", required=True, metavar="PATH")
    p.add_argument("--cover", required=True, metavar="PATH")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("solve", help="exact best cover of a small graph")
    p.add_argument("--graph", required=True, metavar="PATH")
    p.add_argument("--cliques", type=int, metavar="K")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("texact", help="exact optimum over all graphs on N vertices")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_texact)

    p = sub.add_parser("prime-window", help="largest plane inside (N(1-eps), N]")
    p.add_argument("n", type=int)
    p.add_argument("--epsilon", type=float, required=True)
    p.set_defaults(func=_cmd_prime_window)

    p = sub.add_parser("lemma1", help="count primes in (N(1-eps), N)")
    p.add_argument("n", type=int)
    p.add_argument("--epsilon", type=float, required=True)
    p.set_defaults(func=_cmd_lemma1)

    p = sub.add_parser("ratio-table", help="constructive/analytic bound ratios")
    p.add_argument("--from", dest="start", type=int, required=True, metavar="A")
    p.add_argument("--to", dest="stop", type=int, required=True, metavar="B")
    p.add_argument("--step", type=int, default=1, metavar="S")
    p.set_defaults(func=_cmd_ratio_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(str(exc), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
