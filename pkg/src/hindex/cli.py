"""Command-line interface: ``hindex compute|extremal|verify|gen|enumerate|recheck``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Optional, TextIO

from . import kernels
from .bounds import bound_2m_over_n, bound_cauchy_schwarz, tree_bound_reports
from .constructions import SpiderSpec, complete_bipartite, path, spider, star
from .enumeration import all_connected_labeled_graphs, all_free_trees, random_connected_sample
from .extremal import extremal_records
from .graph import Graph, Graph6Error, GraphError, add_edge, canonical_form, is_connected, is_tree, is_triangle_free, parse_graph6, to_graph6
from .invariants import decimal_rendering, first_zagreb, format_rational, harmonic_index, randic_index
from .verify import CLAIMS, Budget, Counterexample, recheck, run_suite, suite_report, write_report


class InputError(Exception):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def read_graph6(fh: TextIO) -> Iterator[tuple[int, Graph]]:
    for lineno, raw in enumerate(fh, 1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except (Graph6Error, GraphError) as exc:
            raise InputError(lineno, str(exc)) from exc


def read_edge_lists(fh: TextIO) -> Iterator[tuple[int, Graph]]:
    """Blocks separated by blank lines: a vertex count, then one ``u v`` pair per line.

    ``#`` starts a comment.
    """
    block: list[tuple[int, str]] = []

    def finish():
        first_line, header = block[0]
        if not header.isdigit():
            raise InputError(first_line, f"expected a vertex count, got {header!r}")
        edges = []
        for lineno, text in block[1:]:
            parts = text.split()
            if len(parts) != 2 or not all(x.isdigit() for x in parts):
                raise InputError(lineno, f"expected 'u v', got {text!r}")
            edges.append((lineno, int(parts[0]), int(parts[1])))
        g = Graph(int(header))
        for lineno, u, v in edges:
            try:
                g = add_edge(g, u, v)
            except GraphError as exc:
                raise InputError(lineno, str(exc)) from exc
        return first_line, g

    for lineno, raw in enumerate(fh, 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            block.append((lineno, line))
        elif block:
            yield finish()
            block = []
    if block:
        yield finish()


def graph_report(g: Graph) -> dict:
    h = harmonic_index(g)
    out = {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "H": format_rational(h),
        "H_decimal": decimal_rendering(h),
        "R": float(f"{randic_index(g):.15g}"),
        "M1": first_zagreb(g),
        "connected": is_connected(g),
        "triangle_free": is_triangle_free(g),
    }
    bounds = []
    if g.n >= 1:
        bounds.append(bound_2m_over_n(g).to_json())
    if g.m >= 1:
        bounds.append(bound_cauchy_schwarz(g).to_json())
    if g.n >= 3 and is_tree(g):
        form = canonical_form(g)
        reports = tree_bound_reports(g, form == canonical_form(star(g.n)), form == canonical_form(path(g.n)))
        bounds.extend(r.to_json() for r in reports)
    out["bounds"] = bounds
    return out


def cmd_compute(args) -> int:
    fh = open(args.input) if args.input else sys.stdin
    reader = read_graph6 if args.format == "graph6" else read_edge_lists
    try:
        for lineno, g in reader(fh):
            rep = graph_report(g)
            rep["line"] = lineno
            print(json.dumps(rep))
    except InputError as exc:
        print(f"hindex compute: parse error at {exc}", file=sys.stderr)
        return 2
    finally:
        if args.input:
            fh.close()
    return 0


def cmd_extremal(args) -> int:
    try:
        records = extremal_records(args.n_max)
    except GraphError as exc:
        print(f"hindex extremal: {exc}", file=sys.stderr)
        return 2
    for r in records:
        print(f"n={r.n:<3d} {r.rank:<10s} H={format_rational(r.value):<10s} ({decimal_rendering(r.value)})  {' '.join(r.attaining_set)}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump([r.to_json() for r in records], fh, indent=2)
            fh.write("\n")
    return 0


def cmd_verify(args) -> int:
    budget = Budget(seed=args.seed, tree_n_max=args.n_max, random_samples=args.random_samples)
    ids = [c.strip() for c in args.claims.split(",")] if args.claims else None
    comparator = "inverted" if args.invert_checks else "exact"
    try:
        results = run_suite(ids, budget, comparator, jobs=args.jobs)
    except KeyError as exc:
        print(f"hindex verify: {exc.args[0]}", file=sys.stderr)
        return 2
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        line = f"{status} {r.claim_id:<18s} instances={r.instances:<8d} {r.elapsed_ms / 1000:8.2f}s"
        if r.counterexample:
            line += f"  counterexample={r.counterexample.graph6} {json.dumps(r.counterexample.context)}"
        print(line)
    report = suite_report(results, budget, comparator)
    if args.json:
        write_report(args.json, report)
    return 0 if report["passed"] else 1


def cmd_recheck(args) -> int:
    context = json.loads(args.context) if args.context else {}
    comparator = "inverted" if args.invert_checks else "exact"
    try:
        ok = recheck(args.claim, Counterexample(args.graph6, context), comparator)
    except (Graph6Error, GraphError, KeyError) as exc:
        print(f"hindex recheck: {exc}", file=sys.stderr)
        return 2
    print("holds" if ok else "fails")
    return 0 if ok else 1


FAMILIES = {
    "path": (1, lambda n: path(n)),
    "star": (1, lambda n: star(n)),
    "complete_bipartite": (2, lambda a, b: complete_bipartite(a, b)),
    "spider": (3, lambda a, b, c: spider(SpiderSpec(a, b, c))),
}


def cmd_gen(args) -> int:
    arity, build = FAMILIES[args.family]
    if len(args.params) != arity:
        print(f"hindex gen: {args.family} takes {arity} integer parameter(s)", file=sys.stderr)
        return 2
    try:
        g = build(*args.params)
    except GraphError as exc:
        print(f"hindex gen: {exc}", file=sys.stderr)
        return 2
    print(to_graph6(g))
    return 0


def cmd_enumerate(args) -> int:
    try:
        if args.kind == "trees":
            stream = all_free_trees(args.n)
        elif args.kind == "connected":
            stream = all_connected_labeled_graphs(args.n)
        else:
            stream = random_connected_sample(args.count, args.n, args.n_upper or args.n, args.seed)
        out = open(args.out, "w") if args.out else sys.stdout
        try:
            for g in stream:
                out.write(to_graph6(g) + "\n")
        finally:
            if args.out:
                out.close()
    except GraphError as exc:
        print(f"hindex enumerate: {exc}", file=sys.stderr)
        return 2
    return 0


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hindex", description=__doc__)
    parser.add_argument("--backend", choices=["compiled", "python"], help="kernel implementation (default: compiled if built)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="indices and bound reports for input graphs (JSON lines)")
    p.add_argument("--in", dest="input", metavar="FILE", help="input file (default stdin)")
    p.add_argument("--format", choices=["graph6", "edges"], default="graph6")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("extremal", help="min / max / second-max trees for n = 3..K")
    p.add_argument("--n-max", type=int, required=True, metavar="K")
    p.add_argument("--json", metavar="FILE")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("verify", help="run the claim suite; exit 0 iff every claim holds")
    p.add_argument("--claims", metavar="LIST", help=f"comma-separated subset of {', '.join(sorted(CLAIMS))}")
    p.add_argument("--seed", type=_u64, default=Budget.seed)
    p.add_argument("--n-max", type=int, default=Budget.tree_n_max, metavar="K", help="largest tree order")
    p.add_argument("--random-samples", type=int, default=Budget.random_samples, metavar="N")
    p.add_argument("--json", metavar="FILE")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--invert-checks", action="store_true", help="harness self-test: flip every inequality")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("recheck", help="re-run one claim's check on a counterexample")
    p.add_argument("claim", choices=sorted(CLAIMS))
    p.add_argument("graph6")
    p.add_argument("--context", metavar="JSON")
    p.add_argument("--invert-checks", action="store_true")
    p.set_defaults(func=cmd_recheck)

    p = sub.add_parser("gen", help="emit a family member as graph6")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", type=int, nargs="*")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enumerate", help="stream a test universe as graph6 lines")
    p.add_argument("kind", choices=["trees", "connected", "random"])
    p.add_argument("n", type=int)
    p.add_argument("--n-upper", type=int, help="random: largest order (default n)")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=_u64, default=Budget.seed)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.backend:
        kernels.use_backend(args.backend)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
