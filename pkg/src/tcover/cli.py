"""Command line front end: tcover solve | exact | baseline | verify | gen | compare.

Exit codes: 0 ok, 1 invalid cover, 2 parse/parameter error, 3 internal
validation failure, 4 search guard exceeded, 5 candidate budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from fractions import Fraction

from .approx import approx_total_cover, greedy_domination_cover, matched_vertices_cover
from .approx import bad_vertex_assignment, total_cover_lower_bound
from .exact import SearchLimits, exact_total_cover
from .graph import (
    BudgetExceededError,
    Graph,
    GraphError,
    TooLargeError,
    element_cover_line,
    format_element,
    is_total_cover,
    isolated_vertices,
    parse_cover,
    parse_graph,
    serialize_cover,
    serialize_graph,
)
from .instances import (
    OddParameterError,
    ParameterOutOfRangeError,
    add_isolated,
    complete,
    cycle,
    gnp,
    hard_instance,
    path,
    star,
)
from .matching import maximum_matching

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_INTERNAL = 3
EXIT_TOO_LARGE = 4
EXIT_BUDGET = 5

CSV_HEADER = [
    "instance", "n", "edges", "m", "k", "t", "alg_size", "lower_bound",
    "exact_size", "baseline_size", "greedy_size", "ratio_vs_lb",
    "ratio_vs_exact", "error",
]


def format_ratio(value: Fraction) -> str:
    """Exact 4-decimal rendering of a non-negative rational (round half up)."""
    units, rem = divmod(value.numerator * 10000, value.denominator)
    if 2 * rem >= value.denominator:
        units += 1
    return f"{units // 10000}.{units % 10000:04d}"


def _read_graph(path_arg: str) -> Graph:
    with open(path_arg, "r", encoding="utf-8") as handle:
        return parse_graph(handle.read())


def cmd_solve(args) -> int:
    try:
        g = _read_graph(args.graph)
    except (OSError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        result = approx_total_cover(g)
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    ok, witness = is_total_cover(g, result.cover)
    if not ok:
        print(f"internal error: reported cover misses {format_element(g, witness)}", file=sys.stderr)
        return EXIT_INTERNAL
    print(
        f"size={len(result.cover)} m={result.matching_size} k={result.bad_vertex_count} "
        f"t={result.isolated_count} lb={result.lower_bound} "
        f"ratio={format_ratio(result.certified_ratio)}"
    )
    if args.trace:
        for step in result.trace:
            print(f"{step.step} {step.reason} {element_cover_line(g, step.element)}")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(serialize_cover(result.cover))
    return EXIT_OK


def cmd_exact(args) -> int:
    try:
        g = _read_graph(args.graph)
    except (OSError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    start_size = 0
    if args.start_at_lower_bound:
        matching = maximum_matching(g)
        bad = bad_vertex_assignment(g, matching)
        start_size = total_cover_lower_bound(
            matching.size, bad.count, len(isolated_vertices(g))
        )
    limits = SearchLimits(
        max_elements=args.max_elements,
        max_candidates=args.max_candidates,
        start_size=start_size,
    )
    try:
        result = exact_total_cover(g, limits)
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(f"size={result.size} candidates={result.candidates_checked}")
    out = serialize_cover(result.optimum)
    if out:
        sys.stdout.write(out)
    return EXIT_OK


def cmd_baseline(args) -> int:
    try:
        g = _read_graph(args.graph)
    except (OSError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if args.method == "matched-vertices":
        cover = matched_vertices_cover(g, matching_mode=args.matching)
    else:
        cover = greedy_domination_cover(g)
    ok, witness = is_total_cover(g, cover)
    if not ok:
        print(f"internal error: baseline cover misses {format_element(g, witness)}", file=sys.stderr)
        return EXIT_INTERNAL
    print(f"size={len(cover)} valid=true")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        g = _read_graph(args.graph)
        with open(args.cover, "r", encoding="utf-8") as handle:
            cover = parse_cover(handle.read(), g)
    except (OSError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    ok, witness = is_total_cover(g, cover)
    if ok:
        print(f"VALID size={len(cover)}")
        return EXIT_OK
    print(f"INVALID witness={format_element(g, witness)}")
    return EXIT_INVALID


def cmd_gen(args) -> int:
    try:
        if args.family == "figure1":
            g = hard_instance(args.n)
        elif args.family == "path":
            g = path(args.n)
        elif args.family == "cycle":
            g = cycle(args.n)
        elif args.family == "star":
            g = star(args.n)
        elif args.family == "complete":
            g = complete(args.n)
        else:  # gnp
            if args.p is None or args.seed is None:
                print("error: gnp requires --p and --seed", file=sys.stderr)
                return EXIT_PARSE
            g = gnp(args.n, args.p, args.seed)
        if args.isolated:
            g = add_isolated(g, args.isolated)
    except (OddParameterError, ParameterOutOfRangeError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    text = serialize_graph(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
        print(f"n={g.n} edges={len(g.edges)}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _compare_row(name: str, path_arg: str, exact_limit: int) -> dict[str, str]:
    row = {field: "" for field in CSV_HEADER}
    row["instance"] = name
    try:
        g = _read_graph(path_arg)
    except (OSError, GraphError) as exc:
        row["error"] = str(exc)
        return row
    try:
        result = approx_total_cover(g)
        alg_size = len(result.cover)
        row["n"] = str(g.n)
        row["edges"] = str(len(g.edges))
        row["m"] = str(result.matching_size)
        row["k"] = str(result.bad_vertex_count)
        row["t"] = str(result.isolated_count)
        row["alg_size"] = str(alg_size)
        row["lower_bound"] = str(result.lower_bound)
        row["baseline_size"] = str(len(matched_vertices_cover(g)))
        row["greedy_size"] = str(len(greedy_domination_cover(g)))
        row["ratio_vs_lb"] = format_ratio(result.certified_ratio)
        if g.n + len(g.edges) <= exact_limit:
            try:
                exact = exact_total_cover(g, SearchLimits(max_elements=exact_limit))
                row["exact_size"] = str(exact.size)
                ratio = Fraction(alg_size, exact.size) if exact.size else Fraction(1)
                row["ratio_vs_exact"] = format_ratio(ratio)
            except BudgetExceededError as exc:
                row["error"] = str(exc)
    except Exception as exc:  # keep the batch going, record the failure
        row["error"] = str(exc)
    return row


def cmd_compare(args) -> int:
    paths: list[str] = list(args.graphs)
    if args.dir:
        try:
            names = sorted(os.listdir(args.dir))
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
        paths += [os.path.join(args.dir, name) for name in names
                  if os.path.isfile(os.path.join(args.dir, name))]
    if not paths:
        print("error: no input instances (pass files or --dir)", file=sys.stderr)
        return EXIT_PARSE
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for path_arg in paths:
        row = _compare_row(os.path.basename(path_arg), path_arg, args.exact_limit)
        writer.writerow([row[field] for field in CSV_HEADER])
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as handle:
            handle.write(buffer.getvalue())
    else:
        sys.stdout.write(buffer.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tcover",
        description="Total covers of undirected graphs: approximation, exact search, baselines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="run the 2-approximation with its certificate")
    p_solve.add_argument("graph", help="graph file")
    p_solve.add_argument("--trace", action="store_true", help="print one line per cover element")
    p_solve.add_argument("--output", metavar="FILE", help="write the cover as a cover file")
    p_solve.set_defaults(func=cmd_solve)

    p_exact = sub.add_parser("exact", help="exhaustive minimum total cover")
    p_exact.add_argument("graph", help="graph file")
    p_exact.add_argument("--max-elements", type=int, default=32)
    p_exact.add_argument("--max-candidates", type=int, default=100_000_000)
    p_exact.add_argument("--start-at-lower-bound", action="store_true",
                         help="start the search at the certified lower bound")
    p_exact.set_defaults(func=cmd_exact)

    p_base = sub.add_parser("baseline", help="run a baseline cover construction")
    p_base.add_argument("graph", help="graph file")
    p_base.add_argument("--method", required=True,
                        choices=["matched-vertices", "greedy-domination"])
    p_base.add_argument("--matching", choices=["maximal", "maximum"], default="maximum")
    p_base.set_defaults(func=cmd_baseline)

    p_verify = sub.add_parser("verify", help="validate a cover file against a graph")
    p_verify.add_argument("graph", help="graph file")
    p_verify.add_argument("--cover", required=True, help="cover file")
    p_verify.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("gen", help="generate an instance")
    p_gen.add_argument("family", choices=["figure1", "path", "cycle", "star", "complete", "gnp"])
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--p", type=float)
    p_gen.add_argument("--seed", type=int)
    p_gen.add_argument("--isolated", type=int, default=0, metavar="T",
                       help="append T isolated vertices")
    p_gen.add_argument("-o", "--output", metavar="FILE")
    p_gen.set_defaults(func=cmd_gen)

    p_cmp = sub.add_parser("compare", help="batch comparison, CSV output")
    p_cmp.add_argument("graphs", nargs="*", help="graph files")
    p_cmp.add_argument("--dir", help="directory of graph files (sorted by name)")
    p_cmp.add_argument("--csv", metavar="FILE", help="write CSV here instead of stdout")
    p_cmp.add_argument("--exact-limit", type=int, default=32,
                       help="run the exact oracle when n + |E| fits this many elements")
    p_cmp.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
