"""Command line interface: one JSON object per line, or CSV.

Generators, positions, vertices and mutation directions are 1-based here.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import verify as V
from .cluster import DEFAULT_BUDGET, is_acyclic
from .coxeter import FAMILIES, CartanError, check_coxeter_word, root_system
from .errors import BudgetExceeded, InvariantViolation
from .geometry import PolygonModel

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

SUITES = ("golden", "three-way", "dvectors", "invariances", "subword", "duality", "counts", "geometry")


class UsageError(Exception):
    pass


def _parse_word(text: str | None, rank: int) -> tuple[int, ...]:
    if text is None:
        return tuple(range(rank))
    try:
        word = tuple(int(x) - 1 for x in text.split(","))
    except ValueError:
        raise UsageError(f"malformed Coxeter word {text!r}") from None
    if sorted(word) != list(range(rank)):
        raise UsageError(f"Coxeter word {text!r} must list each of 1..{rank} exactly once")
    return word


def _parse_seed(text: str, rank: int) -> tuple[int, ...]:
    if text == "initial":
        return ()
    if not text.startswith("path:"):
        raise UsageError(f"seed must be 'initial' or 'path:k1,k2,...', got {text!r}")
    body = text[len("path:"):]
    try:
        path = tuple(int(x) - 1 for x in body.split(",")) if body else ()
    except ValueError:
        raise UsageError(f"malformed mutation path {text!r}") from None
    if any(not 0 <= k < rank for k in path):
        raise UsageError(f"mutation directions must lie in 1..{rank}")
    return path


def _words(args) -> list[tuple[int, ...]]:
    if getattr(args, "all_coxeter", False):
        return list(itertools.permutations(range(args.rank)))
    return [_parse_word(args.coxeter, args.rank)]


def _roots(ap, j):
    return list(ap.theta(j))


# -- subcommands -------------------------------------------------------------


def cmd_count(args, word):
    with_algebra = not args.no_algebra
    yield V.count(args.type, args.rank, word, args.budget, with_algebra=with_algebra)


def cmd_clusters(args, word):
    ctx, ap = V.scenario(args.type, args.rank, word)
    ca = None if args.no_algebra else V.algebra(args.type, args.rank, word, args.budget)
    for k, cl in enumerate(ctx.enumerate_clusters()):
        record = {"index": k + 1, "positions": [p + 1 for p in cl], "roots": [_roots(ap, p) for p in cl]}
        if ca is not None:
            idx = ca.cluster_of_positions(cl)
            record["seed_path"] = [x + 1 for x in ca.graph.paths[idx]]
            record["acyclic"] = is_acyclic(ca.graph.matrices[idx])
        yield record


def cmd_variables(args, word):
    ctx, ap = V.scenario(args.type, args.rank, word)
    ca = V.algebra(args.type, args.rank, word, args.budget)
    for j in range(ctx.m):
        y = ca.variable(ca.psi(j))
        yield {"position": j + 1, "root": _roots(ap, j), "laurent": y.canonical_string(), "fraction": str(y)}


def cmd_dvectors(args, word):
    ctx, ap = V.scenario(args.type, args.rank, word)
    ca = V.algebra(args.type, args.rank, word, args.budget)
    path = _parse_seed(args.seed, args.rank)
    cl = ca.seed_at(path)
    graph = ca.graph.reseed(cl)
    for j in range(ctx.m):
        y = graph.variables[ca.psi(j)]
        yield {"position": j + 1, "root": _roots(ap, j), "dvector": list(graph.d_vector(ca.psi(j))),
               "laurent": y.canonical_string()}


def cmd_compat(args, word):
    ctx, ap = V.scenario(args.type, args.rank, word)
    table = ctx.compat_table()
    ca = None if args.no_algebra else V.algebra(args.type, args.rank, word, args.budget)
    variables = ca.compat_table() if ca is not None else None
    for i in range(ctx.m):
        for j in range(ctx.m):
            record = {"i": i + 1, "j": j + 1, "roots": [_roots(ap, i), _roots(ap, j)],
                      "positions_degree": table[i][j],
                      "roots_degree": ap.c_compat(ap.theta(i), ap.theta(j))}
            if variables is not None:
                record["variables_degree"] = variables[(ca.psi(i), ca.psi(j))]
            yield record


def cmd_rotate(args, word):
    ctx, ap = V.scenario(args.type, args.rank, word)
    ca = None if args.no_algebra else V.algebra(args.type, args.rank, word, args.budget)
    tau = ctx.rotation()
    for j in range(ctx.m):
        record = {"position": j + 1, "image": tau[j] + 1, "root": _roots(ap, j),
                  "root_image": list(ap.tau(ap.theta(j)))}
        if ca is not None:
            record["laurent"] = ca.variable(ca.psi(j)).canonical_string()
            record["laurent_image"] = ca.variable(ca.rotation[ca.psi(j)]).canonical_string()
        yield record


def cmd_geometry(args, word):
    if args.type not in ("A", "B", "C"):
        raise UsageError("polygon models exist for types A, B and C only")
    model = PolygonModel(args.type, args.rank)
    ctx, ap = V.scenario(args.type, args.rank, word)
    ca = V.algebra(args.type, args.rank, word, args.budget)
    chi = V.match_geometry(model, ca)
    if chi is None:
        raise InvariantViolation("no crossing-preserving bijection between diagonals and variables")
    for d in model.diagonals:
        j = ca.psi_inverse[chi[d]]
        yield {"diagonal": str(d), "long": d.long, "position": j + 1, "root": _roots(ap, j)}


def _suite_reports(args, word):
    f, n = args.type, args.rank
    chosen = args.suite or ["all"]
    wanted = set(SUITES) if "all" in chosen else set(chosen)
    if "all" in chosen:
        wanted.discard("subword")
        if f not in "ABC":
            wanted.discard("geometry")
        if (f, n, word) != ("A", 2, (0, 1)):
            wanted.discard("golden")
        if word != tuple(range(n)):
            # these do not depend on the Coxeter word
            wanted -= {"counts", "geometry"}
    if "golden" in wanted:
        if (f, n, word) != ("A", 2, (0, 1)):
            raise UsageError("the golden suite is defined for --type A --rank 2 --coxeter 1,2")
        yield V.verify_a2_golden()
    if "three-way" in wanted:
        yield V.verify_three_way_agreement(f, n, word, args.budget)
    if "dvectors" in wanted:
        yield V.verify_dvector_descriptions(f, n, word, budget=args.budget)
    if "invariances" in wanted:
        yield V.verify_invariances(f, n, word, args.budget)
    elif "subword" in wanted:
        yield V.verify_subword_layer(f, n, word)
    if "duality" in wanted:
        yield V.verify_duality(f, n, word)
    if "counts" in wanted:
        yield V.verify_counts(f, n, args.budget)
    if "geometry" in wanted:
        if f not in "ABC":
            raise UsageError("the geometry suite needs type A, B or C")
        yield V.verify_geometry(f, n, args.budget)


def cmd_verify(args, word):
    for report in _suite_reports(args, word):
        if args.summary:
            yield report.summary()
        else:
            yield from report.records()


COMMANDS = {
    "count": (cmd_count, "numbers of clusters, variables and (for A/B/C) geometric objects"),
    "clusters": (cmd_clusters, "all c-clusters as positions and roots"),
    "variables": (cmd_variables, "cluster variables as Laurent polynomials in the initial seed"),
    "dvectors": (cmd_dvectors, "d-vectors of all variables with respect to a seed"),
    "compat": (cmd_compat, "compatibility degrees for every pair of positions"),
    "rotate": (cmd_rotate, "the rotation on positions, roots and variables"),
    "geometry": (cmd_geometry, "diagonals of the polygon model matched to positions"),
    "verify": (cmd_verify, "run verification suites; exit 1 if any check fails"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, choices=FAMILIES)
    common.add_argument("--rank", required=True, type=int)
    common.add_argument("--coxeter", help="comma-separated generator order, default 1,2,...,n")
    common.add_argument("--seed", default="initial", help="'initial' or 'path:k1,k2,...'")
    common.add_argument("--format", default="json", choices=("json", "csv"))
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="cap on exchange-graph seeds")
    common.add_argument("--threads", type=int, default=1, help="scenarios run concurrently")
    common.add_argument("--all-coxeter", action="store_true", help="repeat for every generator order")
    common.add_argument("--no-algebra", action="store_true", help="skip cluster variables where optional")

    parser = argparse.ArgumentParser(prog="dvectors", description="Denominator vectors in finite type cluster algebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=text, description=text)
        if name == "verify":
            p.add_argument("--suite", action="append", choices=SUITES + ("all",),
                           help="repeatable; default all suites that apply")
            p.add_argument("--summary", action="store_true", help="one record per suite instead of per check")
    return parser


def _emit(records, fmt: str, out):
    if fmt == "json":
        for r in records:
            out.write(json.dumps(r) + "\n")
        return
    records = list(records)
    fields = list(dict.fromkeys(k for r in records for k in r))
    writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow({k: json.dumps(v) if isinstance(v, (list, dict, tuple)) else v for k, v in r.items()})


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    handler = COMMANDS[args.command][0]
    try:
        root_system(args.type, args.rank)
        words = _words(args)
        for w in words:
            check_coxeter_word(root_system(args.type, args.rank), w)
        _parse_seed(args.seed, args.rank)

        def run(w):
            return list(handler(args, w))

        with ThreadPoolExecutor(max_workers=max(1, args.threads)) as pool:
            batches = list(pool.map(run, words))
    except (UsageError, CartanError, ValueError) as exc:
        print(f"dvectors: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"dvectors: budget exceeded: {exc} (raise --budget or use --no-algebra / --suite subword)",
              file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"dvectors: invariant violated: {exc}", file=sys.stderr)
        return EXIT_FAILED
    records = [r for batch in batches for r in batch]
    _emit(records, args.format, out)
    if args.command == "verify" and not all(r["passed"] for r in records):
        return EXIT_FAILED
    return EXIT_OK


def main_exit():
    sys.exit(main())
