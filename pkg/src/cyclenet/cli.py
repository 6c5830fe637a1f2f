"""Command-line interface: ``cyclenet {analyze,generate,sir,importance,hypernet}``.

Exit codes: 0 ok, 1 usage error, 2 data error, 3 clique-dimension cap violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

from . import generators
from .complex import CapExceededError, build_complex
from .cycles import smallest_cycle_set, to_hypernetwork
from .dynamics import SirConfig, runs_by_source
from .graph import UNBOUNDED, Graph, GraphFormatError, connected_components, format_edge_list, \
    is_totally_homogeneous, read_edge_list
from .homology import betti_numbers, cavity_representatives, cycle_space_dimension
from .importance import INDEX_NAMES, attack_curve, kendall_tau, node_indexes, rank_nodes
from .spectral import DEFAULT_TOL, sync_metrics

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_CAP = 0, 1, 2, 3

DEFAULT_ATTACK_FRACTIONS = [i / 20 for i in range(21)]


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    raw = os.environ.get("CYCLENET_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"CYCLENET_SEED must be an integer, got {raw!r}") from None


def _load(path: str) -> Graph:
    try:
        g = read_edge_list(path)
    except GraphFormatError as exc:
        raise DataError(f"{path}: {exc}") from None
    except OSError as exc:
        raise DataError(f"{path}: {exc.strerror}") from None
    if g.n == 0:
        raise DataError(f"{path}: no edges")
    return g


def _jsonable(x):
    return "unbounded" if x is UNBOUNDED else x


def analyze(g: Graph, max_dim: int | None = 3, strict: bool = True, tol: float = DEFAULT_TOL) -> dict:
    """Full report as a JSON-ready dict; raises CapExceededError in strict mode."""
    c = build_complex(g, max_dim, strict=strict)
    hom = betti_numbers(c)
    cavities = {}
    for k in range(1, len(hom.betti)):
        if hom.betti[k]:
            cavities[str(k)] = [[list(s) for s in rep.labeled()] for rep in cavity_representatives(c, k)]
    flag, profile = is_totally_homogeneous(g)
    sync = sync_metrics(g, tol)
    cs = smallest_cycle_set(g)
    table = node_indexes(g, cs)
    return {
        "graph": {"nodes": g.n, "links": g.m, "components": len(connected_components(g))},
        "max_dim": c.max_dim,
        "truncated": c.truncated,
        "f_vector": hom.f_vector,
        "euler_characteristic": hom.euler_characteristic,
        "betti": hom.betti,
        "ranks": hom.ranks,
        "euler_poincare_ok": hom.euler_poincare_ok,
        "independent_cycles": cycle_space_dimension(g),
        "cavities": cavities,
        "totally_homogeneous": flag,
        "profile": None if profile is None else {
            "degree": profile.degree,
            "girth": _jsonable(profile.girth),
            "path_sum": _jsonable(profile.path_sum),
        },
        "sync": sync.to_dict(decimals=4),
        "indexes": {v: {name: table[name][v] for name in INDEX_NAMES} for v in g.nodes},
    }


def _alt_sum(values) -> str:
    parts = [str(values[0])] if values else ["0"]
    for k, x in enumerate(values[1:], start=1):
        parts.append(("- " if k % 2 else "+ ") + str(x))
    return " ".join(parts)


def render_text(r: dict) -> str:
    g = r["graph"]
    lines = [
        f"Network: {g['nodes']} nodes, {g['links']} links, {g['components']} component(s)",
        f"Cliques per dimension: {', '.join(map(str, r['f_vector']))}",
        f"Characteristic number: chi = {_alt_sum(r['f_vector'])} = {r['euler_characteristic']}"
        + (" (truncated)" if r["truncated"] else ""),
        "Betti numbers: " + ", ".join(f"beta{k} = {b}" for k, b in enumerate(r["betti"])),
        f"Linearly independent cycles: {g['links']} - {g['nodes']} + {g['components']} = {r['independent_cycles']}",
    ]
    if r["totally_homogeneous"]:
        p = r["profile"]
        lines.append(f"Totally homogeneous: yes (k={p['degree']}, g={p['girth']}, l={p['path_sum']})")
    else:
        lines.append("Totally homogeneous: no")
    s = r["sync"]
    lines.append(f"Spectral gap: {s['spectral_gap']:.4f}  Eigen-ratio: {s['eigen_ratio']:.4f}")
    for k, reps in r["cavities"].items():
        for rep in reps:
            lines.append(f"{k}-cavity: " + " ".join("(" + ",".join(x) + ")" for x in rep))
    lines.append("")
    lines.append("node\t" + "\t".join(INDEX_NAMES))
    for v, row in r["indexes"].items():
        lines.append(v + "\t" + "\t".join(f"{row[name]:g}" for name in INDEX_NAMES))
    return "\n".join(lines) + "\n"


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_analyze(args) -> int:
    g = _load(args.input)
    if args.max_dim == "auto":
        max_dim = None
    else:
        try:
            max_dim = int(args.max_dim)
        except ValueError:
            raise UsageError(f"--max-dim must be an integer or 'auto', got {args.max_dim!r}") from None
        if max_dim < 1:
            raise UsageError("--max-dim must be >= 1")
    report = analyze(g, max_dim, args.strict, args.tol)
    if args.format == "json":
        _write(json.dumps(report, indent=2) + "\n", None)
    else:
        _write(render_text(report), None)
    return EXIT_OK


def _generate(args) -> Graph:
    kind = args.kind
    seed = args.seed if args.seed is not None else _default_seed()
    need = {
        "complete": ["n"], "cycle": ["n"], "path": ["n"], "star": ["leaves"],
        "ring": ["n", "half_width"], "cocktail": ["m"], "petersen": [],
        "gnm": ["n", "m"], "ws": ["n", "half_width", "p"], "regular": ["n", "degree"],
    }[kind]
    missing = [k for k in need if getattr(args, k) is None]
    if missing:
        raise UsageError(f"{kind} needs " + ", ".join("--" + k.replace("_", "-") for k in missing))
    try:
        if kind == "complete":
            return generators.complete(args.n)
        if kind == "cycle":
            return generators.cycle(args.n)
        if kind == "path":
            return generators.path(args.n)
        if kind == "star":
            return generators.star(args.leaves)
        if kind == "ring":
            return generators.ring_lattice(args.n, args.half_width)
        if kind == "cocktail":
            return generators.cocktail_party(args.m)
        if kind == "petersen":
            return generators.petersen()
        if kind == "gnm":
            return generators.erdos_renyi_gnm(args.n, args.m, seed)
        if kind == "ws":
            return generators.ws_rewire(generators.ring_lattice(args.n, args.half_width), args.p, seed)
        return generators.random_regular(args.n, args.degree, seed, triangle_free=args.triangle_free)
    except (ValueError, RuntimeError) as exc:
        raise DataError(str(exc)) from None


def cmd_generate(args) -> int:
    _write(format_edge_list(_generate(args)), args.output)
    return EXIT_OK


def cmd_sir(args) -> int:
    g = _load(args.input)
    mode = {"cycle": "cycle_based", "cycle_based": "cycle_based", "conventional": "conventional"}[args.mode]
    seed = args.seed if args.seed is not None else _default_seed()
    try:
        cfg = SirConfig(beta=args.beta, recovery=args.recovery, max_steps=args.max_steps, seed=seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    runs = runs_by_source(g, mode, cfg, args.runs)
    per_source = {v: sum(c) / len(c) for v, c in runs.items()}
    grand = sum(per_source.values()) / len(per_source)
    out = {
        "mode": mode, "beta": cfg.beta, "recovery": cfg.recovery, "runs": args.runs, "seed": seed,
        "per_source": per_source, "grand_mean": grand,
    }
    if args.per_run_csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["source", "run", "recovered"])
        for v, counts in runs.items():
            for r, c in enumerate(counts):
                w.writerow([v, r, c])
        _write(buf.getvalue(), args.per_run_csv)
    _write(json.dumps(out, indent=2) + "\n", None)
    return EXIT_OK


def _finite(x: float) -> float | None:
    return None if math.isnan(x) else x


def _parse_indexes(raw: str) -> list[str]:
    names = [x.strip() for x in raw.split(",") if x.strip()]
    bad = [x for x in names if x not in INDEX_NAMES]
    if bad or not names:
        raise UsageError(f"unknown index name(s) {bad}; choose from {', '.join(INDEX_NAMES)}")
    return names


def cmd_importance(args) -> int:
    names = _parse_indexes(args.indexes)
    g = _load(args.input)
    seed = args.seed if args.seed is not None else _default_seed()
    cs = smallest_cycle_set(g)
    table = node_indexes(g, cs)
    result = {"indexes": {name: table[name] for name in names}}
    if args.attack is not None:
        try:
            fractions = DEFAULT_ATTACK_FRACTIONS if args.attack == "" else [float(x) for x in args.attack.split(",")]
            result["attack"] = {
                name: attack_curve(g, rank_nodes(g, name, seed, cs), fractions) for name in names
            }
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.tau:
        # all-tied columns have no defined tau; JSON gets null rather than NaN
        result["tau"] = {a: {b: _finite(kendall_tau(table[a], table[b])) for b in names} for a in names}

    if args.format == "json":
        text = json.dumps(result, indent=2) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["node", *names])
        for v in g.nodes:
            w.writerow([v, *(f"{table[name][v]:g}" for name in names)])
        if "attack" in result:
            buf.write("\n")
            w.writerow(["index", "fraction_removed", "giant_fraction"])
            for name, curve in result["attack"].items():
                for f, y in curve:
                    w.writerow([name, f"{f:g}", f"{y:g}"])
        if "tau" in result:
            buf.write("\n")
            w.writerow(["tau", *names])
            for a in names:
                w.writerow([a, *("nan" if result["tau"][a][b] is None else f"{result['tau'][a][b]:.6g}" for b in names)])
        text = buf.getvalue()
    _write(text, args.output)
    return EXIT_OK


def cmd_hypernet(args) -> int:
    g = _load(args.input)
    hn = to_hypernetwork(g)
    _write(json.dumps(hn.to_dict(), indent=2) + "\n", args.output)
    if args.incidence_csv:
        _write(hn.incidence_csv(), args.incidence_csv)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cyclenet", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="clique complex, homology, homogeneity and spectrum report")
    a.add_argument("input")
    a.add_argument("--max-dim", default="3", help="clique dimension cap, or 'auto' (default 3)")
    a.add_argument("--strict", action=argparse.BooleanOptionalAction, default=True,
                   help="refuse truncated alternating sums (default on)")
    a.add_argument("--format", choices=["json", "text"], default="json")
    a.add_argument("--tol", type=float, default=DEFAULT_TOL)
    a.set_defaults(func=cmd_analyze)

    gen = sub.add_parser("generate", help="write a benchmark graph as an edge list")
    gen.add_argument("kind", choices=["complete", "cycle", "path", "star", "ring", "cocktail", "petersen",
                                      "gnm", "ws", "regular"])
    gen.add_argument("--n", type=int)
    gen.add_argument("--m", type=int)
    gen.add_argument("--half-width", type=int)
    gen.add_argument("--leaves", type=int)
    gen.add_argument("--degree", type=int)
    gen.add_argument("--p", type=float)
    gen.add_argument("--triangle-free", action="store_true")
    gen.add_argument("--seed", type=int)
    gen.add_argument("-o", "--output")
    gen.set_defaults(func=cmd_generate)

    s = sub.add_parser("sir", help="SIR spreading averaged over every source node")
    s.add_argument("input")
    s.add_argument("--mode", choices=["conventional", "cycle", "cycle_based"], default="cycle")
    s.add_argument("--beta", type=float, default=0.06)
    s.add_argument("--recovery", type=float, default=1.0)
    s.add_argument("--runs", type=int, default=100)
    s.add_argument("--max-steps", type=int, default=10_000)
    s.add_argument("--seed", type=int)
    s.add_argument("--per-run-csv")
    s.set_defaults(func=cmd_sir)

    imp = sub.add_parser("importance", help="node importance indexes, attack curves, Kendall tau")
    imp.add_argument("input")
    imp.add_argument("--indexes", default=",".join(INDEX_NAMES))
    imp.add_argument("--attack", nargs="?", const="", default=None,
                     help="attack curves; optional comma-separated removal fractions")
    imp.add_argument("--tau", action="store_true")
    imp.add_argument("--seed", type=int)
    imp.add_argument("--format", choices=["csv", "json"], default="csv")
    imp.add_argument("-o", "--output")
    imp.set_defaults(func=cmd_importance)

    h = sub.add_parser("hypernet", help="convert smallest basic cycles to hyperedges")
    h.add_argument("input")
    h.add_argument("-o", "--output")
    h.add_argument("--incidence-csv")
    h.set_defaults(func=cmd_hypernet)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "runs", 1) < 1:
            raise UsageError("--runs must be >= 1")
        return args.func(args)
    except UsageError as exc:
        print(f"cyclenet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"cyclenet: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except CapExceededError as exc:
        print(f"cyclenet: error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
