"""Batch command line front end.

Subcommands: solve, detect, classify, generate, bench. Structured output
(`--format structured`) is a single JSON document with stable key order and
no wall-clock fields, so identical invocations produce identical bytes.
Exit codes: 0 for yes/optimum (and successful non-solve commands), 1 for
"no", 2 for usage, format, and resource errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import generate as gen
from .classify import cascade_status, colored_classes, recognize_t
from .errors import EcdelError
from .graph import load_graph, save_graph, structural_stats
from .patterns import (
    DEFAULT_OCCURRENCE_CAP,
    PatternSpec,
    enumerate_occurrences,
    find_one,
    format_occurrence,
)
from .solve import (
    ALGORITHMS,
    ALGO_AUTO,
    DEFAULT_BRANCH_NODE_BOUND,
    DEFAULT_BRUTE_EDGE_BOUND,
    DEFAULT_CND_BUNDLE_BOUND,
    NO,
    SolveRequest,
    SolverCaps,
    run_solve,
)

EXIT_OK = 0
EXIT_NO = 1
EXIT_ERROR = 2


def _add_spec_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--pattern", choices=("path", "cycle"), required=required)
    p.add_argument("--len", dest="length", type=int, required=required)
    p.add_argument("--colors", type=int, required=required)
    p.add_argument("--mode", choices=("induced", "subgraph"), default="induced")


def _spec_from(args) -> PatternSpec:
    return PatternSpec(args.pattern, args.length, args.colors, args.mode == "induced")


def _emit(doc: dict, fmt: str, human_lines: list[str]) -> None:
    if fmt == "structured":
        print(json.dumps(doc, indent=2))
    else:
        for line in human_lines:
            print(line)


def _solution_doc(solution) -> list[list[int]]:
    return [[u + 1, v + 1] for u, v in sorted(solution)]


def _cmd_solve(args) -> int:
    g = load_graph(args.input)
    spec = _spec_from(args)
    caps = SolverCaps(
        max_brute_edges=args.max_brute_edges,
        max_cnd_bundles=args.max_cnd_bundles,
        max_branch_nodes=args.max_branch_nodes,
        conflict_hook=args.conflict_hook,
    )
    res = run_solve(SolveRequest(g, spec, args.k, args.algo), caps)
    doc = {
        "command": "solve",
        "pattern": spec.kind,
        "len": spec.length,
        "colors": spec.colors,
        "mode": "induced" if spec.induced else "subgraph",
        "algo": args.algo,
        "k": args.k,
        "status": res.status,
        "size": res.size,
        "solution": None if res.solution is None else _solution_doc(res.solution),
        "stats": {
            "nodes": res.stats.nodes_explored,
            "patterns": res.stats.patterns_enumerated,
            "subsets": res.stats.subsets_tried,
        },
    }
    human = [f"status: {res.status}"]
    if res.solution is not None:
        human.append(f"size: {res.size}")
        human.append(
            "solution: " + " ".join(f"{u + 1}-{v + 1}" for u, v in sorted(res.solution))
        )
    human.append(
        f"stats: nodes={res.stats.nodes_explored} patterns={res.stats.patterns_enumerated} "
        f"subsets={res.stats.subsets_tried} elapsed={res.stats.elapsed:.3f}s"
    )
    _emit(doc, args.format, human)
    return EXIT_NO if res.status == NO else EXIT_OK


def _cmd_detect(args) -> int:
    g = load_graph(args.input)
    spec = _spec_from(args)
    if args.first:
        occ = find_one(g, spec)
        found = [] if occ is None else [occ]
    else:
        found = enumerate_occurrences(g, spec, cap=args.max_occurrences)
    if args.format == "structured":
        doc = {
            "command": "detect",
            "pattern": spec.kind,
            "len": spec.length,
            "colors": spec.colors,
            "mode": "induced" if spec.induced else "subgraph",
            "count": len(found),
            "occurrences": [[v + 1 for v in occ.vertices] for occ in found],
        }
        print(json.dumps(doc, indent=2))
    else:
        for occ in found:
            print(format_occurrence(occ))
        if not found:
            print("none")
    return EXIT_OK


def _cmd_classify(args) -> int:
    g = load_graph(args.input)
    part = colored_classes(g)
    stats = structural_stats(g)
    doc = {
        "command": "classify",
        "n": g.n,
        "m": g.m,
        "colors": g.c,
        "max_degree": stats.max_degree,
        "girth": None if stats.girth == float("inf") else stats.girth,
        "components": stats.component_count,
        "gamma": part.gamma,
        "classes": [
            {
                "vertices": [v + 1 for v in k.vertices],
                "kind": "clique" if k.is_clique else "independent",
                "color": k.clique_color,
            }
            for k in part.classes
        ],
    }
    human = [
        f"n: {g.n}  m: {g.m}  colors: {g.c}",
        f"max degree: {stats.max_degree}  girth: {stats.girth}  components: {stats.component_count}",
        f"gamma: {part.gamma}",
    ]
    for i, k in enumerate(part.classes, start=1):
        kind = f"clique(color {k.clique_color})" if k.is_clique else "independent"
        human.append(f"class {i}: {{{', '.join(str(v + 1) for v in k.vertices)}}} {kind}")

    if args.pattern is not None:
        spec = _spec_from(args)
        st = cascade_status(g, spec)
        doc["cascade"] = {
            "pattern": spec.kind,
            "len": spec.length,
            "colors": spec.colors,
            "status": st.status,
            "witness": None if st.witness is None else [v + 1 for v in st.witness.vertices],
        }
        human.append(f"cascade ({spec.describe()}): {st.status}")
        if st.witness is not None:
            human.append(f"  witness: {format_occurrence(st.witness)}")

    if g.c == 2:
        dec = recognize_t(g)
        comps_doc = []
        for i, comp in enumerate(dec.components, start=1):
            if comp.kind == "rb-fence":
                comps_doc.append(
                    {
                        "kind": comp.kind,
                        "clique1": [v + 1 for v in comp.clique1],
                        "clique2": [v + 1 for v in comp.clique2],
                        "matching": [[u + 1, v + 1] for u, v in comp.matching],
                    }
                )
                human.append(
                    f"component {i}: rb-fence  K1={{{', '.join(str(v + 1) for v in comp.clique1)}}}"
                    f" K2={{{', '.join(str(v + 1) for v in comp.clique2)}}}"
                    f" matching={[(u + 1, v + 1) for u, v in comp.matching]}"
                )
            elif comp.kind == "rb-clique-star":
                comps_doc.append(
                    {
                        "kind": comp.kind,
                        "red_clique": [v + 1 for v in comp.red_clique],
                        "blue_cliques": [
                            {"center": cvert + 1, "members": [v + 1 for v in members]}
                            for cvert, members in comp.blue_cliques
                        ],
                    }
                )
                human.append(
                    f"component {i}: rb-clique-star  C={{{', '.join(str(v + 1) for v in comp.red_clique)}}}"
                    f" blue cliques={[(c + 1, tuple(v + 1 for v in ms)) for c, ms in comp.blue_cliques]}"
                )
            else:
                comps_doc.append(
                    {
                        "kind": "rejection",
                        "pattern": comp.pattern,
                        "witness": [v + 1 for v in comp.witness],
                    }
                )
                human.append(
                    f"component {i}: rejected  induced {comp.pattern} on "
                    f"{tuple(v + 1 for v in comp.witness)}"
                )
        doc["t_decomposition"] = {"accepts": dec.accepts, "components": comps_doc}
    _emit(doc, args.format, human)
    return EXIT_OK


def _write_sidecar(path: Path, inst: gen.GeneratedInstance) -> None:
    lines = []
    for key, value in inst.provenance.items():
        lines.append(f"{key}: {value}")
    lines.append(f"pattern: {inst.spec.kind}")
    lines.append(f"len: {inst.spec.length}")
    lines.append(f"colors: {inst.spec.colors}")
    lines.append(f"mode: {'induced' if inst.spec.induced else 'subgraph'}")
    lines.append(f"k: {inst.k}")
    lines.append("labels:")
    for vid, roles in sorted(inst.labels_by_vertex().items()):
        lines.append(f"  {vid + 1} {' '.join(roles)}")
    path.write_text("\n".join(lines) + "\n", encoding="ascii")


def _print_generated(inst: gen.GeneratedInstance, out: Path, sidecar: Path) -> None:
    print(f"pattern: {inst.spec.kind}")
    print(f"len: {inst.spec.length}")
    print(f"colors: {inst.spec.colors}")
    print(f"mode: {'induced' if inst.spec.induced else 'subgraph'}")
    print(f"k: {inst.k}")
    print(f"graph: {out}")
    print(f"sidecar: {sidecar}")


def _cmd_generate(args) -> int:
    out = Path(args.output)
    sidecar = Path(args.labels) if args.labels else out.with_suffix(".labels")

    if args.reduction == "path-chain":
        g = gen.gen_path_chain(args.colors, args.length, args.d)
        save_graph(g, out)
        print(f"pattern: path\nlen: {args.length}\ncolors: {args.colors}\nmode: induced")
        print(f"graph: {out}")
        return EXIT_OK

    if args.reduction == "two-subdivision":
        g = load_graph(args.input)
        sub, parts = gen.two_subdivision(g)
        save_graph(sub, out)
        parts_path = out.with_suffix(".parts")
        parts_path.write_text(
            "\n".join(f"{v + 1} {p}" for v, p in enumerate(parts)) + "\n", encoding="ascii"
        )
        print(f"graph: {out}\nparts: {parts_path}")
        return EXIT_OK

    if args.reduction == "cpld-b2sat":
        phi = gen.parse_dimacs_cnf(Path(args.cnf).read_text(encoding="ascii"))
        inst = gen.gen_cpld_b2sat(phi, args.length, args.colors, args.d)
    elif args.reduction == "lift-2p3d":
        g2 = load_graph(args.input)
        inst = gen.gen_lift_2p3d(g2, args.k, args.length)
    elif args.reduction == "ccld-vc":
        parts = None
        if args.parts:
            parts = tuple(int(x) for x in args.parts.split())
        elif args.parts_file:
            parts_rows = Path(args.parts_file).read_text(encoding="ascii").split()
            parts = tuple(int(x) for x in parts_rows[1::2])
        vc = gen.parse_vc_edge_list(
            Path(args.graph).read_text(encoding="ascii"), args.k, parts
        )
        inst = gen.gen_ccld_vc(vc, args.length, args.colors)
    elif args.reduction == "cpd-hs":
        hs = gen.parse_hitting_set(args.sets, args.k)
        inst = gen.gen_cpd_hs(hs)
    elif args.reduction == "ccd-hs":
        hs = gen.parse_hitting_set(args.sets, args.k)
        inst = gen.gen_ccd_hs(hs)
    elif args.reduction == "2p4d-b2sat":
        phi = gen.parse_dimacs_cnf(Path(args.cnf).read_text(encoding="ascii"))
        inst = gen.gen_2p4d_b2sat(phi)
    else:  # pragma: no cover - argparse restricts choices
        raise AssertionError(args.reduction)

    save_graph(inst.graph, out)
    _write_sidecar(sidecar, inst)
    _print_generated(inst, out, sidecar)
    return EXIT_OK


def _read_meta(path: Path) -> dict:
    meta = {}
    for raw in path.read_text(encoding="ascii").splitlines():
        line = raw.strip()
        if not line or ":" not in line:
            continue
        key, value = line.split(":", 1)
        meta[key.strip()] = value.strip()
    return meta


def _cmd_bench(args) -> int:
    corpus = Path(args.corpus)
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    for a in algos:
        if a not in ALGORITHMS:
            print(f"unknown algorithm {a!r}", file=sys.stderr)
            return EXIT_ERROR
    rows = []
    disagreement = False
    for path in sorted(corpus.glob("*.ecg")):
        meta_path = path.with_suffix(".meta")
        if not meta_path.exists():
            print(f"missing sidecar for {path.name}", file=sys.stderr)
            return EXIT_ERROR
        meta = _read_meta(meta_path)
        spec = PatternSpec(
            meta["pattern"],
            int(meta["len"]),
            int(meta["colors"]),
            meta.get("mode", "induced") == "induced",
        )
        k = int(meta["k"]) if "k" in meta else None
        g = load_graph(path)
        outcomes = []
        for algo in algos:
            t0 = time.perf_counter()
            res = run_solve(
                SolveRequest(g, spec, k, algo),
                SolverCaps(max_branch_nodes=args.max_branch_nodes),
            )
            elapsed = time.perf_counter() - t0
            rows.append(
                {
                    "instance": path.name,
                    "algorithm": algo,
                    "status": res.status,
                    "size": res.size,
                    "nodes": res.stats.nodes_explored,
                    "time": elapsed,
                }
            )
            outcomes.append((res.status, res.size))
        statuses = {s for s, _ in outcomes}
        sizes = {sz for _, sz in outcomes if sz is not None}
        if len(statuses) > 1 or (k is None and len(sizes) > 1):
            disagreement = True
            print(f"DISAGREEMENT on {path.name}: {outcomes}", file=sys.stderr)
    if args.format == "structured":
        doc = {
            "command": "bench",
            "rows": [
                {key: row[key] for key in ("instance", "algorithm", "status", "size", "nodes")}
                for row in rows
            ],
            "agreement": not disagreement,
        }
        print(json.dumps(doc, indent=2))
    else:
        header = f"{'instance':30} {'algorithm':8} {'status':8} {'size':>4} {'nodes':>8} {'time':>8}"
        print(header)
        for row in rows:
            size = "-" if row["size"] is None else row["size"]
            print(
                f"{row['instance']:30} {row['algorithm']:8} {row['status']:8} "
                f"{size:>4} {row['nodes']:>8} {row['time']:>8.3f}"
            )
    return EXIT_ERROR if disagreement else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ecdel",
        description="Edge-deletion solvers and instance generators for edge-colored graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="decide or optimize an edge-deletion instance")
    p_solve.add_argument("input")
    _add_spec_flags(p_solve)
    p_solve.add_argument("-k", type=int, default=None, help="budget; omit to optimize")
    p_solve.add_argument("--algo", choices=ALGORITHMS, default=ALGO_AUTO)
    p_solve.add_argument("--format", choices=("human", "structured"), default="human")
    p_solve.add_argument("--max-brute-edges", type=int, default=DEFAULT_BRUTE_EDGE_BOUND)
    p_solve.add_argument("--max-cnd-bundles", type=int, default=DEFAULT_CND_BUNDLE_BOUND)
    p_solve.add_argument("--max-branch-nodes", type=int, default=DEFAULT_BRANCH_NODE_BOUND)
    p_solve.add_argument("--conflict-hook", action="store_true",
                         help="branch only on conflict edges when the input is non-cascading")
    p_solve.set_defaults(func=_cmd_solve)

    p_detect = sub.add_parser("detect", help="list pattern occurrences")
    p_detect.add_argument("input")
    _add_spec_flags(p_detect)
    p_detect.add_argument("--first", action="store_true", help="only the canonically smallest")
    p_detect.add_argument("--max-occurrences", type=int, default=DEFAULT_OCCURRENCE_CAP)
    p_detect.add_argument("--format", choices=("human", "structured"), default="human")
    p_detect.set_defaults(func=_cmd_detect)

    p_classify = sub.add_parser("classify", help="structural report")
    p_classify.add_argument("input")
    _add_spec_flags(p_classify, required=False)
    p_classify.add_argument("--format", choices=("human", "structured"), default="human")
    p_classify.set_defaults(func=_cmd_classify)

    p_gen = sub.add_parser("generate", help="run a gadget construction")
    gen_sub = p_gen.add_subparsers(dest="reduction", required=True)

    g_chain = gen_sub.add_parser("path-chain")
    g_chain.add_argument("--len", dest="length", type=int, required=True)
    g_chain.add_argument("--colors", type=int, required=True)
    g_chain.add_argument("--d", type=int, default=1)
    g_chain.add_argument("-o", "--output", required=True)
    g_chain.add_argument("--labels", default=None)
    g_chain.set_defaults(func=_cmd_generate)

    g_cpld = gen_sub.add_parser("cpld-b2sat")
    g_cpld.add_argument("--cnf", required=True)
    g_cpld.add_argument("--len", dest="length", type=int, required=True)
    g_cpld.add_argument("--colors", type=int, required=True)
    g_cpld.add_argument("--d", type=int, default=1)
    g_cpld.add_argument("-o", "--output", required=True)
    g_cpld.add_argument("--labels", default=None)
    g_cpld.set_defaults(func=_cmd_generate)

    g_lift = gen_sub.add_parser("lift-2p3d")
    g_lift.add_argument("--input", required=True)
    g_lift.add_argument("--len", dest="length", type=int, required=True)
    g_lift.add_argument("-k", type=int, required=True)
    g_lift.add_argument("-o", "--output", required=True)
    g_lift.add_argument("--labels", default=None)
    g_lift.set_defaults(func=_cmd_generate)

    g_sub2 = gen_sub.add_parser("two-subdivision")
    g_sub2.add_argument("--input", required=True)
    g_sub2.add_argument("-o", "--output", required=True)
    g_sub2.set_defaults(func=_cmd_generate)

    g_vc = gen_sub.add_parser("ccld-vc")
    g_vc.add_argument("--graph", required=True, help="edge list: 'n m' then 'u v' lines")
    g_vc.add_argument("--parts", default=None, help="space-separated part ids, one per vertex")
    g_vc.add_argument("--parts-file", default=None, help="file of 'vertex part' lines")
    g_vc.add_argument("--len", dest="length", type=int, required=True)
    g_vc.add_argument("--colors", type=int, required=True)
    g_vc.add_argument("-k", type=int, required=True)
    g_vc.add_argument("-o", "--output", required=True)
    g_vc.add_argument("--labels", default=None)
    g_vc.set_defaults(func=_cmd_generate)

    for name in ("cpd-hs", "ccd-hs"):
        g_hs = gen_sub.add_parser(name)
        g_hs.add_argument("--sets", required=True, help="e.g. \"1;1 2;3\"")
        g_hs.add_argument("-k", type=int, default=None, help="budget; defaults to the universe size")
        g_hs.add_argument("-o", "--output", required=True)
        g_hs.add_argument("--labels", default=None)
        g_hs.set_defaults(func=_cmd_generate)

    g_2p4 = gen_sub.add_parser("2p4d-b2sat")
    g_2p4.add_argument("--cnf", required=True)
    g_2p4.add_argument("-o", "--output", required=True)
    g_2p4.add_argument("--labels", default=None)
    g_2p4.set_defaults(func=_cmd_generate)

    p_bench = sub.add_parser("bench", help="run algorithms over a corpus and compare")
    p_bench.add_argument("corpus")
    p_bench.add_argument("--algos", required=True, help="comma-separated algorithm list")
    p_bench.add_argument("--format", choices=("human", "structured"), default="human")
    p_bench.add_argument("--max-branch-nodes", type=int, default=DEFAULT_BRANCH_NODE_BOUND)
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EcdelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
