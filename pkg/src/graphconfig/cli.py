"""Command-line front end for batch building and analysis.

Subcommands: build, analyze, curvature, manifold, split, plan, cover,
export-dot.  Structured reports and complexes are written as canonical
JSON; human-readable summaries go to stdout and timing to stderr, so that
identical inputs always produce byte-identical streams and files.

Exit status: 0 on success or a passing check, 1 when a check fails (a
curvature counterexample, a failed cover property, an unreachable plan),
2 on unusable input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import io as storage
from .curvature import check_flag_condition, check_link_condition
from .graphs import classify_morphism, random_colored_graph
from .invariants import homology, pi1_presentation, surface_classify
from .manifolds import classify_links, ideal_finite_census, manifold_away_from_skeleton
from .planning import path_moves, replay, shortest_path
from .spaces import (
    build_ordered,
    build_unordered,
    ordered_tuple_bound,
    verify_induced_properties,
)
from .splittings import decomposition_graph

DEFAULT_CAP = 5_000_000


class InputError(Exception):
    pass


def _add_complex_source(p, need_n=True):
    p.add_argument("--graph", help="graph file (JSON)")
    p.add_argument("--complex", help="prebuilt complex file (JSON)")
    if need_n:
        p.add_argument("--n", type=int, help="number of points")
    p.add_argument("--unordered", action="store_true", help="use the unordered quotient")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="cell-count safety cap")
    p.add_argument("--threads", type=int, default=1,
                   help="worker cap (accepted for compatibility; builds are sequential)")


def _load_complex(args):
    if args.complex:
        return storage.load_complex(args.complex)
    if not args.graph or args.n is None:
        raise InputError("need either --complex or both --graph and --n")
    graph = storage.load_graph(args.graph)
    return _build(graph, args.n, args.unordered, args.cap)


def _count_capped(graph, n, cap):
    """Exact admissible-tuple count, aborting once the cap is exceeded."""
    masks = graph.cell_masks
    ncells = graph.n_cells
    count = 0

    def extend(depth, used):
        nonlocal count
        for code in range(ncells):
            m = masks[code]
            if m & used:
                continue
            if depth + 1 == n:
                count += 1
                if count > cap:
                    raise InputError(
                        f"more than {cap} cells; lower --n or raise --cap"
                    )
            else:
                extend(depth + 1, used | m)

    extend(0, 0)
    return count


def _build(graph, n, unordered, cap):
    if n is None or n < 1:
        raise InputError("--n must be at least 1")
    if cap is not None and cap > 0 and ordered_tuple_bound(graph, n) > cap:
        _count_capped(graph, n, cap)
    t0 = time.monotonic()
    X = build_unordered(graph, n) if unordered else build_ordered(graph, n)
    print(f"built in {time.monotonic() - t0:.3f}s", file=sys.stderr)
    return X


def _write_report(args, report):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(storage.dumps_canonical(report))


def cmd_build(args):
    if not args.graph or args.n is None:
        raise InputError("build needs --graph and --n")
    graph = storage.load_graph(args.graph)
    X = _build(graph, args.n, args.unordered, args.cap)
    print("cells:", " / ".join(str(c) for c in X.f_vector()) or "0")
    if args.out:
        storage.save_complex(X, args.out)
    else:
        sys.stdout.write(storage.dumps_canonical(storage.complex_to_dict(X)))
    return 0


def cmd_analyze(args):
    X = _load_complex(args)
    comps = X.components()
    prof = homology(X)
    print("cells:", " / ".join(str(c) for c in X.f_vector()) or "0")
    print(f"chi = {X.euler_characteristic()}")
    print(f"components: {comps.count}")
    print(f"homology: {prof}")
    report = {
        "cells": list(X.f_vector()),
        "chi": X.euler_characteristic(),
        "components": comps.count,
        "betti": list(prof.betti),
        "torsion": [list(t) for t in prof.torsion],
        "per_component": [],
    }
    for c in range(comps.count):
        entry = {"component": c}
        sub = X.subcomplex(c)
        entry["cells"] = list(sub.f_vector())
        entry["chi"] = sub.euler_characteristic()
        pres = pi1_presentation(X, c)
        rank, torsion = pres.abelianization()
        entry["pi1_generators"] = pres.n_generators
        entry["pi1_relators"] = [list(w) for w in pres.relators]
        entry["pi1_abelianized"] = {"rank": rank, "torsion": list(torsion)}
        surf = surface_classify(X, c)
        if surf.is_surface:
            kind = "orientable" if surf.orientable else "non-orientable"
            size = (
                f"genus {surf.genus}" if surf.orientable
                else f"{surf.crosscaps} crosscaps"
            )
            print(f"component {c}: closed {kind} surface, {size}")
            entry["surface"] = {
                "closed": True,
                "orientable": surf.orientable,
                "genus": surf.genus,
                "crosscaps": surf.crosscaps,
            }
        else:
            entry["surface"] = None
        report["per_component"].append(entry)
    _write_report(args, report)
    return 0


def cmd_curvature(args):
    status = 0
    if args.random:
        rng = random.Random(args.seed)
        for trial in range(args.random):
            graph = random_colored_graph(rng)
            X = _build(graph, args.n or 2, args.unordered, args.cap)
            res = check_link_condition(X)
            if not res.passed:
                print(f"trial {trial}: {res}")
                status = 1
        if status == 0:
            print(f"link condition holds on {args.random} random graphs (seed {args.seed})")
        return status
    X = _load_complex(args)
    res = check_link_condition(X)
    print(res)
    if not res.passed:
        d, i, tri = res.counterexample
        print(f"  cell factors: {X.cell_labels(d, i)}")
        print(f"  empty triangle moves: {tri}")
        status = 1
    flag = check_flag_condition(X, vertices_only=args.vertices_only)
    print(flag)
    if not flag.passed:
        status = 1
    _write_report(args, {
        "link_condition": res.passed,
        "counterexample": list(res.counterexample) if res.counterexample else None,
        "flag_condition": flag.passed,
    })
    return status


def cmd_manifold(args):
    X = _load_complex(args)
    report = manifold_away_from_skeleton(X)
    links = classify_links(X)
    print(report)
    for d in sorted({r.dim for r in links.records}):
        counts = links.type_counts(d)
        summary = ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
        print(f"  dim {d} links: {summary}")
    if X.dim == 3:
        census = ideal_finite_census(X, links)
        pairs = sorted(set(census))
        print(f"  per-3-cell (ideal, finite) corner counts: {pairs}")
    if args.per_cell:
        for r in links.records:
            print(f"  {r.dim}-cell {r.cell}: {r.link_type}")
    _write_report(args, {
        "manifold_away_from_skeleton": report.passed,
        "defects": [[d, i, reason] for d, i, reason in report.defects],
        "link_type_counts": {
            str(d): links.type_counts(d) for d in sorted({r.dim for r in links.records})
        },
    })
    return 0 if report.passed else 1


def cmd_split(args):
    if args.complex:
        X = storage.load_complex(args.complex)
        graph, n = X.graph, X.n
    elif args.graph and args.n is not None:
        graph = storage.load_graph(args.graph)
        n = args.n
    else:
        raise InputError("split needs --graph and --n, or --complex")
    D = decomposition_graph(graph, n)
    print(D)
    print(f"chi bookkeeping total: {D.total_chi}")
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(storage.decomposition_dot(D))
    _write_report(args, {
        "nodes": [
            {
                "graph_vertex": nd.graph_vertex,
                "component": nd.component,
                "chi": nd.chi,
                "group": nd.group_label(),
            }
            for nd in D.nodes
        ],
        "edges": [
            {
                "graph_edge": e.graph_edge,
                "component": e.component,
                "ends": list(e.ends),
                "chi": e.chi,
                "group": e.group_label(),
            }
            for e in D.edges
        ],
        "over_base": D.over_base,
        "total_chi": D.total_chi,
    })
    return 0


def _parse_config(text):
    try:
        return tuple(int(x) for x in text.split(",") if x != "")
    except ValueError:
        raise InputError(f"bad configuration {text!r}; expected comma-separated ids")


def cmd_plan(args):
    if not args.graph:
        raise InputError("plan needs --graph")
    graph = storage.load_graph(args.graph)
    start = _parse_config(args.start)
    goal = _parse_config(args.goal)
    path = shortest_path(
        graph, start, goal, ordered=not args.unordered, simultaneous=args.simultaneous
    )
    if path is None:
        print("unreachable")
        return 1
    moves = path_moves(path)
    print(f"length {len(path) - 1}")
    for token, frm, to in moves:
        print(f"  token {token}: {frm} -> {to}")
    if not args.simultaneous:
        replay(graph, start, moves, ordered=not args.unordered)
    _write_report(args, {
        "length": len(path) - 1,
        "moves": [[t, f, to] for t, f, to in moves],
    })
    return 0


def cmd_cover(args):
    f = storage.load_morphism(args.morphism)
    cls = classify_morphism(f)
    print(
        "morphism: "
        + ", ".join(
            name
            for name, flag in [
                ("injective", cls.injective),
                ("immersion", cls.immersion),
                ("covering", cls.covering),
                ("surjective", cls.surjective),
            ]
            if flag
        )
    )
    if cls.degree is not None:
        print(f"covering degree: {cls.degree}")
    report = verify_induced_properties(f, args.n)
    print(report)
    _write_report(args, {
        "injective": cls.injective,
        "immersion": cls.immersion,
        "covering": cls.covering,
        "surjective": cls.surjective,
        "degree": cls.degree,
        "induced_ok": report.ok,
        "checks": [
            {"name": c.name, "applicable": c.applicable, "passed": c.passed}
            for c in report.checks
        ],
    })
    return 0 if report.ok else 1


def cmd_export_dot(args):
    X = _load_complex(args)
    text = storage.skeleton_dot(X)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def make_parser():
    parser = argparse.ArgumentParser(
        prog="graphconfig",
        description="Configuration spaces of colored graphs: build and analyze",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a configuration complex")
    _add_complex_source(p)
    p.add_argument("--out", help="complex file to write")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("analyze", help="chi, homology, surfaces, presentations")
    _add_complex_source(p)
    p.add_argument("--out", help="JSON report file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("curvature", help="link condition (plus strict flag variant)")
    _add_complex_source(p)
    p.add_argument("--vertices-only", action="store_true",
                   help="restrict the flag variant to vertex links")
    p.add_argument("--random", type=int, default=0,
                   help="check N seeded random colored graphs instead")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="JSON report file")
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("manifold", help="manifold detection via links")
    _add_complex_source(p)
    p.add_argument("--per-cell", action="store_true", help="list every cell's link type")
    p.add_argument("--out", help="JSON report file")
    p.set_defaults(func=cmd_manifold)

    p = sub.add_parser("split", help="decomposition graph over the base graph")
    _add_complex_source(p)
    p.add_argument("--dot", help="write a DOT rendering here")
    p.add_argument("--out", help="JSON report file")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("plan", help="shortest token motion plan")
    p.add_argument("--graph", required=True)
    p.add_argument("--start", required=True, help="comma-separated vertex ids")
    p.add_argument("--goal", required=True, help="comma-separated vertex ids")
    p.add_argument("--unordered", action="store_true")
    p.add_argument("--simultaneous", action="store_true",
                   help="count simultaneous cube moves as single steps")
    p.add_argument("--out", help="JSON report file")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("cover", help="classify a morphism and verify induced maps")
    p.add_argument("--morphism", required=True, help="morphism file (JSON)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="JSON report file")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("export-dot", help="DOT text of the 1-skeleton")
    _add_complex_source(p)
    p.add_argument("--out", help="DOT file to write")
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
