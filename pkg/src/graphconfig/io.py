"""Structured-text (JSON) interchange for graphs, morphisms, and complexes.

Graph files hold ``{"vertices": [{"id": .., "color": ..}, ..],
"edges": [[tail, head], ..]}``; a missing color defaults to the vertex id.
Morphism files embed both graphs plus vertex and edge maps.  Complex files
store the graded cells with their factors and facet ids, and round-trip
byte-exactly through the canonical JSON encoding.
"""

from __future__ import annotations

import json

from .complexes import CubeComplex
from .graphs import ColoredGraph, GraphMorphism


def dumps_canonical(obj):
    """Canonical JSON encoding used for every file this package writes."""
    return json.dumps(obj, sort_keys=True, indent=1, separators=(",", ": ")) + "\n"


def graph_to_dict(g):
    return {
        "vertices": [{"id": v, "color": g.colors[v]} for v in range(g.nv)],
        "edges": [[t, h] for t, h in g.edges],
    }


def graph_from_dict(data):
    try:
        raw_vertices = data["vertices"]
        raw_edges = data["edges"]
    except (KeyError, TypeError):
        raise ValueError("graph object needs 'vertices' and 'edges'") from None
    ids = [v.get("id") for v in raw_vertices]
    if sorted(ids) != list(range(len(ids))):
        raise ValueError("vertex ids must be 0-based and contiguous")
    colors = [None] * len(ids)
    for v in raw_vertices:
        colors[v["id"]] = v.get("color", v["id"])
    edges = []
    for e in raw_edges:
        if len(e) != 2:
            raise ValueError(f"edge {e} is not a [tail, head] pair")
        edges.append((e[0], e[1]))
    return ColoredGraph(colors, edges)


def save_graph(g, path):
    with open(path, "w") as fh:
        fh.write(dumps_canonical(graph_to_dict(g)))


def load_graph(path):
    with open(path) as fh:
        return graph_from_dict(json.load(fh))


def morphism_to_dict(f):
    return {
        "domain": graph_to_dict(f.domain),
        "codomain": graph_to_dict(f.codomain),
        "vertex_map": list(f.vertex_map),
        "edge_map": [
            {"edge": j, "image": img, "flip": flip}
            for j, (img, flip) in enumerate(f.edge_map)
        ],
    }


def morphism_from_dict(data):
    domain = graph_from_dict(data["domain"])
    codomain = graph_from_dict(data["codomain"])
    entries = {}
    for item in data["edge_map"]:
        j = item["edge"]
        if j in entries:
            raise ValueError(f"edge {j} mapped twice")
        entries[j] = (item["image"], bool(item.get("flip", False)))
    if sorted(entries) != list(range(domain.ne)):
        raise ValueError("edge_map must cover every domain edge exactly once")
    edge_map = [entries[j] for j in range(domain.ne)]
    return GraphMorphism(domain, codomain, data["vertex_map"], edge_map)


def save_morphism(f, path):
    with open(path, "w") as fh:
        fh.write(dumps_canonical(morphism_to_dict(f)))


def load_morphism(path):
    with open(path) as fh:
        return morphism_from_dict(json.load(fh))


def complex_to_dict(X):
    cells = []
    faces = []
    for d, grade in enumerate(X.cells):
        cells.append(
            [
                {"id": i, "factors": [list(X.graph.cell_label(c)) for c in cube]}
                for i, cube in enumerate(grade)
            ]
        )
        if d >= 1:
            faces.append(
                [
                    [x for _pos, tail, head in axes for x in (tail, head)]
                    for axes in X.faces[d]
                ]
            )
    return {
        "n": X.n,
        "ordered": X.ordered,
        "graph": graph_to_dict(X.graph),
        "cells": cells,
        "faces": faces,
    }


def complex_from_dict(data):
    graph = graph_from_dict(data["graph"])
    tuples = []
    for grade in data["cells"]:
        for cell in grade:
            tuples.append(
                tuple(graph.cell_code(kind, idx) for kind, idx in cell["factors"])
            )
    X = CubeComplex(graph, data["n"], tuples, ordered=data.get("ordered", True))
    stored = data.get("faces")
    if stored is not None:
        recomputed = [
            [[x for _pos, tail, head in axes for x in (tail, head)] for axes in X.faces[d]]
            for d in range(1, len(X.cells))
        ]
        if recomputed != stored:
            raise ValueError("stored face lists disagree with the recomputed ones")
    return X


def save_complex(X, path):
    with open(path, "w") as fh:
        fh.write(dumps_canonical(complex_to_dict(X)))


def load_complex(path):
    with open(path) as fh:
        return complex_from_dict(json.load(fh))


def simplicial_to_dict(K):
    """Links and other simplicial complexes: pure face lists per dimension."""
    return {
        "faces": [[list(map(_plain, s)) for s in level] for level in K.faces]
    }


def _plain(label):
    if isinstance(label, tuple):
        return list(label)
    return label


def skeleton_dot(X, name="skeleton"):
    """DOT text of the complex's 1-skeleton, vertices labeled by factors."""
    lines = [f"graph {name} {{"]
    for i, cube in enumerate(X.cells[0]):
        label = ",".join(
            f"{kind}{idx}" for kind, idx in (X.graph.cell_label(c) for c in cube)
        )
        lines.append(f'  n{i} [label="{label}"];')
    if len(X.cells) > 1:
        for axes in X.faces[1]:
            (_pos, tail, head) = axes[0]
            lines.append(f"  n{tail} -- n{head};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def decomposition_dot(D, name="decomposition"):
    """DOT text of a decomposition graph with group labels."""
    lines = [f"graph {name} {{"]
    for k, node in enumerate(D.nodes):
        lines.append(
            f'  n{k} [label="v{node.graph_vertex}.{node.component}: '
            f'{node.group_label()}"];'
        )
    for e in D.edges:
        a, b = e.ends
        lines.append(f'  n{a} -- n{b} [label="{e.group_label()}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
