"""Graph-of-spaces decomposition of a configuration complex over its graph.

Projecting a configuration to its first coordinate fibers the n-point
complex over the graph: over a vertex sits the (n-1)-point complex of the
subgraph avoiding that vertex's color, over an edge midpoint the
(n-1)-point complex of the subgraph avoiding both endpoint colors.  The
decomposition graph has one node per component of each vertex fiber and
one edge per component of each edge fiber, attached through the inclusion
maps, and carries fundamental-group data on every node.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import ColoredGraph, GraphMorphism
from .invariants import pi1_presentation
from .spaces import build_ordered, induced_map


def available_subgraph(gamma, cell_code):
    """Subgraph spanned by vertices colored unlike the closure of a cell.

    Returns the induced colored subgraph together with its inclusion
    morphism back into ``gamma``; the inclusion retains the original ids.

    >>> from .graphs import standard_graph
    >>> k5 = standard_graph("complete", [5])
    >>> sub, incl = available_subgraph(k5, k5.vertex_cell(0))
    >>> sub.nv, sub.ne
    (4, 6)
    """
    if not 0 <= cell_code < gamma.n_cells:
        raise ValueError(f"unknown cell code {cell_code}")
    banned = {gamma.colors[v] for v in gamma.closure_vertices(cell_code)}
    kept_vertices = [v for v in range(gamma.nv) if gamma.colors[v] not in banned]
    v_new = {v: i for i, v in enumerate(kept_vertices)}
    kept_edges = [
        j
        for j, (t, h) in enumerate(gamma.edges)
        if t in v_new and h in v_new
    ]
    sub = ColoredGraph(
        [gamma.colors[v] for v in kept_vertices],
        [(v_new[t], v_new[h]) for t, h in (gamma.edges[j] for j in kept_edges)],
    )
    inclusion = GraphMorphism(
        sub, gamma, kept_vertices, [(j, False) for j in kept_edges]
    )
    return sub, inclusion


def _restrict_inclusion(small_incl, big_incl):
    """Inclusion between two subgraphs of a common graph.

    ``small_incl`` and ``big_incl`` include into the same ambient graph and
    the small image is contained in the big image.
    """
    big_v = {p: i for i, p in enumerate(big_incl.vertex_map)}
    big_e = {img: j for j, (img, _f) in enumerate(big_incl.edge_map)}
    vmap = [big_v[p] for p in small_incl.vertex_map]
    emap = [(big_e[img], False) for img, _f in small_incl.edge_map]
    return GraphMorphism(small_incl.domain, big_incl.domain, vmap, emap)


def fiber_complex(gamma, n, cell_code, ambient=None, verify=True):
    """The first-coordinate fiber over a cell, as an (n-1)-point complex.

    Builds the (n-1)-point configuration complex of the available subgraph
    and, unless ``verify`` is off, checks cell-by-cell that dropping the
    first factor identifies it with the cells of the ambient n-point
    complex whose first factor is the given cell.
    """
    if n < 2:
        raise ValueError("fibers need n >= 2")
    sub, incl = available_subgraph(gamma, cell_code)
    fib = build_ordered(sub, n - 1)
    if verify:
        if ambient is None:
            ambient = build_ordered(gamma, n)
        shift = 1 if gamma.is_edge_code(cell_code) else 0
        for d, grade in enumerate(fib.cells):
            lifted = set()
            for cube in grade:
                lifted.add((cell_code,) + tuple(incl.image_cell(c) for c in cube))
            ambient_slice = {
                cube
                for cube in ambient.cells[d + shift]
                if cube[0] == cell_code
            } if d + shift < len(ambient.cells) else set()
            if lifted != ambient_slice:
                raise AssertionError(
                    f"fiber over cell {cell_code} disagrees with the ambient "
                    f"complex in dimension {d}"
                )
    return fib


@dataclass(frozen=True)
class DecompositionNode:
    """One node of the decomposition graph: a component of a vertex fiber."""

    graph_vertex: int
    component: int
    chi: int
    free_rank: int | None
    presentation: object = None

    def group_label(self):
        return _group_label(self.free_rank, self.presentation)


@dataclass(frozen=True)
class DecompositionEdge:
    """One edge: a component of an edge fiber, attached at both ends."""

    graph_edge: int
    component: int
    ends: tuple
    chi: int
    free_rank: int | None
    presentation: object = None

    def group_label(self):
        return _group_label(self.free_rank, self.presentation)


def _group_label(free_rank, presentation):
    if free_rank is not None:
        if free_rank == 0:
            return "1"
        if free_rank == 1:
            return "Z"
        return f"F{free_rank}"
    return str(presentation)


@dataclass
class DecompositionGraph:
    """Decomposition of an n-point complex over its graph.

    ``nodes[k]`` is a component of the fiber over ``nodes[k].graph_vertex``
    and ``edges[k]`` a component of the fiber over a graph edge, with
    ``ends`` indexing into ``nodes``.  ``vertex_fibers`` / ``edge_fibers``
    keep the fiber complexes themselves, indexed by graph cell id.
    ``over_base`` is set when every fiber is connected, in which case the
    underlying graph reproduces the base graph itself.
    """

    gamma: ColoredGraph
    n: int
    nodes: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    vertex_fibers: dict = field(default_factory=dict)
    edge_fibers: dict = field(default_factory=dict)
    over_base: bool = False
    total_chi: int = 0

    def node_id(self, graph_vertex, component):
        for k, node in enumerate(self.nodes):
            if node.graph_vertex == graph_vertex and node.component == component:
                return k
        raise KeyError((graph_vertex, component))

    def underlying_graph(self):
        """The decomposition graph as a plain colored graph.

        Nodes are colored by their originating graph vertex, which makes
        the projection to the base graph a map of colored graphs.
        """
        return ColoredGraph(
            [node.graph_vertex for node in self.nodes],
            [e.ends for e in self.edges],
        )

    def projection_to_base(self):
        """Graph morphism from the underlying graph onto the base graph.

        Only defined when the base coloring is injective (otherwise the
        node coloring above is not color-compatible); raises otherwise.
        """
        under = self.underlying_graph()
        base = ColoredGraph(range(self.gamma.nv), self.gamma.edges)
        vmap = [node.graph_vertex for node in self.nodes]
        emap = [(e.graph_edge, False) for e in self.edges]
        return GraphMorphism(under, base, vmap, emap)

    def __str__(self):
        lines = [
            f"decomposition of the {self.n}-point complex over a graph with "
            f"{self.gamma.nv} vertices / {self.gamma.ne} edges",
            f"  nodes: {len(self.nodes)}, edges: {len(self.edges)}, "
            f"over the base graph itself: {self.over_base}",
        ]
        for k, node in enumerate(self.nodes):
            lines.append(
                f"  node {k}: vertex {node.graph_vertex} comp {node.component}, "
                f"group {node.group_label()}"
            )
        for e in self.edges:
            lines.append(
                f"  edge over {e.graph_edge} comp {e.component}: "
                f"{e.ends[0]} -- {e.ends[1]}, group {e.group_label()}"
            )
        return "\n".join(lines)


def _pi1_data(fib, component):
    """(chi, free rank or None, presentation or None) for a fiber component."""
    sub = fib.subcomplex(component)
    chi = sub.euler_characteristic()
    if sub.dim <= 1:
        return chi, 1 - chi, None
    return chi, None, pi1_presentation(fib, component)


def decomposition_graph(gamma, n, check=True):
    """Build the full decomposition graph of the n-point complex.

    Attachments push each edge-fiber component through the inclusion into
    the fiber at either endpoint and record the hit component; every cell
    of the component is pushed, and landing in more than one target
    component is an error.  With ``check`` the Euler-characteristic
    bookkeeping identity (vertex fibers minus edge fibers equals the total
    space) is verified against the actually built n-point complex.
    """
    if n < 2:
        raise ValueError("decomposition needs n >= 2")
    result = DecompositionGraph(gamma=gamma, n=n)
    inclusions = {}
    for v in range(gamma.nv):
        sub, incl = available_subgraph(gamma, gamma.vertex_cell(v))
        fib = build_ordered(sub, n - 1)
        inclusions[("v", v)] = incl
        result.vertex_fibers[v] = fib
        for comp in range(fib.components().count):
            chi, rank, pres = _pi1_data(fib, comp)
            result.nodes.append(DecompositionNode(v, comp, chi, rank, pres))
    for j in range(gamma.ne):
        sub, incl = available_subgraph(gamma, gamma.edge_cell(j))
        fib = build_ordered(sub, n - 1)
        inclusions[("e", j)] = incl
        result.edge_fibers[j] = fib
        comps = fib.components()
        t, h = gamma.edges[j]
        for comp in range(comps.count):
            ends = []
            for v in (t, h):
                target_fib = result.vertex_fibers[v]
                rel = _restrict_inclusion(inclusions[("e", j)], inclusions[("v", v)])
                fmap = induced_map(rel, n - 1, source=fib, target=target_fib)
                landed = {
                    target_fib.components().labels[d][fmap.cell_map[d][i]]
                    for d in range(len(fib.cells))
                    for i in range(len(fib.cells[d]))
                    if comps.labels[d][i] == comp
                }
                if len(landed) != 1:
                    raise AssertionError(
                        f"edge fiber component {comp} over edge {j} lands in "
                        f"{len(landed)} components of the fiber at vertex {v}"
                    )
                ends.append(result.node_id(v, landed.pop()))
            chi, rank, pres = _pi1_data(fib, comp)
            result.edges.append(
                DecompositionEdge(j, comp, tuple(ends), chi, rank, pres)
            )
    result.over_base = all(
        f.components().count == 1
        for f in list(result.vertex_fibers.values()) + list(result.edge_fibers.values())
    )
    vertex_chi = sum(node.chi for node in result.nodes)
    edge_chi = sum(e.chi for e in result.edges)
    result.total_chi = vertex_chi - edge_chi
    if check:
        total = build_ordered(gamma, n)
        if total.euler_characteristic() != result.total_chi:
            raise AssertionError(
                "Euler characteristic bookkeeping failed: "
                f"{total.euler_characteristic()} != {result.total_chi}"
            )
        if result.nodes:
            under_comps = result.underlying_graph().component_labels()
            if total.components().count != (max(under_comps) + 1 if under_comps else 0):
                raise AssertionError(
                    "component counts of the total space and the decomposition "
                    "graph disagree"
                )
    return result
