"""Finite colored graphs and combinatorial maps between them.

A colored graph is a finite loop-free multigraph with a color attached to
every vertex.  Colors drive the disjointness rule used when configuration
spaces are built: cells may share a configuration only if the colors of
their closures do not overlap.  An injective coloring (the default for the
standard constructors) makes the colored theory collapse to the plain,
uncolored one.

Cells of a graph are addressed by integer codes: vertex ``v`` has code
``v`` and edge ``j`` has code ``nv + j``.  Codes order all vertices before
all edges, which is the canonical cell order used throughout the package.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


class ColoredGraph:
    """Immutable loop-free multigraph with vertex colors.

    Vertices are ``0 .. nv-1``; ``colors[v]`` is an opaque,
    equality-comparable token.  Edges are numbered ``0 .. ne-1`` and stored
    as ordered ``(tail, head)`` pairs.  The orientation is bookkeeping for
    boundary signs and carries no topological meaning.  Parallel edges are
    allowed, loops are not.

    >>> g = ColoredGraph("abc", [(0, 1), (1, 2), (2, 0)])
    >>> g.nv, g.ne
    (3, 3)
    >>> g.degree(1)
    2
    >>> g.cell_label(g.edge_cell(0))
    ('e', 0)
    """

    def __init__(self, colors, edges):
        self.colors = tuple(colors)
        self.nv = len(self.colors)
        self.edges = tuple((int(t), int(h)) for t, h in edges)
        self.ne = len(self.edges)
        for j, (t, h) in enumerate(self.edges):
            if not (0 <= t < self.nv and 0 <= h < self.nv):
                raise ValueError(f"edge {j} endpoint out of range: {(t, h)}")
            if t == h:
                raise ValueError(f"edge {j} is a loop at vertex {t}")
        palette = {}
        for c in self.colors:
            palette.setdefault(c, len(palette))
        self.color_ids = tuple(palette[c] for c in self.colors)
        self.n_colors = len(palette)
        inc = [[] for _ in range(self.nv)]
        for j, (t, h) in enumerate(self.edges):
            inc[t].append(j)
            inc[h].append(j)
        self.incident = tuple(tuple(js) for js in inc)
        # one bit per color; a cell's mask covers the colors of its closure
        masks = [1 << self.color_ids[v] for v in range(self.nv)]
        for t, h in self.edges:
            masks.append((1 << self.color_ids[t]) | (1 << self.color_ids[h]))
        self.cell_masks = tuple(masks)

    # -- cell codes ---------------------------------------------------

    @property
    def n_cells(self):
        return self.nv + self.ne

    def vertex_cell(self, v):
        """Cell code of vertex ``v``."""
        if not 0 <= v < self.nv:
            raise ValueError(f"no vertex {v}")
        return v

    def edge_cell(self, j):
        """Cell code of edge ``j``."""
        if not 0 <= j < self.ne:
            raise ValueError(f"no edge {j}")
        return self.nv + j

    def is_edge_code(self, code):
        return code >= self.nv

    def endpoints(self, code):
        """(tail, head) of the edge with the given cell code."""
        return self.edges[code - self.nv]

    def closure_vertices(self, code):
        """Vertices in the closed cell: the vertex itself, or both endpoints."""
        if code < self.nv:
            return (code,)
        return self.edges[code - self.nv]

    def cell_label(self, code):
        """Human-readable ('v', id) or ('e', id) form of a cell code."""
        if not 0 <= code < self.n_cells:
            raise ValueError(f"no cell with code {code}")
        if code < self.nv:
            return ("v", code)
        return ("e", code - self.nv)

    def cell_code(self, kind, idx):
        """Inverse of :meth:`cell_label`."""
        if kind == "v":
            return self.vertex_cell(idx)
        if kind == "e":
            return self.edge_cell(idx)
        raise ValueError(f"unknown cell kind {kind!r}")

    # -- basic combinatorics ------------------------------------------

    def degree(self, v):
        return len(self.incident[v])

    def injective_coloring(self):
        """True when no two vertices share a color."""
        return self.n_colors == self.nv

    def component_labels(self):
        """Component index per vertex, numbered by least contained vertex."""
        labels = [-1] * self.nv
        comp = 0
        for start in range(self.nv):
            if labels[start] != -1:
                continue
            stack = [start]
            labels[start] = comp
            while stack:
                u = stack.pop()
                for j in self.incident[u]:
                    t, h = self.edges[j]
                    w = h if u == t else t
                    if labels[w] == -1:
                        labels[w] = comp
                        stack.append(w)
            comp += 1
        return tuple(labels)

    def is_connected(self):
        return self.nv == 0 or max(self.component_labels()) == 0

    def __eq__(self, other):
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self.colors == other.colors and self.edges == other.edges

    def __hash__(self):
        return hash((self.colors, self.edges))

    def __repr__(self):
        return f"ColoredGraph(nv={self.nv}, ne={self.ne}, n_colors={self.n_colors})"


def standard_graph(kind, params):
    """Construct one of the named graph families with injective coloring.

    ``kind`` is one of ``complete``, ``complete_bipartite``, ``cycle``,
    ``path``, ``star``; ``params`` is its integer parameter list.  Colors
    default to the vertex ids, so these model uncolored graphs.

    >>> k5 = standard_graph("complete", [5])
    >>> k5.nv, k5.ne
    (5, 10)
    >>> standard_graph("star", [3]).ne
    3
    """
    params = [int(p) for p in params]
    if any(p <= 0 for p in params):
        raise ValueError(f"parameters must be positive, got {params}")

    def nargs(k):
        if len(params) != k:
            raise ValueError(f"{kind} takes {k} parameter(s), got {len(params)}")

    if kind == "complete":
        nargs(1)
        n = params[0]
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
        return ColoredGraph(range(n), edges)
    if kind == "complete_bipartite":
        nargs(2)
        m, n = params
        edges = [(i, m + j) for i in range(m) for j in range(n)]
        return ColoredGraph(range(m + n), edges)
    if kind == "cycle":
        nargs(1)
        n = params[0]
        if n == 1:
            raise ValueError("a cycle of length 1 would be a loop")
        edges = [(i, (i + 1) % n) for i in range(n)]
        return ColoredGraph(range(n), edges)
    if kind == "path":
        nargs(1)
        n = params[0]
        edges = [(i, i + 1) for i in range(n)]
        return ColoredGraph(range(n + 1), edges)
    if kind == "star":
        nargs(1)
        n = params[0]
        edges = [(0, i + 1) for i in range(n)]
        return ColoredGraph(range(n + 1), edges)
    raise ValueError(f"unknown graph kind {kind!r}")


def subdivide(g, edge_id, new_color):
    """Split one edge at a fresh vertex carrying ``new_color``.

    Ids of untouched cells are preserved: the subdivided edge keeps its id
    for the half at its tail, and the half at its head is appended as a new
    edge.  The new vertex gets id ``g.nv``.
    """
    if not 0 <= edge_id < g.ne:
        raise ValueError(f"no edge {edge_id}")
    t, h = g.edges[edge_id]
    mid = g.nv
    edges = list(g.edges)
    edges[edge_id] = (t, mid)
    edges.append((mid, h))
    return ColoredGraph(g.colors + (new_color,), edges)


def random_colored_graph(rng, max_vertices=8, max_edges=14):
    """Random small colored graph for property-style batteries.

    ``rng`` is a ``random.Random`` instance or an integer seed.  Parallel
    edges may occur; loops never do.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    nv = rng.randint(2, max_vertices)
    ne = rng.randint(1, max_edges)
    edges = []
    for _ in range(ne):
        t = rng.randrange(nv)
        h = rng.randrange(nv - 1)
        if h >= t:
            h += 1
        edges.append((t, h))
    ncolors = rng.randint(2, nv)
    colors = [rng.randrange(ncolors) for _ in range(nv)]
    return ColoredGraph(colors, edges)


class GraphMorphism:
    """Combinatorial, color-preserving map between colored graphs.

    ``vertex_map[v]`` is the image vertex of ``v``; ``edge_map[j]`` is a
    pair ``(image_edge, flip)``.  With ``flip`` False the tail maps to the
    image's tail, with True to its head.  Construction validates that every
    edge maps homeomorphically onto its image edge and that colors are
    preserved; a violated invariant raises ``ValueError``.
    """

    def __init__(self, domain, codomain, vertex_map, edge_map):
        self.domain = domain
        self.codomain = codomain
        self.vertex_map = tuple(int(v) for v in vertex_map)
        self.edge_map = tuple((int(e), bool(f)) for e, f in edge_map)
        if len(self.vertex_map) != domain.nv:
            raise ValueError("vertex_map must cover every domain vertex")
        if len(self.edge_map) != domain.ne:
            raise ValueError("edge_map must cover every domain edge")
        for v, img in enumerate(self.vertex_map):
            if not 0 <= img < codomain.nv:
                raise ValueError(f"image of vertex {v} out of range")
            if domain.colors[v] != codomain.colors[img]:
                raise ValueError(f"color mismatch at vertex {v}")
        for j, (img, flip) in enumerate(self.edge_map):
            if not 0 <= img < codomain.ne:
                raise ValueError(f"image of edge {j} out of range")
            t, h = domain.edges[j]
            it, ih = codomain.edges[img]
            if flip:
                it, ih = ih, it
            if (self.vertex_map[t], self.vertex_map[h]) != (it, ih):
                raise ValueError(
                    f"edge {j} does not map homeomorphically onto edge {img}"
                )

    @classmethod
    def from_edge_images(cls, domain, codomain, vertex_map, edge_images):
        """Build a morphism inferring each flip from the endpoint images."""
        vertex_map = tuple(int(v) for v in vertex_map)
        edge_map = []
        for j, img in enumerate(edge_images):
            t, h = domain.edges[j]
            it, ih = codomain.edges[img]
            if (vertex_map[t], vertex_map[h]) == (it, ih):
                edge_map.append((img, False))
            elif (vertex_map[t], vertex_map[h]) == (ih, it):
                edge_map.append((img, True))
            else:
                raise ValueError(
                    f"edge {j} endpoints do not land on the endpoints of edge {img}"
                )
        return cls(domain, codomain, vertex_map, edge_map)

    def image_vertex(self, v):
        return self.vertex_map[v]

    def image_edge(self, j):
        return self.edge_map[j][0]

    def image_cell(self, code):
        """Map a domain cell code to a codomain cell code."""
        if code < self.domain.nv:
            return self.vertex_map[code]
        return self.codomain.nv + self.edge_map[code - self.domain.nv][0]

    def __repr__(self):
        return (
            f"GraphMorphism({self.domain.nv}v/{self.domain.ne}e -> "
            f"{self.codomain.nv}v/{self.codomain.ne}e)"
        )


def identity_morphism(g):
    return GraphMorphism(g, g, range(g.nv), [(j, False) for j in range(g.ne)])


def compose_morphisms(outer, inner):
    """The composite applying ``inner`` first, then ``outer``."""
    if inner.codomain != outer.domain:
        raise ValueError("codomain of inner morphism must equal domain of outer")
    vmap = [outer.vertex_map[v] for v in inner.vertex_map]
    emap = []
    for img, flip in inner.edge_map:
        img2, flip2 = outer.edge_map[img]
        emap.append((img2, flip ^ flip2))
    return GraphMorphism(inner.domain, outer.codomain, vmap, emap)


@dataclass(frozen=True)
class MorphismClass:
    """Classification flags for a graph morphism.

    ``degree`` is the common vertex-fiber cardinality, set when the map is
    a covering and the fibers agree (always the case over a connected
    codomain).
    """

    injective: bool
    immersion: bool
    covering: bool
    surjective: bool
    degree: int | None = None


def classify_morphism(f):
    """Classify a morphism as injective / immersion / covering / surjective.

    An immersion is injective on every vertex star, a covering bijective on
    every vertex star.

    >>> k5 = standard_graph("complete", [5])
    >>> classify_morphism(identity_morphism(k5))
    MorphismClass(injective=True, immersion=True, covering=True, surjective=True, degree=1)
    """
    dom, cod = f.domain, f.codomain
    injective = (
        len(set(f.vertex_map)) == dom.nv
        and len({img for img, _ in f.edge_map}) == dom.ne
    )
    immersion = True
    covering = True
    for v in range(dom.nv):
        star = [f.image_edge(j) for j in dom.incident[v]]
        if len(set(star)) != len(star):
            immersion = False
            covering = False
            break
        if len(star) != cod.degree(f.vertex_map[v]):
            covering = False
    surjective = (
        set(f.vertex_map) == set(range(cod.nv))
        and {img for img, _ in f.edge_map} == set(range(cod.ne))
    )
    degree = None
    if covering and cod.nv > 0:
        fibers = [0] * cod.nv
        for img in f.vertex_map:
            fibers[img] += 1
        if len(set(fibers)) == 1:
            degree = fibers[0]
    return MorphismClass(injective, immersion, covering, surjective, degree)
