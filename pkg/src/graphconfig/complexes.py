"""Graded cube complexes over a colored graph, and simplicial links.

A cube here is an n-tuple of cells of the underlying graph, pairwise
color-disjoint; its dimension is the number of edge factors.  Complexes
store their cells grade by grade in a fixed canonical order (lexicographic
on cell codes, vertices before edges) together with face index arrays, so
boundary matrices and links read straight off the stored data.

Both ordered complexes (tuples) and unordered quotients (canonically
sorted representatives of permutation orbits) are handled by the same
class; the ``ordered`` flag only changes how faces and growth moves are
canonicalized.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def _pairwise_color_disjoint(graph, cells):
    union = 0
    for code in cells:
        m = graph.cell_masks[code]
        if m & union:
            return False
        union |= m
    return True


class CubeComplex:
    """A face-closed set of color-disjoint cell tuples, graded by dimension.

    ``cells[d]`` lists the d-cubes as factor-code tuples in canonical
    order; ``index[d]`` inverts the listing.  ``faces[d][i]`` holds, for
    each edge factor of cube ``i`` in position order, a triple
    ``(position, tail_face_id, head_face_id)`` of facet ids one dimension
    down.  Construction validates admissibility and closure under faces
    and raises ``ValueError`` when either fails.

    Instances are immutable once built; all queries are read-only.
    """

    def __init__(self, graph, n, cells, ordered=True):
        self.graph = graph
        self.n = int(n)
        self.ordered = bool(ordered)
        if self.n < 1:
            raise ValueError("tuple length n must be at least 1")

        by_dim = {}
        seen = set()
        for cube in cells:
            cube = tuple(cube)
            if len(cube) != self.n:
                raise ValueError(f"cube {cube} does not have {self.n} factors")
            for code in cube:
                if not 0 <= code < graph.n_cells:
                    raise ValueError(f"cube {cube} references unknown cell {code}")
            if not ordered:
                cube = tuple(sorted(cube))
            if cube in seen:
                raise ValueError(f"duplicate cube {cube}")
            seen.add(cube)
            if not _pairwise_color_disjoint(graph, cube):
                raise ValueError(f"cube {cube} is not color-disjoint")
            d = sum(1 for c in cube if graph.is_edge_code(c))
            by_dim.setdefault(d, []).append(cube)

        top = max(by_dim) if by_dim else 0
        self.cells = [sorted(by_dim.get(d, [])) for d in range(top + 1)]
        self.index = [
            {cube: i for i, cube in enumerate(grade)} for grade in self.cells
        ]
        self.faces = [[]]
        for d in range(1, top + 1):
            grade_faces = []
            for cube in self.cells[d]:
                axes = []
                for pos, code in enumerate(cube):
                    if not graph.is_edge_code(code):
                        continue
                    t, h = graph.endpoints(code)
                    tail = self._replace(cube, pos, t)
                    head = self._replace(cube, pos, h)
                    try:
                        axes.append((pos, self.index[d - 1][tail], self.index[d - 1][head]))
                    except KeyError as missing:
                        raise ValueError(
                            f"not closed under faces: cube {cube} is missing "
                            f"facet {missing.args[0]}"
                        ) from None
                grade_faces.append(tuple(axes))
            self.faces.append(grade_faces)
        self._components = None

    def _replace(self, cube, pos, code):
        out = cube[:pos] + (code,) + cube[pos + 1 :]
        return out if self.ordered else tuple(sorted(out))

    # -- size and basic invariants -------------------------------------

    @property
    def dim(self):
        for d in range(len(self.cells) - 1, -1, -1):
            if self.cells[d]:
                return d
        return -1

    def f_vector(self):
        """Cell counts per dimension, trailing zeros trimmed."""
        counts = [len(grade) for grade in self.cells]
        while len(counts) > 1 and counts[-1] == 0:
            counts.pop()
        if counts == [0]:
            return ()
        return tuple(counts)

    def n_cells(self, d=None):
        if d is None:
            return sum(len(grade) for grade in self.cells)
        if 0 <= d < len(self.cells):
            return len(self.cells[d])
        return 0

    def euler_characteristic(self):
        return sum((-1) ** d * len(grade) for d, grade in enumerate(self.cells))

    def cell_labels(self, d, i):
        """The cube's factors as ('v'|'e', id) pairs."""
        return tuple(self.graph.cell_label(c) for c in self.cells[d][i])

    # -- boundary ------------------------------------------------------

    def boundary_matrix(self, d):
        """Signed integer boundary matrix from (d)-cells to (d-1)-cells.

        For the i-th edge factor of a cube (0-based, in position order) the
        head facet receives ``(-1)**i`` and the tail facet the opposite
        sign, using the graph's stored edge orientations.
        """
        if not 1 <= d <= self.dim:
            raise ValueError(f"no boundary in dimension {d}")
        mat = np.zeros((len(self.cells[d - 1]), len(self.cells[d])), dtype=np.int64)
        for j, axes in enumerate(self.faces[d]):
            for i, (_pos, tail, head) in enumerate(axes):
                sign = 1 if i % 2 == 0 else -1
                mat[head, j] += sign
                mat[tail, j] -= sign
        return mat

    def coface_counts(self, d):
        """How many (d+1)-cells have each d-cell as a facet."""
        counts = [0] * len(self.cells[d])
        if d + 1 < len(self.cells):
            for axes in self.faces[d + 1]:
                for _pos, tail, head in axes:
                    counts[tail] += 1
                    counts[head] += 1
        return counts

    def cell_corners(self, d, i):
        """Sorted ids of the 2**d corner vertices of a cube."""
        corners = set()
        stack = [self.cells[d][i]]
        while stack:
            cube = stack.pop()
            for pos, code in enumerate(cube):
                if self.graph.is_edge_code(code):
                    t, h = self.graph.endpoints(code)
                    stack.append(self._replace(cube, pos, t))
                    stack.append(self._replace(cube, pos, h))
                    break
            else:
                corners.add(cube)
        return sorted(self.index[0][c] for c in corners)

    # -- connectivity ----------------------------------------------------

    def components(self):
        """Component labeling of every cell, numbered by least vertex."""
        if self._components is not None:
            return self._components
        nv = len(self.cells[0])
        adj = [[] for _ in range(nv)]
        if len(self.cells) > 1:
            for axes in self.faces[1]:
                (_pos, tail, head) = axes[0]
                adj[tail].append(head)
                adj[head].append(tail)
        labels0 = [-1] * nv
        comp = 0
        for start in range(nv):
            if labels0[start] != -1:
                continue
            labels0[start] = comp
            stack = [start]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if labels0[w] == -1:
                        labels0[w] = comp
                        stack.append(w)
            comp += 1
        labels = [labels0]
        for d in range(1, len(self.cells)):
            grade = []
            for axes in self.faces[d]:
                grade.append(labels[d - 1][axes[0][1]])
            labels.append(grade)
        self._components = Components(comp, tuple(tuple(g) for g in labels))
        return self._components

    def subcomplex(self, component):
        """The full subcomplex on one connected component, reindexed."""
        comps = self.components()
        if not 0 <= component < comps.count:
            raise ValueError(f"no component {component}")
        kept = []
        for d, grade in enumerate(self.cells):
            for i, cube in enumerate(grade):
                if comps.labels[d][i] == component:
                    kept.append(cube)
        return CubeComplex(self.graph, self.n, kept, ordered=self.ordered)

    # -- links -----------------------------------------------------------

    def growth_moves(self, d, i):
        """Single-factor edge extensions of a cube that stay in the complex.

        A move is a pair ``(slot, edge_code)``: the vertex factor at
        ``slot`` grows into an incident edge.  These are exactly the
        vertices of the cube's link.
        """
        cube = self.cells[d][i]
        g = self.graph
        if d + 1 >= len(self.cells):
            return []
        nxt = self.index[d + 1]
        moves = []
        for slot, code in enumerate(cube):
            if g.is_edge_code(code):
                continue
            for j in g.incident[code]:
                grown = self._replace(cube, slot, g.edge_cell(j))
                if grown in nxt:
                    moves.append((slot, g.edge_cell(j)))
        moves.sort()
        return moves

    def _grow(self, cube, moves):
        out = list(cube)
        for slot, edge_code in moves:
            out[slot] = edge_code
        out = tuple(out)
        return out if self.ordered else tuple(sorted(out))

    def cell_link(self, d, i):
        """Link of a cube as a simplicial complex on its growth moves.

        A set of moves spans a simplex precisely when the moves grow
        pairwise distinct slots and the fully grown tuple is again a cell
        of the complex.
        """
        if not (0 <= d < len(self.cells) and 0 <= i < len(self.cells[d])):
            raise ValueError(f"no {d}-cell with id {i}")
        cube = self.cells[d][i]
        moves = self.growth_moves(d, i)
        levels = [[(m,) for m in moves]]
        k = 1
        while levels[-1] and d + k + 1 < len(self.cells):
            nxt_index = self.index[d + k + 1]
            level = []
            for simplex in levels[-1]:
                used = {m[0] for m in simplex}
                for m in moves:
                    if m <= simplex[-1] or m[0] in used:
                        continue
                    grown = self._grow(cube, simplex + (m,))
                    if grown in nxt_index:
                        level.append(simplex + (m,))
            levels.append(level)
            k += 1
        while levels and not levels[-1]:
            levels.pop()
        return SimplicialComplex(levels)

    def vertex_link(self, i):
        """Link of a 0-cell, with link vertices labeled by incident 1-cells."""
        link = self.cell_link(0, i)
        cube = self.cells[0][i]
        rename = {}
        for move in link.vertices:
            rename[move] = self.index[1][self._grow(cube, (move,))]
        return link.relabel(rename)

    # -- validation ------------------------------------------------------

    def validate(self):
        """Structural self-checks; raises AssertionError on violation."""
        for d in range(1, len(self.cells)):
            for i, axes in enumerate(self.faces[d]):
                assert len(axes) == d, f"{d}-cell {i} does not have {d} axes"
                facet_ids = [x for _, t, h in axes for x in (t, h)]
                assert len(set(facet_ids)) == 2 * d, f"{d}-cell {i} has repeated facets"
            if self.cells[d]:
                assert len(self.cell_corners(d, 0)) == 2 ** d
        for d in range(2, self.dim + 1):
            prod = self.boundary_matrix(d - 1) @ self.boundary_matrix(d)
            assert not prod.any(), f"boundary squared is nonzero in dimension {d}"
        return True

    def __repr__(self):
        kind = "ordered" if self.ordered else "unordered"
        return f"CubeComplex(n={self.n}, {kind}, f={self.f_vector()})"


@dataclass(frozen=True)
class Components:
    """Connected-component labeling of a complex, per dimension."""

    count: int
    labels: tuple

    def cells_in(self, d, component):
        return [i for i, c in enumerate(self.labels[d]) if c == component]


class SimplicialComplex:
    """Finite abstract simplicial complex with sortable vertex labels.

    ``faces[k]`` is the sorted list of k-simplices, each a sorted tuple of
    vertex labels.  The face set is downward closed.
    """

    def __init__(self, faces_by_dim):
        self.faces = []
        for level in faces_by_dim:
            level = sorted({tuple(sorted(s)) for s in level})
            self.faces.append(tuple(level))
        while self.faces and not self.faces[-1]:
            self.faces.pop()
        self._check_closure()

    def _check_closure(self):
        for k in range(1, len(self.faces)):
            below = set(self.faces[k - 1])
            for simplex in self.faces[k]:
                for drop in range(len(simplex)):
                    sub = simplex[:drop] + simplex[drop + 1 :]
                    if sub not in below:
                        raise ValueError(
                            f"not downward closed: {simplex} misses face {sub}"
                        )

    @classmethod
    def from_simplices(cls, simplices):
        """Build the downward closure of the given simplices."""
        by_dim = {}
        stack = [tuple(sorted(s)) for s in simplices]
        seen = set(stack)
        while stack:
            s = stack.pop()
            by_dim.setdefault(len(s) - 1, set()).add(s)
            if len(s) > 1:
                for drop in range(len(s)):
                    sub = s[:drop] + s[drop + 1 :]
                    if sub not in seen:
                        seen.add(sub)
                        stack.append(sub)
        top = max(by_dim) if by_dim else -1
        return cls([sorted(by_dim.get(k, ())) for k in range(top + 1)])

    @property
    def vertices(self):
        return tuple(v for (v,) in self.faces[0]) if self.faces else ()

    @property
    def dim(self):
        return len(self.faces) - 1

    def n_faces(self, k=None):
        if k is None:
            return sum(len(level) for level in self.faces)
        if 0 <= k < len(self.faces):
            return len(self.faces[k])
        return 0

    def is_empty(self):
        return not self.faces

    def has_face(self, simplex):
        simplex = tuple(sorted(simplex))
        k = len(simplex) - 1
        return 0 <= k < len(self.faces) and simplex in set(self.faces[k])

    def euler_characteristic(self):
        return sum((-1) ** k * len(level) for k, level in enumerate(self.faces))

    def adjacency(self):
        """Vertex adjacency sets of the 1-skeleton."""
        adj = {v: set() for v in self.vertices}
        if len(self.faces) > 1:
            for a, b in self.faces[1]:
                adj[a].add(b)
                adj[b].add(a)
        return adj

    def degrees(self):
        return {v: len(nbrs) for v, nbrs in self.adjacency().items()}

    def triangles(self):
        """All 3-cliques of the 1-skeleton, via sorted neighbor intersection."""
        adj = self.adjacency()
        out = []
        if len(self.faces) > 1:
            for a, b in self.faces[1]:
                for c in sorted(adj[a] & adj[b]):
                    if c > b:
                        out.append((a, b, c))
        return out

    def component_count(self):
        adj = self.adjacency()
        seen = set()
        comps = 0
        for start in self.vertices:
            if start in seen:
                continue
            comps += 1
            stack = [start]
            seen.add(start)
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
        return comps

    def is_single_cycle(self):
        """True for a nonempty, connected 1-complex with all degrees 2."""
        if self.is_empty() or self.dim != 1:
            return False
        if self.component_count() != 1:
            return False
        return all(deg == 2 for deg in self.degrees().values())

    def relabel(self, mapping):
        return SimplicialComplex(
            [
                [tuple(mapping[v] for v in simplex) for simplex in level]
                for level in self.faces
            ]
        )

    def __repr__(self):
        return f"SimplicialComplex(f={tuple(len(l) for l in self.faces)})"
