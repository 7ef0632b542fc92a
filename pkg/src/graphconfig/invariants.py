"""Exact algebraic invariants: Euler characteristic, integer homology,
fundamental-group presentations, and closed-surface recognition.

All linear algebra is over the integers.  Smith normal form uses exact
arbitrary-precision arithmetic (numpy object arrays holding Python ints)
and always pivots on a smallest-magnitude nonzero entry, which keeps
intermediate growth tame on the sparse boundary matrices produced here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def smith_normal_form(matrix):
    """Invariant factors of an integer matrix, in divisibility order.

    Returns the list ``[d1, d2, ...]`` of positive diagonal entries with
    ``d1 | d2 | ...``; their count is the rank.

    >>> smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    [2, 2, 156]
    """
    A = np.array(matrix, dtype=object)
    if A.ndim != 2:
        raise ValueError("expected a 2-dimensional matrix")
    m, n = A.shape
    if m == 0 or n == 0:
        return []
    A = A.copy()
    factors = []
    t = 0
    while t < min(m, n):
        sub = A[t:, t:]
        rows, cols = np.nonzero(sub)
        if len(rows) == 0:
            break
        k = int(np.argmin([abs(sub[i, j]) for i, j in zip(rows, cols)]))
        pi, pj = t + int(rows[k]), t + int(cols[k])
        A[[t, pi], :] = A[[pi, t], :]
        A[:, [t, pj]] = A[:, [pj, t]]
        while True:
            # clear the pivot column, then the pivot row; a nonzero
            # remainder becomes a strictly smaller pivot, so this loop
            # terminates
            while True:
                col = A[t + 1 :, t]
                if not col.any() and not A[t, t + 1 :].any():
                    break
                if A[t, t] < 0:
                    A[t, :] = -A[t, :]
                piv = A[t, t]
                nz = np.nonzero(col)[0]
                if len(nz):
                    smallest = min(nz, key=lambda i: abs(col[i]))
                    if abs(col[smallest]) < piv:
                        A[[t, t + 1 + smallest], :] = A[[t + 1 + smallest, t], :]
                        continue
                    q = col // piv
                    A[t + 1 :, :] -= np.outer(q, A[t, :])
                    continue
                row = A[t, t + 1 :]
                nz = np.nonzero(row)[0]
                smallest = min(nz, key=lambda j: abs(row[j]))
                if abs(row[smallest]) < piv:
                    A[:, [t, t + 1 + smallest]] = A[:, [t + 1 + smallest, t]]
                    continue
                q = row // piv
                A[:, t + 1 :] -= np.outer(A[:, t], q)
            piv = A[t, t]
            rem = A[t + 1 :, t + 1 :] % piv
            bad = np.nonzero(rem.any(axis=1))[0] if rem.size else []
            if len(bad) == 0:
                break
            A[t, :] += A[t + 1 + int(bad[0]), :]
        factors.append(int(abs(A[t, t])))
        t += 1
    return factors


def integer_rank(matrix):
    """Rank of an integer matrix (number of nonzero invariant factors)."""
    return len(smith_normal_form(matrix))


@dataclass(frozen=True)
class HomologyProfile:
    """Betti numbers and torsion coefficients per dimension.

    ``torsion[d]`` lists the invariant factors greater than one of the
    d-th homology group, in divisibility order.
    """

    betti: tuple
    torsion: tuple

    def euler_characteristic(self):
        return sum((-1) ** d * b for d, b in enumerate(self.betti))

    def __str__(self):
        parts = []
        for d, b in enumerate(self.betti):
            tor = "".join(f" + Z/{q}" for q in self.torsion[d])
            parts.append(f"H_{d} = Z^{b}{tor}")
        return "; ".join(parts) if parts else "trivial"


def euler_characteristic(X):
    """Alternating sum of cell counts."""
    return X.euler_characteristic()


def homology(X):
    """Integer homology of a cube complex from Smith normal forms.

    >>> from .graphs import standard_graph
    >>> from .spaces import build_ordered
    >>> print(homology(build_ordered(standard_graph("complete", [3]), 2)))
    H_0 = Z^1; H_1 = Z^1
    """
    counts = X.f_vector()
    if not counts:
        return HomologyProfile((), ())
    top = len(counts) - 1
    snfs = [smith_normal_form(X.boundary_matrix(d)) for d in range(1, top + 1)]
    ranks = [0] + [len(s) for s in snfs] + [0]
    betti = []
    torsion = []
    for d in range(top + 1):
        betti.append(counts[d] - ranks[d] - ranks[d + 1])
        if d < top:
            torsion.append(tuple(q for q in snfs[d] if q > 1))
        else:
            torsion.append(())
    return HomologyProfile(tuple(betti), tuple(torsion))


@dataclass(frozen=True)
class Presentation:
    """Group presentation: ``n_generators`` and relator words.

    Relators are tuples of nonzero integers; letter ``i + 1`` is the i-th
    generator, negative for its inverse.  ``generator_edges`` records which
    1-cell each generator came from.
    """

    n_generators: int
    relators: tuple
    generator_edges: tuple = ()

    def __post_init__(self):
        for word in self.relators:
            for letter in word:
                if letter == 0 or abs(letter) > self.n_generators:
                    raise ValueError(f"relator letter {letter} out of range")

    def abelianization(self):
        """(free rank, torsion coefficients) of the abelianized group."""
        exponents = [[0] * self.n_generators for _ in self.relators]
        for r, word in enumerate(self.relators):
            for letter in word:
                exponents[r][abs(letter) - 1] += 1 if letter > 0 else -1
        if not self.relators or self.n_generators == 0:
            return self.n_generators, ()
        factors = smith_normal_form(exponents)
        rank = self.n_generators - len(factors)
        return rank, tuple(q for q in factors if q > 1)

    def simplified(self):
        """Tietze pass: drop trivial relators, eliminate length-<=2 ones.

        A relator of length one kills its generator; a two-letter relator
        on distinct generators substitutes one for the other.  Torsion
        relators such as ``g*g`` are kept.
        """
        relators = [list(w) for w in self.relators]
        alive = list(range(1, self.n_generators + 1))

        def reduce_word(word):
            out = []
            for letter in word:
                if out and out[-1] == -letter:
                    out.pop()
                else:
                    out.append(letter)
            while len(out) >= 2 and out[0] == -out[-1]:
                out = out[1:-1]
            return out

        changed = True
        while changed:
            changed = False
            relators = [reduce_word(w) for w in relators]
            relators = [w for w in relators if w]
            for w in relators:
                if len(w) == 1:
                    g = abs(w[0])
                    relators = [[x for x in v if abs(x) != g] for v in relators]
                    alive.remove(g)
                    changed = True
                    break
                if len(w) == 2 and abs(w[0]) != abs(w[1]):
                    # w reads a*b = 1, so b = a^-1; rewrite b away
                    a, b = w
                    g = abs(b)
                    sub = [-a] if b > 0 else [a]
                    new = []
                    for v in relators:
                        if v is w:
                            continue
                        out = []
                        for x in v:
                            if abs(x) == g:
                                out.extend(sub if x > 0 else [-s for s in sub])
                            else:
                                out.append(x)
                        new.append(out)
                    relators = new
                    alive.remove(g)
                    changed = True
                    break
        rename = {g: i + 1 for i, g in enumerate(alive)}
        words = tuple(
            tuple(rename[x] if x > 0 else -rename[-x] for x in w) for w in relators
        )
        edges = tuple(
            self.generator_edges[g - 1] for g in alive
        ) if self.generator_edges else ()
        return Presentation(len(alive), words, edges)

    def __str__(self):
        rels = ", ".join(
            "".join(f"x{abs(l)}" + ("'" if l < 0 else "") for l in w)
            for w in self.relators
        )
        return f"<x1..x{self.n_generators} | {rels or '-'}>"


def _spanning_tree(X, component):
    """BFS tree of a component's 1-skeleton from its least vertex.

    Returns (vertices in BFS order, set of tree 1-cell ids).
    """
    comps = X.components()
    verts = [i for i, c in enumerate(comps.labels[0]) if c == component]
    if not verts:
        raise ValueError(f"no component {component}")
    incident = [[] for _ in X.cells[0]]
    if len(X.cells) > 1:
        for i, axes in enumerate(X.faces[1]):
            (_pos, tail, head) = axes[0]
            incident[tail].append((i, head))
            incident[head].append((i, tail))
    root = min(verts)
    seen = {root}
    order = [root]
    tree = set()
    queue = [root]
    while queue:
        nxt = []
        for u in queue:
            for cell, w in sorted(incident[u]):
                if w not in seen:
                    seen.add(w)
                    order.append(w)
                    tree.add(cell)
                    nxt.append(w)
        queue = nxt
    return order, tree


def pi1_presentation(X, component=0):
    """Fundamental-group presentation of one component of a cube complex.

    One generator per non-tree 1-cell of a breadth-first spanning tree
    rooted at the component's least vertex; one relator per square, its
    boundary word read with tree edges collapsed.  Cubes of dimension
    three and higher do not affect the group.

    >>> from .graphs import standard_graph
    >>> from .spaces import build_ordered
    >>> pi1_presentation(build_ordered(standard_graph("complete", [3]), 2))
    Presentation(n_generators=1, relators=(), generator_edges=(5,))
    """
    comps = X.components()
    _order, tree = _spanning_tree(X, component)
    gens = {}
    gen_edges = []
    if len(X.cells) > 1:
        for i in range(len(X.cells[1])):
            if comps.labels[1][i] == component and i not in tree:
                gens[i] = len(gens) + 1
                gen_edges.append(i)
    relators = []
    if len(X.cells) > 2:
        for s in range(len(X.cells[2])):
            if comps.labels[2][s] != component:
                continue
            (_p1, a_tail, a_head) = X.faces[2][s][0]
            (_p2, b_tail, b_head) = X.faces[2][s][1]
            # boundary loop: first axis at second's tail, second axis at
            # first's head, then back across the opposite facets
            word_cells = [(a_tail, +1), (b_head, +1), (a_head, -1), (b_tail, -1)]
            word = []
            for cell, sign in word_cells:
                if cell in gens:
                    word.append(sign * gens[cell])
            relators.append(tuple(word))
    return Presentation(len(gens), tuple(relators), tuple(gen_edges))


@dataclass(frozen=True)
class SurfaceReport:
    """Result of the closed-surface test on one component.

    When the test fails, ``witness`` locates an offending cell (an edge in
    the wrong number of 2-cells, or a vertex whose link is not a circle)
    and the remaining fields are None.  For non-orientable surfaces the
    crosscap count is reported instead of the genus.
    """

    is_surface: bool
    chi: int
    orientable: bool | None = None
    genus: int | None = None
    crosscaps: int | None = None
    witness: object = None

    def __str__(self):
        if not self.is_surface:
            return f"not a closed surface (witness {self.witness})"
        if self.orientable:
            return f"closed orientable surface of genus {self.genus} (chi={self.chi})"
        return f"closed non-orientable surface with {self.crosscaps} crosscaps (chi={self.chi})"


def _orientable_from_signs(n_faces, edge_faces):
    """2-color faces so adjacent ones induce opposite edge orientations.

    ``edge_faces`` maps each interior edge to its two (face, sign)
    incidences.  Returns True when a consistent assignment exists.
    """
    orient = [0] * n_faces
    adj = [[] for _ in range(n_faces)]
    for (f1, s1), (f2, s2) in edge_faces:
        # compatible orientations must make the two induced signs cancel
        rel = -1 if s1 == s2 else 1
        adj[f1].append((f2, rel))
        adj[f2].append((f1, rel))
    for start in range(n_faces):
        if orient[start]:
            continue
        orient[start] = 1
        stack = [start]
        while stack:
            u = stack.pop()
            for w, rel in adj[u]:
                want = orient[u] * rel
                if orient[w] == 0:
                    orient[w] = want
                    stack.append(w)
                elif orient[w] != want:
                    return False
    return True


def surface_classify(X, component=0):
    """Closed-surface test and classification for one component.

    A component passes when every 1-cell lies in exactly two 2-cells and
    every vertex link is a single cycle; orientability is decided by
    propagating square orientations across shared edges, and the genus
    comes from the Euler characteristic.
    """
    comps = X.components()
    if not 0 <= component < comps.count:
        raise ValueError(f"no component {component}")
    sub = X.subcomplex(component)
    chi = sub.euler_characteristic()
    if sub.dim > 2:
        return SurfaceReport(False, chi, witness=(sub.dim, 0, "cell of dimension > 2"))
    square_count = sub.coface_counts(1) if sub.dim >= 1 else []
    for i, c in enumerate(square_count):
        if c != 2:
            return SurfaceReport(
                False, chi, witness=(1, i, f"edge lies in {c} two-cells")
            )
    if sub.dim < 1 and sub.n_cells(0):
        return SurfaceReport(False, chi, witness=(0, 0, "isolated vertex"))
    for v in range(sub.n_cells(0)):
        if not sub.vertex_link(v).is_single_cycle():
            return SurfaceReport(
                False, chi, witness=(0, v, "vertex link is not a circle")
            )
    # orientability via the signed boundary of the squares
    mat = sub.boundary_matrix(2)
    edge_faces = []
    for e in range(mat.shape[0]):
        inc = [(int(j), int(mat[e, j])) for j in np.nonzero(mat[e])[0]]
        if len(inc) == 1 and abs(inc[0][1]) == 2:
            # one square passes through the edge twice with the same sign
            return SurfaceReport(False, chi, orientable=False, crosscaps=2 - chi)
        if len(inc) == 2:
            edge_faces.append((inc[0], inc[1]))
    orientable = _orientable_from_signs(sub.n_cells(2), edge_faces)
    if orientable:
        genus = (2 - chi) // 2
        return SurfaceReport(True, chi, True, genus=genus)
    return SurfaceReport(True, chi, False, crosscaps=2 - chi)


def classify_simplicial_surface(K):
    """Closed-surface test for a simplicial 2-complex (for example a link).

    Mirrors :func:`surface_classify` on triangle complexes: every edge in
    exactly two triangles, every vertex link a single cycle; orientability
    by matching induced edge directions of adjacent triangles.
    """
    chi = K.euler_characteristic()
    if K.is_empty():
        return SurfaceReport(False, 0, witness=(None, None, "empty complex"))
    if K.dim > 2:
        return SurfaceReport(False, chi, witness=(K.dim, 0, "simplex of dimension > 2"))
    if K.dim < 2:
        return SurfaceReport(False, chi, witness=(K.dim, 0, "no triangles"))
    triangles = K.faces[2]
    edge_incidence = {}
    for idx, tri in enumerate(triangles):
        a, b, c = tri
        # even permutations of (a, b, c) induce directions ab, bc, ca
        for edge, direction in (((a, b), +1), ((b, c), +1), ((a, c), -1)):
            edge_incidence.setdefault(edge, []).append((idx, direction))
    for edge in K.faces[1]:
        inc = edge_incidence.get(edge, [])
        if len(inc) != 2:
            return SurfaceReport(
                False, chi, witness=(1, edge, f"edge lies in {len(inc)} triangles")
            )
    verts_in_tri = {v for tri in triangles for v in tri}
    for v in K.vertices:
        if v not in verts_in_tri:
            return SurfaceReport(False, chi, witness=(0, v, "vertex in no triangle"))
        star_edges = [
            tuple(sorted((a, b)))
            for tri in triangles
            if v in tri
            for a, b in [[u for u in tri if u != v]]
        ]
        link = _cycle_check(star_edges)
        if not link:
            return SurfaceReport(
                False, chi, witness=(0, v, "vertex link is not a circle")
            )
    edge_faces = list(edge_incidence.values())
    orientable = _orientable_from_signs(len(triangles), edge_faces)
    if orientable:
        return SurfaceReport(True, chi, True, genus=(2 - chi) // 2)
    return SurfaceReport(True, chi, False, crosscaps=2 - chi)


def _cycle_check(edges):
    """True when the multigraph given by ``edges`` is one single cycle."""
    if not edges:
        return False
    adj = {}
    for a, b in edges:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if any(len(nbrs) != 2 for nbrs in adj.values()):
        return False
    start = next(iter(adj))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj) and len(edges) == len(adj)
