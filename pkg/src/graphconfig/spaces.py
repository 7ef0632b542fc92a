"""Building configuration spaces of colored graphs and their induced maps.

The n-point configuration complex collects every n-tuple of cells whose
closures have pairwise disjoint color sets.  The unordered variant is the
quotient by the free coordinate-permutation action, represented by the
lexicographically least member of each orbit.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import CubeComplex, _pairwise_color_disjoint
from .graphs import classify_morphism


def color_disjoint(graph, cells):
    """True when the closed cells have pairwise disjoint color sets.

    With an injective coloring this is the plain disjointness of closures.

    >>> from .graphs import standard_graph
    >>> k3 = standard_graph("complete", [3])
    >>> color_disjoint(k3, [k3.edge_cell(2), k3.vertex_cell(0)])
    True
    >>> color_disjoint(k3, [k3.vertex_cell(0), k3.vertex_cell(0)])
    False
    """
    for code in cells:
        if not 0 <= code < graph.n_cells:
            raise ValueError(f"unknown cell code {code}")
    return _pairwise_color_disjoint(graph, cells)


def _enumerate_tuples(graph, n, distinct_increasing):
    """Backtracking enumeration of admissible tuples in lexicographic order.

    A partial tuple that already violates color-disjointness is never
    extended.  With ``distinct_increasing`` the factors are forced strictly
    increasing, which enumerates exactly one representative per orbit of
    the coordinate-permutation action.
    """
    masks = graph.cell_masks
    ncells = graph.n_cells
    out = []
    prefix = [0] * n

    def extend(depth, used, start):
        for code in range(start, ncells):
            m = masks[code]
            if m & used:
                continue
            prefix[depth] = code
            if depth + 1 == n:
                out.append(tuple(prefix))
            else:
                extend(depth + 1, used | m, code + 1 if distinct_increasing else 0)

    if n > 0:
        extend(0, 0, 0)
    return out


def ordered_tuple_bound(graph, n):
    """Cheap upper bound for the number of admissible ordered n-tuples.

    Factors of an admissible tuple are pairwise distinct, so the falling
    factorial on the total cell count bounds the enumeration size.
    """
    bound = 1
    for i in range(n):
        bound *= max(graph.n_cells - i, 0)
    return bound


def build_ordered(graph, n):
    """The ordered n-point configuration complex of a colored graph.

    >>> from .graphs import standard_graph
    >>> build_ordered(standard_graph("complete", [3]), 2).f_vector()
    (6, 6)
    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be at least 1")
    return CubeComplex(graph, n, _enumerate_tuples(graph, n, False), ordered=True)


def build_unordered(graph, n):
    """The unordered quotient: orbits of the coordinate-permutation action.

    Orbits are free (admissible factors are pairwise distinct), so every
    orbit has exactly n! ordered members and the quotient is again a cube
    complex.

    >>> from .graphs import standard_graph
    >>> build_unordered(standard_graph("complete", [3]), 2).f_vector()
    (3, 3)
    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be at least 1")
    return CubeComplex(graph, n, _enumerate_tuples(graph, n, True), ordered=False)


@dataclass
class CellularMap:
    """Dimension-preserving cellular map between two cube complexes.

    ``cell_map[d][i]`` is the id of the image of the i-th d-cell.
    """

    source: CubeComplex
    target: CubeComplex
    cell_map: tuple

    def image(self, d, i):
        return self.cell_map[d][i]

    def is_face_compatible(self):
        """Check that images of facets are facets of images."""
        for d in range(1, len(self.source.cells)):
            if d >= len(self.cell_map):
                break
            for i, axes in enumerate(self.source.faces[d]):
                img = self.cell_map[d][i]
                img_facets = {
                    x for _, t, h in self.target.faces[d][img] for x in (t, h)
                }
                for _pos, tail, head in axes:
                    if self.cell_map[d - 1][tail] not in img_facets:
                        return False
                    if self.cell_map[d - 1][head] not in img_facets:
                        return False
        return True


def induced_map(f, n, ordered=True, source=None, target=None):
    """The cellular map on configuration complexes acting factorwise.

    Color-disjointness is preserved by color-compatible morphisms, so the
    factorwise image of every admissible tuple is admissible and the map is
    total.  Prebuilt ``source``/``target`` complexes may be supplied to
    avoid rebuilding.
    """
    build = build_ordered if ordered else build_unordered
    if source is None:
        source = build(f.domain, n)
    if target is None:
        target = build(f.codomain, n)
    if source.graph is not f.domain and source.graph != f.domain:
        raise ValueError("source complex was not built from the morphism's domain")
    if target.graph is not f.codomain and target.graph != f.codomain:
        raise ValueError("target complex was not built from the morphism's codomain")
    cell_map = []
    for d, grade in enumerate(source.cells):
        row = []
        for cube in grade:
            img = tuple(f.image_cell(code) for code in cube)
            if not ordered:
                img = tuple(sorted(img))
            row.append(target.index[d][img])
        cell_map.append(tuple(row))
    return CellularMap(source, target, tuple(cell_map))


@dataclass
class PropertyCheck:
    name: str
    applicable: bool
    passed: bool
    witness: object = None

    def __str__(self):
        if not self.applicable:
            return f"{self.name}: n/a"
        status = "ok" if self.passed else f"FAIL (witness {self.witness})"
        return f"{self.name}: {status}"


@dataclass
class InducedReport:
    """Outcome of checking that morphism properties propagate factorwise."""

    n: int
    morphism_class: object
    cellular_map: CellularMap | None = None
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.passed for c in self.checks if c.applicable)

    def source_chi(self):
        return self.cellular_map.source.euler_characteristic()

    def target_chi(self):
        return self.cellular_map.target.euler_characteristic()

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __str__(self):
        lines = [f"induced map on {self.n}-point configuration spaces:"]
        lines += [f"  {c}" for c in self.checks]
        return "\n".join(lines)


def _incident_one_cells(X):
    """For each 0-cell, the ids of 1-cells having it as an endpoint."""
    out = [[] for _ in X.cells[0]]
    if len(X.cells) > 1:
        for i, axes in enumerate(X.faces[1]):
            (_pos, tail, head) = axes[0]
            out[tail].append(i)
            out[head].append(i)
    return out


def verify_induced_properties(f, n, ordered=True, source=None, target=None):
    """Verify on cell data that a morphism's class propagates factorwise.

    Checks cellularity, then injectivity, immersion (star injectivity),
    covering (star bijectivity plus equal fibers of size degree**n over
    every cell) and surjectivity, each only when the underlying morphism
    has the property.  Failures carry a witness cell.
    """
    cls = classify_morphism(f)
    F = induced_map(f, n, ordered=ordered, source=source, target=target)
    src, tgt = F.source, F.target
    report = InducedReport(n=n, morphism_class=cls, cellular_map=F)
    report.checks.append(
        PropertyCheck("cellular", True, F.is_face_compatible())
    )

    inj_ok, inj_wit = True, None
    if cls.injective:
        for d, row in enumerate(F.cell_map):
            seen = {}
            for i, img in enumerate(row):
                if img in seen:
                    inj_ok, inj_wit = False, (d, seen[img], i)
                    break
                seen[img] = i
            if not inj_ok:
                break
    report.checks.append(PropertyCheck("injective", cls.injective, inj_ok, inj_wit))

    src_inc = _incident_one_cells(src)
    tgt_inc = _incident_one_cells(tgt)
    imm_ok, imm_wit = True, None
    if cls.immersion:
        for v, edges in enumerate(src_inc):
            images = [F.cell_map[1][e] for e in edges]
            if len(set(images)) != len(images):
                imm_ok, imm_wit = False, (0, v)
                break
    report.checks.append(PropertyCheck("immersion", cls.immersion, imm_ok, imm_wit))

    cov_ok, cov_wit = True, None
    if cls.covering:
        for v, edges in enumerate(src_inc):
            images = {F.cell_map[1][e] for e in edges}
            iv = F.cell_map[0][v]
            if len(images) != len(edges) or len(edges) != len(tgt_inc[iv]):
                cov_ok, cov_wit = False, (0, v)
                break
    report.checks.append(PropertyCheck("covering", cls.covering, cov_ok, cov_wit))

    fib_ok, fib_wit = True, None
    fib_applicable = cls.covering and cls.degree is not None
    if fib_applicable:
        expected = cls.degree ** n
        for d, row in enumerate(F.cell_map):
            counts = [0] * len(tgt.cells[d])
            for img in row:
                counts[img] += 1
            for j, c in enumerate(counts):
                if c != expected:
                    fib_ok, fib_wit = False, (d, j, c)
                    break
            if not fib_ok:
                break
    report.checks.append(
        PropertyCheck(
            f"fibers of size degree**n{'=' + str(cls.degree ** n) if fib_applicable else ''}",
            fib_applicable,
            fib_ok,
            fib_wit,
        )
    )

    sur_ok, sur_wit = True, None
    if cls.surjective:
        for d, row in enumerate(F.cell_map):
            hit = set(row)
            if len(hit) != len(tgt.cells[d]):
                missing = next(j for j in range(len(tgt.cells[d])) if j not in hit)
                sur_ok, sur_wit = False, (d, missing)
                break
    report.checks.append(PropertyCheck("surjective", cls.surjective, sur_ok, sur_wit))
    return report
