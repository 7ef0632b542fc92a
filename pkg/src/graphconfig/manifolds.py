"""Manifold detection through links of cells.

A configuration complex of dimension m is a candidate m-manifold when
low-codimension cells have sphere links: codimension-1 cells must lie in
exactly two top cells, codimension-2 cells must have circle links, and
codimension-3 cells closed surface links with Euler characteristic 2.
Torus links flag the "ideal" vertices of the three-dimensional examples.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .invariants import classify_simplicial_surface

# link types, by increasing codimension of the cell
LINK_EMPTY = "empty"
LINK_ZERO_SPHERE = "0-sphere"
LINK_CIRCLE = "circle"
LINK_TWO_SPHERE = "2-sphere"
LINK_TORUS = "torus"
LINK_KLEIN_BOTTLE = "klein-bottle"
LINK_SURFACE = "surface"
LINK_NOT_MANIFOLD = "not-a-manifold-link"


@dataclass(frozen=True)
class LinkRecord:
    """Classification of a single cell's link."""

    dim: int
    cell: int
    link_type: str
    chi: int | None = None
    orientable: bool | None = None
    coface_count: int | None = None


@dataclass
class LinkClassification:
    """Per-cell link classification of the low-codimension skeleton."""

    complex_dim: int
    records: list = field(default_factory=list)

    def of_type(self, link_type, dim=None):
        return [
            r
            for r in self.records
            if r.link_type == link_type and (dim is None or r.dim == dim)
        ]

    def type_counts(self, dim=None):
        counts = {}
        for r in self.records:
            if dim is None or r.dim == dim:
                counts[r.link_type] = counts.get(r.link_type, 0) + 1
        return counts

    def record_for(self, dim, cell):
        for r in self.records:
            if r.dim == dim and r.cell == cell:
                return r
        raise KeyError((dim, cell))


def _classify_link(X, d, i, m):
    """LinkRecord for one cell, by codimension in the m-dimensional complex."""
    codim = m - d
    link = X.cell_link(d, i)
    if codim == 0:
        link_type = LINK_EMPTY if link.is_empty() else LINK_NOT_MANIFOLD
        return LinkRecord(d, i, link_type, coface_count=link.n_faces(0))
    if codim == 1:
        count = link.n_faces(0)
        good = count == 2 and link.dim <= 0
        return LinkRecord(
            d, i, LINK_ZERO_SPHERE if good else LINK_NOT_MANIFOLD, coface_count=count
        )
    if codim == 2:
        good = link.is_single_cycle()
        return LinkRecord(d, i, LINK_CIRCLE if good else LINK_NOT_MANIFOLD)
    surface = classify_simplicial_surface(link)
    if not surface.is_surface:
        return LinkRecord(d, i, LINK_NOT_MANIFOLD, chi=surface.chi)
    connected = link.component_count() == 1
    if connected and surface.orientable and surface.chi == 2:
        link_type = LINK_TWO_SPHERE
    elif connected and surface.orientable and surface.chi == 0:
        link_type = LINK_TORUS
    elif connected and not surface.orientable and surface.chi == 0:
        link_type = LINK_KLEIN_BOTTLE
    else:
        link_type = LINK_SURFACE
    return LinkRecord(d, i, link_type, chi=surface.chi, orientable=surface.orientable)


def classify_links(X):
    """Classify links of all cells within three dimensions of the top.

    Sphere recognition is exact in link dimensions 0, 1, and 2; links of
    higher dimension are never needed here because the sweep stops at
    codimension 3.
    """
    m = X.dim
    out = LinkClassification(m)
    for d in range(max(0, m - 3), m + 1):
        for i in range(len(X.cells[d])):
            out.records.append(_classify_link(X, d, i, m))
    return out


@dataclass
class ManifoldReport:
    """Whether a complex is a manifold away from its low skeleton.

    ``defects`` lists ``(dim, cell_id, reason)`` for every cell of
    dimension at least n-2 whose link is not a sphere of the expected
    dimension, where n is the number of points of the configuration.
    """

    passed: bool
    n: int
    defects: list = field(default_factory=list)

    def __str__(self):
        if self.passed:
            return f"{self.n}-manifold away from the ({self.n - 3})-skeleton"
        return f"not a manifold away from the ({self.n - 3})-skeleton: " + "; ".join(
            f"{d}-cell {i} ({reason})" for d, i, reason in self.defects[:5]
        )


def manifold_away_from_skeleton(X):
    """Test manifoldness away from the (n-3)-skeleton, n = X.n points.

    Every (n-1)-cell must lie in exactly two n-cells and every (n-2)-cell
    must have a circle link.  Codimension is measured against the point
    count n, not the realized dimension: a complex that fails to reach
    dimension n fails here, with its top cells as witnesses.
    """
    n = X.n
    defects = []
    for d in (n - 1, n - 2):
        if d < 0 or d >= len(X.cells):
            continue
        for i in range(len(X.cells[d])):
            link = X.cell_link(d, i)
            if d == n - 1:
                if link.n_faces(0) != 2 or link.dim > 0:
                    defects.append(
                        (d, i, f"lies in {link.n_faces(0)} top cells, expected 2")
                    )
            else:
                if not link.is_single_cycle():
                    defects.append((d, i, "link is not a circle"))
    return ManifoldReport(not defects, n, defects)


def ideal_finite_census(X, links=None):
    """Per-top-cell counts of torus-link and sphere-link corners.

    Returns a list of ``(ideal, finite)`` pairs across the top cells, for
    the three-dimensional complexes whose vertices split into ideal (torus
    link) and finite (2-sphere link) ones.
    """
    if links is None:
        links = classify_links(X)
    m = X.dim
    out = []
    for i in range(len(X.cells[m])):
        ideal = finite = 0
        for v in X.cell_corners(m, i):
            t = links.record_for(0, v).link_type
            if t == LINK_TORUS:
                ideal += 1
            elif t == LINK_TWO_SPHERE:
                finite += 1
        out.append((ideal, finite))
    return out
