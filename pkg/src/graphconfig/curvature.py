"""Non-positive curvature via the link condition for cube complexes.

The combinatorial test: for every cell, every triangle in its link must
bound a 2-simplex of the link.  A strict variant checks the full flag
property (every clique of the link's 1-skeleton spans a simplex), which is
the standard vertex-link formulation; both are exposed so neither
reduction has to be trusted.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class LinkConditionReport:
    """Outcome of a link-condition sweep over all cells of a complex.

    ``counterexample`` is None on pass, otherwise the canonically first
    failure as ``(cell_dim, cell_id, triangle)`` where the triangle is the
    sorted triple of growth moves spanning an empty triangle.
    """

    passed: bool
    cells_checked: int
    counterexample: tuple | None = None

    def __str__(self):
        if self.passed:
            return f"link condition holds ({self.cells_checked} cells checked)"
        d, i, tri = self.counterexample
        return f"link condition fails at {d}-cell {i}: empty triangle {tri}"


def check_link_condition(X):
    """Verify that every triangle in every cell link bounds a 2-simplex.

    Cells are scanned in canonical order (dimension, then id) and the
    first counterexample is reported.
    """
    checked = 0
    for d in range(len(X.cells)):
        for i in range(len(X.cells[d])):
            link = X.cell_link(d, i)
            checked += 1
            for tri in link.triangles():
                if not link.has_face(tri):
                    return LinkConditionReport(False, checked, (d, i, tri))
    return LinkConditionReport(True, checked)


@dataclass
class FlagReport:
    """Per-cell results of the strict (flag) variant of the link condition."""

    passed: bool
    cells_checked: int
    failures: list = field(default_factory=list)

    def __str__(self):
        if self.passed:
            return f"all links are flag complexes ({self.cells_checked} cells)"
        d, i, clique = self.failures[0]
        return (
            f"{len(self.failures)} non-flag links; first at {d}-cell {i}, "
            f"clique {clique} spans no simplex"
        )


def _first_missing_clique(link):
    """Smallest clique of the link's 1-skeleton that spans no simplex."""
    adj = link.adjacency()
    level = [(v,) for v in link.vertices]
    while level:
        nxt = []
        for clique in level:
            last = clique[-1]
            candidates = sorted(
                v for v in adj[last] if v > last and all(v in adj[u] for u in clique)
            )
            for v in candidates:
                bigger = clique + (v,)
                if not link.has_face(bigger):
                    return bigger
                nxt.append(bigger)
        level = nxt
    return None


def check_flag_condition(X, vertices_only=False):
    """Strict link condition: every clique of every link spans a simplex.

    With ``vertices_only`` the sweep is restricted to 0-cells, the classic
    formulation for cube complexes.
    """
    failures = []
    checked = 0
    dims = [0] if vertices_only else range(len(X.cells))
    for d in dims:
        for i in range(len(X.cells[d])):
            link = X.cell_link(d, i)
            checked += 1
            missing = _first_missing_clique(link)
            if missing is not None:
                failures.append((d, i, missing))
    return FlagReport(not failures, checked, failures)
