import itertools
import math

import pytest

from graphconfig import (
    build_ordered,
    build_unordered,
    classify_morphism,
    color_disjoint,
    compose_morphisms,
    induced_map,
    verify_induced_properties,
)

from conftest import battery_graphs, colored_hexagon, hexagon_cover_map, k5_double_cover_map


def brute_force_cells(graph, n):
    """Independent oracle: filter the full n-fold product of cells.

    Uses explicit color sets of closures rather than the package's bitmask
    path, and groups admissible tuples by the number of edge factors.
    """
    def closure_colors(code):
        if code < graph.nv:
            return {graph.colors[code]}
        t, h = graph.endpoints(code)
        return {graph.colors[t], graph.colors[h]}

    counts = {}
    cells = list(range(graph.n_cells))
    for combo in itertools.product(cells, repeat=n):
        ok = all(
            not (closure_colors(a) & closure_colors(b))
            for a, b in itertools.combinations(combo, 2)
        )
        if ok:
            d = sum(1 for c in combo if graph.is_edge_code(c))
            counts[d] = counts.get(d, 0) + 1
    return tuple(counts.get(d, 0) for d in range(max(counts, default=0) + 1))


def test_color_disjoint_examples(k3):
    # the edge joining vertices 1,2 is disjoint from vertex 0
    edge_bc = next(
        k3.edge_cell(j) for j, e in enumerate(k3.edges) if set(e) == {1, 2}
    )
    assert color_disjoint(k3, [edge_bc, k3.vertex_cell(0)])
    assert not color_disjoint(k3, [edge_bc, edge_bc])
    assert not color_disjoint(k3, [k3.vertex_cell(1), k3.vertex_cell(1)])


def test_colored_hexagon_has_no_compatible_edge_pairs():
    hexg = colored_hexagon()
    for a, b in itertools.combinations(range(6), 2):
        assert not color_disjoint(hexg, [hexg.edge_cell(a), hexg.edge_cell(b)])


def test_dangling_cell_rejected(k3):
    with pytest.raises(ValueError):
        color_disjoint(k3, [99])


def test_hexagon_counts(k3):
    assert build_ordered(k3, 2).f_vector() == (6, 6)


def test_one_point_space_is_the_graph(k5, k33):
    for g in (k5, k33, colored_hexagon()):
        X = build_ordered(g, 1)
        assert X.f_vector() == (g.nv, g.ne)
        # face structure mirrors the graph's incidence
        for j, axes in enumerate(X.faces[1]):
            (_pos, tail, head) = axes[0]
            t, h = g.edges[j]
            assert X.cells[0][tail] == (t,)
            assert X.cells[0][head] == (h,)


def test_k5_counts_against_brute_force(k5):
    assert build_ordered(k5, 2).f_vector() == brute_force_cells(k5, 2) == (20, 60, 30)


def test_battery_counts_against_brute_force():
    for name, g in battery_graphs().items():
        for n in (2, 3):
            built = build_ordered(g, n).f_vector()
            oracle = brute_force_cells(g, n)
            assert built == oracle, (name, n, built, oracle)


def test_mask_predicate_matches_closure_predicate_for_injective(k5):
    # with injective colors, color-disjointness must equal closure disjointness
    def closures_disjoint(codes):
        closures = [set(k5.closure_vertices(c)) for c in codes]
        return all(
            not (a & b) for a, b in itertools.combinations(closures, 2)
        )

    for combo in itertools.product(range(k5.n_cells), repeat=2):
        assert color_disjoint(k5, combo) == closures_disjoint(combo)


def test_color_relabeling_invariance():
    hexg = colored_hexagon()
    relabeled = type(hexg)(
        ["x" if c == 0 else "y" if c == 1 else "z" for c in hexg.colors], hexg.edges
    )
    a = build_ordered(hexg, 2)
    b = build_ordered(relabeled, 2)
    assert a.cells == b.cells


def test_empty_space_two_tokens_on_one_edge():
    k2 = type(colored_hexagon())([0, 1], [(0, 1)])
    X = build_ordered(k2, 2)
    assert X.f_vector() == (2,)
    assert X.components().count == 2


def test_too_many_tokens_gives_empty_complex():
    k2 = type(colored_hexagon())([0, 1], [(0, 1)])
    X = build_ordered(k2, 3)
    assert X.f_vector() == ()
    assert X.components().count == 0


def test_n_zero_rejected(k3):
    with pytest.raises(ValueError):
        build_ordered(k3, 0)
    with pytest.raises(ValueError):
        build_unordered(k3, 0)


def test_unordered_quotient_counts(k3, k5):
    assert build_unordered(k3, 2).f_vector() == (3, 3)
    assert build_unordered(k5, 2).f_vector() == (10, 30, 15)
    assert build_unordered(k5, 2).euler_characteristic() == -5


def test_unordered_counts_are_orbit_counts():
    # oracle: group ordered cells by sorted representative
    for name, g in battery_graphs().items():
        for n in (2, 3):
            X = build_ordered(g, n)
            U = build_unordered(g, n)
            fact = math.factorial(n)
            for d in range(max(len(X.cells), len(U.cells))):
                orbits = {tuple(sorted(c)) for c in X.cells[d]} if d < len(X.cells) else set()
                ucells = set(U.cells[d]) if d < len(U.cells) else set()
                assert orbits == ucells, (name, n, d)
                assert len(X.cells[d] if d < len(X.cells) else []) == fact * len(orbits)


def test_closure_under_faces_is_validated(k5):
    X = build_ordered(k5, 2)
    # dropping a vertex from the cell list must be caught
    cells = [c for d in range(len(X.cells)) for c in X.cells[d]]
    cells.remove(X.cells[0][0])
    with pytest.raises(ValueError):
        type(X)(k5, 2, cells)


def test_induced_identity_map(k5):
    from graphconfig import identity_morphism

    F = induced_map(identity_morphism(k5), 2)
    for d, row in enumerate(F.cell_map):
        assert list(row) == list(range(len(F.source.cells[d])))


def test_induced_hexagon_cover_is_fourfold():
    rep = verify_induced_properties(hexagon_cover_map(), 2)
    assert rep.ok
    assert rep.morphism_class.degree == 2
    assert rep.check("covering").applicable
    # two 12-gons covering the hexagon
    assert rep.check("fibers of size degree**n=4").applicable


def test_induced_injective_stays_injective(k5):
    from graphconfig import ColoredGraph, GraphMorphism

    k4 = ColoredGraph(range(4), [(i, j) for i in range(4) for j in range(i + 1, 4)])
    incl = GraphMorphism.from_edge_images(
        k4,
        k5,
        [0, 1, 2, 3],
        [next(j for j, e in enumerate(k5.edges) if set(e) == {a, b})
         for a, b in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]],
    )
    rep = verify_induced_properties(incl, 2)
    assert rep.ok
    assert rep.check("injective").applicable and rep.check("injective").passed


def test_k5_double_cover_chi_multiplicative(k5):
    f = k5_double_cover_map()
    assert classify_morphism(f).degree == 2
    rep = verify_induced_properties(f, 2)
    assert rep.ok
    assert rep.source_chi() == 4 * rep.target_chi()


def test_functoriality_of_induced_maps():
    hexg = colored_hexagon()
    f = hexagon_cover_map()
    from graphconfig import GraphMorphism

    rot = GraphMorphism.from_edge_images(
        hexg, hexg, [(v + 3) % 6 for v in range(6)], [(j + 3) % 6 for j in range(6)]
    )
    comp = compose_morphisms(f, rot)
    F = induced_map(f, 2)
    R = induced_map(rot, 2, source=F.source, target=F.source)
    C = induced_map(comp, 2, source=F.source, target=F.target)
    for d in range(len(F.source.cells)):
        via_two = [F.cell_map[d][R.cell_map[d][i]] for i in range(len(F.source.cells[d]))]
        assert via_two == list(C.cell_map[d])


def test_dimension_bound():
    for g in battery_graphs().values():
        for n in (2, 3):
            assert build_ordered(g, n).dim <= n
