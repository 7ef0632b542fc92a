import pytest

from graphconfig import (
    ColoredGraph,
    GraphMorphism,
    classify_morphism,
    compose_morphisms,
    identity_morphism,
    random_colored_graph,
    standard_graph,
    subdivide,
)

from conftest import colored_hexagon, hexagon_cover_map


def test_complete_graph_counts():
    k5 = standard_graph("complete", [5])
    assert (k5.nv, k5.ne) == (5, 10)
    assert all(k5.degree(v) == 4 for v in range(5))


def test_complete_bipartite_counts():
    k33 = standard_graph("complete_bipartite", [3, 3])
    assert (k33.nv, k33.ne) == (6, 9)
    assert all(k33.degree(v) == 3 for v in range(6))
    k23 = standard_graph("complete_bipartite", [2, 3])
    assert sorted(k23.degree(v) for v in range(5)) == [2, 2, 2, 3, 3]


def test_star_and_path_and_cycle():
    star = standard_graph("star", [3])
    assert (star.nv, star.ne) == (4, 3)
    path = standard_graph("path", [2])
    assert (path.nv, path.ne) == (3, 2)
    cyc = standard_graph("cycle", [6])
    assert (cyc.nv, cyc.ne) == (6, 6)
    assert all(cyc.degree(v) == 2 for v in range(6))


def test_cycle_of_length_two_is_parallel_pair():
    c2 = standard_graph("cycle", [2])
    assert (c2.nv, c2.ne) == (2, 2)


def test_constructor_rejections():
    with pytest.raises(ValueError):
        standard_graph("complete", [0])
    with pytest.raises(ValueError):
        standard_graph("cycle", [1])
    with pytest.raises(ValueError):
        ColoredGraph([0, 1], [(0, 0)])  # loop
    with pytest.raises(ValueError):
        ColoredGraph([0, 1], [(0, 5)])  # dangling endpoint


def test_default_coloring_is_injective():
    for kind, params in [("complete", [4]), ("star", [3]), ("cycle", [5])]:
        assert standard_graph(kind, params).injective_coloring()


def test_subdivide_single_edge():
    k2 = standard_graph("path", [1])
    s = subdivide(k2, 0, "m")
    assert (s.nv, s.ne) == (3, 2)
    assert s.colors[2] == "m"
    # ids of untouched cells preserved, new ids appended
    assert s.edges[0][0] == k2.edges[0][0]
    assert s.edges[1][1] == k2.edges[0][1]


def test_subdividing_every_triangle_edge_gives_hexagon():
    g = standard_graph("complete", [3])
    for j in range(3):
        g = subdivide(g, j, f"m{j}")
    assert (g.nv, g.ne) == (6, 6)
    assert all(g.degree(v) == 2 for v in range(6))
    assert g.is_connected()


def test_subdivision_preserves_euler_count():
    g = standard_graph("complete_bipartite", [2, 3])
    s = subdivide(g, 4, "fresh")
    assert s.nv - s.ne == g.nv - g.ne


def test_subdivide_unknown_edge():
    with pytest.raises(ValueError):
        subdivide(standard_graph("complete", [3]), 7, "x")


def test_classify_identity():
    k5 = standard_graph("complete", [5])
    cls = classify_morphism(identity_morphism(k5))
    assert (cls.injective, cls.immersion, cls.covering, cls.surjective) == (
        True,
        True,
        True,
        True,
    )
    assert cls.degree == 1


def test_classify_hexagon_cover():
    cls = classify_morphism(hexagon_cover_map())
    assert not cls.injective
    assert cls.immersion and cls.covering and cls.surjective
    assert cls.degree == 2


def test_classify_vertex_inclusion():
    k5 = standard_graph("complete", [5])
    point = ColoredGraph([0], [])
    incl = GraphMorphism(point, k5, [0], [])
    cls = classify_morphism(incl)
    assert cls.injective and cls.immersion
    assert not cls.covering and not cls.surjective


def test_covering_implies_immersion_on_random_candidates():
    # every successfully classified random morphism obeys the implications
    for seed in range(40):
        g = random_colored_graph(seed)
        cls = classify_morphism(identity_morphism(g))
        assert cls.covering and cls.immersion and cls.degree == 1


def test_morphism_validation_rejects_color_mismatch():
    a = ColoredGraph(["red"], [])
    b = ColoredGraph(["blue"], [])
    with pytest.raises(ValueError):
        GraphMorphism(a, b, [0], [])


def test_morphism_validation_rejects_broken_edge_image():
    tri = standard_graph("complete", [3])
    with pytest.raises(ValueError):
        # edge 0 joins vertices 0,1 but the claimed image joins 0,2
        GraphMorphism(tri, tri, [0, 1, 2], [(1, False), (1, False), (2, False)])


def test_compose_morphisms_flips():
    hexg = colored_hexagon()
    f = hexagon_cover_map()
    # the antipodal rotation is the color-preserving deck transformation
    rot = GraphMorphism.from_edge_images(
        hexg, hexg, [(v + 3) % 6 for v in range(6)], [(j + 3) % 6 for j in range(6)]
    )
    comp = compose_morphisms(f, rot)
    assert classify_morphism(comp).covering
    assert comp.vertex_map == tuple(f.vertex_map[(v + 3) % 6] for v in range(6))


def test_component_labels():
    g = ColoredGraph(range(4), [(0, 1), (2, 3)])
    assert g.component_labels() == (0, 0, 1, 1)
    assert not g.is_connected()
