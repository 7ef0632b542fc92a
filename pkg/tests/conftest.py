import pathlib

import pytest

from graphconfig import ColoredGraph, GraphMorphism, standard_graph
from graphconfig import io as storage

DATA = pathlib.Path(__file__).parent / "data"


def colored_hexagon():
    """Six-cycle colored with three colors, opposite vertices alike."""
    return ColoredGraph([0, 1, 2, 0, 1, 2], [(i, (i + 1) % 6) for i in range(6)])


def hexagon_cover_map():
    """The degree-2 color-preserving cover of the triangle by the colored hexagon."""
    return storage.load_morphism(DATA / "hexagon_to_triangle.json")


def k5_double_cover_map():
    """A connected 2-fold colored cover of the complete graph on 5 vertices."""
    return storage.load_morphism(DATA / "k5_double_cover.json")


@pytest.fixture
def k3():
    return standard_graph("complete", [3])


@pytest.fixture
def k5():
    return standard_graph("complete", [5])


@pytest.fixture
def k33():
    return standard_graph("complete_bipartite", [3, 3])


@pytest.fixture
def star3():
    return standard_graph("star", [3])


def battery_graphs():
    """The fixed verification battery: name -> colored graph."""
    return {
        "k3": standard_graph("complete", [3]),
        "k4": standard_graph("complete", [4]),
        "k5": standard_graph("complete", [5]),
        "k33": standard_graph("complete_bipartite", [3, 3]),
        "star3": standard_graph("star", [3]),
        "colored_hexagon": colored_hexagon(),
    }
