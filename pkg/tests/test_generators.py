"""Tests for graph families and instance pools."""
import networkx as nx
import pytest

from src.errors import ValidationError
from src.generators import (
    connected_graph_pool,
    cycle_graph,
    make_graph,
    path_graph,
    random_tree,
    random_tree_pool,
    random_vertex_fn,
    star_graph,
    tree_pool,
)
from src.graph_core import root_tree, to_networkx


def test_families():
    assert path_graph(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert star_graph(4).degrees() == (3, 1, 1, 1)
    assert cycle_graph(5).degrees() == (2,) * 5
    assert path_graph(1).m == 0


def test_cycle_needs_three_vertices():
    with pytest.raises(ValidationError):
        cycle_graph(2)


@pytest.mark.parametrize("n", [1, 2, 3, 9, 30])
def test_random_tree_is_a_tree(n):
    g = random_tree(n, seed=5)
    assert g.n == n
    root_tree(g, 0)


def test_random_tree_is_seeded():
    assert random_tree(12, seed=7) == random_tree(12, seed=7)


def test_make_graph_dispatch():
    assert make_graph('star', 3) == star_graph(3)
    with pytest.raises(ValidationError):
        make_graph('wheel', 5)


def test_connected_pool_counts():
    """1, 1, 2 and 6 connected graphs on 1..4 vertices."""
    pool = connected_graph_pool(4)
    assert len(pool) == 10
    assert all(nx.is_connected(to_networkx(g)) for g in pool)


def test_tree_pool_counts():
    """1, 1, 1, 2, 3 and 6 unlabelled trees on 1..6 vertices."""
    pool = tree_pool(6)
    assert len(pool) == 14
    for g in pool:
        root_tree(g, 0)


def test_random_tree_pool_sizes():
    pool = list(random_tree_pool(20, 6, seed=1, min_n=3))
    assert len(pool) == 20
    assert all(3 <= g.n <= 6 for g in pool)


def test_random_vertex_fn_range():
    fn = random_vertex_fn(50, -1, 2, seed=0)
    assert len(fn) == 50
    assert set(fn) <= {-1, 0, 1, 2}
