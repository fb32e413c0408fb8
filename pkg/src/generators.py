# src/generators.py
"""Small graph families and instance pools for the checkers, the CLI `gen` command and tests."""

# Standard library imports
import logging
from typing import Iterator, List, Optional

# Third-party imports
import networkx as nx
import numpy as np

# Local imports
from .errors import ValidationError
from .graph_core import Graph, VertexFn, build_graph, from_networkx

logger = logging.getLogger(__name__)

FAMILIES = ('path', 'star', 'cycle', 'random-tree')


def path_graph(n: int) -> Graph:
    return build_graph(n, [(u, u + 1) for u in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star on n vertices with center 0."""
    return build_graph(n, [(0, v) for v in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValidationError(f"A cycle needs at least 3 vertices, got {n}.")
    return build_graph(n, [(u, (u + 1) % n) for u in range(n)])


def random_tree(n: int, seed: Optional[int] = None) -> Graph:
    """Uniform labelled tree on n vertices, decoded from a random Prüfer sequence."""
    if n < 1:
        raise ValidationError(f"A tree needs at least 1 vertex, got {n}.")
    if n <= 2:
        return path_graph(n)
    rng = np.random.default_rng(seed)
    sequence = rng.integers(0, n, size=n - 2).tolist()
    return from_networkx(nx.from_prufer_sequence(sequence))


def make_graph(family: str, n: int, seed: Optional[int] = None) -> Graph:
    """Dispatch on a family name from FAMILIES."""
    if family == 'path':
        return path_graph(n)
    if family == 'star':
        return star_graph(n)
    if family == 'cycle':
        return cycle_graph(n)
    if family == 'random-tree':
        return random_tree(n, seed)
    raise ValidationError(f"Unknown graph family '{family}'. Choose from {', '.join(FAMILIES)}.")


# --- Pools ---
def connected_graph_pool(max_n: int, min_n: int = 1) -> List[Graph]:
    """Every connected graph with min_n..max_n vertices, one per isomorphism class.

    Drawn from the networkx graph atlas, which stops at 7 vertices.
    """
    if max_n > 7:
        logger.warning(f"Graph atlas only covers n <= 7; pool truncated from max_n={max_n}")
    pool = [
        from_networkx(h)
        for h in nx.graph_atlas_g()
        if min_n <= h.number_of_nodes() <= max_n and nx.is_connected(h)
    ]
    logger.debug(f"Connected graph pool for n in {min_n}..{max_n}: {len(pool)} graphs")
    return pool


def tree_pool(max_n: int, min_n: int = 1) -> List[Graph]:
    """Every unlabelled tree with min_n..max_n vertices."""
    pool: List[Graph] = []
    for order in range(max(min_n, 1), max_n + 1):
        if order <= 2:
            pool.append(path_graph(order))
            continue
        pool.extend(from_networkx(h) for h in nx.nonisomorphic_trees(order))
    logger.debug(f"Tree pool for n in {min_n}..{max_n}: {len(pool)} trees")
    return pool


def random_tree_pool(count: int, max_n: int, seed: int = 0, min_n: int = 1) -> Iterator[Graph]:
    """`count` random trees with sizes drawn uniformly from min_n..max_n."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(min_n, max_n + 1))
        yield random_tree(n, seed=int(rng.integers(0, 2**31 - 1)))


def random_vertex_fn(n: int, low: int, high: int, seed: Optional[int] = None) -> VertexFn:
    """Vertex function with entries drawn uniformly from low..high inclusive."""
    rng = np.random.default_rng(seed)
    return VertexFn.of(rng.integers(low, high + 1, size=n).tolist())
