# src/graph_core.py
"""Graph representation, vertex functions and tree rooting.

Vertices are dense 0-indexed integers. Everything here is immutable once
built and shared read-only by the spreading, DP, oracle and matching code.
"""

# Standard library imports
import logging
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass, replace
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

# Third-party imports
import networkx as nx

# Local imports
from .errors import (
    SelfLoop,
    DuplicateEdge,
    VertexOutOfRange,
    LengthMismatch,
    NotATree,
    NegativeCapacity,
)

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


# --- Graph ---
@dataclass(frozen=True)
class Graph:
    """Simple undirected graph as vertex count plus sorted adjacency lists."""
    n: int
    adj: Tuple[Tuple[int, ...], ...]
    m: int

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def degrees(self) -> Tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adj)

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> List[Edge]:
        """Edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        nbrs = self.adj[u]
        i = bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validate an edge list and build the Graph.

    Raises:
        VertexOutOfRange: an endpoint is outside 0..n-1 (or n < 0).
        SelfLoop: an edge (u, u).
        DuplicateEdge: the same undirected edge appears twice.
    """
    if n < 0:
        raise VertexOutOfRange(f"Vertex count must be non-negative, got {n}.")
    neighbor_sets: List[set] = [set() for _ in range(n)]
    m = 0
    for edge in edges:
        u, v = int(edge[0]), int(edge[1])
        if not (0 <= u < n) or not (0 <= v < n):
            raise VertexOutOfRange(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}.")
        if u == v:
            raise SelfLoop(f"Self-loop at vertex {u}.")
        if v in neighbor_sets[u]:
            raise DuplicateEdge(f"Edge ({u}, {v}) listed more than once.")
        neighbor_sets[u].add(v)
        neighbor_sets[v].add(u)
        m += 1
    adj = tuple(tuple(sorted(nbrs)) for nbrs in neighbor_sets)
    logger.debug(f"Built graph with n={n}, m={m}")
    return Graph(n=n, adj=adj, m=m)


def degree_square_sum(g: Graph) -> int:
    """Sum of squared degrees; at most n^2 - n on every tree."""
    return sum(d * d for d in g.degrees())


def to_networkx(g: Graph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(g.n))
    nx_graph.add_edges_from(g.edges())
    return nx_graph


def from_networkx(nx_graph: nx.Graph) -> Graph:
    """Relabel nodes to 0..n-1 in sorted node order and build a Graph."""
    relabelled = nx.convert_node_labels_to_integers(nx_graph, ordering='sorted')
    return build_graph(relabelled.number_of_nodes(), relabelled.edges())


# --- Vertex functions ---
@dataclass(frozen=True)
class VertexFn:
    """Integer per vertex: thresholds, increments or increment bounds."""
    values: Tuple[int, ...]

    @classmethod
    def of(cls, values: Iterable[int]) -> 'VertexFn':
        return cls(tuple(int(v) for v in values))

    @classmethod
    def constant(cls, n: int, c: int) -> 'VertexFn':
        return cls((int(c),) * n)

    @classmethod
    def zeros(cls, n: int) -> 'VertexFn':
        return cls.constant(n, 0)

    @classmethod
    def degrees(cls, g: Graph, offset: int = 0) -> 'VertexFn':
        """d_G(u) + offset for every u."""
        return cls(tuple(d + offset for d in g.degrees()))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, u: int) -> int:
        return self.values[u]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __add__(self, other: 'VertexFn') -> 'VertexFn':
        if len(other) != len(self):
            raise LengthMismatch(f"Cannot add vertex functions of lengths {len(self)} and {len(other)}.")
        return VertexFn(tuple(a + b for a, b in zip(self.values, other.values)))

    def total(self) -> int:
        """Sum over all vertices, written f(V) in the math."""
        return sum(self.values)

    def decremented_at(self, u: int) -> 'VertexFn':
        """The same function with the value at u lowered by one."""
        values = list(self.values)
        values[u] -= 1
        return VertexFn(tuple(values))

    def check_length(self, n: int, name: str = 'vertex function') -> None:
        if len(self.values) != n:
            raise LengthMismatch(f"{name} has {len(self.values)} entries but the graph has {n} vertices.")

    def is_pointwise_le(self, other: 'VertexFn') -> bool:
        return len(self) == len(other) and all(a <= b for a, b in zip(self.values, other.values))


# --- Rooted trees ---
@dataclass(frozen=True)
class RootedTree:
    """Tree with parent/children structure and a children-first vertex order.

    `subtree_capacity[u]` is the increment capacity of the subtree at u once
    an upper-bound function has been attached, otherwise None.
    """
    base: Graph
    root: int
    parent: Tuple[Optional[int], ...]
    children: Tuple[Tuple[int, ...], ...]
    postorder: Tuple[int, ...]
    subtree_capacity: Optional[Tuple[int, ...]] = None

    @property
    def n(self) -> int:
        return self.base.n

    def is_leaf(self, u: int) -> bool:
        return not self.children[u]

    def subtree_sizes(self) -> Tuple[int, ...]:
        sizes = [1] * self.n
        for u in self.postorder:
            for v in self.children[u]:
                sizes[u] += sizes[v]
        return tuple(sizes)

    def subtree_vertices(self, u: int) -> List[int]:
        """Vertices of the subtree rooted at u (u and its descendants), sorted."""
        found = []
        stack = [u]
        while stack:
            w = stack.pop()
            found.append(w)
            stack.extend(self.children[w])
        return sorted(found)


def root_tree(g: Graph, r: int) -> RootedTree:
    """Orient a tree away from r.

    Children are listed in increasing vertex order; the postorder visits the
    children of every vertex left to right before the vertex itself.

    Raises:
        NotATree: g is empty, disconnected, or has m != n - 1.
        VertexOutOfRange: r is not a vertex of g.
    """
    if g.n == 0 or g.m != g.n - 1:
        raise NotATree(f"Graph with n={g.n}, m={g.m} is not a tree (needs n >= 1 and m = n - 1).")
    if not 0 <= r < g.n:
        raise VertexOutOfRange(f"Root {r} is outside 0..{g.n - 1}.")

    parent: List[Optional[int]] = [None] * g.n
    children: List[List[int]] = [[] for _ in range(g.n)]
    seen = [False] * g.n
    seen[r] = True
    queue = deque([r])
    while queue:
        u = queue.popleft()
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                children[u].append(v)
                queue.append(v)
    if not all(seen):
        raise NotATree(f"Graph with n={g.n}, m={g.m} is disconnected.")

    # Iterative postorder: children left to right, then the vertex
    postorder: List[int] = []
    stack: List[Tuple[int, int]] = [(r, 0)]
    while stack:
        u, i = stack.pop()
        if i < len(children[u]):
            stack.append((u, i + 1))
            stack.append((children[u][i], 0))
        else:
            postorder.append(u)

    return RootedTree(
        base=g,
        root=r,
        parent=tuple(parent),
        children=tuple(tuple(c) for c in children),
        postorder=tuple(postorder),
    )


def attach_capacities(t: RootedTree, iota_max: VertexFn) -> RootedTree:
    """Return a copy of t with subtree_capacity[u] = sum of iota_max over the subtree at u.

    Raises:
        LengthMismatch: iota_max does not cover every vertex.
        NegativeCapacity: some iota_max(u) < 0.
    """
    iota_max.check_length(t.n, 'iota_max')
    negative = [u for u, c in enumerate(iota_max) if c < 0]
    if negative:
        raise NegativeCapacity(f"iota_max is negative at vertices {negative}.")
    capacity = list(iota_max.values)
    for u in t.postorder:
        for v in t.children[u]:
            capacity[u] += capacity[v]
    return replace(t, subtree_capacity=tuple(capacity))
