# src/spread_core.py
"""Threshold spreading on arbitrary graphs.

A vertex u joins the active set once at least tau(u) of its neighbours are
active; tau(u) <= 0 means u activates on its own. The hull of a seed set is
the closure under that rule, and a dynamic monopoly is a seed set whose hull
is the whole vertex set.
"""

# Standard library imports
import logging
import random
from fractions import Fraction
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional

# Local imports
from .config import DYN_SIZE_LIMIT
from .errors import InstanceTooLarge, ThresholdOutOfRange, VertexOutOfRange
from .graph_core import Graph, VertexFn

logger = logging.getLogger(__name__)

VertexSet = FrozenSet[int]


def _validated_seed(g: Graph, seed: Iterable[int]) -> VertexSet:
    seed_set = frozenset(int(u) for u in seed)
    outside = sorted(u for u in seed_set if not 0 <= u < g.n)
    if outside:
        raise VertexOutOfRange(f"Seed vertices {outside} are outside 0..{g.n - 1}.")
    return seed_set


def compute_hull(
    g: Graph,
    tau: VertexFn,
    seed: Iterable[int],
    shuffle_seed: Optional[int] = None,
) -> VertexSet:
    """Closure of `seed` under the threshold rule, by worklist propagation in O(n + m).

    Args:
        g: Host graph.
        tau: Thresholds; any integers (negative or above the degree allowed).
        seed: Initially active vertices.
        shuffle_seed: If given, the worklist is drained in a random order drawn
            from this seed. The result does not depend on it.

    Returns:
        Frozen set of active vertices.
    """
    tau.check_length(g.n, 'tau')
    active = [False] * g.n
    worklist: List[int] = []
    for u in _validated_seed(g, seed):
        active[u] = True
        worklist.append(u)
    for u in range(g.n):
        if not active[u] and tau[u] <= 0:
            active[u] = True
            worklist.append(u)

    rng = random.Random(shuffle_seed) if shuffle_seed is not None else None
    active_neighbors = [0] * g.n
    while worklist:
        if rng is not None:
            i = rng.randrange(len(worklist))
            worklist[i], worklist[-1] = worklist[-1], worklist[i]
        u = worklist.pop()
        for w in g.adj[u]:
            if active[w]:
                continue
            active_neighbors[w] += 1
            if active_neighbors[w] >= tau[w]:
                active[w] = True
                worklist.append(w)

    return frozenset(u for u in range(g.n) if active[u])


def is_dynamic_monopoly(g: Graph, tau: VertexFn, seed: Iterable[int]) -> bool:
    return len(compute_hull(g, tau, seed)) == g.n


def forced_vertices(g: Graph, tau: VertexFn) -> List[int]:
    """Vertices with tau(u) > d(u); no neighbourhood can activate them."""
    return [u for u in range(g.n) if tau[u] > g.degree(u)]


def min_monopoly_bruteforce(g: Graph, tau: VertexFn, size_limit: Optional[int] = None) -> VertexSet:
    """A minimum dynamic monopoly by exhaustive search.

    Forced vertices are always included; the remaining vertices are tried by
    ascending cardinality in sorted combination order, and the first
    monopoly found is returned.

    Raises:
        InstanceTooLarge: g.n exceeds size_limit (default DYN_SIZE_LIMIT).
    """
    limit = DYN_SIZE_LIMIT if size_limit is None else size_limit
    if g.n > limit:
        raise InstanceTooLarge(f"Exhaustive dyn on n={g.n} exceeds the size limit {limit}.")
    tau.check_length(g.n, 'tau')

    forced = forced_vertices(g, tau)
    forced_set = set(forced)
    free = [u for u in range(g.n) if u not in forced_set]
    for k in range(len(free) + 1):
        for extra in combinations(free, k):
            candidate = forced_set.union(extra)
            if is_dynamic_monopoly(g, tau, candidate):
                logger.debug(f"Minimum monopoly of size {len(candidate)} found ({len(forced)} forced)")
                return frozenset(candidate)
    # The full vertex set is always a monopoly, so the loop returns above.
    raise AssertionError("unreachable: V(G) is a dynamic monopoly")


def dyn_bruteforce(g: Graph, tau: VertexFn, size_limit: Optional[int] = None) -> int:
    """dyn(G, tau): minimum order of a dynamic monopoly, by exhaustive search."""
    return len(min_monopoly_bruteforce(g, tau, size_limit=size_limit))


def ackerman_bound(g: Graph, tau: VertexFn) -> Fraction:
    """Exact rational sum of tau(u) / (d(u) + 1), an upper bound on dyn for 0 <= tau <= d.

    Raises:
        ThresholdOutOfRange: some tau(u) outside 0..d(u).
    """
    tau.check_length(g.n, 'tau')
    bad = [u for u in range(g.n) if not 0 <= tau[u] <= g.degree(u)]
    if bad:
        raise ThresholdOutOfRange(f"Thresholds outside 0..d(u) at vertices {bad}.")
    return sum((Fraction(tau[u], g.degree(u) + 1) for u in range(g.n)), Fraction(0))
