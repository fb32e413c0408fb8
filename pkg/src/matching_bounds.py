# src/matching_bounds.py
"""Matching-induced thresholds and desk-scale checkers for the matching bounds.

For a matching M, tau_M(u) = d(u) on matched vertices and 0 elsewhere. On
trees some tau_M within budget attains vacc(T, 0, d_T, b) exactly; for
general graphs the conjectured bound is vacc(G, 0, d_G, b) <= 2 dyn(G, tau_M)
for some tau_M within budget, known for r-regular G once b >= (2r-1)(r+1).
"""

# Standard library imports
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

# Local imports
from .config import MATCHING_SIZE_LIMIT, ORACLE_SIZE_LIMIT
from .errors import (
    BudgetOutOfRange,
    InstanceTooLarge,
    InvalidMatching,
    NotATree,
    NotRegular,
)
from .ext_int import ExtInt
from .graph_core import Edge, Graph, RootedTree, VertexFn, root_tree
from .oracle import vacc_bruteforce
from .spread_core import dyn_bruteforce, is_dynamic_monopoly
from .tree_vacc_dp import vacc_tree_degree_bounded

logger = logging.getLogger(__name__)


# --- Matchings ---
@dataclass(frozen=True)
class Matching:
    """Pairwise disjoint edges, stored as sorted (u, v) pairs with u < v."""
    edges: Tuple[Edge, ...] = ()

    @classmethod
    def of(cls, edges: Iterable[Sequence[int]]) -> 'Matching':
        return cls(tuple(sorted((min(u, v), max(u, v)) for u, v in edges)))

    def __len__(self) -> int:
        return len(self.edges)

    def covered(self) -> frozenset:
        return frozenset(x for edge in self.edges for x in edge)


def validate_matching(g: Graph, m: Matching) -> None:
    """Raises InvalidMatching if an edge is missing from g or two edges share an endpoint."""
    seen = set()
    for u, v in m.edges:
        if not g.has_edge(u, v):
            raise InvalidMatching(f"({u}, {v}) is not an edge of the graph.")
        if u in seen or v in seen:
            raise InvalidMatching(f"Edge ({u}, {v}) shares an endpoint with another matching edge.")
        seen.update((u, v))


def tau_from_matching(g: Graph, m: Matching) -> VertexFn:
    """tau_M: degree at matched vertices, 0 elsewhere."""
    validate_matching(g, m)
    covered = m.covered()
    return VertexFn(tuple(g.degree(u) if u in covered else 0 for u in range(g.n)))


def max_matching_tree(t: RootedTree) -> Matching:
    """Maximum matching of a tree: in postorder, match each unmatched vertex to an unmatched parent."""
    matched = [False] * t.n
    edges = []
    for u in t.postorder:
        p = t.parent[u]
        if p is None or matched[u] or matched[p]:
            continue
        matched[u] = matched[p] = True
        edges.append((u, p))
    return Matching.of(edges)


def _check_size(g: Graph, limit: int, what: str) -> None:
    if g.n > limit:
        raise InstanceTooLarge(f"Exhaustive {what} on n={g.n} exceeds the size limit {limit}.")


def max_matching_bruteforce(g: Graph, size_limit: Optional[int] = None) -> Matching:
    """Maximum matching by branch and bound over the sorted edge list.

    A branch is cut when even taking every remaining vertex pair could not
    beat the best matching found so far.

    Raises:
        InstanceTooLarge: g.n exceeds size_limit (default MATCHING_SIZE_LIMIT).
    """
    limit = MATCHING_SIZE_LIMIT if size_limit is None else size_limit
    _check_size(g, limit, 'matching search')
    edges = g.edges()
    best: List[Edge] = []
    used = [False] * g.n
    current: List[Edge] = []

    def _search(i: int, free_vertices: int) -> None:
        nonlocal best
        if len(current) > len(best):
            best = list(current)
        if i == len(edges) or len(current) + min(free_vertices // 2, len(edges) - i) <= len(best):
            return
        u, v = edges[i]
        if not used[u] and not used[v]:
            used[u] = used[v] = True
            current.append((u, v))
            _search(i + 1, free_vertices - 2)
            current.pop()
            used[u] = used[v] = False
        _search(i + 1, free_vertices)

    _search(0, g.n)
    return Matching.of(best)


def enumerate_matchings(g: Graph) -> Iterator[Matching]:
    """Every matching of g (the empty one first), in a fixed order over the sorted edges."""
    edges = g.edges()
    used = [False] * g.n
    current: List[Edge] = []

    def _extend(i: int) -> Iterator[Matching]:
        if i == len(edges):
            yield Matching(tuple(current))
            return
        yield from _extend(i + 1)
        u, v = edges[i]
        if not used[u] and not used[v]:
            used[u] = used[v] = True
            current.append((u, v))
            yield from _extend(i + 1)
            current.pop()
            used[u] = used[v] = False

    yield from _extend(0)


def min_vertex_cover_bruteforce(g: Graph, size_limit: Optional[int] = None) -> frozenset:
    """Minimum vertex cover by ascending-size subset search."""
    limit = MATCHING_SIZE_LIMIT if size_limit is None else size_limit
    _check_size(g, limit, 'vertex cover search')
    edges = g.edges()
    for k in range(g.n + 1):
        for candidate in combinations(range(g.n), k):
            chosen = set(candidate)
            if all(u in chosen or v in chosen for u, v in edges):
                return frozenset(chosen)
    return frozenset(range(g.n))


# --- Reports ---
@dataclass
class MatchingBoundReport:
    """Outcome of one matching-bound check at one budget."""
    budget: int
    lhs: ExtInt
    rhs: int
    witness_edges: Tuple[Edge, ...]
    holds: bool
    case: Optional[str] = None
    details: Dict[str, object] = field(default_factory=dict)

    @property
    def ratio(self) -> Optional[Fraction]:
        if not isinstance(self.lhs, int) or self.rhs == 0:
            return None
        return Fraction(self.lhs, self.rhs)

    def to_dict(self) -> dict:
        return {
            'budget': self.budget,
            'lhs': self.lhs,
            'rhs': self.rhs,
            'ratio': self.ratio,
            'witness_edges': [list(e) for e in self.witness_edges],
            'case': self.case,
            'holds': self.holds,
            'details': dict(self.details),
        }


def best_matching_threshold(g: Graph, b: int, size_limit: Optional[int] = None) -> Tuple[int, Matching]:
    """max of dyn(G, tau_M) over matchings with tau_M(V) <= b, and the first matching attaining it."""
    best_value = -1
    best_matching = Matching()
    for matching in enumerate_matchings(g):
        tau_m = tau_from_matching(g, matching)
        if tau_m.total() > b:
            continue
        value = dyn_bruteforce(g, tau_m, size_limit=size_limit)
        if value > best_value:
            best_value, best_matching = value, matching
    return best_value, best_matching


def _check_budget_and_size(g: Graph, b: int, size_limit: Optional[int]) -> int:
    limit = ORACLE_SIZE_LIMIT if size_limit is None else size_limit
    _check_size(g, limit, 'matching-bound check')
    if not 0 <= b <= 2 * g.m:
        raise BudgetOutOfRange(f"Budget {b} is outside 0..2m = {2 * g.m}.")
    return limit


def conjecture1_check(g: Graph, b: int, size_limit: Optional[int] = None) -> MatchingBoundReport:
    """Check vacc(G, 0, d_G, b) <= 2 max{dyn(G, tau_M) : tau_M(V) <= b} exhaustively.

    Raises:
        BudgetOutOfRange: b outside 0..2m.
        InstanceTooLarge: g.n exceeds size_limit (default ORACLE_SIZE_LIMIT).
    """
    limit = _check_budget_and_size(g, b, size_limit)
    lhs = vacc_bruteforce(g, VertexFn.zeros(g.n), VertexFn.degrees(g), b, size_limit=limit)
    rhs, witness = best_matching_threshold(g, b, size_limit=limit)
    holds = lhs <= 2 * rhs
    logger.info(f"Matching bound at b={b}: vacc={lhs}, best tau_M dyn={rhs}, holds={holds}")
    return MatchingBoundReport(budget=b, lhs=lhs, rhs=rhs, witness_edges=witness.edges, holds=holds)


def khza_check(g: Graph, b: int, size_limit: Optional[int] = None) -> MatchingBoundReport:
    """On a tree, check vacc(T, 0, d_T, b) == max{dyn(T, tau_M) : tau_M(V) <= b}.

    The left side is computed twice, by brute force and by the tree DP, and
    all three values must agree.

    Raises:
        NotATree: g is not a tree.
        BudgetOutOfRange: b outside 0..2m.
    """
    t = root_tree(g, 0)
    limit = _check_budget_and_size(g, b, size_limit)
    lhs = vacc_bruteforce(g, VertexFn.zeros(g.n), VertexFn.degrees(g), b, size_limit=limit)
    dp_value = vacc_tree_degree_bounded(t, b)
    rhs, witness = best_matching_threshold(g, b, size_limit=limit)
    holds = lhs == rhs == dp_value
    if not holds:
        logger.warning(f"Tree matching identity fails at b={b}: brute={lhs}, dp={dp_value}, matching={rhs}")
    return MatchingBoundReport(
        budget=b, lhs=lhs, rhs=rhs, witness_edges=witness.edges, holds=holds,
        details={'dp_value': dp_value},
    )


def regular_degree(g: Graph) -> int:
    """The common degree r of a regular graph.

    Raises:
        NotRegular: g is empty or has two different degrees.
    """
    degrees = set(g.degrees())
    if len(degrees) != 1:
        raise NotRegular(f"Graph is not regular (degrees {sorted(degrees)}).")
    return degrees.pop()


def theorem2_check(g: Graph, b: int, size_limit: Optional[int] = None) -> MatchingBoundReport:
    """Matching bound on an r-regular graph with (2r-1)(r+1) <= b <= rn, plus the proof chain.

    The chain checks vacc <= b/(r+1) first. Then, if 2r*nu > b (case
    'matching'), a matching M with 2r|M| <= b < 2r(|M|+1) gives
    2 dyn(G, tau_M) >= 2|M| >= b/(r+1). Otherwise (case 'vertex_cover') a
    minimum vertex cover D has |D| <= 2 nu, is a dynamic monopoly of (G, d_G),
    and dyn(G, d_G) >= vacc.

    Raises:
        NotRegular: g is not regular.
        BudgetOutOfRange: b outside (2r-1)(r+1)..rn.
    """
    r = regular_degree(g)
    low, high = (2 * r - 1) * (r + 1), r * g.n
    if not low <= b <= high:
        raise BudgetOutOfRange(f"Budget {b} is outside {low}..{high} for r={r}, n={g.n}.")
    report = conjecture1_check(g, b, size_limit=size_limit)
    limit = ORACLE_SIZE_LIMIT if size_limit is None else size_limit

    bound = Fraction(b, r + 1)
    details: Dict[str, object] = {'r': r, 'ackerman_bound': bound, 'ackerman_ok': report.lhs <= bound}
    nu_matching = max_matching_bruteforce(g, size_limit=max(limit, MATCHING_SIZE_LIMIT))
    nu = len(nu_matching)
    details['matching_number'] = nu

    if 2 * r * nu > b:
        case = 'matching'
        size = b // (2 * r)
        matching = Matching.of(nu_matching.edges[:size])
        dyn_m = dyn_bruteforce(g, tau_from_matching(g, matching), size_limit=limit)
        chain_ok = (
            2 * r * size <= b
            and 2 * r * (size + 1) >= b + 1
            and dyn_m >= size
            and 2 * size >= bound
        )
        details.update({'chain_matching_edges': [list(e) for e in matching.edges], 'chain_dyn': dyn_m})
    else:
        case = 'vertex_cover'
        cover = min_vertex_cover_bruteforce(g, size_limit=max(limit, MATCHING_SIZE_LIMIT))
        degrees = VertexFn.degrees(g)
        dyn_full = dyn_bruteforce(g, degrees, size_limit=limit)
        chain_ok = (
            len(cover) <= 2 * nu
            and is_dynamic_monopoly(g, degrees, cover)
            and dyn_full >= report.lhs
        )
        details.update({'vertex_cover': sorted(cover), 'dyn_degree_thresholds': dyn_full})

    details['chain_ok'] = chain_ok
    report.case = case
    report.details = details
    report.holds = report.holds and details['ackerman_ok'] and chain_ok
    logger.info(f"Regular-graph check r={r}, b={b}: case={case}, holds={report.holds}")
    return report
