# src/oracle.py
"""Ground truth by exhaustive search, plus the closed-form value for free thresholds.

Nothing here shares logic with the tree DP: increments are enumerated one
by one and each is scored with the brute-force dyn.
"""

# Standard library imports
import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional

# Local imports
from .config import ORACLE_SIZE_LIMIT
from .errors import InstanceTooLarge, TotalOutOfRange
from .ext_int import NEG_INF, ExtInt
from .graph_core import Graph, VertexFn
from .spread_core import dyn_bruteforce

logger = logging.getLogger(__name__)


def enumerate_increments(iota_max: VertexFn, b: int, exact: bool = True) -> Iterator[VertexFn]:
    """Yield every iota with 0 <= iota <= iota_max and iota(V) = b, in ascending lexicographic order.

    With exact=False the total may be anything from 0 to b. Nothing is
    yielded when no such increment exists.
    """
    if b < 0:
        return
    bounds = list(iota_max.values)
    n = len(bounds)
    # suffix_cap[i] = most budget the vertices i..n-1 can still absorb
    suffix_cap = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_cap[i] = suffix_cap[i + 1] + max(bounds[i], 0)
    if exact and b > suffix_cap[0]:
        return

    prefix: List[int] = [0] * n

    def _extend(i: int, remaining: int) -> Iterator[VertexFn]:
        if i == n:
            if remaining == 0 or not exact:
                yield VertexFn(tuple(prefix))
            return
        low = max(0, remaining - suffix_cap[i + 1]) if exact else 0
        high = min(max(bounds[i], 0), remaining)
        for value in range(low, high + 1):
            prefix[i] = value
            yield from _extend(i + 1, remaining - value)
        prefix[i] = 0

    yield from _extend(0, b)


def vacc_bruteforce(
    g: Graph,
    tau: VertexFn,
    iota_max: VertexFn,
    b: int,
    size_limit: Optional[int] = None,
    exact: bool = True,
) -> ExtInt:
    """max over enumerate_increments of dyn_bruteforce(g, tau + iota); NEG_INF when none exists.

    Raises:
        InstanceTooLarge: g.n exceeds size_limit (default ORACLE_SIZE_LIMIT).
    """
    limit = ORACLE_SIZE_LIMIT if size_limit is None else size_limit
    if g.n > limit:
        raise InstanceTooLarge(f"Exhaustive vacc on n={g.n} exceeds the size limit {limit}.")
    tau.check_length(g.n, 'tau')
    iota_max.check_length(g.n, 'iota_max')

    best: ExtInt = NEG_INF
    evaluated = 0
    for iota in enumerate_increments(iota_max, b, exact=exact):
        evaluated += 1
        value = dyn_bruteforce(g, tau + iota, size_limit=limit)
        if best is NEG_INF or value > best:
            best = value
    logger.debug(f"Brute-force vacc over {evaluated} increments at budget {b}: {best}")
    return best


def degree_order(g: Graph) -> List[int]:
    """Vertices by non-decreasing degree, ties by index."""
    return sorted(range(g.n), key=lambda u: (g.degree(u), u))


def vacc_formula_avg(g: Graph, total: int) -> int:
    """Largest k with (d(u_1)+1) + ... + (d(u_k)+1) <= total over the degree order.

    This is vacc(G, 0, d_G + 1, total): every vertex raised to d(u) + 1 is
    immune and must be seeded, and the cheapest immunizations come first.

    Raises:
        TotalOutOfRange: total outside 0..2m + n.
    """
    upper = 2 * g.m + g.n
    if not 0 <= total <= upper:
        raise TotalOutOfRange(f"Threshold total {total} is outside 0..{upper}.")
    spent = 0
    k = 0
    for u in degree_order(g):
        cost = g.degree(u) + 1
        if spent + cost > total:
            break
        spent += cost
        k += 1
    return k


@dataclass(frozen=True)
class FormulaReport:
    total: int
    value: int
    bruteforce: ExtInt
    holds: bool

    def to_dict(self) -> dict:
        return {
            'total': self.total,
            'value': self.value,
            'bruteforce': self.bruteforce,
            'holds': self.holds,
        }


def formula_check(g: Graph, total: int, size_limit: Optional[int] = None) -> FormulaReport:
    """Compare the closed form against vacc_bruteforce(g, 0, d + 1, total)."""
    value = vacc_formula_avg(g, total)
    brute = vacc_bruteforce(
        g, VertexFn.zeros(g.n), VertexFn.degrees(g, offset=1), total, size_limit=size_limit
    )
    holds = brute == value
    if not holds:
        logger.warning(f"Closed form {value} disagrees with brute force {brute} at total {total}")
    return FormulaReport(total=total, value=value, bruteforce=brute, holds=holds)
