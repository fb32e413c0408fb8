# src/tree_vacc_dp.py
"""Exact budgeted partial immunization on trees.

For a tree T rooted at r, thresholds tau, per-vertex increment bounds
iota_max and a budget b, vacc(T, tau, iota_max, b) is the largest dyn(T, tau + iota)
over increments 0 <= iota <= iota_max with iota(V) = b.

The table holds, for every vertex u and budget b' <= b:

    x0(u, b')  max dyn of the subtree at u when b' is spent inside it
    x1(u, b')  the same with u's threshold lowered by one (its parent got infected first)

Leaves are read off directly. An internal vertex with children v_1..v_k
combines child rows through a table over (children used, tight children,
budget spent), where child i is tight at b_i when x0(v_i, b_i) == x1(v_i, b_i).
Vertex u must be seeded (delta = 1) iff fewer than tau(u) + b_u - j children
are tight. vacc is x0(r, b). The total work is O(sum_u d(u)^2 (b+1)^2).
"""

# Standard library imports
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

# Local imports
from .config import DEFAULT_ROOT
from .errors import BudgetInfeasible
from .ext_int import NEG_INF, ExtInt, is_finite
from .graph_core import (
    Graph,
    RootedTree,
    VertexFn,
    attach_capacities,
    degree_square_sum,
    root_tree,
)

logger = logging.getLogger(__name__)


# --- Domain types ---
@dataclass(frozen=True)
class CellChoice:
    """Maximizing split of a cell's budget.

    Attributes:
        own_budget: b_u, the increment placed on the vertex itself.
        child_budgets: b_i per child, in sorted child order.
        seeded: True when the split needs the vertex itself in the monopoly (delta0 = 1).
        tight_children: children with x0 == x1 at their budget; when not seeded,
            these are the ones that reach the vertex's threshold from below.
    """
    own_budget: int
    child_budgets: Tuple[int, ...] = ()
    seeded: bool = False
    tight_children: Tuple[int, ...] = ()


@dataclass(frozen=True)
class DpCell:
    x0: ExtInt
    x1: ExtInt
    choice: Optional[CellChoice] = None

    @property
    def is_finite(self) -> bool:
        return is_finite(self.x0)

    @property
    def is_tight(self) -> bool:
        return is_finite(self.x0) and self.x0 == self.x1


INFEASIBLE_CELL = DpCell(NEG_INF, NEG_INF, None)


@dataclass(frozen=True)
class DpTable:
    """All cells (u, b') for b' in 0..budget, built for one (tree, tau, iota_max, budget)."""
    tree: RootedTree
    tau: VertexFn
    iota_max: VertexFn
    budget: int
    cells: Tuple[Tuple[DpCell, ...], ...]

    def cell(self, u: int, b: int) -> DpCell:
        return self.cells[u][b]

    @property
    def root(self) -> int:
        return self.tree.root


@dataclass(frozen=True)
class MTable:
    """Partial-combination values M(p, p_eq, b', b_u) for one vertex and one b_u.

    `values[p][q][b']` covers the first p children; entries outside the
    stored range read as NEG_INF.
    """
    own_budget: int
    values: Tuple[Tuple[Tuple[ExtInt, ...], ...], ...]

    def __call__(self, p: int, p_eq: int, b_prime: int) -> ExtInt:
        if p < 0 or p >= len(self.values) or p_eq < 0 or p_eq > p:
            return NEG_INF
        row = self.values[p][p_eq]
        if b_prime < 0 or b_prime >= len(row):
            return NEG_INF
        return row[b_prime]


@dataclass(frozen=True)
class VaccResult:
    value: int
    increment: VertexFn
    root: int
    table: DpTable


# --- Leaves ---
def leaf_cell(tau_u: int, iota_max_u: int, b: int) -> DpCell:
    """Cell of a leaf spending b on itself: x_j = 0 iff tau(u) + b - j <= 0, else 1.

    Callers record INFEASIBLE_CELL for b outside 0..iota_max_u.
    """
    x0 = 0 if tau_u + b <= 0 else 1
    x1 = 0 if tau_u + b - 1 <= 0 else 1
    return DpCell(x0, x1, CellChoice(own_budget=b, seeded=x0 == 1))


def _leaf_row(tau_u: int, iota_max_u: int, b: int) -> Tuple[DpCell, ...]:
    return tuple(
        leaf_cell(tau_u, iota_max_u, b_prime) if b_prime <= iota_max_u else INFEASIBLE_CELL
        for b_prime in range(b + 1)
    )


# --- Child combination ---
def _row_capacity(row: Sequence[DpCell]) -> int:
    """Largest budget with a finite cell in a child row."""
    cap = -1
    for b_prime, cell in enumerate(row):
        if cell.is_finite:
            cap = b_prime
    return cap


def _combine(child_rows: Sequence[Sequence[DpCell]], b: int):
    """Combination table over children in the given order.

    Returns (values, picks) where values[p][q][s] is the largest sum of x1
    over the first p children sharing budget s with exactly q of them tight,
    and picks[p][q][s] is the budget given to child p in the smallest-budget
    maximizer (None where values is NEG_INF).
    """
    k = len(child_rows)
    values: List[List[List[ExtInt]]] = [[[NEG_INF] * (b + 1)]]
    values[0][0][0] = 0
    picks: List[List[List[Optional[int]]]] = [[[None] * (b + 1)]]
    reach = 0  # largest finite s so far
    for p in range(1, k + 1):
        row = child_rows[p - 1]
        cap = min(_row_capacity(row), b)
        prev = values[p - 1]
        cur: List[List[ExtInt]] = [[NEG_INF] * (b + 1) for _ in range(p + 1)]
        cur_picks: List[List[Optional[int]]] = [[None] * (b + 1) for _ in range(p + 1)]
        new_reach = min(b, reach + cap)
        for q in range(p + 1):
            for s in range(new_reach + 1):
                best: ExtInt = NEG_INF
                best_pick: Optional[int] = None
                for b_p in range(min(s, cap) + 1):
                    cell = row[b_p]
                    q_prev = q - 1 if cell.is_tight else q
                    if q_prev < 0 or q_prev > p - 1:
                        continue
                    base = prev[q_prev][s - b_p]
                    if base is NEG_INF:
                        continue
                    candidate = base + cell.x1
                    if best is NEG_INF or candidate > best:
                        best, best_pick = candidate, b_p
                cur[q][s] = best
                cur_picks[q][s] = best_pick
        values.append(cur)
        picks.append(cur_picks)
        reach = new_reach
    return values, picks


def m_table(child_cells: Sequence[Sequence[DpCell]], b: int, b_u: int) -> MTable:
    """M(p, p_eq, b', b_u) for all p in 0..k, p_eq in 0..p and b' in 0..b.

    M is the largest sum of x1 over the first p children when b' - b_u is
    split among them with exactly p_eq tight children; NEG_INF when no split
    exists. M(0, 0, b', b_u) is 0 iff b' == b_u.
    """
    values, _ = _combine(child_cells, b)
    shifted = tuple(
        tuple(
            tuple(row[b_prime - b_u] if b_prime >= b_u else NEG_INF for b_prime in range(b + 1))
            for row in per_p
        )
        for per_p in values
    )
    return MTable(own_budget=b_u, values=shifted)


def _split_budget(
    suffix_picks,
    child_rows: Sequence[Sequence[DpCell]],
    q: int,
    s: int,
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Walk the picks of the reversed-order table to recover per-child budgets.

    The table was built over children in reverse order, so the child added
    last is the first sorted child; each step takes its smallest maximizing
    budget, giving the lexicographically smallest split.
    """
    k = len(child_rows)
    budgets = []
    tight = []
    for i in range(k):
        p = k - i
        b_i = suffix_picks[p][q][s]
        budgets.append(b_i)
        if child_rows[i][b_i].is_tight:
            tight.append(i)
            q -= 1
        s -= b_i
    return tuple(budgets), tuple(tight)


def _best_branch(column: Sequence[ExtInt], threshold: int) -> Tuple[ExtInt, Optional[int]]:
    """Best of the seeded branch (q <= threshold - 1, plus one) and the free branch (q >= threshold).

    Returns (value, q) with the smallest maximizing q; (NEG_INF, None) if no q is feasible.
    """
    best: ExtInt = NEG_INF
    best_q: Optional[int] = None
    for q, v in enumerate(column):
        if v is NEG_INF:
            continue
        if q <= threshold - 1:
            v = v + 1
        if best is NEG_INF or v > best:
            best, best_q = v, q
    return best, best_q


def combine_children_row(
    u: int,
    tau_u: int,
    iota_max_u: int,
    child_cells: Sequence[Sequence[DpCell]],
    b: int,
    children: Optional[Sequence[int]] = None,
) -> Tuple[DpCell, ...]:
    """Cells of internal vertex u for every budget 0..b.

    For each b_u the value is max(1 + max{M : p_eq <= tau(u) + b_u - 1 - j},
    max{M : p_eq >= tau(u) + b_u - j}); the cell takes the max over b_u,
    smallest b_u first on ties. The recorded split maximizes x0 and x1 at
    once, so one increment per cell serves both.

    Args:
        children: Vertex ids of the child rows, used to name tight children
            in the recorded choice; positions are used when omitted.
    """
    k = len(child_cells)
    # Reverse order so the pick walk starts at the first sorted child.
    values, picks = _combine(list(reversed(child_cells)), b)
    full = values[k]
    names = tuple(children) if children is not None else tuple(range(k))

    row: List[DpCell] = []
    for b_prime in range(b + 1):
        best: List[ExtInt] = [NEG_INF, NEG_INF]
        arg: List[Optional[Tuple[int, int]]] = [None, None]
        for b_u in range(min(iota_max_u, b_prime) + 1):
            column = [full[q][b_prime - b_u] for q in range(k + 1)]
            for j in (0, 1):
                value, q = _best_branch(column, tau_u + b_u - j)
                if value is NEG_INF:
                    continue
                if best[j] is NEG_INF or value > best[j]:
                    best[j] = value
                    arg[j] = (b_u, q)
        if best[0] is NEG_INF:
            row.append(INFEASIBLE_CELL)
            continue
        # With x0 == x1 the x1 maximizer also maximizes x0; otherwise every x0 maximizer maximizes x1.
        b_u, q = arg[1] if best[0] == best[1] else arg[0]
        child_budgets, tight_idx = _split_budget(picks, child_cells, q, b_prime - b_u)
        choice = CellChoice(
            own_budget=b_u,
            child_budgets=child_budgets,
            seeded=q <= tau_u + b_u - 1,
            tight_children=tuple(names[i] for i in tight_idx),
        )
        row.append(DpCell(best[0], best[1], choice))
    logger.debug(f"Vertex {u}: combined {k} children over budgets 0..{b}")
    return tuple(row)


def combine_children(
    u: int,
    tau_u: int,
    iota_max_u: int,
    child_cells: Sequence[Sequence[DpCell]],
    b: int,
) -> DpCell:
    """Cell (u, b) of an internal vertex from complete child rows over budgets 0..b."""
    return combine_children_row(u, tau_u, iota_max_u, child_cells, b)[b]


# --- Whole-tree driver ---
def run_dp(t: RootedTree, tau: VertexFn, iota_max: VertexFn, b: int) -> DpTable:
    """Fill every cell (u, b') for b' in 0..b in postorder.

    Raises:
        LengthMismatch: tau or iota_max does not match the tree.
        NegativeCapacity: iota_max has a negative entry.
        BudgetInfeasible: b < 0 or b > iota_max(V(T)).
    """
    tau.check_length(t.n, 'tau')
    t = attach_capacities(t, iota_max)
    total = t.subtree_capacity[t.root]
    if b < 0 or b > total:
        raise BudgetInfeasible(f"Budget {b} is outside 0..{total} (the total increment capacity).")

    logger.info(
        f"Running tree DP: n={t.n}, root={t.root}, budget={b}, "
        f"sum of squared degrees={degree_square_sum(t.base)}"
    )
    rows: List[Optional[Tuple[DpCell, ...]]] = [None] * t.n
    for u in t.postorder:
        if t.is_leaf(u):
            rows[u] = _leaf_row(tau[u], iota_max[u], b)
        else:
            rows[u] = combine_children_row(
                u, tau[u], iota_max[u], [rows[v] for v in t.children[u]], b, children=t.children[u]
            )
    return DpTable(tree=t, tau=tau, iota_max=iota_max, budget=b, cells=tuple(rows))


def extract_vacc(table: DpTable) -> int:
    """vacc(T, tau, iota_max, b) = x0(root, b)."""
    value = table.cell(table.root, table.budget).x0
    if value is NEG_INF:
        raise BudgetInfeasible(f"Table for budget {table.budget} has no feasible increment.")
    return value


def vacc_profile(table: DpTable) -> List[int]:
    """vacc for every budget 0..table.budget, read from the root row of one table."""
    return [table.cell(table.root, b_prime).x0 for b_prime in range(table.budget + 1)]


def reconstruct_increment(table: DpTable) -> VertexFn:
    """An optimal increment: own budgets read top-down along the recorded splits."""
    t = table.tree
    iota = [0] * t.n
    stack = [(t.root, table.budget)]
    while stack:
        u, b_u_total = stack.pop()
        choice = table.cell(u, b_u_total).choice
        if choice is None:
            raise BudgetInfeasible(f"No recorded split at vertex {u} for budget {b_u_total}.")
        iota[u] = choice.own_budget
        stack.extend(zip(t.children[u], choice.child_budgets))
    return VertexFn.of(iota)


def dyn_tree(t: RootedTree, tau: VertexFn) -> int:
    """dyn(T, tau) exactly: the DP with zero budget and zero increment bounds."""
    return extract_vacc(run_dp(t, tau, VertexFn.zeros(t.n), 0))


def vacc_tree_degree_bounded(t: RootedTree, b: int) -> int:
    """vacc(T, 0, d_T, b): zero base thresholds, each vertex raised at most to its degree."""
    return extract_vacc(run_dp(t, VertexFn.zeros(t.n), VertexFn.degrees(t.base), b))


def solve_vacc(
    g: Graph,
    tau: VertexFn,
    iota_max: VertexFn,
    b: int,
    root: Optional[int] = None,
) -> VaccResult:
    """Root g, run the DP, and return the value with an optimal increment."""
    r = DEFAULT_ROOT if root is None else root
    table = run_dp(root_tree(g, r), tau, iota_max, b)
    value = extract_vacc(table)
    increment = reconstruct_increment(table)
    logger.info(f"vacc = {value} at budget {b} (root {r})")
    return VaccResult(value=value, increment=increment, root=r, table=table)


def cell_invariant_violations(table: DpTable) -> List[str]:
    """Audit a table: x1 <= x0 <= x1 + 1 on finite cells, NEG_INF exactly above subtree capacity."""
    problems = []
    capacity = table.tree.subtree_capacity
    for u in range(table.tree.n):
        for b_prime in range(table.budget + 1):
            cell = table.cell(u, b_prime)
            if b_prime > capacity[u]:
                if cell.x0 is not NEG_INF or cell.x1 is not NEG_INF:
                    problems.append(f"cell ({u}, {b_prime}) above capacity {capacity[u]} is finite")
                continue
            if cell.x0 is NEG_INF or cell.x1 is NEG_INF:
                problems.append(f"cell ({u}, {b_prime}) within capacity {capacity[u]} is NEG_INF")
            elif not cell.x1 <= cell.x0 <= cell.x1 + 1:
                problems.append(f"cell ({u}, {b_prime}) has x0={cell.x0}, x1={cell.x1}")
    return problems
