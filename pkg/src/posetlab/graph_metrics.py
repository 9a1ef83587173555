"""Exact treewidth at desk scale, grid subgraph/minor search, and the
explicit wheel-to-grid map.

Treewidth is computed by branch and bound over elimination orders with
memoization on the set of already-eliminated vertices; the returned tree
decomposition is rebuilt from the best order and re-validated against the
three decomposition axioms before it leaves this module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .containment import NotFound
from .dimension import Budget
from .errors import BudgetExceeded, OrderTooSmall
from .families import wheel, wheel_label


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[frozenset[str], ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max(len(b) for b in self.bags) - 1


def validate_decomposition(g: nx.Graph, td: TreeDecomposition) -> bool:
    """The three axioms: vertex coverage, edge coverage, and connectivity
    of the bags containing each vertex."""
    tree = nx.Graph()
    tree.add_nodes_from(range(len(td.bags)))
    tree.add_edges_from(td.edges)
    if len(td.bags) > 1 and not nx.is_tree(tree):
        return False
    union = set().union(*td.bags)
    if set(g.nodes) - union:
        return False
    for u, v in g.edges:
        if not any(u in b and v in b for b in td.bags):
            return False
    for v in g.nodes:
        holding = [i for i, b in enumerate(td.bags) if v in b]
        sub = tree.subgraph(holding)
        if not nx.is_connected(sub):
            return False
    return True


def _min_fill_order(adj: dict[str, set[str]]) -> tuple[list[str], int]:
    adj = {v: set(ns) for v, ns in adj.items()}
    order: list[str] = []
    width = 0
    while adj:
        best_v, best_fill = None, None
        for v, ns in adj.items():
            fill = sum(
                1 for a, b in itertools.combinations(ns, 2) if b not in adj[a]
            )
            if best_fill is None or fill < best_fill:
                best_v, best_fill = v, fill
        v = best_v
        ns = adj.pop(v)
        width = max(width, len(ns))
        for a in ns:
            adj[a] |= ns - {a}
            adj[a].discard(v)
        order.append(v)
    return order, width


def _mmd_lower_bound(adj: dict[str, set[str]]) -> int:
    """Maximum-minimum-degree bound: repeatedly contract a minimum-degree
    vertex into its lowest-degree neighbour."""
    adj = {v: set(ns) for v, ns in adj.items()}
    best = 0
    while len(adj) > 1:
        v = min(adj, key=lambda u: len(adj[u]))
        best = max(best, len(adj[v]))
        if not adj[v]:
            del adj[v]
            continue
        w = min(adj[v], key=lambda u: len(adj[u]))
        merged = (adj[v] | adj[w]) - {v, w}
        del adj[v]
        adj[w] = merged
        for u in adj:
            if u == w:
                continue
            if v in adj[u]:
                adj[u].discard(v)
                adj[u].add(w)
            adj[u].discard(u)
        for u in merged:
            adj[u].add(w)
    return best


def _eliminate(adj: dict[str, set[str]], v: str) -> dict[str, set[str]]:
    ns = adj[v]
    out = {u: set(nbrs) for u, nbrs in adj.items() if u != v}
    for a in ns:
        out[a] |= ns - {a}
        out[a].discard(v)
    return out


def treewidth_exact(
    g: nx.Graph, cap: int | None = None, budget: Budget | None = None
) -> tuple[int, TreeDecomposition]:
    """Exact treewidth with a validated tree decomposition.

    cap, when given, aborts with BudgetExceeded as soon as the proven
    lower bound exceeds it.
    """
    if g.number_of_nodes() == 0:
        raise ValueError("treewidth of the empty graph is undefined")
    nodes = sorted(g.nodes, key=repr)
    if len(nodes) == 1:
        td = TreeDecomposition((frozenset(nodes),), ())
        return 0, td
    adj0 = {v: set(g.neighbors(v)) - {v} for v in nodes}
    budget = (budget or Budget()).start()

    heur_order, ub = _min_fill_order(adj0)
    lb = _mmd_lower_bound(adj0)
    if cap is not None and lb > cap:
        raise BudgetExceeded(f"treewidth lower bound {lb} exceeds cap {cap}")
    best_order = heur_order
    best_width = ub

    memo: dict[frozenset[str], int] = {}

    def search(adj: dict[str, set[str]], partial: int, prefix: list[str]) -> None:
        nonlocal best_order, best_width
        budget.tick()
        if partial >= best_width:
            return
        if len(adj) <= partial + 1:
            # any order of the remainder stays within the partial width
            best_width = partial
            best_order = prefix + sorted(adj, key=repr)
            return
        key = frozenset(adj)
        seen = memo.get(key)
        if seen is not None and seen <= partial:
            return
        memo[key] = partial
        # a simplicial vertex is always a safe first elimination
        for v in adj:
            ns = adj[v]
            if all(b in adj[a] for a, b in itertools.combinations(ns, 2)):
                if max(partial, len(ns)) < best_width:
                    search(
                        _eliminate(adj, v), max(partial, len(ns)), prefix + [v]
                    )
                return
        if _mmd_lower_bound(adj) >= best_width:
            return
        for v in sorted(adj, key=lambda u: len(adj[u])):
            w = max(partial, len(adj[v]))
            if w >= best_width:
                continue
            search(_eliminate(adj, v), w, prefix + [v])

    search(adj0, 0, [])
    if cap is not None and best_width > cap:
        raise BudgetExceeded(f"treewidth {best_width} exceeds cap {cap}")
    td = _decomposition_from_order(adj0, best_order)
    if td.width != best_width or not validate_decomposition(g, td):
        raise AssertionError("tree decomposition failed self-validation")
    return best_width, td


def _decomposition_from_order(
    adj: dict[str, set[str]], order: list[str]
) -> TreeDecomposition:
    adj = {v: set(ns) for v, ns in adj.items()}
    bags: list[frozenset[str]] = []
    bag_ns: list[set[str]] = []
    for v in order:
        ns = adj.pop(v)
        bags.append(frozenset({v} | ns))
        bag_ns.append(ns)
        for a in ns:
            adj[a] |= ns - {a}
            adj[a].discard(v)
    pos = {v: i for i, v in enumerate(order)}
    edges = []
    for i, ns in enumerate(bag_ns):
        if ns:
            j = pos[min(ns, key=lambda u: pos[u])]
            edges.append((i, j))
        elif i + 1 < len(bags):
            edges.append((i, i + 1))  # keep disconnected components in one tree
    return TreeDecomposition(tuple(bags), tuple(edges))


# -- grids --------------------------------------------------------------


def grid_graph(n: int) -> nx.Graph:
    """The n x n grid on vertices (row, col)."""
    if n < 1:
        raise OrderTooSmall(f"grid needs n >= 1, got {n}")
    g = nx.Graph()
    for r in range(n):
        for c in range(n):
            g.add_node((r, c))
            if r > 0:
                g.add_edge((r - 1, c), (r, c))
            if c > 0:
                g.add_edge((r, c - 1), (r, c))
    return g


def verify_grid_subgraph(
    g: nx.Graph, n: int, mapping: dict[tuple[int, int], str]
) -> bool:
    """True iff mapping injectively sends grid edges to edges of g."""
    grid = grid_graph(n)
    if set(mapping) != set(grid.nodes):
        return False
    if len(set(mapping.values())) != len(mapping):
        return False
    if any(v not in g for v in mapping.values()):
        return False
    return all(g.has_edge(mapping[a], mapping[b]) for a, b in grid.edges)


def grid_subgraph(
    g: nx.Graph, n: int, budget: Budget | None = None
) -> dict[tuple[int, int], str] | NotFound:
    """An injective adjacency-preserving image of the n x n grid, or an
    exhaustive NotFound within the budget."""
    if n < 2:
        raise OrderTooSmall(f"grid search needs n >= 2, got {n}")
    if g.number_of_nodes() < n * n:
        return NotFound("host smaller than the grid")
    budget = (budget or Budget()).start()
    # row-major order: each new vertex touches at most two placed ones
    cells = [(r, c) for r in range(n) for c in range(n)]
    need = {
        (r, c): [p for p in ((r - 1, c), (r, c - 1)) if p[0] >= 0 and p[1] >= 0]
        for r, c in cells
    }
    deg_needed = {cell: len(list(grid_graph(n).neighbors(cell))) for cell in cells}
    assignment: dict[tuple[int, int], str] = {}
    used: set[str] = set()

    def place(k: int) -> bool:
        budget.tick()
        if k == len(cells):
            return True
        cell = cells[k]
        anchors = [assignment[p] for p in need[cell]]
        if anchors:
            pool = set(g.neighbors(anchors[0]))
            for a in anchors[1:]:
                pool &= set(g.neighbors(a))
        else:
            pool = set(g.nodes)
        for h in sorted(pool, key=repr):
            if h in used or g.degree(h) < deg_needed[cell]:
                continue
            assignment[cell] = h
            used.add(h)
            if place(k + 1):
                return True
            del assignment[cell]
            used.remove(h)
        return False

    if place(0):
        return dict(assignment)
    return NotFound()


MINOR_MAX_N = 3
MINOR_MAX_VERTICES = 30


def verify_grid_minor(
    g: nx.Graph, n: int, branch_sets: dict[tuple[int, int], frozenset[str]]
) -> bool:
    """Disjoint connected branch sets with an edge between every pair that
    is adjacent in the grid."""
    grid = grid_graph(n)
    if set(branch_sets) != set(grid.nodes):
        return False
    seen: set[str] = set()
    for bs in branch_sets.values():
        if not bs or (bs & seen) or any(v not in g for v in bs):
            return False
        if not nx.is_connected(g.subgraph(bs)):
            return False
        seen |= bs
    for a, b in grid.edges:
        if not any(
            g.has_edge(u, v) for u in branch_sets[a] for v in branch_sets[b]
        ):
            return False
    return True


def grid_minor(
    g: nx.Graph, n: int, budget: Budget | None = None
) -> dict[tuple[int, int], frozenset[str]] | NotFound:
    """Branch sets of an n x n grid minor, or an exhaustive NotFound.

    Limited to n <= 3 and hosts of at most 30 vertices; larger grids must
    come from explicit certificates.
    """
    if n < 2:
        raise OrderTooSmall(f"grid search needs n >= 2, got {n}")
    if n > MINOR_MAX_N:
        raise ValueError(f"generic minor search is limited to n <= {MINOR_MAX_N}")
    if g.number_of_nodes() > MINOR_MAX_VERTICES:
        raise ValueError(
            f"generic minor search is limited to {MINOR_MAX_VERTICES} vertices"
        )
    if g.number_of_nodes() < n * n:
        return NotFound("host smaller than the grid")
    # circuit-rank pruning: an n x n grid minor keeps (n-1)^2 independent
    # cycles, which contraction and deletion cannot create
    rank = g.number_of_edges() - g.number_of_nodes() + nx.number_connected_components(g)
    if rank < (n - 1) * (n - 1):
        return NotFound("circuit rank below the grid's")
    budget = (budget or Budget()).start()

    sub = grid_subgraph(g, n, budget=budget)
    if not isinstance(sub, NotFound):
        return {cell: frozenset({v}) for cell, v in sub.items()}

    cells = [(r, c) for r in range(n) for c in range(n)]
    need = {
        (r, c): [p for p in ((r - 1, c), (r, c - 1)) if p[0] >= 0 and p[1] >= 0]
        for r, c in cells
    }
    nodes = sorted(g.nodes, key=repr)
    assignment: dict[tuple[int, int], frozenset[str]] = {}
    used: set[str] = set()

    def connected_supersets(seed: str, free: list[str]):
        """All connected vertex sets containing seed within seed ∪ free."""
        stack = [(frozenset({seed}), 0)]
        while stack:
            current, start = stack.pop()
            yield current
            for idx in range(start, len(free)):
                v = free[idx]
                if any(g.has_edge(v, u) for u in current):
                    stack.append((current | {v}, idx + 1))

    def place(k: int) -> bool:
        budget.tick()
        if k == len(cells):
            return True
        cell = cells[k]
        anchors = [assignment[p] for p in need[cell]]
        free = [v for v in nodes if v not in used]
        for seed in free:
            rest = [v for v in free if v != seed]
            for bs in connected_supersets(seed, rest):
                budget.tick()
                if not all(
                    any(g.has_edge(u, v) for u in bs for v in a) for a in anchors
                ):
                    continue
                assignment[cell] = bs
                used.update(bs)
                if place(k + 1):
                    return True
                del assignment[cell]
                used.difference_update(bs)
        return False

    if place(0):
        return dict(assignment)
    return NotFound()


# -- explicit wheel-to-grid map -----------------------------------------


def wheel_grid_certificate(
    n: int, host_order: int | None = None
) -> dict[tuple[int, int], str]:
    """Grid vertex (row, col) -> wheel(host_order) element, validated on
    output; the host defaults to the smallest admissible wheel(2n+1).

    Rows vary the interval start, columns its length: (a, b) maps to the
    interval of length 2n - a - b starting at a + 1, so row steps drop the
    first index and column steps drop the last -- both cover edges.
    """
    if n < 2:
        raise OrderTooSmall(f"grid certificate needs n >= 2, got {n}")
    if host_order is None:
        host_order = 2 * n + 1
    if host_order < 2 * n + 1:
        raise OrderTooSmall(
            f"an n x n grid needs a wheel of order >= {2 * n + 1}, got {host_order}"
        )
    mapping = {
        (a, b): wheel_label(1 + a, 2 * n - b)
        for a in range(n)
        for b in range(n)
    }
    host = wheel(host_order)
    g = nx.Graph(host.cover_pairs())
    if not verify_grid_subgraph(g, n, mapping):
        raise AssertionError("wheel grid certificate failed validation")
    return mapping
