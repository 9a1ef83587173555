"""Exact Dushnik-Miller dimension by partitioning critical pairs.

A set of incomparable pairs is reversible by one linear extension iff it
has no strict alternating cycle; a realizer exists with t extensions iff
the critical pairs split into t reversible classes. The search is a
branch-and-bound coloring of critical pairs with incremental
alternating-cycle detection.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

from .errors import BudgetExceeded
from .poset import LinearExtension, Poset, Realizer, _tie_broken_extension

DEFAULT_NODE_CAP = 10_000_000
DEFAULT_WALL_CAP = 300.0
DEFAULT_DIM_CAP = 12


def wall_cap_override(default: float) -> float:
    env = os.environ.get("POSETLAB_CAP_SECONDS")
    return float(env) if env else default


@dataclass
class Refuted:
    """Exhaustive-search certificate that no t-realizer exists."""

    t: int
    reason: str = "exhausted"


@dataclass
class Budget:
    node_cap: int = DEFAULT_NODE_CAP
    wall_cap: float = DEFAULT_WALL_CAP
    nodes: int = 0
    deadline: float = field(default=0.0)

    def start(self) -> "Budget":
        self.deadline = time.monotonic() + wall_cap_override(self.wall_cap)
        return self

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.node_cap:
            raise BudgetExceeded(f"node cap {self.node_cap} hit")
        if self.nodes % 4096 == 0 and time.monotonic() > self.deadline:
            raise BudgetExceeded("wall-clock cap hit")


class _PairContext:
    """Precomputed comparability data over the critical pairs of a poset."""

    def __init__(self, p: Poset, pairs: list[tuple[str, str]]):
        self.p = p
        self.pairs = pairs
        m = len(pairs)
        # arrow[u] = bitmask of v with a_u <= b_v: edge of the alternating
        # cycle digraph. A class is reversible iff its digraph is acyclic.
        self.arrow = [0] * m
        for u, (au, bu) in enumerate(pairs):
            for v, (av, bv) in enumerate(pairs):
                if u != v and p.leq(au, bv):
                    self.arrow[u] |= 1 << v
        self.conflict = [
            self.arrow[u] & _transpose_bit(self.arrow, u, m) for u in range(m)
        ]

    def class_acyclic(self, members: int) -> bool:
        arrow = self.arrow
        color = {}

        def dfs(u: int) -> bool:
            color[u] = 1
            m = arrow[u] & members
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                c = color.get(v, 0)
                if c == 1 or (c == 0 and not dfs(v)):
                    return False
            color[u] = 2
            return True

        mem = members
        while mem:
            u = (mem & -mem).bit_length() - 1
            mem &= mem - 1
            if color.get(u, 0) == 0 and not dfs(u):
                return False
        return True

    def alternating_cycle(self, members: int) -> list[tuple[str, str]] | None:
        """A strict alternating cycle within the member set, if any."""
        arrow = self.arrow
        color: dict[int, int] = {}
        stack: list[int] = []
        found: list[int] = []

        def dfs(u: int) -> bool:
            color[u] = 1
            stack.append(u)
            m = arrow[u] & members
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                if color.get(v, 0) == 1:
                    found.extend(stack[stack.index(v):])
                    return True
                if color.get(v, 0) == 0 and dfs(v):
                    return True
            stack.pop()
            color[u] = 2
            return False

        mem = members
        while mem:
            u = (mem & -mem).bit_length() - 1
            mem &= mem - 1
            if color.get(u, 0) == 0 and dfs(u):
                return [self.pairs[i] for i in found]
        return None


def _transpose_bit(arrow: list[int], u: int, m: int) -> int:
    out = 0
    for v in range(m):
        if arrow[v] >> u & 1:
            out |= 1 << v
    return out


def is_reversible(
    p: Poset, pairs: list[tuple[str, str]]
) -> tuple[bool, list[tuple[str, str]] | None]:
    """Whether one linear extension can reverse every pair; else a witness
    strict alternating cycle."""
    pairs = list(pairs)
    for a, b in pairs:
        if not p.incomparable(a, b):
            raise ValueError(f"pair ({a!r}, {b!r}) is not incomparable")
    ctx = _PairContext(p, pairs)
    members = (1 << len(pairs)) - 1
    cyc = ctx.alternating_cycle(members)
    return (cyc is None), cyc


def extension_reversing(p: Poset, pairs: list[tuple[str, str]]) -> LinearExtension:
    """A linear extension of p putting b before a for every pair (a, b)."""
    aug = Poset.from_cover_pairs(
        p.elements, p.cover_pairs() + [(b, a) for a, b in pairs]
    )
    ext = _tie_broken_extension(aug, {})
    return LinearExtension(ext.order)


def _greedy_conflict_clique(ctx: _PairContext) -> list[int]:
    m = len(ctx.pairs)
    order = sorted(range(m), key=lambda u: -bin(ctx.conflict[u]).count("1"))
    clique: list[int] = []
    allowed = (1 << m) - 1
    for u in order:
        if allowed >> u & 1:
            clique.append(u)
            allowed &= ctx.conflict[u]
    return clique


def dim_at_most(p: Poset, t: int, budget: Budget | None = None) -> Realizer | Refuted:
    """A realizer with <= t extensions, or a Refuted certificate."""
    if t < 1:
        raise ValueError("t must be >= 1")
    crit = p.critical_pairs()
    if not crit:
        if p.incomparable_pairs():
            # cannot happen: any incomparable pair dominates a critical one
            raise AssertionError("incomparable pairs without critical pairs")
        return Realizer((LinearExtension(_tie_broken_extension(p, {}).order),))
    budget = (budget or Budget()).start()
    ctx = _PairContext(p, crit)
    if len(_greedy_conflict_clique(ctx)) > t:
        return Refuted(t, "pairwise-conflicting pair clique exceeds t")

    m = len(crit)
    # fail-first: most-conflicted pairs placed earliest
    order = sorted(range(m), key=lambda u: -bin(ctx.conflict[u]).count("1"))
    classes: list[int] = []

    def place(k: int) -> bool:
        budget.tick()
        if k == m:
            return True
        u = order[k]
        ubit = 1 << u
        tried_empty = False
        for ci in range(len(classes)):
            if classes[ci] & ctx.conflict[u]:
                continue
            cand = classes[ci] | ubit
            if ctx.class_acyclic(cand):
                classes[ci] = cand
                if place(k + 1):
                    return True
                classes[ci] = cand ^ ubit
        if len(classes) < t and not tried_empty:
            classes.append(ubit)
            if place(k + 1):
                return True
            classes.pop()
        return False

    if not place(0):
        return Refuted(t)
    exts = tuple(
        extension_reversing(p, [crit[i] for i in _iter_bits(c)]) for c in classes
    )
    return Realizer(exts)


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass
class DimResult:
    value: int
    realizer: Realizer
    lower_bound_witness: str


def dim_exact(
    p: Poset,
    cap: int = DEFAULT_DIM_CAP,
    budget: Budget | None = None,
    lower_bound: int | None = None,
) -> DimResult:
    """Exact dimension up to cap, with a realizer and a lower-bound note.

    The lower bound is seeded from the standard-example number (se <= dim)
    unless supplied; below it no refutation search is needed.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if lower_bound is None:
        from .containment import se

        if len(p.incomparable_pairs()) == 0:
            lower_bound, lb_note = 1, "chain"
        else:
            se_val, _ = se(p, cap=cap, budget=budget)
            lower_bound, lb_note = se_val, f"se-clique of order {se_val}"
    else:
        lb_note = f"supplied lower bound {lower_bound}"
    t = max(1, lower_bound)
    while t <= cap:
        result = dim_at_most(p, t, budget=budget)
        if isinstance(result, Realizer):
            note = lb_note if t == max(1, lower_bound) else f"exhaustive refutation at {t - 1}"
            return DimResult(t, result, note)
        t += 1
    raise BudgetExceeded(f"dimension exceeds cap {cap}")
