"""Generators for the named poset families and harness instances.

Wheel elements are labelled "r(i,j)" plus "min" (and "max" when a top is
attached). The wheel order is reverse containment of cyclic intervals:
r(i,j) <= r(i',j') iff <i',j'> is a proper subset of <i,j>.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import networkx as nx

from .errors import IndexOutOfRange, OrderTooSmall
from .poset import Poset


@dataclass(frozen=True)
class CyclicInterval:
    """The set of indices from i around to j in the cycle [N]."""

    i: int
    j: int
    n: int

    def members(self) -> frozenset[int]:
        return frozenset(cyclic_interval_members(self.i, self.j, self.n))


def cyclic_interval_members(i: int, j: int, n: int) -> set[int]:
    """Members of <i,j> in [n]: [i,j] when i <= j, else wrap [i,n] + [1,j]."""
    if n < 3:
        raise IndexOutOfRange(f"modulus {n} < 3")
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"({i},{j}) outside [1,{n}]")
    if i <= j:
        return set(range(i, j + 1))
    return set(range(i, n + 1)) | set(range(1, j + 1))


def wheel_label(i: int, j: int) -> str:
    return f"r({i},{j})"


def standard_example(d: int) -> Poset:
    """S_d: minimal a1..ad, maximal b1..bd, a_i < b_j iff i != j."""
    if d < 2:
        raise OrderTooSmall(f"standard example needs d >= 2, got {d}")
    elements = [f"a{i}" for i in range(1, d + 1)] + [f"b{i}" for i in range(1, d + 1)]
    covers = [
        (f"a{i}", f"b{j}")
        for i in range(1, d + 1)
        for j in range(1, d + 1)
        if i != j
    ]
    return Poset.from_cover_pairs(elements, covers)


def wheel_intervals(n: int) -> dict[str, frozenset[int]]:
    """Label -> member set for all wheel elements r(i,j), full cycle excluded."""
    out = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if (j + 1 - i) % n == 0:
                continue  # would be the full set [n]
            out[wheel_label(i, j)] = frozenset(cyclic_interval_members(i, j, n))
    return out


def wheel(n: int, attach_max: bool = False) -> Poset:
    """The wheel H_n: cyclic intervals under reverse containment plus min."""
    if n < 3:
        raise OrderTooSmall(f"wheel needs N >= 3, got {n}")
    intervals = wheel_intervals(n)
    elements = ["min"] + sorted(intervals)
    pairs = [("min", e) for e in intervals]
    labels = list(intervals)
    for a in labels:
        sa = intervals[a]
        for b in labels:
            if a != b and intervals[b] < sa:
                pairs.append((a, b))
    if attach_max:
        elements.append("max")
        pairs.extend((e, "max") for e in labels)
    return Poset.from_cover_pairs(elements, pairs)


def wheel_standard_example_labels(n: int) -> tuple[list[str], list[str]]:
    """The wheel elements inducing S_n: a_i = r(i+1,i-1), b_i = r(i,i)."""
    wrap = lambda k: (k - 1) % n + 1
    a = [wheel_label(wrap(i + 1), wrap(i - 1)) for i in range(1, n + 1)]
    b = [wheel_label(i, i) for i in range(1, n + 1)]
    return a, b


def kelly(d: int) -> Poset:
    """The Kelly poset K_d: S_d threaded onto two lateral chains.

    Chains x2 < ... < x(d-2) and y3 > y4 > ... > y(d-1) realize the
    off-diagonal comparabilities; a few direct covers close the corner
    cases. K_3 degenerates to S_3.
    """
    if d < 3:
        raise OrderTooSmall(f"Kelly poset needs d >= 3, got {d}")
    a = [f"a{i}" for i in range(1, d + 1)]
    b = [f"b{i}" for i in range(1, d + 1)]
    xs = [f"x{i}" for i in range(2, d - 1)]
    ys = [f"y{i}" for i in range(3, d)]
    covers: list[tuple[str, str]] = []
    # ascending left chain x2 < x3 < ... < x(d-2)
    covers += [(xs[k], xs[k + 1]) for k in range(len(xs) - 1)]
    # descending right chain y3 > y4 > ... > y(d-1)
    covers += [(ys[k + 1], ys[k]) for k in range(len(ys) - 1)]
    for i in range(2, d - 1):
        covers.append((f"a{i}", f"x{i}"))          # a_i below x_i, x_(i+1), ...
        covers.append((f"x{i}", f"b{i + 1}"))      # x_i below b_(i+1), b_(i+2), ...
    for i in range(3, d):
        covers.append((f"a{i}", f"y{i}"))          # a_i below y_i, y_(i-1), ...
        covers.append((f"y{i}", f"b{i - 1}"))      # y_i below b_(i-1), b_(i-2), ...
    if xs:
        covers += [("a1", xs[0]), (xs[-1], f"b{d}")]
    if ys:
        covers += [(f"a{d}", ys[-1]), (ys[0], "b1")]
    # corner comparabilities not reachable through the chains
    covers += [("a1", "b2"), ("a2", "b1"), (f"a{d - 1}", f"b{d}"), (f"a{d}", f"b{d - 1}")]
    if d == 3:
        covers += [("a1", "b3"), ("a3", "b1")]
    return Poset.from_cover_pairs(a + b + xs + ys, sorted(set(covers)))


def interval_order(seed: int, n: int) -> Poset:
    """Random interval order: [l1,r1] < [l2,r2] iff r1 < l2."""
    if n < 1:
        raise OrderTooSmall(f"interval order needs n >= 1, got {n}")
    rng = random.Random(seed)
    intervals = []
    for k in range(n):
        l = rng.randint(0, 3 * n)
        r = l + rng.randint(0, n)
        intervals.append((l, r, f"i{k}"))
    return _interval_poset(intervals)


def canonical_interval_order(m: int) -> Poset:
    """All intervals [a,b] with integer endpoints 1 <= a < b <= m."""
    intervals = [
        (a, b, f"i({a},{b})") for a in range(1, m + 1) for b in range(a + 1, m + 1)
    ]
    return _interval_poset(intervals)


def _interval_poset(intervals: list[tuple[int, int, str]]) -> Poset:
    elements = [name for _, _, name in intervals]
    pairs = [
        (n1, n2)
        for l1, r1, n1 in intervals
        for l2, r2, n2 in intervals
        if n1 != n2 and r1 < l2
    ]
    return Poset.from_cover_pairs(elements, pairs)


def random_cover_planar_with_unique_min(seed: int, size_budget: int) -> Poset:
    """Seeded poset with a planar cover graph and a single minimal element.

    Grows upward from a root, adding each new element as a maximal element
    covering a small antichain; candidate covers that would break planarity
    of the cover graph are rejected.
    """
    size_budget = max(2, size_budget)
    rng = random.Random(seed)
    elements = ["v0", "v1"]
    covers = [("v0", "v1")]
    below: dict[str, set[str]] = {"v0": set(), "v1": {"v0"}}
    g = nx.Graph([("v0", "v1")])
    while len(elements) < size_budget:
        name = f"v{len(elements)}"
        k = rng.choice([1, 1, 1, 2, 2, 3])
        parents: list[str] = []
        pool = [e for e in elements if e != "v0"] or ["v0"]
        rng.shuffle(pool)
        for cand in pool:
            if len(parents) >= k:
                break
            # parents must form an antichain so each new edge is a cover
            if any(cand in below[p] or p in below[cand] for p in parents):
                continue
            g.add_edge(cand, name)
            if nx.check_planarity(g)[0]:
                parents.append(cand)
            else:
                g.remove_edge(cand, name)
                if g.degree(name) == 0 and name in g:
                    g.remove_node(name)
        if not parents:
            parents = ["v0"]
            g.add_edge("v0", name)
        elements.append(name)
        covers.extend((p, name) for p in parents)
        below[name] = set().union(*(below[p] | {p} for p in parents))
    return Poset.from_cover_pairs(elements, covers)
