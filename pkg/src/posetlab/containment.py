"""Containment parameters: se(P), wheel(P), kelly(P), and embedding search.

se reduces to maximum clique in a compatibility graph over incomparable
pairs: (a,b) and (a',b') are compatible iff the four elements induce S_2
with that pairing, so standard examples of order d are exactly d-cliques.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dimension import Budget
from .errors import BudgetExceeded
from .poset import Poset


@dataclass
class NotFound:
    """Exhaustive negative answer within the budget."""

    reason: str = "exhausted"


def verify_embedding(host: Poset, pattern: Poset, mapping: dict[str, str]) -> bool:
    """True iff mapping is injective and bi-preserves comparability."""
    if set(mapping) != set(pattern.elements):
        return False
    image = list(mapping.values())
    if len(set(image)) != len(image):
        return False
    if any(v not in host for v in image):
        return False
    for a in pattern.elements:
        for b in pattern.elements:
            if a == b:
                continue
            if pattern.less(a, b) != host.less(mapping[a], mapping[b]):
                return False
    return True


# -- se via clique reduction ------------------------------------------


def _se_compat_graph(p: Poset) -> tuple[list[tuple[str, str]], list[int]]:
    pairs = p.incomparable_pairs()
    m = len(pairs)
    adj = [0] * m
    for u in range(m):
        au, bu = pairs[u]
        for v in range(u + 1, m):
            av, bv = pairs[v]
            if (
                p.less(au, bv)
                and p.less(av, bu)
                and p.incomparable(au, av)
                and p.incomparable(bu, bv)
            ):
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return pairs, adj


def max_clique(adj: list[int], budget: Budget, at_least: int = 0) -> list[int]:
    """Tomita-style branch and bound with greedy coloring, over bitset rows."""
    n = len(adj)
    if n == 0:
        return []
    order = sorted(range(n), key=lambda v: -bin(adj[v]).count("1"))
    best: list[int] = []

    # greedy seed so pruning starts tight
    for start in order[: min(n, 30)]:
        cand = [start]
        allowed = adj[start]
        while allowed:
            v = max(_bits(allowed), key=lambda w: bin(adj[w] & allowed).count("1"))
            cand.append(v)
            allowed &= adj[v]
        if len(cand) > len(best):
            best = cand

    def color_sort(cand_mask: int) -> list[tuple[int, int]]:
        out: list[tuple[int, int]] = []
        color = 0
        rest = cand_mask
        while rest:
            color += 1
            avail = rest
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= avail - 1
                out.append((v, color))
                avail &= ~adj[v]
                rest &= ~(1 << v)
        return out

    def expand(current: list[int], cand_mask: int) -> None:
        budget.tick()
        nonlocal best
        colored = color_sort(cand_mask)
        for v, color in reversed(colored):
            if len(current) + color <= len(best):
                return
            current.append(v)
            sub = cand_mask & adj[v]
            if sub:
                expand(current, sub)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            cand_mask &= ~(1 << v)

    expand([], (1 << n) - 1)
    return best


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def se(
    p: Poset, cap: int = 64, budget: Budget | None = None
) -> tuple[int, list[tuple[str, str]]]:
    """Standard example number with witness pairs (a_i, b_i) inducing S_se."""
    if cap < 2:
        raise ValueError("cap must be >= 2")
    budget = (budget or Budget()).start()
    pairs, adj = _se_compat_graph(p)
    if not any(adj):
        return 1, []
    clique = max_clique(adj, budget)
    witness = [pairs[u] for u in clique]
    value = min(len(clique), cap)
    return value, witness[:value]


def se_witness_poset(witness: list[tuple[str, str]]) -> tuple[Poset, dict[str, str]]:
    """The abstract S_d together with its embedding map for a se witness."""
    from .families import standard_example

    d = len(witness)
    pattern = standard_example(d)
    mapping = {}
    for k, (a, b) in enumerate(witness, start=1):
        mapping[f"a{k}"] = a
        mapping[f"b{k}"] = b
    return pattern, mapping


# -- generic subposet containment --------------------------------------


def contains_subposet(
    host: Poset, pattern: Poset, budget: Budget | None = None
) -> dict[str, str] | NotFound:
    """An injective map preserving comparability and incomparability, or
    an exhaustive NotFound."""
    if len(pattern) > len(host):
        return NotFound("pattern larger than host")
    budget = (budget or Budget()).start()

    pat = list(pattern.elements)
    # most-constrained-first: high comparability degree early
    deg = {
        e: sum(
            1
            for f in pattern.elements
            if f != e and (pattern.less(e, f) or pattern.less(f, e))
        )
        for e in pat
    }
    pat.sort(key=lambda e: -deg[e])

    host_up = {e: len(host.upset(e, strict=True)) for e in host.elements}
    host_down = {e: len(host.downset(e, strict=True)) for e in host.elements}
    pat_up = {e: len(pattern.upset(e, strict=True)) for e in pattern.elements}
    pat_down = {e: len(pattern.downset(e, strict=True)) for e in pattern.elements}

    assignment: dict[str, str] = {}
    used: set[str] = set()

    def extend(k: int) -> bool:
        budget.tick()
        if k == len(pat):
            return True
        e = pat[k]
        for h in host.elements:
            if h in used:
                continue
            if host_up[h] < pat_up[e] or host_down[h] < pat_down[e]:
                continue
            ok = True
            for f, hf in assignment.items():
                if pattern.less(e, f) != host.less(h, hf) or pattern.less(
                    f, e
                ) != host.less(hf, h):
                    ok = False
                    break
            if not ok:
                continue
            assignment[e] = h
            used.add(h)
            if extend(k + 1):
                return True
            del assignment[e]
            used.remove(h)
        return False

    if extend(0):
        return dict(assignment)
    return NotFound()


def _parameter_with_fallback(
    p: Poset, family, name: str, cap: int, budget: Budget | None
) -> tuple[int, dict[str, str] | None]:
    """Max order of a contained family member, falling back to se."""
    if cap < 3:
        raise ValueError("cap must be >= 3")
    upper = 3
    while upper < cap and len(family(upper + 1)) <= len(p):
        upper += 1
    for order in range(upper, 2, -1):
        pattern = family(order)
        if len(pattern) > len(p):
            continue
        found = contains_subposet(p, pattern, budget=budget)
        if not isinstance(found, NotFound):
            return order, found
    value, _ = se(p, cap=max(cap, 2), budget=budget)
    return value, None


def wheel_number(
    p: Poset, cap: int = 16, budget: Budget | None = None
) -> tuple[int, dict[str, str] | None]:
    from .families import wheel

    return _parameter_with_fallback(p, wheel, "wheel", cap, budget)


def kelly_number(
    p: Poset, cap: int = 16, budget: Budget | None = None
) -> tuple[int, dict[str, str] | None]:
    from .families import kelly

    return _parameter_with_fallback(p, kelly, "kelly", cap, budget)
