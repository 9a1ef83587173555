"""Shared oracles and generators.

The oracles here are deliberately independent re-derivations from the
definitions (enumeration over linear extensions, direct subset search)
so the solvers under test are checked against first principles.
"""

from __future__ import annotations

import itertools
import random

import pytest

from posetlab.poset import Poset


def random_poset(rng: random.Random, n: int, edge_prob: float = 0.3) -> Poset:
    """Transitive closure of a random DAG on a shuffled vertex order."""
    names = [f"e{i}" for i in range(n)]
    order = names[:]
    rng.shuffle(order)
    pairs = [
        (order[i], order[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < edge_prob
    ]
    return Poset.from_cover_pairs(names, pairs)


def all_linear_extensions(p: Poset) -> list[tuple[str, ...]]:
    """Every linear extension, by recursive minimal-element removal."""
    out: list[tuple[str, ...]] = []
    remaining = set(p.elements)

    def rec(prefix: list[str]) -> None:
        if not remaining:
            out.append(tuple(prefix))
            return
        for e in sorted(remaining):
            if all(not p.less(f, e) for f in remaining if f != e):
                remaining.remove(e)
                prefix.append(e)
                rec(prefix)
                prefix.pop()
                remaining.add(e)

    rec([])
    return out


def dim_oracle(p: Poset, t_max: int = 6) -> int:
    """Dimension from the definition: the smallest t such that t linear
    extensions jointly reverse every incomparable ordered pair."""
    inc = [(a, b) for a, b in itertools.permutations(p.elements, 2) if p.incomparable(a, b)]
    if not inc:
        return 1
    index = {pair: k for k, pair in enumerate(inc)}
    full = (1 << len(inc)) - 1
    masks = set()
    for ext in all_linear_extensions(p):
        pos = {e: k for k, e in enumerate(ext)}
        m = 0
        for a, b in inc:
            if pos[b] < pos[a]:  # this extension reverses (a, b)
                m |= 1 << index[(a, b)]
        masks.add(m)
    # only inclusion-maximal reversal sets can appear in a minimum cover
    maximal = [m for m in masks if not any(m != o and m | o == o for o in masks)]

    def cover(t: int, acc: int, start: int) -> bool:
        if acc == full:
            return True
        if t == 0:
            return False
        return any(
            cover(t - 1, acc | maximal[i], i + 1) for i in range(start, len(maximal))
        )

    for t in range(1, t_max + 1):
        if cover(t, 0, 0):
            return t
    raise AssertionError("oracle exceeded t_max")


def se_oracle(p: Poset) -> int:
    """Standard-example number by direct search over pair families."""
    pairs = [
        (a, b)
        for a, b in itertools.permutations(p.elements, 2)
        if p.incomparable(a, b)
    ]

    def compatible(u, v):
        (au, bu), (av, bv) = u, v
        return (
            p.less(au, bv)
            and p.less(av, bu)
            and p.incomparable(au, av)
            and p.incomparable(bu, bv)
        )

    best = 1 if pairs else 1

    def grow(chosen: list, rest: list) -> None:
        nonlocal best
        best = max(best, len(chosen) if len(chosen) >= 2 else 1)
        for k, cand in enumerate(rest):
            if all(compatible(cand, c) for c in chosen):
                grow(chosen + [cand], rest[k + 1:])

    grow([], pairs)
    return best


def separation_instances(n: int, max_paths_per_y: int = 40):
    """All (interval, a, a', b) tuples over strict-shadowing intervals of
    the canonical wheel embedding of order n."""
    from posetlab.planar import canonical_wheel_embedding
    from posetlab.witness import (
        hat_partition,
        make_interval,
        shadowing_check,
    )
    from posetlab.errors import PosetlabError

    emb = canonical_wheel_embedding(n)
    p = emb.graph.poset

    def all_witnessing_paths(y: str) -> list[tuple[str, ...]]:
        out = []

        def rec(cur: str, path: list[str]) -> None:
            if len(out) >= max_paths_per_y:
                return
            if cur == y:
                out.append(tuple(path))
                return
            for z in p.elements:
                if p.less(cur, z) and p.leq(z, y) and (cur, z) in cover_set:
                    rec(z, path + [z])

        cover_set = set(p.cover_pairs())
        rec("min", ["min"])
        return out

    instances = []
    for y in p.elements:
        if y == "min":
            continue
        paths = all_witnessing_paths(y)
        for w, w_prime in itertools.combinations(paths, 2):
            if set(w) & set(w_prime) != {"min", y}:
                continue
            try:
                interval = make_interval(emb, "min", y, w, w_prime)
            except PosetlabError:
                continue
            ok, _ = shadowing_check(emb, interval.region, "min", interval=interval)
            if not ok:
                continue
            a_hat, b_hat, _ = hat_partition(interval.poset, y)
            for a in sorted(a_hat):
                for b in sorted(b_hat):
                    if not interval.poset.less(a, b):
                        continue
                    for a_prime in sorted(a_hat):
                        if a_prime != a:
                            instances.append((interval, a, a_prime, b))
    return instances


@pytest.fixture(scope="session")
def wheel5_embedding():
    from posetlab.planar import canonical_wheel_embedding

    return canonical_wheel_embedding(5)
