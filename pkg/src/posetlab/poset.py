"""Finite posets with O(1) comparability queries.

Elements are opaque strings. The strict order is stored transitively
closed as one bitmask per element, so every comparability test is a
single bit probe. Cover relations are derived on demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from typing import Iterable, Sequence

from .errors import CycleDetected, NotAnUpsetExtension, UnknownElement


class Poset:
    """An immutable finite strict partial order."""

    __slots__ = ("elements", "_index", "_up", "_down")

    def __init__(self, elements: Sequence[str], up_masks: Sequence[int]):
        """Internal constructor; `up_masks` must already be a strict,
        transitively closed relation. Use :meth:`from_cover_pairs` or
        :meth:`from_relation` instead."""
        self.elements: tuple[str, ...] = tuple(elements)
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise UnknownElement("duplicate element identifiers")
        self._up = tuple(up_masks)
        n = len(self.elements)
        down = [0] * n
        for i in range(n):
            m = self._up[i]
            while m:
                j = (m & -m).bit_length() - 1
                down[j] |= 1 << i
                m &= m - 1
        self._down = tuple(down)

    # -- construction ------------------------------------------------

    @classmethod
    def from_cover_pairs(
        cls, elements: Iterable[str], covers: Iterable[tuple[str, str]]
    ) -> "Poset":
        """Build the transitive closure of a cover (diagram) relation.

        A pair ``(x, y)`` means y covers x. Redundant (non-cover) pairs
        are tolerated; they disappear under transitive reduction.
        """
        elements = list(elements)
        index = {e: i for i, e in enumerate(elements)}
        if len(index) != len(elements):
            raise UnknownElement("duplicate element identifiers")
        succs: list[list[int]] = [[] for _ in elements]
        for x, y in covers:
            if x not in index or y not in index:
                raise UnknownElement(f"cover ({x!r}, {y!r}) references unknown element")
            succs[index[x]].append(index[y])
        ts = TopologicalSorter({i: [] for i in range(len(elements))})
        for i, out in enumerate(succs):
            for j in out:
                ts.add(j, i)
        try:
            order = list(ts.static_order())
        except CycleError as exc:
            raise CycleDetected(str(exc)) from exc
        up = [0] * len(elements)
        for i in reversed(order):
            m = 0
            for j in succs[i]:
                if i == j:
                    raise CycleDetected(f"self-loop at {elements[i]!r}")
                m |= (1 << j) | up[j]
            up[i] = m
            if m >> i & 1:
                raise CycleDetected(f"cycle through {elements[i]!r}")
        return cls(elements, up)

    @classmethod
    def from_relation(
        cls, elements: Iterable[str], less_than: Iterable[tuple[str, str]]
    ) -> "Poset":
        """Build from an arbitrary strict-order generator set (closed here)."""
        return cls.from_cover_pairs(elements, less_than)

    # -- queries -----------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, e: str) -> bool:
        return e in self._index

    def index(self, e: str) -> int:
        try:
            return self._index[e]
        except KeyError:
            raise UnknownElement(repr(e)) from None

    def less(self, a: str, b: str) -> bool:
        """Strict comparability a < b."""
        return self._up[self.index(a)] >> self.index(b) & 1 == 1

    def leq(self, a: str, b: str) -> bool:
        return a == b or self.less(a, b)

    def incomparable(self, a: str, b: str) -> bool:
        return a != b and not self.less(a, b) and not self.less(b, a)

    def upset(self, e: str, strict: bool = False) -> set[str]:
        i = self.index(e)
        out = {self.elements[j] for j in _bits(self._up[i])}
        if not strict:
            out.add(e)
        return out

    def downset(self, e: str, strict: bool = False) -> set[str]:
        i = self.index(e)
        out = {self.elements[j] for j in _bits(self._down[i])}
        if not strict:
            out.add(e)
        return out

    def cover_pairs(self) -> list[tuple[str, str]]:
        """Transitive reduction: pairs (x, y) with y covering x."""
        out = []
        for i, e in enumerate(self.elements):
            m = self._up[i]
            for j in _bits(m):
                # j covers i iff nothing sits strictly between them
                if not (self._up[i] & self._down[j]):
                    out.append((e, self.elements[j]))
        return out

    def relation_pairs(self) -> list[tuple[str, str]]:
        """All strict pairs (a, b) with a < b."""
        return [
            (e, self.elements[j])
            for i, e in enumerate(self.elements)
            for j in _bits(self._up[i])
        ]

    # -- order statistics ---------------------------------------------

    def minimal_elements(self) -> set[str]:
        return {e for i, e in enumerate(self.elements) if not self._down[i]}

    def maximal_elements(self) -> set[str]:
        return {e for i, e in enumerate(self.elements) if not self._up[i]}

    def height(self) -> int:
        """Number of elements in a longest chain."""
        n = len(self.elements)
        order = sorted(range(n), key=lambda i: bin(self._down[i]).count("1"))
        h = [1] * n
        for i in order:
            for j in _bits(self._down[i]):
                h[i] = max(h[i], h[j] + 1)
        return max(h, default=0)

    def width(self) -> int:
        """Size of a largest antichain (Dilworth via bipartite matching)."""
        n = len(self.elements)
        if n == 0:
            return 0
        match_r: dict[int, int] = {}

        def augment(i: int, seen: set[int]) -> bool:
            for j in _bits(self._up[i]):
                if j in seen:
                    continue
                seen.add(j)
                if j not in match_r or augment(match_r[j], seen):
                    match_r[j] = i
                    return True
            return False

        matching = sum(augment(i, set()) for i in range(n))
        return n - matching

    def induced_subposet(self, subset: Iterable[str]) -> "Poset":
        subset = list(dict.fromkeys(subset))
        idx = [self.index(e) for e in subset]
        pos = {i: k for k, i in enumerate(idx)}
        up = []
        for i in idx:
            m = 0
            for j in _bits(self._up[i]):
                if j in pos:
                    m |= 1 << pos[j]
            up.append(m)
        return Poset(subset, up)

    # -- pair machinery ------------------------------------------------

    def incomparable_pairs(self) -> list[tuple[str, str]]:
        """All ordered incomparable pairs (a, b); (a, b) and (b, a) both listed."""
        out = []
        n = len(self.elements)
        for i in range(n):
            rel = self._up[i] | self._down[i] | (1 << i)
            for j in range(n):
                if not (rel >> j & 1):
                    out.append((self.elements[i], self.elements[j]))
        return out

    def critical_pairs(self) -> list[tuple[str, str]]:
        """Ordered pairs (a, b): incomparable, down(a) ⊆ down(b), up(b) ⊆ up(a)."""
        out = []
        n = len(self.elements)
        for i in range(n):
            rel = self._up[i] | self._down[i] | (1 << i)
            for j in range(n):
                if rel >> j & 1:
                    continue
                if self._down[i] & ~self._down[j]:
                    continue
                if self._up[j] & ~self._up[i]:
                    continue
                out.append((self.elements[i], self.elements[j]))
        return out

    # -- serialization -------------------------------------------------

    def to_dict(self) -> dict:
        return {"elements": list(self.elements), "cover": [list(c) for c in self.cover_pairs()]}

    @classmethod
    def from_dict(cls, data: dict) -> "Poset":
        return cls.from_cover_pairs(data["elements"], [tuple(c) for c in data["cover"]])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Poset":
        return cls.from_dict(json.loads(text))

    def save(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(self.to_json())

    @classmethod
    def load(cls, path) -> "Poset":
        with open(path) as fh:
            return cls.from_json(fh.read())

    def __repr__(self) -> str:
        return f"Poset({len(self.elements)} elements, {len(self.relation_pairs())} relations)"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poset)
            and self.elements == other.elements
            and self._up == other._up
        )

    def __hash__(self) -> int:
        return hash((self.elements, self._up))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class LinearExtension:
    """A permutation of all elements respecting the poset order."""

    order: tuple[str, ...]

    def position(self) -> dict[str, int]:
        return {e: k for k, e in enumerate(self.order)}


@dataclass(frozen=True)
class Realizer:
    """A family of linear extensions reversing every incomparable pair."""

    extensions: tuple[LinearExtension, ...]

    def __len__(self) -> int:
        return len(self.extensions)


def is_linear_extension(p: Poset, ext: LinearExtension) -> bool:
    if sorted(ext.order) != sorted(p.elements):
        return False
    pos = ext.position()
    return all(pos[a] < pos[b] for a, b in p.relation_pairs())


def verify_realizer(p: Poset, r: Realizer) -> bool:
    if not r.extensions:
        return False
    if not all(is_linear_extension(p, ext) for ext in r.extensions):
        return False
    positions = [ext.position() for ext in r.extensions]
    return all(
        any(pos[b] < pos[a] for pos in positions)
        for a, b in p.incomparable_pairs()
    )


def linear_extension_of(p: Poset, prefer: Sequence[str] = ()) -> LinearExtension:
    """Any linear extension; ties broken by `prefer` order then element order."""
    return _tie_broken_extension(p, {e: k for k, e in enumerate(prefer)})


def _tie_broken_extension(p: Poset, rank: dict[str, int]) -> LinearExtension:
    import heapq

    n = len(p.elements)
    indeg = {e: 0 for e in p.elements}
    succ: dict[str, list[str]] = {e: [] for e in p.elements}
    for a, b in p.cover_pairs():
        indeg[b] += 1
        succ[a].append(b)
    heap = [(rank.get(e, n), e) for e in p.elements if indeg[e] == 0]
    heapq.heapify(heap)
    out: list[str] = []
    while heap:
        _, e = heapq.heappop(heap)
        out.append(e)
        for b in succ[e]:
            indeg[b] -= 1
            if indeg[b] == 0:
                heapq.heappush(heap, (rank.get(b, n), b))
    return LinearExtension(tuple(out))


def lift_extension(p: Poset, x: str, lu: LinearExtension) -> LinearExtension:
    """Extend a linear extension of upset(x) to one of the whole poset.

    The result keeps lu's order on U = upset(x) and places every element
    of P - U before every element of U.
    """
    u = p.upset(x)
    if set(lu.order) != u or len(lu.order) != len(u):
        raise NotAnUpsetExtension("order is not a permutation of the upset")
    sub = p.induced_subposet(lu.order)
    if not is_linear_extension(sub, LinearExtension(lu.order)):
        raise NotAnUpsetExtension("order violates the poset within the upset")
    rest = [e for e in p.elements if e not in u]
    prefix = _tie_broken_extension(p.induced_subposet(rest), {})
    return LinearExtension(prefix.order + lu.order)
