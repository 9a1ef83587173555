"""Witnessing paths, pair classification, intervals, and separating paths.

Leftmost/rightmost witnessing paths are the greedy extremes of the
anchored embedding: grow from the minimum, always taking the first
(resp. last) usable leaving edge of the current (u, e)-ordering. Pair
and path comparison, intervals with the shadowing property, separating
paths with peaks, and the interval-certificate verifier build on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal, Sequence

from .errors import (
    MalformedCertificate,
    MissingEInfinity,
    NoPeak,
    NotAnchored,
    PathsIntersect,
    PreconditionViolated,
)
from .planar import (
    INF,
    Dart,
    PlaneEmbedding,
    inside_faces,
    interval_region,
    path_edges,
    region_sides,
    u_e_ordering,
    vertex_faces,
)
from .poset import Poset

Side = Literal["L", "R"]


def witnessing_path(emb: PlaneEmbedding, u: str, side: Side) -> tuple[str, ...]:
    """W_L(u) / W_R(u): the extreme witnessing path from the minimum to u."""
    if emb.e_infinity is None:
        raise MissingEInfinity("witnessing paths need an anchored embedding")
    p = emb.graph.poset
    cur = emb.e_infinity
    e: Dart = emb.anchor_dart()
    path = [cur]
    while cur != u:
        ordering = u_e_ordering(emb, cur, e)
        usable = [d for d in ordering if p.leq(d[1], u)]
        if not usable:
            raise PreconditionViolated(f"{u!r} is not above the minimum")
        e = usable[0] if side == "L" else usable[-1]
        cur = e[1]
        path.append(cur)
    return tuple(path)


def leftmost_witnessing_path(emb: PlaneEmbedding, u: str) -> tuple[str, ...]:
    return witnessing_path(emb, u, "L")


def rightmost_witnessing_path(emb: PlaneEmbedding, u: str) -> tuple[str, ...]:
    return witnessing_path(emb, u, "R")


def compare_paths(
    emb: PlaneEmbedding, w: Sequence[str], w_prime: Sequence[str]
) -> str:
    """'LeftOf' / 'RightOf' / 'PrefixRelated' for two anchored paths."""
    if emb.e_infinity is None:
        raise MissingEInfinity("path comparison needs an anchored embedding")
    x0 = emb.e_infinity
    if not w or not w_prime or w[0] != x0 or w_prime[0] != x0:
        raise NotAnchored(f"both paths must start at {x0!r}")
    k = 0
    while k + 1 < len(w) and k + 1 < len(w_prime) and w[k + 1] == w_prime[k + 1]:
        k += 1
    if k + 1 >= len(w) or k + 1 >= len(w_prime):
        return "PrefixRelated"
    u = w[k]
    e_prev: Dart = emb.anchor_dart() if k == 0 else (w[k - 1], u)
    ordering = u_e_ordering(emb, u, e_prev)
    pos = {d: i for i, d in enumerate(ordering)}
    return "LeftOf" if pos[(u, w[k + 1])] < pos[(u, w_prime[k + 1])] else "RightOf"


def classify_pair(emb: PlaneEmbedding, a: str, b: str) -> str:
    """'LeftPair' / 'RightPair' / 'Mixed' / 'Comparable' per both extreme
    path comparisons."""
    p = emb.graph.poset
    if not p.incomparable(a, b):
        return "Comparable"
    left = compare_paths(emb, witnessing_path(emb, a, "L"), witnessing_path(emb, b, "L"))
    right = compare_paths(emb, witnessing_path(emb, a, "R"), witnessing_path(emb, b, "R"))
    if left == right == "LeftOf":
        return "LeftPair"
    if left == right == "RightOf":
        return "RightPair"
    return "Mixed"


# -- intervals --------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    """The (x, y, W, W')-interval: boundary paths, member set, and the
    subposet they induce."""

    emb: PlaneEmbedding
    x: str
    y: str
    w: tuple[str, ...]
    w_prime: tuple[str, ...]
    region: frozenset[str]
    poset: Poset  # induced by the region
    inner_faces: frozenset[int]  # faces enclosed by the boundary curve

    def boundary_edges(self) -> set[frozenset[str]]:
        return path_edges(self.w) | path_edges(self.w_prime)

    def edge_inside(self, u: str, v: str) -> bool:
        """True iff the drawn edge uv lies in the closed interval region.

        An edge between two region vertices can still run through the
        excluded side of the boundary curve; it does exactly when both
        of its incident faces are exterior.
        """
        dart_face = self.emb.dart_face()
        return dart_face[(u, v)] in self.inner_faces or dart_face[(v, u)] in self.inner_faces

    def path_inside(self, path: Sequence[str]) -> bool:
        return all(v in self.region for v in path) and all(
            self.edge_inside(path[k], path[k + 1]) for k in range(len(path) - 1)
        )


def make_interval(
    emb: PlaneEmbedding, x: str, y: str, w: Sequence[str], w_prime: Sequence[str]
) -> Interval:
    region = interval_region(emb, x, y, w, w_prime)
    q = emb.graph.poset.induced_subposet(sorted(region))
    inner = frozenset(inside_faces(emb, w, w_prime))
    return Interval(emb, x, y, tuple(w), tuple(w_prime), frozenset(region), q, inner)


def shadowing_check(
    emb: PlaneEmbedding,
    region: frozenset[str] | set[str],
    x: str,
    interval: Interval | None = None,
) -> tuple[bool, tuple[str, str] | None]:
    """Every member's extreme paths must pass through x and stay inside
    the region from x on. Returns (ok, counterexample).

    With the interval supplied, containment is checked for the drawn
    curve as well: a path edge may not cross the excluded side of the
    boundary even when both its endpoints are region members.
    """
    for z in sorted(region):
        for side in ("L", "R"):
            path = witnessing_path(emb, z, side)
            if x not in path:
                return False, (z, side)
            suffix = path[path.index(x):]
            if not set(suffix) <= set(region):
                return False, (z, side)
            if interval is not None and not interval.path_inside(suffix):
                return False, (z, side)
    return True, None


def hat_partition(q: Poset, y: str) -> tuple[set[str], set[str], set[str]]:
    """(A_hat, B_hat, E_hat) of an interval poset relative to its top y."""
    mins = q.minimal_elements()
    if len(mins) != 1:
        raise PreconditionViolated("interval poset must have a unique minimum")
    (x,) = mins
    a_hat = {z for z in q.elements if q.incomparable(z, y)}
    b_hat = {z for z in q.elements if q.less(y, z)}
    e_hat = {z for z in q.elements if q.leq(x, z) and q.leq(z, y)}
    return a_hat, b_hat, e_hat


# -- separating paths --------------------------------------------------------


@dataclass(frozen=True)
class SeparatingPath:
    """Three-segment path splitting an interval at an (a, b) pair."""

    side: str  # "Left" or "Right"
    a: str
    b: str
    segments: tuple[tuple[str, ...], tuple[str, ...], tuple[str, ...]]
    peak: str

    def vertices(self) -> tuple[str, ...]:
        up, middle, down = self.segments
        return up + middle[1:] + tuple(reversed(down))[1:]


def _interval_anchor_dart(interval: Interval) -> Dart:
    """Reference dart for (u, e)-orderings at the interval minimum.

    The exterior sector at x is a contiguous clockwise arc, so any edge
    entering x from outside the region induces the same restricted order;
    at the global minimum the anchor stub plays that role.
    """
    emb = interval.emb
    if interval.x == emb.e_infinity:
        return emb.anchor_dart()
    for w in emb.rotation[interval.x]:
        if w != INF and emb.graph.leaves(w, interval.x):
            return (w, interval.x)
    raise PreconditionViolated(
        f"{interval.x!r} is minimal in the host but is not the anchor"
    )


def interval_witnessing_path(interval: Interval, u: str, side: Side) -> tuple[str, ...]:
    """Extreme witnessing path from x to u within the interval subposet."""
    emb = interval.emb
    p = emb.graph.poset
    if u not in interval.region:
        raise PreconditionViolated(f"{u!r} is not in the interval")
    cur, e = interval.x, _interval_anchor_dart(interval)
    path = [cur]
    while cur != u:
        ordering = u_e_ordering(emb, cur, e)
        usable = [
            d
            for d in ordering
            if d[1] in interval.region
            and p.leq(d[1], u)
            and interval.edge_inside(*d)
        ]
        if not usable:
            raise PreconditionViolated(f"{u!r} is not above {interval.x!r} in the interval")
        e = usable[0] if side == "L" else usable[-1]
        cur = e[1]
        path.append(cur)
    return tuple(path)


def _guided_witnessing_path(
    interval: Interval, a: str, target: str, e_ref: Dart
) -> tuple[str, ...]:
    """Leftmost witnessing path a -> target inside the interval, with the
    (u, e)-orderings re-anchored at a along e_ref."""
    emb = interval.emb
    p = emb.graph.poset
    cur, e = a, e_ref
    path = [cur]
    while cur != target:
        ordering = u_e_ordering(emb, cur, e)
        usable = [
            d
            for d in ordering
            if d[1] in interval.region
            and p.leq(d[1], target)
            and interval.edge_inside(*d)
        ]
        if not usable:
            raise NoPeak(f"no witnessing path from {a!r} to {target!r} in interval")
        e = usable[0]
        cur = e[1]
        path.append(cur)
    return tuple(path)


def separating_path(
    interval: Interval, a: str, b: str, side: str
) -> SeparatingPath:
    """N_L(a, b) / N_R(a, b) with its peak.

    Left case: x[W_R(a)]a, then a canonical witnessing path a -> p_L, then
    y[W_L(b)]p_L where p_L is the least element of W_L(b) above a.
    """
    if side not in ("Left", "Right"):
        raise ValueError("side must be 'Left' or 'Right'")
    emb = interval.emb
    q = interval.poset
    a_hat, b_hat, _ = hat_partition(q, interval.y)
    if a not in a_hat or b not in b_hat or not q.less(a, b):
        raise PreconditionViolated("need a in A_hat, b in B_hat, a < b")
    first_side, peak_side = ("R", "L") if side == "Left" else ("L", "R")
    seg_up = interval_witnessing_path(interval, a, first_side)
    w_b = interval_witnessing_path(interval, b, peak_side)
    if interval.y not in w_b:
        raise PreconditionViolated(f"{interval.y!r} not on the boundary path of {b!r}")
    peak = None
    for z in w_b:
        if q.less(a, z):
            peak = z
            break
    if peak is None:
        raise NoPeak(f"no element of the extreme path to {b!r} lies above {a!r}")
    e_ref: Dart = (seg_up[-2], a) if len(seg_up) >= 2 else emb.anchor_dart()
    seg_mid = _guided_witnessing_path(interval, a, peak, e_ref)
    if w_b.index(peak) < w_b.index(interval.y):
        raise NoPeak(f"peak {peak!r} lies below {interval.y!r} on the boundary path")
    seg_down = w_b[w_b.index(interval.y): w_b.index(peak) + 1]
    sp = SeparatingPath(side, a, b, (seg_up, seg_mid, seg_down), peak)
    verts = sp.vertices()
    if len(set(verts)) != len(verts):
        raise PathsIntersect("separating path segments reuse a vertex")
    return sp


def side_of_path(interval: Interval, path: Sequence[str], v: str) -> str:
    """'Left' / 'Right' / 'On': position of an interval element relative
    to a path from x to y drawn inside the interval."""
    if v in path:
        return "On"
    emb = interval.emb
    inner = set(interval.inner_faces)
    dsu, sides = region_sides(
        emb,
        list(path),
        extra_cuts=interval.boundary_edges(),
        allowed_faces=inner,
        anchor_prev=_interval_anchor_dart(interval)[0],
    )
    for f in vertex_faces(emb, v):
        if f in inner:
            side = sides.get(dsu.find(f))
            if side is not None:
                return side
    raise PreconditionViolated(f"{v!r} has no labeled interval face")


def pair_separation_check(interval: Interval, a: str, a_prime: str, b: str) -> bool:
    """Both separating paths of (a, b) must leave a' on the side opposite
    to the pair orientation: right for left pairs, left for right pairs."""
    q = interval.poset
    a_hat, b_hat, _ = hat_partition(q, interval.y)
    if a not in a_hat or a_prime not in a_hat or b not in b_hat:
        raise PreconditionViolated("need a, a' in A_hat and b in B_hat")
    if not q.less(a, b):
        raise PreconditionViolated("need a < b in the interval")
    kind = classify_pair(interval.emb, a, a_prime)
    if kind not in ("LeftPair", "RightPair"):
        raise PreconditionViolated(f"(a, a') must be a left or right pair, got {kind}")
    expected = "Right" if kind == "LeftPair" else "Left"
    for side in ("Left", "Right"):
        n = separating_path(interval, a, b, side)
        if side_of_path(interval, n.vertices(), a_prime) != expected:
            return False
    return True


# -- interval certificates ----------------------------------------------------


@dataclass(frozen=True)
class IntervalCertificate:
    """The (x, y, W, W', a_1..a_k, b_1..b_k) bundle."""

    x: str
    y: str
    w: tuple[str, ...]
    w_prime: tuple[str, ...]
    a_list: tuple[str, ...]
    b_list: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "W": list(self.w),
            "W_prime": list(self.w_prime),
            "a": list(self.a_list),
            "b": list(self.b_list),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "IntervalCertificate":
        try:
            return cls(
                data["x"],
                data["y"],
                tuple(data["W"]),
                tuple(data["W_prime"]),
                tuple(data["a"]),
                tuple(data["b"]),
            )
        except KeyError as exc:
            raise MalformedCertificate(f"missing field {exc}") from exc


@dataclass
class CertificateReport:
    shadowing: bool
    standard_example: bool
    hat_structure: bool
    left_pairs: bool
    counterexamples: dict[str, object]

    @property
    def ok(self) -> bool:
        return (
            self.shadowing
            and self.standard_example
            and self.hat_structure
            and self.left_pairs
        )


def verify_interval_certificate(
    p: Poset, emb: PlaneEmbedding, cert: IntervalCertificate
) -> CertificateReport:
    """Check the four interval-certificate conditions, reporting the first
    counterexample per failed item."""
    if len(cert.a_list) != len(cert.b_list) or len(cert.a_list) < 2:
        raise MalformedCertificate("need equally many a's and b's, at least 2")
    for e in (cert.x, cert.y, *cert.w, *cert.w_prime, *cert.a_list, *cert.b_list):
        if e not in p:
            raise MalformedCertificate(f"unknown element {e!r}")
    interval = make_interval(emb, cert.x, cert.y, cert.w, cert.w_prime)
    counter: dict[str, object] = {}

    ok1, ce1 = shadowing_check(emb, interval.region, cert.x, interval=interval)
    if not ok1:
        counter["shadowing"] = ce1

    k = len(cert.a_list)
    ok2 = all(e in interval.region for e in (*cert.a_list, *cert.b_list))
    if not ok2:
        counter["standard_example"] = "element outside the interval"
    else:
        for i in range(k):
            for j in range(k):
                ai, bj = cert.a_list[i], cert.b_list[j]
                want = i != j
                if p.less(ai, bj) != want or p.less(bj, ai):
                    ok2 = False
                    counter["standard_example"] = (ai, bj)
                if i < j:
                    if not p.incomparable(cert.a_list[i], cert.a_list[j]):
                        ok2 = False
                        counter["standard_example"] = (cert.a_list[i], cert.a_list[j])
                    if not p.incomparable(cert.b_list[i], cert.b_list[j]):
                        ok2 = False
                        counter["standard_example"] = (cert.b_list[i], cert.b_list[j])

    ok3 = True
    for alpha in range(k):
        if not p.incomparable(cert.a_list[alpha], cert.y) or not p.less(
            cert.y, cert.b_list[alpha]
        ):
            ok3 = False
            counter["hat_structure"] = (cert.a_list[alpha], cert.b_list[alpha])
            break

    ok4 = True
    for lst in (cert.a_list, cert.b_list):
        for i in range(k):
            for j in range(i + 1, k):
                if classify_pair(emb, lst[i], lst[j]) != "LeftPair":
                    ok4 = False
                    counter.setdefault("left_pairs", (lst[i], lst[j]))
    return CertificateReport(ok1, ok2, ok3, ok4, counter)
