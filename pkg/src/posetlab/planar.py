"""Cover graphs, combinatorial plane embeddings, and sidedness.

An embedding is a rotation system: a clockwise cyclic list of neighbors
per vertex. The anchor half-edge at the unique minimal element is a
pseudo-neighbor INF inserted in the outer face; all left/right language
is defined against the clockwise convention.

Face traversal uses next(u, v) = (v, prev_cw(v, u)), which traces each
face counterclockwise, interior to the left of its darts. The corner of
a face at v between clockwise-consecutive neighbors (c, d) belongs to
the face of the dart (v, d).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from .errors import (
    EdgeDoesNotEnter,
    EmbeddingConstraintUnsatisfied,
    MissingEInfinity,
    OrderTooSmall,
    PathNotAnchored,
    PathsIntersect,
)
from .poset import Poset

INF = "@inf"  # pseudo-endpoint of the one-end anchor edge

Dart = tuple[str, str]
Face = tuple[Dart, ...]


@dataclass(frozen=True)
class CoverGraph:
    """Cover relation as a directed graph: edge (x, y) iff y covers x."""

    poset: Poset
    edges: tuple[tuple[str, str], ...]

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.poset.elements

    def adjacency(self) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for x, y in self.edges:
            adj[x].add(y)
            adj[y].add(x)
        return adj

    def leaves(self, u: str, v: str) -> bool:
        """True iff the edge uv is oriented u -> v (v covers u)."""
        return (u, v) in self._edge_set()

    def _edge_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        return g


def cover_graph(p: Poset) -> CoverGraph:
    return CoverGraph(p, tuple(p.cover_pairs()))


@dataclass(frozen=True)
class NonPlanarWitness:
    """A Kuratowski subdivision certifying non-planarity."""

    edges: tuple[tuple[str, str], ...]


class PlaneEmbedding:
    """A rotation system with a designated outer face and optional anchor."""

    def __init__(
        self,
        graph: CoverGraph,
        rotation: dict[str, Sequence[str]],
        outer_face: Face | None = None,
        e_infinity: str | None = None,
    ):
        self.graph = graph
        self.rotation: dict[str, list[str]] = {v: list(ns) for v, ns in rotation.items()}
        self.e_infinity = e_infinity
        if e_infinity is not None and INF not in self.rotation.get(e_infinity, []):
            raise MissingEInfinity(f"no anchor stub at {e_infinity!r}")
        if e_infinity is not None:
            self.rotation.setdefault(INF, [e_infinity])
        self._faces: list[Face] | None = None
        self._dart_face: dict[Dart, int] | None = None
        self.outer_face = outer_face

    # -- faces ---------------------------------------------------------

    def faces(self) -> list[Face]:
        if self._faces is None:
            self._trace_faces()
        return self._faces  # type: ignore[return-value]

    def dart_face(self) -> dict[Dart, int]:
        if self._dart_face is None:
            self._trace_faces()
        return self._dart_face  # type: ignore[return-value]

    def _trace_faces(self) -> None:
        pos = {
            v: {w: k for k, w in enumerate(ns)} for v, ns in self.rotation.items()
        }
        darts = [(u, v) for u, ns in self.rotation.items() for v in ns]
        seen: set[Dart] = set()
        faces: list[Face] = []
        dart_face: dict[Dart, int] = {}
        for start in darts:
            if start in seen:
                continue
            face = []
            d = start
            while d not in seen:
                seen.add(d)
                face.append(d)
                u, v = d
                ns = self.rotation[v]
                k = pos[v][u]
                d = (v, ns[(k - 1) % len(ns)])
            faces.append(tuple(face))
            idx = len(faces) - 1
            for d in face:
                dart_face[d] = idx
        self._faces = faces
        self._dart_face = dart_face

    def euler_ok(self) -> bool:
        """V - E + F = 2 on every connected component."""
        adj: dict[str, set[str]] = {v: set() for v in self.rotation}
        for u, ns in self.rotation.items():
            for v in ns:
                adj[u].add(v)
                adj[v].add(u)
        seen: set[str] = set()
        dart_face = self.dart_face()
        for v0 in self.rotation:
            if v0 in seen:
                continue
            comp = {v0}
            stack = [v0]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            n_v = len(comp)
            n_e = sum(len(self.rotation[v]) for v in comp) // 2
            n_f = len({dart_face[(u, w)] for u in comp for w in self.rotation[u]})
            if n_v - n_e + n_f != 2:
                return False
        return True

    def corner_face(self, v: str, k: int) -> int:
        """Face occupying the sector between cw-consecutive neighbors k, k+1."""
        ns = self.rotation[v]
        return self.dart_face()[(v, ns[k % len(ns)])]

    # -- orientation helpers ---------------------------------------------

    def reflected(self) -> "PlaneEmbedding":
        """Mirror image: every rotation list reversed."""
        rot = {v: list(reversed(ns)) for v, ns in self.rotation.items()}
        emb = PlaneEmbedding(self.graph, rot, e_infinity=self.e_infinity)
        return emb

    def anchor_dart(self) -> Dart:
        if self.e_infinity is None:
            raise MissingEInfinity("embedding has no anchor")
        return (INF, self.e_infinity)

    def enters(self, e: Dart, u: str) -> bool:
        w, v = e
        if v != u:
            return False
        if w == INF:
            return u == self.e_infinity
        return self.graph.leaves(w, u)

    def leaving_edges(self, u: str) -> list[Dart]:
        return [(u, v) for v in self.rotation[u] if v != INF and self.graph.leaves(u, v)]


def u_e_ordering(emb: PlaneEmbedding, u: str, e: Dart) -> list[Dart]:
    """Edges leaving u, clockwise starting from the entering edge e."""
    if not emb.enters(e, u):
        raise EdgeDoesNotEnter(f"{e!r} does not enter {u!r}")
    ns = emb.rotation[u]
    start = ns.index(e[0])
    out = []
    deg = len(ns)
    for step in range(1, deg + 1):
        v = ns[(start + step) % deg]
        if v != INF and emb.graph.leaves(u, v):
            out.append((u, v))
    return out


# -- planarity ---------------------------------------------------------


def is_planar(g: CoverGraph) -> PlaneEmbedding | NonPlanarWitness:
    """A rotation system, or a Kuratowski-subdivision witness."""
    nxg = g.to_networkx()
    ok, cert = nx.check_planarity(nxg, counterexample=True)
    if not ok:
        return NonPlanarWitness(tuple(cert.edges()))
    rotation = {
        v: list(cert.neighbors_cw_order(v)) if cert.degree(v) else []
        for v in nxg.nodes
    }
    return PlaneEmbedding(g, rotation)


def attach_e_infinity(emb: PlaneEmbedding, x0: str) -> PlaneEmbedding:
    """Insert the anchor stub at x0 inside a face incident to x0 and make
    that face the outer face."""
    if emb.rotation.get(x0) == []:
        rot = dict(emb.rotation)
        rot[x0] = [INF]
        return PlaneEmbedding(emb.graph, rot, e_infinity=x0)
    # place the stub in the sector after x0's first neighbor; any face
    # incident to x0 works on the sphere, flattening makes it exterior
    ns = emb.rotation[x0]
    rot = {v: list(ws) for v, ws in emb.rotation.items()}
    rot[x0] = [ns[0], INF] + ns[1:]
    new = PlaneEmbedding(emb.graph, rot, e_infinity=x0)
    outer = new.faces()[new.dart_face()[(x0, INF)]]
    new.outer_face = outer
    return new


def embed_anchored(p: Poset) -> PlaneEmbedding | NonPlanarWitness:
    """Planar embedding of the cover graph with the unique minimal element
    anchored on the outer face."""
    mins = p.minimal_elements()
    if len(mins) != 1:
        raise EmbeddingConstraintUnsatisfied(
            f"poset has {len(mins)} minimal elements, need exactly 1"
        )
    (x0,) = mins
    emb = is_planar(cover_graph(p))
    if isinstance(emb, NonPlanarWitness):
        return emb
    return attach_e_infinity(emb, x0)


# -- canonical wheel embedding -------------------------------------------


def canonical_wheel_embedding(n: int) -> PlaneEmbedding:
    """Radial drawing of the wheel: rings by interval size (larger sets
    closer to min), spokes by start index, anchor in a face at min."""
    from .families import wheel, wheel_intervals

    if n < 3:
        raise OrderTooSmall(f"wheel needs N >= 3, got {n}")
    p = wheel(n)
    g = cover_graph(p)
    coords: dict[str, tuple[float, float]] = {"min": (0.0, 0.0)}
    for label, members in wheel_intervals(n).items():
        size = len(members)
        i = int(label[2:-1].split(",")[0])
        mid = i + (size - 1) / 2.0
        radius = float(n - size)
        theta = 2.0 * math.pi * mid / n
        coords[label] = (radius * math.cos(theta), radius * math.sin(theta))
    adj = g.adjacency()
    rotation: dict[str, list[str]] = {}
    for v, (vx, vy) in coords.items():
        def cw_key(w: str) -> float:
            wx, wy = coords[w]
            return math.atan2(wy - vy, wx - vx)
        rotation[v] = sorted(adj[v], key=cw_key)
    # anchor sector chosen so the drawing orders the spanning standard
    # example left to right by index
    ns = rotation["min"]
    rotation["min"] = ns[-1:] + ns[:-1]
    emb = PlaneEmbedding(g, rotation)
    return attach_e_infinity(emb, "min")


# -- sidedness -----------------------------------------------------------


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def merge_faces(emb: PlaneEmbedding, cut_edges: set[frozenset[str]]) -> _DSU:
    """Union faces across every edge that is not a cut edge."""
    dsu = _DSU(len(emb.faces()))
    dart_face = emb.dart_face()
    for (u, v), f in dart_face.items():
        if u == INF or v == INF:
            continue
        if frozenset((u, v)) in cut_edges:
            continue
        dsu.union(f, dart_face[(v, u)])
    return dsu


def path_edges(path: Sequence[str]) -> set[frozenset[str]]:
    return {frozenset((path[k], path[k + 1])) for k in range(len(path) - 1)}


def _fan_corners(
    emb: PlaneEmbedding, path: Sequence[str], anchor_prev: str | None
) -> list[tuple[int, str]]:
    """(face, side) labels along the walk, in walk order.

    At each vertex with both an in- and an out-reference, corners in the
    clockwise arc out..in are Right, corners in in..out are Left. The
    first vertex uses anchor_prev as its in-reference (skipped if None).
    """
    labels: list[tuple[int, str]] = []
    for k, u in enumerate(path):
        if k == 0:
            if anchor_prev is None:
                continue
            prev = anchor_prev
        else:
            prev = path[k - 1]
        if k == len(path) - 1:
            continue  # the open tip carries no fan
        nxt = path[k + 1]
        ns = emb.rotation[u]
        deg = len(ns)
        p_in, p_out = ns.index(prev), ns.index(nxt)
        # clockwise from the outgoing end to the incoming end: right fan
        step = (p_in - p_out) % deg
        for s in range(step):
            gap = (p_out + s) % deg
            labels.append((emb.corner_face(u, gap), "Right"))
        step_l = (p_out - p_in) % deg
        for s in range(step_l):
            gap = (p_in + s) % deg
            labels.append((emb.corner_face(u, gap), "Left"))
    return labels


def _corner_keys(
    emb: PlaneEmbedding, path: Sequence[str]
) -> list[tuple[tuple, int, str]]:
    """Fan corners with mirror-invariant sort keys.

    A corner keeps its identity (walk index, sector neighbors, the face's
    undirected edge set) when all rotations are reversed, while its
    Left/Right label flips, so choosing by minimal key is exactly
    antisymmetric under reflection.
    """
    faces = emb.faces()

    def face_key(f: int) -> tuple:
        return tuple(sorted(tuple(sorted(d)) for d in faces[f]))

    out: list[tuple[tuple, int, str]] = []
    if len(path) == 1:
        # the curve is just the anchor stub; the corner clockwise after
        # the stub counts as Right, the one before as Left
        u = path[0]
        ns = emb.rotation[u]
        deg = len(ns)
        i = ns.index(INF)
        for gap, side_arc in ((i, "Right"), ((i - 1) % deg, "Left")):
            face = emb.corner_face(u, gap)
            sector = tuple(sorted((ns[gap], ns[(gap + 1) % deg])))
            out.append(((0, sector, face_key(face), gap), face, side_arc))
        return out
    for k, u in enumerate(path):
        prev = INF if k == 0 else path[k - 1]
        if k == len(path) - 1:
            continue
        nxt = path[k + 1]
        ns = emb.rotation[u]
        deg = len(ns)
        p_in, p_out = ns.index(prev), ns.index(nxt)
        for gap, side_arc in [
            ((p_out + s) % deg, "Right") for s in range((p_in - p_out) % deg)
        ] + [((p_in + s) % deg, "Left") for s in range((p_out - p_in) % deg)]:
            face = emb.corner_face(u, gap)
            sector = tuple(sorted((ns[gap], ns[(gap + 1) % deg])))
            # the gap index is a pure tie-break: two corners share the
            # leading components only at a degree-2 vertex whose two gaps
            # bound one face, where either side is a stored-order
            # convention, and reversing the stored lists flips which gap
            # is smaller, keeping the reflection swap exact
            out.append(((k, sector, face_key(face), gap), face, side_arc))
    return out


def region_sides(
    emb: PlaneEmbedding,
    path: Sequence[str],
    extra_cuts: set[frozenset[str]] | None = None,
    allowed_faces: set[int] | None = None,
    anchor_prev: str | None = INF,
) -> tuple[_DSU, dict[int, str]]:
    """Merge faces away from the path (and extra cuts) and label the
    resulting regions Left/Right of the walk. First label wins on merged
    regions."""
    cuts = path_edges(path) | (extra_cuts or set())
    dsu = merge_faces(emb, cuts)
    sides: dict[int, str] = {}
    for face, side in _fan_corners(emb, path, anchor_prev):
        if allowed_faces is not None and face not in allowed_faces:
            continue
        root = dsu.find(face)
        sides.setdefault(root, side)
    return dsu, sides


def vertex_faces(emb: PlaneEmbedding, v: str) -> list[int]:
    return [emb.corner_face(v, k) for k in range(len(emb.rotation[v]))]


def side_partition(
    emb: PlaneEmbedding, path: Sequence[str]
) -> dict[str, set[str]]:
    """Partition vertices into Left / Right / On for a path anchored at
    the minimum via the e_infinity stub."""
    if emb.e_infinity is None:
        raise MissingEInfinity("side_partition needs an anchored embedding")
    if not path or path[0] != emb.e_infinity:
        raise PathNotAnchored(f"path must start at {emb.e_infinity!r}")
    # the separating curve is the path extended by the anchor stub, so the
    # stub edge is part of the boundary cut
    stub = {frozenset((emb.e_infinity, INF))}
    dsu, _ = region_sides(emb, path, extra_cuts=stub)
    # An open curve does not separate the plane around its free endpoint:
    # the region wrapping the tip collects fan corners of both labels.
    # Resolve each region by the corner with the smallest mirror-invariant
    # key; mirroring flips every corner's label while preserving keys, so
    # Left and Right swap exactly under reflection.
    best: dict[int, tuple[tuple, str]] = {}
    for key, face, label in _corner_keys(emb, path):
        root = dsu.find(face)
        if root not in best or key < best[root][0]:
            best[root] = (key, label)
    on = set(path)
    out: dict[str, set[str]] = {"Left": set(), "Right": set(), "On": on}
    for v in emb.rotation:
        if v == INF or v in on:
            continue
        root = dsu.find(vertex_faces(emb, v)[0])
        out[best[root][1] if root in best else "Right"].add(v)
    return out


# -- intervals ------------------------------------------------------------


def interval_region(
    emb: PlaneEmbedding,
    x: str,
    y: str,
    w: Sequence[str],
    w_prime: Sequence[str],
) -> set[str]:
    """Vertices inside or on the closed curve W + W', on the side away
    from the anchor stub."""
    if emb.e_infinity is None:
        raise MissingEInfinity("interval_region needs an anchored embedding")
    _check_witnessing(emb.graph.poset, x, y, w)
    _check_witnessing(emb.graph.poset, x, y, w_prime)
    shared = set(w) & set(w_prime)
    if shared != {x, y}:
        raise PathsIntersect(f"paths share interior vertices {sorted(shared - {x, y})}")
    boundary = path_edges(w) | path_edges(w_prime)
    dsu = merge_faces(emb, boundary)
    outer = dsu.find(emb.dart_face()[(emb.e_infinity, INF)])
    region = set(w) | set(w_prime)
    for v in emb.rotation:
        if v == INF or v in region:
            continue
        if dsu.find(vertex_faces(emb, v)[0]) != outer:
            region.add(v)
    return region


def inside_faces(
    emb: PlaneEmbedding, w: Sequence[str], w_prime: Sequence[str]
) -> set[int]:
    """Face ids strictly inside the closed curve W + W'."""
    boundary = path_edges(w) | path_edges(w_prime)
    dsu = merge_faces(emb, boundary)
    outer = dsu.find(emb.dart_face()[(emb.e_infinity, INF)])
    return {
        f for f in range(len(emb.faces())) if dsu.find(f) != outer
    }


def _check_witnessing(p: Poset, x: str, y: str, path: Sequence[str]) -> None:
    if not path or path[0] != x or path[-1] != y:
        raise PathNotAnchored(f"path must run from {x!r} to {y!r}")
    if len(set(path)) != len(path):
        raise PathsIntersect("path repeats a vertex")
    for k in range(len(path) - 1):
        if not p.less(path[k], path[k + 1]):
            raise PathNotAnchored(
                f"step {path[k]!r} -> {path[k+1]!r} is not increasing"
            )


# -- serialization --------------------------------------------------------


def embedding_to_dict(emb: PlaneEmbedding) -> dict:
    """JSON form: clockwise neighbor lists tagged by edge direction."""
    rotation = {}
    for v, ns in emb.rotation.items():
        if v == INF:
            continue
        entries = []
        for w in ns:
            if w == INF:
                entries.append([INF, "out"])
            else:
                entries.append([w, "out" if emb.graph.leaves(v, w) else "in"])
        rotation[v] = entries
    outer: list[str] = []
    if emb.e_infinity is not None:
        face = emb.faces()[emb.dart_face()[(emb.e_infinity, INF)]]
        seen = set()
        for u, _ in face:
            if u != INF and u not in seen:
                seen.add(u)
                outer.append(u)
    return {"rotation": rotation, "outer_face": outer, "e_infinity": emb.e_infinity}


def embedding_from_dict(p: Poset, data: dict) -> PlaneEmbedding:
    """Rebuild an embedding over p's cover graph, validating direction tags."""
    g = cover_graph(p)
    rotation: dict[str, list[str]] = {}
    for v, entries in data["rotation"].items():
        if v not in p and v != INF:
            raise PathNotAnchored(f"unknown vertex {v!r} in rotation")
        ns = []
        for w, direction in entries:
            if w == INF:
                if direction != "out":
                    raise MissingEInfinity("anchor stub must be tagged 'out'")
            else:
                expected = "out" if g.leaves(v, w) else "in"
                if not (g.leaves(v, w) or g.leaves(w, v)):
                    raise PathNotAnchored(f"{v!r}-{w!r} is not a cover edge")
                if direction != expected:
                    raise PathNotAnchored(
                        f"edge {v!r}-{w!r} tagged {direction!r}, expected {expected!r}"
                    )
            ns.append(w)
        rotation[v] = ns
    emb = PlaneEmbedding(g, rotation, e_infinity=data.get("e_infinity"))
    if not emb.euler_ok():
        raise PathNotAnchored("rotation system fails the Euler check")
    return emb
