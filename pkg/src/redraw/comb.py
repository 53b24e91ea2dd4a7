"""Combinatorial triangulations as labeled rotation systems.

A combinatorial triangulation is stored as, for every vertex, the cyclic
counterclockwise order of its neighbors, together with a designated outer
face.  Faces are recovered by dart walking, so validity (all internal
faces triangles, Euler relation, simplicity) is checked structurally at
construction time.

Identity of two triangulations with the same outer boundary is decided by
`canonical_code`: a breadth-first serialization seeded at the directed
boundary edge outer_face[0] -> outer_face[1].  Codes are equal exactly
when an orientation preserving isomorphism maps one triangulation to the
other while fixing every boundary vertex.  Orientation reversing maps are
deliberately not considered: a drawing pinned at three or more hull
points cannot be reflected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cmp_to_key
from itertools import combinations
from math import comb as _binom
from typing import Iterable, Sequence

import networkx as nx

from .geometry import Point, convex_hull, general_position, segments_cross
from .pointsets import gen_double_chain, gen_nested_triangles

Edge = tuple[int, int]
Dart = tuple[int, int]

# Exhaustive enumeration is an oracle for small instances only.
ENUM_INTERIOR_GUARD = 4


def _norm_edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def _cyclic_eq(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        return False
    n = len(a)
    return any(all(a[(s + i) % n] == b[i] for i in range(n)) for s in range(n))


@dataclass(frozen=True)
class CombTriangulation:
    """Rotation system plus designated outer face, labels 0-based.

    rotations[v] lists the neighbors of v in counterclockwise order;
    outer_face lists the boundary cycle counterclockwise.  Construction
    validates the whole structure and raises ValueError on the first
    violated invariant.
    """

    num_vertices: int
    outer_face: tuple[int, ...]
    rotations: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "outer_face", tuple(int(v) for v in self.outer_face))
        object.__setattr__(
            self, "rotations", tuple(tuple(int(u) for u in r) for r in self.rotations)
        )
        self._validate()

    # -- derived quantities -------------------------------------------

    @property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.rotations) // 2

    def edges(self) -> frozenset[Edge]:
        return frozenset(
            _norm_edge(v, u) for v, rot in enumerate(self.rotations) for u in rot
        )

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    # -- face structure -----------------------------------------------

    def _face_next(self) -> dict[Dart, Dart]:
        # The face left of dart u->v continues at v along the neighbor
        # that precedes u in v's counterclockwise rotation.
        nxt: dict[Dart, Dart] = {}
        for v, rot in enumerate(self.rotations):
            for i, u in enumerate(rot):
                nxt[(u, v)] = (v, rot[i - 1])
        return nxt

    def _orbits(self) -> list[list[Dart]]:
        nxt = self._face_next()
        left = set(nxt)
        orbits = []
        while left:
            start = min(left)
            cyc = [start]
            left.remove(start)
            d = nxt[start]
            while d != start:
                if d not in left:
                    raise ValueError("face walk revisits a dart, rotations inconsistent")
                left.remove(d)
                cyc.append(d)
                d = nxt[d]
            orbits.append(cyc)
        return orbits

    def faces(self) -> list[tuple[int, int, int]]:
        """All internal triangular faces, counterclockwise, lowest label first."""
        outer_dart = (self.outer_face[1], self.outer_face[0])
        out = []
        for orbit in self._orbits():
            if outer_dart in orbit:
                continue
            a, b, c = (d[0] for d in orbit)
            i = min(range(3), key=((a, b, c)).__getitem__)
            t = (a, b, c)
            out.append((t[i], t[(i + 1) % 3], t[(i + 2) % 3]))
        return sorted(out)

    # -- validation -----------------------------------------------------

    def _validate(self) -> None:
        n, outer, rots = self.num_vertices, self.outer_face, self.rotations
        if n < 3:
            raise ValueError("need at least 3 vertices")
        if len(rots) != n:
            raise ValueError("rotation list length differs from vertex count")
        if len(outer) < 3:
            raise ValueError("outer face needs at least 3 vertices")
        if len(set(outer)) != len(outer):
            raise ValueError("outer face repeats a vertex")
        if any(not (0 <= v < n) for v in outer):
            raise ValueError("outer face label out of range")
        for v, rot in enumerate(rots):
            if len(rot) < 2:
                raise ValueError(f"vertex {v} has fewer than 2 neighbors")
            if v in rot:
                raise ValueError(f"loop at vertex {v}")
            if len(set(rot)) != len(rot):
                raise ValueError(f"multi-edge at vertex {v}")
            if any(not (0 <= u < n) for u in rot):
                raise ValueError(f"neighbor label out of range at vertex {v}")
        for v, rot in enumerate(rots):
            for u in rot:
                if v not in rots[u]:
                    raise ValueError(f"dart {v}->{u} has no reciprocal")
        seen = {0}
        stack = [0]
        while stack:
            for u in rots[stack.pop()]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if len(seen) != n:
            raise ValueError("graph is not connected")
        m = self.edge_count
        h = len(outer)
        if m != 3 * n - 3 - h:
            raise ValueError(f"edge count {m}, expected 3v-3-h = {3 * n - 3 - h}")
        for a, b in zip(outer, outer[1:] + outer[:1]):
            if b not in rots[a]:
                raise ValueError("consecutive outer face vertices are not adjacent")
        orbits = self._orbits()
        outer_dart = (outer[1], outer[0])
        outer_seen = False
        for orbit in orbits:
            verts = [d[0] for d in orbit]
            if outer_dart in orbit:
                outer_seen = True
                if not _cyclic_eq(verts, list(reversed(outer))):
                    raise ValueError("designated outer face is not a face")
            else:
                if len(verts) != 3 or len(set(verts)) != 3:
                    raise ValueError("internal face is not a triangle")
        if not outer_seen:
            raise ValueError("outer face dart missing")
        if n - m + len(orbits) != 2:
            raise ValueError("Euler check failed")

    # -- serialization ---------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(
            {
                "num_vertices": self.num_vertices,
                "outer_face": list(self.outer_face),
                "rotations": [list(r) for r in self.rotations],
            },
            separators=(",", ":"),
        )


def from_rotation_json(text: str) -> CombTriangulation:
    """Parse and fully validate the JSON interchange form."""
    data = json.loads(text)
    return CombTriangulation(
        int(data["num_vertices"]),
        tuple(data["outer_face"]),
        tuple(tuple(r) for r in data["rotations"]),
    )


# -- canonical codes ------------------------------------------------------


def _code_from_rotations(
    num_vertices: int,
    outer_face: Sequence[int],
    rotations: Sequence[Sequence[int]],
) -> bytes:
    """Label-free serialization rooted at the dart outer[0] -> outer[1].

    Vertices are renamed by first visit of a breadth-first walk; each
    vertex emits its rotation starting at the neighbor it was entered
    from.  The result depends only on the rooted oriented structure.
    """
    labels = [-1] * num_vertices
    root, ref = outer_face[0], outer_face[1]
    labels[root] = 0
    order: list[Dart] = [(root, ref)]
    next_label = 1
    parts = [num_vertices, len(outer_face)]
    qi = 0
    while qi < len(order):
        v, ref = order[qi]
        qi += 1
        rot = rotations[v]
        d = len(rot)
        i0 = rot.index(ref)
        parts.append(d)
        for t in range(d):
            w = rot[(i0 + t) % d]
            lw = labels[w]
            if lw < 0:
                lw = labels[w] = next_label
                next_label += 1
                order.append((w, v))
            parts.append(lw)
    return b" ".join(b"%d" % p for p in parts)


def canonical_code(t: CombTriangulation) -> bytes:
    return _code_from_rotations(t.num_vertices, t.outer_face, t.rotations)


# -- geometric input -------------------------------------------------------


def _ccw_neighbor_order(
    center: Point, nbrs: Iterable[int], pts: Sequence[Point]
) -> tuple[int, ...]:
    def compare(a: int, b: int) -> int:
        ax, ay = pts[a].x - center.x, pts[a].y - center.y
        bx, by = pts[b].x - center.x, pts[b].y - center.y
        ha = 0 if (ay > 0 or (ay == 0 and ax > 0)) else 1
        hb = 0 if (by > 0 or (by == 0 and bx > 0)) else 1
        if ha != hb:
            return ha - hb
        # general position: distinct neighbors are never collinear with center
        return -1 if ax * by - ay * bx > 0 else 1

    return tuple(sorted(nbrs, key=cmp_to_key(compare)))


def rotations_from_drawing(
    points: Sequence[Point], edges: Iterable[Edge]
) -> tuple[tuple[int, ...], ...]:
    """Counterclockwise neighbor orders of a straight line graph."""
    pts = [Point(int(x), int(y)) for x, y in points]
    adj: list[list[int]] = [[] for _ in pts]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return tuple(
        _ccw_neighbor_order(pts[v], nb, pts) for v, nb in enumerate(adj)
    )


def from_straight_line_drawing(
    points: Sequence[Point], edges: Iterable[Edge]
) -> CombTriangulation:
    """Combinatorial structure of a crossing free straight line triangulation.

    Validates the drawing itself: general position, pairwise crossing
    freeness, hull edges present, edge count 3n-3-h.  The outer face is
    the hull cycle, counterclockwise from the lexicographically smallest
    point.
    """
    pts = [Point(int(x), int(y)) for x, y in points]
    n = len(pts)
    es = sorted({_norm_edge(int(a), int(b)) for a, b in edges})
    if any(a == b or not (0 <= a < n and 0 <= b < n) for a, b in es):
        raise ValueError("bad edge label")
    if not general_position(pts):
        raise ValueError("points must be distinct and in general position")
    hull = convex_hull(pts)
    h = len(hull)
    if len(es) != 3 * n - 3 - h:
        raise ValueError(f"edge count {len(es)}, expected {3 * n - 3 - h}")
    eset = set(es)
    for a, b in zip(hull, hull[1:] + hull[:1]):
        if _norm_edge(a, b) not in eset:
            raise ValueError("hull edge missing from drawing")
    for i, (a, b) in enumerate(es):
        for c, d in es[i + 1 :]:
            if segments_cross(pts[a], pts[b], pts[c], pts[d]):
                raise ValueError(f"edges {(a, b)} and {(c, d)} cross")
    return CombTriangulation(n, tuple(hull), rotations_from_drawing(pts, es))


def from_edge_list(
    num_vertices: int, edges: Iterable[Edge], outer_face: Sequence[int]
) -> CombTriangulation:
    """Embed an abstract edge list and root it at the given outer face.

    Only meaningful when the embedding is unique up to reflection, which
    holds for maximal planar graphs; exactly one of the two mirror
    orientations matches the requested outer face.
    """
    es = sorted({_norm_edge(a, b) for a, b in edges})
    g = nx.Graph(es)
    g.add_nodes_from(range(num_vertices))
    planar, emb = nx.check_planarity(g)
    if not planar:
        raise ValueError("edge list is not planar")
    rots = [tuple(emb.neighbors_cw_order(v)) for v in range(num_vertices)]
    last_error: Exception | None = None
    for cand in (rots, [tuple(reversed(r)) for r in rots]):
        try:
            return CombTriangulation(num_vertices, tuple(outer_face), tuple(cand))
        except ValueError as exc:
            last_error = exc
    raise ValueError(f"no orientation matches the outer face: {last_error}")


# -- counting and exhaustive generation ------------------------------------


def tutte_count(n: int) -> int:
    """Exact number of triangulations of a fixed triangle with n interior vertices."""
    if n < 1:
        raise ValueError("defined for n >= 1")
    num = 2 * _binom(4 * n + 1, n - 1)
    den = n * (n + 1)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("count formula did not divide evenly")
    return q


def enumerate_comb_triangulations(
    n: int, cap: int | None = None
) -> list[CombTriangulation]:
    """Every triangulation with outer face (0,1,2) and n interior vertices.

    Exhaustive search over edge subsets, filtered by planarity, embedded,
    and deduplicated by canonical code.  Output order is deterministic
    (sorted by code).  Guarded to n <= 4; the search is an oracle, not a
    scalable generator.
    """
    if n < 0:
        raise ValueError("n >= 0 required")
    if n > ENUM_INTERIOR_GUARD:
        raise ValueError(f"interior count {n} exceeds guard {ENUM_INTERIOR_GUARD}")
    nv = n + 3
    base = [(0, 1), (0, 2), (1, 2)]
    rest = [e for e in combinations(range(nv), 2) if e not in base]
    need = (3 * nv - 6) - 3
    found: dict[bytes, CombTriangulation] = {}
    for extra in combinations(rest, need):
        edges = base + list(extra)
        deg = [0] * nv
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        if nv > 3 and min(deg) < 3:
            continue
        planar, emb = nx.check_planarity(nx.Graph(edges))
        if not planar:
            continue
        rots = [tuple(emb.neighbors_cw_order(v)) for v in range(nv)]
        for cand in (rots, [tuple(reversed(r)) for r in rots]):
            try:
                t = CombTriangulation(nv, (0, 1, 2), tuple(cand))
            except ValueError:
                continue
            found.setdefault(canonical_code(t), t)
        if cap is not None and len(found) > cap:
            raise RuntimeError(f"more than cap={cap} triangulations")
    return [t for _, t in sorted(found.items())]


# -- the two recursive families --------------------------------------------

# Edges of one layer of the nested double chain construction, written in
# the role numbering of a 12 vertex block: 1,2 top corners, 3,4 bottom
# corners, 5..8 the lower interior run left to right, 9..12 the upper
# interior run left to right.  Roles 6,7,10,11 form the quadrilateral the
# next layer nests into.
_LAYER_EDGE_PATTERN: tuple[tuple[int, int], ...] = (
    (3, 5), (3, 6), (3, 7), (5, 6), (6, 7), (7, 8), (4, 7), (4, 8),
    (1, 5), (1, 9), (1, 10), (5, 9), (6, 9), (6, 10), (9, 10), (10, 11),
    (2, 10), (2, 11), (2, 12), (7, 11), (8, 11), (8, 12), (11, 12), (4, 12),
)


def _double_chain_roles(k: int, j: int) -> dict[int, int]:
    # Point labels: upper chain 0..4k+1 left to right, then lower chain
    # 4k+2..8k+3 left to right.  Layer j consumes the two outermost
    # remaining points at each end of each chain.
    return {
        1: 2 * j,
        2: 4 * k + 1 - 2 * j,
        3: 4 * k + 2 + 2 * j,
        4: 8 * k + 3 - 2 * j,
        5: 4 * k + 3 + 2 * j,
        6: 4 * k + 4 + 2 * j,
        7: 8 * k + 1 - 2 * j,
        8: 8 * k + 2 - 2 * j,
        9: 1 + 2 * j,
        10: 2 + 2 * j,
        11: 4 * k - 1 - 2 * j,
        12: 4 * k - 2 * j,
    }


def build_k_nested_double_chain(k: int) -> CombTriangulation:
    """Layered triangulation with quadrilateral outer face on 8k+4 vertices.

    Defined by its reference drawing on the balanced double chain with
    4k+2 points per chain: each layer triangulates the ring between the
    current bounding quadrilateral and the quadrilateral spanned by the
    innermost consumed pair of each chain end; the final quadrilateral is
    closed with one fixed diagonal (lower-right to upper-left corner).
    Corner vertices get degree 5, ring junction vertices degree 8, the
    rest degree 4 apart from the two diagonal endpoints.
    """
    if k < 1:
        raise ValueError("k >= 1 required")
    ps = gen_double_chain(4 * k + 2, 4 * k + 2)
    tl, tr, bl, br = 0, 4 * k + 1, 4 * k + 2, 8 * k + 3
    edges = {
        _norm_edge(tl, tr),
        _norm_edge(tl, bl),
        _norm_edge(bl, br),
        _norm_edge(tr, br),
    }
    for j in range(k):
        roles = _double_chain_roles(k, j)
        for ra, rb in _LAYER_EDGE_PATTERN:
            edges.add(_norm_edge(roles[ra], roles[rb]))
    edges.add(_norm_edge(2 * k, 6 * k + 3))
    return from_straight_line_drawing(ps.points, sorted(edges))


def build_k_nested_regular(n: int) -> CombTriangulation:
    """Triangular layer triangulation on n vertices.

    Layer j occupies labels 3j..3j+2; consecutive layers are joined by a
    six cycle of spokes, vertex i of a layer connecting to vertices i and
    i+1 of the next.  When 3 does not divide n, the leftover one or two
    points sit inside the innermost triangle: a single point is joined to
    all three corners; of two points, the one nearer the first inner edge
    gets that edge's endpoints, the other all three corners, and they are
    joined to each other.
    """
    if n < 3:
        raise ValueError("n >= 3 required")
    ps = gen_nested_triangles(n)
    layers = n // 3
    edges: set[Edge] = set()
    for j in range(layers):
        b = 3 * j
        for i in range(3):
            edges.add(_norm_edge(b + i, b + (i + 1) % 3))
            if j + 1 < layers:
                edges.add(_norm_edge(b + i, b + 3 + i))
                edges.add(_norm_edge(b + i, b + 3 + (i + 1) % 3))
    a, b2, c = 3 * layers - 3, 3 * layers - 2, 3 * layers - 1
    if n % 3 == 1:
        q = n - 1
        edges |= {_norm_edge(q, a), _norm_edge(q, b2), _norm_edge(q, c)}
    elif n % 3 == 2:
        q1, q2 = n - 2, n - 1
        edges |= {
            _norm_edge(q1, a), _norm_edge(q1, b2), _norm_edge(q1, q2),
            _norm_edge(q2, a), _norm_edge(q2, b2), _norm_edge(q2, c),
        }
    return from_straight_line_drawing(ps.points, sorted(edges))
