"""Blocker-set certificates for mutual-visibility lower bounds.

A *blocker set* S is a small set of segments whose complement is a
mutual-visibility set of the disjointness graph, certifying
mu(D(P)) >= C(n,2) - |S|.  Construction dispatches on the hull size and,
within each hull size, walks an ordered case list; later cases may assume
the earlier ones did not apply.  Every case is written against a fixed
hull labelling; the dispatcher realises the "relabel without loss of
generality" steps by scanning all rotations of the clockwise hull order,
on the point set itself and on its y-mirrored copy (mirroring reverses the
cyclic orientation, covering the symmetric branches).

Every candidate S is verified against the graph before it is returned:
the case analyses are intricate, and verification turns a transcription
slip into a loud diagnostic instead of a wrong certificate.  A bounded
fallback search sits beneath the dispatch as a safety net; it is never
expected to fire.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from functools import cached_property
from math import comb

from .geometry import (
    HullData,
    Point,
    PointSet,
    SegmentId,
    _hull_indices_clockwise,
    _sign,
    convex_hull,
    cross,
    first_on_rotating_line,
    rotation_neighbors,
    segment,
    strictly_inside_convex,
)
from .graph import DisjointnessGraph, build_disjointness_graph
from .visibility import VertexSet, is_mutual_visibility_set

STRATEGY_FIVE_DISJOINT = "FiveDisjointClean"
STRATEGY_EXPLICIT = "ExplicitBlockers"
STRATEGY_GOOD_TRIANGLE = "GoodTriangle"
STRATEGY_GOOD_2SET = "Good2Set"
STRATEGY_HULL3 = "Hull3"
STRATEGY_HULL4 = "Hull4"
STRATEGY_HULL5 = "Hull5Case"
STRATEGY_HULL6 = "Hull6Case"
STRATEGY_HULL7 = "Hull7Case"
STRATEGY_HULL89 = "Hull89"
STRATEGY_HULL10 = "Hull10Plus"
STRATEGY_FALLBACK = "FallbackSearch"


class ConstructionError(RuntimeError):
    """A certificate construction failed in a way the theory forbids."""


@dataclass(frozen=True)
class Certificate:
    """A verified blocker set together with the strategy that produced it."""

    strategy: str
    case: int | None
    blockers: tuple[SegmentId, ...]
    verified: bool
    mu_lower_bound: int
    diagnostics: tuple[str, ...] = ()

    @property
    def size(self) -> int:
        return len(self.blockers)


def certificate_json(cert: Certificate) -> dict:
    return {
        "strategy": cert.strategy,
        "case": cert.case,
        "S": [list(s) for s in cert.blockers],
        "size": cert.size,
        "mu_lower_bound": cert.mu_lower_bound,
        "verified": cert.verified,
    }


@dataclass(frozen=True)
class RegionDecomposition:
    """Interior-point regions relative to a labelled hull of size 5, 6 or 7.

    For hull position k (clockwise order, 0-based):

    - ``ear[k]``: points strictly inside the triangle of hull vertices
      k-1, k, k+1.
    - ``ear_fwd[k]`` / ``ear_bwd[k]``: the parts of ``ear[k]`` cut off by
      the rays from vertex k towards vertices k+2 and k+(m-2); they hug the
      hull edge (k, k+1) and (k-1, k) respectively.  ``ear_mid[k]`` is the
      remainder, and ``ear_fwd[k] == ear_bwd[k+1]``.
    - ``center`` (m = 6 only): interior points inside no ear.
    - m = 7 only: ``edge_quad[k]`` is the quadrilateral on hull vertices
      k-1 .. k+2; ``span_tri[k]`` the triangle on vertices k, k+3, k+4;
      ``core[k] = span_tri[k] - (edge_quad[k+2] + edge_quad[k+4] + ear[k])``;
      ``core_tip[k] = core[k] & edge_quad[k] & edge_quad[k+6]``; and
      ``lens[k] = (edge_quad[k+2] & edge_quad[k+4]) - (ear[k+3] + ear[k+4])``.
    """

    m: int
    hull: tuple[int, ...]
    ear: tuple[frozenset[int], ...]
    ear_fwd: tuple[frozenset[int], ...]
    ear_mid: tuple[frozenset[int], ...]
    ear_bwd: tuple[frozenset[int], ...]
    center: frozenset[int] | None = None
    edge_quad: tuple[frozenset[int], ...] | None = None
    span_tri: tuple[frozenset[int], ...] | None = None
    core: tuple[frozenset[int], ...] | None = None
    core_tip: tuple[frozenset[int], ...] | None = None
    lens: tuple[frozenset[int], ...] | None = None


def decompose_regions(ps: PointSet, hull: HullData) -> RegionDecomposition:
    """Assign every interior point to its regions via exact side tests."""
    if hull.m not in (5, 6, 7):
        raise ValueError("region decomposition is defined for hull sizes 5, 6, 7")
    frame = _Frame(ps.points, hull.hull, mirrored=False)
    return frame.region_decomposition()


# ---------------------------------------------------------------------------
# Labelled hull frames


class _Frame:
    """One labelling of the hull: a rotation of the clockwise order, over
    either the original coordinates or their y-mirrored copy."""

    def __init__(self, pts: list[Point], hull_cw: tuple[int, ...], mirrored: bool):
        self.pts = pts
        self.hull = hull_cw
        self.m = len(hull_cw)
        self.mirrored = mirrored
        self.n = len(pts)
        self._hull_set = set(hull_cw)
        self.interior = tuple(i for i in range(self.n) if i not in self._hull_set)

    def describe(self) -> str:
        return f"{'mirror,' if self.mirrored else ''}start={self.hull[0]}"

    def rotated(self, r: int) -> "_Frame":
        h = self.hull[r:] + self.hull[:r]
        return _Frame(self.pts, h, self.mirrored)

    # -- labelled accessors --------------------------------------------------

    def H(self, k: int) -> int:
        return self.hull[k % self.m]

    def E(self, k: int) -> SegmentId:
        return segment(self.H(k), self.H(k + 1))

    @staticmethod
    def seg(i: int, j: int) -> SegmentId:
        return segment(i, j)

    def orient(self, i: int, j: int, k: int) -> int:
        return _sign(cross(self.pts[i], self.pts[j], self.pts[k]))

    def inside(self, poly_idx: list[int], p: int) -> bool:
        return strictly_inside_convex([self.pts[i] for i in poly_idx], self.pts[p])

    # -- deterministic point selectors (exact, ties by lowest index) ---------

    def _line_key(self, a: int, b: int, p: int) -> int:
        return abs(cross(self.pts[a], self.pts[b], self.pts[p]))

    def closest_to_edge(self, cands, k: int) -> int:
        a, b = self.H(k), self.H(k + 1)
        return min(sorted(cands), key=lambda p: self._line_key(a, b, p))

    def closest_to_line(self, cands, a: int, b: int) -> int:
        return min(sorted(cands), key=lambda p: self._line_key(a, b, p))

    def furthest_from_line(self, cands, a: int, b: int) -> int:
        return max(sorted(cands), key=lambda p: self._line_key(a, b, p))

    def closest_to_point(self, cands, v: int) -> int:
        vx, vy = self.pts[v]
        return min(
            sorted(cands),
            key=lambda p: (self.pts[p][0] - vx) ** 2 + (self.pts[p][1] - vy) ** 2,
        )

    # -- regions --------------------------------------------------------------

    @cached_property
    def regions(self) -> RegionDecomposition:
        return self.region_decomposition()

    def region_decomposition(self) -> RegionDecomposition:
        m = self.m
        ear, ear_fwd, ear_mid, ear_bwd = [], [], [], []
        for k in range(m):
            tri = [self.H(k - 1), self.H(k), self.H(k + 1)]
            members = frozenset(p for p in self.interior if self.inside(tri, p))
            fwd = frozenset(
                p for p in members if self.orient(self.H(k), self.H(k + 2), p) == 1
            )
            bwd = frozenset(
                p for p in members if self.orient(self.H(k), self.H(k + m - 2), p) == -1
            )
            if fwd & bwd:
                raise ConstructionError("ear sub-regions overlap; predicate bug")
            ear.append(members)
            ear_fwd.append(fwd)
            ear_bwd.append(bwd)
            ear_mid.append(members - fwd - bwd)
        center = None
        edge_quad = span_tri = core = core_tip = lens = None
        if m == 6:
            covered = frozenset().union(*ear) if ear else frozenset()
            center = frozenset(self.interior) - covered
        if m == 7:
            edge_quad = [
                frozenset(
                    p
                    for p in self.interior
                    if self.inside([self.H(k - 1), self.H(k), self.H(k + 1), self.H(k + 2)], p)
                )
                for k in range(7)
            ]
            span_tri = [
                frozenset(
                    p
                    for p in self.interior
                    if self.inside([self.H(k), self.H(k + 3), self.H(k + 4)], p)
                )
                for k in range(7)
            ]
            core = [
                span_tri[k] - (edge_quad[(k + 2) % 7] | edge_quad[(k + 4) % 7] | ear[k])
                for k in range(7)
            ]
            core_tip = [
                core[k] & edge_quad[k] & edge_quad[(k + 6) % 7] for k in range(7)
            ]
            lens = [
                (edge_quad[(k + 2) % 7] & edge_quad[(k + 4) % 7])
                - (ear[(k + 3) % 7] | ear[(k + 4) % 7])
                for k in range(7)
            ]
        return RegionDecomposition(
            m=m,
            hull=self.hull,
            ear=tuple(ear),
            ear_fwd=tuple(ear_fwd),
            ear_mid=tuple(ear_mid),
            ear_bwd=tuple(ear_bwd),
            center=center,
            edge_quad=tuple(edge_quad) if edge_quad else None,
            span_tri=tuple(span_tri) if span_tri else None,
            core=tuple(core) if core else None,
            core_tip=tuple(core_tip) if core_tip else None,
            lens=tuple(lens) if lens else None,
        )


# ---------------------------------------------------------------------------
# Workspace shared by all builders


class _Workspace:
    def __init__(self, ps: PointSet, g: DisjointnessGraph):
        self.ps = ps
        self.g = g
        self.hull_data = convex_hull(ps)
        self.m = self.hull_data.m
        self.n = ps.n
        self.diagnostics: list[str] = []
        self._pts = list(ps.points)
        self._mirror_pts = [Point(p.x, -p.y) for p in ps.points]

    @classmethod
    def create(cls, ps: PointSet, g: DisjointnessGraph | None) -> "_Workspace":
        return cls(ps, g if g is not None else build_disjointness_graph(ps))

    def note(self, msg: str) -> None:
        self.diagnostics.append(msg)

    @cached_property
    def _mirror_hull(self) -> tuple[int, ...]:
        return tuple(_hull_indices_clockwise(self._mirror_pts))

    @cached_property
    def _frame_list(self) -> list["_Frame"]:
        base = _Frame(self._pts, self.hull_data.hull, mirrored=False)
        mirrored = _Frame(self._mirror_pts, self._mirror_hull, mirrored=True)
        return [base.rotated(r) for r in range(self.m)] + [
            mirrored.rotated(r) for r in range(self.m)
        ]

    def frames(self) -> list["_Frame"]:
        return self._frame_list

    def base_frame(self) -> _Frame:
        return self._frame_list[0]

    def verify(self, segs: list[SegmentId]) -> bool:
        s_mask = 0
        for s in segs:
            s_mask |= 1 << self.g.vertex(s)
        u = VertexSet(self.g.n_vertices, self.g.full_mask & ~s_mask)
        ok, _ = is_mutual_visibility_set(self.g, u)
        return ok

    def attempt(
        self, strategy: str, case: int | None, segs: list[SegmentId], desc: str
    ) -> Certificate | None:
        if len(set(segs)) != len(segs):
            self.note(f"{strategy}({case}) [{desc}]: duplicate blockers {segs}")
            return None
        if len(segs) > 9:
            self.note(f"{strategy}({case}) [{desc}]: blocker set larger than 9")
            return None
        if self.verify(segs):
            return Certificate(
                strategy=strategy,
                case=case,
                blockers=tuple(sorted(segs)),
                verified=True,
                mu_lower_bound=comb(self.n, 2) - len(segs),
                diagnostics=tuple(self.diagnostics),
            )
        self.note(f"{strategy}({case}) [{desc}]: candidate failed verification")
        return None


# ---------------------------------------------------------------------------
# Good triangles


def _triangle_is_good(ws: _Workspace, frame: _Frame, x: int, i: int) -> bool:
    m = frame.m
    quad = [frame.H(i + m - 1), frame.H(i), frame.H(i + 1), frame.H(i + 2)]
    if not frame.inside(quad, x):
        return False
    g = ws.g
    tri = [
        segment(x, frame.H(i)),
        segment(x, frame.H(i + 1)),
        frame.E(i),
    ]
    tri_ids = [g.vertex(s) for s in tri]
    tri_mask = 0
    for t in tri_ids:
        tri_mask |= 1 << t
    allowed = {
        segment(frame.H(i), frame.H(i + 2)),
        segment(frame.H(i), frame.H(i + 3)),
        segment(frame.H(i + 1), frame.H(i + m - 2)),
        segment(frame.H(i + 1), frame.H(i + m - 1)),
    }
    # Segments meeting all three triangle sides = non-neighbours of all three.
    bad = g.full_mask & ~tri_mask
    for t in tri_ids:
        bad &= ~g.adj[t]
    while bad:
        v = (bad & -bad).bit_length() - 1
        bad &= bad - 1
        if g.segment_of(v) not in allowed:
            return False
    return True


def find_good_triangle(ps: PointSet, graph: DisjointnessGraph | None = None):
    """First (x, hull position i) in scan order such that the triangle on x
    and hull edge i passes both good-triangle conditions; None otherwise."""
    ws = _Workspace.create(ps, graph)
    if ws.m < 6:
        raise ValueError("good triangles need hull size >= 6")
    frame = ws.base_frame()
    for x in frame.interior:
        for i in range(ws.m):
            if _triangle_is_good(ws, frame, x, i):
                return x, i
    return None


def _good_triangle_blockers(frame: _Frame, x: int, i: int) -> list[SegmentId]:
    # Relabel so the triangle sits on hull positions 2, 3.
    h = [frame.H(k + i - 2) for k in range(frame.m)]
    return [
        segment(h[0], h[1]),
        segment(h[2], h[3]),
        segment(h[4], h[5]),
        segment(x, h[2]),
        segment(x, h[3]),
        segment(h[0], h[3]),
        segment(h[1], h[3]),
        segment(h[2], h[4]),
        segment(h[2], h[5]),
    ]


def s_from_good_triangle(
    ps: PointSet, x: int, i: int, graph: DisjointnessGraph | None = None
) -> Certificate:
    """Nine-segment blocker set built from a good triangle (hull size >= 6)."""
    ws = _Workspace.create(ps, graph)
    if ws.m < 6:
        raise ConstructionError("good-triangle certificate needs hull size >= 6")
    frame = ws.base_frame()
    if not _triangle_is_good(ws, frame, x, i):
        raise ConstructionError(f"({x}, {i}) is not a good triangle")
    segs = _good_triangle_blockers(frame, x, i)
    cert = ws.attempt(STRATEGY_GOOD_TRIANGLE, None, segs, frame.describe())
    if cert is None:
        raise ConstructionError(
            f"good-triangle blocker set failed verification: {ws.diagnostics}"
        )
    return cert


# ---------------------------------------------------------------------------
# Good 2-sets


def _k4_segments(uv: SegmentId, xy: SegmentId) -> list[SegmentId]:
    u, v = uv
    x, y = xy
    return [
        segment(u, v),
        segment(u, x),
        segment(u, y),
        segment(v, x),
        segment(v, y),
        segment(x, y),
    ]


def _segment_side(frame: _Frame, line: SegmentId, seg_: SegmentId) -> int:
    """Side of a line taken by a segment that does not cross it: the sign of
    whichever endpoint is off the line (both, when neither lies on it)."""
    a, b = line
    s1 = frame.orient(a, b, seg_[0])
    s2 = frame.orient(a, b, seg_[1])
    if s1 and s2 and s1 != s2:
        raise ConstructionError("segment unexpectedly crosses a diagonal line")
    return s1 or s2


def _good_2set_diagonals(ws: _Workspace, frame: _Frame, uv: SegmentId, xy: SegmentId):
    u, v = uv
    x, y = xy
    g = ws.g
    pairs = [(segment(u, x), segment(v, y)), (segment(u, y), segment(v, x))]
    for d1, d2 in pairs:
        if g.vertex(d2) in _cross_ids(g, d1):
            return d1, d2
    # Triangle case: one endpoint sits inside the triangle of the others.
    corners = [u, v, x, y]
    for t in corners:
        others = [c for c in corners if c != t]
        if frame.inside(_cw_triangle(frame, others), t):
            partner = v if t == u else u if t == v else y if t == x else x
            d = [segment(t, c) for c in others if c != partner]
            return d[0], d[1]
    raise ConstructionError("could not locate the diagonals of the 4-point drawing")


def _cw_triangle(frame: _Frame, idx: list[int]) -> list[int]:
    a, b, c = idx
    if frame.orient(a, b, c) == -1:
        return [a, b, c]
    return [a, c, b]


def _cross_ids(g: DisjointnessGraph, s: SegmentId):
    out = set()
    m = g.cross_mask[g.vertex(s)]
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        out.add(v)
    return out


def _quadrant_of(frame: _Frame, d1: SegmentId, d2: SegmentId, s: SegmentId):
    """Open quadrant (sign pair) containing segment s, or None when s meets
    either diagonal line."""
    sides = []
    for d in (d1, d2):
        a, b = d
        s1 = frame.orient(a, b, s[0])
        s2 = frame.orient(a, b, s[1])
        if s1 == 0 or s1 != s2:
            return None
        sides.append(s1)
    return tuple(sides)


def _validate_good_2set(
    ws: _Workspace,
    frame: _Frame,
    uv: SegmentId,
    xy: SegmentId,
    e_l: SegmentId,
    e_r: SegmentId,
) -> str | None:
    """Return None when (uv, xy, e_l, e_r) is a good 2-set, else a reason."""
    g = ws.g
    hull_pts = set(ws.hull_data.hull)
    if not g.are_adjacent(g.vertex(uv), g.vertex(xy)):
        return "base segments are not disjoint"
    for s in (uv, xy):
        if not g.is_clean_vertex(g.vertex(s)):
            return f"base segment {s} is not clean"
        if not (set(s) & hull_pts):
            return f"base segment {s} has no hull endpoint"
    try:
        d1, d2 = _good_2set_diagonals(ws, frame, uv, xy)
        q_uv = (_segment_side(frame, d1, uv), _segment_side(frame, d2, uv))
        q_xy = (_segment_side(frame, d1, xy), _segment_side(frame, d2, xy))
    except ConstructionError as exc:
        return str(exc)
    if 0 in q_uv or 0 in q_xy or q_xy != (-q_uv[0], -q_uv[1]):
        return "base segments do not sit in opposite quadrants"
    lateral = [(q_uv[0], -q_uv[1]), (-q_uv[0], q_uv[1])]
    ql = _quadrant_of(frame, d1, d2, e_l)
    qr = _quadrant_of(frame, d1, d2, e_r)
    if ql not in lateral:
        return f"{e_l} is not interior to a lateral quadrant"
    if qr not in lateral or qr == ql:
        return f"{e_r} is not interior to the opposite lateral quadrant"
    d_mask = 0
    for s in _k4_segments(uv, xy):
        d_mask |= 1 << g.vertex(s)
    for e in (e_l, e_r):
        if g.cross_mask[g.vertex(e)] & ~d_mask:
            return f"{e} is crossed outside the 4-point drawing"
    return None


def find_good_2set(ps: PointSet, graph: DisjointnessGraph | None = None):
    """Deterministic scan for a good 2-set: a drawn K4 on two disjoint clean
    segments with hull endpoints, plus one protected segment in each lateral
    quadrant.  Hull-edge base pairs are scanned first."""
    ws = _Workspace.create(ps, graph)
    if ws.n < 8:
        return None
    g = ws.g
    frame = ws.base_frame()
    hull_pts = set(ws.hull_data.hull)
    hull_edges = {frame.E(k) for k in range(ws.m)}
    clean = [
        s
        for s in g.vertices
        if g.is_clean_vertex(g.vertex(s)) and set(s) & hull_pts
    ]
    edge_pairs, other_pairs = [], []
    for s1, s2 in itertools.combinations(clean, 2):
        if not g.are_adjacent(g.vertex(s1), g.vertex(s2)):
            continue
        (edge_pairs if s1 in hull_edges and s2 in hull_edges else other_pairs).append(
            (s1, s2)
        )
    for uv, xy in edge_pairs + other_pairs:
        try:
            d1, d2 = _good_2set_diagonals(ws, frame, uv, xy)
            q_uv = (_segment_side(frame, d1, uv), _segment_side(frame, d2, uv))
        except ConstructionError:
            continue
        if 0 in q_uv:
            continue
        lateral = [(q_uv[0], -q_uv[1]), (-q_uv[0], q_uv[1])]
        d_mask = 0
        for s in _k4_segments(uv, xy):
            d_mask |= 1 << g.vertex(s)
        found: dict[tuple, SegmentId] = {}
        for e in g.vertices:
            q = _quadrant_of(frame, d1, d2, e)
            if q not in lateral or q in found:
                continue
            if g.cross_mask[g.vertex(e)] & ~d_mask:
                continue
            found[q] = e
            if len(found) == 2:
                return uv, xy, found[lateral[0]], found[lateral[1]]
    return None


def s_from_good_2set(
    ps: PointSet,
    quadruple,
    graph: DisjointnessGraph | None = None,
) -> Certificate:
    """Eight-segment blocker set: the K4 drawing plus the two protected
    quadrant segments."""
    uv, xy, e_l, e_r = quadruple
    ws = _Workspace.create(ps, graph)
    frame = ws.base_frame()
    reason = _validate_good_2set(ws, frame, uv, xy, e_l, e_r)
    if reason is not None:
        raise ConstructionError(f"not a good 2-set: {reason}")
    segs = _k4_segments(uv, xy) + [e_l, e_r]
    cert = ws.attempt(STRATEGY_GOOD_2SET, None, segs, frame.describe())
    if cert is None:
        raise ConstructionError(
            f"good-2-set blockers failed verification: {ws.diagnostics}"
        )
    return cert


def _try_good_2set(
    ws: _Workspace,
    frame: _Frame,
    uv: SegmentId,
    xy: SegmentId,
    e_l: SegmentId,
    e_r: SegmentId,
    desc: str,
):
    reason = _validate_good_2set(ws, frame, uv, xy, e_l, e_r)
    if reason is not None:
        ws.note(f"good-2-set [{desc}]: {reason}")
        return None
    return _k4_segments(uv, xy) + [e_l, e_r]


# ---------------------------------------------------------------------------
# Five pairwise-disjoint clean segments


def find_five_disjoint_clean(ps: PointSet, graph: DisjointnessGraph | None = None):
    """Five pairwise-disjoint clean segments, or None.

    Alternating hull edges are tried first (they always work once the hull
    has ten or more vertices); otherwise the clean segments are searched
    exhaustively in lexicographic order.
    """
    ws = _Workspace.create(ps, graph)
    g = ws.g
    if ws.m >= 10:
        frame = ws.base_frame()
        return [frame.E(k) for k in (0, 2, 4, 6, 8)]
    clean = [s for s in g.vertices if g.is_clean_vertex(g.vertex(s))]

    def extend(chosen: list[SegmentId], start: int):
        if len(chosen) == 5:
            return list(chosen)
        for t in range(start, len(clean)):
            s = clean[t]
            if all(g.are_adjacent(g.vertex(s), g.vertex(c)) for c in chosen):
                got = extend(chosen + [s], t + 1)
                if got:
                    return got
        return None

    return extend([], 0)


# ---------------------------------------------------------------------------
# Hull-size 3 and 4


def _in_convex_position(pts: list[Point], idx: list[int]) -> bool:
    """Are the four points in convex position (none inside the others'
    triangle)?"""
    for t in idx:
        others = [c for c in idx if c != t]
        a, b, c = (pts[o] for o in others)
        tri = [a, b, c] if _sign(cross(a, b, c)) == -1 else [a, c, b]
        if strictly_inside_convex(tri, pts[t]):
            return False
    return True


def hull3_certificate(
    ps: PointSet, graph: DisjointnessGraph | None = None
) -> Certificate:
    """Blocker set of size 8 for triangular hulls (n >= 5).

    Some hull vertex u admits rotation neighbours u-, u+ in convex position
    with the other two hull vertices; the sweep argument guarantees this,
    so exhausting all three vertices is a hard error rather than a fallback.
    The blocker set joins u to both neighbours and both neighbours to the
    opposite hull edge.
    """
    ws = _Workspace.create(ps, graph)
    if ws.m != 3:
        raise ValueError("hull3_certificate needs a triangular hull")
    if ws.n < 5:
        raise ValueError("certificates need n >= 5")
    hull = ws.hull_data
    for i in range(3):
        um, up = rotation_neighbors(ps, hull, i)
        u, v, w = hull.hull[i], hull.hull[(i + 1) % 3], hull.hull[(i + 2) % 3]
        if _in_convex_position(list(ps.points), [um, up, v, w]):
            segs = [
                segment(u, um),
                segment(u, up),
                segment(um, up),
                segment(v, um),
                segment(w, um),
                segment(v, up),
                segment(w, up),
                segment(v, w),
            ]
            cert = ws.attempt(STRATEGY_HULL3, None, segs, f"apex={u}")
            if cert is not None:
                return cert
            return _fallback_certificate(ws)
    raise ConstructionError(
        "no hull vertex yields rotation neighbours in convex position with "
        "the other two; this contradicts the sweep argument and signals a "
        "predicate bug"
    )


def hull4_certificate(
    ps: PointSet, graph: DisjointnessGraph | None = None
) -> Certificate:
    """Blocker set of size 9 for quadrilateral hulls (n >= 5)."""
    ws = _Workspace.create(ps, graph)
    if ws.m != 4:
        raise ValueError("hull4_certificate needs a quadrilateral hull")
    if ws.n < 5:
        raise ValueError("certificates need n >= 5")
    for f in ws.frames():
        h = [f.H(k) for k in range(4)]
        # Triangle between edge (h2, h3) and the diagonal crossing.
        s1 = f.orient(h[0], h[2], h[3])
        s2 = f.orient(h[1], h[3], h[2])
        members = [
            p
            for p in f.interior
            if f.inside(h, p)
            and f.orient(h[0], h[2], p) == s1
            and f.orient(h[1], h[3], p) == s2
        ]
        if not members:
            continue
        vp = f.closest_to_line(members, h[2], h[3])
        segs = [
            segment(h[0], h[1]),
            segment(h[0], h[2]),
            segment(h[0], vp),
            segment(h[0], h[3]),
            segment(h[1], h[2]),
            segment(h[1], vp),
            segment(h[1], h[3]),
            segment(h[2], vp),
            segment(h[3], vp),
        ]
        cert = ws.attempt(STRATEGY_HULL4, None, segs, f.describe())
        if cert is not None:
            return cert
    return _fallback_certificate(ws)


# ---------------------------------------------------------------------------
# Hull size 5


def _ch5_case1(ws: _Workspace):
    for f in ws.frames():
        if not f.regions.ear[0]:
            yield f.describe(), [
                f.E(0),
                f.E(1),
                f.E(2),
                f.E(3),
                f.E(4),
                f.seg(f.H(0), f.H(2)),
                f.seg(f.H(0), f.H(3)),
                f.seg(f.H(1), f.H(3)),
                f.seg(f.H(2), f.H(4)),
            ]


def _ch5_case2(ws: _Workspace):
    for f in ws.frames():
        r = f.regions
        if r.ear_fwd[0] and r.ear_fwd[2] and r.ear[4]:
            u1 = f.closest_to_edge(r.ear_fwd[0], 0)
            u3 = f.closest_to_edge(r.ear_fwd[2], 2)
            u5 = f.furthest_from_line(r.ear[4], f.H(0), f.H(3))
            yield f.describe(), [
                f.E(0),
                f.seg(u1, f.H(0)),
                f.seg(u1, f.H(1)),
                f.E(2),
                f.seg(u3, f.H(2)),
                f.seg(u3, f.H(3)),
                f.seg(u5, f.H(4)),
            ]


def _ch5_case3(ws: _Workspace):
    for f in ws.frames():
        r = f.regions
        if r.ear_fwd[0] and r.ear_bwd[0] and r.ear_mid[2] and r.ear_mid[3]:
            u1 = f.closest_to_edge(r.ear_fwd[0], 0)
            u5 = f.closest_to_edge(r.ear_bwd[0], 4)
            u3 = f.closest_to_point(r.ear_mid[2], f.H(2))
            u4 = f.closest_to_point(r.ear_mid[3], f.H(3))
            yield f.describe(), [
                f.E(0),
                f.seg(u1, f.H(0)),
                f.seg(u1, f.H(1)),
                f.E(4),
                f.seg(u5, f.H(4)),
                f.seg(u5, f.H(0)),
                f.seg(u3, f.H(2)),
                f.seg(u4, f.H(3)),
            ]


def _ch5_case4(ws: _Workspace):
    for f in ws.frames():
        r = f.regions
        if r.ear_fwd[0] and r.ear_mid[2] and r.ear_mid[3] and r.ear_mid[4]:
            u1 = f.closest_to_edge(r.ear_fwd[0], 0)
            picks = [f.closest_to_point(r.ear_mid[k], f.H(k)) for k in (2, 3, 4)]
            yield f.describe(), [
                f.E(0),
                f.seg(u1, f.H(0)),
                f.seg(u1, f.H(1)),
            ] + [f.seg(p, f.H(k)) for p, k in zip(picks, (2, 3, 4))]


def _ch5_case5(ws: _Workspace):
    f = ws.base_frame()
    r = f.regions
    if all(r.ear_mid[k] for k in range(5)):
        yield f.describe(), [
            f.seg(f.closest_to_point(r.ear_mid[k], f.H(k)), f.H(k)) for k in range(5)
        ]


_CH5_CASES = [
    (1, _ch5_case1),
    (2, _ch5_case2),
    (3, _ch5_case3),
    (4, _ch5_case4),
    (5, _ch5_case5),
]


# ---------------------------------------------------------------------------
# Hull size 6


def _ch6_case1(ws: _Workspace):
    if ws.n == 6:
        f = ws.base_frame()
        yield f.describe(), [
            f.seg(f.H(0), f.H(3)),
            f.seg(f.H(1), f.H(4)),
            f.seg(f.H(2), f.H(5)),
        ] + [f.E(k) for k in range(6)]


def _ch6_case2(ws: _Workspace):
    if ws.n != 7:
        return
    f = ws.base_frame()
    x = f.interior[0]
    for i in range(6):
        # Triangle between edge i and the two long diagonals at its ends.
        if f.orient(f.H(i), f.H(i + 1), x) != -1:
            continue
        if f.orient(f.H(i), f.H(i + 3), x) != f.orient(f.H(i), f.H(i + 3), f.H(i + 1)):
            continue
        if f.orient(f.H(i + 1), f.H(i + 4), x) != f.orient(
            f.H(i + 1), f.H(i + 4), f.H(i)
        ):
            continue
        side = f.orient(f.H(i + 2), f.H(i + 5), x)
        pos = i if side == -1 else i + 3
        if _triangle_is_good(ws, f, x, pos % 6):
            yield f"{f.describe()},edge={pos % 6}", _good_triangle_blockers(
                f, x, pos % 6
            )
        else:
            ws.note(f"hull6 case 2: triangle at edge {pos % 6} not good")
        return


def _ch6_case3(ws: _Workspace):
    for f in ws.frames():
        r = f.regions
        if r.ear[0] and r.ear[3]:
            u1 = f.furthest_from_line(r.ear[0], f.H(1), f.H(5))
            u4 = f.furthest_from_line(r.ear[3], f.H(2), f.H(4))
            segs = _try_good_2set(
                ws,
                f,
                f.seg(f.H(1), f.H(2)),
                f.seg(f.H(4), f.H(5)),
                f.seg(f.H(3), u4),
                f.seg(f.H(0), u1),
                f"case3 {f.describe()}",
            )
            if segs:
                yield f.describe(), segs


def _ch6_case4(ws: _Workspace):
    for f in ws.frames():
        r = f.regions
        parts = [r.ear_fwd[1], r.ear_mid[1], r.ear_bwd[1]]
        if sum(1 for p in parts if p) < 2:
            continue
        u2 = f.furthest_from_line(r.ear[1], f.H(0), f.H(2))

        def via_fwd():
            # foremost wedge occupied: pull the helper from the next ear
            u = f.furthest_from_line(r.ear[2], f.H(1), f.H(3))
            return (
                f.seg(u2, f.H(1)),
                f.seg(f.H(3), f.H(4)),
                f.seg(u, f.H(2)),
                f.seg(f.H(0), f.H(5)),
            )

        def via_bwd():
            u = f.furthest_from_line(r.ear[0], f.H(1), f.H(5))
            return (
                f.seg(u2, f.H(1)),
                f.seg(f.H(4), f.H(5)),
                f.seg(f.H(2), f.H(3)),
                f.seg(u, f.H(0)),
            )

        if u2 in r.ear_mid[1]:
            order = [via_fwd, via_bwd] if r.ear_fwd[1] else [via_bwd]
        elif not r.ear_mid[1]:
            order = [via_bwd, via_fwd] if u2 in r.ear_fwd[1] else [via_fwd, via_bwd]
        else:
            # Furthest point in a side wedge while the middle wedge is also
            # occupied: not spelled out by the case analysis, so try both.
            order = [via_fwd, via_bwd]
        for make in order:
            if make is via_fwd and not r.ear[2]:
                continue
            if make is via_bwd and not r.ear[0]:
                continue
            segs = _try_good_2set(ws, f, *make(), f"case4 {f.describe()}")
            if segs:
                yield f.describe(), segs


def _ch6_case5(ws: _Workspace):
    for f in ws.frames():
        r = f.regions
        if r.ear_fwd[0] and r.ear_mid[2]:
            u2 = f.furthest_from_line(r.ear_fwd[0], f.H(0), f.H(2))
            u3 = f.furthest_from_line(r.ear[2], f.H(1), f.H(3))
            segs = _try_good_2set(
                ws,
                f,
                f.seg(u2, f.H(1)),
                f.seg(f.H(3), f.H(4)),
                f.seg(u3, f.H(2)),
                f.seg(f.H(0), f.H(5)),
                f"case5 {f.describe()}",
            )
            if segs:
                yield f.describe(), segs


def _ch6_case6(ws: _Workspace):
    for f in ws.frames():
        r = f.regions
        if not r.ear_fwd[0]:
            continue
        if len(r.ear_fwd[0]) == 1:
            (x,) = r.ear_fwd[0]
            if _triangle_is_good(ws, f, x, 0):
                yield f.describe(), _good_triangle_blockers(f, x, 0)
            else:
                ws.note(f"hull6 case 6 [{f.describe()}]: lone-point triangle not good")
            continue
        xs = sorted(r.ear_fwd[0])
        x, y = xs[0], xs[1]
        yield f.describe(), [
            f.E(0),
            f.E(2),
            f.E(4),
            f.seg(f.H(0), f.H(3)),
            f.seg(f.H(1), f.H(4)),
            f.seg(f.H(2), f.H(5)),
            f.seg(f.H(1), f.H(5)),
            f.seg(f.H(0), f.H(2)),
            f.seg(x, y),
        ]


def _ch6_case7(ws: _Workspace):
    # Sub-branches in order: each scanned over all frames before the next.
    for f in ws.frames():
        r = f.regions
        if r.ear_mid[0] and r.ear_mid[1]:
            u1 = f.closest_to_point(r.ear_mid[0], f.H(0))
            u2 = f.furthest_from_line(r.ear[1], f.H(0), f.H(2))
            segs = _try_good_2set(
                ws,
                f,
                f.seg(f.H(0), u1),
                f.seg(f.H(2), f.H(3)),
                f.seg(f.H(4), f.H(5)),
                f.seg(f.H(1), u2),
                f"case7a {f.describe()}",
            )
            if segs:
                yield f.describe(), segs
    for f in ws.frames():
        r = f.regions
        if r.ear_mid[0] and r.ear_mid[2]:
            u1 = f.closest_to_point(r.ear_mid[0], f.H(0))
            u3 = f.closest_to_point(r.ear_mid[2], f.H(2))
            yield f.describe(), [
                f.E(0),
                f.E(1),
                f.E(4),
                f.seg(f.H(0), u1),
                f.seg(f.H(1), f.H(4)),
                f.seg(f.H(1), f.H(5)),
                f.seg(f.H(2), f.H(4)),
                f.seg(f.H(2), f.H(5)),
                f.seg(f.H(3), u3),
            ]
    for f in ws.frames():
        r = f.regions
        if not r.ear_mid[0]:
            continue
        u1 = f.closest_to_point(r.ear_mid[0], f.H(0))
        rest = sorted((set(r.ear_mid[0]) | set(r.center or ())) - {u1})
        if not rest:
            continue
        yield f.describe(), [
            f.E(0),
            f.E(2),
            f.E(4),
            f.seg(f.H(0), f.H(2)),
            f.seg(f.H(0), f.H(3)),
            f.seg(f.H(1), f.H(4)),
            f.seg(f.H(2), f.H(5)),
            f.seg(f.H(1), f.H(5)),
            f.seg(u1, rest[0]),
        ]


def _ch6_case8(ws: _Workspace):
    f = ws.base_frame()
    r = f.regions
    if r.center and len(r.center) >= 2:
        xs = sorted(r.center)
        yield f.describe(), [
            f.E(0),
            f.E(2),
            f.E(4),
            f.seg(f.H(0), f.H(3)),
            f.seg(f.H(1), f.H(4)),
            f.seg(f.H(2), f.H(5)),
            f.seg(xs[0], xs[1]),
        ]


_CH6_CASES = [
    (1, _ch6_case1),
    (2, _ch6_case2),
    (3, _ch6_case3),
    (4, _ch6_case4),
    (5, _ch6_case5),
    (6, _ch6_case6),
    (7, _ch6_case7),
    (8, _ch6_case8),
]


# ---------------------------------------------------------------------------
# Hull size 7


def _ch7_case1(ws: _Workspace):
    if ws.n == 7:
        f = ws.base_frame()
        yield f.describe(), [f.E(k) for k in range(7)]


def _ch7_case2(ws: _Workspace):
    for f in ws.frames():
        r = f.regions
        if r.ear[0]:
            x = f.furthest_from_line(r.ear[0], f.H(1), f.H(6))
            segs = _try_good_2set(
                ws,
                f,
                f.seg(f.H(1), f.H(2)),
                f.seg(f.H(5), f.H(6)),
                f.seg(f.H(0), x),
                f.seg(f.H(3), f.H(4)),
                f"case2 {f.describe()}",
            )
            if segs:
                yield f.describe(), segs


def _hull_pair_crossings(ws: _Workspace, s: SegmentId) -> list[SegmentId]:
    """Segments spanned by two hull points that properly cross s."""
    g = ws.g
    hull_pts = set(ws.hull_data.hull)
    out = []
    for v in sorted(_cross_ids(g, s)):
        t = g.segment_of(v)
        if set(t) <= hull_pts:
            out.append(t)
    return out


def _ch7_interior_pair_blockers(ws: _Workspace, x: int, y: int):
    pair = segment(x, y)
    crossed = _hull_pair_crossings(ws, pair)
    if len(crossed) > 1:
        return None
    f = ws.base_frame()
    return [f.E(k) for k in range(7)] + [pair] + crossed


def _ch7_case3(ws: _Workspace):
    f = ws.base_frame()
    for x, y in itertools.combinations(f.interior, 2):
        segs = _ch7_interior_pair_blockers(ws, x, y)
        if segs is not None:
            yield f"pair={x},{y}", segs


def _ch7_case4(ws: _Workspace):
    for f in ws.frames():
        r = f.regions
        if len(r.lens[0]) == 1 and len(r.lens[2]) == 1:
            (u1,) = r.lens[0]
            (u3,) = r.lens[2]
            yield f.describe(), [
                f.E(2),
                f.E(3),
                f.seg(f.H(2), u1),
                f.seg(f.H(4), u1),
                f.E(5),
                f.seg(f.H(5), u3),
                f.seg(f.H(6), u3),
                f.E(0),
            ]


def _ch7_case5(ws: _Workspace):
    for f in ws.frames():
        r = f.regions
        if not (r.core[0] and not r.lens[0]):
            continue
        x = min(r.core[0])
        meet = r.core[3] & r.edge_quad[2]
        if not meet:
            yield f"5.1 {f.describe()}", [
                f.E(0),
                f.E(1),
                f.E(3),
                f.E(6),
                f.seg(f.H(0), x),
                f.seg(f.H(2), x),
                f.seg(f.H(5), x),
                f.seg(f.H(0), f.H(3)),
                f.seg(f.H(0), f.H(4)),
            ]
        elif len(meet) >= 2:
            xs = sorted(meet)
            segs = _ch7_interior_pair_blockers(ws, xs[0], xs[1])
            if segs is not None:
                yield f"5.2a {f.describe()}", segs
            else:
                ws.note(f"hull7 case 5.2 [{f.describe()}]: pair crosses too much")
        else:
            (u,) = meet
            yield f"5.2b {f.describe()}", [
                f.E(0),
                f.E(4),
                f.E(5),
                f.E(6),
                f.seg(f.H(2), u),
                f.seg(f.H(3), u),
                f.E(2),
                f.seg(f.H(0), f.H(3)),
                f.seg(f.H(2), f.H(5)),
            ]


def _ch7_case6(ws: _Workspace):
    for f in ws.frames():
        r = f.regions
        if not (len(r.lens[0]) == 1 and len(r.lens[1]) == 1):
            continue
        (u1,) = r.lens[0]
        (u2,) = r.lens[1]
        if r.core_tip[4]:
            x = min(r.core_tip[4])
            segs = _ch7_interior_pair_blockers(ws, x, u1)
            if segs is not None:
                yield f"6-tip {f.describe()}", segs
            else:
                ws.note(f"hull7 case 6 [{f.describe()}]: tip pair crosses too much")
            continue
        quad5 = r.edge_quad[4]
        if quad5 != {u1, u2}:
            ws.note(
                f"hull7 case 6 [{f.describe()}]: edge quad 4 is {sorted(quad5)}, "
                f"expected {{{u1}, {u2}}}"
            )
            continue
        x = first_on_rotating_line(f.pts, f.H(3), f.H(5), [u1, u2])
        if x == u1:
            uvxy = (f.seg(f.H(4), f.H(5)), f.seg(f.H(1), f.H(2)))
            e_l, e_r = f.seg(f.H(3), x), f.seg(f.H(0), f.H(6))
        else:
            uvxy = (f.seg(f.H(0), f.H(6)), f.seg(f.H(3), f.H(4)))
            e_l, e_r = f.seg(f.H(5), x), f.seg(f.H(1), f.H(2))
        segs = _try_good_2set(ws, f, *uvxy, e_l, e_r, f"case6 {f.describe()}")
        if segs:
            yield f.describe(), segs


def _ch7_case7(ws: _Workspace):
    for f in ws.frames():
        r = f.regions
        if len(r.lens[0]) != 1:
            continue
        (x,) = r.lens[0]
        segs = _try_good_2set(
            ws,
            f,
            f.seg(f.H(2), f.H(3)),
            f.seg(f.H(5), f.H(6)),
            f.seg(f.H(0), f.H(1)),
            f.seg(f.H(4), x),
            f"case7 {f.describe()}",
        )
        if segs:
            yield f.describe(), segs


_CH7_CASES = [
    (1, _ch7_case1),
    (2, _ch7_case2),
    (3, _ch7_case3),
    (4, _ch7_case4),
    (5, _ch7_case5),
    (6, _ch7_case6),
    (7, _ch7_case7),
]


def _dispatch_cases(ws: _Workspace, cases, strategy: str) -> Certificate:
    for case_no, gen in cases:
        for desc, segs in gen(ws):
            cert = ws.attempt(strategy, case_no, segs, desc)
            if cert is not None:
                return cert
    ws.note(f"{strategy}: no case produced a verified blocker set")
    return _fallback_certificate(ws)


def hull5_certificate(ps: PointSet, graph: DisjointnessGraph | None = None):
    ws = _Workspace.create(ps, graph)
    if ws.m != 5:
        raise ValueError("hull5_certificate needs hull size 5")
    return _dispatch_cases(ws, _CH5_CASES, STRATEGY_HULL5)


def hull6_certificate(ps: PointSet, graph: DisjointnessGraph | None = None):
    ws = _Workspace.create(ps, graph)
    if ws.m != 6:
        raise ValueError("hull6_certificate needs hull size 6")
    return _dispatch_cases(ws, _CH6_CASES, STRATEGY_HULL6)


def hull7_certificate(ps: PointSet, graph: DisjointnessGraph | None = None):
    ws = _Workspace.create(ps, graph)
    if ws.m != 7:
        raise ValueError("hull7_certificate needs hull size 7")
    return _dispatch_cases(ws, _CH7_CASES, STRATEGY_HULL7)


def hull89_certificate(ps: PointSet, graph: DisjointnessGraph | None = None):
    """Hull sizes 8 and 9: a good 2-set on two opposite hull edges."""
    ws = _Workspace.create(ps, graph)
    if ws.m not in (8, 9):
        raise ValueError("hull89_certificate needs hull size 8 or 9")
    f = ws.base_frame()
    segs = _try_good_2set(
        ws,
        f,
        f.seg(f.H(0), f.H(1)),
        f.seg(f.H(4), f.H(5)),
        f.seg(f.H(6), f.H(7)),
        f.seg(f.H(2), f.H(3)),
        "hull89",
    )
    if segs:
        cert = ws.attempt(STRATEGY_HULL89, None, segs, f.describe())
        if cert is not None:
            return cert
    return _fallback_certificate(ws)


def hull10plus_certificate(ps: PointSet, graph: DisjointnessGraph | None = None):
    """Hull size >= 10: five alternating hull edges, pairwise disjoint."""
    ws = _Workspace.create(ps, graph)
    if ws.m < 10:
        raise ValueError("hull10plus_certificate needs hull size >= 10")
    f = ws.base_frame()
    segs = [f.E(k) for k in (0, 2, 4, 6, 8)]
    cert = ws.attempt(STRATEGY_HULL10, None, segs, f.describe())
    if cert is not None:
        return cert
    return _fallback_certificate(ws)


# ---------------------------------------------------------------------------
# Fallback search and the public entry point


def fallback_search(
    g: DisjointnessGraph,
    max_size: int = 9,
    *,
    seed: int = 0,
    max_candidates: int = 1_000_000,
    time_budget_s: float = 30.0,
    diagnostics: tuple[str, ...] = (),
) -> Certificate | None:
    """Bounded search for a verified blocker set, structured candidates
    first (hull-edge subsets, clean-segment subsets, hull-vertex stars),
    then seeded random subsets.  Returns None when the budget runs out."""
    hull = convex_hull(g.pointset)
    m = hull.m
    edge_ids = [
        g.vertex(segment(hull.hull[k], hull.hull[(k + 1) % m])) for k in range(m)
    ]
    clean_ids = [v for v in range(g.n_vertices) if g.is_clean_vertex(v)]
    star_ids = {
        h: sorted(v for v, s in enumerate(g.vertices) if h in s) for h in hull.hull
    }
    rng = random.Random(seed)
    deadline = time.monotonic() + time_budget_s
    tried: set[int] = set()
    examined = 0

    def check(ids) -> Certificate | None:
        nonlocal examined
        mask = 0
        for v in ids:
            mask |= 1 << v
        if mask in tried:
            return None
        tried.add(mask)
        examined += 1
        u = VertexSet(g.n_vertices, g.full_mask & ~mask)
        ok, _ = is_mutual_visibility_set(g, u)
        if ok:
            blockers = tuple(sorted(g.segment_of(v) for v in ids))
            return Certificate(
                strategy=STRATEGY_FALLBACK,
                case=None,
                blockers=blockers,
                verified=True,
                mu_lower_bound=comb(g.n_points, 2) - len(blockers),
                diagnostics=diagnostics,
            )
        return None

    for size in range(1, max_size + 1):
        pools = [edge_ids, clean_ids]
        for pool in pools:
            for ids in itertools.combinations(pool, size):
                if examined >= max_candidates or time.monotonic() > deadline:
                    return None
                got = check(ids)
                if got:
                    return got
        for h in hull.hull:
            star = star_ids[h][:size]
            if len(star) == size:
                got = check(star)
                if got:
                    return got
        random_tries = min(20000, max_candidates - examined)
        for _ in range(random_tries):
            if time.monotonic() > deadline:
                return None
            got = check(tuple(rng.sample(range(g.n_vertices), size)))
            if got:
                return got
    return None


def _fallback_certificate(ws: _Workspace) -> Certificate:
    ws.note("falling back to bounded search")
    cert = fallback_search(ws.g, diagnostics=tuple(ws.diagnostics))
    if cert is None:
        raise ConstructionError(
            f"fallback search exhausted its budget; diagnostics: {ws.diagnostics}"
        )
    return cert


def certificate_from_blockers(
    ps: PointSet,
    blockers,
    strategy: str = STRATEGY_EXPLICIT,
    graph: DisjointnessGraph | None = None,
) -> Certificate:
    """Package and verify an externally chosen blocker set."""
    ws = _Workspace.create(ps, graph)
    cert = ws.attempt(strategy, None, list(blockers), "explicit")
    if cert is None:
        raise ConstructionError(f"blocker set failed verification: {ws.diagnostics}")
    return cert


def double_chain_blocker(p: int, q: int) -> list[SegmentId]:
    """Size-4 blocker for a double chain: the first upper-chain edge plus
    three disjoint lower-chain edges (indices as laid out by the generator)."""
    if p < 2 or q < 6:
        raise ValueError("double-chain blocker needs p >= 2 and q >= 6")
    return [segment(0, 1), segment(p, p + 1), segment(p + 2, p + 3), segment(p + 4, p + 5)]


def build_certificate(
    ps: PointSet, graph: DisjointnessGraph | None = None
) -> Certificate:
    """Verified blocker set of size <= 9 for any n >= 5 point set, chosen by
    hull size.  Establishes mu(D(P)) >= C(n,2) - 9 constructively."""
    if ps.n < 5:
        raise ValueError("certificates need n >= 5")
    g = graph if graph is not None else build_disjointness_graph(ps)
    m = convex_hull(ps).m
    if m == 3:
        return hull3_certificate(ps, g)
    if m == 4:
        return hull4_certificate(ps, g)
    if m == 5:
        return hull5_certificate(ps, g)
    if m == 6:
        return hull6_certificate(ps, g)
    if m == 7:
        return hull7_certificate(ps, g)
    if m in (8, 9):
        return hull89_certificate(ps, g)
    return hull10plus_certificate(ps, g)
