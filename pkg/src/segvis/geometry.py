"""Exact planar primitives for integer point sets in general position.

All predicates are sign computations of integer cross products; nothing in
this module touches floating point.  Coordinates are capped at ingestion so
the 2x2 determinants of coordinate differences stay within 128-bit signed
range (Python ints do not overflow, but the bound keeps the data portable
and is part of the input contract).
"""

from __future__ import annotations

import csv
import json
import random
from dataclasses import dataclass
from enum import IntEnum
from functools import cmp_to_key
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

MAX_COORD = 1 << 30

#: Canonical segment identifier: pair of point indices with i < j.
SegmentId = tuple[int, int]


class GeneralPositionError(ValueError):
    """Raised when a point collection has a collinear triple or duplicates."""


class CoordinateError(ValueError):
    """Raised for non-integer or out-of-bound coordinates."""


class GenerationError(RuntimeError):
    """Raised when a point-set generator cannot satisfy its contract."""


class Orientation(IntEnum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


class Point(NamedTuple):
    x: int
    y: int


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def cross(o: Point, a: Point, b: Point) -> int:
    """Twice the signed area of triangle o, a, b (positive = ccw turn)."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """Exact turn direction of the ordered triple p, q, r."""
    return Orientation(_sign(cross(p, q, r)))


def is_general_position(points: Sequence[Point]) -> bool:
    """True iff the points are pairwise distinct with no collinear triple."""
    pts = [Point(p[0], p[1]) for p in points]
    if len(set(pts)) != len(pts):
        return False
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if cross(pts[i], pts[j], pts[k]) == 0:
                    return False
    return True


def _validate_coord(v) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise CoordinateError(f"coordinate {v!r} is not an integer")
    if abs(v) > MAX_COORD:
        raise CoordinateError(f"|{v}| exceeds the coordinate bound 2^30")
    return v


@dataclass(frozen=True)
class PointSet:
    """Immutable point configuration, validated to be in general position."""

    points: tuple[Point, ...]

    def __post_init__(self):
        pts = tuple(
            Point(_validate_coord(p[0]), _validate_coord(p[1])) for p in self.points
        )
        object.__setattr__(self, "points", pts)
        if len(set(pts)) != len(pts):
            raise GeneralPositionError("duplicate points")
        bad = _find_collinear_triple(pts)
        if bad is not None:
            raise GeneralPositionError(f"collinear triple at indices {bad}")

    @classmethod
    def from_coords(cls, coords: Iterable[Sequence[int]]) -> "PointSet":
        return cls(tuple(Point(c[0], c[1]) for c in coords))

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def coords(self) -> list[list[int]]:
        return [[p.x, p.y] for p in self.points]


def _find_collinear_triple(pts: Sequence[Point]):
    n = len(pts)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if cross(pts[i], pts[j], pts[k]) == 0:
                    return (i, j, k)
    return None


def segment(i: int, j: int) -> SegmentId:
    """Canonical (sorted) segment id for a pair of distinct point indices."""
    if i == j:
        raise ValueError("segment endpoints must be distinct")
    return (i, j) if i < j else (j, i)


def all_segments(n: int) -> list[SegmentId]:
    """All C(n,2) segment ids in lexicographic order."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def segments_intersect(ps: PointSet, a: SegmentId, b: SegmentId) -> bool:
    """Do the closed segments share at least one point?

    Under general position this is either a shared endpoint or a proper
    crossing; touching configurations would need a collinear triple.
    """
    if a == b:
        raise ValueError("segments_intersect expects distinct segments")
    if set(a) & set(b):
        return True
    return _proper_cross(ps, a, b)


def crosses(ps: PointSet, a: SegmentId, b: SegmentId) -> bool:
    """Do the segments meet at a point interior to both?

    Shared endpoints do not count.
    """
    if a == b:
        raise ValueError("crosses expects distinct segments")
    if set(a) & set(b):
        return False
    return _proper_cross(ps, a, b)


def _proper_cross(ps: PointSet, a: SegmentId, b: SegmentId) -> bool:
    p1, p2 = ps[a[0]], ps[a[1]]
    q1, q2 = ps[b[0]], ps[b[1]]
    d1 = _sign(cross(p1, p2, q1))
    d2 = _sign(cross(p1, p2, q2))
    if d1 == d2:
        return False
    d3 = _sign(cross(q1, q2, p1))
    d4 = _sign(cross(q1, q2, p2))
    return d3 != d4


def is_clean(ps: PointSet, a: SegmentId) -> bool:
    """True iff no other segment spanned by the point set crosses a."""
    n = ps.n
    ai, aj = a
    for i in range(n):
        if i in (ai, aj):
            continue
        for j in range(i + 1, n):
            if j in (ai, aj):
                continue
            if _proper_cross(ps, a, (i, j)):
                return False
    return True


@dataclass(frozen=True)
class HullData:
    """Convex hull of a point set: indices in clockwise cyclic order.

    The cycle starts at the smallest hull index so the representation is
    unique.  ``interior`` lists the non-hull indices in ascending order.
    """

    hull: tuple[int, ...]
    interior: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.hull)


def _hull_indices_clockwise(pts: Sequence[Point]) -> list[int]:
    # Monotone chain; general position means no collinear hull decisions.
    order = sorted(range(len(pts)), key=lambda i: pts[i])
    if len(order) < 3:
        raise ValueError("hull needs at least 3 points")

    def build(seq):
        chain: list[int] = []
        for i in seq:
            while len(chain) > 1 and cross(pts[chain[-2]], pts[chain[-1]], pts[i]) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = build(order)
    upper = build(reversed(order))
    ccw = lower[:-1] + upper[:-1]
    cw = [ccw[0]] + list(reversed(ccw[1:]))
    start = cw.index(min(cw))
    return cw[start:] + cw[:start]


def convex_hull(ps: PointSet) -> HullData:
    """Hull indices clockwise (starting at the lowest index on the hull)."""
    hull = _hull_indices_clockwise(ps.points)
    on_hull = set(hull)
    interior = tuple(i for i in range(ps.n) if i not in on_hull)
    return HullData(hull=tuple(hull), interior=interior)


def _clockwise_sweep_key(origin: Point, ref: Point, pts: Sequence[Point]):
    """Comparator key ordering candidate indices by the clockwise angle of
    (pts[c] - origin) measured from the direction (ref - origin).

    All candidates must lie strictly on the right of the directed reference
    line; callers assert this (it holds for hull-vertex sweeps).
    """
    dx, dy = ref[0] - origin[0], ref[1] - origin[1]

    def cmp(c1: int, c2: int) -> int:
        # c1 is met first iff c2 sits further clockwise, i.e. cross(u, w) < 0
        u = (pts[c1][0] - origin[0], pts[c1][1] - origin[1])
        w = (pts[c2][0] - origin[0], pts[c2][1] - origin[1])
        s = _sign(u[0] * w[1] - u[1] * w[0])
        if s == 0:
            raise GeneralPositionError("angular tie during clockwise sweep")
        return s

    def check(c: int) -> None:
        u = (pts[c][0] - origin[0], pts[c][1] - origin[1])
        if _sign(dx * u[1] - dy * u[0]) >= 0:
            raise GeneralPositionError(
                "sweep candidate not strictly right of the reference direction"
            )

    return cmp, check


def rotation_neighbors(ps: PointSet, hull: HullData, i: int) -> tuple[int, int]:
    """First and last point met when the line through hull vertex i and its
    successor rotates clockwise about vertex i.

    Candidates are every point except the vertex itself and its two hull
    neighbours; with n >= 5 the pair is well defined and distinct.
    """
    m = hull.m
    if ps.n < 5:
        raise ValueError("rotation neighbors need n >= 5")
    v_i = hull.hull[i % m]
    v_next = hull.hull[(i + 1) % m]
    v_prev = hull.hull[(i - 1) % m]
    excluded = {v_i, v_next, v_prev}
    candidates = [c for c in range(ps.n) if c not in excluded]
    cmp, check = _clockwise_sweep_key(ps[v_i], ps[v_next], ps.points)
    for c in candidates:
        check(c)
    ordered = sorted(candidates, key=cmp_to_key(cmp))
    return ordered[0], ordered[-1]


def first_on_rotating_line(
    pts: Sequence[Point], center: int, toward: int, candidates: Sequence[int]
) -> int:
    """First candidate hit by the full line through ``center`` and ``toward``
    as it rotates clockwise about ``center``.

    A rotating line sweeps both of its rays, so candidates are compared by
    clockwise angle modulo a half turn.
    """
    o = pts[center]
    dx, dy = pts[toward][0] - o[0], pts[toward][1] - o[1]

    def folded(c: int) -> tuple[int, int]:
        ux, uy = pts[c][0] - o[0], pts[c][1] - o[1]
        side = _sign(dx * uy - dy * ux)
        if side == 0:
            raise GeneralPositionError("candidate collinear with rotating line")
        return (ux, uy) if side < 0 else (-ux, -uy)

    def cmp(c1: int, c2: int) -> int:
        u, w = folded(c1), folded(c2)
        s = _sign(u[0] * w[1] - u[1] * w[0])
        if s == 0:
            raise GeneralPositionError("angular tie on rotating line")
        return s

    return min(candidates, key=cmp_to_key(cmp))


def strictly_inside_convex(poly: Sequence[Point], p: Point) -> bool:
    """Strict membership of p in a convex polygon given in clockwise order."""
    k = len(poly)
    for t in range(k):
        if _sign(cross(poly[t], poly[(t + 1) % k], p)) != -1:
            return False
    return True


# ---------------------------------------------------------------------------
# Generators


def gen_convex(n: int) -> PointSet:
    """n integer points in strictly convex (hence general) position.

    Points are taken on the parabola y = x^2, which contains no three
    collinear points; both properties are re-verified and a failure is a
    construction bug, not an input error.
    """
    if n < 3:
        raise ValueError("gen_convex needs n >= 3")
    ps = PointSet.from_coords([(k, k * k) for k in range(n)])
    if convex_hull(ps).m != n:
        raise GenerationError("convex generator produced a non-convex set")
    return ps


def gen_double_chain(p: int, q: int) -> PointSet:
    """Two convex chains, each strictly on one side of every line spanned by
    the other chain.

    Indices 0..p-1 are the upper chain left to right, p..p+q-1 the lower
    chain left to right.  The defining separation property is verified
    exhaustively after generation.
    """
    if p < 1 or q < 1:
        raise ValueError("gen_double_chain needs p, q >= 1")
    xs_a = [2 * k - (p - 1) for k in range(p)]
    xs_b = [2 * k - (q - 1) for k in range(q)]
    span = max(abs(x) for x in xs_a + xs_b)
    margin = span * span + 1
    upper = [(x, x * x + margin) for x in xs_a]
    lower = [(x, -(x * x) - margin) for x in xs_b]
    ps = PointSet.from_coords(upper + lower)
    _check_double_chain(ps, p, q)
    return ps


def _check_double_chain(ps: PointSet, p: int, q: int) -> None:
    upper = list(range(p))
    lower = list(range(p, p + q))
    for chain, other, want in ((upper, lower, 1), (lower, upper, -1)):
        for a in chain:
            for i, b1 in enumerate(other):
                for b2 in other[i + 1 :]:
                    side = _sign(cross(ps[b1], ps[b2], ps[a]))
                    # b1 is left of b2, so "above the line b1->b2" is ccw.
                    if side != want:
                        raise GenerationError(
                            f"double-chain separation fails for point {a} "
                            f"against line {b1}-{b2}"
                        )
    for chain in (upper, lower):
        if len(chain) >= 3:
            for i in range(len(chain) - 2):
                a, b, c = chain[i : i + 3]
                if cross(ps[a], ps[b], ps[c]) == 0:
                    raise GenerationError("chain not strictly convex")


def cacerola_points() -> PointSet:
    """The fixed seven-point configuration used by the golden suite."""
    return PointSet.from_coords(
        [
            (121, 204),
            (175, 196),
            (216, 82),
            (189, 51),
            (44, 96),
            (36, 140),
            (127, 135),
        ]
    )


def gen_random_general_position(
    n: int, seed: int, bound: int, max_tries: int = 20000
) -> PointSet:
    """Rejection-sample n distinct integer points in [0, bound]^2 with no
    collinear triple.  Deterministic for a given (n, seed, bound)."""
    if n < 3:
        raise ValueError("need n >= 3")
    if bound < n:
        raise ValueError("bound must be at least n")
    rng = random.Random(seed)
    pts: list[Point] = []
    tries = 0
    while len(pts) < n:
        tries += 1
        if tries > max_tries:
            raise GenerationError(
                f"could not place {n} points in general position after {max_tries} tries"
            )
        cand = Point(rng.randint(0, bound), rng.randint(0, bound))
        if cand in pts:
            continue
        ok = True
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if cross(pts[i], pts[j], cand) == 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            pts.append(cand)
    return PointSet(tuple(pts))


# ---------------------------------------------------------------------------
# Point-set files: JSON {"points": [[x, y], ...]} and CSV "x,y" per line.
# Both round-trip bit-exactly.


def load_pointset(path: str | Path) -> PointSet:
    path = Path(path)
    if path.suffix.lower() == ".csv":
        rows = []
        with open(path, newline="") as fh:
            for lineno, row in enumerate(csv.reader(fh), start=1):
                if not row or (len(row) == 1 and not row[0].strip()):
                    continue
                if len(row) != 2:
                    raise ValueError(f"{path}:{lineno}: expected 'x,y'")
                try:
                    rows.append((int(row[0]), int(row[1])))
                except ValueError as exc:
                    raise ValueError(f"{path}:{lineno}: {exc}") from exc
        return PointSet.from_coords(rows)
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "points" not in data:
        raise ValueError(f"{path}: expected an object with a 'points' array")
    return PointSet.from_coords(data["points"])


def save_pointset(ps: PointSet, path: str | Path) -> None:
    path = Path(path)
    if path.suffix.lower() == ".csv":
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            for pt in ps.points:
                writer.writerow([pt.x, pt.y])
        return
    with open(path, "w") as fh:
        json.dump({"points": ps.coords()}, fh)
        fh.write("\n")
