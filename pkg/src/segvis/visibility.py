"""Mutual-visibility verification on disjointness graphs.

A set U of vertices is a mutual-visibility set when every pair in U is
joined by some shortest path whose internal vertices all avoid U.  The
verifier runs a breadth-first search restricted to (V \\ U) + {a, b} and
compares against the unrestricted distance; a pair is visible exactly when
the two distances agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import INFINITY, DisjointnessGraph

ADJACENT = "adjacent"
DIST2 = "dist2"
DIST3 = "dist3"
DIST4 = "dist4"

_CONDITION_BY_DISTANCE = {1: ADJACENT, 2: DIST2, 3: DIST3, 4: DIST4}


@dataclass(frozen=True)
class VertexSet:
    """Bitset over the vertices of a bound graph."""

    n_vertices: int
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n_vertices:
            raise ValueError("bit set outside the vertex range")

    @classmethod
    def from_indices(cls, n_vertices: int, ids: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in ids:
            if not 0 <= v < n_vertices:
                raise ValueError(f"vertex {v} out of range")
            mask |= 1 << v
        return cls(n_vertices, mask)

    @classmethod
    def full(cls, n_vertices: int) -> "VertexSet":
        return cls(n_vertices, (1 << n_vertices) - 1)

    def indices(self) -> tuple[int, ...]:
        out = []
        m = self.mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            out.append(v)
        return tuple(out)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n_vertices, ((1 << self.n_vertices) - 1) & ~self.mask)

    def __contains__(self, v: int) -> bool:
        return bool(self.mask >> v & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()


@dataclass(frozen=True)
class PairVerdict:
    a: int
    b: int
    visible: bool
    distance: float  # hop count; math.inf when unreachable
    witness_path: Optional[tuple[int, ...]]
    condition: Optional[str]


def verdict_json(v: PairVerdict) -> dict:
    return {
        "visible": v.visible,
        "distance": None if v.distance == INFINITY else int(v.distance),
        "witness": list(v.witness_path) if v.witness_path is not None else None,
        "failing_pair": None if v.visible else [v.a, v.b],
    }


def _restricted_path(g: DisjointnessGraph, allowed: int, a: int, b: int, limit: float):
    """Shortest a-b path inside ``allowed`` with length <= limit, or None."""
    parent = {a: -1}
    frontier = 1 << a
    seen = frontier
    depth = 0
    while frontier and depth < limit:
        depth += 1
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            reach = g.adj[v] & allowed & ~seen & ~nxt
            r = reach
            while r:
                w = (r & -r).bit_length() - 1
                r &= r - 1
                parent[w] = v
            nxt |= reach
        seen |= nxt
        if nxt >> b & 1:
            path = [b]
            while path[-1] != a:
                path.append(parent[path[-1]])
            path.reverse()
            return tuple(path)
        frontier = nxt
    return None


def is_mutually_visible(
    g: DisjointnessGraph, u: VertexSet, a: int, b: int
) -> PairVerdict:
    """Verdict for one pair of U: is there a shortest a-b path internally
    avoiding U?  Internal vertices of a returned witness always lie outside U.
    """
    if a not in u or b not in u:
        raise ValueError("both endpoints must belong to the tested set")
    if a == b:
        raise ValueError("pair endpoints must be distinct")
    dist = g.distance_matrix[a][b]
    if g.are_adjacent(a, b):
        return PairVerdict(a, b, True, 1, None, ADJACENT)
    if dist == INFINITY:
        return PairVerdict(a, b, False, INFINITY, None, None)
    allowed = (g.full_mask & ~u.mask) | (1 << a) | (1 << b)
    path = _restricted_path(g, allowed, a, b, dist)
    if path is None:
        return PairVerdict(a, b, False, dist, None, None)
    return PairVerdict(
        a, b, True, dist, path, _CONDITION_BY_DISTANCE.get(int(dist))
    )


def is_mutual_visibility_set(
    g: DisjointnessGraph, u: VertexSet
) -> tuple[bool, Optional[PairVerdict]]:
    """Check every unordered pair of U; on failure return the first failing
    pair in lexicographic (a, b) order.  Empty and singleton sets pass."""
    ids = u.indices()
    for x, a in enumerate(ids):
        for b in ids[x + 1 :]:
            verdict = is_mutually_visible(g, u, a, b)
            if not verdict.visible:
                return False, verdict
    return True, None


def classify_pair(
    g: DisjointnessGraph, s: VertexSet, a: int, b: int
) -> Optional[str]:
    """Which blocked-pair condition do a and b satisfy with internal vertices
    drawn from s?

    Disjoint pairs classify as "adjacent".  For intersecting pairs the tag
    matches the graph distance when a witness path inside s exists, else
    None.  Distance 4 only ever occurs on five-point configurations.
    """
    if a in s or b in s:
        raise ValueError("pair endpoints must lie outside the blocker set")
    if a == b:
        raise ValueError("pair endpoints must be distinct")
    if g.are_adjacent(a, b):
        return ADJACENT
    dist = g.distance_matrix[a][b]
    if dist == 2:
        if g.adj[a] & g.adj[b] & s.mask:
            return DIST2
        return None
    if dist == 3:
        xs = g.adj[a] & s.mask
        ys = g.adj[b] & s.mask
        m = xs
        while m:
            f1 = (m & -m).bit_length() - 1
            m &= m - 1
            if g.adj[f1] & ys:
                return DIST3
        return None
    if dist == 4:
        # Path a-f1-f2-f3-b inside s; the extra non-adjacency constraints on
        # a shortest such path are implied, but check them anyway.
        xs = g.adj[a] & s.mask
        m1 = xs
        while m1:
            f1 = (m1 & -m1).bit_length() - 1
            m1 &= m1 - 1
            if g.are_adjacent(f1, b):
                continue
            m2 = g.adj[f1] & s.mask
            while m2:
                f2 = (m2 & -m2).bit_length() - 1
                m2 &= m2 - 1
                if g.are_adjacent(f2, a) or g.are_adjacent(f2, b):
                    continue
                m3 = g.adj[f2] & g.adj[b] & s.mask
                while m3:
                    f3 = (m3 & -m3).bit_length() - 1
                    m3 &= m3 - 1
                    if not g.are_adjacent(f3, a) and not g.are_adjacent(f1, f3):
                        return DIST4
        return None
    return None
