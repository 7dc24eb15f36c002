import itertools
import random

import pytest

from segvis.geometry import gen_convex, gen_random_general_position, segment
from segvis.graph import build_disjointness_graph
from segvis.visibility import (
    ADJACENT,
    DIST2,
    DIST3,
    VertexSet,
    classify_pair,
    is_mutual_visibility_set,
    is_mutually_visible,
    verdict_json,
)

from oracles import oracle_is_mv_set, oracle_pair_visible


def test_vertex_set_basics():
    u = VertexSet.from_indices(10, [1, 4, 7])
    assert len(u) == 3
    assert 4 in u and 5 not in u
    assert u.indices() == (1, 4, 7)
    assert len(u.complement()) == 7
    with pytest.raises(ValueError):
        VertexSet.from_indices(4, [5])
    with pytest.raises(ValueError):
        VertexSet(4, 1 << 6)


def test_adjacent_pair_verdict(cacerola_graph):
    g = cacerola_graph
    a = 0
    b = next(v for v in range(g.n_vertices) if g.are_adjacent(0, v))
    u = VertexSet.from_indices(g.n_vertices, [a, b])
    v = is_mutually_visible(g, u, a, b)
    assert v.visible and v.condition == ADJACENT and v.witness_path is None
    assert verdict_json(v)["failing_pair"] is None


def test_pair_alone_always_visible(cacerola_graph):
    g = cacerola_graph
    a, b = 0, next(v for v in range(g.n_vertices) if not g.are_adjacent(0, v) and v != 0)
    u = VertexSet.from_indices(g.n_vertices, [a, b])
    assert is_mutually_visible(g, u, a, b).visible


def test_full_vertex_set_fails(cacerola_graph):
    ok, verdict = is_mutual_visibility_set(
        cacerola_graph, VertexSet.full(cacerola_graph.n_vertices)
    )
    assert not ok
    assert verdict is not None and not verdict.visible
    # failing pair reported in lexicographic order: no earlier pair fails
    for a, b in itertools.combinations(range(cacerola_graph.n_vertices), 2):
        if (a, b) == (verdict.a, verdict.b):
            break
        assert is_mutually_visible(
            cacerola_graph, VertexSet.full(cacerola_graph.n_vertices), a, b
        ).visible


def test_small_sets_vacuous(cacerola_graph):
    assert is_mutual_visibility_set(cacerola_graph, VertexSet(21, 0))[0]
    assert is_mutual_visibility_set(cacerola_graph, VertexSet.from_indices(21, [3]))[0]
    assert is_mutual_visibility_set(cacerola_graph, VertexSet.from_indices(21, [0, 20]))[0]


def test_membership_preconditions(cacerola_graph):
    u = VertexSet.from_indices(21, [0, 1])
    with pytest.raises(ValueError):
        is_mutually_visible(cacerola_graph, u, 0, 5)
    with pytest.raises(ValueError):
        classify_pair(cacerola_graph, u, 1, 5)


def test_witness_path_invariants(cacerola_graph):
    g = cacerola_graph
    rng = random.Random(5)
    for _ in range(200):
        ids = rng.sample(range(g.n_vertices), rng.randint(2, 8))
        u = VertexSet.from_indices(g.n_vertices, ids)
        for a, b in itertools.combinations(sorted(ids), 2):
            v = is_mutually_visible(g, u, a, b)
            if v.visible and v.condition != ADJACENT:
                assert v.witness_path is not None
                assert len(v.witness_path) - 1 == v.distance
                assert v.witness_path[0] == a and v.witness_path[-1] == b
                for inner in v.witness_path[1:-1]:
                    assert inner not in u
                for x, y in zip(v.witness_path, v.witness_path[1:]):
                    assert g.are_adjacent(x, y)
            elif v.visible:
                assert v.witness_path is None


def test_restricted_bfs_matches_naive_oracle(cacerola_graph):
    g = cacerola_graph
    rng = random.Random(11)
    for _ in range(120):
        ids = sorted(rng.sample(range(g.n_vertices), rng.randint(2, 9)))
        u = VertexSet.from_indices(g.n_vertices, ids)
        for a, b in itertools.combinations(ids, 2):
            assert is_mutually_visible(g, u, a, b).visible == oracle_pair_visible(
                g, ids, a, b
            )


def test_set_verdict_matches_naive_oracle():
    rng = random.Random(23)
    for seed in (1, 2):
        ps = gen_random_general_position(6, seed=seed, bound=2000)
        g = build_disjointness_graph(ps)
        for _ in range(60):
            ids = sorted(rng.sample(range(g.n_vertices), rng.randint(0, 7)))
            u = VertexSet.from_indices(g.n_vertices, ids)
            assert is_mutual_visibility_set(g, u)[0] == oracle_is_mv_set(g, ids)


def test_downward_closure(cacerola_graph):
    g = cacerola_graph
    rng = random.Random(7)
    checked = 0
    while checked < 40:
        ids = sorted(rng.sample(range(g.n_vertices), rng.randint(2, 6)))
        u = VertexSet.from_indices(g.n_vertices, ids)
        if not is_mutual_visibility_set(g, u)[0]:
            continue
        checked += 1
        sub = sorted(rng.sample(ids, rng.randint(0, len(ids))))
        assert is_mutual_visibility_set(
            g, VertexSet.from_indices(g.n_vertices, sub)
        )[0]


# -- blocked-pair classification -------------------------------------------------


def test_classify_disjoint_pair(cacerola_graph):
    g = cacerola_graph
    a = 0
    b = next(v for v in range(g.n_vertices) if g.are_adjacent(0, v))
    s = VertexSet.from_indices(g.n_vertices, [5])
    assert classify_pair(g, s, a, b) == ADJACENT


def test_classify_convex6_long_diagonal_case():
    # Hexagon blockers: edges plus the three long diagonals.  The remaining
    # short diagonals pairwise classify at distance 2 or 3.
    ps = gen_convex(6)
    from segvis.geometry import convex_hull

    g = build_disjointness_graph(ps)
    h = convex_hull(ps).hull
    edges = [segment(h[k], h[(k + 1) % 6]) for k in range(6)]
    longs = [segment(h[0], h[3]), segment(h[1], h[4]), segment(h[2], h[5])]
    s = VertexSet.from_indices(g.n_vertices, [g.vertex(t) for t in edges + longs])
    ok, _ = is_mutual_visibility_set(g, s.complement())
    assert ok
    for j in range(6):
        a = g.vertex(segment(h[j], h[(j + 2) % 6]))
        b = g.vertex(segment(h[j], h[(j + 4) % 6]))
        assert classify_pair(g, s, a, b) == DIST3
        # the stated witnesses form the required path
        g1 = g.vertex(segment(h[(j + 4) % 6], h[(j + 5) % 6]))
        g2 = g.vertex(segment(h[(j + 1) % 6], h[(j + 2) % 6]))
        assert g.are_adjacent(a, g1) and g.are_adjacent(g1, g2) and g.are_adjacent(g2, b)


def test_classify_alternating_edges_dist2():
    ps = gen_convex(10)
    from segvis.geometry import convex_hull

    g = build_disjointness_graph(ps)
    h = convex_hull(ps).hull
    blockers = [segment(h[k], h[(k + 1) % 10]) for k in (0, 2, 4, 6, 8)]
    s = VertexSet.from_indices(g.n_vertices, [g.vertex(t) for t in blockers])
    for a, b in itertools.combinations(range(g.n_vertices), 2):
        if a in s or b in s or g.are_adjacent(a, b):
            continue
        assert classify_pair(g, s, a, b) == DIST2


def test_classification_equivalence_with_verifier(cacerola_graph):
    g = cacerola_graph
    rng = random.Random(3)
    for _ in range(80):
        ids = sorted(rng.sample(range(g.n_vertices), rng.randint(0, 9)))
        s = VertexSet.from_indices(g.n_vertices, ids)
        u = s.complement()
        every_pair_classified = all(
            classify_pair(g, s, a, b) is not None
            for a, b in itertools.combinations(sorted(u.indices()), 2)
            if not g.are_adjacent(a, b)
        )
        assert every_pair_classified == is_mutual_visibility_set(g, u)[0]


def test_distance4_only_for_five_points():
    # convex five-point sets achieve diameter 4; larger sets never do
    g5 = build_disjointness_graph(gen_convex(5))
    far = [
        (a, b)
        for a in range(g5.n_vertices)
        for b in range(a + 1, g5.n_vertices)
        if g5.distance_matrix[a][b] == 4
    ]
    assert far
    a, b = far[0]
    others = [v for v in range(g5.n_vertices) if v not in (a, b)]
    s = VertexSet.from_indices(g5.n_vertices, others)
    assert classify_pair(g5, s, a, b) == "dist4"
    for n in (6, 7, 8):
        for seed in range(3):
            ps = gen_random_general_position(n, seed=seed, bound=3000)
            g = build_disjointness_graph(ps)
            assert all(
                g.distance_matrix[a][b] <= 3
                for a in range(g.n_vertices)
                for b in range(g.n_vertices)
            )
