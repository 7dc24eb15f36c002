import itertools

import pytest
from hypothesis import given, strategies as st

from segvis.geometry import (
    CoordinateError,
    GeneralPositionError,
    GenerationError,
    Orientation,
    Point,
    PointSet,
    all_segments,
    cacerola_points,
    convex_hull,
    crosses,
    gen_convex,
    gen_double_chain,
    gen_random_general_position,
    is_clean,
    is_general_position,
    load_pointset,
    orientation,
    rotation_neighbors,
    save_pointset,
    segment,
    segments_intersect,
)

from oracles import (
    float_rotation_neighbors,
    oracle_crosses,
    oracle_hull_cycle,
    oracle_is_clean,
    oracle_segments_intersect,
)

points_st = st.tuples(
    st.integers(min_value=-200, max_value=200),
    st.integers(min_value=-200, max_value=200),
).map(lambda t: Point(*t))


def distinct_triples():
    return st.tuples(points_st, points_st, points_st).filter(
        lambda t: len(set(t)) == 3
    )


# -- orientation -------------------------------------------------------------


def test_orientation_examples():
    assert orientation(Point(0, 0), Point(1, 0), Point(0, 1)) == Orientation.COUNTERCLOCKWISE
    assert orientation(Point(0, 0), Point(1, 1), Point(2, 2)) == Orientation.COLLINEAR
    # determinant of the first three reference points: 54*(-122) - (-8)*95 = -5828
    assert orientation(Point(121, 204), Point(175, 196), Point(216, 82)) == Orientation.CLOCKWISE


@given(distinct_triples())
def test_orientation_antisymmetric(t):
    p, q, r = t
    assert orientation(p, q, r) == -orientation(p, r, q)


# -- general position ---------------------------------------------------------


def test_general_position_examples():
    assert is_general_position(cacerola_points().points)
    assert not is_general_position([(0, 0), (1, 1), (2, 2), (0, 5)])
    assert is_general_position(gen_convex(10).points)


def test_pointset_rejects_bad_input():
    with pytest.raises(GeneralPositionError):
        PointSet.from_coords([(0, 0), (1, 1), (2, 2), (0, 5)])
    with pytest.raises(GeneralPositionError):
        PointSet.from_coords([(0, 0), (0, 0), (1, 3)])
    with pytest.raises(CoordinateError):
        PointSet.from_coords([(0, 0), (1, 2), (2 ** 31, 5)])
    with pytest.raises(CoordinateError):
        PointSet.from_coords([(0, 0), (1.5, 2), (3, 5)])


# -- intersection predicates ---------------------------------------------------


def test_intersection_examples():
    quad = PointSet.from_coords([(0, 0), (10, 0), (10, 10), (0, 10), (25, 17)])
    assert segments_intersect(quad, (0, 1), (0, 2))  # shared endpoint
    assert segments_intersect(quad, (0, 2), (1, 3))  # crossing diagonals
    assert not segments_intersect(quad, (0, 1), (2, 3))  # opposite edges
    assert crosses(quad, (0, 2), (1, 3))
    assert not crosses(quad, (0, 1), (0, 2))


def test_cacerola_cross_and_clean_frozen_values(cacerola):
    coords = [(p.x, p.y) for p in cacerola.points]
    # values fixed by the rational-arithmetic oracle
    assert oracle_crosses(coords, (0, 3), (1, 6)) is True
    assert crosses(cacerola, (0, 3), (1, 6)) is True
    assert oracle_is_clean(coords, (2, 6)) is False
    assert is_clean(cacerola, (2, 6)) is False


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_predicates_match_rational_oracle(seed):
    ps = gen_random_general_position(7, seed=seed, bound=500)
    coords = [(p.x, p.y) for p in ps.points]
    for a, b in itertools.combinations(all_segments(ps.n), 2):
        assert segments_intersect(ps, a, b) == oracle_segments_intersect(coords, a, b)
        assert crosses(ps, a, b) == oracle_crosses(coords, a, b)


@pytest.mark.parametrize("seed", range(4))
def test_predicate_properties(seed):
    ps = gen_random_general_position(6, seed=seed, bound=300)
    for a, b in itertools.combinations(all_segments(ps.n), 2):
        assert segments_intersect(ps, a, b) == segments_intersect(ps, b, a)
        if crosses(ps, a, b):
            assert segments_intersect(ps, a, b)
        if set(a) & set(b):
            assert segments_intersect(ps, a, b) and not crosses(ps, a, b)


def test_hull_edges_are_clean():
    for seed in range(3):
        ps = gen_random_general_position(8, seed=seed, bound=2000)
        h = convex_hull(ps)
        for k in range(h.m):
            assert is_clean(ps, segment(h.hull[k], h.hull[(k + 1) % h.m]))


def test_pentagon_diagonal_not_clean():
    ps = gen_convex(5)
    h = convex_hull(ps)
    diag = segment(h.hull[0], h.hull[2])
    assert not is_clean(ps, diag)


# -- convex hull ---------------------------------------------------------------


def test_hull_cacerola(cacerola):
    h = convex_hull(cacerola)
    assert h.hull == (0, 1, 2, 3, 4, 5)
    assert h.interior == (6,)


def test_hull_matches_supporting_line_oracle():
    for seed in (5, 6, 7):
        ps = gen_random_general_position(9, seed=seed, bound=4000)
        assert list(convex_hull(ps).hull) == oracle_hull_cycle(
            [(p.x, p.y) for p in ps.points]
        )


def test_hull_is_clockwise_and_partitions():
    ps = gen_random_general_position(10, seed=11, bound=4000)
    h = convex_hull(ps)
    for k in range(h.m):
        a, b, c = (ps[h.hull[k % h.m]], ps[h.hull[(k + 1) % h.m]], ps[h.hull[(k + 2) % h.m]])
        assert orientation(a, b, c) == Orientation.CLOCKWISE
    assert sorted(h.hull + h.interior) == list(range(ps.n))


def test_hull_invariant_under_relabelling():
    ps = gen_random_general_position(8, seed=21, bound=3000)
    perm = [3, 1, 7, 0, 6, 2, 5, 4]
    relabeled = PointSet.from_coords([(ps[i].x, ps[i].y) for i in perm])
    h1 = [tuple(ps[i]) for i in convex_hull(ps).hull]
    h2 = [tuple(relabeled[i]) for i in convex_hull(relabeled).hull]
    # same cyclic sequence of coordinates, up to the start rule
    k = h2.index(h1[0])
    assert h1 == h2[k:] + h2[:k]


def test_hull_double_chain_extremes():
    h = convex_hull(gen_double_chain(3, 6))
    assert h.m == 4  # two extreme points per chain


# -- rotation neighbours --------------------------------------------------------


def test_rotation_neighbors_two_candidates():
    # triangle hull with two interior points: the pair is decided by a
    # single orientation test
    ps = PointSet.from_coords([(0, 0), (100, 0), (50, 90), (40, 30), (60, 31)])
    h = convex_hull(ps)
    i = h.hull.index(0)
    vm, vp = rotation_neighbors(ps, h, i)
    assert {vm, vp} == {3, 4}
    assert vm != vp


def test_rotation_neighbors_cacerola_frozen(cacerola):
    h = convex_hull(cacerola)
    # values fixed by the float-angle sorting oracle
    assert rotation_neighbors(cacerola, h, 0) == (2, 4)
    assert rotation_neighbors(cacerola, h, 1) == (3, 5)


@pytest.mark.parametrize("seed", range(6))
def test_rotation_neighbors_match_angle_oracle(seed):
    ps = gen_random_general_position(8, seed=seed, bound=900)
    h = convex_hull(ps)
    coords = [(p.x, p.y) for p in ps.points]
    cyc = list(h.hull)
    for i in range(h.m):
        assert rotation_neighbors(ps, h, i) == float_rotation_neighbors(coords, cyc, i)


def test_rotation_neighbors_rejects_small_sets():
    ps = PointSet.from_coords([(0, 0), (10, 0), (5, 9), (5, 3)])
    with pytest.raises(ValueError):
        rotation_neighbors(ps, convex_hull(ps), 0)


# -- generators -----------------------------------------------------------------


def test_gen_convex():
    assert convex_hull(gen_convex(3)).m == 3
    assert convex_hull(gen_convex(5)).m == 5
    ps = gen_convex(10)
    assert convex_hull(ps).m == 10
    assert is_general_position(ps.points)
    with pytest.raises(ValueError):
        gen_convex(2)


def test_gen_double_chain_small():
    assert gen_double_chain(1, 1).n == 2
    ps = gen_double_chain(2, 2)
    assert ps.n == 4


def test_gen_double_chain_separation_explicit():
    ps = gen_double_chain(3, 6)
    upper, lower = range(0, 3), range(3, 9)
    for a in upper:
        for b1, b2 in itertools.combinations(lower, 2):
            assert orientation(ps[b1], ps[b2], ps[a]) == Orientation.COUNTERCLOCKWISE
    for b in lower:
        for a1, a2 in itertools.combinations(upper, 2):
            assert orientation(ps[a1], ps[a2], ps[b]) == Orientation.CLOCKWISE


@given(st.integers(min_value=1, max_value=5), st.integers(min_value=1, max_value=7))
def test_gen_double_chain_property(p, q):
    ps = gen_double_chain(p, q)  # generator re-verifies its own contract
    assert ps.n == p + q


def test_cacerola_points_fixed():
    ps = cacerola_points()
    assert tuple(ps[0]) == (121, 204)
    assert tuple(ps[6]) == (127, 135)
    assert ps.n == 7
    assert is_general_position(ps.points)


def test_gen_random_general_position():
    a = gen_random_general_position(5, seed=1, bound=1000)
    b = gen_random_general_position(5, seed=1, bound=1000)
    assert a == b  # determinism
    assert is_general_position(a.points)
    assert gen_random_general_position(3, seed=9, bound=10).n == 3
    with pytest.raises(ValueError):
        gen_random_general_position(5, seed=0, bound=3)
    with pytest.raises(GenerationError):
        gen_random_general_position(12, seed=0, bound=12, max_tries=5)


# -- files -----------------------------------------------------------------------


@pytest.mark.parametrize("suffix", [".json", ".csv"])
def test_pointset_roundtrip(tmp_path, suffix, cacerola):
    path = tmp_path / f"pts{suffix}"
    save_pointset(cacerola, path)
    assert load_pointset(path) == cacerola


def test_load_errors(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"nope": 1}')
    with pytest.raises(ValueError):
        load_pointset(p)
    c = tmp_path / "bad.csv"
    c.write_text("1,2\n3\n")
    with pytest.raises(ValueError, match="bad.csv:2"):
        load_pointset(c)
