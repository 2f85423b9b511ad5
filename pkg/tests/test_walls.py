import random
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings, strategies as st

from parabolic.core import ParabolicWeight, Wall
from parabolic.walls import (DegenerateBase, DegenerateEndpoint, NoWallFound, ScalingPath,
                             first_wall, scaling_walls, segment_walls, wall_is_realized,
                             wall_residual, walls_through)

from oracles import brute_walls
from strategies import weights


def sym(r, n, *row):
    return ParabolicWeight(r, (tuple(F(x) for x in row),) * n)


def U(r, n, s, d, J):
    return Wall.uniform(r, n, s, d, J)


def test_residual_examples():
    W = U(2, 5, 1, -1, (1,))
    assert wall_residual(W, sym(2, 5, "2/5")) == 0
    assert wall_residual(W, sym(2, 5, "1/2")) > 0
    assert wall_residual(W, sym(2, 5, "1/5")) < 0
    assert wall_residual(U(3, 4, 1, 0, (3,)), sym(3, 4, "1/2", "1/4")) == -3


@given(weights(r_range=(2, 4), n_range=(3, 6), den_max=50), st.data())
@settings(max_examples=80, deadline=None)
def test_complement_flips_residual(w, data):
    r, n = w.r, w.n
    s = data.draw(st.integers(1, r - 1))
    J = tuple(tuple(sorted(data.draw(st.permutations(range(1, r + 1)))[:s])) for _ in range(n))
    W = Wall(r, s, data.draw(st.integers(-n, n)), J)
    assert wall_residual(W.complement(), w) == -wall_residual(W, w)
    assert W.complement().complement() == W
    assert W.canonical().d <= 0
    assert Wall.from_record(W.to_record()) == W


def test_scaling_rank2_five_points():
    groups = scaling_walls(ScalingPath.of([("1",)] * 5, 1))
    assert [g.param for g in groups] == [F(2, 5), F(2, 3), F(4, 5)]
    assert groups[0].simple and groups[0].wall == U(2, 5, 1, -1, (1,))
    assert len(groups[1].walls) == 5 and not groups[1].simple
    assert all(W.d == -1 and sorted(W.J).count((1,)) == 4 for W in groups[1].walls)
    assert groups[2].wall == U(2, 5, 1, -2, (1,))
    with pytest.raises(ValueError):
        groups[1].wall


def test_scaling_windows():
    one = scaling_walls(ScalingPath.of([("1",)] * 5, F(1, 2)))
    assert len(one) == 1 and one[0].param == F(2, 5)
    assert scaling_walls(ScalingPath.of([("1",)] * 5, F(3, 10))) == []
    # here every hyperplane met is realized; in rank 3 some are not
    raw = scaling_walls(ScalingPath.of([("1",)] * 5, 1), realized_only=False)
    assert sum(len(g.walls) for g in raw) == 7
    base = [("9/10", "2/7"), ("5/6", "1/3"), ("4/5", "1/9"), ("7/8", "3/5"), ("2/3", "1/2"), ("6/7", "1/11")]
    path = ScalingPath.of(base, 1)
    raw = {(g.param, W) for g in scaling_walls(path, realized_only=False) for W in g.walls}
    real = {(g.param, W) for g in scaling_walls(path) for W in g.walls}
    assert real < raw


@given(weights(r_range=(2, 3), n_range=(4, 6), den_max=10**4))
@settings(max_examples=25, deadline=None)
def test_scaling_never_meets_git_walls(w):
    try:
        groups = scaling_walls(ScalingPath(w, 1), realized_only=False)
    except DegenerateBase:
        assume(False)
    assert all(W.d < 0 for g in groups for W in g.walls)
    params = [g.param for g in groups]
    assert params == sorted(params) and len(set(params)) == len(params)
    for g in groups:
        for W in g.walls:
            assert wall_residual(W, w.scaled(g.param, interior=False)) == 0


def test_degenerate_base():
    with pytest.raises(DegenerateBase):
        scaling_walls(ScalingPath(sym(2, 4, "1/2"), 1))


def test_segment_example():
    hits = segment_walls(sym(2, 5, "1/5"), sym(2, 5, "7/10"))
    assert [g.param for g in hits] == [F(2, 5), F(14, 15)]
    assert hits[0].wall == U(2, 5, 1, -1, (1,))
    assert len(hits[1].walls) == 5
    assert segment_walls(sym(2, 5, "1/5"), sym(2, 5, "1/5")) == []


def test_segment_degenerate_endpoint():
    with pytest.raises(DegenerateEndpoint):
        segment_walls(sym(2, 5, "2/5"), sym(2, 5, "7/10"))


def _random_weight(rng, r, n):
    rows = []
    for _ in range(n):
        den = 10**4 + rng.randrange(1, 1000)
        nums = sorted(rng.sample(range(1, den), r - 1), reverse=True)
        rows.append(tuple(F(x, den) for x in nums))
    return ParabolicWeight(r, tuple(rows))


@pytest.mark.parametrize("r,n", [(2, 3), (2, 4), (2, 5), (2, 6), (3, 3), (3, 4)])
def test_segment_against_brute_force(r, n):
    rng = random.Random(100 * r + n)
    for _ in range(4):
        w0, w1 = _random_weight(rng, r, n), _random_weight(rng, r, n)
        flat = [(g.param, W) for g in segment_walls(w0, w1) for W in g.walls]
        assert flat == brute_walls(w0, w1)


@given(weights(r_range=(2, 3), n_range=(4, 6), den_max=10**4), st.data())
@settings(max_examples=20, deadline=None)
def test_segment_residual_changes_sign(w0, data):
    w1 = w0.scaled(data.draw(st.fractions(F(1, 10), F(9, 10))))
    try:
        groups = segment_walls(w0, w1)
    except DegenerateEndpoint:
        assume(False)
    for g in groups:
        t = g.param
        mid = ParabolicWeight(w0.r, tuple(tuple((1 - t) * a + t * b for a, b in zip(r0, r1))
                                          for r0, r1 in zip(w0.rows, w1.rows)), interior=False)
        for W in g.walls:
            assert wall_residual(W, mid) == 0
            assert (wall_residual(W, w0) < 0) != (wall_residual(W, w1) < 0)


def test_scaling_matches_segment():
    base = ParabolicWeight(3, ((F(9, 10), F(2, 7)), (F(5, 6), F(1, 3)), (F(4, 5), F(1, 9)),
                               (F(7, 8), F(3, 5)), (F(2, 3), F(1, 2)), (F(6, 7), F(1, 11))))
    lo, hi = F(1, 100), F(1)
    path = ScalingPath(base, hi)
    scaled = scaling_walls(path, realized_only=False)
    seg = segment_walls(base.scaled(lo), base.scaled(hi, interior=False))
    to_c = [(lo + g.param * (hi - lo), g.walls) for g in seg]
    assert [(g.param, g.walls) for g in scaled if g.param > lo] == to_c


def test_first_wall_rank2():
    c, W = first_wall(ScalingPath.of([("1",)] * 5, 1))
    assert (c, W) == (F(2, 5), U(2, 5, 1, -1, (1,)))


def test_first_wall_rank3():
    base = ParabolicWeight(3, ((F(2, 3) + F(1, 1000 + i), F(1, 3) - F(1, 2000 + i)) for i in range(7)))
    c, W = first_wall(ScalingPath(base, 1))
    assert W in (U(3, 7, 1, -1, (1,)), U(3, 7, 2, -1, (1, 2)))
    assert wall_residual(W, base.scaled(c)) == 0
    assert wall_is_realized(W, base.scaled(c))


def test_no_wall_found():
    with pytest.raises(NoWallFound):
        first_wall(ScalingPath.of([("1",)] * 5, F(3, 10)))


def test_walls_through():
    ws = walls_through(sym(2, 5, "2/5"))
    assert U(2, 5, 1, -1, (1,)) in ws
    assert all(W.is_canonical() and wall_residual(W, sym(2, 5, "2/5")) == 0 for W in ws)
    git = walls_through(sym(2, 4, "1/2"))
    assert any(W.d == 0 for W in git)
    assert all(W.d < 0 for W in walls_through(sym(2, 4, "1/2"), include_git=False))


def test_realized_filter():
    w = sym(2, 5, "2/3")
    real = [W for W in walls_through(w) if wall_is_realized(W, w)]
    assert len(real) == 5
    # at 4/5 the only wall is the boundary one
    w = sym(2, 5, "4/5")
    assert [W for W in walls_through(w) if wall_is_realized(W, w)] == [U(2, 5, 1, -2, (1,))]
