from fractions import Fraction as F
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from parabolic.cone import perturbed_weight
from parabolic.core import ParabolicWeight, Wall
from parabolic.crossing import (NonSimpleWall, NotOnWall, NSmall, PreconditionError, SplittingType,
                                _report, classify, ext1_dimension, factor_dimension,
                                generic_splitting, hom_dimension, is_blowdown_pattern,
                                is_boundary_pattern, is_dominant, no_blowdown_certificate,
                                no_blowdown_threshold)
from parabolic.weights import moduli_dimension

from oracles import balanced, ext_from_splittings


def sym(r, n, *row):
    return ParabolicWeight(r, (tuple(F(x) for x in row),) * n)


U = Wall.uniform


def test_generic_splitting():
    assert generic_splitting(2, -3).degrees == (-1, -2)
    assert generic_splitting(3, 4, "quot").degrees == (2, 1, 1)
    assert generic_splitting(2, 0).balanced
    assert not SplittingType((0, -2)).balanced
    with pytest.raises(ValueError):
        generic_splitting(2, 1, "sub")
    with pytest.raises(ValueError):
        SplittingType((1, -1), "sub")


@given(st.integers(1, 6), st.integers(-12, 0))
def test_splitting_matches_oracle(s, d):
    assert list(generic_splitting(s, d).degrees) == balanced(s, d)


def test_hom_examples():
    assert hom_dimension(generic_splitting(2, -3), generic_splitting(1, 3, "quot"), 5) == 17
    assert hom_dimension(generic_splitting(1, -1), generic_splitting(1, 1, "quot"), 5) == 6
    assert hom_dimension(generic_splitting(1, 0), generic_splitting(1, 0, "quot"), 3) == 2
    with pytest.raises(NSmall):
        hom_dimension(SplittingType((0,)), SplittingType((0,), "quot"), 0)


@given(st.integers(2, 6), st.data(), st.integers(3, 10))
def test_hom_closed_form(r, data, n):
    s = data.draw(st.integers(1, r - 1))
    d = data.draw(st.integers(-3 * n, 0))
    sub, quot = generic_splitting(s, d), generic_splitting(r - s, -d, "quot")
    assert hom_dimension(sub, quot, n) == -d * r + (n - 1) * s * (r - s)


@pytest.mark.parametrize("r,n", [(2, 5), (3, 7), (4, 9), (5, 11)])
def test_first_walls_have_one_dim_ext(r, n):
    assert ext1_dimension(U(r, n, 1, -1, (1,))) == 1
    assert ext1_dimension(U(r, n, r - 1, -1, tuple(range(1, r)))) == 1


@given(st.integers(2, 5), st.integers(3, 8), st.data())
@settings(max_examples=80, deadline=None)
def test_ext_against_splitting_oracle(r, n, data):
    s = data.draw(st.integers(1, r - 1))
    d = data.draw(st.integers(-n, 0))
    subsets = list(combinations(range(1, r + 1), s))
    J = tuple(data.draw(st.sampled_from(subsets)) for _ in range(n))
    W = Wall(r, s, d, J)
    sub, quot = balanced(s, d), balanced(r - s, -d)
    assert ext1_dimension(W) == ext_from_splittings(sub, quot, n, r, s, J)
    # the plus side is the complement wall read with its own (reversed) splittings
    C = W.complement()
    plus = ext_from_splittings(balanced(r - s, -d), balanced(s, d), n, r, r - s, C.J)
    minus = ext1_dimension(W)
    total = moduli_dimension(r, n) - factor_dimension(s, n) - factor_dimension(r - s, n) + 1
    assert minus + plus == total == (n - 2) * s * (r - s)
    if minus >= 0 and plus >= 0:
        rep = _report(W)
        assert (rep.ext_minus, rep.ext_plus) == (minus, plus)
    else:
        with pytest.raises(PreconditionError):
            _report(W)


def test_ext_requires_nonpositive_degree():
    with pytest.raises(PreconditionError):
        ext1_dimension(U(2, 5, 1, 1, (2,)))


def test_classify_first_wall_rank2():
    rep = classify(U(2, 5, 1, -1, (1,)), sym(2, 5, "2/5"))
    assert rep.kind == "blow-up"
    assert (rep.dim_M, rep.dim_Y, rep.dim_Y_minus, rep.dim_Y_plus) == (2, 0, 0, 1)
    assert (rep.ext_minus, rep.ext_plus) == (1, 2)


def test_classify_boundary():
    rep = classify(U(2, 5, 1, -2, (1,)), sym(2, 5, "4/5"))
    assert rep.kind == "boundary" and rep.empty_side == "plus"
    assert rep.ext_plus == 0
    assert is_boundary_pattern(rep.wall)


def test_classify_errors():
    with pytest.raises(NotOnWall):
        classify(U(2, 5, 1, -1, (1,)), sym(2, 5, "1/2"))
    W = Wall(2, 1, -1, ((1,),) * 4 + ((2,),))
    with pytest.raises(NonSimpleWall):
        classify(W, sym(2, 5, "2/3"))
    rep = classify(W, sym(2, 5, "2/3"), check_simple=False)
    assert rep.kind == "blow-down" and is_blowdown_pattern(W)
    with pytest.raises(ValueError):
        classify(W, sym(2, 5, "2/3"), n=6)


def test_swapped_is_involution():
    rep = classify(U(2, 5, 1, -1, (1,)), sym(2, 5, "2/5"))
    back = rep.swapped()
    assert back.kind == "blow-down" and back.wall == rep.wall.complement()
    assert (back.ext_minus, back.ext_plus) == (rep.ext_plus, rep.ext_minus)
    assert back.swapped() == rep


@given(st.integers(2, 5), st.integers(3, 8), st.data())
@settings(max_examples=60, deadline=None)
def test_patterns_match_ext(r, n, data):
    s = data.draw(st.integers(1, r - 1))
    d = data.draw(st.integers(-n, -1))
    subsets = list(combinations(range(1, r + 1), s))
    W = Wall(r, s, d, tuple(data.draw(st.sampled_from(subsets)) for _ in range(n)))
    ep = (n - 2) * s * (r - s) - ext1_dimension(W)
    assert is_blowdown_pattern(W) == (ep == 1)
    assert is_boundary_pattern(W) == (ep == 0)


def test_no_blowdown_threshold():
    for r in range(2, 8):
        for s in range(1, r):
            t = no_blowdown_threshold(r, s)
            assert no_blowdown_certificate(r, t, s, -1)
            assert not no_blowdown_certificate(r, t - 1, s, -1)
    with pytest.raises(ValueError):
        no_blowdown_certificate(3, 7, 1, 0)


def test_dominance_rank2():
    res = is_dominant(perturbed_weight(2, 5))
    assert res.dominant and (res.rho_start, res.rho_final) == (5, 6)
    assert res.blowups == 1 and res.blowdowns == 0
    below = is_dominant(sym(2, 5, "3/10"))
    assert not below and below.trace == ()


def test_dominance_symmetric_is_not_simple():
    with pytest.raises(NonSimpleWall):
        is_dominant(sym(2, 5, "7/10"))


def test_dominance_precondition():
    with pytest.raises(PreconditionError):
        is_dominant(sym(2, 4, "3/10"))


def test_dominance_rank3():
    res = is_dominant(perturbed_weight(3, 7))
    assert res.dominant and res.rho_final == 15 and res.blowdowns == 0
