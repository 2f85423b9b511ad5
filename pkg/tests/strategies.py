"""Hypothesis strategies for exact weights and divisor classes."""
from fractions import Fraction

from hypothesis import strategies as st

from parabolic.core import DivisorClass, ParabolicWeight


@st.composite
def weight_rows(draw, r, n, den_max=10**4):
    rows = []
    for _ in range(n):
        den = draw(st.integers(r + 1, den_max))
        nums = draw(st.lists(st.integers(1, den - 1), min_size=r - 1, max_size=r - 1, unique=True))
        rows.append(tuple(Fraction(x, den) for x in sorted(nums, reverse=True)))
    return tuple(rows)


@st.composite
def weights(draw, r=None, n=None, r_range=(2, 5), n_range=(3, 9), den_max=10**4):
    r = draw(st.integers(*r_range)) if r is None else r
    n = draw(st.integers(*n_range)) if n is None else n
    return ParabolicWeight(r, draw(weight_rows(r, n, den_max)))


@st.composite
def interior_divisors(draw, r, n, level_max=40):
    level = draw(st.integers(r, level_max))
    lams = []
    for _ in range(n):
        parts = draw(st.lists(st.integers(1, level - 1), min_size=r - 1, max_size=r - 1, unique=True))
        lams.append(tuple(sorted(parts, reverse=True)))
    return DivisorClass(r, level, tuple(lams))
