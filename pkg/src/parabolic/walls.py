"""Walls Delta(s, d, J) in the weight polytope and their enumeration along 1-parameter families."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from functools import lru_cache
from math import lcm

from .core import InvalidWeight, ParabolicWeight, Wall, rational
from .schubert import SchubertIndex, schubert_dim
from .weights import nonempty_scaled

__all__ = [
    "Wall", "ScalingPath", "Crossing", "DegenerateBase", "DegenerateEndpoint", "NoWallFound",
    "FirstWallDiagnostic", "wall_residual", "complement", "scaling_walls", "first_wall",
    "segment_walls", "wall_is_realized", "walls_through",
]


class DegenerateBase(ValueError):
    pass


class DegenerateEndpoint(ValueError):
    pass


class NoWallFound(LookupError):
    pass


class FirstWallDiagnostic(AssertionError):
    """The first realized scaling wall is not one of the two predicted walls."""


def wall_residual(W: Wall, w: ParabolicWeight) -> Fraction:
    """r(d + sum sum_{j in J^i} a_j^i) - s|a|; positive on the Delta^+ side."""
    if (W.r, W.n) != (w.r, w.n):
        raise ValueError(f"wall for (r={W.r}, n={W.n}) vs weight for (r={w.r}, n={w.n})")
    X = sum((w.subset_sum(i, Ji) for i, Ji in enumerate(W.J)), Fraction(0))
    return W.r * (W.d + X) - W.s * w.total()


def complement(W: Wall) -> Wall:
    return W.complement()


def _formal(rows) -> ParabolicWeight:
    # bypass the a_1 <= 1 check; ScalingPath validates what it needs
    w = object.__new__(ParabolicWeight)
    object.__setattr__(w, "r", len(rows[0]) + 1)
    object.__setattr__(w, "rows", tuple(tuple(rational(x) for x in row) for row in rows))
    object.__setattr__(w, "interior", False)
    return w


@dataclass(frozen=True)
class ScalingPath:
    """a(c) = c * base for 0 < c <= c_max.

    The base may be formal (entries up to any size); a(c) must be interior for
    c < c_max, and a(c_max) may touch a_1 = 1.
    """

    base: ParabolicWeight
    c_max: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c_max", rational(self.c_max))
        if self.c_max <= 0:
            raise ValueError("c_max must be positive")
        for i, row in enumerate(self.base.rows):
            full = row + (Fraction(0),)
            if any(full[k] <= full[k + 1] for k in range(len(row))):
                raise InvalidWeight(f"point {i + 1}: base row must be strictly decreasing and positive")
            if self.c_max * row[0] > 1:
                raise InvalidWeight(f"point {i + 1}: a_1 exceeds 1 before c = {self.c_max}")

    def at(self, c) -> ParabolicWeight:
        c = rational(c)
        return self.base.scaled(c, interior=c < self.c_max or self.c_max * max(r[0] for r in self.base.rows) < 1)

    @classmethod
    def of(cls, rows, c_max) -> "ScalingPath":
        rows = tuple(tuple(rational(x) for x in row) for row in rows)
        return cls(_formal(rows), c_max)


@dataclass(frozen=True)
class Crossing:
    """A group of walls met at the same parameter; ``simple`` iff exactly one wall."""

    param: Fraction
    walls: tuple

    @property
    def simple(self) -> bool:
        return len(self.walls) == 1

    @property
    def wall(self) -> Wall:
        if not self.simple:
            raise ValueError(f"{len(self.walls)} walls meet at {self.param}; perturb the path")
        return self.walls[0]


def _group(hits) -> list:
    hits = sorted(hits, key=lambda h: (h[0], h[1].s, h[1].d, h[1].J))
    out: list = []
    for param, W in hits:
        if out and out[-1][0] == param:
            out[-1][1].append(W)
        else:
            out.append((param, [W]))
    return [Crossing(p, tuple(ws)) for p, ws in out]


def _subsets(r: int, s: int):
    return list(combinations(range(1, r + 1), s))


def _integer_rows(rows, r):
    L = lcm(*(x.denominator for row in rows for x in row)) if rows else 1
    return [tuple(int(x * L) for x in row) + (0,) for row in rows], L


def _search(values, lo_ok):
    """DFS over one subset choice per point; ``values[i]`` maps subset -> value.

    ``lo_ok(partial_sum, remaining_min, remaining_max)`` prunes partial choices.
    Yields (choice tuple, total).
    """
    n = len(values)
    mins = [0] * (n + 1)
    maxs = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        mins[i] = mins[i + 1] + min(values[i].values())
        maxs[i] = maxs[i + 1] + max(values[i].values())

    def rec(i, acc, chosen):
        if not lo_ok(acc, mins[i], maxs[i]):
            return
        if i == n:
            yield tuple(chosen), acc
            return
        for J, v in values[i].items():
            chosen.append(J)
            yield from rec(i + 1, acc + v, chosen)
            chosen.pop()

    yield from rec(0, 0, [])


def _equal_sum(values, target):
    """Choices with sum exactly ``target``, by meet in the middle over the two halves."""
    h = len(values) // 2
    left: dict = {}
    for combo in product(*(list(v.items()) for v in values[:h])):
        left.setdefault(sum(x for _, x in combo), []).append(tuple(J for J, _ in combo))
    for combo in product(*(list(v.items()) for v in values[h:])):
        rest = target - sum(x for _, x in combo)
        for head in left.get(rest, ()):
            yield head + tuple(J for J, _ in combo)


def _raw_scaling(path: ScalingPath, c_hi: Fraction, dmax=None):
    """All (c, Wall) with d < 0 and 0 < c <= c_hi, straight from the hyperplane equations."""
    base = path.base
    r, n = base.r, base.n
    ints, L = _integer_rows(base.rows, r)
    T = sum(sum(row) for row in ints)
    hits = []
    for s in range(1, r):
        subs = _subsets(r, s)
        values = [{J: sum(row[j - 1] for j in J) for J in subs} for row in ints]
        x_max = sum(max(v.values()) for v in values)
        d = 0
        while True:
            d -= 1
            if dmax is not None and -d > dmax:
                break
            # c = -d r L / (r X - s T) <= c_hi  <=>  r X - s T >= -d r L / c_hi
            need = Fraction(-d * r * L) / c_hi + s * T
            if r * x_max < need:
                break
            ok = lambda acc, lo, hi, need=need: r * (acc + hi) >= need
            for J, X in _search(values, ok):
                denom = r * X - s * T
                c = Fraction(-d * r * L, denom)
                if 0 < c <= c_hi:
                    hits.append((c, Wall(r, s, d, J)))
    return hits


def _wall_rows(W: Wall, w: ParabolicWeight):
    sub = [tuple(w.a(i, j) for j in Ji) for i, Ji in enumerate(W.J)]
    quot = [tuple(w.a(i, j) for j in range(1, W.r + 1) if j not in Ji) for i, Ji in enumerate(W.J)]
    return sub, quot


@lru_cache(maxsize=None)
def _cell_dim(r: int, J: tuple) -> int:
    return schubert_dim(SchubertIndex(r, J))


def ext_minus_formula(W: Wall) -> int:
    """-dr - s(r-s) + sum dim omega_{J^i}."""
    return -W.d * W.r - W.s * (W.r - W.s) + sum(_cell_dim(W.r, Ji) for Ji in W.J)


def _ext_admissible(W: Wall) -> bool:
    m = ext_minus_formula(W)
    p = (W.n - 2) * W.s * (W.r - W.s) - m
    return m >= 0 and p >= 0 and (m, p) != (0, 0)


def _factors_nonempty(W: Wall, ints, scale: int) -> bool:
    full = range(1, W.r + 1)
    sub = [tuple(row[j - 1] for j in Ji) for row, Ji in zip(ints, W.J)]
    quot = [tuple(row[j - 1] for j in full if j not in Ji) for row, Ji in zip(ints, W.J)]
    return nonempty_scaled(sub, scale, W.d) and nonempty_scaled(quot, scale, -W.d)


def wall_is_realized(W: Wall, w_on_wall: ParabolicWeight) -> bool:
    """Whether crossing W at ``w_on_wall`` changes the moduli space.

    The locus Y = M(s, d, b) x M(r-s, -d, c) must be nonempty, and at least one
    of the two exceptional loci must be nonempty.
    """
    if not _ext_admissible(W):
        return False
    ints, L = _integer_rows(w_on_wall.rows, W.r)
    return _factors_nonempty(W, ints, L)


def _realized_on_path(W: Wall, ints, L: int, c: Fraction) -> bool:
    if not _ext_admissible(W):
        return False
    scaled = [tuple(c.numerator * x for x in row) for row in ints]
    return _factors_nonempty(W, scaled, L * c.denominator)


def scaling_walls(path: ScalingPath, dmax: int | None = None, realized_only: bool = True) -> list:
    """Walls met by a(c) for 0 < c <= c_max, ascending in c, grouped by equal c.

    Walls Delta(s, 0, J) are never met by scaling.  With ``realized_only`` the
    hyperplanes along which nothing happens are dropped.
    """
    _check_general_base(path)
    hits = _raw_scaling(path, path.c_max, dmax)
    if realized_only:
        ints, L = _integer_rows(path.base.rows, path.base.r)
        hits = [(c, W) for c, W in hits if _realized_on_path(W, ints, L, c)]
    return _group(hits)


def _check_general_base(path: ScalingPath):
    base = path.base
    r = base.r
    # GIT walls through the base would hold for every c
    ints, _ = _integer_rows(base.rows, r)
    T = sum(sum(row) for row in ints)
    for s in range(1, r):
        if (s * T) % r:
            continue
        values = [{J: sum(row[j - 1] for j in J) for J in _subsets(r, s)} for row in ints]
        for J in _equal_sum(values, s * T // r):
            raise DegenerateBase(f"base lies on the GIT wall {Wall(r, s, 0, J).canonical().label()}")


def _first_hyperplane(path: ScalingPath):
    """Smallest c at which any d = -1 hyperplane is met; no wall comes earlier."""
    ints, L = _integer_rows(path.base.rows, path.base.r)
    r, T = path.base.r, sum(map(sum, ints))
    best = None
    for s in range(1, r):
        xmax = sum(max(sum(row[j - 1] for j in J) for J in _subsets(r, s)) for row in ints)
        if r * xmax > s * T:
            c = Fraction(r * L, r * xmax - s * T)
            best = c if best is None else min(best, c)
    return best


def _uniform_crossing(base: ParabolicWeight, s: int):
    W = Wall.uniform(base.r, base.n, s, -1, tuple(range(1, s + 1)))
    denom = base.r * sum((base.subset_sum(i, Ji) for i, Ji in enumerate(W.J)), Fraction(0)) - s * base.total()
    return Fraction(base.r) / denom if denom > 0 else None


def first_wall(path: ScalingPath, dmax: int | None = None) -> tuple:
    """The first realized wall along the scaling path, as (c, Wall)."""
    _check_general_base(path)
    cap = _first_hyperplane(path)
    if cap is None or cap > path.c_max:
        raise NoWallFound(f"no wall for c <= {path.c_max}")
    # the two uniform walls are the usual answer; start the search window there
    r, n = path.base.r, path.base.n
    guesses = [_uniform_crossing(path.base, s) for s in (1, r - 1)]
    cap = max([cap] + [c for c in guesses if c is not None and c <= path.c_max])
    while True:
        ints, L = _integer_rows(path.base.rows, path.base.r)
        for group in _group(_raw_scaling(path, cap, dmax)):
            real = [W for W in group.walls if _realized_on_path(W, ints, L, group.param)]
            if real:
                if len(real) > 1:
                    raise ValueError(f"{len(real)} walls meet at c = {group.param}; perturb the path")
                W = real[0]
                r, n = W.r, W.n
                expected = {Wall.uniform(r, n, 1, -1, (1,)), Wall.uniform(r, n, r - 1, -1, tuple(range(1, r)))}
                if W not in expected:
                    raise FirstWallDiagnostic(f"first wall {W.label()} at c = {group.param}")
                return group.param, W
        if cap >= path.c_max:
            raise NoWallFound(f"no realized wall for c <= {path.c_max}")
        cap = min(cap * Fraction(3, 2), path.c_max)


def segment_walls(w0: ParabolicWeight, w1: ParabolicWeight, dmax: int | None = None) -> list:
    """Hyperplanes crossed by (1 - t) w0 + t w1, t in [0, 1], with exact t, grouped."""
    if (w0.r, w0.n) != (w1.r, w1.n):
        raise ValueError("endpoints have different (r, n)")
    if w0 == w1:
        return []
    r, n = w0.r, w0.n
    L = lcm(w0.denominator(), w1.denominator())
    rows0 = [tuple(int(x * L) for x in row) + (0,) for row in w0.rows]
    rows1 = [tuple(int(x * L) for x in row) + (0,) for row in w1.rows]
    T0 = sum(map(sum, rows0))
    T1 = sum(map(sum, rows1))
    hits = []
    for s in range(1, r):
        subs = _subsets(r, s)
        values = [{J: (sum(a[j - 1] for j in J), sum(b[j - 1] for j in J)) for J in subs}
                  for a, b in zip(rows0, rows1)]
        v0 = [{J: v[0] for J, v in vi.items()} for vi in values]
        v1 = [{J: v[1] for J, v in vi.items()} for vi in values]
        xmax = max(sum(max(v.values()) for v in v0), sum(max(v.values()) for v in v1))
        dlow = -(xmax // L) - 1
        if dmax is not None:
            dlow = max(dlow, -dmax)
        for d in range(0, dlow - 1, -1):
            # residuals scaled by L: R = r(dL + X) - s T
            for J in _pair_search(v0, v1, r, s, d * L, T0, T1):
                R0 = r * (d * L + sum(v0[i][Ji] for i, Ji in enumerate(J))) - s * T0
                R1 = r * (d * L + sum(v1[i][Ji] for i, Ji in enumerate(J))) - s * T1
                W = Wall(r, s, d, J)
                if R0 == 0 or R1 == 0:
                    if W.is_canonical():
                        raise DegenerateEndpoint(f"endpoint lies on {W.label()}")
                    continue
                if (R0 < 0) == (R1 < 0) or not W.is_canonical():
                    continue
                hits.append((Fraction(R0, R0 - R1), W))
    return _group(hits)


def _pair_search(v0, v1, r, s, dL, T0, T1):
    n = len(v0)
    lo0 = [0] * (n + 1); hi0 = [0] * (n + 1); lo1 = [0] * (n + 1); hi1 = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        lo0[i] = lo0[i + 1] + min(v0[i].values()); hi0[i] = hi0[i + 1] + max(v0[i].values())
        lo1[i] = lo1[i + 1] + min(v1[i].values()); hi1[i] = hi1[i + 1] + max(v1[i].values())

    def rec(i, a0, a1, chosen):
        R0lo, R0hi = r * (dL + a0 + lo0[i]) - s * T0, r * (dL + a0 + hi0[i]) - s * T0
        R1lo, R1hi = r * (dL + a1 + lo1[i]) - s * T1, r * (dL + a1 + hi1[i]) - s * T1
        if not ((R0lo <= 0 <= R1hi) or (R1lo <= 0 <= R0hi)):
            return
        if i == n:
            yield tuple(chosen)
            return
        for J in v0[i]:
            chosen.append(J)
            yield from rec(i + 1, a0 + v0[i][J], a1 + v1[i][J], chosen)
            chosen.pop()

    yield from rec(0, 0, 0, [])


def walls_through(w: ParabolicWeight, include_git: bool = True) -> list:
    """Canonical walls whose hyperplane contains ``w``."""
    r = w.r
    ints, L = _integer_rows(w.rows, r)
    T = sum(map(sum, ints))
    out = []
    for s in range(1, r):
        values = [{J: sum(row[j - 1] for j in J) for J in _subsets(r, s)} for row in ints]
        xmax = sum(max(v.values()) for v in values)
        for d in range(0, -(xmax // L) - 2, -1):
            if d == 0 and not include_git:
                continue
            target = s * T - r * d * L  # need r X = target
            if target % r:
                continue
            for J in _equal_sum(values, target // r):
                W = Wall(r, s, d, J)
                if W.is_canonical():
                    out.append(W)
    return sorted(out, key=lambda W: (W.s, W.d, W.J))
