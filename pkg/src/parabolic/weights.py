"""Parabolic weights: normalization, slopes, smallness, the Pauly dictionary, effectiveness."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .core import DivisorClass, InvalidWeight, ParabolicWeight, Wall, rational
from .quantum import gw_one_multisets
from .schubert import partition_to_subset

__all__ = [
    "ParabolicWeight", "DivisorClass", "DifferenceData", "InvalidWeight", "BoundaryDivisor",
    "normalize", "slope_total", "slope_sub", "difference_data", "is_small", "is_small_equivalent",
    "pauly_divisor", "pauly_weight", "is_effective", "Effectivity", "moduli_dimension",
    "is_nonempty", "nonempty_scaled", "hecke_rows",
]


class BoundaryDivisor(ValueError):
    """The divisor class sits on a facet lambda_1 = level (or an ordering facet)."""


def normalize(raw_rows) -> ParabolicWeight:
    """Subtract a_r^i from every entry of row i; rows carry all r entries."""
    rows = [tuple(rational(x) for x in row) for row in raw_rows]
    if not rows:
        raise InvalidWeight("no parabolic points")
    r = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != r:
            raise InvalidWeight("rows of unequal length")
        if any(row[k] <= row[k + 1] for k in range(r - 1)):
            raise InvalidWeight(f"point {i + 1}: row is not strictly decreasing")
    return ParabolicWeight(r, tuple(tuple(x - row[-1] for x in row[:-1]) for row in rows))


def slope_total(w: ParabolicWeight, deg: int = 0) -> Fraction:
    return (deg + w.total()) / w.r


def slope_sub(w: ParabolicWeight, s: int, d: int, J) -> Fraction:
    return (d + sum((w.subset_sum(i, Ji) for i, Ji in enumerate(J)), Fraction(0))) / s


@dataclass(frozen=True)
class DifferenceData:
    r: int
    rows: tuple  # d_j^i = a_j^i - a_{j+1}^i, j = 1..r-1

    def column_sum(self, j: int) -> Fraction:
        return sum((row[j - 1] for row in self.rows), Fraction(0))

    def total(self) -> Fraction:
        return sum((self.column_sum(j) for j in range(1, self.r)), Fraction(0))

    def reconstruct(self) -> ParabolicWeight:
        rows = []
        for row in self.rows:
            acc, out = Fraction(0), []
            for x in reversed(row):
                acc += x
                out.append(acc)
            rows.append(tuple(reversed(out)))
        return ParabolicWeight(self.r, tuple(rows), interior=False)


def difference_data(w: ParabolicWeight) -> DifferenceData:
    return DifferenceData(w.r, tuple(tuple(w.a(i, j) - w.a(i, j + 1) for j in range(1, w.r))
                                     for i in range(w.n)))


def is_small(w: ParabolicWeight) -> bool:
    """Sum_{j<=s} j(r-s)|d|_j + sum_{j>s} s(r-j)|d|_j <= r for every 1 <= s <= r-1."""
    dd = difference_data(w)
    r = w.r
    cols = [dd.column_sum(j) for j in range(1, r)]
    for s in range(1, r):
        lhs = sum(j * (r - s) * cols[j - 1] for j in range(1, s + 1))
        lhs += sum(s * (r - j) * cols[j - 1] for j in range(s + 1, r))
        if lhs > r:
            return False
    return True


def is_small_equivalent(w: ParabolicWeight) -> bool:
    """The same test written as r * sum_{j<=s} |a|_j - s|a| <= r."""
    r, total = w.r, w.total()
    acc = Fraction(0)
    for s in range(1, r):
        acc += w.column_sum(s)
        if r * acc - s * total > r:
            return False
    return True


def pauly_divisor(w: ParabolicWeight) -> DivisorClass:
    level = w.denominator()
    return DivisorClass(w.r, level, tuple(tuple(int(level * x) for x in row) for row in w.rows))


def pauly_weight(D: DivisorClass) -> ParabolicWeight:
    if D.level <= 0:
        raise BoundaryDivisor(f"level {D.level} is not positive")
    for i, lam in enumerate(D.lambdas):
        if lam[0] >= D.level:
            raise BoundaryDivisor(f"point {i + 1}: lambda_1 = {lam[0]} >= level {D.level}")
        full = lam + (0,)
        if any(full[k] == full[k + 1] for k in range(D.r - 1)):
            raise BoundaryDivisor(f"point {i + 1}: {lam} has a repeated step (partial-flag facet)")
    return ParabolicWeight(D.r, tuple(tuple(Fraction(x, D.level) for x in lam) for lam in D.lambdas))


def moduli_dimension(r: int, n: int) -> int:
    return n * r * (r - 1) // 2 - r * r + 1


# --- effectiveness -----------------------------------------------------------

@lru_cache(maxsize=None)
def gw_certificate_types(s: int, r: int, n: int) -> tuple:
    """Multisets of s-subsets (as sorted tuples) whose classes have GW invariant one.

    Returns tuples ``(degree, subsets)``; the corresponding wall degree is ``-degree``.
    """
    out = []
    for deg, classes in gw_one_multisets(s, r, n):
        out.append((deg, tuple(partition_to_subset(p, s, r).J for p in classes)))
    return tuple(out)


def _best_assignment(values, kinds):
    """Maximize sum_i values[i][kind_i] over assignments using each kind its multiplicity.

    ``values[i]`` maps kind -> int; ``kinds`` maps kind -> multiplicity.
    Returns (best, assignment tuple).
    """
    order = sorted(kinds)
    if len(order) == 2:
        # two kinds: put the first kind where it gains most over the second
        a, b = order
        gains = sorted(((v[a] - v[b], i) for i, v in enumerate(values)), reverse=True)
        chosen = {i for _, i in gains[:kinds[a]]}
        picks = tuple(a if i in chosen else b for i in range(len(values)))
        return sum(v[k] for v, k in zip(values, picks)), picks
    start = tuple(kinds[k] for k in order)
    layer = {start: (0, ())}
    for vals in values:
        nxt: dict = {}
        for state, (score, picks) in layer.items():
            for t, left in enumerate(state):
                if not left:
                    continue
                new_state = state[:t] + (left - 1,) + state[t + 1:]
                cand = score + vals[order[t]]
                best = nxt.get(new_state)
                if best is None or cand > best[0]:
                    nxt[new_state] = (cand, picks + (order[t],))
        layer = nxt
    (score, picks), = layer.values()
    return score, picks


def _first_violation(rows, scale: int, m: int, dmax=None, strict=False):
    """Scan the GW inequalities for a rank-m, degree-0 weight given by full rows.

    ``rows`` are integer rows of length m, equal to the weights times ``scale``.  Returns
    ``(violation, bounded)`` where violation is ``(s, d, J)`` or None.
    """
    n = len(rows)
    total = sum(sum(row) for row in rows)
    bounded = False
    for s in range(1, m):
        for deg, subsets in gw_certificate_types(s, m, n):
            if dmax is not None and deg > dmax:
                bounded = True
                continue
            rhs = s * total
            kinds: dict = {}
            for J in subsets:
                kinds[J] = kinds.get(J, 0) + 1
            values = [{J: sum(row[j - 1] for j in J) for J in kinds} for row in rows]
            ceiling = sum(max(v.values()) for v in values)
            if m * (-deg * scale + ceiling) < rhs:
                continue
            best, picks = _best_assignment(values, kinds)
            lhs = m * (-deg * scale + best)
            if lhs > rhs or (strict and lhs == rhs):
                return (s, -deg, picks), bounded
    return None, bounded


def _violates(rows, scale: int, m: int, s: int, deg: int, subsets, total: int) -> bool:
    kinds: dict = {}
    for J in subsets:
        kinds[J] = kinds.get(J, 0) + 1
    values = [{J: sum(row[j - 1] for j in J) for J in kinds} for row in rows]
    if m * (-deg * scale + sum(max(v.values()) for v in values)) <= s * total:
        return False
    best, _ = _best_assignment(values, kinds)
    return m * (-deg * scale + best) > s * total


# last violated certificate per (m, n); only reorders a yes/no search
_recent: dict = {}


def _has_violation(rows, scale: int, m: int) -> bool:
    n = len(rows)
    total = sum(map(sum, rows))
    hint = _recent.get((m, n))
    if hint is not None and _violates(rows, scale, m, *hint, total):
        return True
    for s in range(1, m):
        for deg, subsets in gw_certificate_types(s, m, n):
            if _violates(rows, scale, m, s, deg, subsets, total):
                _recent[(m, n)] = (s, deg, subsets)
                return True
    return False


def _integer_rows(rows):
    L = lcm(*(x.denominator for row in rows for x in row)) if rows else 1
    return [tuple(int(x * L) for x in row) for row in rows], L


def _violation(rows, m, dmax=None, strict=False):
    ints, L = _integer_rows(rows)
    return _first_violation(ints, L, m, dmax, strict)


@dataclass(frozen=True)
class Effectivity:
    effective: bool
    certificate: Wall | None = None
    bounded_search: bool = False
    notes: tuple = field(default_factory=tuple)

    def __bool__(self):
        return self.effective


def is_effective(w: ParabolicWeight, dmax: int | None = None, strict: bool = False) -> Effectivity:
    """Check every GW-one inequality slope_sub <= slope_total (strict with ``strict=True``).

    Degrees are bounded by the dimension constraint; ``dmax`` only narrows the
    search and marks the result as a bounded search.
    """
    rows = [tuple(w.a(i, j) for j in range(1, w.r + 1)) for i in range(w.n)]
    violation, bounded = _violation(rows, w.r, dmax, strict)
    if violation is None:
        return Effectivity(True, None, bounded)
    s, d, J = violation
    return Effectivity(False, Wall(w.r, s, d, J), bounded)


def hecke_rows(rows, point: int):
    """Elementary modification at ``point``: M(m, e, a) = M(m, e - 1, a').

    Rows are normalized full rows (a_1, ..., a_m = 0).  The row at ``point``
    becomes (1 - a_{m-1}, a_1 - a_{m-1}, ..., a_{m-2} - a_{m-1}, 0).
    """
    rows = [tuple(row) for row in rows]
    row = rows[point]
    m = len(row)
    last = row[m - 2]
    rows[point] = (1 - last,) + tuple(x - last for x in row[:m - 2]) + (Fraction(0),)
    return rows


def is_nonempty(rows, degree: int) -> bool:
    """Whether the closed-condition moduli M_p(m, degree, rows) has semistable points.

    ``rows`` are full weight rows of length m (not necessarily normalized).
    Any degree is reduced to degree zero by twisting and elementary modifications.
    """
    rows = [tuple(rational(x) for x in row) for row in rows]
    ints, L = _integer_rows(rows)
    return nonempty_scaled(ints, L, degree)


def nonempty_scaled(rows, scale: int, degree: int) -> bool:
    """``is_nonempty`` on integer rows equal to the weights times ``scale``."""
    m = len(rows[0])
    if m == 1:
        return True
    rows = [tuple(x - row[-1] for x in row) for row in rows]
    for step in range(degree % m):
        i = step % len(rows)
        row = rows[i]
        last = row[m - 2]
        rows[i] = (scale - last,) + tuple(x - last for x in row[:m - 2]) + (0,)
    return not _has_violation(rows, scale, m)
