"""Shared value types: exact rationals, parabolic weights, divisor classes, walls."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from numbers import Rational


class InvalidWeight(ValueError):
    pass


class FloatRejected(TypeError):
    pass


def rational(x) -> Fraction:
    """Parse an exact rational: int, Fraction or a "p/q" / "p" string.  Floats are refused."""
    if isinstance(x, bool):
        raise FloatRejected(f"not a rational: {x!r}")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        text = x.strip()
        if any(c in text for c in ".eE"):
            raise FloatRejected(f"decimal literal {x!r}; write it as p/q")
        return Fraction(text)
    raise FloatRejected(f"not an exact rational: {x!r}")


def fmt(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _strictly_decreasing(row) -> bool:
    return all(row[k] > row[k + 1] for k in range(len(row) - 1))


@dataclass(frozen=True)
class ParabolicWeight:
    """Normalized weight a_j^i, 1 <= i <= n, 1 <= j <= r-1 (a_r^i = 0 implicit).

    Interior weights satisfy 1 > a_1^i > ... > a_{r-1}^i > 0.  Pass
    ``interior=False`` for closure points used by boundary-tolerant code.
    """

    r: int
    rows: tuple
    interior: bool = True

    def __post_init__(self):
        rows = tuple(tuple(rational(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if self.r < 2:
            raise InvalidWeight("rank must be at least 2")
        for i, row in enumerate(rows):
            if len(row) != self.r - 1:
                raise InvalidWeight(f"point {i + 1}: expected {self.r - 1} entries, got {len(row)}")
            full = row + (Fraction(0),)
            if self.interior:
                if not (row[0] < 1 and _strictly_decreasing(full)):
                    raise InvalidWeight(f"point {i + 1}: {tuple(map(fmt, row))} is not strictly decreasing in (0, 1)")
            elif not (row[0] <= 1 and all(full[k] >= full[k + 1] for k in range(len(row)))):
                raise InvalidWeight(f"point {i + 1}: {tuple(map(fmt, row))} is outside the weight polytope")

    @property
    def n(self) -> int:
        return len(self.rows)

    def a(self, i: int, j: int) -> Fraction:
        """Entry a_j^i with 0-based point ``i`` and 1-based step ``j`` (a_r = 0)."""
        return self.rows[i][j - 1] if j < self.r else Fraction(0)

    def column_sum(self, j: int) -> Fraction:
        return sum((row[j - 1] for row in self.rows), Fraction(0))

    def total(self) -> Fraction:
        return sum((sum(row, Fraction(0)) for row in self.rows), Fraction(0))

    def subset_sum(self, i: int, J) -> Fraction:
        return sum((self.a(i, j) for j in J), Fraction(0))

    def scaled(self, c, interior=None) -> "ParabolicWeight":
        c = rational(c)
        return ParabolicWeight(self.r, tuple(tuple(c * x for x in row) for row in self.rows),
                               self.interior if interior is None else interior)

    def denominator(self) -> int:
        return lcm(*(x.denominator for row in self.rows for x in row)) if self.rows else 1

    def as_strings(self):
        return [[fmt(x) for x in row] for row in self.rows]


@dataclass(frozen=True)
class DivisorClass:
    """L^level (x) F_{lambda^1} (x) ... (x) F_{lambda^n}; each lambda^i has r-1 entries."""

    r: int
    level: int
    lambdas: tuple

    def __post_init__(self):
        lams = tuple(tuple(int(x) for x in lam) for lam in self.lambdas)
        object.__setattr__(self, "lambdas", lams)
        object.__setattr__(self, "level", int(self.level))
        for i, lam in enumerate(lams):
            if len(lam) != self.r - 1:
                raise ValueError(f"point {i + 1}: expected {self.r - 1} parts, got {len(lam)}")
            full = lam + (0,)
            if any(full[k] < full[k + 1] for k in range(self.r - 1)):
                raise ValueError(f"point {i + 1}: {lam} is not a normalized partition")

    @property
    def n(self) -> int:
        return len(self.lambdas)

    def part(self, i: int, j: int) -> int:
        return self.lambdas[i][j - 1] if j < self.r else 0

    def scaled(self, k: int) -> "DivisorClass":
        return DivisorClass(self.r, k * self.level, tuple(tuple(k * x for x in lam) for lam in self.lambdas))

    @classmethod
    def theta(cls, r: int, n: int) -> "DivisorClass":
        return cls(r, 1, ((0,) * (r - 1),) * n)


@dataclass(frozen=True, order=True)
class Wall:
    """Delta(s, d, J): r(d + sum_i sum_{j in J^i} a_j^i) = s|a|."""

    r: int
    s: int
    d: int
    J: tuple

    def __post_init__(self):
        J = tuple(tuple(sorted(int(j) for j in Ji)) for Ji in self.J)
        object.__setattr__(self, "J", J)
        if not 1 <= self.s <= self.r - 1:
            raise ValueError(f"need 1 <= s <= r-1, got s={self.s}")
        for Ji in J:
            if len(Ji) != self.s or len(set(Ji)) != self.s or Ji[0] < 1 or Ji[-1] > self.r:
                raise ValueError(f"{Ji} is not an {self.s}-subset of [{self.r}]")

    @property
    def n(self) -> int:
        return len(self.J)

    def complement(self) -> "Wall":
        full = range(1, self.r + 1)
        return Wall(self.r, self.r - self.s, -self.d, tuple(tuple(j for j in full if j not in Ji) for Ji in self.J))

    def canonical(self) -> "Wall":
        """Representative with d <= 0; for d = 0, s <= r - s then the smaller J."""
        other = self.complement()
        if self.d != other.d:
            return self if self.d < 0 else other
        return min(self, other, key=lambda w: (w.s, w.J))

    def is_canonical(self) -> bool:
        return self.canonical() == self

    def label(self) -> str:
        if len(set(self.J)) == 1:
            sub = f"{self.n}[{','.join(map(str, self.J[0]))}]"
        else:
            sub = ";".join("{" + ",".join(map(str, Ji)) + "}" for Ji in self.J)
        return f"Delta({self.s},{self.d},{sub})"

    def to_record(self) -> dict:
        return {"r": self.r, "s": self.s, "d": self.d, "J": [list(Ji) for Ji in self.J]}

    @classmethod
    def from_record(cls, rec) -> "Wall":
        return cls(int(rec["r"]), int(rec["s"]), int(rec["d"]), tuple(tuple(Ji) for Ji in rec["J"]))

    @classmethod
    def uniform(cls, r: int, n: int, s: int, d: int, J) -> "Wall":
        return cls(r, s, d, (tuple(J),) * n)
