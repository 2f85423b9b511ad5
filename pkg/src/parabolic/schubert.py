"""Classical Schubert calculus on the Grassmannian Gr(s, r).

Partitions are plain tuples of nonnegative integers, weakly decreasing.
A partition is *boxed* for Gr(s, r) when it has at most ``s`` parts, each at
most ``r - s``; boxed partitions are padded with zeros to exactly ``s`` parts.

Codimension convention: the subset J = {J_1 < ... < J_s} of [r] corresponds
to the partition with parts ``r - s + k - J_k``.  Its Schubert cell has
dimension ``sum(J_k - k)`` and the class has codimension ``|lambda|``, so the
two always add up to ``s * (r - s)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterator

Partition = tuple


class IncompatibleGrassmannians(ValueError):
    """Raised when classes living on different Grassmannians are combined."""


def partition(parts) -> Partition:
    """Strip trailing zeros and validate weak decrease."""
    p = tuple(int(x) for x in parts)
    if any(x < 0 for x in p):
        raise ValueError(f"negative part in {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{p} is not weakly decreasing")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def boxed(parts, s: int, r: int) -> Partition:
    """Return ``parts`` padded to ``s`` entries, checking it fits the box."""
    p = partition(parts)
    if len(p) > s or (p and p[0] > r - s):
        raise ValueError(f"{p} does not fit the {s}x{r - s} box")
    return p + (0,) * (s - len(p))


def in_box(p: Partition, s: int, r: int) -> bool:
    p = partition(p)
    return len(p) <= s and (not p or p[0] <= r - s)


def size(p: Partition) -> int:
    return sum(p)


def box_partitions(s: int, r: int) -> list:
    """All boxed partitions for Gr(s, r), ordered by codimension then lex."""
    out = [subset_to_partition(SchubertIndex(r, J)) for J in combinations(range(1, r + 1), s)]
    return sorted(out, key=lambda p: (sum(p), p))


def partitions_of(total: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of ``total`` with optional bounds on part size and length."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions_of(total - first, first, None if max_len is None else max_len - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class SchubertIndex:
    """A size-s subset J of [r], stored as a strictly increasing tuple."""

    r: int
    J: tuple

    def __post_init__(self):
        J = tuple(int(j) for j in self.J)
        object.__setattr__(self, "J", J)
        if not 1 <= len(J) <= self.r - 1:
            raise ValueError(f"need 1 <= |J| <= r-1, got |J|={len(J)}, r={self.r}")
        if any(J[k] >= J[k + 1] for k in range(len(J) - 1)):
            raise ValueError(f"J={J} is not strictly increasing")
        if J[0] < 1 or J[-1] > self.r:
            raise ValueError(f"J={J} is not inside [1, {self.r}]")

    @property
    def s(self) -> int:
        return len(self.J)

    def complement(self) -> "SchubertIndex":
        return SchubertIndex(self.r, tuple(j for j in range(1, self.r + 1) if j not in self.J))


def schubert_dim(J: SchubertIndex) -> int:
    return sum(j - k for k, j in enumerate(J.J, start=1))


def subset_to_partition(J: SchubertIndex) -> Partition:
    r, s = J.r, J.s
    return tuple(r - s + k - j for k, j in enumerate(J.J, start=1))


def partition_to_subset(p: Partition, s: int, r: int) -> SchubertIndex:
    p = boxed(p, s, r)
    return SchubertIndex(r, tuple(r - s + k - p[k - 1] for k in range(1, s + 1)))


def poincare_dual(p: Partition, s: int, r: int) -> Partition:
    p = boxed(p, s, r)
    return tuple((r - s) - p[s - k] for k in range(1, s + 1))


def transpose(p: Partition) -> Partition:
    p = partition(p)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > i) for i in range(p[0]))


def contains(outer: Partition, inner: Partition) -> bool:
    outer, inner = partition(outer), partition(inner)
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    # Fill nu/lam in reverse reading order (rows top to bottom, each right to
    # left); the word read so far must stay a lattice word.
    cells = [(row, col) for row in range(len(nu))
             for col in range(nu[row] - 1, (lam[row] if row < len(lam) else 0) - 1, -1)]
    filling: dict = {}
    counts = [0] * (len(mu) + 1)

    def lam_at(row):
        return lam[row] if row < len(lam) else 0

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        row, col = cells[idx]
        hi = len(mu)
        right = filling.get((row, col + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        if row > 0 and col >= lam_at(row - 1):
            lo = filling[(row - 1, col)] + 1
        # an entry v in row `row` of an LR tableau satisfies v <= row + 1
        hi = min(hi, row + 1)
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(row, col)] = v
            total += place(idx + 1)
            del filling[(row, col)]
            counts[v] -= 1
        return total

    return place(0)


def lr_coefficient(lam, mu, nu) -> int:
    """Littlewood-Richardson coefficient c^nu_{lam, mu} by tableau enumeration.

    Counts semistandard fillings of the skew shape nu/lam with content mu whose
    reverse reading word is a lattice word.  Returns 0 on any weight mismatch
    or when lam is not contained in nu.
    """
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) + sum(mu) != sum(nu) or not contains(nu, lam) or not contains(nu, mu):
        return 0
    return _lr(lam, mu, nu)


@lru_cache(maxsize=None)
def lr_expand(lam: Partition, mu: Partition, max_rows: int | None = None) -> dict:
    """All nonzero c^nu_{lam,mu} with nu having at most ``max_rows`` rows.

    Candidates nu contain both lam and mu and have nu_1 <= lam_1 + mu_1.
    """
    lam, mu = partition(lam), partition(mu)
    total = sum(lam) + sum(mu)
    width = (lam[0] if lam else 0) + (mu[0] if mu else 0)
    rows = len(lam) + len(mu)
    if max_rows is not None:
        rows = min(rows, max_rows)
    out = {}
    for nu in partitions_of(total, width, rows):
        if contains(nu, lam) and contains(nu, mu):
            c = _lr(lam, mu, nu)
            if c:
                out[nu] = c
    return out


@dataclass(frozen=True)
class CohomologyClass:
    """An integer combination of Schubert classes in H*(Gr(s, r))."""

    s: int
    r: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for p, c in self.terms.items():
            if c:
                key = boxed(p, self.s, self.r)
                clean[key] = clean.get(key, 0) + int(c)
        object.__setattr__(self, "terms", {p: c for p, c in clean.items() if c})

    @classmethod
    def schubert(cls, p, s: int, r: int) -> "CohomologyClass":
        return cls(s, r, {boxed(p, s, r): 1})

    @classmethod
    def unit(cls, s: int, r: int) -> "CohomologyClass":
        return cls.schubert((), s, r)

    def _check(self, other):
        if (self.s, self.r) != (other.s, other.r):
            raise IncompatibleGrassmannians(f"Gr({self.s},{self.r}) vs Gr({other.s},{other.r})")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for p, c in other.terms.items():
            t[p] = t.get(p, 0) + c
        return CohomologyClass(self.s, self.r, t)

    def __mul__(self, other):
        if isinstance(other, int):
            return CohomologyClass(self.s, self.r, {p: c * other for p, c in self.terms.items()})
        return cup_product(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, CohomologyClass) and (self.s, self.r) == (other.s, other.r)
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.s, self.r, frozenset(self.terms.items())))

    def coefficient(self, p) -> int:
        return self.terms.get(boxed(p, self.s, self.r), 0)

    def degree_top(self) -> int:
        """Coefficient of the point class."""
        return self.terms.get((self.r - self.s,) * self.s, 0)


def cup_product(a: CohomologyClass, b: CohomologyClass) -> CohomologyClass:
    a._check(b)
    s, r = a.s, a.r
    out: dict = {}
    for p, cp in a.terms.items():
        for q, cq in b.terms.items():
            for nu, c in lr_expand(partition(p), partition(q), s).items():
                if in_box(nu, s, r):
                    key = boxed(nu, s, r)
                    out[key] = out.get(key, 0) + cp * cq * c
    return CohomologyClass(s, r, out)
