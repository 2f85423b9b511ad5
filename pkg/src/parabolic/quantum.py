"""Small quantum cohomology of Gr(s, r) and genus-zero Gromov-Witten invariants.

Quantum products are computed from the classical LR expansion by reducing
every partition with at most ``s`` rows modulo ``r``-rim hooks into the
``s x (r - s)`` box (Bertram, Ciocan-Fontanine and Fulton).  Each removed hook
contributes one power of ``q`` and a sign ``(-1)^(s - height)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement
from math import ceil

from .schubert import (IncompatibleGrassmannians, boxed, in_box, lr_expand, partition,
                       poincare_dual)


class ArityError(ValueError):
    pass


@lru_cache(maxsize=None)
def rim_hook_reduce(p, s: int, r: int):
    """Reduce a partition with at most ``s`` rows into the box.

    Returns ``(sign, q_degree, boxed_partition)`` or ``None`` when the class
    vanishes in the quantum ring.
    """
    p = partition(p)
    if len(p) > s:
        return None
    if not p or p[0] <= r - s:
        return 1, 0, boxed(p, s, r)
    # beta numbers: removing an r-rim hook starting in the first row lowers
    # the largest beta number by r
    parts = p + (0,) * (s - len(p))
    beta = [parts[i] + s - 1 - i for i in range(s)]
    new = beta[0] - r
    if new < 0 or new in beta:
        return None
    crossed = sum(1 for b in beta[1:] if new < b)
    height = crossed + 1
    beta = sorted(beta[1:] + [new], reverse=True)
    reduced = partition(beta[i] - (s - 1 - i) for i in range(s))
    rest = rim_hook_reduce(reduced, s, r)
    if rest is None:
        return None
    sign, deg, q = rest
    return sign * (-1) ** (s - height), deg + 1, q


@lru_cache(maxsize=None)
def _basis_product(p, q, s: int, r: int) -> tuple:
    out: dict = {}
    for nu, c in lr_expand(partition(p), partition(q), s).items():
        red = rim_hook_reduce(nu, s, r)
        if red is None:
            continue
        sign, d, lam = red
        out[(lam, d)] = out.get((lam, d), 0) + sign * c
    return tuple(sorted((k, v) for k, v in out.items() if v))


@dataclass(frozen=True)
class QuantumClass:
    """Integer combination of ``q^d sigma_lambda`` in QH*(Gr(s, r))."""

    s: int
    r: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        clean: dict = {}
        for (p, d), c in self.terms.items():
            if d < 0:
                raise ValueError("negative q-degree")
            if c:
                key = (boxed(p, self.s, self.r), int(d))
                clean[key] = clean.get(key, 0) + int(c)
        object.__setattr__(self, "terms", {k: c for k, c in clean.items() if c})

    @classmethod
    def schubert(cls, p, s: int, r: int, d: int = 0) -> "QuantumClass":
        return cls(s, r, {(boxed(p, s, r), d): 1})

    @classmethod
    def unit(cls, s: int, r: int) -> "QuantumClass":
        return cls.schubert((), s, r)

    def __add__(self, other):
        if (self.s, self.r) != (other.s, other.r):
            raise IncompatibleGrassmannians(f"Gr({self.s},{self.r}) vs Gr({other.s},{other.r})")
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return QuantumClass(self.s, self.r, t)

    def __eq__(self, other):
        return (isinstance(other, QuantumClass) and (self.s, self.r) == (other.s, other.r)
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.s, self.r, frozenset(self.terms.items())))

    def truncate(self, max_degree: int) -> "QuantumClass":
        return QuantumClass(self.s, self.r, {k: c for k, c in self.terms.items() if k[1] <= max_degree})

    def classical(self) -> dict:
        return {p: c for (p, d), c in self.terms.items() if d == 0}

    def coefficient(self, p, d: int) -> int:
        return self.terms.get((boxed(p, self.s, self.r), d), 0)


def quantum_product(a: QuantumClass, b: QuantumClass, s: int | None = None, r: int | None = None,
                    max_degree: int | None = None) -> QuantumClass:
    if (a.s, a.r) != (b.s, b.r):
        raise IncompatibleGrassmannians(f"Gr({a.s},{a.r}) vs Gr({b.s},{b.r})")
    if s is not None and (s, r) != (a.s, a.r):
        raise IncompatibleGrassmannians(f"classes live on Gr({a.s},{a.r}), not Gr({s},{r})")
    s, r = a.s, a.r
    out: dict = {}
    for (p, dp), cp in a.terms.items():
        for (q, dq), cq in b.terms.items():
            if max_degree is not None and dp + dq > max_degree:
                continue
            for (lam, d), c in _basis_product(p, q, s, r):
                deg = dp + dq + d
                if max_degree is not None and deg > max_degree:
                    continue
                out[(lam, deg)] = out.get((lam, deg), 0) + cp * cq * c
    return QuantumClass(s, r, out)


def _check_classes(classes, s, r):
    if len(classes) < 3:
        raise ArityError(f"need at least 3 marked points, got {len(classes)}")
    return [boxed(p, s, r) for p in classes]


@lru_cache(maxsize=None)
def _gw_sorted(classes: tuple, d: int, s: int, r: int) -> int:
    *first, last = classes
    prod = QuantumClass.unit(s, r)
    for p in first:
        prod = quantum_product(prod, QuantumClass.schubert(p, s, r), max_degree=d)
    return prod.coefficient(poincare_dual(last, s, r), d)


def gw_invariant(classes, d: int, s: int, r: int) -> int:
    """n-point genus-zero invariant <omega_{lambda^1}, ..., omega_{lambda^n}>_d on Gr(s, r).

    Zero unless the codimensions add up to ``s(r-s) + d*r``.
    """
    classes = _check_classes(classes, s, r)
    if d < 0 or sum(map(sum, classes)) != s * (r - s) + d * r:
        return 0
    # the invariant is symmetric in its insertions; sort for the cache
    return _gw_sorted(tuple(sorted(classes)), d, s, r)


def gw_is_one(classes, d: int, s: int, r: int) -> bool:
    return gw_invariant(classes, d, s, r) == 1


def max_q_degree(classes, r: int) -> int:
    """Bound on q-degrees that can contribute, from the dimension constraint."""
    return ceil(sum(map(sum, classes)) / r)


def gw_one_multisets(s: int, r: int, n: int):
    """Yield ``(degree, sorted class tuple)`` for every multiset of ``n`` boxed
    classes on Gr(s, r) whose invariant equals one."""
    from .schubert import box_partitions
    basis = box_partitions(s, r)
    dim = s * (r - s)
    for combo in combinations_with_replacement(basis, n):
        excess = sum(map(sum, combo)) - dim
        if excess < 0 or excess % r:
            continue
        d = excess // r
        if _gw_sorted(tuple(sorted(combo)), d, s, r) == 1:
            yield d, tuple(sorted(combo))
