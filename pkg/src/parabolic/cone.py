"""Effective cone H-representation, projective models of divisor classes, (anti)canonical classes."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import DivisorClass, ParabolicWeight, Wall
from .crossing import (PreconditionError, is_boundary_pattern, is_dominant,
                       no_blowdown_certificate)
from .quantum import gw_invariant
from .schubert import subset_to_partition, SchubertIndex
from .walls import wall_is_realized, walls_through
from .weights import gw_certificate_types, pauly_weight

__all__ = [
    "ConeInequality", "ConeDescription", "Containment", "InteriorModel", "ProductModel",
    "PartialFlagModel", "DegreeShiftModel", "OutsideCone", "CornerNotSupported",
    "GitCanonicalClass", "FanoReport", "effective_cone", "contains", "projective_model",
    "canonical_git_class", "anticanonical_class", "rho_vector", "weak_fano_report",
    "perturbed_weight",
]


class OutsideCone(ValueError):
    pass


class CornerNotSupported(ValueError):
    """The class lies on two or more facets at once."""


@dataclass(frozen=True)
class ConeInequality:
    """level * l + sum coeffs[i][j] * lambda_{j+1}^{i+1} >= 0."""

    kind: str  # ordering | level | gw
    level: int
    coeffs: tuple
    certificate: Wall | None = None
    gw_value: int | None = None
    point: int | None = None  # 1-based, ordering and level kinds
    step: int | None = None  # 1-based j of lambda_j >= lambda_{j+1}

    def value(self, D: DivisorClass) -> int:
        return self.level * D.level + sum(c * x for row, lam in zip(self.coeffs, D.lambdas)
                                          for c, x in zip(row, lam))

    def key(self):
        return (self.level, self.coeffs)

    def label(self) -> str:
        if self.kind == "ordering":
            return f"lambda_{self.step}^{self.point} >= lambda_{self.step + 1}^{self.point}"
        if self.kind == "level":
            return f"lambda_1^{self.point} <= l"
        return f"GW facet {self.certificate.label()}"

    def to_record(self) -> dict:
        rec = {"kind": self.kind, "level": self.level, "coeffs": [list(row) for row in self.coeffs]}
        if self.kind == "gw":
            rec["certificate"] = self.certificate.to_record()
            rec["gw_value"] = self.gw_value
        else:
            rec["point"] = self.point
            if self.kind == "ordering":
                rec["step"] = self.step
        return rec


@dataclass(frozen=True)
class ConeDescription:
    r: int
    n: int
    inequalities: tuple
    bounded_search: bool = False

    def of_kind(self, kind: str) -> list:
        return [q for q in self.inequalities if q.kind == kind]


def _ordering(r: int, n: int) -> list:
    out = []
    for i in range(n):
        for j in range(1, r):
            coeffs = [[0] * (r - 1) for _ in range(n)]
            coeffs[i][j - 1] = 1
            if j < r - 1:
                coeffs[i][j] = -1
            out.append(ConeInequality("ordering", 0, tuple(map(tuple, coeffs)), point=i + 1, step=j))
    return out


def _level(r: int, n: int) -> list:
    out = []
    for i in range(n):
        coeffs = [[0] * (r - 1) for _ in range(n)]
        coeffs[i][0] = -1
        out.append(ConeInequality("level", 1, tuple(map(tuple, coeffs)), point=i + 1))
    return out


def gw_inequality(W: Wall) -> ConeInequality:
    """s * sum lambda - r (d l + sum_i sum_{j in J^i} lambda_j^i) >= 0."""
    r, s = W.r, W.s
    coeffs = tuple(tuple(s - (r if j in Ji else 0) for j in range(1, r)) for Ji in W.J)
    return ConeInequality("gw", -r * W.d, coeffs, W)


def _arrangements(items):
    """Distinct orderings of a multiset given as a sorted tuple."""
    counts: dict = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    n = len(items)

    def rec(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                prefix.append(k)
                yield from rec(prefix)
                prefix.pop()
                counts[k] += 1

    yield from rec([])


def effective_cone(r: int, n: int, dmax: int | None = None) -> ConeDescription:
    if n <= 2 * r:
        raise PreconditionError(f"need n > 2r, got n={n}, r={r}")
    ineqs = _ordering(r, n) + _level(r, n)
    bounded = False
    seen = {q.key() for q in ineqs}
    gws = []
    for s in range(1, r):
        for deg, subsets in gw_certificate_types(s, r, n):
            if dmax is not None and deg > dmax:
                bounded = True
                continue
            for J in _arrangements(subsets):
                q = gw_inequality(Wall(r, s, -deg, J))
                if q.key() in seen:
                    continue
                seen.add(q.key())
                gws.append(q)
    gws = [ConeInequality(q.kind, q.level, q.coeffs, q.certificate, 1) for q in gws]
    gws.sort(key=lambda q: (q.certificate.s, -q.certificate.d, q.certificate.J))
    return ConeDescription(r, n, tuple(ineqs + gws), bounded)


def verify_certificate(q: ConeInequality) -> bool:
    W = q.certificate
    classes = [subset_to_partition(SchubertIndex(W.r, Ji)) for Ji in W.J]
    return gw_invariant(classes, -W.d, W.s, W.r) == 1


@dataclass(frozen=True)
class Containment:
    inside: bool
    violated: ConeInequality | None = None
    tight: tuple = field(default_factory=tuple)

    def __bool__(self):
        return self.inside


def contains(D: DivisorClass, C: ConeDescription, strict: bool = False) -> Containment:
    if (D.r, D.n) != (C.r, C.n):
        raise ValueError(f"divisor for (r={D.r}, n={D.n}) vs cone for (r={C.r}, n={C.n})")
    tight = []
    for q in C.inequalities:
        v = q.value(D)
        if v < 0 or (strict and v == 0):
            return Containment(False, q)
        if v == 0:
            tight.append(q)
    return Containment(True, None, tuple(tight))


# --- projective models -------------------------------------------------------

@dataclass(frozen=True)
class InteriorModel:
    weight: ParabolicWeight
    on_wall: bool = False
    note: str = ""

    def to_record(self) -> dict:
        return {"type": "interior", "rank": self.weight.r, "degree": 0,
                "weights": self.weight.as_strings(), "on_wall": self.on_wall, "note": self.note}


@dataclass(frozen=True)
class ProductModel:
    """M_p(s, -d, b) x M_p(r-s, d, c) with d >= 0."""

    s: int
    d: int
    b: tuple
    c: tuple
    facet: Wall | None = None

    @property
    def sub_degree(self) -> int:
        return -self.d

    def to_record(self) -> dict:
        from .core import fmt
        return {"type": "product", "s": self.s, "d": self.d,
                "sub": {"rank": self.s, "degree": -self.d, "weights": [[fmt(x) for x in row] for row in self.b]},
                "quot": {"rank": len(self.c[0]), "degree": self.d, "weights": [[fmt(x) for x in row] for row in self.c]},
                "facet": self.facet.to_record() if self.facet else None}


@dataclass(frozen=True)
class PartialFlagModel:
    """Moduli with the j-th flag step at point k forgotten."""

    point: int
    step: int
    weight: tuple

    def to_record(self) -> dict:
        from .core import fmt
        return {"type": "partial-flag", "point": self.point, "dropped_step": self.step,
                "weights": [[fmt(x) for x in row] for row in self.weight]}


@dataclass(frozen=True)
class DegreeShiftModel:
    """M_p(r, -1, b); the flag at ``point`` has type (2, 3, ..., r-1)."""

    point: int
    weight: tuple
    degree: int = -1

    def to_record(self) -> dict:
        from .core import fmt
        return {"type": "degree-shift", "point": self.point, "degree": self.degree,
                "weights": [[fmt(x) for x in row] for row in self.weight]}


def _rows(D: DivisorClass):
    return tuple(tuple(Fraction(x, D.level) for x in lam) for lam in D.lambdas)


def projective_model(D: DivisorClass, C: ConeDescription):
    cont = contains(D, C)
    if not cont:
        raise OutsideCone(f"violates {cont.violated.label()}")
    if D.level <= 0:
        raise CornerNotSupported("level must be positive for a model")
    if len(cont.tight) >= 2:
        raise CornerNotSupported("on " + ", ".join(q.label() for q in cont.tight))
    if not cont.tight:
        w = pauly_weight(D)
        through = [W for W in walls_through(w) if wall_is_realized(W, w)]
        if through:
            return InteriorModel(w, True, f"wall divisor: model is the shared contraction across {through[0].label()}")
        return InteriorModel(w)
    (q,) = cont.tight
    rows = _rows(D)
    r = D.r
    if q.kind == "gw":
        W = q.certificate
        full = [row + (Fraction(0),) for row in rows]
        b = tuple(tuple(row[j - 1] for j in Ji) for row, Ji in zip(full, W.J))
        c = tuple(tuple(row[j - 1] for j in range(1, r + 1) if j not in Ji) for row, Ji in zip(full, W.J))
        return ProductModel(W.s, -W.d, b, c, W)
    if q.kind == "ordering":
        return PartialFlagModel(q.point, q.step, rows)
    k = q.point - 1
    lam = D.lambdas[k]
    shifted = tuple(Fraction(lam[j] - lam[r - 2], D.level) for j in range(r - 2))
    return DegreeShiftModel(q.point, tuple(shifted if i == k else row for i, row in enumerate(rows)))


# --- canonical classes and the weak Fano check -------------------------------

def rho_vector(r: int) -> tuple:
    return tuple(r - j for j in range(1, r))


@dataclass(frozen=True)
class GitCanonicalClass:
    """K of the small-weight GIT quotient: each flag factor carries O(-2, ..., -2)."""

    r: int
    n: int

    @property
    def flag_degrees(self) -> tuple:
        return ((-2,) * (self.r - 1),) * self.n

    @property
    def anticanonical(self) -> DivisorClass:
        two_rho = tuple(2 * x for x in rho_vector(self.r))
        return DivisorClass(self.r, (self.r - 1) * self.n, (two_rho,) * self.n)


def canonical_git_class(r: int, n: int) -> GitCanonicalClass:
    if n <= 2 * r:
        raise PreconditionError(f"need n > 2r, got n={n}, r={r}")
    return GitCanonicalClass(r, n)


def anticanonical_class(r: int, n: int) -> DivisorClass:
    if n <= 2 * r:
        raise PreconditionError(f"need n > 2r, got n={n}, r={r}")
    two_rho = tuple(2 * x for x in rho_vector(r))
    return DivisorClass(r, 2 * r, (two_rho,) * n)


def perturbed_weight(r: int, n: int) -> ParabolicWeight:
    """a_c plus distinct tiny offsets, deterministic.

    Residuals at a_c are half-integers and each weight entry enters a residual
    with coefficient at most r in size, so offsets summing below 1/(8r) keep the
    sign of every nonzero residual.  Offsets are eps / B^k with B larger than any
    coefficient combination, so no two walls end up met at the same scale.
    """
    eps = Fraction(1, 8 * r)
    base = 4 * n * r * r + 1
    rows = []
    k = 1
    for i in range(n):
        row = []
        for j in range(1, r):
            row.append(Fraction(r - j, r) + eps / base ** k)
            k += 1
        rows.append(tuple(row))
    return ParabolicWeight(r, tuple(rows))


@dataclass(frozen=True)
class FanoReport:
    r: int
    n: int
    weight: ParabolicWeight
    dominant: bool
    rho_start: int
    rho_final: int
    blowups: int
    blowdowns: int
    boundaries: int
    certificates: tuple  # (s, d, passes)
    trace: tuple

    @property
    def weak_fano(self) -> bool:
        return self.dominant and not self.blowdowns and not self.boundaries

    def to_record(self) -> dict:
        return {"r": self.r, "n": self.n, "weight": self.weight.as_strings(), "dominant": self.dominant,
                "rho_start": self.rho_start, "rho_final": self.rho_final, "blowups": self.blowups,
                "blowdowns": self.blowdowns, "boundaries": self.boundaries, "weak_fano": self.weak_fano,
                "certificates": [{"s": s, "d": d, "no_blowdown": ok} for s, d, ok in self.certificates],
                "trace": [dict(rep.to_record(), c=str(c)) for c, rep in self.trace]}


def weak_fano_report(r: int, n: int, dmax: int | None = None) -> FanoReport:
    if n <= 2 * r:
        raise PreconditionError(f"need n > 2r, got n={n}, r={r}")
    w = perturbed_weight(r, n)
    res = is_dominant(w, dmax)
    kinds = [rep.kind for _, rep in res.trace]
    pairs = sorted({(rep.wall.s, rep.wall.d) for _, rep in res.trace})
    certs = tuple((s, d, no_blowdown_certificate(r, n, s, d)) for s, d in pairs)
    boundaries = sum(1 for _, rep in res.trace if rep.kind == "boundary" or is_boundary_pattern(rep.wall))
    return FanoReport(r, n, w, res.dominant, res.rho_start, res.rho_final, kinds.count("blow-up"),
                      kinds.count("blow-down"), boundaries, certs, res.trace)
