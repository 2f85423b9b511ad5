"""Dimension bookkeeping and classification of simple wall-crossings; Picard-number traces."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import ParabolicWeight, Wall
from .schubert import SchubertIndex, schubert_dim
from .walls import (Crossing, ScalingPath, _integer_rows, _realized_on_path, scaling_walls,
                    wall_is_realized, wall_residual, walls_through)
from .weights import moduli_dimension

__all__ = [
    "SplittingType", "CrossingReport", "DominanceResult", "NotOnWall", "NonSimpleWall", "NSmall",
    "PreconditionError", "generic_splitting", "hom_dimension", "ext1_dimension", "factor_dimension",
    "classify", "is_dominant", "no_blowdown_certificate", "no_blowdown_threshold",
    "is_blowdown_pattern", "is_boundary_pattern",
]

KINDS = ("blow-up", "blow-down", "flip", "boundary", "divisorial-identity")


class NotOnWall(ValueError):
    pass


class NonSimpleWall(ValueError):
    """Several walls meet here; the caller has to perturb."""


class NSmall(ValueError):
    """Too few points for the splitting types: a hom term would be h^0 of O(k) with k < -1."""


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class SplittingType:
    degrees: tuple
    side: str = "sub"

    def __post_init__(self):
        degs = tuple(sorted((int(x) for x in self.degrees), reverse=True))
        object.__setattr__(self, "degrees", degs)
        if self.side not in ("sub", "quot"):
            raise ValueError(f"side must be 'sub' or 'quot', got {self.side!r}")
        if self.side == "sub" and any(x > 0 for x in degs):
            raise ValueError(f"sub side needs nonpositive degrees, got {degs}")
        if self.side == "quot" and any(x < 0 for x in degs):
            raise ValueError(f"quotient side needs nonnegative degrees, got {degs}")

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    @property
    def balanced(self) -> bool:
        return not self.degrees or self.degrees[0] - self.degrees[-1] <= 1


def generic_splitting(s: int, d: int, side: str = "sub") -> SplittingType:
    """The balanced splitting of a rank-s, degree-d bundle."""
    if s < 1:
        raise ValueError("rank must be positive")
    if (side == "sub" and d > 0) or (side == "quot" and d < 0):
        raise ValueError(f"degree {d} has the wrong sign for the {side} side")
    q, rem = divmod(d, s)
    return SplittingType((q + 1,) * rem + (q,) * (s - rem), side)


def hom_dimension(sub: SplittingType, quot: SplittingType, n: int) -> int:
    """dim Hom(sub (x) O(-(n-2)), quot) = sum over pairs of h^0(O(e - f + n - 2))."""
    total = 0
    for f in sub.degrees:
        for e in quot.degrees:
            k = e - f + n - 2
            if k < -1:
                raise NSmall(f"n={n} too small: h^0(O({k})) term for degrees f={f}, e={e}")
            total += k + 1
    return total


def ext1_dimension(W: Wall, n: int | None = None, splittings=None) -> int:
    """dim Ext^1 on the minus side of W: hom - n s(r-s) + sum dim omega_{J^i}."""
    n = W.n if n is None else n
    if n != W.n:
        raise ValueError(f"wall has {W.n} points, not {n}")
    if splittings is None:
        if W.d > 0:
            raise PreconditionError("pass the complement wall (d <= 0) or explicit splittings")
        splittings = (generic_splitting(W.s, W.d, "sub"), generic_splitting(W.r - W.s, -W.d, "quot"))
    sub, quot = splittings
    if (sub.rank, sub.degree, quot.rank, quot.degree) != (W.s, W.d, W.r - W.s, -W.d):
        raise ValueError("splitting types do not match the wall's ranks and degrees")
    dims = sum(schubert_dim(SchubertIndex(W.r, Ji)) for Ji in W.J)
    return hom_dimension(sub, quot, n) - n * W.s * (W.r - W.s) + dims


def factor_dimension(rank: int, n: int) -> int:
    return n * rank * (rank - 1) // 2 - rank * rank + 1


@dataclass(frozen=True)
class CrossingReport:
    wall: Wall
    dim_M: int
    dim_Y: int
    ext_minus: int
    ext_plus: int
    kind: str
    empty_side: str | None = None
    stratum: str = "generic"

    @property
    def dim_Y_minus(self) -> int:
        return self.dim_Y + self.ext_minus - 1

    @property
    def dim_Y_plus(self) -> int:
        return self.dim_Y + self.ext_plus - 1

    def swapped(self) -> "CrossingReport":
        """The same crossing read from the other side."""
        flip = {"blow-up": "blow-down", "blow-down": "blow-up"}
        other = {"plus": "minus", "minus": "plus", None: None}[self.empty_side]
        return CrossingReport(self.wall.complement(), self.dim_M, self.dim_Y, self.ext_plus,
                              self.ext_minus, flip.get(self.kind, self.kind), other, self.stratum)

    def to_record(self) -> dict:
        return {"wall": self.wall.to_record(), "label": self.wall.label(), "kind": self.kind,
                "dim_M": self.dim_M, "dim_Y": self.dim_Y, "ext_minus": self.ext_minus,
                "ext_plus": self.ext_plus, "dim_Y_minus": self.dim_Y_minus,
                "dim_Y_plus": self.dim_Y_plus, "empty_side": self.empty_side, "stratum": self.stratum}


def _kind(em: int, ep: int):
    if em < 0 or ep < 0:
        raise PreconditionError(f"negative Ext^1 dimension ({em}, {ep}): the wall is not realized")
    if ep == 0:
        return "boundary", "plus"
    if em == 0:
        return "boundary", "minus"
    if em == 1 and ep == 1:
        return "divisorial-identity", None
    if em == 1:
        return "blow-up", None
    if ep == 1:
        return "blow-down", None
    return "flip", None


def _report(W: Wall) -> CrossingReport:
    r, n, s = W.r, W.n, W.s
    dim_M = moduli_dimension(r, n)
    dim_Y = factor_dimension(s, n) + factor_dimension(r - s, n)
    if W.d <= 0:
        em = ext1_dimension(W)
        ep = dim_M - dim_Y + 1 - em
    else:
        ep = ext1_dimension(W.complement())
        em = dim_M - dim_Y + 1 - ep
    kind, empty = _kind(em, ep)
    return CrossingReport(W, dim_M, dim_Y, em, ep, kind, empty)


def classify(W: Wall, w_on_wall: ParabolicWeight, n: int | None = None,
             check_simple: bool = True) -> CrossingReport:
    """Classify the crossing of W at ``w_on_wall`` from the negative-residual side."""
    if n is not None and n != W.n:
        raise ValueError(f"wall has {W.n} points, not {n}")
    if wall_residual(W, w_on_wall) != 0:
        raise NotOnWall(f"{W.label()} has residual {wall_residual(W, w_on_wall)} at this weight")
    if check_simple:
        others = [V for V in walls_through(w_on_wall)
                  if V != W.canonical() and wall_is_realized(V, w_on_wall)]
        if others:
            raise NonSimpleWall(f"{len(others)} other walls pass through this weight, e.g. {others[0].label()}")
    return _report(W)


def is_blowdown_pattern(W: Wall) -> bool:
    """sum dim omega_{J^i} = (n-1)s(r-s) + dr - 1, i.e. ext_plus = 1."""
    dims = sum(schubert_dim(SchubertIndex(W.r, Ji)) for Ji in W.J)
    return dims == (W.n - 1) * W.s * (W.r - W.s) + W.d * W.r - 1


def is_boundary_pattern(W: Wall) -> bool:
    """sum dim omega_{J^i} = (n-1)s(r-s) + dr, i.e. ext_plus = 0."""
    dims = sum(schubert_dim(SchubertIndex(W.r, Ji)) for Ji in W.J)
    return dims == (W.n - 1) * W.s * (W.r - W.s) + W.d * W.r


def no_blowdown_certificate(r: int, n: int, s: int, d: int) -> bool:
    """True iff ns(s-r)/(2r) + (1 + s(r-s))/r < 0, ruling out blow-downs of type (s, d) on the a_c ray."""
    if not 1 <= s <= r - 1:
        raise ValueError(f"need 1 <= s <= r-1, got s={s}")
    if d >= 0:
        raise ValueError(f"need d < 0, got d={d}")
    return Fraction(n * s * (s - r), 2 * r) + Fraction(1 + s * (r - s), r) < 0


def no_blowdown_threshold(r: int, s: int) -> int:
    """Smallest n for which no_blowdown_certificate(r, n, s, d) holds."""
    st = s * (r - s)
    return 2 * (1 + st) // st + 1


@dataclass(frozen=True)
class DominanceResult:
    dominant: bool
    rho_start: int
    rho_final: int
    trace: tuple = field(default_factory=tuple)  # (c, CrossingReport)
    emptied: bool = False

    def __bool__(self):
        return self.dominant

    @property
    def blowups(self) -> int:
        return sum(1 for _, rep in self.trace if rep.kind == "blow-up")

    @property
    def blowdowns(self) -> int:
        return sum(1 for _, rep in self.trace if rep.kind == "blow-down")


def is_dominant(w: ParabolicWeight, dmax: int | None = None) -> DominanceResult:
    """Trace the Picard number from a(eps) to a(1) = w along the scaling ray."""
    r, n = w.r, w.n
    if n <= 2 * r:
        raise PreconditionError(f"need n > 2r, got n={n}, r={r}")
    path = ScalingPath(w, 1)
    rho0 = (r - 1) * n
    rho, trace, emptied = rho0, [], False
    for group in scaling_walls(path, dmax):
        if not group.simple:
            raise NonSimpleWall(f"{len(group.walls)} walls meet at c = {group.param}; perturb the weight")
        if group.param == 1:
            raise NonSimpleWall(f"the weight itself lies on {group.wall.label()}")
        rep = _report(group.wall)
        trace.append((group.param, rep))
        if rep.kind == "blow-up":
            rho += 1
        elif rep.kind == "blow-down":
            rho -= 1
        elif rep.kind == "boundary" and rep.empty_side == "plus":
            emptied = True
            break
    dominant = not emptied and rho == rho0 + 1 and any(rep.kind == "blow-up" for _, rep in trace)
    return DominanceResult(dominant, rho0, rho, tuple(trace), emptied)
