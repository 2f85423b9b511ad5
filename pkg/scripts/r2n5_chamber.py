"""The rank-2, five-point picture along the symmetric ray a = (c, ..., c)."""
from dataclasses import dataclass
from fractions import Fraction

from parabolic.crossing import classify
from parabolic.walls import ScalingPath, scaling_walls
from parabolic.weights import is_effective, moduli_dimension


@dataclass
class ChamberConfig:
    points: int = 5
    probes: tuple = ("1/5", "1/2", "7/10", "4/5", "9/10")


def run(cfg: ChamberConfig):
    n = cfg.points
    path = ScalingPath.of([("1",)] * n, 1)
    print(f"dim M = {moduli_dimension(2, n)}")
    for g in scaling_walls(path):
        w = path.at(g.param)
        kinds = sorted({classify(W, w, check_simple=False).kind for W in g.walls})
        print(f"c = {g.param}: {len(g.walls)} wall(s) {', '.join(kinds)}  e.g. {g.walls[0].label()}")
    for x in cfg.probes:
        eff = is_effective(path.at(Fraction(x)))
        extra = "" if eff else f"  certificate {eff.certificate.label()}"
        print(f"a = {x}: effective={bool(eff)}{extra}")


if __name__ == "__main__":
    run(ChamberConfig())
