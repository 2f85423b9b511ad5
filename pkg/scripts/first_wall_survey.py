"""Sample general effective weights and record which wall the scaling ray meets first."""
import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from parabolic.crossing import classify
from parabolic.core import ParabolicWeight
from parabolic.walls import DegenerateBase, FirstWallDiagnostic, ScalingPath, first_wall
from parabolic.weights import is_effective


@dataclass
class SurveyConfig:
    ranks: tuple = (2, 3, 4)
    max_points: int = 9
    samples: int = 10  # per (r, n)
    seed: int = 0


def sample_path(rng, r, n):
    while True:
        rows = []
        for _ in range(n):
            den = 10**6 + rng.randrange(1, 1000)
            rows.append(tuple(Fraction(x, den) for x in sorted(rng.sample(range(1, den), r - 1), reverse=True)))
        w = ParabolicWeight(r, tuple(rows))
        # shrinking cannot repair a violated degree-0 inequality, so give up after a few halvings
        for _ in range(12):
            if is_effective(w):
                return ScalingPath(w, 1 / max(row[0] for row in w.rows))
            w = w.scaled(Fraction(1, 2))


def run(cfg: SurveyConfig):
    rng = random.Random(cfg.seed)
    for r in cfg.ranks:
        for n in range(2 * r + 1, cfg.max_points + 1):
            tally, t0 = Counter(), time.time()
            done = 0
            while done < cfg.samples:
                path = sample_path(rng, r, n)
                try:
                    c, W = first_wall(path)
                except DegenerateBase:
                    continue
                except FirstWallDiagnostic as exc:
                    tally[f"unexpected: {exc}"] += 1
                    done += 1
                    continue
                rep = classify(W, path.at(c))
                tally[(W.label(), rep.kind, rep.ext_minus)] += 1
                done += 1
            print(f"r={r} n={n} ({time.time() - t0:.1f}s)")
            for key, k in sorted(tally.items(), key=str):
                print(f"    {k:3d}  {key}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=SurveyConfig.samples)
    ap.add_argument("--max-points", type=int, default=SurveyConfig.max_points)
    ap.add_argument("--seed", type=int, default=SurveyConfig.seed)
    a = ap.parse_args()
    run(SurveyConfig(samples=a.samples, max_points=a.max_points, seed=a.seed))
