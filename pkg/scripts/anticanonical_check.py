"""Strict containment of the anticanonical class in the effective cone, r <= 4, 2r < n <= 9."""
import argparse
import time
from dataclasses import dataclass

from parabolic.cone import anticanonical_class, contains, effective_cone


@dataclass
class CheckConfig:
    max_rank: int = 4
    max_points: int = 9


def run(cfg: CheckConfig):
    for r in range(2, cfg.max_rank + 1):
        for n in range(2 * r + 1, cfg.max_points + 1):
            t0 = time.time()
            C = effective_cone(r, n)
            inside = contains(anticanonical_class(r, n), C, strict=True)
            print(f"r={r} n={n}: {len(C.inequalities):8d} inequalities, strictly inside={bool(inside)} "
                  f"({time.time() - t0:.1f}s)", flush=True)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-rank", type=int, default=CheckConfig.max_rank)
    a = ap.parse_args()
    run(CheckConfig(max_rank=a.max_rank))
