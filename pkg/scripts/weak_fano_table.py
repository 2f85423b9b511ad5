"""Picard-number traces from a small weight up to the perturbed a_c, one row per (r, n)."""
import argparse
import time
from dataclasses import dataclass

from parabolic.cone import weak_fano_report


@dataclass
class TableConfig:
    cases: tuple = ((2, 5), (2, 6), (2, 7), (2, 8), (2, 9), (3, 7), (3, 8), (3, 9))
    verbose: bool = False


def run(cfg: TableConfig):
    print(f"{'r':>2} {'n':>2} {'rho0':>5} {'rho':>4} {'up':>3} {'down':>4} {'bdry':>4} {'weak Fano':>9} {'sec':>6}")
    for r, n in cfg.cases:
        t0 = time.time()
        rep = weak_fano_report(r, n)
        print(f"{r:>2} {n:>2} {rep.rho_start:>5} {rep.rho_final:>4} {rep.blowups:>3} {rep.blowdowns:>4} "
              f"{rep.boundaries:>4} {str(rep.weak_fano):>9} {time.time() - t0:>6.2f}")
        if cfg.verbose:
            for c, step in rep.trace:
                print(f"        c={float(c):.6f}  {step.wall.label():40s} {step.kind}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    run(TableConfig(verbose=ap.parse_args().verbose))
