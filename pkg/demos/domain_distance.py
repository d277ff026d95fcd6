"""Error as the artificial boundary approaches the scatterer.

A polygonal unit disc sits inside squares of side 2.25 to 6, meshed at
h = 0.1.  Each mesh is written to a Gmsh file and read back before solving.
The nonlocal condition is exact for any separated boundary, so the relative
error stays at the discretisation level even when the square nearly touches
the disc.

Run with ``python3 demos/domain_distance.py [mesh-directory]``.
"""

import sys
import tempfile

from nonlocal_helmholtz.driver import DOMAIN_SIDES, ProblemSpec, run_domain_study


def main(directory):
    rows = run_domain_study(ProblemSpec(kappa=1.0), directory, DOMAIN_SIDES, h=0.1)
    print(f"{'side':>6} {'ndofs':>7} {'L2 error':>11} {'its':>4}")
    for side, r in zip(DOMAIN_SIDES, rows):
        print(f"{side:6g} {r.ndofs:7d} {r.rel_l2_error:11.3e} {r.iterations:4d}")
    errs = [r.rel_l2_error for r in rows]
    print(f"largest/smallest error: {max(errs) / min(errs):.2f}")


if __name__ == "__main__":
    if len(sys.argv) > 1:
        main(sys.argv[1])
    else:
        with tempfile.TemporaryDirectory() as tmp:
            main(tmp)
