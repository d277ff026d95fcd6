"""Accuracy of the nonlocal truncation against the local transmission condition.

Solves the manufactured radiating problem on four uniform refinements of the
annulus 1 < |x| < 3 at kappa = 1 with both boundary conditions and prints the
relative L2 errors with the observed order between levels.

Run with ``python3 demos/convergence.py``.  Takes about half a minute.
"""

import math

from nonlocal_helmholtz.driver import Annulus, ProblemSpec, run_convergence_study


def report(title, rows):
    print(title)
    print(f"{'h':>10} {'ndofs':>7} {'L2 error':>11} {'order':>6} {'its':>4}")
    prev = None
    for r in rows:
        order = "" if prev is None else f"{math.log(prev.rel_l2_error / r.rel_l2_error) / math.log(prev.h / r.h):6.2f}"
        print(f"{r.h:10.4f} {r.ndofs:7d} {r.rel_l2_error:11.3e} {order:>6} {r.iterations:4d}")
        prev = r
    print()


def main():
    base = ProblemSpec(geometry=Annulus(1.0, 3.0, 8, 32), kappa=1.0)
    nonlocal_rows = run_convergence_study(base, levels=4)
    transmission_rows = run_convergence_study(ProblemSpec(geometry=base.geometry, kappa=1.0, bc="transmission"),
                                              levels=4)
    report("nonlocal boundary condition", nonlocal_rows)
    report("transmission boundary condition", transmission_rows)
    # the local condition stalls at its modelling error while the nonlocal one keeps the O(h^2) rate
    print(f"final ratio transmission/nonlocal: {transmission_rows[-1].rel_l2_error / nonlocal_rows[-1].rel_l2_error:.0f}")


if __name__ == "__main__":
    main()
