"""Command-line entry point.

Exit codes: 0 success, 1 solver non-convergence or failed check, 2 invalid
configuration.  CSV goes to ``--output`` when given (summary on stdout),
otherwise CSV goes to stdout and the summary to stderr.
"""

import argparse
from dataclasses import replace
import logging
import os
import sys
import tempfile

from . import driver
from .kernels import finite_difference_check
from .mesh import MeshError

GEOMETRIES = ("annulus", "square_frame", "square_hole", "gmsh")


class ConfigError(ValueError):
    pass


def _floats(text):
    try:
        return tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _names(text):
    return tuple(t.strip() for t in text.split(",") if t.strip())


def _add_problem_flags(p):
    g = p.add_argument_group("geometry")
    g.add_argument("--geometry", choices=GEOMETRIES, default="annulus", help="domain family")
    g.add_argument("--mesh", default=None, help="Gmsh 2.2 file for --geometry gmsh")
    g.add_argument("--r-inner", type=float, default=1.0, help="annulus inner radius")
    g.add_argument("--r-outer", type=float, default=3.0, help="annulus outer radius")
    g.add_argument("--n-radial", type=int, default=8, help="annulus radial cells")
    g.add_argument("--n-angular", type=int, default=32, help="annulus angular cells")
    g.add_argument("--a-half", type=float, default=1.0, help="square frame hole half-width")
    g.add_argument("--b-half", type=float, default=2.0, help="square frame outer half-width")
    g.add_argument("--n", type=int, default=4, help="square frame grid cells per side")
    g.add_argument("--side", type=float, default=4.0, help="square-with-hole side length")
    g.add_argument("--radius", type=float, default=1.0, help="square-with-hole disc radius")
    g.add_argument("--h", type=float, default=0.1, help="square-with-hole target mesh size")
    g.add_argument("--level", type=int, default=0, help="uniform refinement level of the base mesh")
    s = p.add_argument_group("problem and solver")
    s.add_argument("--kappa", type=float, default=1.0, help="wavenumber")
    s.add_argument("--degree", type=int, default=1, help="Lagrange degree (1 or 2)")
    s.add_argument("--bc", default="nonlocal", help="boundary condition on Sigma: nonlocal or transmission")
    s.add_argument("--pc", default="direct", help="preconditioner: none, ilu0 or direct")
    s.add_argument("--rtol", type=float, default=1e-12, help="GMRES relative tolerance")
    s.add_argument("--restart", type=int, default=200, help="GMRES restart length")
    s.add_argument("--maxit", type=int, default=20_000, help="cap on GMRES iterations")
    s.add_argument("--q", type=int, default=8, help="Gauss points per boundary facet")
    s.add_argument("--mode", default="explicit_dense", help="nonlocal evaluation: explicit_dense or matrix_free")


def _add_output_flags(p):
    p.add_argument("--output", default=None, help="CSV path (stdout when omitted)")
    p.add_argument("--record-time", action="store_true", help="write wall times instead of nan")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for independent runs")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")


def build_parser():
    fmt = argparse.ArgumentDefaultsHelpFormatter
    parser = argparse.ArgumentParser(
        prog="nonlocal-helmholtz",
        description="Exterior Helmholtz solver with an exact nonlocal truncation condition.",
        formatter_class=fmt,
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("solve", help="solve one problem", formatter_class=fmt)
    _add_problem_flags(p)
    _add_output_flags(p)

    p = sub.add_parser("study-convergence", help="errors over uniform refinements", formatter_class=fmt)
    _add_problem_flags(p)
    _add_output_flags(p)
    p.add_argument("--levels", type=int, default=4, help="number of refinement levels")

    p = sub.add_parser("study-iterations", help="GMRES iterations over kappa, mesh and preconditioner",
                       formatter_class=fmt)
    _add_problem_flags(p)
    _add_output_flags(p)
    p.add_argument("--levels", type=int, default=3, help="number of refinement levels")
    p.add_argument("--kappas", type=_floats, default="0.1,1,5,10", help="comma-separated wavenumbers")
    p.add_argument("--pcs", type=_names, default="direct,none", help="comma-separated preconditioners")

    p = sub.add_parser("study-domain", help="errors over square domains of varying side", formatter_class=fmt)
    _add_problem_flags(p)
    _add_output_flags(p)
    p.add_argument("--sides", type=_floats, default=",".join(f"{v:g}" for v in driver.DOMAIN_SIDES), help="comma-separated side lengths")
    p.add_argument("--mesh-dir", default=None, help="directory for generated mesh files (temporary when omitted)")

    p = sub.add_parser("check-greens", help="Green's identity check for the manufactured data",
                       formatter_class=fmt)
    p.add_argument("--geometry", choices=("annulus",), default="annulus", help="domain family")
    p.add_argument("--r-inner", type=float, default=1.0, help="annulus inner radius")
    p.add_argument("--r-outer", type=float, default=3.0, help="annulus outer radius")
    p.add_argument("--n-angular", type=int, default=256, help="facets on the scatterer boundary")
    p.add_argument("--q", type=int, default=16, help="Gauss points per facet")
    p.add_argument("--kappa", type=float, default=1.0, help="wavenumber")
    p.add_argument("--tol", type=float, default=driver.GREENS_TOLERANCE, help="pass threshold")

    p = sub.add_parser("check-kernels", help="finite-difference validation of the kernels", formatter_class=fmt)
    p.add_argument("--samples", type=int, default=50, help="random configurations")
    p.add_argument("--seed", type=int, default=0, help="RNG seed")
    p.add_argument("--step", type=float, default=1e-6, help="finite-difference step")
    p.add_argument("--tol", type=float, default=1e-6, help="absolute pass threshold")
    return parser


def _geometry(args):
    if args.geometry == "annulus":
        return driver.Annulus(args.r_inner, args.r_outer, args.n_radial, args.n_angular)
    if args.geometry == "square_frame":
        return driver.SquareFrame(args.a_half, args.b_half, args.n)
    if args.geometry == "square_hole":
        return driver.SquareWithHole(args.side, args.radius, args.h)
    if args.mesh is None:
        raise ConfigError("--geometry gmsh needs --mesh PATH")
    if not os.path.isfile(args.mesh):
        raise ConfigError(f"mesh file {args.mesh!r} not found")
    return driver.GmshFile(args.mesh)


def _spec(args):
    return driver.ProblemSpec(
        geometry=_geometry(args), kappa=args.kappa, degree=args.degree, bc=args.bc, pc=args.pc,
        rtol=args.rtol, restart=args.restart, q=args.q, maxit=args.maxit, level=args.level, mode=args.mode,
    )


def _emit(args, rows):
    text = driver.write_csv(rows, record_time=args.record_time)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        out = sys.stdout
    else:
        sys.stdout.write(text)
        out = sys.stderr
    for r in rows:
        print(
            f"h={r.h:.4g} ndofs={r.ndofs} kappa={r.kappa:g} degree={r.degree} bc={r.bc} pc={r.pc} "
            f"L2={r.rel_l2_error:.3e} H1={r.rel_h1_error:.3e} iterations={r.iterations} "
            f"converged={r.converged}",
            file=out,
        )
    return 0 if all(r.converged for r in rows) else 1


def _run(args):
    if args.command == "check-kernels":
        dev = finite_difference_check(args.samples, args.seed, args.step)
        for name, value in dev.items():
            print(f"{name}: max deviation {value:.3e}")
        return 0 if max(dev.values()) <= args.tol else 1
    if args.command == "check-greens":
        err = driver.greens_identity_error(args.kappa, args.n_angular, args.q, args.r_inner, args.r_outer)
        ok = err <= args.tol
        print(f"Green's identity max error {err:.3e} ({'pass' if ok else 'FAIL'} at tol {args.tol:g})")
        return 0 if ok else 1

    spec = _spec(args)
    if args.jobs < 1:
        raise ConfigError("--jobs must be >= 1")
    if args.command == "solve":
        spec.build_mesh()
        rows = [driver.solve_problem(spec)[2]]
    elif args.command == "study-convergence":
        rows = driver.run_convergence_study(spec, args.levels, args.jobs)
    elif args.command == "study-iterations":
        for pc in args.pcs:
            replace(spec, pc=pc)  # validates names before any run
        rows = driver.run_iteration_study(spec, args.kappas, args.levels, args.pcs, args.jobs)
    else:
        if args.mesh_dir is None:
            with tempfile.TemporaryDirectory() as d:
                rows = driver.run_domain_study(spec, d, args.sides, args.h, args.radius, args.jobs)
        else:
            os.makedirs(args.mesh_dir, exist_ok=True)
            rows = driver.run_domain_study(spec, args.mesh_dir, args.sides, args.h, args.radius, args.jobs)
    return _emit(args, rows)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "verbose", False):
        logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
    try:
        return _run(args)
    except (ConfigError, MeshError, ValueError, OSError, MemoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except driver.CertificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
