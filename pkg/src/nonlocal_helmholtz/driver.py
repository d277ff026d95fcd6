"""Manufactured-solution experiments for the truncated exterior Helmholtz problem.

The exact field is the outgoing point source ``u(x) = (i/4) H0(kappa |x|)``
centred at the origin, which must lie inside the scatterer.  Neumann data on
GAMMA are ``grad u . n`` with the mesh normal ``n`` (pointing into the
scatterer).
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, replace
import io
import logging
import math
import time

import numpy as np

from . import fem, mesh as meshmod
from .krylov import ArnoldiBreakdown, SolveReport, gmres, make_preconditioner
from .mesh import GAMMA
from .potentials import (
    NonlocalOperator,
    apply_nonlocal,
    assemble_nonlocal_dense,
    build_quadrature,
    evaluate_representation,
    nonlocal_rhs,
)
from .skyline import SingularMatrixError
from .specfun import hankel1_01

__all__ = [
    "Annulus",
    "SquareFrame",
    "SquareWithHole",
    "GmshFile",
    "ProblemSpec",
    "ExperimentRow",
    "CertificationError",
    "manufactured_solution",
    "greens_identity_error",
    "certify_greens",
    "build_system",
    "solve_problem",
    "run_convergence_study",
    "run_iteration_study",
    "run_domain_study",
    "write_csv",
    "CSV_HEADER",
    "DOMAIN_SIDES",
]

log = logging.getLogger(__name__)

CSV_HEADER = (
    "h", "ndofs", "kappa", "degree", "bc", "pc",
    "rel_l2_error", "rel_h1_error", "iterations", "converged", "wall_time_seconds",
)
DOMAIN_SIDES = (2.25, 2.5, 3.0, 4.0, 5.0, 6.0)
GREENS_TOLERANCE = 1e-6


# -- geometry descriptors ---------------------------------------------------

@dataclass(frozen=True)
class Annulus:
    r_inner: float = 1.0
    r_outer: float = 3.0
    n_radial: int = 8
    n_angular: int = 32

    def build(self, level=0):
        """Structured mesh with both counts multiplied by ``2**level``."""
        k = 2**level
        return meshmod.generate_annulus(self.r_inner, self.r_outer, self.n_radial * k, self.n_angular * k)


@dataclass(frozen=True)
class SquareFrame:
    a_half: float = 1.0
    b_half: float = 2.0
    n: int = 4

    def build(self, level=0):
        return meshmod.generate_square_frame(self.a_half, self.b_half, self.n * 2**level)


@dataclass(frozen=True)
class SquareWithHole:
    side: float = 4.0
    radius: float = 1.0
    h: float = 0.1

    def build(self, level=0):
        return meshmod.generate_square_with_hole(self.side, self.radius, self.h / 2**level)


@dataclass(frozen=True)
class GmshFile:
    path: str

    def build(self, level=0):
        m = meshmod.load_gmsh(self.path)
        for _ in range(level):
            m = meshmod.refine_uniform(m)
        return m


@dataclass(frozen=True)
class ProblemSpec:
    """Everything needed to reproduce one solve.

    ``mode`` selects how the nonlocal block is applied inside GMRES:
    ``explicit_dense`` assembles the SIGMA x GAMMA block once,
    ``matrix_free`` re-evaluates the kernel on every product.
    """

    geometry: object = Annulus()
    kappa: float = 1.0
    degree: int = 1
    bc: str = "nonlocal"
    pc: str = "direct"
    rtol: float = 1e-12
    restart: int = 200
    q: int = 8
    maxit: int = 20_000
    level: int = 0
    mode: str = "explicit_dense"

    def __post_init__(self):
        if not (math.isfinite(self.kappa) and self.kappa > 0):
            raise ValueError(f"kappa must be positive and finite, got {self.kappa!r}")
        if self.degree not in (1, 2):
            raise ValueError(f"unsupported degree {self.degree!r}; supported degrees are 1 and 2")
        if self.bc not in ("nonlocal", "transmission"):
            raise ValueError(f"unknown boundary condition {self.bc!r}; choose nonlocal or transmission")
        if self.pc not in ("none", "ilu0", "direct"):
            raise ValueError(f"unknown preconditioner {self.pc!r}; choose none, ilu0 or direct")
        if not (0 < self.rtol < 1):
            raise ValueError("rtol must lie in (0, 1)")
        if self.restart < 1 or self.maxit < 1:
            raise ValueError("restart and maxit must be >= 1")
        if not (1 <= self.q <= 32):
            raise ValueError("q must lie in [1, 32]")
        if self.mode not in ("explicit_dense", "matrix_free"):
            raise ValueError(f"unknown evaluation mode {self.mode!r}")

    def build_mesh(self):
        """Mesh of the geometry; the origin must lie inside the scatterer."""
        m = self.geometry.build(self.level)
        if meshmod.winding_number(m, np.zeros(2), GAMMA) == 0:
            raise ValueError("the origin must lie inside the scatterer for the manufactured solution")
        return m


@dataclass
class ExperimentRow:
    h: float
    ndofs: int
    kappa: float
    degree: int
    bc: str
    pc: str
    rel_l2_error: float
    rel_h1_error: float
    iterations: int
    converged: bool
    wall_time_seconds: float


# -- manufactured solution --------------------------------------------------

def _radius(x):
    x = np.asarray(x, dtype=float)
    r = np.hypot(x[..., 0], x[..., 1])
    if np.any(r == 0):
        raise ValueError("the manufactured solution is singular at the origin")
    return x, r


def manufactured_solution(kappa):
    """Callables ``u(x)``, ``grad_u(x)`` and ``f(x, n) = grad_u(x) . n``.

    Points are arrays of shape ``(..., 2)``.
    """
    if not (math.isfinite(kappa) and kappa > 0):
        raise ValueError("kappa must be positive and finite")

    def u(x):
        _, r = _radius(x)
        return 0.25j * hankel1_01(kappa * r)[0]

    def grad_u(x):
        x, r = _radius(x)
        scale = -0.25j * kappa * hankel1_01(kappa * r)[1] / r
        return scale[..., None] * x

    def f(x, n):
        return np.einsum("...k,...k->...", grad_u(x), np.asarray(n, dtype=float))

    return u, grad_u, f


# -- sign certification -----------------------------------------------------

def _default_probes(r_inner, r_outer):
    radii = (r_inner + 0.25 * (r_outer - r_inner), r_inner + 0.75 * (r_outer - r_inner))
    angles = (0.1, 1.7, 3.3, 4.9)
    return np.array([[r * math.cos(t), r * math.sin(t)] for r in radii for t in angles])


def greens_identity_error(kappa=1.0, n_angular=256, q=16, r_inner=1.0, r_outer=3.0, probes=None):
    """Max deviation of the Green representation of ``u`` from ``u`` at interior probes.

    The representation is built from the exact traces of the manufactured
    solution on the polygonal GAMMA of ``annulus(r_inner, r_outer, 1, n_angular)``.
    """
    m = meshmod.generate_annulus(r_inner, r_outer, 1, n_angular)
    quad = build_quadrature(m, GAMMA, q)
    u, _, f = manufactured_solution(kappa)
    probes = _default_probes(r_inner, r_outer) if probes is None else np.asarray(probes, dtype=float)
    vals = evaluate_representation(quad, u(quad.points), f(quad.points, quad.normals), probes, kappa)
    return float(np.max(np.abs(vals - u(probes))))


class CertificationError(RuntimeError):
    """The Green's-identity check failed, so the boundary data cannot be trusted."""


_certified = {}


def certify_greens(kappa, tol=GREENS_TOLERANCE):
    """Run the Green's-identity check at ``kappa`` once per process; raise if it fails."""
    if kappa not in _certified:
        _certified[kappa] = greens_identity_error(kappa, n_angular=256, q=16)
    err = _certified[kappa]
    if not err <= tol:
        raise CertificationError(f"Green's identity error {err:.3e} exceeds {tol:g} at kappa={kappa}")
    return err


# -- solving ----------------------------------------------------------------

class _System:
    """Full operator ``A^L + A^NL`` (or ``A^L`` alone), right-hand side and mesh data."""

    def __init__(self, spec, mesh=None):
        self.spec = spec
        self.mesh = spec.build_mesh() if mesh is None else mesh
        self.space = fem.FeSpace(self.mesh, spec.degree)
        self.exact = manufactured_solution(spec.kappa)
        u, grad_u, f = self.exact
        self.local = fem.assemble_local(self.space, spec.kappa)
        rhs = fem.assemble_neumann_rhs(self.space, f, GAMMA, q=spec.q).astype(complex)
        self.nonlocal_apply = None
        if spec.bc == "nonlocal":
            op = NonlocalOperator(self.mesh, spec.kappa, spec.q, spec.mode)
            if spec.mode == "explicit_dense":
                self.nonlocal_apply = assemble_nonlocal_dense(op, self.space).matvec
            else:
                self.nonlocal_apply = lambda x, op=op: apply_nonlocal(op, self.space, x)
            # S(f) enters the boundary term with the opposite sign to D(u)
            rhs = rhs - nonlocal_rhs(op, self.space, f)
        self.rhs = rhs
        self.shape = self.local.shape

    def matvec(self, x):
        y = self.local @ x
        if self.nonlocal_apply is not None:
            y = y + self.nonlocal_apply(x)
        return y


def build_system(spec, mesh=None):
    """Assemble the linear system of ``spec``; returns an object with ``matvec``, ``rhs``, ``local``."""
    return _System(spec, mesh)


def solve_problem(spec, mesh=None):
    """Assemble, precondition with ``A^L`` and solve one problem.

    Returns
    -------
    uh : FeFunction
    report : SolveReport
    row : ExperimentRow
        Errors are relative to the manufactured solution over the whole
        computational domain.  Non-convergence is recorded, not raised.
    """
    t0 = time.perf_counter()
    system = build_system(spec, mesh)
    pc = make_preconditioner(spec.pc, system.local)
    try:
        x, report = gmres(system, system.rhs, pc, rtol=spec.rtol, restart=spec.restart, maxit=spec.maxit)
    except ArnoldiBreakdown as exc:
        log.warning("solve failed: %s", exc)
        x = np.full(system.space.ndofs, np.nan, dtype=complex)
        report = SolveReport(0, False, [], spec.restart, spec.rtol)
    uh = fem.FeFunction(system.space, x)
    u, grad_u, _ = system.exact
    row = ExperimentRow(
        h=meshmod.mesh_size(system.mesh),
        ndofs=system.space.ndofs,
        kappa=spec.kappa,
        degree=spec.degree,
        bc=spec.bc,
        pc=spec.pc,
        rel_l2_error=fem.l2_error(uh, u, relative=True),
        rel_h1_error=fem.h1_error(uh, u, grad_u, relative=True),
        iterations=report.iterations,
        converged=report.converged,
        wall_time_seconds=time.perf_counter() - t0,
    )
    return uh, report, row


def _failed_row(spec, exc):
    log.warning("run failed for %s: %s", spec, exc)
    return ExperimentRow(
        math.nan, 0, spec.kappa, spec.degree, spec.bc, spec.pc, math.nan, math.nan, 0, False, math.nan
    )


def _run_one(spec):
    try:
        return solve_problem(spec)[2]
    except (SingularMatrixError, MemoryError, ValueError, ArithmeticError) as exc:
        return _failed_row(spec, exc)


def run_specs(specs, jobs=1):
    """One row per spec, in spec order; ``jobs > 1`` uses a process pool."""
    specs = list(specs)
    for kappa in sorted({s.kappa for s in specs}):
        certify_greens(kappa)
    if jobs <= 1:
        return [_run_one(s) for s in specs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, specs))


def run_convergence_study(base, levels=4, jobs=1):
    """Rows for ``base`` on refinement levels ``0 .. levels - 1``."""
    return run_specs([replace(base, level=k) for k in range(levels)], jobs)


def run_iteration_study(base, kappas=(0.1, 1.0, 5.0, 10.0), levels=3, pcs=("direct", "none"), jobs=1):
    """Rows over ``pcs x kappas x levels`` (that nesting order)."""
    specs = [replace(base, kappa=k, pc=p, level=lv) for p in pcs for k in kappas for lv in range(levels)]
    return run_specs(specs, jobs)


def _domain_mesh_file(side, h, radius, directory):
    m = meshmod.generate_square_with_hole(side, radius, h)
    path = f"{directory}/square_hole_s{side:g}.msh"
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        meshmod.write_gmsh(m, fh)
    return path


def run_domain_study(base, directory, sides=DOMAIN_SIDES, h=0.1, radius=1.0, jobs=1):
    """Rows for square domains of side ``s`` around a polygonal disc of ``radius``.

    Each mesh is generated at target size ``h``, written as a Gmsh file under
    ``directory`` and read back before solving.
    """
    specs = [replace(base, geometry=GmshFile(_domain_mesh_file(s, h, radius, directory)), level=0) for s in sides]
    return run_specs(specs, jobs)


# -- output -----------------------------------------------------------------

def _format(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


def write_csv(rows, fh=None, record_time=False):
    """Write rows with the fixed header; ``wall_time_seconds`` is ``nan`` unless ``record_time``.

    Leaving the timing out by default keeps output byte-identical across runs.
    Returns the text when ``fh`` is None.
    """
    out = io.StringIO()
    out.write(",".join(CSV_HEADER) + "\n")
    for row in rows:
        d = asdict(row)
        if not record_time:
            d["wall_time_seconds"] = math.nan
        out.write(",".join(_format(d[k]) for k in CSV_HEADER) + "\n")
    text = out.getvalue()
    if fh is None:
        return text
    fh.write(text)
    return None

