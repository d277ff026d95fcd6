"""Finite elements for exterior Helmholtz problems truncated by an exact nonlocal boundary condition."""

from .driver import (
    Annulus,
    ExperimentRow,
    GmshFile,
    ProblemSpec,
    SquareFrame,
    SquareWithHole,
    manufactured_solution,
    solve_problem,
)
from .mesh import GAMMA, SIGMA, Mesh, MeshError, generate_annulus, generate_square_frame, read_gmsh, write_gmsh

__version__ = "0.1.0"

__all__ = [
    "Annulus",
    "ExperimentRow",
    "GmshFile",
    "ProblemSpec",
    "SquareFrame",
    "SquareWithHole",
    "manufactured_solution",
    "solve_problem",
    "GAMMA",
    "SIGMA",
    "Mesh",
    "MeshError",
    "generate_annulus",
    "generate_square_frame",
    "read_gmsh",
    "write_gmsh",
]
