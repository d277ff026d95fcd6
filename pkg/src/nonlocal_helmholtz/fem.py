"""Continuous Lagrange P1/P2 spaces, local Helmholtz assembly and error norms.

Matrices follow the Galerkin convention ``A[i, j] = a(phi_j, phi_i)`` with the
test function conjugated; the basis is real, so no conjugation appears in the
assembled entries and the local matrix is complex symmetric.
"""

from dataclasses import dataclass
from functools import cached_property
import math

import numpy as np
import scipy.sparse as sp

from .mesh import GAMMA, SIGMA

__all__ = [
    "FeSpace",
    "FeFunction",
    "gauss_legendre_01",
    "triangle_quadrature",
    "stiffness_matrix",
    "mass_matrix",
    "boundary_mass_matrix",
    "assemble_local",
    "assemble_neumann_rhs",
    "interpolate",
    "evaluate",
    "l2_error",
    "h1_error",
]


def gauss_legendre_01(q):
    """``q``-point Gauss-Legendre rule on [0, 1] (points, weights)."""
    x, w = np.polynomial.legendre.leggauss(q)
    return 0.5 * (x + 1.0), 0.5 * w


def triangle_quadrature(degree):
    """Collapsed Gauss rule on the reference triangle, exact to ``degree``.

    Returns points ``(n, 2)`` in (xi, eta) and weights summing to 1/2.
    """
    n = max(1, math.ceil((degree + 2) / 2))
    a, wa = gauss_legendre_01(n)
    b, wb = gauss_legendre_01(n)
    A, B = np.meshgrid(a, b, indexing="ij")
    W = np.outer(wa * (1.0 - a), wb)
    pts = np.column_stack([A.ravel(), (B * (1.0 - A)).ravel()])
    return pts, W.ravel()


def _reference_basis(degree, pts):
    """Basis values (nq, nb) and barycentric derivatives (nq, nb, 3)."""
    lam = np.column_stack([1.0 - pts[:, 0] - pts[:, 1], pts[:, 0], pts[:, 1]])
    nq = len(pts)
    if degree == 1:
        dval = np.broadcast_to(np.eye(3), (nq, 3, 3)).copy()
        return lam, dval
    vals = np.empty((nq, 6))
    dval = np.zeros((nq, 6, 3))
    for i in range(3):
        vals[:, i] = lam[:, i] * (2.0 * lam[:, i] - 1.0)
        dval[:, i, i] = 4.0 * lam[:, i] - 1.0
    for k in range(3):
        i, j = k, (k + 1) % 3
        vals[:, 3 + k] = 4.0 * lam[:, i] * lam[:, j]
        dval[:, 3 + k, i] = 4.0 * lam[:, j]
        dval[:, 3 + k, j] = 4.0 * lam[:, i]
    return vals, dval


def facet_basis(degree, s):
    """1D Lagrange basis along a facet ``a -> b`` at parameters ``s``.

    Column order matches :attr:`FeSpace.facet_dofs`: ``a, b`` then the
    midpoint for degree 2.
    """
    s = np.asarray(s, dtype=float)
    if degree == 1:
        return np.column_stack([1.0 - s, s])
    return np.column_stack([(1.0 - s) * (1.0 - 2.0 * s), s * (2.0 * s - 1.0), 4.0 * s * (1.0 - s)])


class FeSpace:
    """Continuous Lagrange space of degree 1 or 2 on a mesh.

    Degrees of freedom are the mesh vertices, followed for degree 2 by one
    dof per unique edge (ordered as :attr:`Mesh.edges`).
    """

    def __init__(self, mesh, degree=1):
        if degree not in (1, 2):
            raise ValueError(f"unsupported degree {degree!r}; supported degrees are 1 and 2")
        self.mesh = mesh
        self.degree = degree
        nv = mesh.n_vertices
        if degree == 1:
            self.cell_dofs = mesh.triangles.copy()
            self.dof_coords = mesh.vertices.copy()
            self.facet_dofs = mesh.facets.copy()
        else:
            edges, tri_edges = mesh.edges
            self.cell_dofs = np.concatenate([mesh.triangles, nv + tri_edges], axis=1)
            mids = 0.5 * (mesh.vertices[edges[:, 0]] + mesh.vertices[edges[:, 1]])
            self.dof_coords = np.concatenate([mesh.vertices, mids])
            lookup = {tuple(e): nv + i for i, e in enumerate(edges)}
            fmid = np.array([lookup[tuple(sorted(f))] for f in mesh.facets])
            self.facet_dofs = np.column_stack([mesh.facets, fmid])
        self.ndofs = len(self.dof_coords)
        for arr in (self.cell_dofs, self.dof_coords, self.facet_dofs):
            arr.setflags(write=False)

    def __repr__(self):
        return f"FeSpace(degree={self.degree}, ndofs={self.ndofs})"

    @cached_property
    def _cell_geometry(self):
        p = self.mesh.vertices[self.mesh.triangles]
        jac = np.stack([p[:, 1] - p[:, 0], p[:, 2] - p[:, 0]], axis=2)  # (T, 2, 2), columns
        det = jac[:, 0, 0] * jac[:, 1, 1] - jac[:, 0, 1] * jac[:, 1, 0]
        inv_t = np.empty_like(jac)  # J^{-T}
        inv_t[:, 0, 0] = jac[:, 1, 1] / det
        inv_t[:, 0, 1] = -jac[:, 1, 0] / det
        inv_t[:, 1, 0] = -jac[:, 0, 1] / det
        inv_t[:, 1, 1] = jac[:, 0, 0] / det
        g1 = inv_t[:, :, 0]
        g2 = inv_t[:, :, 1]
        grad_lam = np.stack([-g1 - g2, g1, g2], axis=1)  # (T, 3, 2)
        return p[:, 0], jac, det, grad_lam

    def tabulate(self, pts):
        """Physical quadrature data for reference points ``pts`` on every cell.

        Returns ``(x, phi, dphi, det)``: points ``(T, nq, 2)``, basis values
        ``(nq, nb)``, gradients ``(T, nq, nb, 2)`` and Jacobian determinants ``(T,)``.
        """
        origin, jac, det, grad_lam = self._cell_geometry
        phi, dval = _reference_basis(self.degree, pts)
        dphi = np.einsum("qbm,tmk->tqbk", dval, grad_lam)
        x = origin[:, None, :] + np.einsum("tkj,qj->tqk", jac, pts)
        return x, phi, dphi, det

    def boundary_facets(self, tag):
        return self.mesh.facets_of(tag)

    def boundary_dofs(self, tag):
        """Sorted dofs with support on the boundary ``tag``."""
        return np.unique(self.facet_dofs[self.mesh.facets_of(tag)])

    def trace_matrix(self, facets, s):
        """Sparse map from coefficients to values at ``len(s)`` points on each facet.

        Row ``i * len(s) + k`` evaluates at parameter ``s[k]`` of ``facets[i]``.
        """
        facets = np.asarray(facets)
        basis = facet_basis(self.degree, s)  # (q, nb)
        q, nb = basis.shape
        rows = np.repeat(np.arange(len(facets) * q), nb)
        cols = np.repeat(self.facet_dofs[facets], q, axis=0).ravel()
        vals = np.tile(basis, (len(facets), 1)).ravel()
        return sp.csr_matrix((vals, (rows, cols)), shape=(len(facets) * q, self.ndofs))


@dataclass
class FeFunction:
    space: FeSpace
    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs)
        if self.coeffs.shape != (self.space.ndofs,):
            raise ValueError(f"expected {self.space.ndofs} coefficients, got {self.coeffs.shape}")


def _assemble_cells(space, local):
    cd = space.cell_dofs
    nb = cd.shape[1]
    rows = np.repeat(cd, nb, axis=1).ravel()
    cols = np.tile(cd, (1, nb)).ravel()
    mat = sp.coo_matrix((local.ravel(), (rows, cols)), shape=(space.ndofs, space.ndofs)).tocsr()
    mat.sum_duplicates()
    mat.sort_indices()
    return mat


def stiffness_matrix(space):
    """``(grad phi_j, grad phi_i)``."""
    pts, w = triangle_quadrature(2 * space.degree - 2)
    _, _, dphi, det = space.tabulate(pts)
    local = np.einsum("q,t,tqik,tqjk->tij", w, np.abs(det), dphi, dphi)
    return _assemble_cells(space, local)


def mass_matrix(space):
    """``(phi_j, phi_i)`` over the domain."""
    pts, w = triangle_quadrature(2 * space.degree)
    _, phi, _, det = space.tabulate(pts)
    ref = np.einsum("q,qi,qj->ij", w, phi, phi)
    local = np.abs(det)[:, None, None] * ref[None]
    return _assemble_cells(space, local)


def boundary_mass_matrix(space, tag=SIGMA):
    """``<phi_j, phi_i>`` over the boundary facets carrying ``tag``."""
    s, w = gauss_legendre_01(space.degree + 1)
    facets = space.mesh.facets_of(tag)
    length = space.mesh.geometry(tag).length
    basis = facet_basis(space.degree, s)
    ref = np.einsum("q,qi,qj->ij", w, basis, basis)
    local = length[:, None, None] * ref[None]
    fd = space.facet_dofs[facets]
    nb = fd.shape[1]
    rows = np.repeat(fd, nb, axis=1).ravel()
    cols = np.tile(fd, (1, nb)).ravel()
    mat = sp.coo_matrix((local.ravel(), (rows, cols)), shape=(space.ndofs, space.ndofs)).tocsr()
    mat.sum_duplicates()
    mat.sort_indices()
    return mat


def assemble_local(space, kappa):
    """Matrix of ``(grad u, grad v) - kappa^2 (u, v) - i kappa <u, v>_Sigma``.

    Returned as a canonical complex CSR matrix (sorted, duplicate-free).
    """
    if not (np.isfinite(kappa) and kappa > 0):
        raise ValueError("kappa must be positive and finite")
    a = (
        stiffness_matrix(space).astype(complex)
        - kappa**2 * mass_matrix(space)
        - 1j * kappa * boundary_mass_matrix(space, SIGMA)
    ).tocsr()
    a.sum_duplicates()
    a.sort_indices()
    return a


def assemble_neumann_rhs(space, f, tag=GAMMA, q=8):
    """Load vector ``<f, phi_i>`` over the facets with ``tag``.

    ``f(points, normals)`` receives ``(n, 2)`` arrays of quadrature points and
    domain-outward unit normals and returns ``n`` values.
    """
    s, w = gauss_legendre_01(q)
    facets = space.mesh.facets_of(tag)
    geo = space.mesh.geometry(tag)
    a = space.mesh.vertices[space.mesh.facets[facets, 0]]
    b = space.mesh.vertices[space.mesh.facets[facets, 1]]
    pts = a[:, None, :] + s[None, :, None] * (b - a)[:, None, :]
    normals = np.repeat(geo.unit_normal[:, None, :], q, axis=1)
    vals = np.asarray(f(pts.reshape(-1, 2), normals.reshape(-1, 2))).reshape(len(facets), q)
    basis = facet_basis(space.degree, s)
    local = np.einsum("fq,q,qi,f->fi", vals, w, basis, geo.length)
    out = np.zeros(space.ndofs, dtype=np.result_type(local.dtype, float))
    np.add.at(out, space.facet_dofs[facets], local)
    return out


def interpolate(space, func):
    """Nodal interpolant of ``func(points) -> values``."""
    return FeFunction(space, np.asarray(func(space.dof_coords)))


def _barycentric(mesh, cells, points):
    p = mesh.vertices[mesh.triangles[cells]]
    d1 = p[:, 1] - p[:, 0]
    d2 = p[:, 2] - p[:, 0]
    r = points - p[:, 0]
    det = d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0]
    xi = (r[:, 0] * d2[:, 1] - r[:, 1] * d2[:, 0]) / det
    eta = (d1[:, 0] * r[:, 1] - d1[:, 1] * r[:, 0]) / det
    return np.column_stack([xi, eta])


def locate(mesh, point, tol=1e-12):
    """Index of a triangle containing ``point`` (brute force), or raise."""
    point = np.asarray(point, dtype=float)
    cells = np.arange(mesh.n_triangles)
    ref = _barycentric(mesh, cells, np.broadcast_to(point, (len(cells), 2)))
    lam = np.column_stack([1 - ref.sum(axis=1), ref])
    inside = np.flatnonzero(np.all(lam >= -tol, axis=1))
    if len(inside) == 0:
        raise ValueError(f"point {tuple(point)} lies outside the mesh")
    return int(inside[0])


def evaluate(fe_function, point, cell=None, tol=1e-12):
    """Value of ``fe_function`` at ``point``, optionally given its containing cell.

    Raises
    ------
    ValueError
        If ``point`` is not inside ``cell``.
    """
    space = fe_function.space
    point = np.asarray(point, dtype=float)
    if cell is None:
        cell = locate(space.mesh, point, tol)
    ref = _barycentric(space.mesh, np.array([cell]), point[None])
    lam = np.array([1 - ref.sum(), ref[0, 0], ref[0, 1]])
    if np.any(lam < -tol):
        raise ValueError(f"point {tuple(point)} is outside cell {cell}")
    phi, _ = _reference_basis(space.degree, ref)
    return complex(phi[0] @ fe_function.coeffs[space.cell_dofs[cell]])


def _error_quadrature(space):
    return triangle_quadrature(2 * space.degree + 2)


def l2_error(fe_function, exact, relative=False):
    """``||u_h - u||_{L2}`` (divided by ``||u||_{L2}`` when ``relative``)."""
    space = fe_function.space
    pts, w = _error_quadrature(space)
    x, phi, _, det = space.tabulate(pts)
    uh = np.einsum("qb,tb->tq", phi, fe_function.coeffs[space.cell_dofs])
    u = np.asarray(exact(x.reshape(-1, 2))).reshape(uh.shape)
    wt = w[None, :] * np.abs(det)[:, None]
    err = math.sqrt(float(np.sum(wt * np.abs(uh - u) ** 2)))
    if relative:
        err /= math.sqrt(float(np.sum(wt * np.abs(u) ** 2)))
    return err


def h1_error(fe_function, exact, exact_grad, relative=False):
    """Full ``H1`` norm of ``u_h - u``; ``exact_grad(points)`` returns ``(n, 2)``."""
    space = fe_function.space
    pts, w = _error_quadrature(space)
    x, phi, dphi, det = space.tabulate(pts)
    c = fe_function.coeffs[space.cell_dofs]
    uh = np.einsum("qb,tb->tq", phi, c)
    guh = np.einsum("tqbk,tb->tqk", dphi, c)
    flat = x.reshape(-1, 2)
    u = np.asarray(exact(flat)).reshape(uh.shape)
    gu = np.asarray(exact_grad(flat)).reshape(guh.shape)
    wt = w[None, :] * np.abs(det)[:, None]
    err2 = np.sum(wt * (np.abs(uh - u) ** 2 + np.sum(np.abs(guh - gu) ** 2, axis=2)))
    err = math.sqrt(float(err2))
    if relative:
        err /= math.sqrt(float(np.sum(wt * (np.abs(u) ** 2 + np.sum(np.abs(gu) ** 2, axis=2)))))
    return err
