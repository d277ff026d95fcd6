"""Layer potentials between the scatterer boundary and the truncation boundary.

The Green representation used here reads, for ``x`` in the domain::

    u(x) = int_Gamma dK/dnu_y(x - y) u(y) - K(x - y) du/dnu(y) dy

with ``nu = -n`` the normal pointing out of the scatterer and ``n`` the mesh
normal (out of the computational domain).  Neumann data handed to this
module are always ``du/dn`` with respect to the mesh normal ``n``, so the
single-layer term enters with a plus sign: ``u = D(u) + S(du/dn)``.

Sources live on GAMMA and targets on SIGMA; the two never touch, so plain
Gauss-Legendre quadrature on each facet is accurate and no singular
integration is needed.
"""

from dataclasses import dataclass, field

import numpy as np

from .fem import gauss_legendre_01
from .kernels import kernel_dK_dny, kernel_K, kernel_Ktilde, kernel_rhs
from .mesh import GAMMA, SIGMA, TAG_NAMES

__all__ = [
    "BoundaryQuadrature",
    "NonlocalOperator",
    "DenseNonlocalBlock",
    "build_quadrature",
    "apply_nonlocal",
    "assemble_nonlocal_dense",
    "nonlocal_rhs",
    "evaluate_representation",
]

MAX_DENSE_ENTRIES = 10**8
_BLOCK = 256


@dataclass(frozen=True)
class BoundaryQuadrature:
    """Gauss points on every facet of one tagged boundary.

    Point ``i * q + k`` is node ``s[k]`` of facet ``facets[i]``.
    """

    tag: int
    facets: np.ndarray
    s: np.ndarray
    points: np.ndarray
    weights: np.ndarray
    normals: np.ndarray
    segments: np.ndarray

    @property
    def q(self):
        return len(self.s)

    @property
    def facet_of(self):
        return np.repeat(self.facets, self.q)

    @property
    def reference(self):
        return np.tile(self.s, len(self.facets))

    def __len__(self):
        return len(self.weights)


def build_quadrature(mesh, tag, q=8):
    """Map a ``q``-point Gauss-Legendre rule onto each facet with ``tag``."""
    if not (1 <= q <= 32):
        raise ValueError("q must lie in [1, 32]")
    facets = mesh.facets_of(tag)
    if len(facets) == 0:
        raise ValueError(f"no {TAG_NAMES.get(tag, tag)} facets to integrate over")
    s, w = gauss_legendre_01(q)
    geo = mesh.geometry(tag)
    a = mesh.vertices[mesh.facets[facets, 0]]
    b = mesh.vertices[mesh.facets[facets, 1]]
    pts = a[:, None, :] + s[None, :, None] * (b - a)[:, None, :]
    weights = (geo.length[:, None] * w[None, :]).ravel()
    normals = np.repeat(geo.unit_normal, q, axis=0)
    return BoundaryQuadrature(tag, facets, s, pts.reshape(-1, 2), weights, normals, np.stack([a, b], axis=1))


@dataclass(eq=False)
class NonlocalOperator:
    """Quadrature and kernel data for the double-layer coupling ``Gamma -> Sigma``.

    ``mode="explicit_dense"`` caches the kernel matrix between SIGMA and GAMMA
    quadrature points at construction; ``mode="matrix_free"`` recomputes it in
    target blocks on every application.
    """

    mesh: object
    kappa: float
    q: int = 8
    mode: str = "explicit_dense"
    sources: BoundaryQuadrature = field(init=False)
    targets: BoundaryQuadrature = field(init=False)
    kernel_matrix: np.ndarray = field(init=False, default=None, repr=False)
    _traces: dict = field(init=False, default_factory=dict, repr=False)

    def __post_init__(self):
        if self.mode not in ("explicit_dense", "matrix_free"):
            raise ValueError(f"unknown evaluation mode {self.mode!r}")
        if not (np.isfinite(self.kappa) and self.kappa > 0):
            raise ValueError("kappa must be positive and finite")
        self.sources = build_quadrature(self.mesh, GAMMA, self.q)
        self.targets = build_quadrature(self.mesh, SIGMA, self.q)
        if self.mode == "explicit_dense":
            self.kernel_matrix = self.kernel_block(slice(None))

    @property
    def source_normals(self):
        """Scatterer-outward normals at the source points."""
        return -self.sources.normals

    def kernel_block(self, rows):
        """``Ktilde`` between the target points ``rows`` and all source points."""
        x = self.targets.points[rows][:, None, :]
        nx = self.targets.normals[rows][:, None, :]
        y = self.sources.points[None, :, :]
        ny = self.source_normals[None, :, :]
        return kernel_Ktilde(x, y, nx, ny, self.kappa)

    def _blocks(self):
        m = len(self.targets)
        for start in range(0, m, _BLOCK):
            rows = slice(start, min(start + _BLOCK, m))
            if self.kernel_matrix is not None:
                yield rows, self.kernel_matrix[rows]
            else:
                yield rows, self.kernel_block(rows)

    def traces(self, space):
        """Trace matrices ``(T_Gamma, T_Sigma)`` of ``space`` at the quadrature points."""
        key = id(space)
        if key not in self._traces or self._traces[key][0] is not space:
            tg = space.trace_matrix(self.sources.facets, self.sources.s)
            ts = space.trace_matrix(self.targets.facets, self.targets.s)
            self._traces[key] = (space, tg, ts)
        return self._traces[key][1:]

    def potential(self, density):
        """``(i kappa - d/dn) D`` at the target points for source values ``density``."""
        wd = self.sources.weights * density
        out = np.empty(len(self.targets), dtype=complex)
        for rows, block in self._blocks():
            out[rows] = block @ wd
        return out


def apply_nonlocal(op, space, coeffs):
    """Action of the nonlocal block: entries ``a_NL(v_h, phi_i)`` for ``v_h ~ coeffs``.

    Only dofs supported on SIGMA receive nonzero entries.
    """
    coeffs = np.asarray(coeffs)
    if coeffs.shape != (space.ndofs,):
        raise ValueError(f"expected a vector of length {space.ndofs}, got shape {coeffs.shape}")
    tg, ts = op.traces(space)
    pot = op.potential(tg @ coeffs)
    return ts.T @ (op.targets.weights * pot)


@dataclass
class DenseNonlocalBlock:
    """Explicit ``Sigma x Gamma`` block of the nonlocal matrix.

    ``matrix[a, b]`` couples test dof ``rows[a]`` with trial dof ``cols[b]``.
    """

    matrix: np.ndarray
    rows: np.ndarray
    cols: np.ndarray
    ndofs: int

    def matvec(self, x):
        out = np.zeros(self.ndofs, dtype=complex)
        out[self.rows] = self.matrix @ np.asarray(x)[self.cols]
        return out

    def to_full(self):
        full = np.zeros((self.ndofs, self.ndofs), dtype=complex)
        full[np.ix_(self.rows, self.cols)] = self.matrix
        return full


def assemble_nonlocal_dense(op, space):
    """Assemble the dense nonlocal block restricted to SIGMA rows and GAMMA columns.

    Raises
    ------
    ValueError
        If the block would exceed ``MAX_DENSE_ENTRIES`` entries.
    """
    rows = space.boundary_dofs(SIGMA)
    cols = space.boundary_dofs(GAMMA)
    if len(rows) * len(cols) > MAX_DENSE_ENTRIES:
        raise ValueError(
            f"dense nonlocal block of {len(rows)} x {len(cols)} entries exceeds the limit of {MAX_DENSE_ENTRIES}"
        )
    tg, ts = op.traces(space)
    right = (tg[:, cols].multiply(op.sources.weights[:, None])).toarray()  # (N, nc)
    ts_r = ts[:, rows].tocsc()
    mat = np.zeros((len(rows), len(cols)), dtype=complex)
    for blk_rows, block in op._blocks():
        left = ts_r[blk_rows].multiply(op.targets.weights[blk_rows][:, None]).T  # (nr, m_blk)
        mat += left @ (block @ right)
    return DenseNonlocalBlock(mat, rows, cols, space.ndofs)


def nonlocal_rhs(op, space, g):
    """Entries ``<(i kappa - d/dn) S(g), phi_i>_Sigma``.

    ``g(points, normals)`` is evaluated at the GAMMA quadrature points with the
    mesh normals there.
    """
    src = op.sources
    gv = np.asarray(g(src.points, src.normals), dtype=complex) * src.weights
    _, ts = op.traces(space)
    tgt = op.targets
    pot = np.empty(len(tgt), dtype=complex)
    for start in range(0, len(tgt), _BLOCK):
        rows = slice(start, start + _BLOCK)
        k = kernel_rhs(tgt.points[rows][:, None, :], src.points[None], tgt.normals[rows][:, None, :], op.kappa)
        pot[rows] = k @ gv
    return ts.T @ (tgt.weights * pot)


def _distance_to_segments(points, segments):
    a, b = segments[:, 0], segments[:, 1]
    d = b - a
    w = points[:, None, :] - a[None]
    t = np.clip(np.einsum("mnk,nk->mn", w, d) / np.einsum("nk,nk->n", d, d), 0.0, 1.0)
    return np.linalg.norm(w - t[..., None] * d[None], axis=2).min(axis=1)


def evaluate_representation(quadrature, u_trace, dudn_trace, targets, kappa):
    """Green representation ``D(u) + S(du/dn)`` at ``targets`` by direct quadrature.

    Parameters
    ----------
    quadrature : BoundaryQuadrature
        Quadrature on the scatterer boundary.
    u_trace, dudn_trace : array_like
        Dirichlet trace and Neumann trace (with respect to the mesh normal,
        i.e. pointing into the scatterer) at the quadrature points.
    targets : array_like, shape (m, 2)
    kappa : float

    Raises
    ------
    ValueError
        If a target is closer to the boundary than its longest facet.
    """
    targets = np.atleast_2d(np.asarray(targets, dtype=float))
    seg = quadrature.segments
    longest = np.max(np.linalg.norm(seg[:, 1] - seg[:, 0], axis=1))
    dist = _distance_to_segments(targets, seg)
    if np.any(dist < longest):
        i = int(np.argmin(dist - longest))
        raise ValueError(
            f"target {tuple(targets[i])} is {dist[i]:.3g} from the boundary, closer than the facet length {longest:.3g}"
        )
    x = targets[:, None, :]
    y = quadrature.points[None]
    dl = kernel_dK_dny(x, y, -quadrature.normals[None], kappa)
    sl = kernel_K(x, y, kappa)
    w = quadrature.weights
    return dl @ (w * np.asarray(u_trace)) + sl @ (w * np.asarray(dudn_trace))
