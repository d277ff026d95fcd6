"""Restarted GMRES with left preconditioning, and preconditioners built from ``A^L``."""

from dataclasses import dataclass, field
import logging

import numba
import numpy as np
import scipy.sparse as sp

from .skyline import SingularMatrixError, SkylineLU, reverse_cuthill_mckee

__all__ = [
    "ArnoldiBreakdown",
    "SolveReport",
    "IdentityPreconditioner",
    "ILU0Preconditioner",
    "DirectPreconditioner",
    "build_ilu0",
    "build_direct",
    "make_preconditioner",
    "gmres",
    "MAX_DIRECT_DOFS",
]

log = logging.getLogger(__name__)

MAX_DIRECT_DOFS = 30_000


class ArnoldiBreakdown(ArithmeticError):
    """The Krylov basis could not be extended and the residual is not small."""


@dataclass
class SolveReport:
    """Outcome of a GMRES solve.

    ``residual_history[0]`` is the initial preconditioned relative residual,
    then one entry per Arnoldi step.  The last entry of every restart cycle
    is the recomputed true preconditioned residual rather than the Givens
    estimate.
    """

    iterations: int
    converged: bool
    residual_history: list = field(default_factory=list)
    restart: int = 200
    rtol: float = 1e-12


class IdentityPreconditioner:
    kind = "none"

    def apply(self, v):
        return v


@numba.njit(cache=True)
def _ilu0_factor(n, indptr, indices, diag, data):
    for i in range(1, n):
        for kk in range(indptr[i], diag[i]):
            k = indices[kk]
            data[kk] /= data[diag[k]]
            lik = data[kk]
            # subtract lik * U[k, j] for j in row i's pattern, j > k
            p = kk + 1
            for q in range(diag[k] + 1, indptr[k + 1]):
                j = indices[q]
                while p < indptr[i + 1] and indices[p] < j:
                    p += 1
                if p < indptr[i + 1] and indices[p] == j:
                    data[p] -= lik * data[q]
        if data[diag[i]] == 0:
            return i
    if n and data[diag[0]] == 0:
        return 0
    return -1


@numba.njit(cache=True)
def _ilu0_solve(n, indptr, indices, diag, data, b):
    x = b.copy()
    for i in range(n):
        s = x[i]
        for kk in range(indptr[i], diag[i]):
            s -= data[kk] * x[indices[kk]]
        x[i] = s
    for i in range(n - 1, -1, -1):
        s = x[i]
        for kk in range(diag[i] + 1, indptr[i + 1]):
            s -= data[kk] * x[indices[kk]]
        x[i] = s / data[diag[i]]
    return x


class ILU0Preconditioner:
    """Incomplete LU with zero fill: factors share the sparsity pattern of ``A``."""

    kind = "ilu0"

    def __init__(self, a):
        a = sp.csr_matrix(a, dtype=complex, copy=True)
        a.sum_duplicates()
        a.sort_indices()
        n = a.shape[0]
        diag = np.empty(n, dtype=np.int64)
        for i in range(n):
            row = a.indices[a.indptr[i]:a.indptr[i + 1]]
            pos = np.searchsorted(row, i)
            if pos >= len(row) or row[pos] != i:
                raise SingularMatrixError(i)
            diag[i] = a.indptr[i] + pos
        data = a.data.copy()
        bad = _ilu0_factor(n, a.indptr.astype(np.int64), a.indices.astype(np.int64), diag, data)
        if bad >= 0:
            raise SingularMatrixError(int(bad))
        self.factors = sp.csr_matrix((data, a.indices.copy(), a.indptr.copy()), shape=a.shape)
        self._diag = diag

    def apply(self, v):
        f = self.factors
        return _ilu0_solve(
            f.shape[0], f.indptr.astype(np.int64), f.indices.astype(np.int64), self._diag, f.data,
            np.asarray(v, dtype=complex),
        )


class DirectPreconditioner:
    """Exact inverse of ``A`` via RCM reordering and skyline LU."""

    kind = "direct"

    def __init__(self, a):
        a = sp.csr_matrix(a)
        n = a.shape[0]
        if n > MAX_DIRECT_DOFS:
            raise MemoryError(f"direct preconditioner limited to {MAX_DIRECT_DOFS} dofs, got {n}")
        self.perm = reverse_cuthill_mckee(a)
        self.lu = SkylineLU(a[self.perm][:, self.perm])

    def apply(self, v):
        v = np.asarray(v, dtype=complex)
        out = np.empty_like(v)
        out[self.perm] = self.lu.solve(v[self.perm])
        return out


def build_ilu0(a):
    return ILU0Preconditioner(a)


def build_direct(a):
    return DirectPreconditioner(a)


def make_preconditioner(kind, a):
    """Preconditioner of ``kind`` in {"none", "ilu0", "direct"} built from ``a``."""
    if kind in (None, "none", "identity"):
        return IdentityPreconditioner()
    if kind == "ilu0":
        return build_ilu0(a)
    if kind == "direct":
        return build_direct(a)
    raise ValueError(f"unknown preconditioner {kind!r}; choose none, ilu0 or direct")


def _as_matvec(op):
    if callable(op) and not hasattr(op, "shape"):
        return op
    if hasattr(op, "matvec"):
        return op.matvec
    return lambda v: op @ v


def _givens(a, b):
    # rotation zeroing the real, nonnegative subdiagonal entry b
    if b == 0:
        return 1.0, 0.0
    if a == 0:
        return 0.0, 1.0
    r = np.hypot(abs(a), abs(b))
    return abs(a) / r, (a / abs(a)) * np.conj(b) / r


def gmres(op, b, pc=None, rtol=1e-12, restart=200, maxit=10_000, x0=None):
    """Solve ``A x = b`` by restarted GMRES on ``P^{-1} A x = P^{-1} b``.

    Arnoldi uses modified Gram-Schmidt with one reorthogonalisation pass.
    Convergence is declared when the preconditioned relative residual
    ``||P^{-1}(b - A x)|| / ||P^{-1} b||`` is at most ``rtol``.

    Parameters
    ----------
    op : sparse matrix, LinearOperator or callable
    b : ndarray
    pc : preconditioner with ``apply``; identity when None
    rtol : float in (0, 1)
    restart : int >= 1
    maxit : int
        Cap on the total number of Arnoldi steps.
    x0 : ndarray, optional

    Returns
    -------
    x : ndarray
    report : SolveReport

    Raises
    ------
    ArnoldiBreakdown
        If the Krylov space stops growing before the residual is small.
    """
    if not (0 < rtol < 1):
        raise ValueError("rtol must lie in (0, 1)")
    if restart < 1:
        raise ValueError("restart must be >= 1")
    b = np.asarray(b, dtype=complex)
    n = b.shape[0]
    if hasattr(op, "shape") and tuple(op.shape) != (n, n):
        raise ValueError(f"operator shape {op.shape} does not match rhs length {n}")
    matvec = _as_matvec(op)
    precond = (pc or IdentityPreconditioner()).apply
    x = np.zeros(n, dtype=complex) if x0 is None else np.array(x0, dtype=complex)
    report = SolveReport(0, False, [], restart, rtol)
    pb_norm = np.linalg.norm(precond(b))
    if pb_norm == 0.0:
        report.converged = True
        report.residual_history.append(0.0)
        return np.zeros(n, dtype=complex), report

    m = min(restart, n)
    r = precond(b - matvec(x))
    beta = np.linalg.norm(r)
    report.residual_history.append(beta / pb_norm)
    while True:
        if beta / pb_norm <= rtol:
            report.converged = True
            return x, report
        if report.iterations >= maxit:
            return x, report
        V = np.zeros((m + 1, n), dtype=complex)
        H = np.zeros((m + 1, m), dtype=complex)
        cs = np.zeros(m)
        sn = np.zeros(m, dtype=complex)
        g = np.zeros(m + 1, dtype=complex)
        V[0] = r / beta
        g[0] = beta
        k = 0
        broke = False
        for j in range(m):
            w = precond(matvec(V[j]))
            report.iterations += 1
            w_norm0 = np.linalg.norm(w)
            for _ in range(2):
                for i in range(j + 1):
                    h = np.vdot(V[i], w)
                    H[i, j] += h
                    w -= h * V[i]
            h_next = np.linalg.norm(w)
            H[j + 1, j] = h_next
            for i in range(j):
                t = cs[i] * H[i, j] + sn[i] * H[i + 1, j]
                H[i + 1, j] = -np.conj(sn[i]) * H[i, j] + cs[i] * H[i + 1, j]
                H[i, j] = t
            cs[j], sn[j] = _givens(H[j, j], H[j + 1, j])
            H[j, j] = cs[j] * H[j, j] + sn[j] * H[j + 1, j]
            H[j + 1, j] = 0.0
            g[j + 1] = -np.conj(sn[j]) * g[j]
            g[j] = cs[j] * g[j]
            est = abs(g[j + 1]) / pb_norm
            report.residual_history.append(est)
            k = j + 1
            if h_next <= 1e-14 * w_norm0 or h_next == 0.0:
                broke = True
                break
            V[j + 1] = w / h_next
            if est <= rtol or report.iterations >= maxit:
                break
        y = np.zeros(k, dtype=complex)
        for i in range(k - 1, -1, -1):
            if H[i, i] == 0:
                raise ArnoldiBreakdown("singular Hessenberg matrix; operator is singular on the Krylov space")
            y[i] = (g[i] - H[i, i + 1:k] @ y[i + 1:k]) / H[i, i]
        x = x + V[:k].T @ y
        r = precond(b - matvec(x))
        beta = np.linalg.norm(r)
        report.residual_history[-1] = beta / pb_norm
        log.debug("gmres cycle end: %d iterations, residual %.3e", report.iterations, beta / pb_norm)
        if broke and beta / pb_norm > rtol:
            raise ArnoldiBreakdown(
                f"Arnoldi breakdown after {report.iterations} iterations with residual {beta / pb_norm:.3e}"
            )
