"""Reverse Cuthill-McKee ordering and pivot-free skyline (profile) LU.

The factorisation assumes a structurally symmetric matrix: the lower profile
of row ``i`` and the upper profile of column ``i`` both start at the first
nonzero column ``first[i]`` of row ``i``.
"""

from collections import deque

import numba
import numpy as np
import scipy.sparse as sp

__all__ = ["reverse_cuthill_mckee", "bandwidth", "profile_size", "SkylineLU", "SingularMatrixError"]


class SingularMatrixError(ArithmeticError):
    """Zero pivot met during elimination."""

    def __init__(self, row):
        super().__init__(f"zero pivot in row {row}; matrix is singular to working precision")
        self.row = row


def _symmetric_pattern(a):
    a = sp.csr_matrix(a)
    pattern = (abs(a) + abs(a).T).tocsr()
    pattern.sort_indices()
    return pattern


def _pseudo_peripheral(indptr, indices, degree, start, mask):
    """George-Liu search for a node of (near) maximal eccentricity."""
    node = start
    depth = -1
    while True:
        levels = _level_structure(indptr, indices, node, mask)
        if len(levels) - 1 <= depth:
            return node
        depth = len(levels) - 1
        last = levels[-1]
        node = min(last, key=lambda v: degree[v])


def _level_structure(indptr, indices, root, mask):
    seen = {root}
    levels = [[root]]
    while True:
        nxt = []
        for v in levels[-1]:
            for w in indices[indptr[v]:indptr[v + 1]]:
                if mask[w] and w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if not nxt:
            return levels
        levels.append(nxt)


def reverse_cuthill_mckee(a):
    """Permutation ``perm`` such that ``a[perm][:, perm]`` has a small profile."""
    pattern = _symmetric_pattern(a)
    n = pattern.shape[0]
    indptr, indices = pattern.indptr, pattern.indices
    degree = np.diff(indptr)
    unvisited = np.ones(n, dtype=bool)
    order = []
    for seed in np.argsort(degree, kind="stable"):
        if not unvisited[seed]:
            continue
        root = _pseudo_peripheral(indptr, indices, degree, int(seed), unvisited)
        unvisited[root] = False
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            nbrs = [int(w) for w in indices[indptr[v]:indptr[v + 1]] if unvisited[w]]
            nbrs.sort(key=lambda w: (degree[w], w))
            for w in nbrs:
                unvisited[w] = False
                queue.append(w)
    return np.array(order[::-1], dtype=np.int64)


def bandwidth(a, perm=None):
    """Maximum ``|i - j|`` over the nonzeros of ``a`` (optionally permuted)."""
    coo = sp.coo_matrix(a)
    row, col = coo.row, coo.col
    if perm is not None:
        inv = np.empty_like(perm)
        inv[perm] = np.arange(len(perm))
        row, col = inv[row], inv[col]
    return int(np.max(np.abs(row - col))) if coo.nnz else 0


def _first_columns(pattern):
    n = pattern.shape[0]
    first = np.arange(n)
    coo = pattern.tocoo()
    np.minimum.at(first, coo.row, coo.col)
    return first


def profile_size(a, perm=None):
    """Number of stored entries in the skyline factors of ``a``."""
    pattern = _symmetric_pattern(a)
    if perm is not None:
        pattern = pattern[perm][:, perm]
    first = _first_columns(pattern)
    n = pattern.shape[0]
    return int(2 * np.sum(np.arange(n) - first) + n)


@numba.njit(cache=True)
def _factor(n, first, lptr, uptr, lval, uval):
    for i in range(n):
        fi = first[i]
        # row i of L
        for j in range(fi, i):
            lo = max(fi, first[j])
            s = lval[lptr[i] + j - fi]
            for k in range(lo, j):
                s -= lval[lptr[i] + k - fi] * uval[uptr[j] + k - first[j]]
            lval[lptr[i] + j - fi] = s / uval[uptr[j] + j - first[j]]
        # column i of U, diagonal last
        for k in range(fi, i + 1):
            lo = max(fi, first[k])
            s = uval[uptr[i] + k - fi]
            for m in range(lo, k):
                s -= lval[lptr[k] + m - first[k]] * uval[uptr[i] + m - fi]
            uval[uptr[i] + k - fi] = s
        if uval[uptr[i] + i - fi] == 0:
            return i
    return -1


@numba.njit(cache=True)
def _solve(n, first, lptr, uptr, lval, uval, b):
    x = b.copy()
    for i in range(n):
        fi = first[i]
        s = x[i]
        for k in range(fi, i):
            s -= lval[lptr[i] + k - fi] * x[k]
        x[i] = s
    for j in range(n - 1, -1, -1):
        fj = first[j]
        xj = x[j] / uval[uptr[j] + j - fj]
        x[j] = xj
        for k in range(fj, j):
            x[k] -= uval[uptr[j] + k - fj] * xj
    return x


class SkylineLU:
    """Pivot-free LU of a structurally symmetric sparse matrix in profile storage.

    Parameters
    ----------
    a : sparse matrix
        Square matrix, already in the desired elimination order.
    max_entries : int
        Refuse to allocate more than this many factor entries.

    Raises
    ------
    SingularMatrixError
        On a zero pivot.
    MemoryError
        If the profile exceeds ``max_entries``.
    """

    def __init__(self, a, max_entries=6 * 10**6):
        a = sp.csr_matrix(a, dtype=complex)
        n = a.shape[0]
        if a.shape != (n, n):
            raise ValueError("matrix must be square")
        pattern = _symmetric_pattern(a)
        first = _first_columns(pattern)
        lens = np.arange(n) - first
        total = int(2 * lens.sum() + n)
        if total > max_entries:
            raise MemoryError(f"skyline profile needs {total} entries, above the limit of {max_entries}")
        lptr = np.zeros(n + 1, dtype=np.int64)
        lptr[1:] = np.cumsum(lens)
        uptr = np.zeros(n + 1, dtype=np.int64)
        uptr[1:] = np.cumsum(lens + 1)
        lval = np.zeros(lptr[-1], dtype=complex)
        uval = np.zeros(uptr[-1], dtype=complex)
        coo = a.tocoo()
        r, c, v = coo.row, coo.col, coo.data
        low = r > c
        lval[lptr[r[low]] + c[low] - first[r[low]]] = v[low]
        up = ~low
        uval[uptr[c[up]] + r[up] - first[c[up]]] = v[up]
        bad = _factor(n, first, lptr, uptr, lval, uval)
        if bad >= 0:
            raise SingularMatrixError(int(bad))
        self.n = n
        self.first = first
        self._data = (lptr, uptr, lval, uval)
        self.nnz = total

    def solve(self, b):
        b = np.asarray(b, dtype=complex)
        lptr, uptr, lval, uval = self._data
        return _solve(self.n, self.first, lptr, uptr, lval, uval, b)
