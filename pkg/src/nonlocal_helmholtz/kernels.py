"""Free-space Helmholtz kernel in 2D and its normal derivatives.

With ``r = |x - y|`` and ``g(r) = (i/4) H0(kappa r)``::

    g'(r)  = -(i kappa / 4) H1(kappa r)
    g''(r) = -(i kappa^2 / 4) (H0(kappa r) - H1(kappa r) / (kappa r))

All functions broadcast over leading axes: points and normals have shape
``(..., 2)``.  Coincident source and target points raise ``ValueError``.
"""

import numpy as np

from .specfun import hankel1_01

__all__ = ["kernel_K", "kernel_dK_dny", "kernel_Ktilde", "kernel_rhs", "radial_derivatives", "finite_difference_check"]


def _check_kappa(kappa):
    if not (np.isfinite(kappa) and kappa > 0):
        raise ValueError(f"kappa must be positive and finite, got {kappa!r}")


def _separation(x, y):
    d = np.asarray(x, dtype=float) - np.asarray(y, dtype=float)
    r = np.hypot(d[..., 0], d[..., 1])
    if np.any(r == 0.0):
        raise ValueError("kernel evaluated at coincident points")
    return d, r


def radial_derivatives(r, kappa, order=2):
    """``g, g', g''`` (up to ``order``) of the radial kernel at distances ``r``."""
    _check_kappa(kappa)
    h0, h1 = hankel1_01(kappa * np.asarray(r, dtype=float))
    out = [0.25j * h0]
    if order >= 1:
        out.append(-0.25j * kappa * h1)
    if order >= 2:
        out.append(-0.25j * kappa**2 * (h0 - h1 / (kappa * r)))
    return tuple(out)


def kernel_K(x, y, kappa):
    """``(i/4) H0(kappa |x - y|)``."""
    _, r = _separation(x, y)
    return radial_derivatives(r, kappa, order=0)[0]


def kernel_dK_dny(x, y, n_y, kappa):
    """Derivative of ``K(x - y)`` with respect to ``y`` along ``n_y``."""
    d, r = _separation(x, y)
    _, g1 = radial_derivatives(r, kappa, order=1)
    return g1 * np.einsum("...k,...k->...", -d, n_y) / r


def kernel_rhs(x, y, n_x, kappa):
    """``(i kappa - d/dn_x) K(x - y)``; integrand of the single-layer boundary term."""
    d, r = _separation(x, y)
    g0, g1 = radial_derivatives(r, kappa, order=1)
    return 1j * kappa * g0 - g1 * np.einsum("...k,...k->...", d, n_x) / r


def kernel_Ktilde(x, y, n_x, n_y, kappa):
    """``(i kappa - d/dn_x) dK/dn_y``; integrand of the double-layer boundary term."""
    d, r = _separation(x, y)
    _, g1, g2 = radial_derivatives(r, kappa, order=2)
    dx = np.einsum("...k,...k->...", d, n_x) / r  # (x - y).n_x / r
    dy = -np.einsum("...k,...k->...", d, n_y) / r  # (y - x).n_y / r
    nxny = np.einsum("...k,...k->...", n_x, n_y)
    dk_dny = g1 * dy
    d_nx = g2 * dx * dy + g1 * (-nxny - dy * dx) / r
    return 1j * kappa * dk_dny - d_nx


def _unit(v):
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def finite_difference_check(n=50, seed=0, step=1e-6, kappa_range=(0.1, 10.0)):
    """Compare each kernel with central differences of its parent kernel.

    Draws ``n`` random configurations with ``1/2 <= |x - y| <= 5``, random
    unit normals and ``kappa`` log-uniform in ``kappa_range``.  Returns the
    maximum absolute deviation for each kernel:

    - ``K``: directional derivative of ``K`` against ``g'(r)`` times the radial direction
    - ``dK_dny``: difference of ``K`` in ``y`` along ``n_y``
    - ``rhs``: ``i kappa K`` minus the difference of ``K`` in ``x`` along ``n_x``
    - ``Ktilde``: ``i kappa dK/dn_y`` minus the difference of ``dK/dn_y`` in ``x`` along ``n_x``
    """
    rng = np.random.default_rng(seed)
    y = rng.uniform(-3, 3, (n, 2))
    theta = rng.uniform(0, 2 * np.pi, n)
    r = rng.uniform(0.5, 5.0, n)
    x = y + r[:, None] * np.column_stack([np.cos(theta), np.sin(theta)])
    nx = _unit(rng.standard_normal((n, 2)))
    ny = _unit(rng.standard_normal((n, 2)))
    kappas = np.exp(rng.uniform(*np.log(kappa_range), n))
    dev = {"K": 0.0, "dK_dny": 0.0, "rhs": 0.0, "Ktilde": 0.0}
    for i in range(n):
        k = kappas[i]
        xi, yi, nxi, nyi = x[i], y[i], nx[i], ny[i]

        def d_along(func, p, v):
            return (func(p + step * v) - func(p - step * v)) / (2 * step)

        e = _unit(xi - yi)
        _, g1 = radial_derivatives(np.linalg.norm(xi - yi), k, order=1)
        fd = d_along(lambda p: kernel_K(p, yi, k), xi, e)
        dev["K"] = max(dev["K"], abs(fd - g1))
        fd = d_along(lambda p: kernel_K(xi, p, k), yi, nyi)
        dev["dK_dny"] = max(dev["dK_dny"], abs(fd - kernel_dK_dny(xi, yi, nyi, k)))
        fd = 1j * k * kernel_K(xi, yi, k) - d_along(lambda p: kernel_K(p, yi, k), xi, nxi)
        dev["rhs"] = max(dev["rhs"], abs(fd - kernel_rhs(xi, yi, nxi, k)))
        fd = 1j * k * kernel_dK_dny(xi, yi, nyi, k) - d_along(lambda p: kernel_dK_dny(p, yi, nyi, k), xi, nxi)
        dev["Ktilde"] = max(dev["Ktilde"], abs(fd - kernel_Ktilde(xi, yi, nxi, nyi, k)))
    return {key: float(v) for key, v in dev.items()}
