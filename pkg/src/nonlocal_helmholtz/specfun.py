"""Bessel functions J0, J1, Y0, Y1 and Hankel functions H0^(1), H1^(1) of real argument.

Three regimes, all vectorised over numpy arrays:

* ``x < 0.5``: ascending power series (with the logarithmic term for Y).
* ``0.5 <= x < 25.5``: piecewise Chebyshev expansions on unit intervals.  On
  intervals that contain a zero ``z`` the tabulated function is ``f / (x - z)``
  and ``x - z`` is formed against a double-double copy of ``z``, so relative
  accuracy survives next to the zeros.
* ``x >= 25.5``: Hankel's asymptotic expansion in modulus/phase form, with the
  phase reduced modulo pi/4 in extended precision (Cody-Waite).

Arguments must satisfy ``0 < x <= 1e6``.
"""

from fractions import Fraction
import math

import numpy as np

from . import _bessel_tables as _tab

__all__ = [
    "X_MAX",
    "bessel_j0",
    "bessel_j1",
    "bessel_y0",
    "bessel_y1",
    "bessel_all",
    "hankel1",
    "hankel1_01",
]

X_MAX = 1.0e6

_X_SERIES = _tab.X_LO
_X_ASYM = _tab.X_HI
_EULER_GAMMA = 0.57721566490153286061
_TWO_OVER_PI = 2.0 / math.pi
_CHUNK = 1 << 16


def _pack(coeffs):
    width = max(len(row) for row in coeffs)
    out = np.zeros((len(coeffs), width))
    for i, row in enumerate(coeffs):
        out[i, : len(row)] = row
    return out


_TABLES = {
    name: (
        np.asarray(getattr(_tab, f"{name}_ZERO_HI")),
        np.asarray(getattr(_tab, f"{name}_ZERO_LO")),
        _pack(getattr(_tab, f"{name}_COEFFS")),
    )
    for name in ("J0", "J1", "Y0", "Y1")
}


def _split_pi_over_4():
    # pi to 60 digits; pieces of 30 bits so that k * piece is exact for k < 2**23
    pi = Fraction("3.141592653589793238462643383279502884197169399375105820974944")
    rem = pi / 4
    pieces = []
    for _ in range(2):
        m, e = math.frexp(float(rem))
        hi = math.ldexp(math.floor(math.ldexp(m, 30)), e - 30)
        pieces.append(hi)
        rem -= Fraction(hi)
    pieces.append(float(rem))
    return tuple(pieces)


_PIO4_1, _PIO4_2, _PIO4_3 = _split_pi_over_4()


def _check(x):
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValueError("Bessel argument must be finite")
    if np.any(x <= 0.0):
        raise ValueError("Bessel argument must be positive")
    if np.any(x > X_MAX):
        raise ValueError(f"Bessel argument exceeds supported range x <= {X_MAX:g}")
    return x


# -- small arguments -------------------------------------------------------

def _series(x):
    q = 0.25 * x * x
    half = 0.5 * x
    j0 = np.zeros_like(x)
    j1 = np.zeros_like(x)
    s0 = np.zeros_like(x)
    s1 = np.zeros_like(x)
    t0 = np.ones_like(x)  # (-q)^k / (k!)^2
    t1 = half.copy()  # (-1)^k (x/2)^(2k+1) / (k! (k+1)!)
    harm = 0.0
    for k in range(12):
        j0 += t0
        j1 += t1
        if k > 0:
            s0 -= harm * t0
        s1 += (2.0 * harm + 1.0 / (k + 1)) * t1
        harm += 1.0 / (k + 1)
        t0 = t0 * (-q) / ((k + 1) ** 2)
        t1 = t1 * (-q) / ((k + 1) * (k + 2))
    log_term = np.log(half) + _EULER_GAMMA
    y0 = _TWO_OVER_PI * (log_term * j0 + s0)
    # psi(k+1) + psi(k+2) = 2 H_k + 1/(k+1) - 2 gamma
    y1 = -_TWO_OVER_PI / x + _TWO_OVER_PI * log_term * j1 - s1 / math.pi
    return j0, j1, y0, y1


# -- tabulated mid range ---------------------------------------------------

def _clenshaw(coeffs, t):
    b1 = np.zeros_like(t)
    b2 = np.zeros_like(t)
    t2 = 2.0 * t
    for k in range(coeffs.shape[1] - 1, 0, -1):
        b1, b2 = coeffs[:, k] + t2 * b1 - b2, b1
    return coeffs[:, 0] + t * b1 - b2


def _table(name, x):
    zero_hi, zero_lo, coeffs = _TABLES[name]
    idx = np.floor(x - _X_SERIES).astype(np.intp)
    a = _X_SERIES + idx
    t = 2.0 * (x - a) - 1.0
    g = _clenshaw(coeffs[idx], t)
    zh = zero_hi[idx]
    has_zero = ~np.isnan(zh)
    d = (x - np.where(has_zero, zh, 0.0)) - np.where(has_zero, zero_lo[idx], 0.0)
    return np.where(has_zero, d * g, g)


# -- large arguments -------------------------------------------------------

def _hankel_pq(x, nu):
    mu = 4.0 * nu * nu
    p = np.ones_like(x)
    q = np.zeros_like(x)
    term = np.ones_like(x)
    inv8x = 1.0 / (8.0 * x)
    for k in range(1, 60):
        term = term * (mu - (2 * k - 1) ** 2) * inv8x / k
        if k % 2:
            q += term if (k // 2) % 2 == 0 else -term
        else:
            p += term if (k // 2) % 2 == 0 else -term
        if np.max(np.abs(term)) < 1e-18:
            break
    return p, q


def _asymptotic(x, nu):
    """Return (J_nu, Y_nu) for x >= 25.5 via modulus and reduced phase."""
    p, q = _hankel_pq(x, nu)
    amp = np.sqrt(_TWO_OVER_PI / x) * np.hypot(p, q)
    beta = np.arctan2(q, p)
    # theta = x - (2 nu + 1) pi/4 + beta = t + n pi/2, |t| <= pi/4 + |beta|
    n = np.rint((x - (2 * nu + 1) * (math.pi / 4)) / (math.pi / 2))
    k = 2.0 * n + (2 * nu + 1)
    t = ((x - k * _PIO4_1) - k * _PIO4_2) - k * _PIO4_3 + beta
    c, s = np.cos(t), np.sin(t)
    quad = np.mod(n, 4).astype(np.intp)
    cos_theta = np.choose(quad, [c, -s, -c, s])
    sin_theta = np.choose(quad, [s, c, -s, -c])
    return amp * cos_theta, amp * sin_theta


def _evaluate(x):
    j0 = np.empty_like(x)
    j1 = np.empty_like(x)
    y0 = np.empty_like(x)
    y1 = np.empty_like(x)
    small = x < _X_SERIES
    large = x >= _X_ASYM
    mid = ~(small | large)
    if np.any(small):
        xs = x[small]
        j0[small], j1[small], y0[small], y1[small] = _series(xs)
    if np.any(mid):
        xm = x[mid]
        j0[mid] = _table("J0", xm)
        j1[mid] = _table("J1", xm)
        y0[mid] = _table("Y0", xm)
        y1[mid] = _table("Y1", xm)
    if np.any(large):
        xl = x[large]
        j0[large], y0[large] = _asymptotic(xl, 0)
        j1[large], y1[large] = _asymptotic(xl, 1)
    return j0, j1, y0, y1


def bessel_all(x):
    """Evaluate J0, J1, Y0 and Y1 together.

    Parameters
    ----------
    x : array_like
        Arguments, ``0 < x <= 1e6``.

    Returns
    -------
    j0, j1, y0, y1 : ndarray
        Arrays with the shape of ``x``.

    Raises
    ------
    ValueError
        If any argument is non-positive, non-finite or above ``X_MAX``.
    """
    x = _check(x)
    shape = x.shape
    flat = x.ravel()
    outs = [np.empty_like(flat) for _ in range(4)]
    for start in range(0, flat.size, _CHUNK):
        sl = slice(start, start + _CHUNK)
        for out, val in zip(outs, _evaluate(flat[sl])):
            out[sl] = val
    return tuple(o.reshape(shape) for o in outs)


def _scalar_or_array(val, x):
    return float(val) if np.ndim(x) == 0 else val


def bessel_j0(x):
    """Bessel function of the first kind of order 0."""
    return _scalar_or_array(bessel_all(x)[0], x)


def bessel_j1(x):
    """Bessel function of the first kind of order 1."""
    return _scalar_or_array(bessel_all(x)[1], x)


def bessel_y0(x):
    """Bessel function of the second kind of order 0."""
    return _scalar_or_array(bessel_all(x)[2], x)


def bessel_y1(x):
    """Bessel function of the second kind of order 1."""
    return _scalar_or_array(bessel_all(x)[3], x)


def hankel1_01(x):
    """Return ``(H0^(1)(x), H1^(1)(x))`` as complex arrays."""
    j0, j1, y0, y1 = bessel_all(x)
    return j0 + 1j * y0, j1 + 1j * y1


def hankel1(order, x):
    """First-kind Hankel function ``J_order(x) + i Y_order(x)`` for order 0 or 1.

    Raises
    ------
    ValueError
        For orders other than 0 and 1, or arguments outside ``(0, 1e6]``.
    """
    if order not in (0, 1):
        raise ValueError(f"unsupported Hankel order {order!r}; only 0 and 1 are available")
    h0, h1 = hankel1_01(x)
    val = h0 if order == 0 else h1
    return complex(val) if np.ndim(x) == 0 else val
