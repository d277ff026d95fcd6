import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nonlocal_helmholtz.kernels import (
    finite_difference_check,
    kernel_dK_dny,
    kernel_K,
    kernel_Ktilde,
    kernel_rhs,
    radial_derivatives,
)
from nonlocal_helmholtz.specfun import hankel1

STEP = 1e-6


def unit(t):
    return np.array([np.cos(t), np.sin(t)])


def d_along(f, p, v, h=STEP):
    return (f(p + h * v) - f(p - h * v)) / (2 * h)


def test_kernel_value():
    x, y = np.array([1.0, 2.0]), np.array([-0.5, 0.3])
    r = np.linalg.norm(x - y)
    assert kernel_K(x, y, 2.0) == pytest.approx(0.25j * hankel1(0, 2.0 * r), rel=1e-15)


def test_symmetry_and_broadcasting():
    rng = np.random.default_rng(3)
    x = rng.normal(size=(5, 1, 2))
    y = rng.normal(size=(1, 4, 2)) + 10.0
    k = kernel_K(x, y, 1.3)
    assert k.shape == (5, 4)
    np.testing.assert_allclose(kernel_K(y.transpose(1, 0, 2), x.transpose(1, 0, 2), 1.3), k.T, rtol=1e-15)


def test_coincident_points_raise():
    p = np.array([0.5, 0.5])
    for call in (
        lambda: kernel_K(p, p, 1.0),
        lambda: kernel_dK_dny(p, p, unit(0.0), 1.0),
        lambda: kernel_rhs(p, p, unit(0.0), 1.0),
        lambda: kernel_Ktilde(p, p, unit(0.0), unit(1.0), 1.0),
    ):
        with pytest.raises(ValueError, match="coincident"):
            call()


@pytest.mark.parametrize("kappa", [0.0, -1.0, np.nan, np.inf])
def test_bad_kappa(kappa):
    with pytest.raises(ValueError):
        kernel_K(np.zeros(2), np.ones(2), kappa)


def test_radial_second_derivative_fd():
    for kappa in (0.1, 1.0, 7.0):
        for r in (0.3, 1.0, 4.0):
            g0, g1, g2 = radial_derivatives(np.array(r), kappa)
            fd = (radial_derivatives(np.array(r + STEP), kappa, 1)[1]
                  - radial_derivatives(np.array(r - STEP), kappa, 1)[1]) / (2 * STEP)
            assert abs(fd - g2) < 1e-6


configs = st.tuples(
    st.floats(-3, 3), st.floats(-3, 3),      # y
    st.floats(0, 2 * np.pi), st.floats(0.5, 5),  # direction and distance to x
    st.floats(0, 2 * np.pi), st.floats(0, 2 * np.pi),  # normals
    st.floats(0.1, 10.0),                     # kappa
)


@settings(max_examples=60, deadline=None)
@given(configs)
def test_kernels_against_finite_differences(c):
    y = np.array([c[0], c[1]])
    x = y + c[3] * unit(c[2])
    nx, ny, k = unit(c[4]), unit(c[5]), c[6]
    fd = d_along(lambda p: kernel_K(x, p, k), y, ny)
    assert abs(fd - kernel_dK_dny(x, y, ny, k)) < 1e-6
    fd = 1j * k * kernel_K(x, y, k) - d_along(lambda p: kernel_K(p, y, k), x, nx)
    assert abs(fd - kernel_rhs(x, y, nx, k)) < 1e-6
    fd = 1j * k * kernel_dK_dny(x, y, ny, k) - d_along(lambda p: kernel_dK_dny(p, y, ny, k), x, nx)
    assert abs(fd - kernel_Ktilde(x, y, nx, ny, k)) < 1e-6


def test_ktilde_symmetric_in_swapped_roles():
    # d/dn_x d/dn_y K is symmetric under (x, n_x) <-> (y, n_y); so is the dK/dn_y part up to the swap
    x, y = np.array([2.0, 0.5]), np.array([-0.3, 0.1])
    nx, ny, k = unit(0.4), unit(2.0), 1.7
    hess_xy = 1j * k * kernel_dK_dny(x, y, ny, k) - kernel_Ktilde(x, y, nx, ny, k)
    hess_yx = 1j * k * kernel_dK_dny(y, x, nx, k) - kernel_Ktilde(y, x, ny, nx, k)
    assert hess_xy == pytest.approx(hess_yx, rel=1e-13)


def test_finite_difference_check_report():
    dev = finite_difference_check(n=50, seed=0)
    assert set(dev) == {"K", "dK_dny", "rhs", "Ktilde"}
    assert max(dev.values()) < 1e-6
