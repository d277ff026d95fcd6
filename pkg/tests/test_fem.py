import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad

from nonlocal_helmholtz.fem import (
    FeFunction,
    FeSpace,
    assemble_local,
    assemble_neumann_rhs,
    boundary_mass_matrix,
    evaluate,
    gauss_legendre_01,
    h1_error,
    interpolate,
    l2_error,
    mass_matrix,
    stiffness_matrix,
    triangle_quadrature,
)
from nonlocal_helmholtz.mesh import GAMMA, SIGMA, generate_annulus, generate_square_frame, refine_uniform


@pytest.fixture(scope="module")
def frame():
    return generate_square_frame(1.0, 2.0, 4)


def test_unsupported_degree_message(frame):
    with pytest.raises(ValueError, match="supported degrees are 1 and 2"):
        FeSpace(frame, 3)


def test_dof_counts(frame):
    assert FeSpace(frame, 1).ndofs == frame.n_vertices
    assert FeSpace(frame, 2).ndofs == frame.n_vertices + len(frame.edges[0])


def test_fe_function_length_check(frame):
    with pytest.raises(ValueError):
        FeFunction(FeSpace(frame, 1), np.zeros(3))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 6), st.integers(0, 6))
def test_triangle_quadrature_exact(a, b):
    pts, w = triangle_quadrature(a + b)
    exact = math.factorial(a) * math.factorial(b) / math.factorial(a + b + 2)
    assert np.sum(w * pts[:, 0] ** a * pts[:, 1] ** b) == pytest.approx(exact, rel=1e-13)


def test_gauss_legendre_01():
    s, w = gauss_legendre_01(5)
    assert w.sum() == pytest.approx(1.0)
    assert np.sum(w * s**9) == pytest.approx(0.1)


@pytest.mark.parametrize("degree", [1, 2])
def test_matrix_identities(frame, degree):
    V = FeSpace(frame, degree)
    one = np.ones(V.ndofs)
    K = stiffness_matrix(V)
    M = mass_matrix(V)
    assert np.abs(K @ one).max() < 1e-13
    assert one @ M @ one == pytest.approx(12.0)
    assert one @ boundary_mass_matrix(V, SIGMA) @ one == pytest.approx(16.0)
    assert one @ boundary_mass_matrix(V, GAMMA) @ one == pytest.approx(8.0)
    # (grad x, grad x) is the area, (x, x) the second moment
    x = V.dof_coords[:, 0]
    assert x @ K @ x == pytest.approx(12.0)
    assert x @ M @ x == pytest.approx(64 / 3 - 4 / 3)


@pytest.mark.parametrize("degree", [1, 2])
def test_local_matrix_structure(frame, degree):
    A = assemble_local(FeSpace(frame, degree), 1.5)
    assert A.has_canonical_format and A.has_sorted_indices
    assert abs(A - A.T).max() <= 1e-14 * abs(A).max()
    with pytest.raises(ValueError):
        assemble_local(FeSpace(frame, degree), -1.0)


@pytest.mark.parametrize("degree, func", [(1, lambda p: 2 * p[:, 0] - p[:, 1] + 0.5),
                                          (2, lambda p: p[:, 0] ** 2 - 3 * p[:, 0] * p[:, 1] + p[:, 1])])
def test_interpolation_reproduces_polynomials(frame, degree, func):
    uh = interpolate(FeSpace(frame, degree), func)
    assert l2_error(uh, func) < 1e-13
    for p in ([1.5, 0.2], [-1.7, -1.9], [0.3, 1.4]):
        assert evaluate(uh, p) == pytest.approx(func(np.array([p]))[0], abs=1e-13)


def test_h1_error_of_exact_linear(frame):
    u = lambda p: 3 * p[:, 0] + p[:, 1]
    grad = lambda p: np.tile([3.0, 1.0], (len(p), 1))
    assert h1_error(interpolate(FeSpace(frame, 1), u), u, grad) < 1e-12


@pytest.mark.parametrize("degree, ratio", [(1, 4.0), (2, 8.0)])
def test_interpolation_rates(degree, ratio):
    u = lambda p: np.sin(p[:, 0]) * np.cos(0.7 * p[:, 1])
    m = generate_square_frame(1.0, 2.0, 8)
    e1 = l2_error(interpolate(FeSpace(m, degree), u), u)
    e2 = l2_error(interpolate(FeSpace(refine_uniform(m), degree), u), u)
    assert e1 / e2 == pytest.approx(ratio, rel=0.1)


def test_evaluate_outside(frame):
    uh = interpolate(FeSpace(frame, 1), lambda p: p[:, 0])
    with pytest.raises(ValueError):
        evaluate(uh, [0.0, 0.0])


def _facet_oracle(space, f):
    """Load vector by adaptive quadrature along each GAMMA facet."""
    m = space.mesh
    out = np.zeros(space.ndofs, dtype=complex)
    geo = m.geometry(GAMMA)
    shapes = {
        1: [lambda s: 1 - s, lambda s: s],
        2: [lambda s: (1 - s) * (1 - 2 * s), lambda s: s * (2 * s - 1), lambda s: 4 * s * (1 - s)],
    }[space.degree]
    for k, fi in enumerate(m.facets_of(GAMMA)):
        a, b = m.vertices[m.facets[fi]]
        n = geo.unit_normal[k]
        for phi, dof in zip(shapes, space.facet_dofs[fi]):
            def g(s, part):
                val = f((a + s * (b - a))[None], n[None])[0] * phi(s)
                return val.real if part == 0 else val.imag
            re = quad(g, 0, 1, args=(0,), epsabs=1e-14)[0]
            im = quad(g, 0, 1, args=(1,), epsabs=1e-14)[0]
            out[dof] += geo.length[k] * (re + 1j * im)
    return out


@pytest.mark.parametrize("degree", [1, 2])
def test_neumann_rhs_against_adaptive_quadrature(degree):
    m = generate_annulus(1.0, 3.0, 1, 12)
    V = FeSpace(m, degree)

    def f(p, n):
        return np.exp(1j * p[:, 0]) * (n[:, 0] + 2 * n[:, 1]) + p[:, 1] ** 3

    got = assemble_neumann_rhs(V, f, GAMMA)
    np.testing.assert_allclose(got, _facet_oracle(V, f), atol=1e-13)
    assert np.all(got[np.setdiff1d(np.arange(V.ndofs), V.boundary_dofs(GAMMA))] == 0)
