import numpy as np
import pytest
import scipy.sparse as sp
from hypothesis import given, settings, strategies as st

from nonlocal_helmholtz.driver import ProblemSpec, Annulus, build_system
from nonlocal_helmholtz.fem import FeSpace, assemble_local
from nonlocal_helmholtz.krylov import (
    ArnoldiBreakdown,
    IdentityPreconditioner,
    build_direct,
    build_ilu0,
    gmres,
    make_preconditioner,
)
from nonlocal_helmholtz.mesh import generate_annulus
from nonlocal_helmholtz.skyline import (
    SingularMatrixError,
    SkylineLU,
    bandwidth,
    profile_size,
    reverse_cuthill_mckee,
)


def rand_c(rng, n):
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


@pytest.fixture(scope="module")
def local_8_64():
    m = generate_annulus(1.0, 3.0, 8, 64)
    return assemble_local(FeSpace(m, 1), 1.0)


def test_identity_one_iteration():
    b = np.array([1.0, -2.0, 3.0j])
    x, rep = gmres(np.eye(3), b)
    assert rep.converged and rep.iterations == 1
    np.testing.assert_allclose(x, b)


def test_diagonal_two_iterations():
    x, rep = gmres(np.diag([2.0, 3.0]), np.array([2.0, 3.0]))
    assert rep.converged and rep.iterations <= 2
    np.testing.assert_allclose(x, [1.0, 1.0], rtol=1e-14)


def test_zero_rhs():
    x, rep = gmres(np.eye(4), np.zeros(4))
    assert rep.converged and rep.iterations == 0 and np.all(x == 0)


@pytest.mark.parametrize("restart", [200, 7])
def test_random_system_against_dense_lu(restart):
    rng = np.random.default_rng(0)
    n = 50
    a = 20 * np.eye(n) + rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    b = rand_c(rng, n)
    x, rep = gmres(a, b, rtol=1e-12, restart=restart)
    ref = np.linalg.solve(a, b)
    assert rep.converged
    assert np.linalg.norm(x - ref) <= 10 * 1e-12 * np.linalg.norm(ref) * np.linalg.cond(a)
    assert rep.residual_history[-1] <= 1e-12
    # the reported final residual is the true one
    true = np.linalg.norm(b - a @ x) / np.linalg.norm(b)
    assert abs(rep.residual_history[-1] - true) <= 10 * np.finfo(float).eps * np.linalg.cond(a)


def test_callable_and_linear_operator_inputs():
    from scipy.sparse.linalg import aslinearoperator

    a = sp.diags([4.0, 5.0, 6.0]).tocsr()
    b = np.ones(3)
    for op in (a, aslinearoperator(a), lambda v: a @ v):
        x, rep = gmres(op, b)
        np.testing.assert_allclose(x, 1 / np.array([4.0, 5.0, 6.0]))


def test_breakdown_distinct_from_nonconvergence():
    a = np.array([[0.0, 1.0], [0.0, 0.0]])
    with pytest.raises(ArnoldiBreakdown):
        gmres(a, np.array([1.0, 0.0]))
    rng = np.random.default_rng(5)
    n = 40
    hard = np.diag(np.linspace(1, 1e4, n)) + 0j
    x, rep = gmres(hard, rand_c(rng, n), restart=3, maxit=9)
    assert not rep.converged and rep.iterations == 9


def test_argument_checks():
    with pytest.raises(ValueError):
        gmres(np.eye(2), np.ones(2), rtol=0.0)
    with pytest.raises(ValueError):
        gmres(np.eye(2), np.ones(2), restart=0)
    with pytest.raises(ValueError):
        gmres(np.eye(3), np.ones(2))


def test_preconditioned_residual_is_the_test():
    rng = np.random.default_rng(7)
    n = 30
    a = sp.random(n, n, density=0.2, random_state=7) + 8 * sp.eye(n)
    a = a.tocsr().astype(complex)
    b = rand_c(rng, n)
    pc = build_ilu0(a)
    x, rep = gmres(a, b, pc, rtol=1e-10)
    pres = np.linalg.norm(pc.apply(b - a @ x)) / np.linalg.norm(pc.apply(b))
    assert rep.converged and pres <= 1e-10


def test_ilu0_diagonal_is_exact():
    d = sp.diags([2.0, -1.0 + 1j, 4.0]).tocsr()
    pc = build_ilu0(d)
    v = np.array([1.0, 2.0, 3.0])
    np.testing.assert_allclose(pc.apply(d @ v), v)


def test_ilu0_triangular_is_exact():
    rng = np.random.default_rng(1)
    t = sp.tril(sp.random(20, 20, density=0.3, random_state=1)) + 3 * sp.eye(20)
    t = t.tocsr()
    v = rand_c(rng, 20)
    np.testing.assert_allclose(build_ilu0(t).apply(t @ v), v, rtol=1e-12)


def test_ilu0_keeps_sparsity(local_8_64):
    pc = build_ilu0(local_8_64)
    f = pc.factors
    assert np.array_equal(f.indptr, local_8_64.indptr) and np.array_equal(f.indices, local_8_64.indices)


def test_ilu0_zero_pivot_names_row():
    a = sp.csr_matrix(np.array([[1.0, 1.0, 0.0], [1.0, 1.0, 0.0], [0.0, 0.0, 1.0]]))
    with pytest.raises(SingularMatrixError, match="row 1") as exc:
        build_ilu0(a)
    assert exc.value.row == 1


def test_ilu0_reduces_iterations(local_8_64):
    b = rand_c(np.random.default_rng(2), local_8_64.shape[0])
    _, plain = gmres(local_8_64, b)
    _, ilu = gmres(local_8_64, b, build_ilu0(local_8_64))
    assert ilu.converged and plain.converged
    assert ilu.iterations < plain.iterations


def test_direct_inverts(local_8_64):
    rng = np.random.default_rng(3)
    pc = build_direct(local_8_64)
    for _ in range(3):
        x = rand_c(rng, local_8_64.shape[0])
        y = pc.apply(local_8_64 @ x)
        assert np.linalg.norm(y - x) <= 1e-10 * np.linalg.norm(x)


def test_rcm_reduces_bandwidth_and_profile():
    rows = []
    for n in (4, 8, 16):
        a = assemble_local(FeSpace(generate_annulus(1.0, 3.0, n, 8 * n), 1), 1.0)
        perm = reverse_cuthill_mckee(a)
        rows.append((n, bandwidth(a), bandwidth(a, perm), profile_size(a), profile_size(a, perm)))
        assert bandwidth(a, perm) < bandwidth(a)
        assert profile_size(a, perm) < profile_size(a)
    print("\n n  natural-bw  rcm-bw  natural-profile  rcm-profile")
    for r in rows:
        print(" %2d  %10d  %6d  %15d  %11d" % r)


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 40), st.floats(0.05, 0.5), st.integers(0, 10**6))
def test_rcm_is_a_permutation(n, density, seed):
    a = sp.random(n, n, density=density, random_state=seed) + sp.eye(n)
    perm = reverse_cuthill_mckee(a)
    np.testing.assert_array_equal(np.sort(perm), np.arange(n))


@settings(max_examples=25, deadline=None)
@given(st.integers(2, 30), st.integers(0, 10**6))
def test_skyline_matches_dense_solve(n, seed):
    rng = np.random.default_rng(seed)
    a = sp.random(n, n, density=0.3, random_state=seed)
    a = (a + a.T + n * sp.eye(n)).tocsr().astype(complex)
    b = rand_c(rng, n)
    np.testing.assert_allclose(SkylineLU(a).solve(b), np.linalg.solve(a.toarray(), b), rtol=1e-10, atol=1e-12)


def test_direct_structurally_singular():
    a = sp.csr_matrix(np.array([[1.0, 2.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 3.0]]))
    with pytest.raises(SingularMatrixError):
        build_direct(a)


def test_direct_guards(monkeypatch, local_8_64):
    import nonlocal_helmholtz.krylov as kr

    monkeypatch.setattr(kr, "MAX_DIRECT_DOFS", 100)
    with pytest.raises(MemoryError, match="limited to 100"):
        build_direct(local_8_64)
    with pytest.raises(MemoryError, match="profile"):
        SkylineLU(local_8_64, max_entries=1000)


def test_make_preconditioner_names(local_8_64):
    assert isinstance(make_preconditioner("none", local_8_64), IdentityPreconditioner)
    with pytest.raises(ValueError, match="none, ilu0 or direct"):
        make_preconditioner("amg", local_8_64)


def test_full_system_operator_linear():
    s = build_system(ProblemSpec(geometry=Annulus(1.0, 3.0, 4, 32)))
    rng = np.random.default_rng(4)
    x, y = rand_c(rng, s.shape[0]), rand_c(rng, s.shape[0])
    al, be = 1.5 - 0.5j, -0.25 + 2j
    lhs = s.matvec(al * x + be * y)
    rhs = al * s.matvec(x) + be * s.matvec(y)
    assert np.linalg.norm(lhs - rhs) <= 1e-13 * np.linalg.norm(lhs)


def test_end_to_end_direct_annulus_8_64():
    s = build_system(ProblemSpec(geometry=Annulus(1.0, 3.0, 8, 64)))
    x, rep = gmres(s, s.rhs, build_direct(s.local), rtol=1e-12)
    assert rep.converged and rep.iterations <= 30


@pytest.mark.parametrize("kappa", [1.0, 10.0])
def test_direct_counts_bounded_for_generic_rhs(kappa):
    # a random right-hand side breaks the rotational symmetry of the manufactured data
    rng = np.random.default_rng(11)
    counts = []
    for level in range(3):
        s = build_system(ProblemSpec(kappa=kappa, level=level))
        _, rep = gmres(s, rand_c(rng, s.shape[0]), make_preconditioner("direct", s.local))
        assert rep.converged
        counts.append(rep.iterations)
    assert max(counts) <= 15
    assert all(b - a <= 2 for a, b in zip(counts, counts[1:]))
