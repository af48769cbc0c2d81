"""Dieudonné metric solutions and Dyson factorization, cross-checked with
a vectorized Kronecker-product oracle for the solution space."""

import numpy as np
import pytest

from epspect.lattice import ModelParams, build_hamiltonian
from epspect.metric import (
    DegenerateSpectrum,
    NoPositiveSolution,
    NotPositiveDefinite,
    dyson_factor,
    metric_to_json,
    reality_domain_probe,
    solve_dieudonne,
)


def kronecker_kernel_dim(h):
    """Independent count of Hermitian solutions of H†Θ = ΘH via the
    complex Kronecker vectorization vec(AΘ - ΘB) = (I⊗A - Bᵀ⊗I)vec(Θ)."""
    n = h.shape[0]
    op = np.kron(np.eye(n), h.conj().T) - np.kron(h.T, np.eye(n))
    s = np.linalg.svd(op, compute_uv=False)
    full_kernel = int(np.sum(s < 1e-10 * max(s[0], 1.0)))
    return full_kernel


def sample_h(n=4, u=0.1, r=0.6):
    return build_hamiltonian(ModelParams(n, "shifted", u=u, r=r))


def test_solution_space_matches_kronecker_oracle():
    for n, u, r in ((2, 0.0, 0.5), (3, 0.05, 0.7), (4, 0.1, 0.6), (5, 0.0, 1.2)):
        h = build_hamiltonian(ModelParams(n, "shifted", u=u, r=r))
        sol = solve_dieudonne(h)
        # simple real spectrum: the complex kernel is n-dimensional and all
        # of it is reachable from Hermitian solutions
        assert len(sol.basis) == n
        assert kronecker_kernel_dim(h) == n


def test_representative_properties():
    h = sample_h()
    sol = solve_dieudonne(h)
    th = sol.representative
    assert np.allclose(th, th.conj().T)
    assert sol.eigen_floor > 0
    assert np.trace(th).real == pytest.approx(h.shape[0], abs=1e-10)
    rel = np.linalg.norm(h.conj().T @ th - th @ h) / np.linalg.norm(h)
    assert rel < 1e-12


def test_basis_is_hermitian_and_orthonormal():
    sol = solve_dieudonne(sample_h())
    for i, b in enumerate(sol.basis):
        assert np.allclose(b, b.conj().T, atol=1e-12)
        for jdx, c in enumerate(sol.basis):
            ip = np.trace(b.conj().T @ c).real
            assert ip == pytest.approx(1.0 if i == jdx else 0.0, abs=1e-10)


def test_dyson_factor_both_kinds():
    th = solve_dieudonne(sample_h()).representative
    for kind in ("hermitian_sqrt", "triangular"):
        om = dyson_factor(th, kind=kind)
        assert np.linalg.norm(om.omega.conj().T @ om.omega - th) < 1e-12
    with pytest.raises(ValueError):
        dyson_factor(th, kind="nope")


def test_dyson_map_hermitizes():
    h = sample_h()
    om = dyson_factor(solve_dieudonne(h).representative).omega
    g = om @ h @ np.linalg.inv(om)
    assert np.linalg.norm(g - g.conj().T) < 1e-10


def test_dyson_rejects_indefinite():
    with pytest.raises(NotPositiveDefinite):
        dyson_factor(np.diag([1.0, -1.0]).astype(complex))


def test_complex_spectrum_raises_with_partial_solution():
    h = build_hamiltonian(ModelParams(5, "shifted", u=0.5, r=0.0))
    with pytest.raises(NoPositiveSolution) as exc:
        solve_dieudonne(h)
    assert exc.value.solution is not None
    assert len(exc.value.solution.basis) >= 1


def test_near_degenerate_spectrum_raises():
    h = np.diag([0.0, 1e-9, 1.0]).astype(complex)
    with pytest.raises(DegenerateSpectrum):
        solve_dieudonne(h)


def test_hermitian_case_identity_is_a_solution():
    h = build_hamiltonian(ModelParams(4, "shifted", u=0.3, r=1.5))
    sol = solve_dieudonne(h)
    # the identity must lie in the span for a Hermitian H
    eye = np.eye(4)
    proj = sum(np.trace(b.conj().T @ eye).real * b for b in sol.basis)
    assert np.linalg.norm(proj - eye) < 1e-10


def test_reality_domain_probe():
    flags = reality_domain_probe(5, [(0.0, 0.5), (0.5, 0.0), (0.0, 1.5)])
    assert flags == [True, False, True]


def test_metric_to_json_packs_triangle():
    sol = solve_dieudonne(sample_h(n=3))
    out = metric_to_json(sol)
    assert len(out["representative"]) == 6  # 3*(3+1)/2 entries
    assert out["eigen_floor"] > 0
