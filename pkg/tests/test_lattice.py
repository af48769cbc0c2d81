"""Hamiltonian construction, corner parametrization, and the Robin
boundary mapping, checked against an independent generalized-eigenvalue
oracle for the boundary elimination."""

import math
import random

import numpy as np
import pytest
import scipy.linalg
import scipy.optimize

from epspect.lattice import (
    DegenerateBoundary,
    ModelParams,
    RobinData,
    build_hamiltonian,
    dirichlet_spectrum,
    hermiticity_flag,
    robin_to_z,
)


def test_corner_conjugacy_nonhermitian():
    p = ModelParams(n=5, convention="shifted", u=0.3, r=0.4)
    h = build_hamiltonian(p)
    assert h[0, 0] == np.conj(h[-1, -1])
    assert abs(h[0, 0] - (0.3 - 1j * math.sqrt(1 - 0.16))) < 1e-15
    assert hermiticity_flag(p) == "non-hermitian"


def test_real_corner_is_hermitian():
    p = ModelParams(n=4, convention="shifted", u=0.2, r=1.5)
    h = build_hamiltonian(p)
    assert np.allclose(h, h.conj().T)
    assert hermiticity_flag(p) == "hermitian"


def test_shifted_unshifted_differ_by_two():
    ps = ModelParams(n=6, convention="shifted", u=0.1, r=0.5)
    pu = ModelParams(n=6, convention="unshifted", u=0.1, r=0.5)
    hs = build_hamiltonian(ps)
    hu = build_hamiltonian(pu)
    assert np.allclose(hu, hs + 2.0 * np.eye(6))
    ws = np.sort_complex(np.linalg.eigvals(hs))
    wu = np.sort_complex(np.linalg.eigvals(hu))
    assert np.allclose(wu, ws + 2.0, atol=1e-12)


def _robin_oracle_spectrum(n, alpha, beta, h_step):
    """Generalized eigenproblem on the extended chain including the
    boundary sites, with the Robin rows carrying no eigenvalue weight."""
    size = n + 2
    a = np.zeros((size, size), dtype=complex)
    b = np.zeros((size, size), dtype=complex)
    for k in range(1, n + 1):
        a[k, k - 1] = -1.0
        a[k, k] = 2.0
        a[k, k + 1] = -1.0
        b[k, k] = 1.0
    # psi_0 = i/(alpha + i beta) * (psi_1 - psi_0)/h
    a[0, 0] = complex(alpha, beta) * h_step + 1j
    a[0, 1] = -1j
    # psi_{n+1} = i/(alpha - i beta) * (psi_{n+1} - psi_n)/h
    a[size - 1, size - 1] = complex(alpha, -beta) * h_step - 1j
    a[size - 1, size - 2] = 1j
    w = scipy.linalg.eig(a, b, right=False)
    finite = sorted(
        (x for x in w if np.isfinite(x)), key=lambda x: (x.real, x.imag)
    )
    return np.array(finite)


def test_robin_mapping_against_elimination_oracle():
    rng = random.Random(2024)
    for _ in range(20):
        n = rng.randint(2, 7)
        alpha = rng.uniform(-3, 3)
        beta = rng.uniform(-3, 3)
        h_step = rng.uniform(0.1, 2.0)
        if abs(complex(alpha, beta) * h_step + 1j) < 1e-6:
            continue
        z = robin_to_z(RobinData(alpha=alpha, beta=beta, h=h_step))
        p = ModelParams(n=n, convention="unshifted", z=z)
        direct = np.array(
            sorted(np.linalg.eigvals(build_hamiltonian(p)),
                   key=lambda x: (x.real, x.imag))
        )
        oracle = _robin_oracle_spectrum(n, alpha, beta, h_step)
        assert len(oracle) == n
        # optimal matching: sort ties between conjugate partners are benign
        cost = np.abs(direct[:, None] - oracle[None, :])
        rows, cols = scipy.optimize.linear_sum_assignment(cost)
        assert cost[rows, cols].max() < 1e-12 * max(1.0, np.max(np.abs(oracle)))


def test_robin_dirichlet_limit():
    # alpha -> infinity clamps the boundary values: z -> 0 and the
    # unshifted chain becomes the Dirichlet discrete Laplacian
    z = robin_to_z(RobinData(alpha=1e13, beta=0.7, h=1.0))
    assert abs(z) < 1e-12
    p = ModelParams(n=6, convention="unshifted", z=z)
    w = np.sort(np.linalg.eigvals(build_hamiltonian(p)).real)
    ref = dirichlet_spectrum(6)
    assert np.max(np.abs(w - np.array(ref))) < 1e-10


def test_robin_degenerate_boundary_raises():
    with pytest.raises(DegenerateBoundary):
        robin_to_z(RobinData(alpha=0.0, beta=-2.0, h=0.5))


def test_model_params_json_round_trip():
    p = ModelParams(n=5, convention="shifted", u=0.25, r=0.5)
    q = ModelParams.from_json(p.to_json())
    assert q == p
    pz = ModelParams(n=3, convention="unshifted", z=0.1 + 0.2j)
    qz = ModelParams.from_json(pz.to_json())
    assert qz.n == 3 and abs(qz.corner - pz.corner) < 1e-15


def test_corner_formula_and_branches():
    p = ModelParams(n=3, convention="shifted", u=0.5, r=0.0)
    assert abs(p.corner - (-0.5 + 1j)) < 1e-15
    # r^2 > 1 continues to the real branch
    p2 = ModelParams(n=3, convention="shifted", u=0.0, r=2.0)
    assert abs(p2.corner.imag) < 1e-15
    assert abs(p2.corner - (-math.sqrt(3))) < 1e-12


def test_dirichlet_spectrum_values():
    vals = dirichlet_spectrum(3)
    ref = [2 - 2 * math.cos(k * math.pi / 4) for k in (1, 2, 3)]
    assert vals == pytest.approx(ref, abs=1e-15)
