"""Inner-product metrics: kernel of the quasi-Hermiticity constraint
H†Θ = ΘH, a positive-definite representative, and Dyson factorization
Θ = Ω†Ω.

The constraint is vectorized over an isometric real parametrization of the
Hermitian matrices (real diagonal, scaled real/imaginary upper-triangle
parts), so the kernel dimension count is exact and the returned basis is
Frobenius-orthonormal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np


class NoPositiveSolution(RuntimeError):
    """Spectrum not entirely real: no positive-definite metric exists.
    Carries the Hermitian solution basis that does exist."""

    def __init__(self, message, solution=None):
        super().__init__(message)
        self.solution = solution


class DegenerateSpectrum(RuntimeError):
    """Degenerate spectrum (an EP or a crossing): positivity impossible;
    the kernel structure is still reported."""

    def __init__(self, message, solution=None):
        super().__init__(message)
        self.solution = solution


class NotPositiveDefinite(ValueError):
    """Dyson factorization requested for a non-positive matrix."""


@dataclass
class MetricSolution:
    """Hermitian solutions of the quasi-Hermiticity constraint."""

    basis: List[np.ndarray]
    representative: Optional[np.ndarray]
    eigen_floor: Optional[float]
    residual: Optional[float]


@dataclass
class DysonFactor:
    omega: np.ndarray
    kind: str  # "hermitian_sqrt" | "triangular"


def _hermitian_basis_elements(n: int):
    """Orthonormal (Frobenius) basis of the real space of Hermitian n x n
    matrices, n^2 elements."""
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    out = []
    for i in range(n):
        e = np.zeros((n, n), dtype=complex)
        e[i, i] = 1.0
        out.append(e)
    for i in range(n):
        for j in range(i + 1, n):
            e = np.zeros((n, n), dtype=complex)
            e[i, j] = inv_sqrt2
            e[j, i] = inv_sqrt2
            out.append(e)
            e = np.zeros((n, n), dtype=complex)
            e[i, j] = 1j * inv_sqrt2
            e[j, i] = -1j * inv_sqrt2
            out.append(e)
    return out


def solve_dieudonne(
    h: np.ndarray,
    spectrum_tol: float = 1e-9,
    kernel_tol: float = 1e-10,
) -> MetricSolution:
    """Solve H†Θ = ΘH for Hermitian Θ.

    Returns a Frobenius-orthonormal real basis of all Hermitian solutions
    plus a positive-definite representative (sum of left-eigenvector
    projectors with unit weights, projected back onto the kernel and
    rescaled to trace n).  Raises NoPositiveSolution / DegenerateSpectrum,
    with the basis attached, when the spectrum forbids positivity.
    """
    h = np.asarray(h, dtype=complex)
    n = h.shape[0]
    hdag = h.conj().T
    elements = _hermitian_basis_elements(n)
    columns = []
    for b in elements:
        c = hdag @ b - b @ h
        columns.append(np.concatenate([c.real.ravel(), c.imag.ravel()]))
    system = np.column_stack(columns)  # (2n^2) x (n^2), real
    _, s, vt = np.linalg.svd(system)
    smax = s[0] if len(s) else 0.0
    null_mask = np.concatenate(
        [s <= kernel_tol * max(smax, 1.0), np.ones(vt.shape[0] - len(s), bool)]
    )
    basis = []
    for row in vt[null_mask]:
        b = sum(coef * e for coef, e in zip(row, elements))
        basis.append(b)

    eigvals = np.linalg.eigvals(h)
    solution = MetricSolution(
        basis=basis, representative=None, eigen_floor=None, residual=None
    )
    if np.max(np.abs(eigvals.imag)) > spectrum_tol:
        raise NoPositiveSolution(
            "spectrum is not entirely real; no positive metric exists",
            solution=solution,
        )
    gaps = [
        abs(a - b)
        for i, a in enumerate(eigvals)
        for b in eigvals[i + 1 :]
    ]
    if gaps and min(gaps) < 1e-8:
        raise DegenerateSpectrum(
            "degenerate spectrum: metric positivity breaks down here",
            solution=solution,
        )

    # representative: unit-weight sum of left-eigenvector projectors
    wl, vl = np.linalg.eig(hdag)
    theta = np.zeros((n, n), dtype=complex)
    for k in range(n):
        phi = vl[:, k] / np.linalg.norm(vl[:, k])
        theta += np.outer(phi, phi.conj())
    # project onto the solution span so the constraint holds to kernel
    # accuracy, then symmetrize and normalize the trace
    proj = np.zeros_like(theta)
    for b in basis:
        proj += np.real(np.trace(b.conj().T @ theta)) * b
    theta = (proj + proj.conj().T) / 2.0
    theta *= n / np.trace(theta).real
    floor = float(np.min(np.linalg.eigvalsh(theta)))
    if floor <= 0:
        raise NoPositiveSolution(
            "projector combination failed to be positive definite",
            solution=solution,
        )
    solution.representative = theta
    solution.eigen_floor = floor
    solution.residual = float(np.linalg.norm(hdag @ theta - theta @ h))
    return solution


def dyson_factor(theta: np.ndarray, kind: str = "hermitian_sqrt") -> DysonFactor:
    """Invertible Ω with Θ = Ω†Ω: Hermitian square root (default) or the
    upper-triangular Cholesky factor."""
    theta = np.asarray(theta, dtype=complex)
    w, v = np.linalg.eigh(theta)
    if np.min(w) <= 0:
        raise NotPositiveDefinite(f"smallest eigenvalue {np.min(w):.3e} <= 0")
    if kind == "hermitian_sqrt":
        omega = (v * np.sqrt(w)) @ v.conj().T
    elif kind == "triangular":
        omega = np.linalg.cholesky(theta).conj().T
    else:
        raise ValueError(f"unknown factor kind {kind!r}")
    return DysonFactor(omega=omega, kind=kind)


def reality_domain_probe(
    n: int,
    points,
    im_tol: float = 1e-9,
    gap_tol: float = 1e-9,
) -> List[bool]:
    """Flag each (u, r) point: True iff the full spectrum is real (within
    im_tol) and pairwise distinct (min gap above gap_tol)."""
    from .lattice import ModelParams, build_hamiltonian

    flags = []
    for u, r in points:
        h = build_hamiltonian(ModelParams(n, "shifted", u=float(u), r=float(r)))
        w = np.linalg.eigvals(h)
        real_ok = bool(np.max(np.abs(w.imag)) <= im_tol)
        gaps = [abs(a - b) for i, a in enumerate(w) for b in w[i + 1 :]]
        distinct = not gaps or min(gaps) > gap_tol
        flags.append(real_ok and distinct)
    return flags


def metric_to_json(solution: MetricSolution) -> dict:
    """Basis and representative as packed lower-triangle complex arrays."""

    def pack(m):
        return [
            [m[i, j].real, m[i, j].imag]
            for i in range(m.shape[0])
            for j in range(i + 1)
        ]

    out = {"basis": [pack(b) for b in solution.basis]}
    if solution.representative is not None:
        out["representative"] = pack(solution.representative)
        out["eigen_floor"] = solution.eigen_floor
        out["residual"] = solution.residual
    return out
