"""Hamiltonian builders for the boundary-controlled 1D lattice model.

The matrices are tridiagonal with all hopping entries -1 and a complex
corner parameter z (conjugated at the opposite corner).  Two diagonal
conventions are supported: "shifted" (inner diagonal 0, corners -z, -z*)
and "unshifted" (add 2 to every diagonal entry).  The corner parameter can
be given directly, through the (u, r) parametrization
z = -u + i*sqrt(1 - r^2), or through discrete complex Robin boundary data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np


class DegenerateBoundary(ValueError):
    """Robin elimination denominator vanishes: (alpha + i*beta)*h == -i."""


@dataclass(frozen=True)
class ModelParams:
    """Dimension plus boundary parameter; the single source of truth for
    which Hamiltonian is meant."""

    n: int
    convention: str = "shifted"  # "shifted" | "unshifted"
    u: Optional[float] = None
    r: Optional[float] = None
    z: Optional[complex] = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("dimension must be >= 2")
        if self.convention not in ("shifted", "unshifted"):
            raise ValueError(f"unknown convention {self.convention!r}")
        has_ur = self.u is not None and self.r is not None
        if has_ur == (self.z is not None):
            raise ValueError("give either (u, r) or z, not both")

    @property
    def corner(self) -> complex:
        """The complex corner parameter z."""
        if self.z is not None:
            return complex(self.z)
        r2 = self.r * self.r
        if r2 <= 1.0:
            return complex(-self.u, math.sqrt(1.0 - r2))
        # principal square root continuation: i*sqrt(1-r^2) = -sqrt(r^2-1)
        return complex(-self.u - math.sqrt(r2 - 1.0), 0.0)

    @property
    def shift(self) -> float:
        """Real shift u = -Re z."""
        return self.u if self.u is not None else -self.corner.real

    def with_z(self) -> "ModelParams":
        return ModelParams(self.n, self.convention, z=self.corner)

    def with_ur(self) -> "ModelParams":
        """Convert to the (u, r) form; r is reported non-negative.

        Real z is mapped to the boundary r = 1 (the u-degree of freedom
        absorbs the real part); |Im z| > 1 has no real-r preimage.
        """
        if self.u is not None:
            return self
        z = complex(self.z)
        r2 = 1.0 - z.imag * z.imag
        if r2 < 0:
            raise ValueError("corner with |Im z| > 1 has no (u, r) form")
        return ModelParams(self.n, self.convention, u=-z.real, r=math.sqrt(r2))

    def to_json(self) -> dict:
        if self.u is not None:
            return {
                "n": self.n,
                "convention": self.convention,
                "u": self.u,
                "r": self.r,
            }
        z = complex(self.z)
        return {
            "n": self.n,
            "convention": self.convention,
            "z_re": z.real,
            "z_im": z.imag,
        }

    @classmethod
    def from_json(cls, data: dict) -> "ModelParams":
        conv = data.get("convention", "shifted")
        if "z_re" in data:
            return cls(
                int(data["n"]), conv, z=complex(data["z_re"], data["z_im"])
            )
        return cls(int(data["n"]), conv, u=float(data["u"]), r=float(data["r"]))


@dataclass(frozen=True)
class RobinData:
    """Discrete complex Robin boundary data (alpha, beta, lattice step h)."""

    alpha: float
    beta: float
    h: float

    def __post_init__(self):
        if self.h <= 0:
            raise ValueError("lattice spacing must be positive")


def build_hamiltonian(p: ModelParams) -> np.ndarray:
    """Dense complex matrix for the given parameters.

    Shifted convention: diag(-z, 0, ..., 0, -z*), off-diagonals -1;
    unshifted adds 2 to every diagonal entry.
    """
    n = p.n
    z = p.corner
    h = np.zeros((n, n), dtype=complex)
    idx = np.arange(n - 1)
    h[idx, idx + 1] = -1.0
    h[idx + 1, idx] = -1.0
    h[0, 0] = -z
    h[-1, -1] = -z.conjugate()
    if p.convention == "unshifted":
        h += 2.0 * np.eye(n)
    return h


def hermiticity_flag(p: ModelParams) -> str:
    """"hermitian" iff r**2 >= 1 (real corner), else "non-hermitian"."""
    if p.r is None:
        raise ValueError("hermiticity_flag requires the (u, r) form")
    return "hermitian" if p.r * p.r >= 1.0 else "non-hermitian"


def robin_to_z(d: RobinData) -> complex:
    """Corner parameter induced by discrete Robin data.

    Eliminating the boundary value from the difference equation at the first
    interior site gives z = i / ((alpha + i*beta)*h + i); the right endpoint
    produces the conjugate corner automatically.
    """
    denom = complex(d.alpha, d.beta) * d.h + 1j
    if abs(denom) < 1e-14:
        raise DegenerateBoundary(
            f"(alpha + i beta)*h = -i at alpha={d.alpha}, beta={d.beta}, h={d.h}"
        )
    return 1j / denom


def dirichlet_spectrum(n: int) -> list:
    """Eigenvalues 2 - 2*cos(k*pi/(n+1)) of the Dirichlet chain, ascending."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    return [2.0 - 2.0 * math.cos(k * math.pi / (n + 1)) for k in range(1, n + 1)]


def matrix_to_json(h: np.ndarray) -> list:
    """Row-major list of [re, im] pairs."""
    return [[[v.real, v.imag] for v in row] for row in np.asarray(h, complex)]
