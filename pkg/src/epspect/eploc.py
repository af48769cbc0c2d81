"""Localization and certification of exceptional points on the r = 0 slice.

Candidate shifts are the real roots of the exact discriminant of the
secular polynomial with respect to the energy; each candidate is refined by
a two-dimensional Newton iteration on (P, dP/dE) and certified by building
an explicit Jordan chain for the defective eigenvalue.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

import numpy as np

from .exactpoly import (
    RatPoly,
    RootBox,
    complex_roots,
    isolate_real_roots,
    resultant,
)
from .lattice import ModelParams, build_hamiltonian
from .secular import secular_poly

DEFAULT_IM_TOL = 1e-9


class NoRepeatedRoot(RuntimeError):
    """A discriminant root turned out numerically spurious."""


class Diagonalizable(RuntimeError):
    """Geometric multiplicity equals algebraic: no Jordan chain exists."""


class HigherOrderEP(RuntimeError):
    """Algebraic multiplicity exceeds 2: outside the pairwise regime."""


class BorderlineAmbiguity(RuntimeError):
    """An eigenvalue's imaginary part sits too close to the reality tolerance."""


class DegenerateDiscriminant(RuntimeError):
    """The discriminant vanishes identically (n = 2): every shift carries the
    defective eigenvalue E = u."""


@dataclass
class DiscriminantProfile:
    n: int
    disc_u: RatPoly
    real_roots: List[RootBox]

    @property
    def identically_zero(self) -> bool:
        return not self.disc_u


@dataclass
class EPCertificate:
    """Certified pairwise exceptional point of the r = 0 family."""

    n: int
    u_star: float
    e_star: complex
    u_box: Optional[RootBox]
    algebraic_multiplicity: int
    geometric_multiplicity: int
    q: np.ndarray
    j: np.ndarray
    residual: float
    q_condition: float

    @property
    def is_central(self) -> bool:
        return self.u_star == 0.0 and self.e_star == 0.0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "u_star": self.u_star,
            "e_star": [self.e_star.real, self.e_star.imag],
            "alg_mult": self.algebraic_multiplicity,
            "geo_mult": self.geometric_multiplicity,
            "residual": self.residual,
            "jordan": {
                "q": [[[v.real, v.imag] for v in row] for row in self.q],
                "j": [[[v.real, v.imag] for v in row] for row in self.j],
                "q_condition": self.q_condition,
            },
        }


def discriminant_in_E(n: int) -> DiscriminantProfile:
    """Exact discriminant of the secular polynomial over the shift u at
    r = 0, with isolated real roots (the candidate EP shifts)."""
    sec = secular_poly(n, u=None, r2=Fraction(0))
    disc = resultant(sec.poly, sec.poly.derivative(), "E")
    if not disc:
        return DiscriminantProfile(n=n, disc_u=disc, real_roots=[])
    return DiscriminantProfile(
        n=n, disc_u=disc, real_roots=isolate_real_roots(disc)
    )


def _bivariate_evaluator(n: int):
    """Float evaluators for P, P_E, P_u, P_EE, P_Eu on the r = 0 slice."""
    sec = secular_poly(n, u=None, r2=Fraction(0))
    p = sec.poly

    def du(poly):
        return RatPoly(
            (
                c.derivative() if isinstance(c, RatPoly) else Fraction(0)
                for c in poly.coeffs
            ),
            "E",
        )

    polys = {
        "p": p,
        "pe": p.derivative(),
        "pu": du(p),
        "pee": p.derivative().derivative(),
        "peu": du(p.derivative()),
    }

    def ev(name, u, e):
        acc = 0.0 + 0.0j
        for c in reversed(polys[name].coeffs):
            cv = complex(c(Fraction(u))) if isinstance(c, RatPoly) else complex(c)
            acc = acc * e + cv
        return acc

    return ev


def _refine_double_root(ev, u0: float, e0: complex, tol=1e-14, iters=60):
    """2D Newton on F = (P, P_E) from a candidate (u, E)."""
    u, e = u0, complex(e0)
    for _ in range(iters):
        f1 = ev("p", u, e)
        f2 = ev("pe", u, e)
        j11 = ev("pu", u, e)
        j12 = ev("pe", u, e)
        j21 = ev("peu", u, e)
        j22 = ev("pee", u, e)
        det = j11 * j22 - j12 * j21
        if abs(det) < 1e-14:
            break
        dup = (f1 * j22 - f2 * j12) / det
        dep = (f2 * j11 - f1 * j21) / det
        u = u - dup.real
        e = e - dep
        if abs(dup) + abs(dep) < tol:
            break
    return u, e


def locate_eps(n: int, tol: float = 1e-12) -> List[EPCertificate]:
    """All certified pairwise EPs of the r = 0 family, sorted by shift.

    Every real root of the exact discriminant is refined and certified via
    an explicit Jordan chain; for even n this includes the central merger at
    (u, E) = (0, 0).  Spurious candidates raise NoRepeatedRoot rather than
    being dropped silently.
    """
    if n == 2:
        raise DegenerateDiscriminant(
            "the 2-site discriminant vanishes identically: defective "
            "eigenvalue E = u at every shift"
        )
    if n < 2:
        raise ValueError("dimension must be >= 2")
    profile = discriminant_in_E(n)
    ev = _bivariate_evaluator(n)
    certs = []
    for box in profile.real_roots:
        u0 = box.refined_value.real
        if n % 2 == 0 and box.lo <= 0 <= box.hi:
            # exact central merger; no refinement needed
            cert = _certify(n, 0.0, 0.0 + 0.0j, box, tol)
            certs.append(cert)
            continue
        coeffs = _secular_float_coeffs(n, u0)
        roots = complex_roots(coeffs, tol=1e-13)
        e0 = _closest_pair_mean(roots)
        u_star, e_star = _refine_double_root(ev, u0, e0)
        if abs(ev("p", u_star, e_star)) > 1e-8 or abs(
            ev("pe", u_star, e_star)
        ) > 1e-8:
            raise NoRepeatedRoot(
                f"candidate u = {u0} did not converge to a repeated root"
            )
        if abs(e_star.imag) < 1e-10:
            e_star = complex(e_star.real, 0.0)
        certs.append(_certify(n, u_star, e_star, box, tol))
    certs.sort(key=lambda c: c.u_star)
    return certs


def _secular_float_coeffs(n: int, u: float) -> list:
    sec = secular_poly(n, u=None, r2=Fraction(0))
    return sec.float_coeffs(u=u)


def _closest_pair_mean(roots) -> complex:
    best = None
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            d = abs(roots[i] - roots[j])
            if best is None or d < best[0]:
                best = (d, (roots[i] + roots[j]) / 2.0)
    return best[1]


def _certify(n, u_star, e_star, box, tol) -> EPCertificate:
    h = build_hamiltonian(ModelParams(n, "shifted", u=u_star, r=0.0))
    q, j, geo, alg, cond = jordan_chain(h, e_star, return_details=True)
    residual = np.linalg.norm(h @ q - q @ j) / np.linalg.norm(h)
    return EPCertificate(
        n=n,
        u_star=u_star,
        e_star=complex(e_star),
        u_box=box,
        algebraic_multiplicity=alg,
        geometric_multiplicity=geo,
        q=q,
        j=j,
        residual=residual,
        q_condition=cond,
    )


def jordan_chain(h: np.ndarray, e_star: complex, return_details: bool = False):
    """Transition matrix Q and Jordan form J for a defective eigenvalue.

    Q columns are the simple eigenvectors followed by the chain pair
    (v1, v2) with (H - E*)v1 = 0 and (H - E*)v2 = v1; J is the diagonal of
    simple eigenvalues extended by a 2x2 Jordan block.  Raises
    Diagonalizable when no chain exists and HigherOrderEP beyond the
    pairwise regime.
    """
    h = np.asarray(h, dtype=complex)
    n = h.shape[0]
    scale = np.linalg.norm(h) + 1.0
    eigvals = np.linalg.eigvals(h)
    cluster = [w for w in eigvals if abs(w - e_star) < 1e-6 * scale]
    alg = len(cluster)
    if alg == 0:
        raise ValueError(f"{e_star} is not an eigenvalue")
    if alg > 2:
        raise HigherOrderEP(f"algebraic multiplicity {alg} > 2")
    a = h - e_star * np.eye(n)
    u_svd, s, vh = np.linalg.svd(a)
    nullity = int(np.sum(s < 1e-7 * scale))
    if alg == 1 or nullity == alg:
        raise Diagonalizable(
            f"eigenvalue {e_star} has equal algebraic and geometric "
            f"multiplicity ({alg})"
        )
    v1 = _normalize_vector(vh[-1].conj())
    # minimal-norm solution of (H - E*) v2 = v1 is orthogonal to ker(H - E*)
    v2 = np.linalg.pinv(a, rcond=1e-7) @ v1
    chain_res = np.linalg.norm(a @ v2 - v1)
    if chain_res > 1e-8 * scale:
        raise Diagonalizable(
            f"chain equation inconsistent (residual {chain_res:.2e}); "
            "candidate is not defective"
        )
    others = sorted(
        (w for w in eigvals if abs(w - e_star) >= 1e-6 * scale),
        key=lambda w: (w.real, w.imag),
    )
    cols = []
    for w in others:
        uo, so, vo = np.linalg.svd(h - w * np.eye(n))
        cols.append(_normalize_vector(vo[-1].conj()))
    q = np.column_stack(cols + [v1, v2]) if cols else np.column_stack([v1, v2])
    j = np.diag(list(others) + [e_star, e_star]).astype(complex)
    j[n - 2, n - 1] = 1.0
    sq = np.linalg.svd(q, compute_uv=False)
    cond = float(sq[0] / sq[-1]) if sq[-1] > 0 else math.inf
    if return_details:
        return q, j, nullity, alg, cond
    return q, j


def _normalize_vector(v: np.ndarray) -> np.ndarray:
    v = v / np.linalg.norm(v)
    for comp in v:
        if abs(comp) > 1e-8:
            v = v * (abs(comp) / comp)
            break
    return v


def reality_count(n: int, u: float, tol: float = DEFAULT_IM_TOL):
    """(number of real eigenvalues, number of complex-conjugate pairs) at
    shift u on the r = 0 slice; raises BorderlineAmbiguity near the cut."""
    roots = complex_roots(_secular_float_coeffs(n, u), tol=1e-13)
    n_real = 0
    n_complex = 0
    for w in roots:
        im = abs(w.imag)
        if im <= tol:
            n_real += 1
        elif im <= 10.0 * tol:
            raise BorderlineAmbiguity(
                f"imaginary part {im:.3e} within 10x of tolerance {tol:.1e}; "
                "use the certificate machinery"
            )
        else:
            n_complex += 1
    if n_complex % 2:
        raise BorderlineAmbiguity(
            "complex eigenvalues did not pair up at the given tolerance"
        )
    return n_real, n_complex // 2
