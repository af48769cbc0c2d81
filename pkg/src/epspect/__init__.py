"""Boundary-controlled non-Hermitian lattice toolkit: exact secular
polynomials and coupling curves, exceptional-point certificates, and
quasi-Hermiticity metrics, with a sweep CLI."""

__version__ = "0.1.0"

from .eploc import (
    BorderlineAmbiguity,
    DegenerateDiscriminant,
    Diagonalizable,
    EPCertificate,
    HigherOrderEP,
    NoRepeatedRoot,
    discriminant_in_E,
    jordan_chain,
    locate_eps,
    reality_count,
)
from .exactpoly import RatFunc, RatPoly, RootBox, complex_roots, isolate_real_roots
from .lattice import (
    DegenerateBoundary,
    ModelParams,
    RobinData,
    build_hamiltonian,
    dirichlet_spectrum,
    hermiticity_flag,
    robin_to_z,
)
from .metric import (
    DegenerateSpectrum,
    DysonFactor,
    MetricSolution,
    NoPositiveSolution,
    NotPositiveDefinite,
    dyson_factor,
    solve_dieudonne,
)
from .secular import (
    EvaluationOutsideRealBranch,
    SecularPoly,
    SturmianCurve,
    brute_force_secular,
    check_known_curve,
    dirichlet_poly,
    hidden_symmetry_holds,
    secular_poly,
    sturmian_r2,
    sturmian_u,
    verify_rearrangement,
)
from .sweep import SweepSpec, SweepTable, run_sweep, sturmian_plotdata

__all__ = [
    "BorderlineAmbiguity",
    "DegenerateBoundary",
    "DegenerateDiscriminant",
    "DegenerateSpectrum",
    "Diagonalizable",
    "DysonFactor",
    "EPCertificate",
    "EvaluationOutsideRealBranch",
    "HigherOrderEP",
    "MetricSolution",
    "ModelParams",
    "NoPositiveSolution",
    "NoRepeatedRoot",
    "NotPositiveDefinite",
    "RatFunc",
    "RatPoly",
    "RobinData",
    "RootBox",
    "SecularPoly",
    "SturmianCurve",
    "SweepSpec",
    "SweepTable",
    "brute_force_secular",
    "build_hamiltonian",
    "check_known_curve",
    "complex_roots",
    "dirichlet_poly",
    "dirichlet_spectrum",
    "discriminant_in_E",
    "dyson_factor",
    "hermiticity_flag",
    "hidden_symmetry_holds",
    "isolate_real_roots",
    "jordan_chain",
    "locate_eps",
    "reality_count",
    "robin_to_z",
    "run_sweep",
    "secular_poly",
    "solve_dieudonne",
    "sturmian_plotdata",
    "sturmian_r2",
    "sturmian_u",
    "verify_rearrangement",
]
