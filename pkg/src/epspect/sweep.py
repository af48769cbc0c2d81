"""Parameter sweeps: spectral curves, reality intervals, coupling-curve plot
data.  Output tables serialize to CSV (stable column layout, %.17g floats)
and JSON."""

from __future__ import annotations

import io
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .exactpoly import complex_roots
from .secular import (
    EvaluationOutsideRealBranch,
    secular_poly,
    sturmian_r2,
    sturmian_u,
)

DEFAULT_IM_TOL = 1e-9
ENDPOINT_TOL = 1e-8


@dataclass(frozen=True)
class SweepSpec:
    n: int
    swept: str  # "r" | "u" | "E_on_sturmian"
    fixed: float = 0.0
    lo: float = -1.0
    hi: float = 1.0
    count: int = 101
    explicit: Optional[Sequence[float]] = None
    curve_kind: str = "r2_of_E2"  # used when swept == "E_on_sturmian"

    def __post_init__(self):
        if self.swept not in ("r", "u", "E_on_sturmian"):
            raise ValueError("swept must be 'r', 'u' or 'E_on_sturmian'")
        if self.explicit is None:
            if self.count < 2:
                raise ValueError("grid needs at least 2 points")
            if not self.lo < self.hi:
                raise ValueError("grid requires lo < hi")

    def grid(self) -> List[float]:
        if self.explicit is not None:
            return [float(v) for v in self.explicit]
        step = (self.hi - self.lo) / (self.count - 1)
        return [self.lo + k * step for k in range(self.count)]

    def to_json(self) -> dict:
        out = {"n": self.n, "swept": self.swept, "fixed": self.fixed}
        if self.swept == "E_on_sturmian":
            out["curve_kind"] = self.curve_kind
        if self.explicit is not None:
            out["grid"] = list(self.explicit)
        else:
            out["grid"] = {"lo": self.lo, "hi": self.hi, "count": self.count}
        return out

    @classmethod
    def from_json(cls, data: dict) -> "SweepSpec":
        grid = data.get("grid")
        if isinstance(grid, dict):
            return cls(
                n=int(data["n"]),
                swept=data["swept"],
                fixed=float(data.get("fixed", 0.0)),
                lo=float(grid["lo"]),
                hi=float(grid["hi"]),
                count=int(grid["count"]),
                curve_kind=data.get("curve_kind", "r2_of_E2"),
            )
        return cls(
            n=int(data["n"]),
            swept=data["swept"],
            fixed=float(data.get("fixed", 0.0)),
            explicit=[float(v) for v in grid],
            curve_kind=data.get("curve_kind", "r2_of_E2"),
        )


@dataclass
class SweepRow:
    param: float
    eigenvalues: List[complex]
    n_real: int
    error: Optional[str] = None


@dataclass
class SweepTable:
    rows: List[SweepRow]
    reality_intervals: List[Tuple[float, float]] = field(default_factory=list)
    ep_markers: list = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        n = max((len(r.eigenvalues) for r in self.rows), default=0)
        header = ["param"]
        for k in range(1, n + 1):
            header += [f"re_e{k}", f"im_e{k}"]
        header.append("n_real")
        buf.write(",".join(header) + "\n")
        for r in self.rows:
            cells = ["%.17g" % r.param]
            for w in r.eigenvalues:
                cells += ["%.17g" % w.real, "%.17g" % w.imag]
            cells.append(str(r.n_real))
            buf.write(",".join(cells) + "\n")
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "SweepTable":
        lines = [ln for ln in text.split("\n") if ln]
        rows = []
        for ln in lines[1:]:
            cells = ln.split(",")
            param = float(cells[0])
            body = cells[1:-1]
            eigs = [
                complex(float(body[2 * k]), float(body[2 * k + 1]))
                for k in range(len(body) // 2)
            ]
            rows.append(SweepRow(param, eigs, int(cells[-1])))
        return cls(rows=rows)

    def to_json(self) -> dict:
        return {
            "rows": [
                {
                    "param": r.param,
                    "eigenvalues": [[w.real, w.imag] for w in r.eigenvalues],
                    "n_real": r.n_real,
                    **({"error": r.error} if r.error else {}),
                }
                for r in self.rows
            ],
            "reality_intervals": [list(iv) for iv in self.reality_intervals],
            "ep_markers": [c.to_json() for c in self.ep_markers],
        }


def _eigs_at(sec, swept: str, fixed: float, value: float, im_tol: float):
    if swept == "r":
        coeffs = sec.float_coeffs(r2=value * value)
    else:
        coeffs = sec.float_coeffs(u=value)
    roots = complex_roots(coeffs, tol=1e-13)
    roots.sort(key=lambda w: (w.real, w.imag))
    n_real = sum(1 for w in roots if abs(w.imag) <= im_tol)
    return roots, n_real


def run_sweep(
    spec: SweepSpec, im_tol: float = DEFAULT_IM_TOL, jobs: int = 1
) -> SweepTable:
    """Eigenvalues along the grid via the secular-polynomial root path, with
    reality intervals refined by bisection and EP markers attached on the
    u-at-r=0 slice.  Per-point failures are recorded in-row."""
    if spec.swept == "E_on_sturmian":
        raise ValueError(
            "E_on_sturmian sweeps produce curve tables; use sturmian_plotdata"
        )
    if spec.swept == "r":
        sec = secular_poly(spec.n, u=Fraction(spec.fixed), r2=None)
    else:
        sec = secular_poly(spec.n, u=None, r2=Fraction(spec.fixed) ** 2)
    grid = spec.grid()

    def compute(value):
        try:
            eigs, n_real = _eigs_at(sec, spec.swept, spec.fixed, value, im_tol)
            return SweepRow(value, eigs, n_real)
        except Exception as exc:  # recorded, never aborts the sweep
            return SweepRow(value, [], 0, error=str(exc))

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(compute, grid))
    else:
        rows = [compute(v) for v in grid]

    table = SweepTable(rows=rows)
    table.reality_intervals = _reality_intervals(sec, spec, rows, im_tol)
    if spec.swept == "u" and spec.fixed == 0.0 and spec.n >= 3:
        from .eploc import locate_eps

        certs = locate_eps(spec.n)
        table.ep_markers = [
            c for c in certs if grid[0] <= c.u_star <= grid[-1]
        ]
    return table


def _all_real(sec, spec, value, im_tol):
    _, n_real = _eigs_at(sec, spec.swept, spec.fixed, value, im_tol)
    return n_real == spec.n


def _reality_intervals(sec, spec, rows, im_tol):
    flags = [r.error is None and r.n_real == spec.n for r in rows]
    grid = [r.param for r in rows]
    intervals = []
    i = 0
    while i < len(flags):
        if not flags[i]:
            i += 1
            continue
        j = i
        while j + 1 < len(flags) and flags[j + 1]:
            j += 1
        lo = grid[i]
        hi = grid[j]
        if i > 0:
            lo = _bisect_edge(sec, spec, grid[i - 1], grid[i], im_tol)
        if j + 1 < len(flags):
            hi = _bisect_edge(sec, spec, grid[j + 1], grid[j], im_tol)
        intervals.append((lo, hi))
        i = j + 1
    return intervals


def _bisect_edge(sec, spec, bad, good, im_tol):
    """Refine the reality boundary between a non-real and a real grid point."""
    while abs(good - bad) > ENDPOINT_TOL:
        mid = (bad + good) / 2.0
        if _all_real(sec, spec, mid, im_tol):
            good = mid
        else:
            bad = mid
    return (bad + good) / 2.0


@dataclass
class CurveSample:
    e: float
    value: Optional[float]


@dataclass
class CurveTable:
    kind: str
    samples: List[CurveSample]
    extrema: List[Tuple[float, float]] = field(default_factory=list)

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("E,value\n")
        for s in self.samples:
            v = "%.17g" % s.value if s.value is not None else ""
            buf.write("%.17g,%s\n" % (s.e, v))
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "samples": [[s.e, s.value] for s in self.samples],
            "extrema": [list(p) for p in self.extrema],
        }


def sturmian_plotdata(n: int, kind: str, e_grid: Sequence[float]) -> CurveTable:
    """Coupling-curve samples over an energy grid, restricted to real
    branches, with interior extrema located by golden-section refinement."""
    if kind == "r2_of_E2":
        curve = sturmian_r2(n)

        def f(e):
            return curve(e)

    elif kind in ("u_of_E_plus", "u_of_E_minus"):
        branch = "plus" if kind.endswith("plus") else "minus"
        curve = sturmian_u(n, branch)

        def f(e):
            return curve.evaluate_u(e)

    else:
        raise ValueError(f"unknown curve kind {kind!r}")

    samples = []
    for e in e_grid:
        try:
            samples.append(CurveSample(float(e), f(float(e))))
        except (EvaluationOutsideRealBranch, ZeroDivisionError, OverflowError):
            samples.append(CurveSample(float(e), None))
    table = CurveTable(kind=kind, samples=samples)
    table.extrema = _find_extrema(f, samples)
    return table


def _find_extrema(f, samples):
    out = []
    for k in range(1, len(samples) - 1):
        trio = samples[k - 1 : k + 2]
        if any(s.value is None for s in trio):
            continue
        v0, v1, v2 = (s.value for s in trio)
        if (v1 - v0) * (v2 - v1) < 0:
            e_star = _golden(f, trio[0].e, trio[2].e, maximize=v1 > v0)
            try:
                v_star = f(e_star)
            except EvaluationOutsideRealBranch:
                continue
            # reject pole artifacts: a smooth interior extremum stays close
            # to the bracketing sample values
            if abs(v_star - v1) > 10.0 * (abs(v1 - v0) + abs(v2 - v1)) + 1e-8:
                continue
            out.append((e_star, v_star))
    return out


_PHI = (math.sqrt(5.0) - 1.0) / 2.0


def _golden(f, a, b, maximize, tol=1e-11):
    sign = 1.0 if maximize else -1.0

    def g(x):
        try:
            return sign * f(x)
        except (EvaluationOutsideRealBranch, ZeroDivisionError):
            return -math.inf

    c = b - _PHI * (b - a)
    d = a + _PHI * (b - a)
    gc, gd = g(c), g(d)
    while abs(b - a) > tol:
        if gc > gd:
            b, d, gd = d, c, gc
            c = b - _PHI * (b - a)
            gc = g(c)
        else:
            a, c, gc = c, d, gd
            d = a + _PHI * (b - a)
            gd = g(d)
    return (a + b) / 2.0
