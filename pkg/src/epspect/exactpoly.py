"""Exact univariate polynomial and rational-function algebra over rationals.

Coefficients are ``fractions.Fraction`` (arbitrary precision, always in
lowest terms) or, for bivariate work, nested :class:`RatPoly` instances in a
second variable.  On top of the ring operations the module provides exact
resultants (Sylvester determinant, fraction-free Bareiss elimination, with
evaluation/interpolation for polynomial coefficients), certified real-root
isolation via Sturm sequences, and a floating-point simultaneous-iteration
complex root finder.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Union

Coeff = Union[Fraction, "RatPoly"]

DEFAULT_ROOT_TOL = Fraction(1, 10**12)


class VariableMismatch(ValueError):
    """Raised when two polynomials in different variables are combined."""


class RootFindingError(RuntimeError):
    """Simultaneous iteration failed to converge; carries the best iterate."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


def _coerce(c) -> Coeff:
    if isinstance(c, (Fraction, RatPoly)):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


class RatPoly:
    """Dense univariate polynomial, lowest-degree coefficient first.

    The variable tag is checked, not inferred: combining polynomials with
    different tags is a hard error unless one side is constant.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "E"):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, var="E"):
        return cls((), var)

    @classmethod
    def one(cls, var="E"):
        return cls((1,), var)

    @classmethod
    def constant(cls, c, var="E"):
        return cls((c,), var)

    @classmethod
    def variable(cls, var="E"):
        return cls((0, 1), var)

    # -- basic structure -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def leading(self) -> Coeff:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Coeff:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def _join_var(self, other: "RatPoly") -> str:
        if self.var == other.var:
            return self.var
        if self.is_constant():
            return other.var
        if other.is_constant():
            return self.var
        raise VariableMismatch(f"cannot combine {self.var!r} with {other.var!r}")

    def _wrap(self, other):
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly((other,), self.var)
        return None

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        var = self._join_var(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(
            (self.coefficient(k) + other.coefficient(k) for k in range(n)), var
        )

    __radd__ = __add__

    def __neg__(self):
        return RatPoly((-c for c in self.coeffs), self.var)

    def __sub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        var = self._join_var(other)
        if not self or not other:
            return RatPoly.zero(var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return RatPoly(out, var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = RatPoly.one(self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        if len(self.coeffs) != len(other.coeffs):
            return False
        if self.coeffs and other.coeffs and not self.is_constant():
            if not other.is_constant() and self.var != other.var:
                return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.var if len(self.coeffs) > 1 else "", self.coeffs))

    # -- field operations (Fraction coefficients only) --------------------
    def _require_rational(self):
        if any(isinstance(c, RatPoly) for c in self.coeffs):
            raise TypeError("operation requires rational coefficients")

    def __divmod__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        self._require_rational()
        other._require_rational()
        var = self._join_var(other)
        rem = list(self.coeffs)
        div = other.coeffs
        dd = len(div) - 1
        lead = div[-1]
        quo = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] / lead
            if c:
                quo[k - dd] = c
                for j in range(dd + 1):
                    rem[k - dd + j] -= c * div[j]
        return RatPoly(quo, var), RatPoly(rem[:dd], var)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "RatPoly") -> "RatPoly":
        q, r = divmod(self, other)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def monic(self) -> "RatPoly":
        if not self:
            return self
        lead = self.leading
        if lead == 1:
            return self
        return RatPoly((c / lead for c in self.coeffs), self.var)

    def derivative(self) -> "RatPoly":
        return RatPoly(
            (k * c for k, c in enumerate(self.coeffs) if k), self.var
        )

    # -- evaluation / substitution -----------------------------------------
    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return Fraction(0) if not isinstance(x, (float, complex)) else 0.0
        return acc

    def compose(self, inner: "RatPoly") -> "RatPoly":
        """Substitution self(inner), exact."""
        acc = RatPoly.zero(inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + RatPoly.constant(c, inner.var)
        return acc

    def scale_arg(self, s) -> "RatPoly":
        """p(s*x) for a rational scalar s."""
        s = Fraction(s)
        return RatPoly((c * s**k for k, c in enumerate(self.coeffs)), self.var)

    def even_part_as(self, var: str) -> "RatPoly":
        """Rewrite a polynomial with only even powers in terms of x = var**2."""
        for k, c in enumerate(self.coeffs):
            if k % 2 and c:
                raise ValueError("polynomial has odd-degree terms")
        return RatPoly(self.coeffs[::2], var)

    def inflate_square(self, var: str) -> "RatPoly":
        """Substitute the variable by var**2 (inverse of even_part_as)."""
        out = [Fraction(0)] * (2 * len(self.coeffs) - 1 if self.coeffs else 0)
        for k, c in enumerate(self.coeffs):
            out[2 * k] = c
        return RatPoly(out, var)

    def shift_removed(self, k: int) -> "RatPoly":
        """Divide by var**k, exact."""
        if any(self.coeffs[j] for j in range(min(k, len(self.coeffs)))):
            raise ValueError("not divisible by variable power")
        return RatPoly(self.coeffs[k:], self.var)

    def float_coeffs(self):
        self._require_rational()
        return [float(c) for c in self.coeffs]

    # -- serialization ------------------------------------------------------
    def to_json(self):
        self._require_rational()
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data, var="E"):
        return cls((Fraction(s) for s in data), var)

    def __repr__(self):
        return f"RatPoly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coefficient(k)
            if not c:
                continue
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append(f"{c}*{self.var}" if c != 1 else self.var)
            else:
                head = f"{c}*" if c != 1 else ""
                parts.append(f"{head}{self.var}^{k}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_arith(a: RatPoly, b: RatPoly, kind: str):
    """Spec surface for the four ring operations."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "divmod":
        return divmod(a, b)
    raise ValueError(f"unknown kind {kind!r}")


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic greatest common divisor over the rationals."""
    if not a and not b:
        raise ValueError("gcd of two zero polynomials")
    a = a.monic() if a else a
    b = b.monic() if b else b
    while b:
        a, b = b, (a % b).monic() if (a % b) else RatPoly.zero(b.var)
    return a.monic()


def square_free_part(p: RatPoly) -> RatPoly:
    g = poly_gcd(p, p.derivative()) if p.degree >= 1 else RatPoly.one(p.var)
    if g.degree < 1:
        return p.monic()
    return p.exact_div(g).monic()


def square_free_decomposition(p: RatPoly):
    """Yun's algorithm: returns [(factor, multiplicity)] with monic factors."""
    p = p.monic()
    if p.degree < 1:
        return []
    out = []
    g = poly_gcd(p, p.derivative())
    if g.degree < 1:
        return [(p, 1)]
    b = p.exact_div(g)
    c = p.derivative().exact_div(g)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a.monic(), i))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        i += 1
    return out


# ---------------------------------------------------------------------------
# Resultants


def _is_rational_poly(p: RatPoly) -> bool:
    return not any(isinstance(c, RatPoly) for c in p.coeffs)


def sylvester_matrix(a: RatPoly, b: RatPoly):
    m, n = a.degree, b.degree
    size = m + n
    rows = []
    ac = list(reversed(a.coeffs))
    bc = list(reversed(b.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + ac + [Fraction(0)] * (size - i - m - 1))
    for i in range(m):
        rows.append([Fraction(0)] * i + bc + [Fraction(0)] * (size - i - n - 1))
    return rows


def _exact_entry_div(a, b):
    if isinstance(a, RatPoly) or isinstance(b, RatPoly):
        if not isinstance(a, RatPoly):
            a = RatPoly.constant(a, b.var)
        if not isinstance(b, RatPoly):
            b = RatPoly.constant(b, a.var)
        return a.exact_div(b)
    return a / b


def bareiss_determinant(rows):
    """Fraction-free Bareiss determinant; entries Fraction or RatPoly."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    m = [list(r) for r in rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if not m[k][k]:
            pivot = next((i for i in range(k + 1, n) if m[i][k]), None)
            if pivot is None:
                return _zero_like(m[k][k])
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = _exact_entry_div(num, prev)
            m[i][k] = Fraction(0)
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def _zero_like(entry):
    return RatPoly.zero(entry.var) if isinstance(entry, RatPoly) else Fraction(0)


def _rational_resultant(a: RatPoly, b: RatPoly) -> Fraction:
    if not a or not b:
        return Fraction(0)
    if a.degree == 0:
        return a.leading ** b.degree
    if b.degree == 0:
        return b.leading ** a.degree
    return bareiss_determinant(sylvester_matrix(a, b))


def resultant(a: RatPoly, b: RatPoly, in_var: Optional[str] = None):
    """Exact resultant eliminating ``in_var`` (defaults to the shared tag).

    With plain rational coefficients this is the Sylvester determinant
    (fraction-free Bareiss).  When coefficients are polynomials in a second
    variable the resultant is recovered by evaluation at integer nodes and
    exact interpolation; evaluation is only valid where the leading
    coefficients survive, so such nodes are skipped.
    """
    if in_var is not None and a.var != in_var and not a.is_constant():
        raise VariableMismatch(f"expected polynomials in {in_var!r}")
    if _is_rational_poly(a) and _is_rational_poly(b):
        return _rational_resultant(a, b)
    if not a or not b:
        param = _param_var(a) or _param_var(b)
        return RatPoly.zero(param)
    param = _param_var(a) or _param_var(b)

    def pdeg(p):
        return max(
            (c.degree if isinstance(c, RatPoly) else 0) for c in p.coeffs
        )

    bound = b.degree * pdeg(a) + a.degree * pdeg(b)
    nodes, values = [], []
    t = 0
    while len(nodes) < bound + 1:
        for cand in ([Fraction(0)] if t == 0 else [Fraction(t), Fraction(-t)]):
            if len(nodes) >= bound + 1:
                break
            av = _specialize(a, cand)
            bv = _specialize(b, cand)
            if av.degree != a.degree or bv.degree != b.degree:
                continue  # leading coefficient vanished; specialization invalid
            nodes.append(cand)
            values.append(_rational_resultant(av, bv))
        t += 1
    return _newton_interpolate(nodes, values, param)


def _param_var(p: RatPoly):
    for c in p.coeffs:
        if isinstance(c, RatPoly):
            return c.var
    return None


def _specialize(p: RatPoly, value: Fraction) -> RatPoly:
    return RatPoly(
        (c(value) if isinstance(c, RatPoly) else c for c in p.coeffs), p.var
    )


def _newton_interpolate(nodes, values, var) -> RatPoly:
    n = len(nodes)
    table = list(values)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (nodes[i] - nodes[i - j])
    poly = RatPoly.zero(var)
    x = RatPoly.variable(var)
    for i in range(n - 1, -1, -1):
        poly = poly * (x - nodes[i]) + RatPoly.constant(table[i], var)
    return poly


def discriminant(p: RatPoly, in_var: Optional[str] = None):
    return resultant(p, p.derivative(), in_var)


# ---------------------------------------------------------------------------
# Real-root isolation (Sturm sequences, exact)


@dataclass
class RootBox:
    """Certified enclosure of a polynomial root.

    Real roots carry a rational interval [lo, hi]; complex roots a
    center/radius disc.  Exactly ``multiplicity`` roots of the original
    polynomial lie inside.
    """

    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    center: Optional[complex] = None
    radius: float = 0.0
    multiplicity: int = 1
    refined_value: complex = 0.0

    @property
    def is_real(self) -> bool:
        return self.lo is not None


def _positive_scale(p: RatPoly) -> RatPoly:
    # Sturm sequences tolerate scaling by positive constants only.
    return p * RatPoly((Fraction(1) / abs(p.leading),), p.var)


def sturm_sequence(p: RatPoly):
    seq = [_positive_scale(p), _positive_scale(p.derivative())]
    while seq[-1]:
        r = seq[-2] % seq[-1]
        if not r:
            break
        seq.append(_positive_scale(-r))
    return seq


def _sign_variations(seq, x: Fraction) -> int:
    signs = []
    for s in seq:
        v = s(x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: RatPoly, lo=None, hi=None) -> int:
    """Distinct real roots of p in (lo, hi]; whole line when bounds omitted."""
    sf = square_free_part(p)
    if sf.degree < 1:
        return 0
    bound = _root_bound(sf)
    lo = Fraction(lo) if lo is not None else -bound
    hi = Fraction(hi) if hi is not None else bound
    seq = sturm_sequence(sf)
    return _sign_variations(seq, lo) - _sign_variations(seq, hi)


def _root_bound(p: RatPoly) -> Fraction:
    lead = abs(p.leading)
    m = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    return Fraction(1) + m / lead


def _nonroot_split(p: RatPoly, lo: Fraction, hi: Fraction) -> Fraction:
    mid = (lo + hi) / 2
    k = 3
    while not p(mid):
        mid = lo + (hi - lo) / k
        k += 2
    return mid


def isolate_real_roots(p: RatPoly, tol: Fraction = DEFAULT_ROOT_TOL):
    """Disjoint rational isolating intervals for the distinct real roots.

    Multiplicities come from the square-free decomposition; each interval is
    refined by bisection to width <= tol and polished with a guarded Newton
    step for the reported float value.
    """
    if not p:
        raise ValueError("cannot isolate roots of the zero polynomial")
    sf = square_free_part(p)
    if sf.degree < 1:
        return []
    factors = square_free_decomposition(p)
    seq = sturm_sequence(sf)
    bound = _root_bound(sf)
    boxes = []

    def recurse(lo, hi, nroots):
        if nroots == 0:
            return
        if nroots == 1:
            boxes.append((lo, hi))
            return
        mid = _nonroot_split(sf, lo, hi)
        left = _sign_variations(seq, lo) - _sign_variations(seq, mid)
        recurse(lo, mid, left)
        recurse(mid, hi, nroots - left)

    total = _sign_variations(seq, -bound) - _sign_variations(seq, bound)
    recurse(-bound, bound, total)

    out = []
    tol = Fraction(tol)
    for lo, hi in sorted(boxes):
        lo, hi = _refine_bisect(sf, lo, hi, tol)
        mult = _multiplicity_in(factors, lo, hi)
        val = _newton_polish(sf, lo, hi)
        out.append(
            RootBox(lo=lo, hi=hi, multiplicity=mult, refined_value=val)
        )
    return out


def _refine_bisect(sf, lo, hi, tol):
    slo = 1 if sf(lo) > 0 else -1
    while hi - lo > tol:
        mid = (lo + hi) / 2
        v = sf(mid)
        if not v:
            # exact rational root: shrink symmetrically around it
            eps = min(tol / 2, (hi - lo) / 4)
            return mid - eps, mid + eps
        if (1 if v > 0 else -1) == slo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _multiplicity_in(factors, lo, hi):
    for g, mult in factors:
        if g.degree < 1:
            continue
        seq = sturm_sequence(g)
        if _sign_variations(seq, lo) - _sign_variations(seq, hi) == 1:
            return mult
    return 1


def _newton_polish(sf, lo, hi):
    x = (float(lo) + float(hi)) / 2
    cs = sf.float_coeffs()
    dcs = [k * c for k, c in enumerate(cs)][1:]
    for _ in range(4):
        pv = _horner(cs, x)
        dv = _horner(dcs, x)
        if dv == 0:
            break
        step = pv / dv
        nx = x - step
        if not (float(lo) <= nx <= float(hi)):
            break
        x = nx
    return x


def _horner(coeffs, x):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------
# Complex roots (Aberth simultaneous iteration)


def complex_roots(p, tol: float = 1e-12, max_iter: int = 400):
    """All complex roots (with multiplicity) of a polynomial.

    Accepts a RatPoly with rational coefficients or a coefficient sequence
    (lowest degree first).  Deterministic perturbed-circle initialization,
    Aberth-Ehrlich updates, Newton polishing; roots sorted by (re, im).
    """
    if isinstance(p, RatPoly):
        coeffs = [complex(c) for c in p.float_coeffs()]
    else:
        coeffs = [complex(c) for c in p]
    while coeffs and abs(coeffs[-1]) == 0.0:
        coeffs.pop()
    n = len(coeffs) - 1
    if n < 1:
        raise ValueError("degree must be at least 1")
    lead = coeffs[-1]
    cs = [c / lead for c in coeffs]
    if n == 1:
        return [-cs[0]]
    dcs = [k * c for k, c in enumerate(cs)][1:]
    radius = 1.0 + max(abs(c) for c in cs[:-1])
    # deterministic, slightly anisotropic starting circle
    z = [
        0.5 * radius * cmath.exp(2j * math.pi * (k + 0.354) / n) * (1 + 0.001 * k)
        for k in range(n)
    ]
    scale = max(abs(c) for c in cs)
    converged = False
    for _ in range(max_iter):
        maxcorr = 0.0
        for k in range(n):
            pv = _horner(cs, z[k])
            if abs(pv) < 1e-300:
                continue
            dv = _horner(dcs, z[k])
            if dv == 0:
                z[k] += 1e-6 * (1.0 + abs(z[k]))
                maxcorr = math.inf
                continue
            w = pv / dv
            s = 0.0 + 0.0j
            for j in range(n):
                if j != k:
                    diff = z[k] - z[j]
                    if diff == 0:
                        diff = 1e-12 * (1.0 + abs(z[k]))
                    s += 1.0 / diff
            denom = 1.0 - w * s
            corr = w if abs(denom) < 1e-14 else w / denom
            z[k] -= corr
            maxcorr = max(maxcorr, abs(corr) / (1.0 + abs(z[k])))
        if maxcorr < tol:
            converged = True
            break
    for k in range(n):
        for _ in range(3):
            dv = _horner(dcs, z[k])
            if abs(dv) < math.sqrt(tol) * scale:
                break
            z[k] -= _horner(cs, z[k]) / dv
    roots = sorted(z, key=lambda w: (w.real, w.imag))
    restol = max(tol, 1e-11) * max(scale, 1.0) * 10.0
    worst = max(abs(_horner(cs, r)) for r in roots)
    if not converged and worst > restol:
        raise RootFindingError(
            f"root iteration did not converge (residual {worst:.3e})", best=roots
        )
    return roots


# ---------------------------------------------------------------------------
# Rational functions


class RatFunc:
    """Reduced rational function: coprime numerator/denominator, monic
    denominator after canonicalization."""

    __slots__ = ("num", "den")

    def __init__(self, num: RatPoly, den: Optional[RatPoly] = None):
        if den is None:
            den = RatPoly.one(num.var)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if num:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lead = den.leading
        if lead != 1:
            num = RatPoly((c / lead for c in num.coeffs), num.var)
            den = den.monic()
        self.num = num
        self.den = den

    @property
    def var(self):
        return self.num.var if self.num else self.den.var

    @classmethod
    def from_poly(cls, p: RatPoly):
        return cls(p)

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return RatFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._wrap(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._wrap(other)
        return other / self

    def _wrap(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, RatPoly):
            return RatFunc(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc(RatPoly.constant(other, self.var))
        return None

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def substitute_square(self, var="E") -> "RatFunc":
        """Rational function in x rewritten with x = var**2."""
        return RatFunc(
            self.num.inflate_square(var), self.den.inflate_square(var)
        )

    def to_json(self):
        return {
            "numerator": self.num.to_json(),
            "denominator": self.den.to_json(),
            "var": self.var,
        }

    @classmethod
    def from_json(cls, data):
        var = data.get("var", "E")
        return cls(
            RatPoly.from_json(data["numerator"], var),
            RatPoly.from_json(data["denominator"], var),
        )

    def __repr__(self):
        return f"RatFunc(({self.num}) / ({self.den}))"
