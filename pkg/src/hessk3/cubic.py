"""Cubic surfaces in Sylvester form: Hessians, the degree 32 discriminant,
Eckardt data, singular points and automorphisms."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Union

from .poly import MultiPoly, NFElement, PolyRing, det_poly_matrix, quadratic_field

X = ("x0", "x1", "x2", "x3")
X5 = ("x0", "x1", "x2", "x3", "x4")
LAM = ("l0", "l1", "l2", "l3", "l4")
LX = LAM + X
MU = ("m0", "m1", "m2", "m3", "m4")

Scalar = Union[int, Fraction, NFElement]


def parse_rational(s: str) -> Fraction:
    s = s.strip()
    if not s:
        raise ValueError("empty number")
    return Fraction(s)


def parse_lambda(text: str) -> tuple[Fraction, ...]:
    """``"1,1,1,1,1/4"`` -> five rationals."""
    parts = [p for p in text.replace(" ", "").split(",")]
    if len(parts) != 5:
        raise ValueError("expected five comma-separated rationals")
    return tuple(parse_rational(p) for p in parts)


@dataclass(frozen=True)
class SylvesterSurface:
    """``sum l_i x_i^3 = 0`` on ``sum x_i = 0``."""

    lam: tuple

    def __post_init__(self):
        if len(self.lam) != 5:
            raise ValueError("need five coefficients")
        if not any(self.lam):
            raise ValueError("all coefficients vanish")

    @property
    def mu(self) -> tuple:
        """``mu_i``: product of the coefficients other than ``l_i``."""
        out = []
        for i in range(5):
            p = 1
            for j in range(5):
                if j != i:
                    p = p * self.lam[j]
            out.append(p)
        return tuple(out)


def _x4(names) -> MultiPoly:
    return -(MultiPoly.var(names, "x0") + MultiPoly.var(names, "x1") + MultiPoly.var(names, "x2") + MultiPoly.var(names, "x3"))


def linear_forms(names=X) -> list[MultiPoly]:
    """``x0..x3`` and ``x4 = -(x0+x1+x2+x3)`` in the ring ``names``."""
    return [MultiPoly.var(names, n) for n in X] + [_x4(names)]


def sylvester_to_cubic(s: SylvesterSurface) -> MultiPoly:
    xs = linear_forms(X)
    out = MultiPoly(X)
    for l, x in zip(s.lam, xs):
        if l:
            out = out + x**3 * l
    return out


def sylvester_cubic_symbolic() -> MultiPoly:
    """``sum l_i x_i^3`` in ``Q[l0..l4, x0..x3]``."""
    xs = linear_forms(LX)
    out = MultiPoly(LX)
    for n, x in zip(LAM, xs):
        out = out + MultiPoly.var(LX, n) * x**3
    return out


def hessian_matrix(f: MultiPoly, variables: Sequence[str] = X) -> list[list[MultiPoly]]:
    first = [f.derivative(v) for v in variables]
    return [[first[i].derivative(v) for v in variables] for i in range(len(variables))]


def hessian_form(f: MultiPoly, variables: Sequence[str] = X) -> MultiPoly:
    """Determinant of the second partials.  The zero polynomial signals a
    cone (no Hessian quartic)."""
    return det_poly_matrix(hessian_matrix(f, variables), f.names)


def hessian_sylvester_closed(s: Optional[SylvesterSurface] = None) -> MultiPoly:
    """``sum_i prod_{j != i} l_j x_j`` with ``x4`` eliminated.

    Symbolic in ``l0..l4, x0..x3`` when ``s`` is None.
    """
    if s is None:
        names = LX
        lam = [MultiPoly.var(LX, n) for n in LAM]
    else:
        names = X
        lam = list(s.lam)
    xs = linear_forms(names)
    out = MultiPoly(names)
    for i in range(5):
        t = MultiPoly.const(names, 1)
        for j in range(5):
            if j != i:
                t = t * xs[j] * lam[j]
        out = out + t
    return out


def has_hessian(f: MultiPoly) -> bool:
    return not hessian_form(f).is_zero()


# -- degree 32 discriminant -------------------------------------------------

S = ("s0", "s1", "s2", "s3", "s4")


@lru_cache(maxsize=1)
def sign_product_mu() -> MultiPoly:
    """``prod (s0 +- s1 +- s2 +- s3 +- s4)`` over all 16 sign choices, as a
    polynomial in ``m_i = s_i^2``."""
    ring = PolyRing(S)
    g = sum(ring.gens[1:], ring.gens[0])
    for i in range(1, 5):
        g = g * g.substitute({S[i]: -ring.gens[i]}, S)
    out = {}
    for e, c in g.terms.items():
        if any(k % 2 for k in e):
            raise ArithmeticError("sign product is not even")
        out[tuple(k // 2 for k in e)] = c
    return MultiPoly(MU, out)


@lru_cache(maxsize=1)
def disc32_symbolic() -> MultiPoly:
    """The degree 32 smoothness discriminant as a polynomial in ``l0..l4``."""
    out: dict = {}
    for b, c in sign_product_mu().terms.items():
        # prod_i m_i^{b_i} = prod_j l_j^{B - b_j}
        tot = sum(b)
        e = tuple(tot - x for x in b)
        out[e] = out.get(e, 0) + c
    return MultiPoly(LAM, out)


def disc32(s: SylvesterSurface):
    return sign_product_mu().evaluate(s.mu)


def disc32_direct(s: SylvesterSurface):
    """Oracle: the product over explicit square roots, for perfect squares."""
    roots = []
    for m in s.mu:
        m = Fraction(m)
        if m < 0:
            raise ValueError("direct product needs non-negative mu")
        rn, rd = math.isqrt(m.numerator), math.isqrt(m.denominator)
        if rn * rn != m.numerator or rd * rd != m.denominator:
            raise ValueError("direct product needs square mu")
        roots.append(Fraction(rn, rd))
    out = Fraction(1)
    for signs in itertools.product((1, -1), repeat=4):
        out *= roots[0] + sum(e * r for e, r in zip(signs, roots[1:]))
    return out


# -- points, singularities ---------------------------------------------------


def to_four(p: Sequence) -> list:
    """Drop ``x4`` from a point given in five Sylvester coordinates."""
    p = list(p)
    if len(p) == 5:
        if sum(p[1:], p[0]) != 0:
            raise ValueError("five-coordinate point must satisfy sum x_i = 0")
        return p[:4]
    if len(p) != 4:
        raise ValueError("point needs 4 or 5 coordinates")
    return p


def singular_at(f: MultiPoly, p: Sequence, variables: Sequence[str] = X) -> bool:
    p = to_four(p) if len(variables) == 4 else list(p)
    if not any(p):
        raise ValueError("the zero vector is not a point")
    vals = dict(zip(variables, p))
    if f.evaluate(vals) != 0:
        return False
    return all(f.derivative(v).evaluate(vals) == 0 for v in variables)


def gradient_vanishes(f: MultiPoly, p: Sequence, variables: Sequence[str] = X) -> bool:
    vals = dict(zip(variables, to_four(p) if len(variables) == 4 else p))
    return all(f.derivative(v).evaluate(vals) == 0 for v in variables)


def vertex(k: int, l: int, m: int) -> list[int]:
    """Pentahedron vertex ``P_klm`` (five coordinates)."""
    i, j = sorted(set(range(5)) - {k, l, m})
    p = [0] * 5
    p[i], p[j] = 1, -1
    return p


# -- Eckardt points ----------------------------------------------------------


@dataclass(frozen=True)
class EckardtPoint:
    pair: tuple[int, int]
    vertex: tuple[int, int, int]
    ideals: tuple  # two (linear, linear) generator pairs in x0..x4


def _new_lines(lam, k: int, l: int, m: int):
    """The two lines of ``l_k l_l x_k x_l + l_k l_m x_k x_m + l_l l_m x_l x_m``
    on the plane ``x_k + x_l + x_m = 0``."""
    a = -lam[k] * lam[m]
    b = lam[k] * lam[l] - lam[k] * lam[m] - lam[l] * lam[m]
    c = -lam[l] * lam[m]
    # a r^2 + b r + c = 0 with x_k = r x_l
    disc = Fraction(b * b - 4 * a * c)
    rn, rd = math.isqrt(max(disc.numerator, 0)), math.isqrt(disc.denominator)
    if disc >= 0 and rn * rn == disc.numerator and rd * rd == disc.denominator:
        root = Fraction(rn, rd)
    else:
        root = quadratic_field(disc).gen
    ring = X5
    xk, xl, xm = (MultiPoly.var(ring, f"x{i}") for i in (k, l, m))
    plane = xk + xl + xm
    out = []
    for sgn in (1, -1):
        r = (root * sgn - b) / (2 * a) if not isinstance(root, Fraction) else (sgn * root - b) / (2 * a)
        out.append((xk - xl * r, plane))
    return tuple(out)


def eckardt_data(s: SylvesterSurface) -> tuple[int, list[EckardtPoint]]:
    lam = [Fraction(x) for x in s.lam]
    if any(x == 0 for x in lam):
        raise ValueError("Eckardt data needs all coefficients nonzero")
    pts = []
    for i, j in itertools.combinations(range(5), 2):
        if lam[i] == lam[j]:
            k, l, m = sorted(set(range(5)) - {i, j})
            pts.append(EckardtPoint((i, j), (k, l, m), _new_lines(lam, k, l, m)))
    return len(pts), pts


# -- automorphisms -----------------------------------------------------------


def apply_linear(f: MultiPoly, m: Sequence[Sequence], variables: Sequence[str] = X) -> MultiPoly:
    """``f(m x)``: variable i is replaced by ``sum_j m[i][j] x_j``."""
    vs = [MultiPoly.var(f.names, v) for v in variables]
    images = {}
    for i, v in enumerate(variables):
        t = MultiPoly(f.names)
        for j, w in enumerate(vs):
            if m[i][j]:
                t = t + w * m[i][j]
        images[v] = t
    return f.substitute(images, f.names)


def _det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    out = 0
    for j in range(n):
        if m[0][j]:
            sub = [r[:j] + r[j + 1 :] for r in m[1:]]
            out = out + (-1) ** j * m[0][j] * _det(sub)
    return out


def is_automorphism(f: MultiPoly, m: Sequence[Sequence], variables: Sequence[str] = X):
    """``(True, c)`` when ``f(m x) = c f(x)``, else ``(False, None)``."""
    if _det([list(r) for r in m]) == 0:
        raise ValueError("matrix is singular")
    g = apply_linear(f, m, variables)
    if f.is_zero():
        return g.is_zero(), 1
    e, cf = f.leading_term()
    cg = g.coefficient(e)
    if not cg:
        return False, None
    c = cg / cf if not isinstance(cf, int) else (cg * Fraction(1, cf) if not isinstance(cg, NFElement) else cg * Fraction(1, cf))
    if isinstance(c, Fraction) and c.denominator == 1:
        c = c.numerator
    ok = g == f * c
    return (ok, c) if ok else (False, None)


def _matmul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), 0) for j in range(n)] for i in range(n)]


def projective_order(m: Sequence[Sequence], limit: int = 100) -> int:
    """Least ``k`` with ``m^k`` scalar."""
    m = [list(r) for r in m]
    p = m
    for k in range(1, limit + 1):
        d = p[0][0]
        n = len(p)
        scalar = all(p[i][j] == 0 for i in range(n) for j in range(n) if i != j) and all(
            p[i][i] == d for i in range(n)
        )
        if scalar and d != 0:
            return k
        p = _matmul(p, m)
    raise ValueError("order exceeds the search limit")
