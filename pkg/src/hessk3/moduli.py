"""The moduli space P(1,2,3,4,5) of cubic surfaces: invariants, the maps
phi and psi, divisors, limits of degenerating families and a catalog of
special surfaces."""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from pathlib import Path
from typing import Optional, Sequence

from . import linalg as la
from .cubic import (
    X,
    SylvesterSurface,
    disc32_symbolic,
    hessian_form,
    sylvester_to_cubic,
)
from .poly import (
    MultiPoly,
    NFElement,
    NonExactDivision,
    PolyError,
    PolyRing,
    cyclotomic_field,
    discriminant_univariate,
    exact_div,
)

WEIGHTS = (1, 2, 3, 4, 5)
I_NAMES = ("I8", "I16", "I24", "I32", "I40")
I_WEIGHTS = (8, 16, 24, 32, 40)
SIGMA = ("s1", "s2", "s3", "s4", "s5")


class ModuliError(ValueError):
    pass


def _is_zero(x) -> bool:
    if isinstance(x, MultiPoly):
        return x.is_zero()
    return x == 0


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    if isinstance(x, NFElement) and x.is_rational():
        return _norm(Fraction(x.to_rational()))
    if isinstance(x, MultiPoly) and x.is_constant():
        return _norm(x.constant_value())
    return x


@dataclass(frozen=True)
class WeightedPoint:
    """Point of P(1,2,3,4,5).  ``flavor`` is ``"sigma"`` or ``"I"``.

    Coordinates may be rationals, number field elements or polynomials in
    free parameters (points over a function field).
    """

    coords: tuple
    flavor: str = "I"

    def __post_init__(self):
        if len(self.coords) != 5:
            raise ModuliError("a weighted point has five coordinates")
        if self.flavor not in ("sigma", "I"):
            raise ModuliError(f"unknown flavor {self.flavor!r}")
        object.__setattr__(self, "coords", tuple(_norm(c) for c in self.coords))
        if all(_is_zero(c) for c in self.coords):
            raise ModuliError("all coordinates vanish")

    def zero_pattern(self) -> tuple[bool, ...]:
        return tuple(_is_zero(c) for c in self.coords)

    def rescale(self, t) -> "WeightedPoint":
        return WeightedPoint(tuple(c * t**w for c, w in zip(self.coords, WEIGHTS)), self.flavor)

    def __str__(self):
        return "(" + ":".join(str(c) for c in self.coords) + ")"

    def to_json(self) -> list[str]:
        out = []
        for c in self.coords:
            if isinstance(c, NFElement):
                out.append(repr(c))
            else:
                out.append(str(c))
        return out


def parse_point(text: str, flavor: str = "I") -> WeightedPoint:
    """``"(8:1:0:0:0)"`` or ``"8,1,0,0,0"``."""
    s = text.strip().strip("()")
    parts = s.replace(":", ",").split(",")
    try:
        return WeightedPoint(tuple(Fraction(p.strip()) for p in parts), flavor)
    except (ValueError, ZeroDivisionError) as exc:
        raise ModuliError(f"cannot parse point {text!r}: {exc}") from exc


# -- invariants --------------------------------------------------------------


def elementary_symmetric(values: Sequence) -> tuple:
    """``(e1, ..., en)`` of the given values."""
    e = [1] + [0] * len(values)
    for v in values:
        for k in range(len(values), 0, -1):
            e[k] = e[k] + e[k - 1] * v
    return tuple(e[1:])


def phi(s: WeightedPoint) -> WeightedPoint:
    """Salmon invariants from the elementary symmetric functions."""
    if s.flavor != "sigma":
        raise ModuliError("phi expects a sigma point")
    s1, s2, s3, s4, s5 = s.coords
    inv = (
        s4 * s4 - 4 * s3 * s5,
        s5**3 * s1,
        s5**4 * s4,
        s5**6 * s2,
        s5**8,
    )
    if all(_is_zero(c) for c in inv):
        raise ModuliError("invariants vanish identically (sigma4 = sigma5 = 0)")
    return WeightedPoint(inv, "I")


def psi(p: WeightedPoint) -> WeightedPoint:
    """Birational inverse of ``phi``; undefined only at ``(1:0:0:0:0)``."""
    if p.flavor != "I":
        raise ModuliError("psi expects an invariant point")
    i8, i16, i24, i32, i40 = p.coords
    out = (i16, i32, (i24 * i24 - i8 * i40) * Fraction(1, 4), i24 * i40, i40 * i40)
    if all(_is_zero(c) for c in out):
        raise ModuliError("the base point (1:0:0:0:0) has no image under psi")
    return WeightedPoint(out, "sigma")


def sigma_point(lam: Sequence) -> WeightedPoint:
    return WeightedPoint(elementary_symmetric(list(lam)), "sigma")


def invariants_point(lam: Sequence) -> WeightedPoint:
    return phi(sigma_point(lam))


# -- weighted projective geometry ----------------------------------------------


@lru_cache(maxsize=None)
def _relations(support: tuple[int, ...]) -> list[list[int]]:
    """Basis of ``{a : sum a_i w_i = 0}`` over the given coordinates."""
    if len(support) < 2:
        return []
    return la.kernel([[WEIGHTS[i] for i in support]])


def _prod(xs, one):
    return reduce(lambda a, b: a * b, xs, one)


def wps_equal(p: WeightedPoint, q: WeightedPoint) -> bool:
    """Equality over the algebraic closure.

    ``q = t.p`` is solvable iff ``prod r_i^{a_i} = 1`` (``r = q/p``) for every
    integer relation ``sum a_i w_i = 0`` among the nonzero coordinates; a
    basis of the relation lattice suffices.
    """
    if p.flavor != q.flavor:
        raise ModuliError("points of different flavors")
    if p.zero_pattern() != q.zero_pattern():
        return False
    support = tuple(i for i, z in enumerate(p.zero_pattern()) if not z)
    for a in _relations(support):
        lhs, rhs = [], []
        for k, i in enumerate(support):
            if a[k] > 0:
                lhs.append(q.coords[i] ** a[k])
                rhs.append(p.coords[i] ** a[k])
            elif a[k] < 0:
                lhs.append(p.coords[i] ** -a[k])
                rhs.append(q.coords[i] ** -a[k])
        diff = _prod(lhs, 1) - _prod(rhs, 1)
        if not _is_zero(diff):
            return False
    return True


def wps_is_singular(p: WeightedPoint) -> bool:
    ws = [w for w, z in zip(WEIGHTS, p.zero_pattern()) if not z]
    return math.gcd(*ws) > 1


def singular_locus_component(p: WeightedPoint) -> Optional[str]:
    """Name of the component of the singular locus containing ``p``."""
    pat = tuple(not z for z in p.zero_pattern())
    if pat == (False, False, True, False, False):
        return "(0:0:1:0:0)"
    if pat == (False, False, False, False, True):
        return "(0:0:0:0:1)"
    if not pat[0] and not pat[2] and not pat[4]:
        return "(0:a:0:b:0)"
    return None


# -- divisors ------------------------------------------------------------------


def _iring():
    return PolyRing(I_NAMES)


@lru_cache(maxsize=1)
def divisor_polynomials() -> dict[str, MultiPoly]:
    r = _iring()
    i8, i16, i24, i32, i40 = r.gens
    return {
        "boundary": (i8 * i8 - 64 * i16) ** 2 - 2**14 * (i32 + Fraction(1, 8) * i8 * i24),
        "kummer": i8 * i24 + 8 * i32,
        "g": 16 * i16**3 * i24**2
        + 27 * i24**4
        - 72 * i16 * i24**2 * i32
        - 16 * i16**2 * i32**2
        + 64 * i32**3,
    }


def boundary_polynomial() -> MultiPoly:
    return divisor_polynomials()["boundary"]


def boundary_sides(p: WeightedPoint) -> tuple:
    """Left and right side of the boundary equation at ``p``."""
    i8, i16, i24, i32, _ = p.coords
    return (i8 * i8 - 64 * i16) ** 2, 2**14 * (i32 + Fraction(1, 8) * i8 * i24)


def divisor_membership(p: WeightedPoint, tritangent: bool = False) -> dict[str, bool]:
    if p.flavor != "I":
        raise ModuliError("divisor membership needs an invariant point")
    i8, i16, i24, i32, i40 = p.coords
    polys = divisor_polynomials()
    lhs, rhs = boundary_sides(p)
    flags = {
        "boundary": lhs == rhs,
        "kummer": _is_zero(polys["kummer"].evaluate(p.coords)),
        "non_sylvester": _is_zero(i40),
        "ns2_locus": _is_zero(i24) and _is_zero(i40),
        "cyclic_locus": _is_zero(i24) and _is_zero(i32) and _is_zero(i40),
        "fermat_point": wps_equal(p, FERMAT_POINT),
        "g_locus": _is_zero(i40) and _is_zero(polys["g"].evaluate(p.coords)),
    }
    if tritangent:
        flags["tritangent"] = _is_zero(tritangent_polynomial().f.evaluate(p.coords))
    return flags


FERMAT_POINT = WeightedPoint((1, 0, 0, 0, 0), "I")
SEMISTABLE_POINT = WeightedPoint((8, 1, 0, 0, 0), "I")


# -- the degree 32 identity ------------------------------------------------------


def boundary_through_sigma() -> MultiPoly:
    """The boundary polynomial composed with ``phi`` and the elementary
    symmetric functions of ``l0..l4``."""
    lam_ring = PolyRing(("l0", "l1", "l2", "l3", "l4"))
    sig = elementary_symmetric(lam_ring.gens)
    inv = phi(WeightedPoint(sig, "sigma")).coords
    return boundary_polynomial().substitute(dict(zip(I_NAMES, inv)), lam_ring.names)


def disc32_identity() -> tuple[bool, object]:
    """``(holds, constant)`` for disc32 = c * boundary(phi(sigma))."""
    d = disc32_symbolic()
    b = boundary_through_sigma()
    e, cd = d.leading_term()
    cb = b.coefficient(e)
    if not cb:
        return False, None
    c = Fraction(cd) / Fraction(cb)
    return d == b * c, _norm(c)


# -- tritangent divisor -----------------------------------------------------------


def quintic_discriminant_sigma() -> MultiPoly:
    """Discriminant of ``x^5 - s1 x^4 + s2 x^3 - s3 x^2 + s4 x - s5``."""
    r = PolyRing(("x",) + SIGMA)
    x = r["x"]
    s = [r[n] for n in SIGMA]
    p = x**5 - s[0] * x**4 + s[1] * x**3 - s[2] * x**2 + s[3] * x - s[4]
    return discriminant_univariate(p, "x").drop(SIGMA)


def pull_back_psi(poly: MultiPoly) -> MultiPoly:
    """Substitute the components of ``psi`` for ``s1..s5``."""
    r = _iring()
    i8, i16, i24, i32, i40 = r.gens
    images = [i16, i32, (i24 * i24 - i8 * i40) * Fraction(1, 4), i24 * i40, i40 * i40]
    return poly.substitute(dict(zip(SIGMA, images)), I_NAMES)


@dataclass
class TritangentResult:
    f: MultiPoly
    pullback_weight: int
    f_weight: int
    i40_power: int
    constant: object
    factorization_holds: bool
    from_cache: bool = False


def _cache_path() -> Optional[Path]:
    d = os.environ.get("HESSK3_CACHE_DIR")
    if not d:
        return None
    return Path(d) / "tritangent_f.json"


def _compute_f() -> tuple[MultiPoly, int, int]:
    pulled = pull_back_psi(quintic_discriminant_sigma())
    ws = pulled.weighted_degrees(I_WEIGHTS)
    if len(ws) != 1:
        raise ModuliError(f"pull-back is not weighted homogeneous: {sorted(ws)}")
    k = 0
    f = pulled
    # the largest power of I40 that divides
    i40 = MultiPoly.var(I_NAMES, "I40")
    while True:
        try:
            g = exact_div(f, i40)
        except NonExactDivision:
            break
        f, k = g, k + 1
    return f, ws.pop(), k


@lru_cache(maxsize=1)
def tritangent_polynomial() -> TritangentResult:
    """The polynomial ``f`` with ``I100^2 = f`` (up to a constant), from the
    quintic discriminant pulled back along ``psi``.

    The pull-back must be divisible by ``I40^3`` exactly; ``f`` is reported
    with content 1 and positive leading coefficient.
    """
    path = _cache_path()
    cached = False
    if path is not None and path.exists():
        try:
            obj = json.loads(path.read_text())
            f = MultiPoly.from_json(obj["f"])
            weight, k = obj["pullback_weight"], obj["i40_power"]
            cached = True
        except (ValueError, KeyError, TypeError):
            # unreadable checkpoint: recompute and overwrite it
            pass
    if not cached:
        f, weight, k = _compute_f()
        f = f.primitive()
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_text(
                json.dumps({"f": f.to_json(), "pullback_weight": weight, "i40_power": k}, sort_keys=True)
            )
            tmp.replace(path)
    if k < 3:
        raise NonExactDivision(f)
    fw = f.weighted_degrees(I_WEIGHTS)
    holds, c = i40_factorization(f)
    return TritangentResult(f, weight, fw.pop() if len(fw) == 1 else -1, k, c, holds, cached)


def i40_factorization(f: MultiPoly) -> tuple[bool, object]:
    """Check ``f|_{I40=0} = c I24^3 (I8 I24 + 8 I32) g`` for one constant ``c``."""
    r = _iring()
    restricted = f.substitute({"I40": 0}, I_NAMES)
    polys = divisor_polynomials()
    target = r["I24"] ** 3 * polys["kummer"] * polys["g"]
    e, ct = target.leading_term()
    cr = restricted.coefficient(e)
    if not cr:
        return False, None
    c = Fraction(cr) / Fraction(ct)
    return restricted == target * c, _norm(c)


# -- limits of families -------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Five Laurent polynomials ``l_i(t)``, possibly with extra parameters."""

    lams: tuple
    var: str = "t"

    def __post_init__(self):
        if len(self.lams) != 5:
            raise ModuliError("a family needs five coefficients")
        names = self.lams[0].names
        if any(l.names != names for l in self.lams):
            raise ModuliError("family coefficients live in different rings")
        if self.var not in names:
            raise ModuliError(f"family variable {self.var!r} is missing")
        if any(l.is_zero() for l in self.lams):
            raise ModuliError("a family coefficient vanishes identically")

    @property
    def names(self) -> tuple:
        return self.lams[0].names

    @property
    def params(self) -> tuple:
        return tuple(n for n in self.names if n != self.var)

    @classmethod
    def from_json(cls, obj) -> "FamilySpec":
        """``{"lambda": [[[exponent, "coefficient"], ...] x 5]}``."""
        if isinstance(obj, dict):
            obj = obj.get("lambda")
        if not isinstance(obj, list) or len(obj) != 5:
            raise ModuliError("family JSON needs a list of five term lists")
        lams = []
        for terms in obj:
            d = {}
            for e, c in terms:
                if int(e) != e:
                    raise ModuliError("exponents must be integers")
                d[(int(e),)] = d.get((int(e),), 0) + Fraction(str(c))
            lams.append(MultiPoly(("t",), d))
        return cls(tuple(lams))


@dataclass(frozen=True)
class Limit:
    point: WeightedPoint
    exponent: Fraction
    d: int
    valuations: tuple


def weighted_limit(fam: FamilySpec) -> Limit:
    """Limit as ``t -> 0`` of the invariant point of the family.

    With ``v_n`` the ``t``-valuation of coordinate ``n`` and
    ``e = max(-v_n / w_n)``, coordinate ``n`` is rescaled by ``t^(e w_n)``;
    after ``t = u^d`` this is a polynomial rescaling and ``u = 0`` picks the
    coefficient of ``t^(-e w_n)``.
    """
    inv = invariants_point(fam.lams).coords
    t = fam.var
    vals = tuple(None if c.is_zero() else c.valuation(t) for c in inv)
    if all(v is None for v in vals):
        raise ModuliError("degenerate family")
    e = max(Fraction(-v, w) for v, w in zip(vals, WEIGHTS) if v is not None)
    d = 1
    for w in WEIGHTS:
        d = d * (e * w).denominator // math.gcd(d, (e * w).denominator)
    params = fam.params
    out = []
    for c, v, w in zip(inv, vals, WEIGHTS):
        if v is not None and v == -e * w:
            lead = c.leading_at_zero(t)
            out.append(lead.drop(params) if params else lead.constant_value())
        else:
            out.append(MultiPoly(params) if params else 0)
    if all(_is_zero(c) for c in out):
        raise ModuliError("degenerate family")
    return Limit(WeightedPoint(tuple(out), "I"), e, d, vals)


def _laurent_ring(params: Sequence[str]) -> PolyRing:
    return PolyRing(("t",) + tuple(params))


def family_ns1() -> FamilySpec:
    r = _laurent_ring(("a0", "a1", "a2", "a3"))
    t, a0, a1, a2, a3 = r.gens
    ti = t**-1
    return FamilySpec((a0 + ti, (a1 * t) ** -3, (a2 * t) ** -3, (a3 * t) ** -3, ti))


def family_ns2() -> FamilySpec:
    r = _laurent_ring(("lam", "mu"))
    t, lam, mu = r.gens
    return FamilySpec(
        (t**-2, (mu * t**2) ** -3, t**-6, lam * Fraction(1, 4) + Fraction(1, 4) * t**-2, t**-2)
    )


def family_cyclic(lams: Optional[Sequence] = None) -> FamilySpec:
    if lams is None:
        r = _laurent_ring(("l0", "l1", "l2", "l3", "l4"))
        t, *ls = r.gens
    else:
        r = _laurent_ring(())
        t = r.gens[0]
        ls = [r.const(x) for x in lams]
    return FamilySpec((ls[0], ls[1], ls[2], ls[3], ls[4] * t**-3))


def expected_ns1() -> WeightedPoint:
    r = PolyRing(("a0", "a1", "a2", "a3"))
    a0, a1, a2, a3 = r.gens
    rho1, rho2, rho3 = elementary_symmetric([a1**3, a2**3, a3**3])
    return WeightedPoint((-4 * rho1 + a0 * a0, rho2, 2 * rho3, rho1 * rho3, r.zero()), "I")


def expected_ns2() -> WeightedPoint:
    r = PolyRing(("lam", "mu"))
    lam, mu = r.gens
    return WeightedPoint((-8 * lam, 1 + mu**3, r.zero(), mu**3, r.zero()), "I")


def expected_cyclic() -> WeightedPoint:
    r = PolyRing(("l0", "l1", "l2", "l3", "l4"))
    _, tau2, tau3, tau4 = elementary_symmetric(r.gens[:4])
    return WeightedPoint((tau3 * tau3 - 4 * tau2 * tau4, tau4**3, r.zero(), r.zero(), r.zero()), "I")


def reparametrize(fam: FamilySpec, c) -> FamilySpec:
    """``t -> c t``."""
    t = MultiPoly.var(fam.names, fam.var)
    return FamilySpec(tuple(l.substitute({fam.var: t * c}, fam.names) for l in fam.lams), fam.var)


# -- catalog ------------------------------------------------------------------------


def _forms():
    r = PolyRing(X)
    return r, r.gens


def order3_form() -> MultiPoly:
    """Cubic at the singular point ``(0:0:1:0:0)``; coefficients in Q(omega)."""
    _, (x0, x1, x2, x3) = _forms()
    w = cyclotomic_field(3).gen
    return x1**3 + x2**3 * w + x3**3 * (w * w) - 3 * x0**2 * (x1 + x2 + x3)


def order5_sylvester() -> SylvesterSurface:
    eta = cyclotomic_field(5).gen
    return SylvesterSurface(tuple(eta**i for i in range(5)))


def ns1_form(a0, a1, a2, a3) -> MultiPoly:
    _, (x0, x1, x2, x3) = _forms()
    return x1**3 + x2**3 + x3**3 - x0**2 * (a0 * x0 + 3 * a1 * x1 + 3 * a2 * x2 + 3 * a3 * x3)


def ns2_form(lam, mu) -> MultiPoly:
    _, (x0, x1, x2, x3) = _forms()
    return x1**3 + x2**3 + 2 * lam * x3**3 - 3 * x3 * (mu * x1 * x3 + x2 * x3 + x0**2)


def s_mu_form(mu) -> MultiPoly:
    return ns2_form(0, mu)


def cyclic_form(lams: Sequence) -> MultiPoly:
    """``l4 x3^3 - l3 (x0+x1+x2)^3 + l0 x0^3 + l1 x1^3 + l2 x2^3``."""
    _, (x0, x1, x2, x3) = _forms()
    l0, l1, l2, l3, l4 = lams
    return l4 * x3**3 - l3 * (x0 + x1 + x2) ** 3 + l0 * x0**3 + l1 * x1**3 + l2 * x2**3


def semistable_form() -> MultiPoly:
    """``x3^3 = x0 x1 x2``."""
    _, (x0, x1, x2, x3) = _forms()
    return x3**3 - x0 * x1 * x2


def _perms_first(p: Sequence, k: int) -> list[tuple]:
    """Distinct permutations of the first ``k`` coordinates."""
    import itertools

    seen = []
    for q in itertools.permutations(p[:k]):
        t = tuple(q) + tuple(p[k:])
        if t not in seen:
            seen.append(t)
    return seen


@dataclass
class CatalogEntry:
    name: str
    lam: Optional[tuple] = None
    form: Optional[str] = None
    nodes: list = field(default_factory=list)
    eckardt: Optional[int] = None
    ipoint: Optional[WeightedPoint] = None
    flags: dict = field(default_factory=dict)
    transcendental: Optional[list] = None
    automorphism: Optional[tuple] = None  # (matrix, order, variables)
    note: str = ""

    def cubic(self) -> MultiPoly:
        if self.lam is not None:
            return sylvester_to_cubic(SylvesterSurface(self.lam))
        return _FORM_BUILDERS[self.form][0]()


# form name -> (builder, parameters, family whose limit gives the point)
_FORM_BUILDERS = {
    "order3": (lambda: order3_form(), None, None),
    "s_mu": (lambda: s_mu_form(Fraction(2, 3)), (0, Fraction(2, 3)), "ns2"),
    "ns1": (lambda: ns1_form(1, 2, 3, 5), (1, 2, 3, 5), "ns1"),
    "ns2": (lambda: ns2_form(Fraction(1, 2), 3), (Fraction(1, 2), 3), "ns2"),
    "cyclic": (lambda: cyclic_form((1, 2, 3, 5, 7)), (1, 2, 3, 5, 7), "cyclic"),
    "fermat": (lambda: cyclic_form((1, 1, 1, 0, 1)), (1, 1, 1, 0, 1), "cyclic"),
    "semistable": (semistable_form, (1, 1, 1, 1, 1), "cyclic"),
}

_FAMILIES = {"ns1": family_ns1, "ns2": family_ns2, "cyclic": family_cyclic}


def order5_matrix() -> list[list[int]]:
    """The cyclic shift of the five Sylvester forms, written in ``x0..x3``."""
    return [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [-1, -1, -1, -1]]


@lru_cache(maxsize=1)
def catalog() -> list[CatalogEntry]:
    q = Fraction
    w = cyclotomic_field(3).gen
    i = cyclotomic_field(4).gen
    eta = cyclotomic_field(5).gen
    out = [
        CatalogEntry(
            "clebsch",
            lam=(1, 1, 1, 1, 1),
            eckardt=10,
            ipoint=WeightedPoint((-15, 5, 5, 10, 1)),
            flags={"boundary": False},
            transcendental=[[[4, 1], [1, 4]]],
        ),
        CatalogEntry(
            "cayley",
            lam=(1, 1, 1, 1, q(1, 4)),
            nodes=[(-1, 1, 1, 1, -2), (1, -1, 1, 1, -2), (1, 1, -1, 1, -2), (1, 1, 1, -1, -2)],
            eckardt=6,
            ipoint=WeightedPoint((q(-3, 2), q(17, 256), q(1, 128), q(7, 4096), q(1, 65536))),
            flags={"boundary": True},
            transcendental=[[[2, 0], [0, 6]]],
        ),
        CatalogEntry(
            "s1n6",
            lam=(1, 1, 1, 1, q(1, 16)),
            nodes=[(1, 1, 1, 1, -4)],
            eckardt=6,
            flags={"boundary": True},
            transcendental=[[[2, 0], [0, 24]]],
        ),
        CatalogEntry(
            "s1n4",
            lam=(1, 1, 1, q(4, 9), q(4, 9)),
            nodes=[(-2, -2, -2, 3, 3)],
            eckardt=4,
            flags={"boundary": True},
            transcendental=[[[6, 0], [0, 12]], [[2, 0], [0, 4]]],
            note="index 1 and index 3 branches both reported",
        ),
        CatalogEntry(
            "s3n4",
            lam=(1, 1, 1, 4, 4),
            nodes=_perms_first((-2, 2, 2, -1, -1), 3),
            eckardt=4,
            flags={"boundary": True},
            transcendental=[[[4, 0], [0, 6]]],
        ),
        CatalogEntry("ns1", form="ns1", flags={"non_sylvester": True}),
        CatalogEntry("ns2", form="ns2", flags={"non_sylvester": True, "ns2_locus": True}),
        CatalogEntry("cyclic", form="cyclic", flags={"cyclic_locus": True}),
        CatalogEntry(
            "fermat",
            form="fermat",
            ipoint=FERMAT_POINT,
            flags={"fermat_point": True, "cyclic_locus": True},
        ),
        CatalogEntry(
            "semistable",
            form="semistable",
            ipoint=SEMISTABLE_POINT,
            flags={"boundary": True, "cyclic_locus": True},
            note="limit of the cyclic family with l0 = l1 = l2 = l3 = 1",
        ),
        CatalogEntry(
            "order3",
            form="order3",
            nodes=[(1, 1, w, w * w), (-1, 1, w, w * w)],
            ipoint=WeightedPoint((0, 0, 1, 0, 0)),
            automorphism=([[w, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0]], 3, X),
        ),
        CatalogEntry(
            "order5",
            lam=tuple(eta**k for k in range(5)),
            nodes=[(1, eta**2, eta**4, eta, eta**3)],
            ipoint=WeightedPoint((0, 0, 0, 0, 1)),
            automorphism=(order5_matrix(), 5, X),
        ),
        CatalogEntry(
            "s_mu",
            form="s_mu",
            ipoint=s_mu_point(q(2, 3)),
            automorphism=([[i, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, -1]], 4, X),
        ),
    ]
    return out


def s_mu_point(mu) -> WeightedPoint:
    """``(0 : 1 + mu^3 : 0 : mu^3 : 0)``."""
    return WeightedPoint((0, 1 + mu**3, 0, mu**3, 0))


def catalog_entry(name: str) -> CatalogEntry:
    for e in catalog():
        if e.name == name:
            return e
    raise KeyError(name)


@lru_cache(maxsize=None)
def _generic_limit(family: str) -> WeightedPoint:
    return weighted_limit(_FAMILIES[family]()).point


def specialize(p: WeightedPoint, names: Sequence[str], values: Sequence) -> WeightedPoint:
    """Evaluate a point over a function field at parameter values."""
    vals = dict(zip(names, values))
    return WeightedPoint(
        tuple(c.evaluate(vals) if isinstance(c, MultiPoly) else c for c in p.coords), p.flavor
    )


def catalog_point(e: CatalogEntry) -> Optional[WeightedPoint]:
    """The invariant point, computed from the Sylvester form or by
    specializing the limit of the matching degenerating family.  None when
    neither applies."""
    if e.lam is not None:
        return invariants_point(e.lam)
    _, params, family = _FORM_BUILDERS[e.form]
    if family is None:
        return None
    gen = _generic_limit(family)
    names = _FAMILIES[family]().params
    return specialize(gen, names, params)


def hessian_reducible_by_x0(f: MultiPoly) -> bool:
    """True when ``x0`` divides the Hessian quartic."""
    try:
        exact_div(hessian_form(f), MultiPoly.var(f.names, "x0"))
    except (NonExactDivision, PolyError):
        return False
    return True
