"""Discriminant groups, discriminant quadratic forms and even overlattices."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence

from .. import linalg as la
from .core import Lattice, LatticeError


def mod2(q: Fraction) -> Fraction:
    return q - 2 * (q.numerator // (2 * q.denominator))


def mod1(q: Fraction) -> Fraction:
    return q - q.numerator // q.denominator


@dataclass(frozen=True)
class DiscriminantForm:
    """The finite quadratic form on ``L*/L``.

    ``generators`` are dual vectors in lattice coordinates, one per invariant
    factor; ``q_values`` live in Q/2Z and ``b_values`` in Q/Z.
    """

    lattice: Lattice
    invariant_factors: tuple[int, ...]
    generators: tuple[tuple[Fraction, ...], ...]

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def q(self, v: Sequence[Fraction]) -> Fraction:
        return mod2(la.bilinear(v, self.lattice.gram, v))

    def b(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        return mod1(la.bilinear(u, self.lattice.gram, v))

    @cached_property
    def q_values(self) -> tuple[Fraction, ...]:
        return tuple(self.q(g) for g in self.generators)

    @cached_property
    def b_values(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(self.b(g, h) for h in self.generators) for g in self.generators)

    def element(self, coeffs: Sequence[int]) -> tuple[Fraction, ...]:
        n = self.lattice.rank
        return tuple(
            sum((c * g[i] for c, g in zip(coeffs, self.generators)), Fraction(0)) for i in range(n)
        )

    def elements(self):
        """All ``(coeffs, vector)`` pairs, coefficients in generator order."""
        for coeffs in itertools.product(*(range(d) for d in self.invariant_factors)):
            yield coeffs, self.element(coeffs)

    def is_in_lattice(self, v: Sequence[Fraction]) -> bool:
        return all(Fraction(x).denominator == 1 for x in v)

    def element_order(self, coeffs: Sequence[int]) -> int:
        o = 1
        for c, d in zip(coeffs, self.invariant_factors):
            k = d // _gcd(c, d)
            o = o * k // _gcd(o, k)
        return o

    def check(self) -> bool:
        """Polarisation identity ``q(x+y)-q(x)-q(y) = 2 b(x,y)`` on generators."""
        for g, h in itertools.product(self.generators, repeat=2):
            s = tuple(x + y for x, y in zip(g, h))
            if mod2(self.q(s) - self.q(g) - self.q(h) - 2 * self.b(g, h)) != 0:
                return False
        return True


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def discriminant_form(lat: Lattice) -> DiscriminantForm:
    if lat.is_degenerate:
        raise LatticeError("discriminant form of a degenerate lattice")
    n = lat.rank
    if n == 0:
        return DiscriminantForm(lat, (), ())
    u, s, v = la.snf(lat.gram)
    factors = []
    gens = []
    for i in range(n):
        d = s[i][i]
        if d > 1:
            factors.append(d)
            gens.append(tuple(Fraction(v[r][i], d) for r in range(n)))
    return DiscriminantForm(lat, tuple(factors), tuple(gens))


def discriminant_data(lat: Lattice) -> tuple[int, DiscriminantForm]:
    return lat.det, discriminant_form(lat)


def _forms_match(a: DiscriminantForm, b: DiscriminantForm, sign: int) -> bool:
    if a.invariant_factors != b.invariant_factors:
        return False
    k = len(a.invariant_factors)
    if k == 0:
        return True
    # candidate images for each generator of a: same order, matching q
    elems = list(b.elements())
    qa = a.q_values
    ba = a.b_values
    cands = []
    for i, d in enumerate(a.invariant_factors):
        target = mod2(sign * qa[i])
        c = [vec for co, vec in elems if b.element_order(co) == d and b.q(vec) == target]
        if not c:
            return False
        cands.append(c)

    chosen: list = []

    def search(i: int) -> bool:
        if i == k:
            # b is nondegenerate on both sides, so a form-preserving map with
            # matching orders is injective, hence bijective
            return True
        for x in cands[i]:
            if all(b.b(x, chosen[j]) == mod1(sign * ba[i][j]) for j in range(i)):
                chosen.append(x)
                if search(i + 1):
                    return True
                chosen.pop()
        return False

    return search(0)


def disc_forms_isomorphic(a: Lattice, b: Lattice) -> bool:
    if abs(a.det) != abs(b.det):
        return False
    return _forms_match(discriminant_form(a), discriminant_form(b), 1)


def disc_forms_opposite(a: Lattice, b: Lattice) -> bool:
    """True iff some group isomorphism carries ``q_a`` to ``-q_b``."""
    if abs(a.det) != abs(b.det):
        return False
    return _forms_match(discriminant_form(a), discriminant_form(b), -1)


def isotropic_glue(
    lat: Lattice, p: int, primitive_coords: Optional[Sequence[int]] = None
) -> list[tuple[Fraction, ...]]:
    """Generators of the order-``p`` isotropic subgroups of ``L*/L``.

    With ``primitive_coords`` (a set of coordinate indices spanning a
    sublattice S), subgroups that would make S imprimitive in the overlattice
    are skipped: those with a glue vector integral outside S.
    """
    if lat.det % (p * p):
        return []
    form = discriminant_form(lat)
    keep = None if primitive_coords is None else set(primitive_coords)
    seen: set = set()
    out = []
    for coeffs, vec in form.elements():
        if not any(coeffs) or form.element_order(coeffs) != p:
            continue
        if form.q(vec) != 0:
            continue
        key = frozenset(
            tuple(mod1(k * x) for x in vec) for k in range(1, p)
        )
        if key in seen:
            continue
        seen.add(key)
        if keep is not None and all(
            Fraction(vec[i]).denominator == 1 for i in range(lat.rank) if i not in keep
        ):
            continue
        out.append(vec)
    return out


def overlattice_basis(lat: Lattice, glue: Sequence[Fraction]) -> list[list[Fraction]]:
    """Basis (rational rows, lattice coordinates) of ``L + Z glue``."""
    den = 1
    for x in glue:
        den = den * Fraction(x).denominator // _gcd(den, Fraction(x).denominator)
    rows = [[den * int(i == j) for j in range(lat.rank)] for i in range(lat.rank)]
    rows.append([int(den * Fraction(x)) for x in glue])
    h, _ = la.hnf(rows)
    return [[Fraction(x, den) for x in r] for r in h if any(r)]


def even_overlattices(
    lat: Lattice, p: int, primitive_coords: Optional[Sequence[int]] = None
) -> list[Lattice]:
    """All even overlattices of prime index ``p``.

    Found from the isotropic order-``p`` subgroups of the discriminant form;
    see :func:`isotropic_glue` for ``primitive_coords``.
    """
    out = []
    for glue in isotropic_glue(lat, p, primitive_coords):
        basis = overlattice_basis(lat, glue)
        g = la.congruence(basis, lat.gram)
        if any(Fraction(x).denominator != 1 for r in g for x in r):
            raise LatticeError("glue vector does not give an integral overlattice")
        gram = [[int(x) for x in r] for r in g]
        out.append(Lattice(gram, None))
    return out


def format_q(q: Fraction) -> str:
    return f"{q} mod 2"
