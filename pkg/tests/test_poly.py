"""Polynomial layer, checked against sympy as an independent oracle."""

import random
from fractions import Fraction

import pytest
import sympy

from hessk3.poly import (
    MultiPoly,
    NonExactDivision,
    PolyRing,
    cyclotomic_field,
    det_poly_matrix,
    discriminant_univariate,
    exact_div,
    quadratic_field,
    resultant,
)

NAMES = ("x", "y", "z")
SYMS = sympy.symbols(NAMES)


def to_sympy(p: MultiPoly):
    out = 0
    for e, c in p.terms.items():
        t = sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sympy.Integer(c)
        for s, k in zip(SYMS, e):
            t *= s**k
        out += t
    return sympy.expand(out)


def rand_poly(rng, nterms=6, deg=4):
    terms = {}
    for _ in range(nterms):
        e = tuple(rng.randint(0, deg) for _ in NAMES)
        terms[e] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return MultiPoly(NAMES, terms)


@pytest.mark.parametrize("seed", range(20))
def test_arithmetic_matches_sympy(seed):
    rng = random.Random(seed)
    a, b = rand_poly(rng), rand_poly(rng)
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))
    assert to_sympy(a + b) == sympy.expand(to_sympy(a) + to_sympy(b))
    assert to_sympy(a**3) == sympy.expand(to_sympy(a) ** 3)
    assert to_sympy(a.derivative("y")) == sympy.diff(to_sympy(a), SYMS[1])


@pytest.mark.parametrize("seed", range(10))
def test_exact_div(seed):
    rng = random.Random(100 + seed)
    a, b = rand_poly(rng), rand_poly(rng)
    if b.is_zero():
        return
    assert exact_div(a * b, b) == a


def test_exact_div_rejects_remainder():
    r = PolyRing(NAMES)
    x, y, _ = r.gens
    with pytest.raises(NonExactDivision):
        exact_div(x * x + y, x)


def test_discriminant_and_resultant_match_sympy():
    r = PolyRing(NAMES)
    x, y, z = r.gens
    f = x**3 + y * x + z
    assert to_sympy(discriminant_univariate(f, "x")) == sympy.expand(sympy.discriminant(to_sympy(f), SYMS[0]))
    g = x * x - y
    assert to_sympy(resultant(f, g, "x")) == sympy.expand(sympy.resultant(to_sympy(f), to_sympy(g), SYMS[0]))


def test_det_poly_matrix_matches_sympy():
    rng = random.Random(5)
    m = [[rand_poly(rng, 3, 2) for _ in range(3)] for _ in range(3)]
    want = sympy.expand(sympy.Matrix([[to_sympy(p) for p in row] for row in m]).det())
    assert to_sympy(det_poly_matrix(m, NAMES)) == want


def test_laurent_valuation():
    r = PolyRing(("t", "a"))
    t, a = r.gens
    p = t**-2 * a + t**3
    assert p.valuation("t") == -2
    assert p.leading_at_zero("t").drop(("a",)) == MultiPoly.var(("a",), "a")


def test_json_round_trip():
    rng = random.Random(1)
    p = rand_poly(rng)
    assert MultiPoly.from_json(p.to_json()) == p


def test_cyclotomic_field():
    k = cyclotomic_field(3)
    w = k.gen
    assert w**3 == 1
    assert w * w + w + 1 == 0
    assert (1 + w).inverse() * (1 + w) == 1


def test_quadratic_field():
    k = quadratic_field(5)
    s = k.gen
    assert s * s == 5
    assert ((1 + s) / 2) ** 2 == (1 + s) / 2 + 1


def test_polynomial_over_number_field():
    w = cyclotomic_field(3).gen
    r = PolyRing(("x",))
    (x,) = r.gens
    p = (x - w) * (x - w * w) * (x - 1)
    assert p == x**3 - 1
