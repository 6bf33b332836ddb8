import random
from fractions import Fraction

import pytest

from hessk3.cubic import (
    X,
    SylvesterSurface,
    disc32,
    disc32_direct,
    eckardt_data,
    hessian_form,
    hessian_sylvester_closed,
    is_automorphism,
    parse_lambda,
    projective_order,
    singular_at,
    sylvester_to_cubic,
    vertex,
)
from hessk3.poly import PolyRing

ONES = SylvesterSurface((1, 1, 1, 1, 1))
CAYLEY = SylvesterSurface((1, 1, 1, 1, Fraction(1, 4)))


def test_parse_lambda():
    assert parse_lambda("1, 2,-3/4,0,5") == (1, 2, Fraction(-3, 4), 0, 5)
    with pytest.raises(ValueError):
        parse_lambda("1,2,3")
    with pytest.raises(ValueError):
        parse_lambda("1,2,3,4,x")


@pytest.mark.parametrize("seed", range(5))
def test_hessian_numeric(seed):
    rng = random.Random(seed)
    s = SylvesterSurface(tuple(Fraction(rng.randint(-9, 9) or 1, rng.randint(1, 5)) for _ in range(5)))
    assert hessian_form(sylvester_to_cubic(s)) == hessian_sylvester_closed(s) * 1296


def test_disc32_values():
    assert disc32(ONES) == -1215
    assert disc32(CAYLEY) == 0


@pytest.mark.parametrize("lam", [(1, 4, 9, 16, 25), (1, 1, 4, 9, 49), (4, 1, 1, 1, 1)])
def test_disc32_against_direct_product(lam):
    s = SylvesterSurface(lam)
    assert disc32(s) == disc32_direct(s)


def test_cayley_nodes():
    f = sylvester_to_cubic(CAYLEY)
    nodes = [[-1, 1, 1, 1, -2], [1, -1, 1, 1, -2], [1, 1, -1, 1, -2], [1, 1, 1, -1, -2]]
    for p in nodes:
        assert singular_at(f, p)
    assert not singular_at(sylvester_to_cubic(ONES), [1, 0, 0, 0, -1])


def test_vertex():
    assert vertex(0, 1, 2) == [0, 0, 0, 1, -1]


@pytest.mark.parametrize(
    "lam,count", [((1, 1, 2, 3, 5), 1), ((1, 1, 1, 1, Fraction(1, 4)), 6), ((1, 1, 1, 1, 1), 10), ((1, 2, 3, 5, 7), 0)]
)
def test_eckardt_counts(lam, count):
    assert eckardt_data(SylvesterSurface(lam))[0] == count


@pytest.mark.parametrize("lam", [(1, 1, 2, 3, 5), (2, 3, 3, 5, 7), (1, 1, 1, 1, 1)])
def test_eckardt_lines_lie_on_hessian(lam):
    """Each Eckardt point contributes two lines on the Hessian quartic."""
    s = SylvesterSurface(lam)
    h = hessian_sylvester_closed(s)
    _, pts = eckardt_data(s)
    for pt in pts:
        i, j = pt.pair
        k, l, m = pt.vertex
        for first, _plane in pt.ideals:
            # first = x_k - r x_l; read r off the coefficient of x_l
            r = -first.coefficient(tuple(int(n == l) for n in range(5)))
            for u, v in [(1, 0), (0, 1), (2, 3), (-1, 5)]:
                p = [0] * 5
                p[i], p[j] = u, -u
                p[l], p[k], p[m] = v, r * v, -(r + 1) * v
                assert h.evaluate(p[:4]) == 0


def test_automorphisms():
    r = PolyRing(X)
    x0, x1, x2, x3 = r.gens
    f = x0**3 + x1**3 + x2**3 + x3**3
    swap = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    assert is_automorphism(f, swap) == (True, 1)
    assert projective_order(swap) == 2
    assert is_automorphism(f, [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]) == (False, None)
    with pytest.raises(ValueError):
        is_automorphism(f, [[0] * 4] * 4)


def test_cone_has_zero_hessian():
    r = PolyRing(X)
    x0 = r.gens[0]
    assert hessian_form(x0**3).is_zero()

