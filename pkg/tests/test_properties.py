"""Randomized laws for the exact linear algebra and lattice layers.

Five properties at 300 examples each; derandomized so failures reproduce.
"""

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from hessk3 import linalg as la
from hessk3.lattice import (
    Lattice,
    disc_forms_opposite,
    make_lattice,
    orthogonal_complement,
    reduce_even_binary,
    saturate,
    span_sublattice,
)
from hessk3.lattice.core import index_in

PROFILE = settings(
    max_examples=300,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.filter_too_much, HealthCheck.too_slow],
)


def matrices(rows=(1, 4), cols=(1, 4), lo=-9, hi=9):
    return st.integers(*rows).flatmap(
        lambda r: st.integers(*cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


@PROFILE
@given(matrices())
def test_snf_law(m):
    u, s, v = la.snf(m)
    assert la.matmul(la.matmul(u, m), v) == s
    assert abs(la.det(u)) == 1 and abs(la.det(v)) == 1
    r, c = len(m), len(m[0])
    assert all(s[i][j] == 0 for i in range(r) for j in range(c) if i != j)
    d = [s[i][i] for i in range(min(r, c))]
    assert all(x >= 0 for x in d)
    nz = [x for x in d if x]
    assert d[: len(nz)] == nz  # zeros come last
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert len(nz) == la.rank(m)


@PROFILE
@given(matrices())
def test_hnf_law(m):
    h, u = la.hnf(m)
    assert la.matmul(u, m) == h
    assert abs(la.det(u)) == 1
    # row echelon with positive pivots and reduced entries above them
    last = -1
    for i, row in enumerate(h):
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            assert all(not any(r) for r in h[i:])
            break
        p = nz[0]
        assert p > last and row[p] > 0
        assert all(0 <= h[k][p] < row[p] for k in range(i))
        last = p
    assert la.hnf(h)[0] == h


AMBIENTS = [make_lattice("U^3"), make_lattice("E8(-1)+U"), make_lattice("U+U")]


@PROFILE
@given(st.integers(0, 2), st.data())
def test_disc_form_duality(which, data):
    amb = AMBIENTS[which]
    n = amb.rank
    k = data.draw(st.integers(1, min(3, n - 1)))
    vecs = data.draw(st.lists(st.lists(st.integers(-1, 1), min_size=n, max_size=n), min_size=k, max_size=k))
    assume(la.rank(vecs) == k)
    s = saturate(span_sublattice(amb, vecs))
    g = la.congruence(s.basis, amb.gram)
    assume(la.det(g) != 0 and abs(la.det(g)) <= 64)
    c = orthogonal_complement(s)
    a, b = Lattice(g), Lattice(la.congruence(c.basis, amb.gram))
    assert abs(a.det) == abs(b.det)
    assert disc_forms_opposite(a, b)


@PROFILE
@given(matrices(rows=(1, 4), cols=(5, 5), lo=-4, hi=4))
def test_saturation_idempotent(vecs):
    assume(any(any(v) for v in vecs))
    amb = make_lattice("U^2+<2>")
    s = span_sublattice(amb, vecs)
    sat = saturate(s)
    again = saturate(sat)
    assert sat.basis == again.basis
    assert sat.rank == s.rank
    assert all(sat.contains(v) for v in s.basis)
    assert index_in(s, sat) >= 1


def _word_to_matrix(word):
    # product of shears [[1, k], [0, 1]], the swap [[0, 1], [1, 0]] and the sign flip
    m = la.identity(2)
    for kind, k in word:
        g = {"shear": [[1, k], [0, 1]], "swap": [[0, 1], [1, 0]], "flip": [[-1, 0], [0, 1]]}[kind]
        m = la.matmul(m, g)
    return m


unimodular2 = st.lists(
    st.tuples(st.sampled_from(["shear", "swap", "flip"]), st.integers(-3, 3)), max_size=6
).map(_word_to_matrix)


@PROFILE
@given(st.integers(1, 15), st.integers(-10, 10), st.integers(1, 15), unimodular2)
def test_gauss_reduction_canonical(a2, b, c2, g):
    a, c = 2 * a2, 2 * c2
    assume(a * c - b * b > 0)
    lat = Lattice([[a, b], [b, c]])
    moved = Lattice(la.congruence(g, lat.gram))
    r1, r2 = reduce_even_binary(lat), reduce_even_binary(moved)
    assert r1.gram == r2.gram
    (x, y), (_, z) = r1.gram
    assert 0 <= 2 * y <= x <= z
    assert r1.det == lat.det
