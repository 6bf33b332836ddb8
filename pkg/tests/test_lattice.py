from fractions import Fraction

import pytest

from hessk3 import linalg as la
from hessk3.lattice import (
    Lattice,
    LatticeError,
    disc_forms_isomorphic,
    disc_forms_opposite,
    discriminant_form,
    enumerate_even_binary,
    even_overlattices,
    make_lattice,
    orthogonal_complement,
    reduce_even_binary,
    saturate,
    slh_embed,
    span_sublattice,
)
from hessk3.lattice.binary import check_embedding
from hessk3.lattice.core import index_in, is_primitive, sublattice, whole


@pytest.mark.parametrize(
    "spec,rank,det,sig",
    [
        ("U", 2, -1, (1, 1)),
        ("U(2)", 2, -4, (1, 1)),
        ("<-4>", 1, -4, (0, 1)),
        ("U+U(2)+<-4>", 5, -16, (2, 3)),
        ("A4(-2)", 4, 5 * 16, (0, 4)),
        ("E8(-1)+U", 10, -1, (1, 9)),
        ("U^3", 6, -1, (3, 3)),
        ("Tgen", 6, 48, (2, 4)),
    ],
)
def test_make_lattice(spec, rank, det, sig):
    lat = make_lattice(spec)
    assert (lat.rank, lat.det, lat.signature) == (rank, det, sig)
    assert lat.is_even


def test_make_lattice_rejects_garbage():
    with pytest.raises((LatticeError, ValueError)):
        make_lattice("Q7")


def test_degenerate_rejected():
    with pytest.raises(LatticeError):
        Lattice([[2, 2], [2, 2]])
    assert Lattice([[2, 2], [2, 2]], allow_degenerate=True).is_degenerate


def test_discriminant_form_of_A2():
    form = discriminant_form(make_lattice("A2"))
    assert form.invariant_factors == (3,)
    assert form.q_values == (Fraction(2, 3),)
    assert form.check()


def test_disc_forms_opposite_for_complements():
    # <2> and <-2> are orthogonal complements in U
    assert disc_forms_opposite(Lattice([[2]]), Lattice([[-2]]))
    assert disc_forms_isomorphic(make_lattice("U(2)"), make_lattice("U(2)"))
    assert not disc_forms_isomorphic(Lattice([[2]]), Lattice([[6]]))


def test_saturation_and_complement():
    amb = make_lattice("U^2")
    s = span_sublattice(amb, [[2, 0, 0, 0], [0, 0, 2, 2]])
    sat = saturate(s)
    assert index_in(s, sat) == 4
    assert is_primitive(sat)
    comp = orthogonal_complement(sat)
    assert comp.rank == 2
    for v in comp.basis:
        for w in sat.basis:
            assert amb.pairing(v, w) == 0


def test_even_overlattices_of_U2_perp():
    # the only glue class (1/2, 1/2) has norm -1
    assert even_overlattices(Lattice([[-2, 0], [0, -2]]), 2) == []
    # A1+A1+A1+A1 (negative) contains D4(-1) as an index-2 even overlattice
    over = even_overlattices(Lattice([[-2 if i == j else 0 for j in range(4)] for i in range(4)]), 2)
    assert len(over) == 1 and abs(over[0].det) == 4


def test_reduce_even_binary():
    lat = reduce_even_binary(Lattice([[4, 9], [9, 24]]))
    assert lat.gram == ((4, 1), (1, 4))
    with pytest.raises(LatticeError):
        reduce_even_binary(Lattice([[0, 1], [1, 0]]))


def test_enumerate_even_binary_15():
    grams = [l.gram for l in enumerate_even_binary(15)]
    assert grams == [((2, 1), (1, 8)), ((4, 1), (1, 4))]


def test_enumerate_even_binary_counts_match_brute_force():
    for d in range(1, 40):
        brute = set()
        for a in range(2, 60, 2):
            for b in range(0, a // 2 + 1):
                for c in range(a, 200, 2):
                    if a * c - b * b == d:
                        brute.add(((a, b), (b, c)))
        assert {l.gram for l in enumerate_even_binary(d)} == brute


@pytest.mark.parametrize("n,m,a", [(1, 1, 0), (2, 3, 1), (0, 0, 1), (-3, 5, 2), (1, 2, 5)])
def test_slh_embed_succeeds(n, m, a):
    got = slh_embed(n, m, a)
    assert got is not None and check_embedding(n, m, a, got)


def test_slh_embed_all_odd():
    assert slh_embed(1, 1, 1) is None
    with pytest.raises(LatticeError):
        slh_embed(1, 1, 2)  # degenerate


def test_whole_and_sublattice():
    amb = make_lattice("U")
    assert whole(amb).rank == 2
    assert la.det(sublattice(amb, [[1, 1], [1, -1]]).gram) == -4
