from fractions import Fraction

import pytest

from hessk3 import linalg as la
from hessk3.curves import (
    ECKARDT_ROUTES,
    _c_combo,
    build_configuration,
    c_class,
    curve,
    eckardt_sublattice,
    intersection_number,
    nodal_sublattice,
    ns10,
    shioda_tate_disc,
)
from hessk3.data import CLEBSCH_U, E8_CHAINS, combination_vector, parse_combination
from hessk3.k3 import RootChain, e8_gram, is_twisted_u, verify_root_chain
from hessk3.lattice import Lattice, make_lattice, perp_within


@pytest.mark.parametrize(
    "tag,ncurves,rank,det",
    [("gen", 20, 16, -48), ("clebsch", 40, 20, -15), ("cayley", 30, 20, -12), ("x3n4", 28, 20, -24)],
)
def test_configuration_spans(tag, ncurves, rank, det):
    config = build_configuration(tag)
    span = config.span()
    assert len(config.curves) == ncurves
    assert span.rank == rank
    assert abs(la.det(span.gram)) == abs(det)
    if config.proposed_basis is not None:
        assert span.proposed_is_basis


def test_configuration_json_round_trip():
    config = build_configuration("cayley")
    assert type(config).from_json(config.to_json()) == config


def test_intersection_symmetric():
    config = build_configuration("clebsch")
    for a in config.curves[:15]:
        for b in config.curves:
            assert intersection_number(a, b) == intersection_number(b, a)


def test_unknown_tag():
    with pytest.raises(ValueError):
        build_configuration("nonsense")
    with pytest.raises(KeyError):
        build_configuration("gen").index("C012")


def test_e8_chain_parse():
    ch = RootChain.parse("A-B-C-D-E-F-G | H")
    assert ch.labels == list("ABCDEFGH")
    with pytest.raises(ValueError):
        RootChain.parse("A-B | C")
    assert Lattice(e8_gram()).det == 1


@pytest.mark.parametrize("tag", ["clebsch", "cayley", "x3n4"])
def test_printed_chains(tag):
    config = build_configuration(tag)
    for text in E8_CHAINS[tag]:
        assert verify_root_chain(config, RootChain.parse(text))


def test_shioda_tate():
    assert shioda_tate_disc(["I4x4", "I2x2"]) == 4**4 * 2**2
    assert shioda_tate_disc(["I4x4", "I2x2"], 0, 2) == Fraction(4**4 * 2**2, 4)


def test_twisted_u():
    assert is_twisted_u(make_lattice("U(2)"), 2)
    assert not is_twisted_u(make_lattice("U"), 2)
    assert not is_twisted_u(Lattice([[2, 1], [1, -2]]), 1)


def test_parse_combination():
    assert parse_combination("-2N134 +N12 -C234") == {"N134": -2, "N12": 1, "C234": -1}


@pytest.mark.parametrize("k,det", [("6", 24), ("4", 36), ("3", 36), ("2p", 48), ("2", 48), ("1", 48)])
def test_eckardt_routes_agree(k, det):
    grams = [la.det(eckardt_sublattice(k, r).gram) for r in range(len(ECKARDT_ROUTES[k]))]
    assert all(abs(g) == det for g in grams)


def test_nodal_ranks():
    assert [nodal_sublattice(k).rank for k in (1, 2, 3, 4)] == [17, 18, 19, 20]


# Literal printed data: these pin down two misprints found while reproducing.


def test_printed_second_u_vector_has_wrong_sign():
    """The printed U basis (second vector with +4C124) does not give U."""
    config = build_configuration("clebsch")
    u = [combination_vector(config, t) for t in CLEBSCH_U]
    assert la.congruence(u, config.gram) == [[0, 1], [1, -128]]
    fixed = [u[0], combination_vector(config, CLEBSCH_U[1].replace("+4C124", "-4C124"))]
    assert la.congruence(fixed, config.gram) == [[0, 1], [1, 0]]


def test_printed_ns4_vector_misses_c04():
    """Without the -c04 term the perpendicular has |disc| 660, not 36."""
    config, span, amb = ns10()
    printed = {"c14": 1, "c24": -1, "c03": 1, "c13": -1, "c23": 1}
    s = perp_within(amb, [span.coordinates(_c_combo(config, printed))])
    assert (s.rank, la.det(s.gram)) == (19, 660)
    assert ECKARDT_ROUTES["4"][0][1] == dict(printed, c04=-1)


def test_curve_labels():
    assert str(curve("N012")) == "N012"
    assert curve("C124") != curve("C142")


def test_c_class_pairings():
    config = build_configuration("clebsch")
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    v = {p: c_class(*p, config) for p in pairs}
    assert config.pairing(v[0, 1], v[0, 2]) == 2
    for p in pairs:
        for q in pairs:
            x = config.pairing(v[p], v[q])
            if p == q:
                assert x == -4
            elif set(p) & set(q):
                assert abs(x) == 2
            else:
                assert x == 0
    # all ten span a negative definite rank 4 lattice (A4(-2))
    g = la.congruence([v[p] for p in pairs], config.gram)
    assert la.rank(g) == 4
