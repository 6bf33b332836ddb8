import random
from fractions import Fraction

import pytest

from hessk3 import moduli as m
from hessk3.moduli import (
    FamilySpec,
    ModuliError,
    WeightedPoint,
    divisor_membership,
    invariants_point,
    parse_point,
    phi,
    psi,
    weighted_limit,
    wps_equal,
    wps_is_singular,
)
from hessk3.poly import PolyRing, quadratic_field


def sig(*c):
    return WeightedPoint(c, "sigma")


def test_point_validation():
    with pytest.raises(ModuliError):
        WeightedPoint((0, 0, 0, 0, 0))
    with pytest.raises(ModuliError):
        WeightedPoint((1, 2, 3))
    with pytest.raises(ModuliError):
        parse_point("(1:x:0:0:0)")
    assert parse_point("(8:1:0:0:0)") == parse_point("8,1,0,0,0")


@pytest.mark.parametrize("seed", range(10))
def test_psi_phi_round_trip(seed):
    rng = random.Random(seed)
    s = sig(*(Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(3)), rng.randint(1, 9), rng.randint(1, 9))
    assert wps_equal(psi(phi(s)), s)


def test_psi_base_point():
    with pytest.raises(ModuliError):
        psi(WeightedPoint((1, 0, 0, 0, 0)))
    with pytest.raises(ModuliError):
        phi(sig(1, 1, 1, 0, 0))


def test_wps_equal_scalings():
    p = WeightedPoint((3, -1, 2, 5, 7))
    assert wps_equal(p, p.rescale(Fraction(-2, 3)))
    # over the algebraic closure: a square root of 2 is an allowed scale
    r2 = quadratic_field(2).gen
    q = p.rescale(r2)
    assert wps_equal(p, q)
    assert not wps_equal(p, WeightedPoint((3, -1, 2, 5, 8)))
    assert wps_equal(WeightedPoint((-8, 1, 0, 0, 0)), WeightedPoint((8, 1, 0, 0, 0)))
    # (0:a:0:b:0) ~ (0:a':0:b':0) iff b/a^2 = b'/a'^2
    assert wps_equal(WeightedPoint((0, 1, 0, 2, 0)), WeightedPoint((0, 3, 0, 18, 0)))
    assert not wps_equal(WeightedPoint((0, 1, 0, 2, 0)), WeightedPoint((0, 3, 0, 17, 0)))
    # t^2 = 1 and t^4 = -1 have no common solution, though 1^4 = (-1)^2
    assert not wps_equal(WeightedPoint((0, 1, 0, 1, 0)), WeightedPoint((0, 1, 0, -1, 0)))


def test_wps_equal_flavor_mismatch():
    with pytest.raises(ModuliError):
        wps_equal(WeightedPoint((1, 0, 0, 0, 0)), sig(1, 0, 0, 0, 0))


def test_singular_components():
    assert wps_is_singular(WeightedPoint((0, 0, 1, 0, 0)))
    assert wps_is_singular(WeightedPoint((0, 0, 0, 0, 1)))
    assert wps_is_singular(WeightedPoint((0, 1, 0, 7, 0)))
    assert not wps_is_singular(WeightedPoint((0, 1, 1, 0, 0)))
    assert not wps_is_singular(WeightedPoint((1, 0, 0, 0, 0)))
    assert m.singular_locus_component(WeightedPoint((0, 2, 0, 0, 0))) == "(0:a:0:b:0)"


def test_divisor_flags():
    cayley = invariants_point((1, 1, 1, 1, Fraction(1, 4)))
    assert divisor_membership(cayley)["boundary"]
    generic = invariants_point((1, 2, 3, 5, 7))
    flags = divisor_membership(generic)
    assert not any(flags.values())
    assert divisor_membership(m.FERMAT_POINT)["fermat_point"]
    assert divisor_membership(m.SEMISTABLE_POINT)["cyclic_locus"]


def test_disc32_identity():
    assert m.disc32_identity() == (True, 1)


def test_limits_symbolic():
    for fam, want in [
        (m.family_ns1(), m.expected_ns1()),
        (m.family_ns2(), m.expected_ns2()),
        (m.family_cyclic(), m.expected_cyclic()),
    ]:
        assert wps_equal(weighted_limit(fam).point, want)
        assert wps_equal(weighted_limit(m.reparametrize(fam, 3)).point, want)


def test_limit_by_hand():
    # lambda = (1, 2, 3, 5, 1/t): I8 = 900 - 3660/t - 1199/t^2, I16 = 27000 t^-3 (11 + 1/t),
    # and I24, I32, I40 have valuations -5, -7, -8, so e = 2
    fam = FamilySpec.from_json({"lambda": [[[0, "1"]], [[0, "2"]], [[0, "3"]], [[0, "5"]], [[-1, "1"]]]})
    lim = weighted_limit(fam)
    assert (lim.exponent, lim.d, lim.valuations) == (2, 1, (-2, -4, -5, -7, -8))
    assert lim.point == WeightedPoint((-1199, 27000, 0, 0, 0))


def test_limit_fractional_exponent():
    # sigma5 ~ -t^-3, sigma1 ~ -2 t^-2, sigma2 ~ t^-4, so I16 ~ 2 t^-11 and I32 ~ t^-22;
    # e = 11/2 needs t = u^2 and the limit sits on the singular stratum (0:a:0:b:0)
    lam = [[[1, "-1"], [2, "-2"]], [[-2, "-1"]], [[-2, "-1"]], [[1, "-1"]], [[-1, "-1"], [0, "3"]]]
    lim = weighted_limit(FamilySpec.from_json({"lambda": lam}))
    assert (lim.exponent, lim.d) == (Fraction(11, 2), 2)
    assert lim.valuations == (-5, -11, -16, -22, -24)
    assert lim.point == WeightedPoint((0, 2, 0, 1, 0))
    assert wps_is_singular(lim.point)


def test_semistable_limit():
    fam = FamilySpec.from_json({"lambda": [[[0, "1"]]] * 4 + [[[-3, "1"]]]})
    assert wps_equal(weighted_limit(fam).point, m.SEMISTABLE_POINT)


def test_family_validation():
    with pytest.raises(ModuliError):
        FamilySpec.from_json({"lambda": [[[0, "1"]]] * 4})
    with pytest.raises(ModuliError):
        FamilySpec.from_json({"lambda": [[[0, "1"]]] * 4 + [[[0.5, "1"]]]})
    with pytest.raises(ModuliError):
        FamilySpec.from_json({"lambda": [[[0, "1"]]] * 4 + [[[0, "0"]]]})


def test_tritangent_checkpoint(tmp_path, monkeypatch):
    monkeypatch.setenv("HESSK3_CACHE_DIR", str(tmp_path))
    m.tritangent_polynomial.cache_clear()
    try:
        first = m.tritangent_polynomial()
        assert (tmp_path / "tritangent_f.json").exists()
        assert not first.from_cache
        m.tritangent_polynomial.cache_clear()
        second = m.tritangent_polynomial()
        assert second.from_cache and second.f == first.f
        (tmp_path / "tritangent_f.json").write_text("{broken")
        m.tritangent_polynomial.cache_clear()
        third = m.tritangent_polynomial()
        assert not third.from_cache and third.f == first.f
    finally:
        m.tritangent_polynomial.cache_clear()
    assert (first.pullback_weight, first.f_weight, first.i40_power) == (320, 200, 3)
    assert len(first.f.terms) == 74 and first.constant == -1
    assert first.factorization_holds


def test_tritangent_vanishes_on_eckardt_surfaces():
    res = m.tritangent_polynomial()
    assert res.f.evaluate(invariants_point((1, 1, 2, 3, 5)).coords) == 0
    assert res.f.evaluate(invariants_point((1, 2, 3, 5, 7)).coords) != 0


def test_catalog_points_consistent():
    for e in m.catalog():
        p = m.catalog_point(e)
        if p is not None and e.ipoint is not None:
            assert wps_equal(p, e.ipoint), e.name


def test_specialize_polynomial_point():
    r = PolyRing(("a",))
    (a,) = r.gens
    p = WeightedPoint((a, a * a, r.zero(), r.zero(), r.const(1)))
    assert wps_equal(m.specialize(p, ("a",), (2,)), WeightedPoint((2, 4, 0, 0, 1)))
