"""The compiled and pure-Python product kernels must agree term for term."""

import random
import subprocess
import sys
from fractions import Fraction

import pytest

from hessk3.poly import MultiPoly, backend, cyclotomic_field
from hessk3.poly.multipoly import mul

needs_compiled = pytest.mark.skipif(backend.compiled is None, reason="compiled kernel not built")
NAMES = ("a", "b", "c", "d")


def rand_poly(rng, nterms, coeff):
    terms = {}
    for _ in range(nterms):
        e = tuple(rng.randint(-2, 6) for _ in NAMES)
        terms[e] = coeff(rng)
    return MultiPoly(NAMES, terms)


COEFFS = {
    "small int": lambda r: r.randint(-5, 5),
    "huge int": lambda r: r.randint(-(10**30), 10**30),
    "int64 edge": lambda r: r.choice([2**62, -(2**62), 2**63 - 1]),
    "rational": lambda r: Fraction(r.randint(-9, 9), r.randint(1, 9)),
}


@needs_compiled
@pytest.mark.parametrize("kind", list(COEFFS))
@pytest.mark.parametrize("seed", range(5))
def test_kernels_agree(kind, seed):
    rng = random.Random(seed)
    a = rand_poly(rng, 40, COEFFS[kind])
    b = rand_poly(rng, 40, COEFFS[kind])
    rp = mul(a, b, kernel=backend.pure)
    rc = mul(a, b, kernel=backend.compiled)
    assert rp == rc
    assert list(rp.terms) == list(rc.terms)


@needs_compiled
def test_kernels_agree_number_field():
    w = cyclotomic_field(5).gen
    rng = random.Random(3)
    a = rand_poly(rng, 15, lambda r: w ** r.randint(0, 4) * r.randint(1, 3))
    b = rand_poly(rng, 15, lambda r: w ** r.randint(0, 4) - r.randint(0, 3))
    assert mul(a, b, kernel=backend.pure) == mul(a, b, kernel=backend.compiled)


@needs_compiled
def test_raw_kernel_order():
    ka, ca = [0, 1, 2], [1, 1, 1]
    kb, cb = [0, 1], [1, -1]
    assert backend.pure.mul_packed(ka, ca, kb, cb) == backend.compiled.mul_packed(ka, ca, kb, cb)
    assert backend.pure.mul_packed_int(ka, ca, kb, cb) == backend.compiled.mul_packed_int(ka, ca, kb, cb)


def test_env_var_forces_pure():
    code = "from hessk3.poly import backend; print(backend.NAME)"
    env = {"HESSK3_PURE": "1", "PATH": ""}
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "pure"


def test_use_switches_kernel():
    before = backend.NAME
    try:
        backend.use("pure")
        assert backend.active is backend.pure
        with pytest.raises(ValueError):
            backend.use("gpu")
    finally:
        backend.use(before)
