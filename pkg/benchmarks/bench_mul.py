"""Compare the pure-Python and compiled sparse product kernels.

    python benchmarks/bench_mul.py [--repeat 5] [--seed 7]

Each case multiplies the same pair of polynomials with both kernels, checks
that the products agree and reports the best wall time of ``--repeat`` runs.
"""

from __future__ import annotations

import argparse
import random
import time
from fractions import Fraction

from hessk3.poly import MultiPoly, backend
from hessk3.poly.multipoly import mul
from hessk3.cubic import LX, linear_forms, sylvester_cubic_symbolic


def random_poly(rng: random.Random, names, nterms: int, deg: int, frac: bool = False) -> MultiPoly:
    terms = {}
    n = len(names)
    while len(terms) < nterms:
        e = [0] * n
        for _ in range(rng.randint(0, deg)):
            e[rng.randrange(n)] += 1
        c = rng.randint(-50, 50) or 1
        terms[tuple(e)] = Fraction(c, rng.randint(1, 9)) if frac else c
    return MultiPoly(names, terms)


def dense_power(names, k: int) -> MultiPoly:
    s = MultiPoly.const(names, 1)
    for v in names:
        s = s + MultiPoly.var(names, v)
    return s**k


def cases(rng: random.Random):
    v4 = ("a", "b", "c", "d")
    v6 = tuple(f"y{i}" for i in range(6))
    yield "sparse 200x200 int", random_poly(rng, v6, 200, 8), random_poly(rng, v6, 200, 8)
    yield "sparse 300x300 rational", random_poly(rng, v4, 300, 12, True), random_poly(rng, v4, 300, 12, True)
    big = random_poly(rng, v4, 150, 10)
    yield "bigint coefficients", big * (10**40), big + MultiPoly.const(v4, 10**30)
    p = dense_power(v4, 6)
    yield "dense (1+a+b+c+d)^6 squared", p, p
    f = sylvester_cubic_symbolic()
    x4 = linear_forms(LX)[4]
    yield "Sylvester cubic times x4^3", f, x4**3


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args(argv)

    if backend.compiled is None:
        print("compiled kernel not available; build with `pip install -e . --no-build-isolation`")
        return 1

    rng = random.Random(args.seed)
    print(f"{'case':32s} {'terms':>12s} {'pure ms':>10s} {'compiled ms':>12s} {'speedup':>8s}")
    mismatches = 0
    for name, a, b in cases(rng):
        rp = mul(a, b, kernel=backend.pure)
        rc = mul(a, b, kernel=backend.compiled)
        if rp != rc:
            mismatches += 1
        tp = best_of(lambda: mul(a, b, kernel=backend.pure), args.repeat)
        tc = best_of(lambda: mul(a, b, kernel=backend.compiled), args.repeat)
        shape = f"{len(a.terms)}x{len(b.terms)}"
        print(f"{name:32s} {shape:>12s} {tp * 1e3:10.2f} {tc * 1e3:12.2f} {tp / tc:7.1f}x")
    print("products agree" if not mismatches else f"{mismatches} case(s) DISAGREE")
    return 0 if not mismatches else 1


if __name__ == "__main__":
    raise SystemExit(main())
