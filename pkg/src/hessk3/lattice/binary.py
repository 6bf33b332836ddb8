"""Rank-two even lattices: Gauss reduction, enumeration, and embeddings into
``U + U(2) + A2(-2)``."""

from __future__ import annotations

import math
from typing import Optional

from .. import linalg as la
from .core import TGEN_GRAM, Lattice, LatticeError


def reduce_even_binary(lat: Lattice) -> Lattice:
    """Gauss-reduced form ``[[a, b], [b, c]]`` with ``0 <= 2b <= a <= c``.

    Reduction is up to GL2(Z), so the sign of ``b`` is normalised away.
    """
    if lat.rank != 2:
        raise LatticeError("binary reduction needs rank 2")
    (a, b), (_, c) = lat.gram
    if a <= 0 or a * c - b * b <= 0:
        raise LatticeError("form is not positive definite")
    while True:
        # translate b into (-a/2, a/2]
        k = -((2 * b + a) // (2 * a)) if a else 0
        # x -> x + k y changes (a, b, c) to (a, b + k a, c + 2 k b + k^2 a)
        c = c + 2 * k * b + k * k * a
        b = b + k * a
        if a > c:
            a, c = c, a
            b = -b
            continue
        break
    b = abs(b)
    return Lattice([[a, b], [b, c]], lat.label)


def enumerate_even_binary(disc: int) -> list[Lattice]:
    """All reduced even positive definite binary lattices of determinant ``disc``."""
    if disc <= 0:
        raise LatticeError("determinant must be positive")
    out = []
    amax = math.isqrt(4 * disc // 3) + 1
    for a in range(2, amax + 1, 2):
        for b in range(0, a // 2 + 1):
            num = disc + b * b
            if num % a:
                continue
            c = num // a
            if c < a or c % 2:
                continue
            out.append(Lattice([[a, b], [b, c]], f"[[{a},{b}],[{b},{c}]]"))
    return out


def tgen_pairing(x, y) -> int:
    return la.bilinear(x, TGEN_GRAM, y)


def _recipe(n: int, m: int, a: int):
    # x = (n, 1, 0, 0, 0, 0); y2 picked so that n y2^2 - a y2 + m is even
    if m % 2 == 0:
        y2 = 0
    elif (n - a) % 2:
        y2 = 1
    else:
        return None
    x = [n, 1, 0, 0, 0, 0]
    y = [a - n * y2, y2, 1, (n * y2 * y2 - a * y2 + m) // 2, 0, 0]
    return x, y


def slh_embed(n: int, m: int, a: int) -> Optional[tuple[list[int], list[int]]]:
    """Primitive embedding of ``[[2n, a], [a, 2m]]`` into ``U + U(2) + A2(-2)``.

    Returns ``(x, y)`` in the six lattice coordinates, or ``None`` when
    ``n``, ``m``, ``a`` are all odd (no embedding exists).
    """
    if 4 * n * m - a * a == 0:
        raise LatticeError("degenerate binary lattice")
    if n % 2 and m % 2 and a % 2:
        return None
    got = _recipe(n, m, a)
    if got is None:
        # swap the roles of the two basis vectors
        y, x = _recipe(m, n, a)
    else:
        x, y = got
    return x, y


def embedding_is_primitive(x, y) -> bool:
    return la.elementary_divisors([list(x), list(y)]) == [1, 1]


def check_embedding(n: int, m: int, a: int, xy) -> bool:
    x, y = xy
    gram_ok = (
        tgen_pairing(x, x) == 2 * n and tgen_pairing(y, y) == 2 * m and tgen_pairing(x, y) == a
    )
    return gram_ok and embedding_is_primitive(x, y)
