"""Exact integer and rational matrix algorithms.

Matrices are plain lists of row lists holding Python ``int`` (or
``fractions.Fraction`` where noted).  Every function returns fresh lists and
never mutates its arguments.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional, Sequence

IntMatrix = list[list[int]]
IntVector = list[int]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def copy(m: Sequence[Sequence]) -> list[list]:
    return [list(r) for r in m]


def ncols(m: Sequence[Sequence], default: int = 0) -> int:
    return len(m[0]) if m else default


def transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(c) for c in zip(*m)] if m else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vecmat(v: Sequence, a: Sequence[Sequence]) -> list:
    return [sum(v[i] * a[i][j] for i in range(len(v))) for j in range(ncols(a))]


def dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))


def bilinear(u: Sequence, gram: Sequence[Sequence], v: Sequence):
    return dot(vecmat(u, gram), v)


def congruence(basis: Sequence[Sequence], gram: Sequence[Sequence]) -> list[list]:
    """Return ``basis * gram * basis^T``."""
    bg = matmul(basis, gram)
    return [[dot(r, s) for s in basis] for r in bg]


def is_symmetric(m: Sequence[Sequence]) -> bool:
    n = len(m)
    return all(len(r) == n for r in m) and all(
        m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n)
    )


def block_diag(*blocks: Sequence[Sequence[int]]) -> IntMatrix:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return out


# -- elementary row operations on (matrix, transform) pairs ------------------


def _swap(rows: list, i: int, j: int) -> None:
    rows[i], rows[j] = rows[j], rows[i]


def _addmul(rows: list, dst: int, src: int, q: int) -> None:
    # row[dst] -= q * row[src]
    if q:
        s = rows[src]
        rows[dst] = [a - q * b for a, b in zip(rows[dst], s)]


def _neg(rows: list, i: int) -> None:
    rows[i] = [-a for a in rows[i]]


def hnf(m: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Row Hermite normal form.

    Returns ``(h, u)`` with ``h = u * m``, ``u`` unimodular, pivots positive
    and entries above each pivot reduced into ``[0, pivot)``.  Zero rows are
    collected at the bottom.
    """
    h = copy(m)
    n = len(h)
    u = identity(n)
    cols = ncols(h)
    row = 0
    for col in range(cols):
        if row == n:
            break
        while True:
            nz = [i for i in range(row, n) if h[i][col]]
            if not nz:
                break
            piv = min(nz, key=lambda i: (abs(h[i][col]), i))
            if piv != row:
                _swap(h, piv, row)
                _swap(u, piv, row)
            p = h[row][col]
            clean = True
            for i in range(row + 1, n):
                if h[i][col]:
                    q = h[i][col] // p
                    _addmul(h, i, row, q)
                    _addmul(u, i, row, q)
                    if h[i][col]:
                        clean = False
            if clean:
                break
        if not h[row][col]:
            continue
        if h[row][col] < 0:
            _neg(h, row)
            _neg(u, row)
        p = h[row][col]
        for i in range(row):
            q = h[i][col] // p
            _addmul(h, i, row, q)
            _addmul(u, i, row, q)
        row += 1
    return h, u


def _snf_core(m: Sequence[Sequence[int]]):
    s = copy(m)
    r = len(s)
    c = ncols(s)
    u = identity(r)
    vt = identity(c)  # rows of vt are columns of v
    sign = 1  # det(u) * det(v)

    def col_swap(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        _swap(vt, i, j)

    def col_addmul(dst, src, q):
        if q:
            for row in s:
                row[dst] -= q * row[src]
            _addmul(vt, dst, src, q)

    for t in range(min(r, c)):
        while True:
            best = None
            for i in range(t, r):
                for j in range(t, c):
                    x = s[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                _swap(s, pi, t)
                _swap(u, pi, t)
                sign = -sign
            if pj != t:
                col_swap(pj, t)
                sign = -sign
            p = s[t][t]
            done = True
            for i in range(t + 1, r):
                if s[i][t]:
                    q = s[i][t] // p
                    _addmul(s, i, t, q)
                    _addmul(u, i, t, q)
                    if s[i][t]:
                        done = False
            for j in range(t + 1, c):
                if s[t][j]:
                    q = s[t][j] // p
                    col_addmul(j, t, q)
                    if s[t][j]:
                        done = False
            if not done:
                continue
            bad = next(
                (i for i in range(t + 1, r) for j in range(t + 1, c) if s[i][j] % p),
                None,
            )
            if bad is None:
                break
            # fold the offending row into the pivot row and retry
            _addmul(s, t, bad, -1)
            _addmul(u, t, bad, -1)
        if best is None:
            break
        if s[t][t] < 0:
            _neg(s, t)
            _neg(u, t)
            sign = -sign
    return u, s, transpose(vt), sign


def snf(m: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form ``(u, s, v)`` with ``s = u * m * v``.

    Pivot choice is the smallest nonzero absolute value, ties broken by
    row-major position, so the transforms are reproducible.
    """
    u, s, v, _ = _snf_core(m)
    return u, s, v


def elementary_divisors(m: Sequence[Sequence[int]]) -> list[int]:
    _, s, _, _ = _snf_core(m)
    return [s[i][i] for i in range(min(len(s), ncols(s)))]


def bareiss(m: Sequence[Sequence]) -> tuple[int, object]:
    """Fraction-free elimination; returns ``(rank, det)``.

    ``det`` is only meaningful for square input (0 when singular).
    """
    a = copy(m)
    n = len(a)
    c = ncols(a)
    sign = 1
    prev = 1
    rank = 0
    for col in range(c):
        if rank == n:
            break
        piv = next((i for i in range(rank, n) if a[i][col]), None)
        if piv is None:
            continue
        if piv != rank:
            _swap(a, piv, rank)
            sign = -sign
        p = a[rank][col]
        for i in range(rank + 1, n):
            aic = a[i][col]
            ri = a[i]
            rr = a[rank]
            a[i] = [(p * ri[j] - aic * rr[j]) // prev if j > col else 0 for j in range(c)]
        prev = p
        rank += 1
    if n == c and rank == n:
        return rank, sign * a[n - 1][n - 1]
    return rank, 0


def rank(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    if any(isinstance(x, Fraction) for r in m for x in r):
        return rank_rational(m)
    return bareiss(m)[0]


def rank_snf(m: Sequence[Sequence[int]]) -> int:
    return sum(1 for d in elementary_divisors(m) if d)


def det(m: Sequence[Sequence[int]]) -> int:
    if not m:
        return 1
    if len(m) != ncols(m):
        raise ValueError("det of a non-square matrix")
    return bareiss(m)[1]


def det_snf(m: Sequence[Sequence[int]]) -> int:
    if len(m) != ncols(m):
        raise ValueError("det of a non-square matrix")
    if not m:
        return 1
    _, s, _, sign = _snf_core(m)
    d = sign
    for i in range(len(s)):
        d *= s[i][i]
    return d


def rank_rational(m: Sequence[Sequence]) -> int:
    a = [[Fraction(x) for x in r] for r in m]
    n, c = len(a), ncols(a)
    rk = 0
    for col in range(c):
        piv = next((i for i in range(rk, n) if a[i][col]), None)
        if piv is None:
            continue
        a[rk], a[piv] = a[piv], a[rk]
        for i in range(rk + 1, n):
            if a[i][col]:
                f = a[i][col] / a[rk][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[rk])]
        rk += 1
    return rk


def kernel(m: Sequence[Sequence[int]], n: Optional[int] = None) -> IntMatrix:
    """Saturated basis (as rows) of ``{x in Z^n : m x = 0}``."""
    cols = ncols(m, n or 0)
    if not m:
        return identity(cols)
    h, u = hnf(transpose(m))
    return [u[i] for i in range(len(h)) if not any(h[i])]


def left_kernel(m: Sequence[Sequence[int]]) -> IntMatrix:
    """Saturated basis of ``{y : y m = 0}``."""
    h, u = hnf(m)
    return [u[i] for i in range(len(h)) if not any(h[i])]


def solve_integer(m: Sequence[Sequence[int]], rhs: Sequence[int]) -> Optional[IntVector]:
    """Some integral ``x`` with ``m x = rhs``, or ``None`` if none exists."""
    if len(rhs) != len(m):
        raise ValueError("shape mismatch")
    cols = ncols(m)
    u, s, v, _ = _snf_core(m)
    b = matvec(u, rhs)
    y = [0] * cols
    for i, bi in enumerate(b):
        d = s[i][i] if i < cols else 0
        if d == 0:
            if bi:
                return None
        else:
            if bi % d:
                return None
            y[i] = bi // d
    return matvec(v, y)


def inverse_rational(m: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(m)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return [r[n:] for r in a]


def signature(gram: Sequence[Sequence]) -> tuple[int, int, int]:
    """``(positive, negative, zero)`` index of a symmetric rational matrix.

    Computed by congruence diagonalisation over Q.
    """
    a = [[Fraction(x) for x in r] for r in gram]
    pos = neg = 0
    while a:
        n = len(a)
        k = next((i for i in range(n) if a[i][i]), None)
        if k is None:
            off = next(((i, j) for i in range(n) for j in range(i + 1, n) if a[i][j]), None)
            if off is None:
                return pos, neg, n
            i, j = off
            # e_i <- e_i + e_j makes the diagonal entry 2 a_ij
            a[i] = [x + y for x, y in zip(a[i], a[j])]
            for r in a:
                r[i] += r[j]
            continue
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        rest = [i for i in range(n) if i != k]
        a = [[a[i][j] - a[i][k] * a[k][j] / p for j in rest] for i in rest]
    return pos, neg, 0


# -- serialisation -----------------------------------------------------------


def to_json_obj(m: Sequence[Sequence]) -> list[list[str]]:
    return [[str(x) for x in r] for r in m]


def from_json_obj(obj) -> list[list]:
    out = []
    for r in obj:
        row = []
        for x in r:
            q = Fraction(str(x))
            row.append(q.numerator if q.denominator == 1 else q)
        out.append(row)
    return out


def dumps(m: Sequence[Sequence]) -> str:
    return json.dumps(to_json_obj(m))


def loads(s: str) -> list[list]:
    return from_json_obj(json.loads(s))
