"""Sparse multivariate (Laurent) polynomials with exact coefficients.

Coefficients are ``int``, ``Fraction`` or :class:`NFElement`.  Terms live in a
dict from exponent tuples to nonzero coefficients; negative exponents are
allowed, which is how Laurent polynomials in a parameter ``t`` are handled.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from . import backend
from .numberfield import NFElement

Coeff = Union[int, Fraction, NFElement]


class PolyError(ValueError):
    pass


class NonExactDivision(PolyError):
    def __init__(self, remainder: "MultiPoly"):
        super().__init__(f"division is not exact; remainder has {len(remainder.terms)} terms")
        self.remainder = remainder


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    if isinstance(c, NFElement) and c.is_rational():
        return _norm(c.to_rational())
    return c


def _grlex_key(e: tuple) -> tuple:
    return (sum(e), e)


class MultiPoly:
    __slots__ = ("names", "terms")

    def __init__(self, names: Sequence[str], terms: Optional[Mapping[tuple, Coeff]] = None):
        self.names = tuple(names)
        n = len(self.names)
        clean = {}
        if terms:
            for e, c in terms.items():
                c = _norm(c)
                if c:
                    if len(e) != n:
                        raise PolyError("exponent length does not match the variables")
                    clean[tuple(e)] = c
        self.terms = clean

    # -- construction -------------------------------------------------------

    @classmethod
    def _raw(cls, names: tuple, terms: dict) -> "MultiPoly":
        p = cls.__new__(cls)
        p.names = names
        p.terms = terms
        return p

    @classmethod
    def const(cls, names: Sequence[str], c: Coeff) -> "MultiPoly":
        return cls(names, {(0,) * len(names): c})

    @classmethod
    def var(cls, names: Sequence[str], name: str) -> "MultiPoly":
        names = tuple(names)
        i = names.index(name)
        return cls._raw(names, {tuple(int(j == i) for j in range(len(names))): 1})

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.names != self.names:
                raise PolyError(f"variable mismatch: {self.names} vs {other.names}")
            return other
        if isinstance(other, (int, Fraction, NFElement)):
            return MultiPoly.const(self.names, other)
        raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")

    # -- basic queries ------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.names)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Coeff:
        if not self.is_constant():
            raise PolyError("polynomial is not constant")
        return self.terms.get((0,) * self.nvars, 0)

    def coefficient(self, exps: Sequence[int]) -> Coeff:
        return self.terms.get(tuple(exps), 0)

    def sorted_terms(self) -> list[tuple[tuple, Coeff]]:
        """Terms in decreasing graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[tuple, Coeff]:
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def total_degree(self) -> int:
        if not self.terms:
            raise PolyError("degree of zero")
        return max(sum(e) for e in self.terms)

    def degree(self, var: str) -> int:
        i = self.names.index(var)
        return max(e[i] for e in self.terms) if self.terms else -1

    def weighted_degrees(self, weights: Sequence[int]) -> set[int]:
        return {sum(w * x for w, x in zip(weights, e)) for e in self.terms}

    def is_homogeneous(self, weights: Optional[Sequence[int]] = None) -> bool:
        weights = weights or [1] * self.nvars
        return len(self.weighted_degrees(weights)) <= 1

    def variables(self) -> list[str]:
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return [self.names[i] for i in sorted(used)]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            v = out.get(e)
            v = c if v is None else _norm(v + c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.names, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.names, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Coeff) -> "MultiPoly":
        c = _norm(c)
        if not c:
            return MultiPoly._raw(self.names, {})
        return MultiPoly._raw(self.names, {e: _norm(x * c) for e, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, NFElement)):
            return self.scale(other)
        return mul(self, self._lift(other))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            return exact_div(self, other)
        if isinstance(other, int):
            other = Fraction(other)
        if isinstance(other, Fraction):
            return self.scale(1 / other)
        if isinstance(other, NFElement):
            return self.scale(other.inverse())
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            # only monomials are invertible (Laurent use)
            if len(self.terms) != 1:
                raise PolyError("negative power of a non-monomial")
            (e, c), = self.terms.items()
            inv = c.inverse() if isinstance(c, NFElement) else Fraction(1) / c
            return MultiPoly._raw(self.names, {tuple(x * n for x in e): _norm(inv ** (-n))})
        out = MultiPoly.const(self.names, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, NFElement)):
            other = MultiPoly.const(self.names, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.names == other.names and self.terms == other.terms

    def __hash__(self):
        return hash((self.names, frozenset(self.terms.items())))

    # -- calculus and substitution -----------------------------------------

    def derivative(self, var: str) -> "MultiPoly":
        i = self.names.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = _norm(c * e[i])
        return MultiPoly._raw(self.names, out)

    def evaluate(self, values: Union[Mapping[str, Coeff], Sequence[Coeff]]):
        """Value at a point; ``values`` gives every variable."""
        if isinstance(values, Mapping):
            values = [values[n] for n in self.names]
        values = list(values)
        powers: list[dict] = [dict() for _ in values]

        def pw(i, k):
            d = powers[i]
            if k not in d:
                v = values[i]
                d[k] = v**k if k >= 0 else (Fraction(1) / v ** (-k) if not isinstance(v, NFElement) else v.inverse() ** (-k))
            return d[k]

        total = 0
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    t = t * pw(i, k)
            total = total + t
        return _norm(total)

    def substitute(
        self, mapping: Mapping[str, Union["MultiPoly", Coeff]], names: Optional[Sequence[str]] = None
    ) -> "MultiPoly":
        """Replace variables by polynomials (or scalars) in the ring ``names``.

        Unmapped variables are kept and must exist in the target ring.
        """
        if names is None:
            polys = [v for v in mapping.values() if isinstance(v, MultiPoly)]
            names = polys[0].names if polys else self.names
        names = tuple(names)
        images = []
        for n in self.names:
            if n in mapping:
                v = mapping[n]
                images.append(v if isinstance(v, MultiPoly) else MultiPoly.const(names, v))
            else:
                images.append(MultiPoly.var(names, n))
        for im in images:
            if im.names != names:
                raise PolyError("substitution images must share one ring")
        cache: list[dict] = [dict() for _ in images]

        def pw(i, k):
            d = cache[i]
            if k not in d:
                d[k] = images[i] ** k
            return d[k]

        # group terms by their exponent in the first variables to share products
        out = MultiPoly._raw(names, {})
        for e, c in self.sorted_terms():
            t = MultiPoly.const(names, c)
            for i, k in enumerate(e):
                if k:
                    t = t * pw(i, k)
            out = out + t
        return out

    def map_coefficients(self, f) -> "MultiPoly":
        return MultiPoly(self.names, {e: f(c) for e, c in self.terms.items()})

    def rename(self, names: Sequence[str]) -> "MultiPoly":
        """Same terms in a ring with other variable names (same count)."""
        if len(names) != self.nvars:
            raise PolyError("rename needs the same number of variables")
        return MultiPoly._raw(tuple(names), dict(self.terms))

    def embed(self, names: Sequence[str]) -> "MultiPoly":
        """View in a larger ring containing all used variables."""
        names = tuple(names)
        pos = [names.index(n) for n in self.names]
        out = {}
        for e, c in self.terms.items():
            f = [0] * len(names)
            for i, k in zip(pos, e):
                f[i] = k
            out[tuple(f)] = c
        return MultiPoly._raw(names, out)

    def drop(self, names: Sequence[str]) -> "MultiPoly":
        """Restrict to a subring; the dropped variables must not occur."""
        names = tuple(names)
        keep = [self.names.index(n) for n in names]
        gone = [i for i in range(self.nvars) if i not in keep]
        out = {}
        for e, c in self.terms.items():
            if any(e[i] for i in gone):
                raise PolyError("a dropped variable occurs")
            out[tuple(e[i] for i in keep)] = c
        return MultiPoly._raw(names, out)

    # -- Laurent helpers ----------------------------------------------------

    def valuation(self, var: str) -> int:
        if not self.terms:
            raise PolyError("valuation of zero")
        i = self.names.index(var)
        return min(e[i] for e in self.terms)

    def leading_at_zero(self, var: str) -> "MultiPoly":
        """Coefficient of the lowest power of ``var`` (``var`` set to 1 there)."""
        v = self.valuation(var)
        i = self.names.index(var)
        out = {}
        for e, c in self.terms.items():
            if e[i] == v:
                f = list(e)
                f[i] = 0
                out[tuple(f)] = c
        return MultiPoly._raw(self.names, out)

    # -- normalisation ------------------------------------------------------

    def primitive(self) -> "MultiPoly":
        """Rational multiple with coprime integer coefficients and positive
        graded-lex leading coefficient."""
        if not self.terms:
            return self
        if any(isinstance(c, NFElement) for c in self.terms.values()):
            raise PolyError("content is only defined over Q")
        den = 1
        for c in self.terms.values():
            d = Fraction(c).denominator
            den = den * d // math.gcd(den, d)
        ints = [int(Fraction(c) * den) for c in self.terms.values()]
        g = 0
        for x in ints:
            g = math.gcd(g, x)
        _, lc = self.leading_term()
        s = 1 if lc > 0 else -1
        return self.scale(Fraction(den * s, g))

    # -- output -------------------------------------------------------------

    def __repr__(self):
        return f"MultiPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k
            )
            cs = str(c) if not isinstance(c, NFElement) else f"({c})"
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        terms = []
        for e, c in self.sorted_terms():
            if isinstance(c, NFElement):
                raise PolyError("JSON export is for rational coefficients")
            terms.append({"exponents": list(e), "coefficient": str(c)})
        return {"variables": list(self.names), "terms": terms}

    @classmethod
    def from_json(cls, obj: dict) -> "MultiPoly":
        return cls(
            obj["variables"],
            {tuple(t["exponents"]): Fraction(t["coefficient"]) for t in obj["terms"]},
        )


class PolyRing:
    """Convenience holder for a variable tuple."""

    def __init__(self, names: Union[str, Iterable[str]]):
        if isinstance(names, str):
            names = names.replace(",", " ").split()
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise PolyError("repeated variable name")

    @property
    def gens(self) -> tuple[MultiPoly, ...]:
        return tuple(MultiPoly.var(self.names, n) for n in self.names)

    def __getitem__(self, name: str) -> MultiPoly:
        return MultiPoly.var(self.names, name)

    def const(self, c: Coeff) -> MultiPoly:
        return MultiPoly.const(self.names, c)

    def zero(self) -> MultiPoly:
        return MultiPoly(self.names)

    def __call__(self, terms: Mapping[tuple, Coeff]) -> MultiPoly:
        return MultiPoly(self.names, terms)


# -- multiplication ---------------------------------------------------------


def _shift(p: MultiPoly) -> tuple[list[int], dict]:
    """Split off the monomial of minimal exponents so the rest is non-negative."""
    n = p.nvars
    low = [min(e[i] for e in p.terms) for i in range(n)]
    if all(x >= 0 for x in low):
        return [0] * n, p.terms
    low = [min(x, 0) for x in low]
    return low, {tuple(a - b for a, b in zip(e, low)): c for e, c in p.terms.items()}


def _pack_layout(a: dict, b: dict, n: int) -> Optional[list[int]]:
    widths = []
    for i in range(n):
        top = max(e[i] for e in a) + max(e[i] for e in b)
        widths.append(max(top.bit_length(), 1))
    if sum(widths) > 64:
        return None
    offs, o = [], 0
    for w in widths:
        offs.append(o)
        o += w
    return offs


def _pack(terms: dict, offs: list[int]) -> tuple[list[int], list]:
    keys, coeffs = [], []
    for e, c in terms.items():
        k = 0
        for x, o in zip(e, offs):
            k |= x << o
        keys.append(k)
        coeffs.append(c)
    return keys, coeffs


def _unpack(keys: list[int], offs: list[int]) -> list[tuple]:
    n = len(offs)
    masks = [((1 << (offs[i + 1] - offs[i])) - 1) if i + 1 < n else None for i in range(n)]
    out = []
    for k in keys:
        out.append(tuple((k >> o) & m if m is not None else k >> o for o, m in zip(offs, masks)))
    return out


def _clear_denominators(terms: dict) -> tuple[int, dict]:
    den = 1
    for c in terms.values():
        if isinstance(c, Fraction):
            d = c.denominator
            den = den * d // math.gcd(den, d)
    if den == 1:
        return 1, terms
    return den, {e: int(c * den) for e, c in terms.items()}


def mul(a: MultiPoly, b: MultiPoly, kernel=None) -> MultiPoly:
    if a.names != b.names:
        raise PolyError("variable mismatch")
    if not a.terms or not b.terms:
        return MultiPoly._raw(a.names, {})
    kern = kernel or backend.active
    n = a.nvars
    la_, ta = _shift(a)
    lb_, tb = _shift(b)
    rational = not any(isinstance(c, NFElement) for c in ta.values()) and not any(
        isinstance(c, NFElement) for c in tb.values()
    )
    da = db = 1
    if rational:
        da, ta = _clear_denominators(ta)
        db, tb = _clear_denominators(tb)
    offs = _pack_layout(ta, tb, n) if n else [0]
    if offs is not None and n:
        ka, ca = _pack(ta, offs)
        kb, cb = _pack(tb, offs)
        f = kern.mul_packed_int if rational else kern.mul_packed
        keys, coeffs = f(ka, ca, kb, cb)
        exps = _unpack(keys, offs)
        terms = dict(zip(exps, coeffs))
    else:
        terms = {}
        for e1, c1 in ta.items():
            for e2, c2 in tb.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        terms = {e: c for e, c in terms.items() if c}
    den = da * db
    if den != 1:
        terms = {e: _norm(Fraction(c, den)) for e, c in terms.items()}
    elif not rational:
        terms = {e: _norm(c) for e, c in terms.items() if c}
    low = [x + y for x, y in zip(la_, lb_)]
    if any(low):
        terms = {tuple(x + y for x, y in zip(e, low)): c for e, c in terms.items()}
    return MultiPoly._raw(a.names, terms)


# -- division ---------------------------------------------------------------


def _divides(m: tuple, d: tuple) -> bool:
    return all(x >= y for x, y in zip(m, d))


def exact_div(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Quotient ``p / q``; raises :class:`NonExactDivision` with the remainder."""
    if p.names != q.names:
        raise PolyError("variable mismatch")
    if not q.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    names = p.names
    if len(q.terms) == 1:
        (eq, cq), = q.terms.items()
        inv = Fraction(1) / cq if not isinstance(cq, NFElement) else cq.inverse()
        out, rem = {}, {}
        for e, c in p.terms.items():
            if _divides(e, eq):
                out[tuple(x - y for x, y in zip(e, eq))] = _norm(c * inv)
            else:
                rem[e] = c
        if rem:
            raise NonExactDivision(MultiPoly._raw(names, rem))
        return MultiPoly._raw(names, out)
    lq, cq = q.leading_term()
    inv = Fraction(1) / cq if not isinstance(cq, NFElement) else cq.inverse()
    r = dict(p.terms)
    heap = [tuple(-x for x in _grlex_key(e)[:1]) + tuple(-x for x in e) for e in r]
    heapq.heapify(heap)
    quot: dict = {}
    rem: dict = {}
    qterms = list(q.terms.items())
    while heap:
        key = heapq.heappop(heap)
        e = tuple(-x for x in key[1:])
        c = r.get(e)
        if c is None:
            continue
        if not _divides(e, lq):
            rem[e] = r.pop(e)
            continue
        m = tuple(x - y for x, y in zip(e, lq))
        f = _norm(c * inv)
        quot[m] = f
        for eq_, c_ in qterms:
            t = tuple(x + y for x, y in zip(m, eq_))
            v = r.get(t)
            nv = _norm(-f * c_) if v is None else _norm(v - f * c_)
            if nv:
                if v is None:
                    heapq.heappush(heap, (-sum(t),) + tuple(-x for x in t))
                r[t] = nv
            else:
                r.pop(t, None)
    if rem:
        raise NonExactDivision(MultiPoly._raw(names, rem))
    return MultiPoly._raw(names, quot)


# -- determinants and resultants --------------------------------------------


def det_poly_matrix(m: Sequence[Sequence[Union[MultiPoly, Coeff]]], names: Optional[Sequence[str]] = None):
    """Determinant by Laplace expansion with minors memoised by column set.

    Rows are expanded sparsest first.
    """
    n = len(m)
    if any(len(r) != n for r in m):
        raise PolyError("determinant of a non-square matrix")
    if names is None:
        for r in m:
            for x in r:
                if isinstance(x, MultiPoly):
                    names = x.names
                    break
            if names is not None:
                break
    if names is None:
        raise PolyError("cannot infer the polynomial ring")
    names = tuple(names)
    mat = [[x if isinstance(x, MultiPoly) else MultiPoly.const(names, x) for x in r] for r in m]
    cost = [sum(len(x.terms) for x in r) for r in mat]
    order = sorted(range(n), key=lambda i: (cost[i], i))
    # row permutation sign
    perm = order
    sign = 1
    seen = [False] * n
    for i in range(n):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    rows = [mat[i] for i in order]
    memo: dict[int, MultiPoly] = {}
    full = (1 << n) - 1

    def minor(cols: int) -> MultiPoly:
        # determinant of the last popcount(cols) rows on columns ``cols``
        if cols == 0:
            return MultiPoly.const(names, 1)
        if cols in memo:
            return memo[cols]
        k = n - bin(cols).count("1")
        row = rows[k]
        acc = MultiPoly(names)
        pos = 0
        for j in range(n):
            if cols >> j & 1:
                x = row[j]
                if x.terms:
                    sub = minor(cols & ~(1 << j))
                    if sub.terms:
                        t = x * sub
                        acc = acc - t if pos % 2 else acc + t
                pos += 1
        memo[cols] = acc
        return acc

    d = minor(full)
    return d if sign == 1 else -d


def univariate_coefficients(p: MultiPoly, var: str) -> list[MultiPoly]:
    """Coefficients of ``p`` as a polynomial in ``var``, constant term first."""
    i = p.names.index(var)
    deg = p.degree(var)
    out = [dict() for _ in range(deg + 1)]
    for e, c in p.terms.items():
        f = list(e)
        k = f[i]
        if k < 0:
            raise PolyError("negative power in univariate view")
        f[i] = 0
        out[k][tuple(f)] = c
    return [MultiPoly._raw(p.names, t) for t in out]


def sylvester_matrix(f: Sequence[MultiPoly], g: Sequence[MultiPoly]) -> list[list[MultiPoly]]:
    """Sylvester matrix from coefficient lists (constant term first)."""
    m, n = len(f) - 1, len(g) - 1
    names = f[0].names
    zero = MultiPoly(names)
    size = m + n
    rows = []
    for i in range(n):
        r = [zero] * size
        for j, c in enumerate(reversed(f)):
            r[i + j] = c
        rows.append(r)
    for i in range(m):
        r = [zero] * size
        for j, c in enumerate(reversed(g)):
            r[i + j] = c
        rows.append(r)
    return rows


def resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    return det_poly_matrix(sylvester_matrix(univariate_coefficients(p, var), univariate_coefficients(q, var)), p.names)


def discriminant_univariate(p: MultiPoly, var: str) -> MultiPoly:
    """``(-1)^(n(n-1)/2) Res(p, p')`` for monic ``p`` of degree ``n`` in ``var``."""
    coeffs = univariate_coefficients(p, var)
    n = len(coeffs) - 1
    if n < 1:
        raise PolyError("discriminant needs positive degree")
    if coeffs[-1] != MultiPoly.const(p.names, 1):
        raise PolyError("polynomial is not monic")
    r = resultant(p, p.derivative(var), var)
    return r if (n * (n - 1) // 2) % 2 == 0 else -r
