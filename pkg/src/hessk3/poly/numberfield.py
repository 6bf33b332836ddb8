"""Simple algebraic number fields ``Q[z]/(m(z))`` with dense coefficient vectors."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

Scalar = Union[int, Fraction]


def _norm_q(x) -> Scalar:
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def _trim(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _polydivmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    a = [Fraction(x) for x in a]
    b = _trim(list(b))
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = Fraction(b[-1])
    while len(_trim(a)) >= len(b):
        k = len(a) - len(b)
        f = a[-1] / lead
        q[k] = f
        for i, y in enumerate(b):
            a[i + k] -= f * y
    return _trim(q), a


class NumberField:
    """``Q[z]/(m)``; ``modulus`` lists the coefficients of monic ``m``, low degree first."""

    def __init__(self, modulus: Sequence[int], name: str = "z"):
        modulus = [_norm_q(Fraction(c)) for c in modulus]
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.modulus = tuple(modulus)
        self.degree = len(modulus) - 1
        self.name = name

    def __repr__(self):
        return f"NumberField({list(self.modulus)}, {self.name!r})"

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __call__(self, x) -> "NFElement":
        if isinstance(x, NFElement):
            if x.field != self:
                raise ValueError("element of a different field")
            return x
        return NFElement(self, [x])

    @property
    def gen(self) -> "NFElement":
        return NFElement(self, [0, 1])

    def reduce(self, c: Sequence) -> tuple:
        c = list(c)
        m, d = self.modulus, self.degree
        for k in range(len(c) - 1, d - 1, -1):
            t = c[k]
            if t:
                for i in range(d):
                    c[k - d + i] -= t * m[i]
            c[k] = 0
        c = _trim([_norm_q(x) for x in c[:d]])
        return tuple(c)


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, low degree first."""
    p = [-1] + [0] * (n - 1) + [1]  # z^n - 1
    for d in range(1, n):
        if n % d == 0:
            q, r = _polydivmod(p, cyclotomic_poly(d))
            assert not _trim(r)
            p = [int(x) for x in q]
    return tuple(p)


@lru_cache(maxsize=None)
def cyclotomic_field(n: int) -> NumberField:
    """``Q(zeta_n)``; the generator is a primitive n-th root of unity."""
    return NumberField(cyclotomic_poly(n), f"zeta{n}")


def quadratic_field(d) -> NumberField:
    """``Q(sqrt(d))``; the generator squares to ``d``."""
    d = Fraction(d)
    return NumberField([-d, 0, 1], f"sqrt({d})")


class NFElement:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: Sequence):
        self.field = field
        self.coeffs = field.reduce(coeffs)

    def _coerce(self, other) -> "NFElement":
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise ValueError("number field mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, [other])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a, b = self.coeffs, o.coeffs
        n = max(len(a), len(b))
        return NFElement(
            self.field, [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
        )

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, [-x for x in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, [x * other for x in self.coeffs])
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return NFElement(self.field, _polymul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid in Q[z]
        r0, r1 = [Fraction(x) for x in self.field.modulus], [Fraction(x) for x in self.coeffs]
        s0, s1 = [], [Fraction(1)]
        while _trim(list(r1)):
            q, r = _polydivmod(r0, r1)
            r0, r1 = r1, _trim(r)
            qs = _polymul(q, s1)
            n = max(len(s0), len(qs))
            s0, s1 = s1, _trim(
                [(s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0) for i in range(n)]
            )
        r0 = _trim(list(r0))
        if len(r0) != 1:
            raise ZeroDivisionError("element is a zero divisor (modulus not irreducible)")
        c = r0[0]
        return NFElement(self.field, [x / c for x in s0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, [Fraction(x) / other for x in self.coeffs])
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = NFElement(self.field, [1])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, NFElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == NFElement(self.field, [other]).coeffs
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def is_rational(self) -> bool:
        return len(self.coeffs) <= 1

    def to_rational(self) -> Scalar:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0] if self.coeffs else 0

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else (self.field.name if i == 1 else f"{self.field.name}^{i}")
                terms.append(f"({c}){'*' + mono if mono else ''}")
        return " + ".join(terms)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]
