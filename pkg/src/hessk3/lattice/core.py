"""Even integral lattices given by Gram matrices, and sublattices of them."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

from .. import linalg as la


class LatticeError(ValueError):
    pass


def _freeze(m: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in r) for r in m)


@dataclass(frozen=True)
class Lattice:
    gram: tuple[tuple[int, ...], ...]
    label: Optional[str] = None
    allow_degenerate: bool = False

    def __post_init__(self):
        g = _freeze(self.gram)
        object.__setattr__(self, "gram", g)
        if not la.is_symmetric(g):
            raise LatticeError("Gram matrix is not symmetric")
        if not self.allow_degenerate and g and la.det(g) == 0:
            raise LatticeError("degenerate Gram matrix")

    @property
    def rank(self) -> int:
        return len(self.gram)

    @cached_property
    def det(self) -> int:
        return la.det(self.gram)

    @property
    def disc(self) -> int:
        return self.det

    @property
    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    @property
    def is_degenerate(self) -> bool:
        return self.rank > 0 and self.det == 0

    @property
    def signature(self) -> tuple[int, int]:
        p, n, z = la.signature(self.gram)
        if z:
            raise LatticeError("signature of a degenerate lattice")
        return p, n

    def twist(self, n: int) -> "Lattice":
        if n == 0:
            raise LatticeError("twist by zero")
        return Lattice([[n * x for x in r] for r in self.gram], _twist_label(self.label, n))

    def __add__(self, other: "Lattice") -> "Lattice":
        lab = None
        if self.label and other.label:
            lab = f"{self.label}+{other.label}"
        return Lattice(la.block_diag(self.gram, other.gram), lab)

    def norm(self, v: Sequence[int]) -> int:
        return la.bilinear(v, self.gram, v)

    def pairing(self, u: Sequence[int], v: Sequence[int]) -> int:
        return la.bilinear(u, self.gram, v)

    def relabel(self, label: Optional[str]) -> "Lattice":
        return Lattice(self.gram, label, self.allow_degenerate)

    def to_json(self) -> dict:
        from .discriminant import discriminant_form

        out = {"label": self.label, "gram": la.to_json_obj(self.gram), "disc": str(self.det)}
        form = discriminant_form(self)
        out["invariant_factors"] = [str(d) for d in form.invariant_factors]
        out["q_values"] = [f"{q} mod 2" for q in form.q_values]
        return out


def _twist_label(label, n):
    if not label:
        return None
    if re.fullmatch(r"[A-Za-z_0-9]+", label):
        return f"{label}({n})"
    return f"({label})({n})"


# -- standard lattices -------------------------------------------------------


def _a_n(n: int) -> list[list[int]]:
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]


def _d_n(n: int) -> list[list[int]]:
    g = _a_n(n)
    g[n - 1][n - 2] = g[n - 2][n - 1] = 0
    g[n - 1][n - 3] = g[n - 3][n - 1] = -1
    return g


def _e_n(n: int) -> list[list[int]]:
    # chain 0-2-3-...-(n-1) with node 1 attached to node 3
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2
    edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
    for i, j in edges:
        g[i][j] = g[j][i] = -1
    return g


# Lattice-form coordinates x1..x6 of the rank-6 lattice U + U(2) + A2(-2):
# norm 2 x1 x2 + 4 x3 x4 - 4 (x5^2 + x6^2 - x5 x6).
TGEN_GRAM = (
    (0, 1, 0, 0, 0, 0),
    (1, 0, 0, 0, 0, 0),
    (0, 0, 0, 2, 0, 0),
    (0, 0, 2, 0, 0, 0),
    (0, 0, 0, 0, -4, 2),
    (0, 0, 0, 0, 2, -4),
)

_TERM = re.compile(
    r"""^(?P<base><-?\d+>|U|A\d+|D\d+|E[678]|K3|T_?gen)
        (?:\((?P<tw>-?\d+)\))?
        (?:\^(?P<pow>\d+))?$""",
    re.X,
)


def _base(name: str) -> list[list[int]]:
    if name.startswith("<"):
        return [[int(name[1:-1])]]
    if name == "U":
        return [[0, 1], [1, 0]]
    if name[0] == "A":
        return _a_n(int(name[1:]))
    if name[0] == "D":
        return _d_n(int(name[1:]))
    if name[0] == "E":
        return _e_n(int(name[1:]))
    if name == "K3":
        e8 = [[-x for x in r] for r in _e_n(8)]
        u = [[0, 1], [1, 0]]
        return la.block_diag(e8, e8, u, u, u)
    return [list(r) for r in TGEN_GRAM]


def make_lattice(spec: str, label: Optional[str] = None) -> Lattice:
    """Build a lattice from a name such as ``"U+U(2)+A2(-2)"``.

    Terms are ``U``, ``<n>``, ``An``, ``Dn``, ``E6/E7/E8``, ``K3`` and
    ``Tgen``, each optionally twisted ``(m)`` and repeated ``^k``, joined by
    ``+``.  The result must be even.
    """
    text = spec.replace(" ", "").replace("⊕", "+").replace("−", "-")
    if not text:
        raise LatticeError("empty lattice spec")
    blocks = []
    for term in text.split("+"):
        m = _TERM.match(term)
        if not m:
            raise LatticeError(f"cannot parse lattice term {term!r}")
        g = _base(m["base"])
        if m["tw"] is not None:
            tw = int(m["tw"])
            if tw == 0:
                raise LatticeError("twist multiplier must be nonzero")
            g = [[tw * x for x in r] for r in g]
        blocks.extend([g] * int(m["pow"] or 1))
    lat = Lattice(la.block_diag(*blocks), label or spec)
    if not lat.is_even:
        raise LatticeError(f"{spec} is not an even lattice")
    return lat


def binary(a: int, b: int, c: int, label: Optional[str] = None) -> Lattice:
    return Lattice([[a, b], [b, c]], label)


# -- sublattices -------------------------------------------------------------


@dataclass(frozen=True)
class EmbeddedSublattice:
    """A sublattice given by basis rows in the coordinates of ``ambient``."""

    ambient: Lattice
    basis: tuple[tuple[int, ...], ...]
    proposed_is_basis: Optional[bool] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "basis", _freeze(self.basis))

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def gram(self) -> tuple[tuple[int, ...], ...]:
        return _freeze(la.congruence(self.basis, self.ambient.gram))

    @property
    def degenerate(self) -> bool:
        return la.det(self.gram) == 0

    def lattice(self, label: Optional[str] = None) -> Lattice:
        return Lattice(self.gram, label, allow_degenerate=True)

    def coordinates(self, v: Sequence[int]) -> Optional[list[int]]:
        """Integral coordinates of an ambient vector in this basis, if any."""
        if not self.ambient.is_degenerate:
            return la.solve_integer(la.transpose(self.basis), list(v))
        # degenerate ambient: compare pairings, i.e. work modulo the radical
        pair = la.matmul(self.basis, self.ambient.gram)
        target = la.vecmat(v, self.ambient.gram)
        return la.solve_integer(la.transpose(pair), target)

    def contains(self, v: Sequence[int]) -> bool:
        return self.coordinates(v) is not None


def _independent_rows(ambient: Lattice, vectors: Sequence[Sequence[int]]) -> list[list[int]]:
    # HNF of the pairing rows detects dependence modulo the radical of the form
    w = la.matmul(vectors, ambient.gram)
    h, u = la.hnf(w)
    keep = [i for i in range(len(h)) if any(h[i])]
    return [la.vecmat(u[i], vectors) for i in keep]


def span_sublattice(
    ambient: Lattice,
    vectors: Sequence[Sequence[int]],
    proposed: Optional[Sequence[int]] = None,
) -> EmbeddedSublattice:
    """Z-span of ``vectors`` (rows, ambient coordinates).

    The ambient may be degenerate (a raw curve lattice); the span is then
    taken modulo the radical.  ``proposed`` lists row indices whose vectors
    are checked for being a basis of the span.
    """
    vectors = [list(v) for v in vectors]
    if not vectors or not any(any(v) for v in vectors):
        raise LatticeError("zero span")
    if ambient.is_degenerate:
        basis = _independent_rows(ambient, vectors)
    else:
        h, _ = la.hnf(vectors)
        basis = [r for r in h if any(r)]
    if not basis:
        raise LatticeError("span lies in the radical")
    flag = None
    if proposed is not None:
        sub = [vectors[i] for i in proposed]
        full = la.congruence(basis, ambient.gram)
        mine = la.congruence(sub, ambient.gram)
        flag = len(sub) == len(basis) and la.det(full) != 0 and la.det(mine) == la.det(full)
    return EmbeddedSublattice(ambient, basis, flag)


def _require_nondegenerate(lat: Lattice) -> None:
    if lat.is_degenerate:
        raise LatticeError("operation needs a nondegenerate ambient lattice")


def saturate(s: EmbeddedSublattice) -> EmbeddedSublattice:
    """Primitive closure ``(Q s) ∩ ambient``."""
    _require_nondegenerate(s.ambient)
    k = la.kernel(s.basis, s.ambient.rank)
    sat = la.kernel(k, s.ambient.rank) if k else la.identity(s.ambient.rank)
    h, _ = la.hnf(sat)
    return EmbeddedSublattice(s.ambient, [r for r in h if any(r)])


def index_in(sub: EmbeddedSublattice, sup: EmbeddedSublattice) -> int:
    """Index of ``sub`` in ``sup`` (same ambient, same rank)."""
    if sub.rank != sup.rank:
        raise LatticeError("index needs equal ranks")
    coords = []
    for v in sub.basis:
        c = sup.coordinates(v)
        if c is None:
            raise LatticeError("not a sublattice")
        coords.append(c)
    return abs(la.det(coords))


def saturation_index(s: EmbeddedSublattice) -> int:
    return index_in(s, saturate(s))


def is_primitive(s: EmbeddedSublattice) -> bool:
    return saturation_index(s) == 1


def orthogonal_complement(s: EmbeddedSublattice) -> EmbeddedSublattice:
    """``s^perp`` in the ambient lattice (always primitive)."""
    _require_nondegenerate(s.ambient)
    m = la.matmul(s.basis, s.ambient.gram)
    k = la.kernel(m, s.ambient.rank)
    if not k:
        return EmbeddedSublattice(s.ambient, [])
    h, _ = la.hnf(k)
    return EmbeddedSublattice(s.ambient, [r for r in h if any(r)])


def perp_within(sup: EmbeddedSublattice, vectors: Sequence[Sequence[int]]) -> EmbeddedSublattice:
    """Vectors of ``sup`` orthogonal to all ``vectors`` (ambient coordinates)."""
    m = la.matmul(la.matmul(sup.basis, sup.ambient.gram), la.transpose(vectors))
    ys = la.left_kernel(m)
    basis = [la.vecmat(y, sup.basis) for y in ys]
    return EmbeddedSublattice(sup.ambient, basis)


def sublattice_index(sub: EmbeddedSublattice) -> int:
    """Index of a full-rank sublattice in its ambient."""
    if sub.rank != sub.ambient.rank:
        raise LatticeError("sublattice is not of full rank")
    _require_nondegenerate(sub.ambient)
    return abs(la.det(sub.basis))


def whole(lat: Lattice) -> EmbeddedSublattice:
    return EmbeddedSublattice(lat, la.identity(lat.rank))


def sublattice(lat: Lattice, vectors: Sequence[Sequence[int]]) -> EmbeddedSublattice:
    """Sublattice from vectors known to be independent (no basis extraction)."""
    return EmbeddedSublattice(lat, vectors)


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n
