"""(-2)-curve configurations on Hessian K3 surfaces.

Curves are labelled by the pentahedron combinatorics: ``N01`` (edge lines),
``N012`` (vertex exceptional curves), ``C234`` (new lines through an Eckardt
vertex, a cyclic word), ``M0`` (node exceptional curves) and ``L01`` (lines
joining two nodes).  Intersection numbers come from fixed combinatorial
rules; the Gram matrix of a configuration is generated from them.
"""

from __future__ import annotations

import functools
import itertools
import json
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from . import linalg as la
from .lattice.core import EmbeddedSublattice, Lattice, perp_within, span_sublattice, whole

INDICES = range(5)


class CurveLabel(NamedTuple):
    kind: str  # "N" (pair or triple), "C", "M", "L"
    idx: tuple[int, ...]

    def __str__(self):
        if self.kind == "V":
            return f"V{self.idx[0]}"
        return self.kind + "".join(map(str, self.idx))

    @property
    def support(self) -> frozenset:
        return frozenset(self.idx)


def _canonical_word(w: Sequence[int]) -> tuple[int, ...]:
    k = w.index(min(w))
    return tuple(w[k:]) + tuple(w[:k])


_LABEL = re.compile(r"^([NCML])_?\{?(\d+)\}?$")


def curve(name: str) -> CurveLabel:
    """Parse ``"N01"``, ``"N_{012}"``, ``"C041"``, ``"M3"`` or ``"L23"``."""
    name = name.strip()
    if re.fullmatch(r"V\d+", name):
        # vertex of an abstract graph configuration
        return CurveLabel("V", (int(name[1:]),))
    m = _LABEL.match(name)
    if not m:
        raise ValueError(f"bad curve label {name!r}")
    kind, digits = m[1], tuple(int(c) for c in m[2])
    if len(set(digits)) != len(digits) or any(d > 4 for d in digits):
        raise ValueError(f"bad curve label {name!r}")
    if kind == "N" and len(digits) in (2, 3):
        return CurveLabel("N", tuple(sorted(digits)))
    if kind == "C" and len(digits) == 3:
        return CurveLabel("C", _canonical_word(digits))
    if kind == "M" and len(digits) == 1:
        return CurveLabel("M", digits)
    if kind == "L" and len(digits) == 2:
        return CurveLabel("L", tuple(sorted(digits)))
    raise ValueError(f"bad curve label {name!r}")


def _adjacent_pairs(w: tuple[int, ...]) -> set:
    return {(w[i], w[(i + 1) % 3]) for i in range(3)}


def intersection_number(a: CurveLabel, b: CurveLabel) -> int:
    """Intersection number of two labelled (-2)-curves."""
    if a == b:
        return -2
    if (a.kind, len(a.idx)) > (b.kind, len(b.idx)):
        a, b = b, a
    ka, kb = a.kind, b.kind
    sa, sb = a.support, b.support
    if ka == "C" and kb == "C":
        return int(bool(_adjacent_pairs(a.idx) & _adjacent_pairs(b.idx)))
    if ka == "C" and kb == "N":
        if len(sb) == 2:
            return int(not (sa & sb))
        return int(sa == sb)
    if ka == "L" and kb == "N":
        if len(sb) == 2:
            return int(sa == sb)
        return int(sa | sb == frozenset(INDICES))
    if ka == "L" and kb == "M":
        return int(sb <= sa)
    if ka == "N" and kb == "N":
        if len(sa) == len(sb):
            return 0
        return int(sa <= sb or sb <= sa)
    # C.L, C.M, L.L, M.M, M.N
    return 0


PAIRS = [tuple(p) for p in itertools.combinations(INDICES, 2)]
TRIPLES = [tuple(t) for t in itertools.combinations(INDICES, 3)]

GEN_CURVES = [CurveLabel("N", p) for p in PAIRS] + [CurveLabel("N", t) for t in TRIPLES]
GEN_EXCLUDED = [curve(s) for s in ("N234", "N14", "N23", "N24")]
GEN_BASIS = [c for c in GEN_CURVES if c not in GEN_EXCLUDED]


def c_lines(supports: Iterable[Sequence[int]]) -> list[CurveLabel]:
    out = []
    for s in supports:
        a, b, c = sorted(s)
        out.append(CurveLabel("C", (a, b, c)))
        out.append(CurveLabel("C", (a, c, b)))
    return sorted(out)


ALL_C = c_lines(TRIPLES)

# equal-coefficient pairs of the Sylvester forms with k Eckardt points
ECKARDT_PAIRS = {
    "10": PAIRS,
    "6": [p for p in PAIRS if 4 not in p],
    "4": [(0, 1), (0, 2), (1, 2), (3, 4)],
    "3": [(0, 1), (0, 2), (1, 2)],
    "2": [(0, 1), (3, 4)],
    "2p": [(0, 1), (2, 3)],
    "1": [(0, 1)],
    "0": [],
}


def eckardt_supports(k: str) -> list[tuple[int, ...]]:
    return [tuple(sorted(set(INDICES) - set(p))) for p in ECKARDT_PAIRS[k]]


@dataclass(frozen=True)
class Configuration:
    tag: str
    curves: tuple[CurveLabel, ...]
    gram: tuple[tuple[int, ...], ...]
    proposed_basis: Optional[tuple[CurveLabel, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))
        object.__setattr__(self, "gram", _freeze(self.gram))
        g = self.gram
        n = len(self.curves)
        if len(g) != n or not la.is_symmetric(g):
            raise ValueError("configuration Gram must be symmetric and match the curves")
        if any(g[i][i] != -2 for i in range(n)):
            raise ValueError("diagonal must be -2")
        if any(g[i][j] not in (0, 1) for i in range(n) for j in range(n) if i != j):
            raise ValueError("off-diagonal entries must be 0 or 1")

    def index(self, c) -> int:
        if isinstance(c, str):
            c = curve(c)
        try:
            return self.curves.index(c)
        except ValueError:
            raise KeyError(f"{c} is not in configuration {self.tag}") from None

    def vector(self, combo: dict) -> list[int]:
        """Curve-coordinate vector of a linear combination ``{label: coeff}``."""
        v = [0] * len(self.curves)
        for c, k in combo.items():
            v[self.index(c)] += k
        return v

    @property
    def curve_lattice(self) -> Lattice:
        return Lattice(self.gram, f"curves({self.tag})", allow_degenerate=True)

    def span(self) -> EmbeddedSublattice:
        """Lattice spanned by the curves; checks the proposed basis if any."""
        idx = None
        if self.proposed_basis is not None:
            idx = [self.index(c) for c in self.proposed_basis]
        n = len(self.curves)
        return span_sublattice(self.curve_lattice, la.identity(n), idx)

    def pairing(self, u: Sequence[int], v: Sequence[int]) -> int:
        return la.bilinear(u, self.gram, v)

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "curves": [str(c) for c in self.curves],
            "gram": la.to_json_obj(self.gram),
            "proposed_basis": None
            if self.proposed_basis is None
            else [str(c) for c in self.proposed_basis],
        }

    @classmethod
    def from_json(cls, obj) -> "Configuration":
        if isinstance(obj, str):
            obj = json.loads(obj)
        curves = tuple(curve(s) for s in obj["curves"])
        pb = obj.get("proposed_basis")
        gram = obj.get("gram")
        gram = la.from_json_obj(gram) if gram is not None else _gram(curves)
        return cls(obj["tag"], curves, gram, None if pb is None else tuple(curve(s) for s in pb))


def _gram(curves: Sequence[CurveLabel]) -> list[list[int]]:
    return [[intersection_number(a, b) for b in curves] for a in curves]


def from_curves(tag: str, curves: Sequence[CurveLabel], basis=None) -> Configuration:
    curves = tuple(curves)
    return Configuration(tag, curves, _freeze(_gram(curves)), None if basis is None else tuple(basis))


def _freeze(m):
    return tuple(tuple(r) for r in m)


def _graph(tag: str, n: int, edges: Sequence[tuple[int, int]]) -> Configuration:
    g = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        g[i][j] = g[j][i] = 1
    labels = tuple(CurveLabel("V", (i,)) for i in range(n))
    return Configuration(tag, labels, _freeze(g))


def square_graph() -> Configuration:
    """A 4-cycle subdivided three times per edge with a pendant at each corner.

    Vertex numbering: corners 0..3, edge points 4..15 (three per edge,
    running from corner i towards corner i+1), pendants 16..19.
    """
    edges = []
    for i in range(4):
        path = [i, 4 + 3 * i, 5 + 3 * i, 6 + 3 * i, (i + 1) % 4]
        edges += list(zip(path, path[1:]))
        edges.append((i, 16 + i))
    return _graph("ns2_square", 20, edges)


def cube_graph() -> Configuration:
    """The cube graph with every edge subdivided once (8 + 12 vertices)."""
    verts = list(itertools.product((0, 1), repeat=3))
    cube_edges = [
        (a, b) for a, b in itertools.combinations(range(8), 2)
        if sum(x != y for x, y in zip(verts[a], verts[b])) == 1
    ]
    edges = []
    for k, (a, b) in enumerate(cube_edges):
        mid = 8 + k
        edges += [(a, mid), (mid, b)]
    return _graph("ns1_cube", 20, edges)


def build_configuration(tag: str) -> Configuration:
    """Standard configurations: ``gen``, ``clebsch``, ``cayley``,
    ``nodal1..nodal4``, ``x3n4``, ``x1n6``, ``x1n4``, ``eckardtK``,
    ``ns2_square`` and ``ns1_cube``."""
    gen = list(GEN_CURVES)
    if tag == "gen":
        return from_curves(tag, gen, GEN_BASIS)
    if tag == "clebsch":
        basis = GEN_BASIS + [curve(s) for s in ("C234", "C134", "C124", "C032")]
        return from_curves(tag, gen + ALL_C, basis)
    if tag == "cayley":
        tag = "nodal4"
    m = re.fullmatch(r"nodal\(?([1-4])\)?", tag)
    if m:
        k = int(m[1])
        ms = [CurveLabel("M", (i,)) for i in range(k)]
        ls = [CurveLabel("L", p) for p in itertools.combinations(range(k), 2)]
        basis = None
        if k == 4:
            basis = GEN_BASIS + [curve(s) for s in ("L01", "L02", "L03", "L12")]
        return from_curves("cayley" if k == 4 else f"nodal{k}", gen + ms + ls, basis)
    if tag == "x3n4":
        cs = [curve("C012"), curve("C021")]
        ms = [CurveLabel("M", (i,)) for i in range(3)]
        ls = [curve(s) for s in ("L01", "L02", "L12")]
        basis = GEN_BASIS + [curve(s) for s in ("C012", "L01", "L02", "L12")]
        return from_curves(tag, gen + cs + ms + ls, basis)
    m = re.fullmatch(r"eckardt\(?(10|6|4|3|2p|2|1|0)\)?", tag)
    if m:
        return from_curves(tag, gen + c_lines(eckardt_supports(m[1])))
    if tag in ("x1n6", "x1n4"):
        k = "6" if tag == "x1n6" else "4"
        return from_curves(tag, gen + c_lines(eckardt_supports(k)) + [CurveLabel("M", (0,))])
    if tag == "ns2_square":
        return square_graph()
    if tag == "ns1_cube":
        return cube_graph()
    raise ValueError(f"unknown configuration tag {tag!r}")


def c_class(i: int, j: int, config: Configuration) -> list[int]:
    """Curve vector of ``c_ij = C_abc - C_acb`` with ``a<b<c`` the complement."""
    if not i < j:
        raise ValueError("need i < j")
    a, b, c = sorted(set(INDICES) - {i, j})
    return config.vector({CurveLabel("C", (a, b, c)): 1, CurveLabel("C", _canonical_word((a, c, b))): -1})


def permute_label(lab: CurveLabel, perm: Sequence[int]) -> CurveLabel:
    img = tuple(perm[i] for i in lab.idx)
    if lab.kind == "C":
        return CurveLabel("C", _canonical_word(img))
    return CurveLabel(lab.kind, tuple(sorted(img)))


def _c_combo(config: Configuration, combo: dict) -> list[int]:
    v = [0] * len(config.curves)
    for name, k in combo.items():
        i, j = int(name[1]), int(name[2])
        v = [x + k * y for x, y in zip(v, c_class(i, j, config))]
    return v


# NS_k as perpendiculars of c-combinations: k -> routes of (parent, combination).
# The NS_4 combination needs its -c04 term to be orthogonal to the surviving curves.
ECKARDT_ROUTES = {
    "6": [(None, {"c04": 1, "c14": -1, "c24": 1, "c34": -1})],
    "4": [(None, {"c14": 1, "c24": -1, "c03": 1, "c13": -1, "c23": 1, "c04": -1})],
    "3": [("4", {"c34": 1}), ("6", {"c23": 1, "c13": -1, "c03": 1})],
    "2p": [("6", {"c02": 1, "c03": -1, "c12": -1, "c13": 1})],
    "2": [("4", {"c02": 1, "c12": -1})],
    "1": [("2", {"c34": 1}), ("3", {"c02": 1, "c12": -1})],
    "gen": [("1", {"c01": 1})],
}


@functools.lru_cache(maxsize=None)
def ns10() -> tuple[Configuration, EmbeddedSublattice, EmbeddedSublattice]:
    """Clebsch configuration, its curve span, and the span as an ambient lattice."""
    config = build_configuration("clebsch")
    span = config.span()
    return config, span, whole(span.lattice("NS10"))


def eckardt_sublattice(k: str, route: int = 0) -> EmbeddedSublattice:
    """``NS_k`` inside ``NS_10`` (coordinates of the Clebsch span basis)."""
    k = str(k).replace("'", "p")
    if k not in ECKARDT_ROUTES:
        raise ValueError(f"no perpendicular construction for k={k}")
    config, span, ambient = ns10()
    parent, combo = ECKARDT_ROUTES[k][route]
    sup = ambient if parent is None else eckardt_sublattice(parent)
    v = span.coordinates(_c_combo(config, combo))
    return perp_within(sup, [v])


def nodal_sublattice(k: int) -> EmbeddedSublattice:
    """``NS_kn``: the part of the Cayley span orthogonal to ``M_k, ..., M_3``."""
    if k not in (1, 2, 3, 4):
        raise ValueError("k must be 1..4")
    config = build_configuration("cayley")
    span = config.span()
    if k == 4:
        return span
    ms = [config.vector({f"M{i}": 1}) for i in range(k, 4)]
    return perp_within(span, ms)


_KODAIRA = re.compile(r"^(I\d+\*?|II\*?|III\*?|IV\*?)(?:x(\d+))?$")


def fiber_disc(kind: str) -> int:
    """Discriminant of the lattice of non-identity components of a fibre."""
    if kind.startswith("I") and kind[1:].rstrip("*").isdigit():
        n = int(kind[1:].rstrip("*"))
        if kind.endswith("*"):
            return 4
        if n < 1:
            raise ValueError("I0 is a smooth fibre")
        return n
    table = {"II": 1, "III": 2, "IV": 3, "IV*": 3, "III*": 2, "II*": 1}
    if kind not in table:
        raise ValueError(f"unknown Kodaira type {kind!r}")
    return table[kind]


def _expand_fibers(fibers: Iterable[str]) -> list[str]:
    out = []
    for f in fibers:
        m = _KODAIRA.match(f.strip())
        if not m:
            raise ValueError(f"unknown Kodaira type {f!r}")
        out += [m[1]] * int(m[2] or 1)
    return out


def shioda_tate_disc(fibers: Iterable[str], mw_rank: int = 0, torsion_order: int = 1) -> Fraction:
    """``|disc NS|`` of an elliptic K3 with finite Mordell-Weil group."""
    if mw_rank:
        raise NotImplementedError("only Mordell-Weil rank 0 is supported")
    prod = 1
    for f in _expand_fibers(fibers):
        prod *= fiber_disc(f)
    return Fraction(prod, torsion_order**2)


def torsion_from_disc(fibers: Iterable[str], disc: int) -> Optional[int]:
    """Torsion order making the Shioda-Tate formula give ``|disc|``, if any."""
    prod = 1
    for f in _expand_fibers(fibers):
        prod *= fiber_disc(f)
    if prod % abs(disc):
        return None
    t = math.isqrt(prod // abs(disc))
    return t if t * t * abs(disc) == prod else None
