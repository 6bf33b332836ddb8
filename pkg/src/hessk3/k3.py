"""E8 chains, Neron-Severi splittings and transcendental lattice candidates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import linalg as la
from .curves import Configuration
from .lattice.binary import enumerate_even_binary
from .lattice.core import EmbeddedSublattice, Lattice, LatticeError, perp_within
from .lattice.discriminant import disc_forms_opposite, even_overlattices

K3_RANK = 22


@dataclass(frozen=True)
class RootChain:
    """Seven labels in a row plus one label hanging off the third."""

    chain: tuple[str, ...]
    branch: str

    def __post_init__(self):
        if len(self.chain) != 7:
            raise ValueError("an E8 chain needs 7 nodes in the long row")

    @property
    def labels(self) -> list[str]:
        return list(self.chain) + [self.branch]

    @classmethod
    def parse(cls, text: str) -> "RootChain":
        """``"N034-N04-N024-C024-C124-C041-N23 | N24"``."""
        row, _, br = text.partition("|")
        nodes = [s.strip() for s in row.replace("--", "-").split("-") if s.strip()]
        return cls(tuple(nodes), br.strip())


def e8_gram() -> list[list[int]]:
    """E8(-1) Gram in chain order: nodes 0..6 in a row, node 7 on node 2."""
    g = [[-2 if i == j else 0 for j in range(8)] for i in range(8)]
    for i in range(6):
        g[i][i + 1] = g[i + 1][i] = 1
    g[2][7] = g[7][2] = 1
    return g


def chain_vectors(config: Configuration, chain: RootChain) -> list[list[int]]:
    out = []
    for lab in chain.labels:
        v = [0] * len(config.curves)
        v[config.index(lab)] = 1
        out.append(v)
    return out


def verify_root_chain(config: Configuration, chain: RootChain) -> bool:
    vs = chain_vectors(config, chain)
    return la.congruence(vs, config.gram) == e8_gram()


def split_off_e8_pair(
    span: EmbeddedSublattice, config: Configuration, chains: Sequence[RootChain]
) -> Lattice:
    """Orthogonal complement of two orthogonal E8(-1) chains inside ``span``."""
    if len(chains) != 2:
        raise LatticeError("need exactly two chains")
    for ch in chains:
        if not verify_root_chain(config, ch):
            raise LatticeError(f"not an E8(-1) chain: {ch}")
    a, b = (chain_vectors(config, ch) for ch in chains)
    if any(config.pairing(u, v) for u in a for v in b):
        raise LatticeError("chains are not orthogonal")
    rest = perp_within(span, a + b)
    if rest.rank != span.rank - 16:
        raise LatticeError("unexpected residual rank")
    return rest.lattice("R")


def verify_transcendental_candidate(ns: Lattice, t: Lattice) -> bool:
    if t.rank != K3_RANK - ns.rank:
        return False
    if t.is_degenerate or t.signature[0] != 2:
        return False
    if abs(t.det) != abs(ns.det):
        return False
    return disc_forms_opposite(ns, t)


def rank2_transcendental_enumerate(ns: Lattice) -> list[Lattice]:
    """Reduced positive definite binary lattices that can complement ``ns``."""
    if ns.rank != 20:
        raise LatticeError("need a rank 20 Neron-Severi lattice")
    return [t for t in enumerate_even_binary(abs(ns.det)) if verify_transcendental_candidate(ns, t)]


def index3_branches(ns: Lattice) -> dict[int, list[Lattice]]:
    """Transcendental candidates for ``ns`` and for its index-3 even overlattices."""
    out = {1: rank2_transcendental_enumerate(ns)}
    cands: list[Lattice] = []
    for over in even_overlattices(ns, 3):
        for t in rank2_transcendental_enumerate(over):
            if all(t.gram != c.gram for c in cands):
                cands.append(t)
    out[3] = cands
    return out


def is_twisted_u(lat: Lattice, n: int) -> bool:
    """True iff ``lat`` is isometric to ``U(n)``.

    ``L = U(n)`` iff every pairing is divisible by ``n`` and ``L(1/n)`` is
    even, unimodular and indefinite of rank 2, which forces ``U``.
    """
    if lat.rank != 2 or any(x % n for r in lat.gram for x in r):
        return False
    g = [[x // n for x in r] for r in lat.gram]
    return la.det(g) == -1 and all(g[i][i] % 2 == 0 for i in range(2))
