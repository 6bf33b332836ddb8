"""Explicit vectors and E8 diagrams used by the reproductions."""

from __future__ import annotations

import re

from .curves import Configuration

E8_CHAINS = {
    "clebsch": [
        "N034-N04-N024-C024-C124-C041-N23 | N24",
        "N12-N012-N01-C234-C142-C143-N134 | N013",
    ],
    "cayley": [
        "N012-N02-N024-N24-N234-N34-N134 | N04",
        "N013-N03-L03-M3-L23-M2-L12 | M0",
    ],
    "x3n4": [
        "N23-N123-N13-N013-N01-L01-M0 | N134",
        "N124-N24-N024-N04-N034-L12-M2 | N02",
    ],
    # square graph: corners V0..V3, edge points V4..V15, pendants V16..V19
    "ns2_square": [
        "V14-V15-V0-V4-V5-V6-V1 | V16",
        "V8-V9-V2-V10-V11-V12-V3 | V18",
    ],
}

_U_COMMON = (
    "-2N134 -5N124 -N123 +4N034 +5N024 +N023 +7N014 +6N013 +8N012 +13N01"
    " +2N02 +8N04 +N12 -N13 +5C234 -3C134"
)

# hyperbolic plane inside the rank 4 residual of the Clebsch lattice
CLEBSCH_U = [
    _U_COMMON + " -4C124 +C032",
    _U_COMMON + " +4C124",
]

# basis of the complement of that plane, a copy of T10(-1)
CLEBSCH_T10 = [
    "2N124 +2N123 -5N034 -2N024 -2N023 -N014 +2N012 +N01 -3N03 -4N04 +3N12"
    " +2N13 -3N34 +C234 +C134 -C032",
    "-4N134 -9N124 -4N123 +8N034 +9N024 +4N023 +11N014 +9N013 +11N012 +19N01"
    " +4N02 +2N03 +14N04 -N12 -3N13 +7C234 -5C134 -6C124 +2C032",
]

# A4(-2) inside T_gen: c01, c12, c23, c34, and the complement basis t1, t2
A4_VECTORS = {
    "c01": (0, 0, 0, 0, 0, 1),
    "c12": (0, 0, 0, -2, 1, 0),
    "c23": (0, 0, 1, 2, -2, -1),
    "c34": (4, -2, -3, -5, 4, 2),
}
A4_COMPLEMENT = {"t1": (2, 1, 0, 0, 0, 0), "t2": (5, -2, -3, -6, 4, 2)}
A4_GLUE = (6, -2, -3, -6, 4, 2)

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*([NCMLV]\d+)")


def parse_combination(text: str) -> dict[str, int]:
    """``"-2N134 +C032"`` -> ``{"N134": -2, "C032": 1}``."""
    out: dict[str, int] = {}
    pos = 0
    text = text.replace(" ", "")
    for m in _TERM.finditer(text):
        if m.start() != pos:
            raise ValueError(f"cannot parse {text[pos:m.start()]!r}")
        pos = m.end()
        k = int(m[2] or 1) * (-1 if m[1] == "-" else 1)
        out[m[3]] = out.get(m[3], 0) + k
    if pos != len(text):
        raise ValueError(f"cannot parse {text[pos:]!r}")
    return out


def combination_vector(config: Configuration, text: str) -> list[int]:
    return config.vector(parse_combination(text))
