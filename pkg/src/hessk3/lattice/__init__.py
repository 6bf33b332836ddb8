"""Even integral lattices, discriminant forms and rank-two classification."""

from .binary import enumerate_even_binary, reduce_even_binary, slh_embed
from .core import (
    EmbeddedSublattice,
    Lattice,
    LatticeError,
    make_lattice,
    orthogonal_complement,
    perp_within,
    saturate,
    span_sublattice,
    sublattice_index,
)
from .discriminant import (
    DiscriminantForm,
    disc_forms_isomorphic,
    disc_forms_opposite,
    discriminant_data,
    discriminant_form,
    even_overlattices,
)

__all__ = [
    "DiscriminantForm",
    "EmbeddedSublattice",
    "Lattice",
    "LatticeError",
    "disc_forms_isomorphic",
    "disc_forms_opposite",
    "discriminant_data",
    "discriminant_form",
    "enumerate_even_binary",
    "even_overlattices",
    "make_lattice",
    "orthogonal_complement",
    "perp_within",
    "reduce_even_binary",
    "saturate",
    "slh_embed",
    "span_sublattice",
    "sublattice_index",
]
