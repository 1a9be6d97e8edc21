"""Finitary incidence algebras of finite posets over exact fields."""

from .errors import *  # noqa: F401,F403
from .field import GF, QQ, FieldScalar, parse_field
from .poset import (
    IsoWitness, Poset, Segment, antichain, boolean_lattice, build_poset, chain, diamond,
    disjoint_union, enumerate_posets, order_product, order_sum, point, poset_isomorphism,
)
from .series import (
    Series, c_alpha, commutator, convolve, delta, delta_x, diagonal_part, extend_by_zero,
    invert, is_invertible, is_radical, mobius, power, restrict, scale, unit, zero, zeta,
)
from .structure import (
    RegularFactorization, conjugate_to_diagonal, debug_identities, is_idempotent,
    is_primitive_idempotent, is_regular, is_reflexive_inverse, is_superregular,
    reflexive_inverse, regular_factorization, regular_witness, restrict_to_component,
)
from .isomorphism import (
    AlgebraIso, conjugation_iso, identity_iso, induced_iso, order_test_product,
    recover_poset_map,
)

__version__ = "0.1.0"
