"""Exact ideal decompositions in polynomial rings, rings of multiples of g,
and integer matrix classes."""

from .groebner import GroebnerBasis, buchberger, eliminate, normal_form
from .ideal_ops import (
    DecompositionClaim,
    Ideal,
    equal,
    ideal_sum,
    intersect,
    is_coprime,
    is_relatively_prime,
    product,
    quotient,
    radical_member,
    verify_decomposition,
)
from .monomial_decomp import MonomialIdeal, decompose
from .poly_ring import GREVLEX, LEX, Polynomial, RingContext, block_order, parse_polynomial

__version__ = "0.1.0"
