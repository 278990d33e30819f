"""Exact unstable A^1-degrees of pointed rational functions over Q and F_p."""

from .bezout import bezoutian_matrix, polynomial_degree_shape_check, unstable_degree
from .duplicant import (
    duplicant,
    duplicant_closed_form,
    newton_basis_verify,
    sigma_matrix,
)
from .errors import (
    A1DegError,
    DomainError,
    InternalError,
    NotPointed,
    NotReduced,
    UnsupportedPoint,
    UnsupportedVanishingLocus,
)
from .field import GF, QQ, REAL, Field, Place, Residue, hilbert_symbol
from .gw import (
    DiagonalForm,
    GramMatrix,
    UnstableClass,
    gram_to_class,
    gw_add,
    gw_equal,
    gw_generator,
    gw_neg,
    gw_zero,
    hyperbolic,
)
from .local_degree import local_degree, newton_matrix, simple_zero_degree
from .parse import parse_rational_function
from .poly import Polynomial, RationalFunction, RootDatum, normalize_pointed, rational_function
from .sums import DsumEntry, dsum_algebraic, naive_sum, verify_local_to_global

__version__ = "0.1.0"
