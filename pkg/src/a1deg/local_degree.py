"""Unstable local degrees at rational zeros via local Newton matrices."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, UnsupportedPoint
from .field import FieldElement
from .gw import GramMatrix, UnstableClass, gram_to_class, gw_generator
from .poly import (
    Polynomial,
    PrincipalPart,
    RationalFunction,
    laurent_principal_part,
    multiplicity,
)


@dataclass(frozen=True)
class LocalDegreeReport:
    root: FieldElement
    multiplicity: int
    newton_matrix: GramMatrix
    principal_part: PrincipalPart
    degree: UnstableClass


def _rational_point(F: RationalFunction, r) -> FieldElement:
    if isinstance(r, Polynomial):
        if r.degree != 1:
            raise UnsupportedPoint(f"closed point with minimal polynomial {r} is not k-rational")
        r = -r.monic()[0]
    return F.field(r)


def newton_matrix(F: RationalFunction, r) -> GramMatrix:
    """Anti-triangular Hankel matrix with entry (i, j) = A_{r,i+j+1}."""
    r = _rational_point(F, r)
    pp = laurent_principal_part(F, r)
    m = pp.order
    zero = F.field.zero
    rows = tuple(
        tuple(pp.A(i + j + 1) if i + j + 1 <= m else zero for j in range(m)) for i in range(m)
    )
    return GramMatrix(rows, F.field)


def local_degree(F: RationalFunction, r) -> LocalDegreeReport:
    r = _rational_point(F, r)
    pp = laurent_principal_part(F, r)
    M = newton_matrix(F, r)
    cls = gram_to_class(M)
    return LocalDegreeReport(r, pp.order, M, pp, cls)


def higher_residue(F: RationalFunction, r, m: int) -> FieldElement:
    """Coefficient of (x - r)^-m in the Laurent expansion of g/f at r."""
    r = _rational_point(F, r)
    if m < 1:
        raise DomainError("higher residue order must be positive")
    pp = laurent_principal_part(F, r)
    if m > pp.order:
        raise DomainError(f"order {m} exceeds the multiplicity {pp.order} of {r}")
    return pp.A(m)


def simple_zero_degree(F: RationalFunction, r) -> UnstableClass:
    """<((f/g)'(r))^-1>^u at a simple zero r."""
    r = _rational_point(F, r)
    f, g = F.numerator, F.denominator
    m = multiplicity(f, r)
    if m == 0:
        raise DomainError(f"{r} is not a root of {f}")
    if m > 1:
        raise DomainError(f"{r} is a zero of multiplicity {m}, not a simple zero")
    # quotient rule with f(r) = 0
    deriv = f.derivative()(r) / g(r)
    return gw_generator(1 / deriv)
