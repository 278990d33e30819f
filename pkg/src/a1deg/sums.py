"""Naive sums, the algebraic D-sum, and the local-to-global verifier."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bezout import unstable_degree
from .duplicant import congruence_identity_holds
from .errors import DomainError, InternalError
from .field import FieldElement
from .gw import DiagonalForm, UnstableClass, gw_equal
from .local_degree import LocalDegreeReport, local_degree
from .poly import Polynomial, RationalFunction, bezout_pair, normalize_pointed, split_roots


def naive_sum(F1: RationalFunction, F2: RationalFunction) -> RationalFunction:
    """f3/g3 from [[f1, -v1], [g1, u1]] . [[f2, -v2], [g2, u2]]."""
    if F1.field != F2.field:
        raise DomainError(f"field mismatch: {F1.field} vs {F2.field}")
    u1, v1 = bezout_pair(F1)
    u2, v2 = bezout_pair(F2)
    f1, g1, f2, g2 = F1.numerator, F1.denominator, F2.numerator, F2.denominator
    f3 = f1 * f2 - v1 * g2
    g3 = g1 * f2 + u1 * g2
    F3 = normalize_pointed(f3, g3)
    if F3.degree != F1.degree + F2.degree:
        raise InternalError(f"naive sum has degree {F3.degree}, expected {F1.degree + F2.degree}")
    return F3


def naive_sum_matrix(F1: RationalFunction, F2: RationalFunction) -> list[list[Polynomial]]:
    """The full 2x2 product, for callers that want u3 and v3 as well."""
    u1, v1 = bezout_pair(F1)
    u2, v2 = bezout_pair(F2)
    A = [[F1.numerator, -v1], [F1.denominator, u1]]
    B = [[F2.numerator, -v2], [F2.denominator, u2]]
    return [[A[i][0] * B[0][j] + A[i][1] * B[1][j] for j in range(2)] for i in range(2)]


@dataclass(frozen=True)
class DsumEntry:
    degree: UnstableClass
    point: FieldElement


def dsum_algebraic(entries: Sequence[DsumEntry]) -> UnstableClass:
    """(+ beta_i, prod d_i * prod_{i<j} (r_i - r_j)^(2 m_i m_j)), m_i = rank beta_i."""
    if not entries:
        raise DomainError("D-sum of an empty configuration")
    field = entries[0].degree.field
    points = [field(e.point) for e in entries]
    if len(set(points)) != len(points):
        raise DomainError("points of D must be pairwise distinct")
    pos, neg, support = (), (), frozenset()
    unit = field.one
    for e in entries:
        if e.degree.field != field:
            raise DomainError("D-sum entries live in different fields")
        pos += e.degree.form.positive
        neg += e.degree.form.negative
        support |= e.degree.form.support
        unit = unit * e.degree.unit
    for i in range(len(entries)):
        for j in range(i + 1, len(entries)):
            exponent = 2 * entries[i].degree.rank * entries[j].degree.rank
            unit = unit * (points[i] - points[j]) ** exponent
    return UnstableClass(DiagonalForm(pos, neg, field, support), unit)


@dataclass(frozen=True)
class LtgReport:
    function: RationalFunction
    global_degree: UnstableClass
    local_reports: tuple
    dsum_degree: UnstableClass
    classes_equal: bool
    matrix_identity_holds: bool

    @property
    def ok(self) -> bool:
        return self.classes_equal and self.matrix_identity_holds


def local_degrees(F: RationalFunction) -> list[LocalDegreeReport]:
    """Local degrees at every root; the numerator must split over k."""
    return [local_degree(F, d.root) for d in split_roots(F.numerator)]


def verify_local_to_global(F: RationalFunction) -> LtgReport:
    locals_ = local_degrees(F)
    glob = unstable_degree(F)
    dsum = dsum_algebraic([DsumEntry(rep.degree, rep.root) for rep in locals_])
    equal = gw_equal(glob, dsum)
    matrix_ok = congruence_identity_holds(F)
    return LtgReport(F, glob, tuple(locals_), dsum, equal, matrix_ok)
