"""The unstable Grothendieck-Witt group GW^u(k) = GW(k) x_{k*/k*^2} k*.

A class is a virtual diagonal form together with an exact unit whose square
class is the discriminant of the form. Equality of stable parts is decided by
Witt cancellation plus the classical invariants: rank and discriminant over
F_p; additionally signature and Hasse invariants over Q.

Over Q every form carries a *prime support*: a set of odd primes outside of
which the form is known to admit a unimodular p-adic lattice, so that its
Hasse invariant is trivial there. For diagonal forms built from explicit
entries this is the set of odd primes dividing the entries. For forms coming
from a Gram matrix it is the (usually far smaller) set of odd primes dividing
the entry denominators or the determinant, which avoids factoring the large
pivots produced by elimination.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import lcm, prod
from typing import Iterable, Sequence

from .errors import DomainError
from .field import (
    QQ,
    REAL,
    Field,
    FieldElement,
    Place,
    factorize,
    field_of,
    hilbert_symbol,
    is_square,
    prime_support,
    square_class_reduce,
)
from .linalg import determinant, is_symmetric


def _product(entries: Iterable, field: Field) -> FieldElement:
    return prod(entries, start=field.one)


@dataclass(frozen=True)
class DiagonalForm:
    """The virtual form <p_1,...,p_a> - <n_1,...,n_b>."""

    positive: tuple
    negative: tuple = ()
    field: Field = QQ
    support: frozenset = dc_field(default=None, compare=False)

    def __post_init__(self):
        for a in self.positive + self.negative:
            if not a:
                raise DomainError("diagonal entries must be nonzero")
            if not self.field.contains(a):
                raise DomainError(f"entry {a!r} does not belong to {self.field}")
        if self.support is None:
            sup = frozenset()
            if self.field.is_rational:
                sup = frozenset().union(*(prime_support(a) for a in self.positive + self.negative))
            object.__setattr__(self, "support", sup)

    @property
    def rank(self) -> int:
        return len(self.positive) - len(self.negative)

    @property
    def is_genuine(self) -> bool:
        return not self.negative

    def determinant(self) -> FieldElement:
        """prod(positive) / prod(negative), exact (not a square class)."""
        return _product(self.positive, self.field) / _product(self.negative, self.field)

    def signature(self) -> int:
        if not self.field.is_rational:
            raise DomainError("signature is only defined over Q")

        def sig(entries):
            return sum(1 if a > 0 else -1 for a in entries)

        return sig(self.positive) - sig(self.negative)

    def __add__(self, other: DiagonalForm) -> DiagonalForm:
        _same_field(self.field, other.field)
        return DiagonalForm(
            self.positive + other.positive,
            self.negative + other.negative,
            self.field,
            self.support | other.support,
        )

    def __neg__(self) -> DiagonalForm:
        return DiagonalForm(self.negative, self.positive, self.field, self.support)


def _same_field(a: Field, b: Field) -> None:
    if a != b:
        raise DomainError(f"field mismatch: {a} vs {b}")


@dataclass(frozen=True)
class UnstableClass:
    """An element (form, unit) of GW^u(k)."""

    form: DiagonalForm
    unit: FieldElement

    def __post_init__(self):
        if not self.unit:
            raise DomainError("unit must be nonzero")
        if not self.form.field.contains(self.unit):
            raise DomainError(f"unit {self.unit!r} does not belong to {self.form.field}")
        if not is_square(self.unit / self.form.determinant()):
            raise DomainError(
                f"unit {self.unit} is not in the discriminant square class of the form"
            )

    @property
    def field(self) -> Field:
        return self.form.field

    @property
    def rank(self) -> int:
        return self.form.rank

    def discriminant(self) -> FieldElement:
        """Canonical square-class representative (read off the unit)."""
        return square_class_reduce(self.unit)

    def signature(self) -> int:
        return self.form.signature()

    def __add__(self, other: UnstableClass) -> UnstableClass:
        return gw_add(self, other)

    def __neg__(self) -> UnstableClass:
        return gw_neg(self)

    def __sub__(self, other: UnstableClass) -> UnstableClass:
        return gw_add(self, gw_neg(other))

    def __str__(self):
        pos = ", ".join(str(a) for a in self.form.positive)
        s = f"<{pos}>"
        if self.form.negative:
            s += " - <" + ", ".join(str(a) for a in self.form.negative) + ">"
        return f"({s}, {self.unit})"


def gw_generator(a: FieldElement) -> UnstableClass:
    """<a>^u = (<a>, a)."""
    if not a:
        raise DomainError("<0> is not a generator")
    k = field_of(a)
    a = k(a)
    return UnstableClass(DiagonalForm((a,), (), k), a)


def gw_zero(field: Field = QQ) -> UnstableClass:
    return UnstableClass(DiagonalForm((), (), field), field.one)


def gw_add(u1: UnstableClass, u2: UnstableClass) -> UnstableClass:
    _same_field(u1.field, u2.field)
    return UnstableClass(u1.form + u2.form, u1.unit * u2.unit)


def gw_neg(u: UnstableClass) -> UnstableClass:
    return UnstableClass(-u.form, 1 / u.unit)


def gw_sum(classes: Sequence[UnstableClass], field: Field = QQ) -> UnstableClass:
    out = gw_zero(classes[0].field if classes else field)
    for c in classes:
        out = gw_add(out, c)
    return out


def hyperbolic(field: Field = QQ) -> UnstableClass:
    """H^u = <1>^u + <-1>^u, with unit -1."""
    return gw_add(gw_generator(field(1)), gw_generator(field(-1)))


# ----------------------------------------------------------------------------
# Invariants and equality


def hasse_invariant(form: DiagonalForm, v: Place) -> int:
    """prod_{i<j} (a_i, a_j)_v over the diagonal entries of a genuine form."""
    if not form.field.is_rational:
        raise DomainError("Hasse invariants are computed over Q only")
    if not form.is_genuine:
        raise DomainError("Hasse invariant of a virtual form; cancel first")
    a = form.positive
    s = 1
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            s *= hilbert_symbol(a[i], a[j], v)
    return s


def forms_isometric(A: DiagonalForm, B: DiagonalForm) -> bool:
    """Isometry of genuine forms by rank, discriminant, and (over Q)
    signature and Hasse invariants at every relevant place."""
    _same_field(A.field, B.field)
    if len(A.positive) != len(B.positive):
        return False
    if not A.positive:
        return True
    if not is_square(A.determinant() / B.determinant()):
        return False
    if not A.field.is_rational:
        return True
    if A.signature() != B.signature():
        return False
    places = [REAL, Place(2)] + [Place(p) for p in sorted(A.support | B.support)]
    return all(hasse_invariant(A, v) == hasse_invariant(B, v) for v in places)


def gw_equal(u1: UnstableClass, u2: UnstableClass) -> bool:
    _same_field(u1.field, u2.field)
    if u1.unit != u2.unit:
        return False
    # Witt cancellation: pos1 - neg1 = pos2 - neg2  <=>  pos1 + neg2 = pos2 + neg1
    A = DiagonalForm(u1.form.positive + u2.form.negative, (), u1.field, u1.form.support | u2.form.support)
    B = DiagonalForm(u2.form.positive + u1.form.negative, (), u1.field, A.support)
    return forms_isometric(A, B)


def stable_equal(u1: UnstableClass, u2: UnstableClass) -> bool:
    """Equality of the GW(k) components only."""
    _same_field(u1.field, u2.field)
    A = DiagonalForm(u1.form.positive + u2.form.negative, (), u1.field, u1.form.support | u2.form.support)
    B = DiagonalForm(u2.form.positive + u1.form.negative, (), u1.field, A.support)
    return forms_isometric(A, B)


# ----------------------------------------------------------------------------
# Gram matrices


@dataclass(frozen=True)
class GramMatrix:
    """A symmetric nondegenerate matrix; ``det`` is computed at construction."""

    entries: tuple
    field: Field = QQ
    det: FieldElement = dc_field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(self.field(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if not is_symmetric(rows):
            raise DomainError("Gram matrix must be square and symmetric")
        d = determinant(rows, self.field)
        if not d:
            raise DomainError("Gram matrix is singular")
        object.__setattr__(self, "det", d)

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def rows(self) -> list[list]:
        return [list(r) for r in self.entries]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def _gram_support(M: GramMatrix) -> frozenset:
    if not M.field.is_rational:
        return frozenset()
    den = 1
    for row in M.entries:
        for x in row:
            den = lcm(den, x.denominator)
    primes = {p for p, _ in factorize(den)} | set(prime_support(M.det))
    primes.discard(2)
    return frozenset(primes)


def diagonalize(M: GramMatrix) -> list:
    """Diagonal entries of a symmetric congruence-diagonalization of M."""
    a = M.rows()
    n = len(a)
    diag = []
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][i]), None)
        if piv is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j]), None)
            if pair is None:
                raise DomainError("matrix is singular")
            i, j = pair
            # row_i += row_j, col_i += col_j
            for c in range(k, n):
                a[i][c] = a[i][c] + a[j][c]
            for r in range(k, n):
                a[r][i] = a[r][i] + a[r][j]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for row in a:
                row[k], row[piv] = row[piv], row[k]
        d = a[k][k]
        diag.append(d)
        inv = 1 / d
        for r in range(k + 1, n):
            f = a[r][k]
            if not f:
                continue
            f = f * inv
            row_r, row_k = a[r], a[k]
            for c in range(k + 1, n):
                if row_k[c]:
                    row_r[c] = row_r[c] - f * row_k[c]
            # the matching column operation only clears column k
            row_r[k] = M.field.zero
        for r in range(k + 1, n):
            a[k][r] = M.field.zero
    return diag


def gram_to_class(M: GramMatrix | Sequence[Sequence], field: Field | None = None) -> UnstableClass:
    """(form of M, det M) as an element of GW^u(k)."""
    if not isinstance(M, GramMatrix):
        if field is None:
            field = field_of(M[0][0]) if M and M[0] else QQ
        M = GramMatrix(tuple(tuple(r) for r in M), field)
    diag = diagonalize(M)
    form = DiagonalForm(tuple(diag), (), M.field, _gram_support(M))
    return UnstableClass(form, M.det)
