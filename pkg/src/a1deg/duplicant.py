"""The coefficient matrix Sigma(f) and the duplicant det(Sigma(f))^2.

Orientation: ``SigmaMatrix.entries[i][c]`` is the coefficient of x^i in
f / (x - r_l)^j, where column c runs over the pairs (l, j) root by root with
j = 1..e_l. With this orientation the monomial Bezoutian and the block sum of
local Newton matrices satisfy

    Bez^mon(f/g) = Sigma . (Nwt_{r_1} + ... + Nwt_{r_n}) . Sigma^T

exactly, which is checked by :func:`congruence_identity_holds`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .field import Field, FieldElement, field_of
from .linalg import block_diagonal, determinant, matmul, transpose
from .poly import Polynomial, RationalFunction, RootDatum, split_roots


def elementary_symmetric(m: int, values: Sequence) -> FieldElement:
    """sigma_{m,n}(values), with sigma_0 = 1 and zero outside 0..n."""
    n = len(values)
    if m < 0 or m > n:
        return 0
    e = [1] + [0] * m
    for v in values:
        for k in range(m, 0, -1):
            e[k] = e[k] + v * e[k - 1]
    return e[m]


def elementary_symmetric_all(values: Sequence) -> list:
    """[sigma_0, ..., sigma_n] of ``values`` in a single pass."""
    e = [1]
    for v in values:
        e = [a + v * b for a, b in zip(e + [0], [0] + e)]
    return e


def _check_distinct(roots: Sequence[RootDatum]) -> Field:
    if not roots:
        raise DomainError("need at least one root")
    field = field_of(roots[0].root)
    seen = set()
    for d in roots:
        if field_of(d.root) != field:
            raise DomainError("roots live in different fields")
        if d.root in seen:
            raise DomainError(f"repeated root {d.root}")
        seen.add(d.root)
    return field


@dataclass(frozen=True)
class SigmaMatrix:
    entries: tuple
    blocks: tuple
    roots: tuple

    @property
    def size(self) -> int:
        return len(self.entries)

    def block(self, ell: int) -> list[list]:
        """Sigma_ell as printed: one row per j = 1..e_ell, indexed by power."""
        start, stop = self.blocks[ell]
        return [[row[c] for row in self.entries] for c in range(start, stop)]

    def rows(self) -> list[list]:
        return [list(r) for r in self.entries]


def sigma_matrix(roots: Sequence[RootDatum]) -> SigmaMatrix:
    field = _check_distinct(roots)
    N = sum(d.multiplicity for d in roots)
    cols = []
    blocks = []
    for ell, d in enumerate(roots):
        start = len(cols)
        for j in range(1, d.multiplicity + 1):
            # the multiset r_{ell,j}: r_ell repeated e_ell - j times, others e times
            vals = []
            for k, other in enumerate(roots):
                times = other.multiplicity - j if k == ell else other.multiplicity
                vals.extend([other.root] * times)
            sig = elementary_symmetric_all(vals)
            col = []
            for i in range(N):
                m = N - i - j
                s = sig[m] if 0 <= m < len(sig) else 0
                col.append(field(s if m % 2 == 0 else -s))
            cols.append(col)
        blocks.append((start, len(cols)))
    entries = tuple(tuple(cols[c][i] for c in range(N)) for i in range(N))
    return SigmaMatrix(entries, tuple(blocks), tuple(roots))


def sigma_by_expansion(roots: Sequence[RootDatum]) -> list[list]:
    """Same matrix built by expanding f / (x - r_l)^j directly."""
    field = _check_distinct(roots)
    N = sum(d.multiplicity for d in roots)
    cols = []
    for ell, d in enumerate(roots):
        for j in range(1, d.multiplicity + 1):
            q = Polynomial.from_roots(
                [(o.root, o.multiplicity - j if k == ell else o.multiplicity) for k, o in enumerate(roots)],
                field,
            )
            cols.append([q[i] for i in range(N)])
    return [[cols[c][i] for c in range(N)] for i in range(N)]


def sigma_determinant(roots: Sequence[RootDatum]) -> FieldElement:
    S = sigma_matrix(roots)
    return determinant(S.entries, field_of(roots[0].root))


def duplicant(roots: Sequence[RootDatum], leading_coefficient=1) -> FieldElement:
    """c^(2N) det(Sigma)^2."""
    field = _check_distinct(roots)
    c = field(leading_coefficient)
    if not c:
        raise DomainError("leading coefficient must be nonzero")
    N = sum(d.multiplicity for d in roots)
    d = sigma_determinant(roots)
    return c ** (2 * N) * d * d


def root_difference_product(roots: Sequence[RootDatum]) -> FieldElement:
    """prod_{i<j} (r_i - r_j)^(e_i e_j)."""
    field = _check_distinct(roots)
    out = field.one
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            out = out * (roots[i].root - roots[j].root) ** (roots[i].multiplicity * roots[j].multiplicity)
    return out


def duplicant_closed_form(roots: Sequence[RootDatum], leading_coefficient=1) -> FieldElement:
    field = _check_distinct(roots)
    c = field(leading_coefficient)
    if not c:
        raise DomainError("leading coefficient must be nonzero")
    N = sum(d.multiplicity for d in roots)
    p = root_difference_product(roots)
    return c ** (2 * N) * p * p


def determinant_sign(roots: Sequence[RootDatum]) -> int:
    """+1 or -1 according to det Sigma = ±prod (r_i - r_j)^(e_i e_j)."""
    d, p = sigma_determinant(roots), root_difference_product(roots)
    if d == p:
        return 1
    if d == -p:
        return -1
    raise DomainError("det Sigma is not ± the root-difference product")  # pragma: no cover


def newton_basis_polynomials(F: RationalFunction) -> list[Polynomial]:
    """f/(x - r)^j for each root r and j = 1..e, in Sigma column order."""
    f = F.numerator
    out = []
    for d in split_roots(f):
        lin = Polynomial([-d.root, 1], f.field)
        for j in range(1, d.multiplicity + 1):
            out.append(f.exact_div(lin**j))
    return out


def newton_basis_verify(F: RationalFunction) -> bool:
    """Each column of Sigma(f) is the monomial coefficient vector of the
    matching Newton basis element f/(x - r)^j."""
    roots = split_roots(F.numerator)
    S = sigma_matrix(roots)
    N = S.size
    for c, q in enumerate(newton_basis_polynomials(F)):
        if [q[i] for i in range(N)] != [S.entries[i][c] for i in range(N)]:
            return False
    return True


def congruence_identity_holds(F: RationalFunction) -> bool:
    """Bez^mon(f/g) == Sigma . blockdiag(Nwt_r) . Sigma^T, entrywise."""
    from .bezout import bezoutian_matrix
    from .local_degree import newton_matrix

    roots = split_roots(F.numerator)
    S = sigma_matrix(roots).rows()
    blocks = [newton_matrix(F, d.root).rows() for d in roots]
    N = block_diagonal(blocks, F.field)
    rhs = matmul(matmul(S, N), transpose(S))
    lhs = bezoutian_matrix(F).rows()
    return all(F.field(a) == F.field(b) for ra, rb in zip(lhs, rhs) for a, b in zip(ra, rb))
