"""Bezoutians and the global unstable degree."""

from __future__ import annotations

from .errors import DomainError, InternalError
from .gw import GramMatrix, UnstableClass, gram_to_class
from .poly import Polynomial, RationalFunction, normalize_pointed


def bezoutian_coefficients(f: Polynomial, g: Polynomial) -> list[list]:
    """Coefficients a_ij of (f(X)g(Y) - f(Y)g(X)) / (X - Y) = sum a_ij X^i Y^j.

    The numerator is stored as a polynomial in X whose coefficients are
    polynomials in Y; synthetic division by X - Y runs from the top X-degree
    down, and the remainder (the numerator at X = Y) must vanish.
    """
    field = f.field
    zero = field.zero
    n = max(f.degree, g.degree)
    # P[i][j]: coefficient of X^i Y^j
    P = [[zero] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        fi, gi = f[i], g[i]
        if not fi and not gi:
            continue
        for j in range(n + 1):
            P[i][j] = fi * g[j] - f[j] * gi
    # Q_{i-1}(Y) = P_i(Y) + Y * Q_i(Y)
    Q = [None] * n
    carry = [zero] * (n + 1)
    for i in range(n, 0, -1):
        cur = [P[i][j] + (carry[j - 1] if j else zero) for j in range(n + 1)]
        Q[i - 1] = cur
        carry = cur
    remainder = [P[0][j] + (carry[j - 1] if j else zero) for j in range(n + 1)]
    if any(remainder):
        raise InternalError("Bezoutian division by X - Y left a remainder")
    for row in Q:
        if row[n]:
            raise InternalError("Bezoutian has Y-degree >= n")
    return [row[:n] for row in Q]


def bezoutian_matrix(F: RationalFunction) -> GramMatrix:
    """Bez^mon(f/g) for the monic-normalized representative."""
    a = bezoutian_coefficients(F.numerator, F.denominator)
    return GramMatrix(tuple(tuple(r) for r in a), F.field)


def unstable_degree(F: RationalFunction) -> UnstableClass:
    """deg^u(f/g) = (Bez^mon, det Bez^mon)."""
    F = normalize_pointed(F.numerator, F.denominator)
    try:
        M = bezoutian_matrix(F)
    except DomainError as exc:  # singular Bezoutian
        raise InternalError(f"Bezoutian of reduced pointed {F} is degenerate") from exc
    cls = gram_to_class(M)
    if cls.rank != F.degree:
        raise InternalError("rank of deg^u differs from the degree")  # pragma: no cover
    return cls


def polynomial_degree_shape_check(F: RationalFunction) -> bool:
    """For a polynomial map c^-1 * f, check that Bez^mon is anti-triangular
    (zero strictly below the anti-diagonal) with constant anti-diagonal equal
    to the inverse of the original leading coefficient."""
    if not F.denominator.is_constant():
        raise DomainError("shape check applies only to polynomial maps")
    M = bezoutian_matrix(F).entries
    n = len(M)
    # f/c normalizes to (f/a_n)/(c/a_n); for c = 1 this constant is 1/a_n
    target = F.denominator[0]
    for i in range(n):
        for j in range(n):
            if i + j == n - 1 and M[i][j] != target:
                return False
            if i + j > n - 1 and M[i][j]:
                return False
    return True
