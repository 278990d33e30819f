"""Small exact dense-matrix kernels (lists of rows)."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import DomainError
from .field import Field, Residue

Matrix = list[list]


def zeros(n: int, m: int, field: Field) -> Matrix:
    z = field.zero
    return [[z] * m for _ in range(n)]


def identity(n: int, field: Field) -> Matrix:
    out = zeros(n, n, field)
    for i in range(n):
        out[i][i] = field.one
    return out


def transpose(a: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = 0
            for x, y in zip(row, col):
                if x and y:
                    acc = x * y + acc
            out_row.append(acc)
        out.append(out_row)
    return out


def is_symmetric(a: Sequence[Sequence]) -> bool:
    n = len(a)
    return all(len(row) == n for row in a) and all(
        a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n)
    )


def block_diagonal(blocks: Sequence[Sequence[Sequence]], field: Field) -> Matrix:
    n = sum(len(b) for b in blocks)
    out = zeros(n, n, field)
    k = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[k + i][k + j] = x
        k += len(b)
    return out


def bareiss_det_int(a: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    m = [list(row) for row in a]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def _det_mod_p(a: Sequence[Sequence[Residue]], p: int) -> Residue:
    m = [[x.value for x in row] for row in a]
    n = len(m)
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] % p), None)
        if piv is None:
            return Residue(0, p)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            det = -det
        det = det * m[k][k] % p
        inv = pow(m[k][k], -1, p)
        for i in range(k + 1, n):
            f = m[i][k] * inv % p
            if f:
                for j in range(k, n):
                    m[i][j] = (m[i][j] - f * m[k][j]) % p
    return Residue(det, p)


def determinant(a: Sequence[Sequence], field: Field):
    """Exact determinant: Bareiss over Z after clearing denominators (Q), plain
    Gaussian elimination (F_p)."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise DomainError("determinant of a non-square matrix")
    if n == 0:
        return field.one
    if not field.is_rational:
        return _det_mod_p(a, field.modulus)
    den = 1
    for row in a:
        for x in row:
            den = lcm(den, Fraction(x).denominator)
    ints = [[int(Fraction(x) * den) for x in row] for row in a]
    return Fraction(bareiss_det_int(ints), den**n)
