"""Independent reference computations used only by the tests.

Nothing here calls into the algorithms under test: Hilbert symbols come from
a p-adic solvability search, Legendre symbols from listing squares, and
symbolic quantities from sympy.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np
import sympy

X, Y = sympy.symbols("X Y")


def legendre_by_enumeration(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if a in {(t * t) % p for t in range(1, p)} else -1


def _val(n: int, p: int) -> int:
    if n == 0:
        return 10**9
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _val_array(a: np.ndarray, p: int, cap: int) -> np.ndarray:
    v = np.zeros(a.shape, dtype=np.int64)
    cur = a.copy()
    for _ in range(cap):
        hit = (cur % p == 0) & (v < cap)
        if not hit.any():
            break
        v[hit] += 1
        cur[hit] //= p
    return v


@lru_cache(maxsize=None)
def hilbert_by_search(a: int, b: int, p: int | None) -> int:
    """+1 iff z^2 = a x^2 + b y^2 has a nonzero solution over Q_p (or R).

    For a prime p we look for a primitive vector v mod p^k with
    Q(v) = 0 mod p^(2*delta + 1), delta = min_i v_p(dQ/dv_i); by Hensel such
    a v lifts, and the reduction of any genuine zero passes the test once
    k >= 2 * delta_max + 1. Integers a, b only.
    """
    if a == 0 or b == 0:
        raise ValueError("zero entry")
    coeffs = (1, -a, -b)  # Q(z, x, y) = z^2 - a x^2 - b y^2
    if p is None:
        return 1 if any(a * s + b * t > 0 for s, t in ((1, 0), (0, 1), (1, 1))) else -1
    dmax = _val(2, p) + max(_val(c, p) for c in coeffs)
    k = 2 * dmax + 1
    m = p**k
    grid = np.arange(m, dtype=np.int64)
    u, w = np.meshgrid(grid, grid, indexing="ij")
    u, w = u.ravel(), w.ravel()
    one = np.ones_like(u)
    # primitive vectors up to a unit: some coordinate equals 1
    for vec in ((one, u, w), (u, one, w), (u, w, one)):
        q = sum(c * (v * v) for c, v in zip(coeffs, vec)) % m
        delta = np.min(
            np.stack([_val_array((2 * c * v) % m, p, k) for c, v in zip(coeffs, vec)]),
            axis=0,
        )
        need = np.minimum(2 * delta + 1, k)
        qv = _val_array(q, p, k)
        if np.any((q == 0) | (qv >= need)):
            return 1
    return -1


def bezoutian_by_sympy(f_coeffs, g_coeffs) -> list[list[Fraction]]:
    """Coefficient matrix of (f(X)g(Y) - f(Y)g(X)) / (X - Y)."""
    f = lambda z: sum(sympy.Rational(str(c)) * z**i for i, c in enumerate(f_coeffs))
    g = lambda z: sum(sympy.Rational(str(c)) * z**i for i, c in enumerate(g_coeffs))
    quo = sympy.cancel((f(X) * g(Y) - f(Y) * g(X)) / (X - Y))
    n = len(f_coeffs) - 1
    P = sympy.Poly(sympy.expand(quo), X, Y)
    out = [[Fraction(0)] * n for _ in range(n)]
    for (i, j), c in P.terms():
        out[i][j] = Fraction(int(c.p), int(c.q))
    return out


def det_by_sympy(rows) -> Fraction:
    d = sympy.Matrix([[sympy.Rational(str(a)) for a in r] for r in rows]).det()
    return Fraction(int(d.p), int(d.q))


def laurent_by_sympy(f_coeffs, g_coeffs, r: Fraction, m: int) -> list[Fraction]:
    """[A_1, ..., A_m] from A_j = h^(m-j)(r) / (m-j)!, h = (x - r)^m g / f."""
    x = X
    rr = sympy.Rational(str(r))
    f = sum(sympy.Rational(str(c)) * x**i for i, c in enumerate(f_coeffs))
    g = sum(sympy.Rational(str(c)) * x**i for i, c in enumerate(g_coeffs))
    h = sympy.cancel((x - rr) ** m * g / f)
    out = []
    for j in range(1, m + 1):
        c = sympy.diff(h, x, m - j).subs(x, rr) / sympy.factorial(m - j)
        out.append(Fraction(int(c.p), int(c.q)))
    return out


def isometric_by_search(A, B, p: int) -> bool:
    """Exhaustive search for S over F_p with S^T diag(A) S = diag(B)."""
    n = len(A)
    if n != len(B):
        return False
    for flat in product(range(p), repeat=n * n):
        S = [flat[i * n : (i + 1) * n] for i in range(n)]
        ok = True
        for i in range(n):
            for j in range(n):
                v = sum(S[k][i] * A[k] * S[k][j] for k in range(n)) % p
                if v != (B[i] % p if i == j else 0):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False
