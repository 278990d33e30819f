"""Seeded random instances for the verification suites.

Rational scalars have numerator and denominator in [-9, 9]; F_p scalars are
uniform residues.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import DomainError
from .field import Field, FieldElement
from .poly import Polynomial, RationalFunction, RootDatum, gcd, normalize_pointed

HEIGHT = 9


def random_scalar(field: Field, rng: random.Random, nonzero: bool = False) -> FieldElement:
    while True:
        if field.is_rational:
            a = Fraction(rng.randint(-HEIGHT, HEIGHT), rng.randint(1, HEIGHT))
        else:
            a = field(rng.randrange(field.modulus))
        if a or not nonzero:
            return a


def random_distinct(field: Field, rng: random.Random, k: int) -> list:
    if not field.is_rational and k > field.modulus:
        raise DomainError(f"{field} has fewer than {k} elements")
    out: list = []
    while len(out) < k:
        a = random_scalar(field, rng)
        if a not in out:
            out.append(a)
    return out


def random_roots(
    field: Field, rng: random.Random, max_roots: int = 5, max_multiplicity: int = 3
) -> list[RootDatum]:
    limit = max_roots if field.is_rational else min(max_roots, field.modulus)
    k = rng.randint(1, limit)
    return [RootDatum(r, rng.randint(1, max_multiplicity)) for r in random_distinct(field, rng, k)]


def random_polynomial(field: Field, rng: random.Random, degree: int) -> Polynomial:
    coeffs = [random_scalar(field, rng) for _ in range(degree)]
    coeffs.append(random_scalar(field, rng, nonzero=True))
    return Polynomial(coeffs, field)


def random_split_function(
    field: Field, rng: random.Random, max_degree: int = 8, max_roots: int = 4
) -> RationalFunction:
    """Monic split numerator with random coprime denominator of lower degree."""
    limit = max_roots if field.is_rational else min(max_roots, field.modulus)
    k = rng.randint(1, min(limit, max_degree))
    roots = random_distinct(field, rng, k)
    mults = [1] * k
    for _ in range(rng.randint(0, max_degree - k)):
        mults[rng.randrange(k)] += 1
    f = Polynomial.from_roots(list(zip(roots, mults)), field)
    while True:
        g = random_polynomial(field, rng, rng.randint(0, f.degree - 1))
        if all(g(r) for r in roots):
            return normalize_pointed(f, g)


def random_rational_function(
    field: Field, rng: random.Random, max_degree: int = 5
) -> RationalFunction:
    """A pointed reduced f/g, not necessarily split."""
    while True:
        f = random_polynomial(field, rng, rng.randint(1, max_degree))
        g = random_polynomial(field, rng, rng.randint(0, f.degree - 1))
        if gcd(f, g).degree == 0:
            return normalize_pointed(f, g)


SEED_LIMIT = 2**64


def instance_rng(seed: int, index: int) -> random.Random:
    """Independent stream for instance ``index`` of a seeded suite.

    Instances never share a generator, so a suite gives the same instances
    whether it runs serially or on a worker pool.
    """
    if not 0 <= seed < SEED_LIMIT:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return random.Random(seed * 2**32 + index)
