"""Exact scalars over Q and F_p, square classes, and local symbols.

Rational scalars are plain :class:`fractions.Fraction` values; residues mod an
odd prime are :class:`Residue` instances that carry their modulus, so that
arithmetic across different fields fails loudly instead of silently coercing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import gmpy2
import sympy

from .errors import DomainError, InternalError

TRIAL_DIVISION_LIMIT = 10**6


class Residue:
    """An element of F_p, stored as its least nonnegative representative."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.p != self.p:
                raise DomainError(f"cannot mix F_{self.p} and F_{other.p}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        raise DomainError(f"cannot combine F_{self.p} element with {type(other).__name__}")

    def __add__(self, other):
        return Residue(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.value - self._coerce(other), self.p)

    def __rsub__(self, other):
        return Residue(self._coerce(other) - self.value, self.p)

    def __mul__(self, other):
        return Residue(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.p)

    def inverse(self) -> Residue:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * Residue(self._coerce(other), self.p).inverse()

    def __rtruediv__(self, other):
        return Residue(self._coerce(other), self.p) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return Residue(pow(self.value, exponent, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


FieldElement = Union[Fraction, Residue]


@dataclass(frozen=True)
class Field:
    """The base field: Q when ``modulus`` is None, otherwise F_modulus."""

    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is None:
            return
        p = self.modulus
        if p == 2:
            raise DomainError("characteristic 2 is not supported")
        if p < 2 or not gmpy2.is_prime(p):
            raise DomainError(f"modulus {p} is not an odd prime")

    @classmethod
    def parse(cls, text: str) -> Field:
        """Accept ``Q`` or ``Fp:<prime>`` (``F<prime>`` also works)."""
        t = text.strip()
        if t.upper() in ("Q", "QQ"):
            return cls()
        for prefix in ("Fp:", "FP:", "fp:", "F_", "F"):
            if t.startswith(prefix) and t[len(prefix):].isdigit():
                return cls(int(t[len(prefix):]))
        raise DomainError(f"unknown field {text!r}; expected 'Q' or 'Fp:<prime>'")

    @property
    def is_rational(self) -> bool:
        return self.modulus is None

    def __call__(self, value) -> FieldElement:
        if self.modulus is None:
            if isinstance(value, Residue):
                raise DomainError("cannot move an F_p element into Q")
            if isinstance(value, str):
                return Fraction(value.strip())
            return Fraction(value)
        if isinstance(value, Residue):
            if value.p != self.modulus:
                raise DomainError(f"cannot move F_{value.p} element into {self}")
            return value
        q = Fraction(value) if not isinstance(value, str) else Fraction(value.strip())
        if q.denominator % self.modulus == 0:
            raise DomainError(f"{q} has no image in {self}")
        return Residue(q.numerator, self.modulus) * pow(q.denominator, -1, self.modulus)

    @property
    def zero(self) -> FieldElement:
        return self(0)

    @property
    def one(self) -> FieldElement:
        return self(1)

    def contains(self, a) -> bool:
        if self.modulus is None:
            return isinstance(a, Fraction)
        return isinstance(a, Residue) and a.p == self.modulus

    def elements(self):
        """Every element of a finite field, in ascending residue order."""
        if self.modulus is None:
            raise DomainError("Q is infinite")
        return [Residue(i, self.modulus) for i in range(self.modulus)]

    def __str__(self):
        return "Q" if self.modulus is None else f"Fp:{self.modulus}"


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


def field_of(a) -> Field:
    if isinstance(a, Residue):
        return Field(a.p)
    if isinstance(a, (Fraction, int)):
        return QQ
    raise DomainError(f"{a!r} is not a field element")


def format_scalar(a) -> str:
    """Exact string form: ``p/q`` (or ``p``) over Q, the residue over F_p."""
    return str(a)


# ----------------------------------------------------------------------------
# Integer factoring for square classes and prime supports


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    n = TRIAL_DIVISION_LIMIT
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return tuple(i for i in range(n + 1) if sieve[i])


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of |n| as sorted (prime, exponent) pairs.

    Trial division up to 10**6, then a probable-prime / perfect-power check on
    the cofactor, then Pollard rho / ECM. Cofactors that resist all of these
    are rejected.
    """
    n = abs(int(n))
    if n == 0:
        raise DomainError("cannot factor 0")
    out: dict[int, int] = {}
    if n > 1 and not gmpy2.is_prime(n):
        for p in _small_primes():
            if p * p > n:
                break
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out[p] = e
                if n == 1 or gmpy2.is_prime(n):
                    break
    if n > 1:
        if n <= TRIAL_DIVISION_LIMIT**2 or gmpy2.is_prime(n):
            out[n] = out.get(n, 0) + 1
        else:
            for p, e in _factor_large(n).items():
                out[p] = out.get(p, 0) + e
    return tuple(sorted(out.items()))


def _factor_large(n: int) -> dict[int, int]:
    for k in range(2, n.bit_length() + 1):
        root, exact = gmpy2.iroot(n, k)
        if exact and gmpy2.is_prime(root):
            return {int(root): k}
        if root < 2:
            break
    found = sympy.factorint(n)
    if any(not gmpy2.is_prime(p) for p in found):
        raise DomainError(f"cannot certify the factorization of {n}")  # pragma: no cover
    return {int(p): e for p, e in found.items()}


def squarefree_part(n: int) -> int:
    """Squarefree integer with the sign of n in the class n*(Q^x)^2."""
    if n == 0:
        raise DomainError("0 has no square class")
    s = 1
    for p, e in factorize(n):
        if e % 2:
            s *= p
    return s if n > 0 else -s


def _integer_rep(a: Fraction) -> int:
    """An integer in the same square class as a (num * den)."""
    return a.numerator * a.denominator


def legendre_symbol(a: int, p: int) -> int:
    if p <= 2 or not gmpy2.is_prime(p):
        raise DomainError(f"{p} is not an odd prime")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@lru_cache(maxsize=None)
def least_nonresidue(p: int) -> int:
    for a in range(2, p):
        if legendre_symbol(a, p) == -1:
            return a
    raise InternalError(f"no nonresidue mod {p}")  # pragma: no cover


def _require_nonzero(a) -> None:
    if not a:
        raise DomainError("expected a nonzero field element")


def is_square(a: FieldElement) -> bool:
    _require_nonzero(a)
    if isinstance(a, Residue):
        return legendre_symbol(a.value, a.p) == 1
    a = Fraction(a)
    if a < 0:
        return False
    return gmpy2.is_square(a.numerator) and gmpy2.is_square(a.denominator)


def square_class_reduce(a: FieldElement) -> FieldElement:
    """Canonical representative of a*(k^x)^2.

    Over Q the squarefree integer with the sign of a; over F_p either 1 or the
    least quadratic nonresidue.
    """
    _require_nonzero(a)
    if isinstance(a, Residue):
        return Residue(1 if is_square(a) else least_nonresidue(a.p), a.p)
    return Fraction(squarefree_part(_integer_rep(Fraction(a))))


def same_square_class(a: FieldElement, b: FieldElement) -> bool:
    _require_nonzero(a)
    _require_nonzero(b)
    return is_square(a / b)


# ----------------------------------------------------------------------------
# Places of Q and Hilbert symbols


@dataclass(frozen=True, order=True)
class Place:
    """The real place (``prime is None``) or the p-adic place of Q."""

    prime: int | None = None

    def __post_init__(self):
        if self.prime is not None and (self.prime < 2 or not gmpy2.is_prime(self.prime)):
            raise DomainError(f"{self.prime} is not prime")

    @property
    def is_real(self) -> bool:
        return self.prime is None

    def __str__(self):
        return "inf" if self.prime is None else str(self.prime)


REAL = Place()


def valuation(n: int, p: int) -> int:
    if n == 0:
        raise DomainError("valuation of 0")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def hilbert_symbol(a: FieldElement, b: FieldElement, v: Place) -> int:
    """(a, b)_v for nonzero rationals a, b."""
    _require_nonzero(a)
    _require_nonzero(b)
    if isinstance(a, Residue) or isinstance(b, Residue):
        raise DomainError("Hilbert symbols are only defined here over Q")
    x, y = _integer_rep(Fraction(a)), _integer_rep(Fraction(b))
    if v.is_real:
        return -1 if x < 0 and y < 0 else 1
    p = v.prime
    alpha, beta = valuation(x, p), valuation(y, p)
    u, w = x // p**alpha, y // p**beta
    if p == 2:
        u8, w8 = u % 8, w % 8
        eps_u, eps_w = ((u8 - 1) // 2) % 2, ((w8 - 1) // 2) % 2
        om_u, om_w = ((u8 * u8 - 1) // 8) % 2, ((w8 * w8 - 1) // 8) % 2
        e = eps_u * eps_w + alpha * om_w + beta * om_u
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        sign *= legendre_symbol(u, p)
    if alpha % 2:
        sign *= legendre_symbol(w, p)
    return sign


def prime_support(a: FieldElement) -> frozenset[int]:
    """Odd primes dividing the numerator or denominator of a rational."""
    if isinstance(a, Residue):
        return frozenset()
    a = Fraction(a)
    _require_nonzero(a)
    primes = {p for p, _ in factorize(a.numerator)} | {p for p, _ in factorize(a.denominator)}
    primes.discard(2)
    return frozenset(primes)
