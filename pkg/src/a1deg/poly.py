"""Dense univariate polynomials, pointed rational functions, and the local
data (roots, Bezout pairs, principal parts) the degree computations need."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as gcd_int, lcm
from typing import Iterable, Sequence

from .errors import DomainError, NotPointed, NotReduced
from .field import QQ, Field, FieldElement, factorize, field_of


class Polynomial:
    """Immutable polynomial with coefficients in ascending degree order."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Iterable, field: Field = QQ):
        cs = [field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple = tuple(cs)
        self.field = field

    @classmethod
    def _raw(cls, coeffs: list, field: Field) -> Polynomial:
        # coefficients already live in `field`
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.field = field
        return obj

    @classmethod
    def x(cls, field: Field = QQ) -> Polynomial:
        return cls([0, 1], field)

    @classmethod
    def constant(cls, c, field: Field = QQ) -> Polynomial:
        return cls([c], field)

    @classmethod
    def from_roots(cls, roots: Sequence[tuple], field: Field = QQ) -> Polynomial:
        """prod (x - r)^e over (r, e) pairs."""
        out = cls.constant(1, field)
        for r, e in roots:
            out = out * cls([-field(r), 1], field) ** e
        return out

    # -- basic structure ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> FieldElement:
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.field))

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]}, {self.field})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = str(c)
            if i == 0:
                terms.append(cs)
                continue
            mono = "x" if i == 1 else f"x^{i}"
            if cs == "1":
                terms.append(mono)
            elif cs == "-1":
                terms.append("-" + mono)
            else:
                terms.append(f"{cs}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return Polynomial.constant(other, self.field)
        if other.field != self.field:
            raise DomainError(f"field mismatch: {self.field} vs {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial._raw(out, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw([-c for c in self.coeffs], self.field)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial._raw([], self.field)
        zero = self.field.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return Polynomial._raw(out, self.field)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative polynomial power")
        out = Polynomial.constant(1, self.field)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c) -> Polynomial:
        c = self.field(c)
        return Polynomial._raw([c * a for a in self.coeffs], self.field)

    def divmod(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        other = self._check(other)
        if not other:
            raise DomainError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        inv = 1 / other.lc if self.field.is_rational else other.lc.inverse()
        if len(rem) - 1 < db:
            return Polynomial._raw([], self.field), self
        quo = [self.field.zero] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            q = rem[k] * inv
            quo[k - db] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[k - db + j] = rem[k - db + j] - q * b
        return Polynomial._raw(quo, self.field), Polynomial._raw(rem[:db], self.field)

    def __divmod__(self, other):
        return self.divmod(other)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: Polynomial) -> Polynomial:
        q, r = self.divmod(other)
        if r:
            raise DomainError(f"{other} does not divide {self}")
        return q

    def monic(self) -> Polynomial:
        if not self:
            return self
        return self.scale(1 / self.lc if self.field.is_rational else self.lc.inverse())

    def derivative(self) -> Polynomial:
        return Polynomial._raw([c * i for i, c in enumerate(self.coeffs)][1:], self.field)

    def __call__(self, x) -> FieldElement:
        """Horner evaluation."""
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    evaluate = __call__

    def taylor_shift(self, r) -> Polynomial:
        """f(x + r)."""
        r = self.field(r)
        out = list(self.coeffs)
        n = len(out)
        # repeated synthetic division by (x - r)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                out[j] = out[j] + r * out[j + 1]
        return Polynomial._raw(out, self.field)

    def truncate(self, n: int) -> Polynomial:
        return Polynomial._raw(list(self.coeffs[:n]), self.field)


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (zero if both inputs are zero)."""
    a._check(b)
    while b:
        a, b = b, a % b
    return a.monic()


def ext_gcd(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """(d, s, t) with s*a + t*b = d monic."""
    field = a.field
    r0, r1 = a, a._check(b)
    s0, s1 = Polynomial.constant(1, field), Polynomial.constant(0, field)
    t0, t1 = Polynomial.constant(0, field), Polynomial.constant(1, field)
    while r1:
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0:
        return r0, s0, t0
    inv = 1 / r0.lc if field.is_rational else r0.lc.inverse()
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


# ----------------------------------------------------------------------------
# Pointed rational functions


@dataclass(frozen=True)
class RationalFunction:
    """A pointed map f/g of P^1 with f monic and gcd(f, g) = 1.

    ``leading_coefficient`` remembers the leading coefficient of the numerator
    as given, before both parts were divided by it.
    """

    numerator: Polynomial
    denominator: Polynomial
    leading_coefficient: FieldElement

    @property
    def field(self) -> Field:
        return self.numerator.field

    @property
    def degree(self) -> int:
        return self.numerator.degree

    def __str__(self):
        if self.denominator.is_constant() and self.denominator[0] == 1:
            return f"{self.numerator}"
        return f"({self.numerator}) / ({self.denominator})"


def normalize_pointed(f: Polynomial, g: Polynomial) -> RationalFunction:
    f._check(g)
    if not f:
        raise DomainError("numerator must be nonzero")
    if not g:
        raise DomainError("denominator must be nonzero")
    if f.degree <= g.degree:
        raise NotPointed(f"deg f = {f.degree} <= deg g = {g.degree}")
    if gcd(f, g).degree > 0:
        raise NotReduced(f"gcd({f}, {g}) = {gcd(f, g)}")
    c = f.lc
    inv = 1 / c
    return RationalFunction(f.scale(inv), g.scale(inv), c)


def rational_function(f: Polynomial, g: Polynomial | None = None) -> RationalFunction:
    if g is None:
        g = Polynomial.constant(1, f.field)
    return normalize_pointed(f, g)


def bezout_pair(F: RationalFunction) -> tuple[Polynomial, Polynomial]:
    """The unique (u, v) with f*u + g*v = 1, deg u <= n-2, deg v <= n-1."""
    f, g = F.numerator, F.denominator
    d, s, t = ext_gcd(f, g)
    if d.degree != 0:
        raise NotReduced("numerator and denominator are not coprime")
    v = t % f
    u = (Polynomial.constant(1, f.field) - g * v).exact_div(f)
    n = f.degree
    if u.degree > n - 2 or v.degree > n - 1:
        raise DomainError("Bezout pair violates degree bounds")  # pragma: no cover
    return u, v


# ----------------------------------------------------------------------------
# Roots


@dataclass(frozen=True)
class RootDatum:
    root: FieldElement
    multiplicity: int

    def __post_init__(self):
        if self.multiplicity < 1:
            raise DomainError("multiplicity must be at least 1")


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return divs


def _rational_candidates(f: Polynomial) -> list[Fraction]:
    """Rational roots of f among ±p/q with p | a_0 and q | a_n.

    Candidates are screened on the primitive integer form by exact
    homogeneous evaluation sum a_i p^i q^(n-i).
    """
    den = 1
    for c in f.coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    n = len(ints) - 1
    hits = []
    for q in _divisors(ints[-1]):
        qpow = [q**k for k in range(n + 1)]
        for p in _divisors(ints[0]):
            if gcd_int(p, q) != 1:
                continue
            for s in (p, -p):
                acc = ints[n]
                for i in range(n - 1, -1, -1):
                    acc = acc * s + ints[i] * qpow[n - i]
                if acc == 0:
                    hits.append(Fraction(s, q))
    return sorted(hits, key=_root_key)


def _root_key(r):
    if isinstance(r, Fraction):
        return (r.numerator, r.denominator)
    return (r.value,)


def _strip_root(f: Polynomial, r) -> tuple[Polynomial, int]:
    lin = Polynomial._raw([-r, f.field.one], f.field)
    m = 0
    while f.degree >= 1 and not f(r):
        f = f.exact_div(lin)
        m += 1
    return f, m


def rational_roots(f: Polynomial) -> tuple[list[RootDatum], Polynomial]:
    """All k-rational roots of f with multiplicities, plus the rootless cofactor.

    Roots are sorted by (numerator, denominator) over Q and by residue over
    F_p. The cofactor is normalized to be monic.
    """
    if not f:
        raise DomainError("zero polynomial has no root list")
    field = f.field
    f = f.monic()
    found: list[RootDatum] = []
    if f.degree >= 1 and not f[0]:
        f, m = _strip_root(f, field.zero)
        found.append(RootDatum(field.zero, m))
    if field.is_rational:
        if f.degree >= 1:
            for r in _rational_candidates(f):
                if f.degree < 1:
                    break
                if not f(r):
                    f, m = _strip_root(f, r)
                    found.append(RootDatum(r, m))
    else:
        for r in field.elements():
            if f.degree < 1:
                break
            if r and not f(r):
                f, m = _strip_root(f, r)
                found.append(RootDatum(r, m))
    found.sort(key=lambda d: _root_key(d.root))
    return found, f.monic()


def split_roots(f: Polynomial) -> list[RootDatum]:
    """Roots of f, raising if f has an irreducible factor of degree > 1."""
    from .errors import UnsupportedVanishingLocus

    roots, cofactor = rational_roots(f)
    if cofactor.degree > 0:
        raise UnsupportedVanishingLocus(f"{f} does not split over {f.field}; cofactor {cofactor}")
    return roots


# ----------------------------------------------------------------------------
# Laurent principal parts


@dataclass(frozen=True)
class PrincipalPart:
    """Coefficients (A_{r,m}, ..., A_{r,1}) of (x-r)^-m, ..., (x-r)^-1 in g/f."""

    center: FieldElement
    order: int
    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) != self.order:
            raise DomainError("principal part length must equal its order")
        if self.order and not self.coefficients[0]:
            raise DomainError("leading principal part coefficient vanished")

    def A(self, j: int) -> FieldElement:
        """A_{r,j} for 1 <= j <= order, zero beyond the order."""
        if j < 1:
            raise DomainError("principal part index starts at 1")
        if j > self.order:
            return field_of(self.center).zero
        return self.coefficients[self.order - j]


def multiplicity(f: Polynomial, r) -> int:
    return _strip_root(f, f.field(r))[1]


def series_inverse(u: Polynomial, n: int) -> Polynomial:
    """u^{-1} mod x^n for u(0) != 0."""
    field = u.field
    u0 = u[0]
    if not u0:
        raise DomainError("series is not invertible")
    inv0 = 1 / u0
    out = [inv0]
    for k in range(1, n):
        acc = field.zero
        for i in range(1, min(k, u.degree) + 1):
            acc = acc + u[i] * out[k - i]
        out.append(-acc * inv0)
    return Polynomial._raw(out, field)


def laurent_principal_part(F: RationalFunction, r) -> PrincipalPart:
    field = F.field
    r = field(r)
    fs = F.numerator.taylor_shift(r)
    m = 0
    while m < len(fs.coeffs) and not fs.coeffs[m]:
        m += 1
    if m == 0:
        raise DomainError(f"{r} is not a root of {F.numerator}")
    u = Polynomial._raw(list(fs.coeffs[m:]), field)
    gs = F.denominator.taylor_shift(r)
    series = (gs * series_inverse(u, m)).truncate(m)
    # coefficient of x^k in the shifted series multiplies (x - r)^(k - m)
    coeffs = tuple(series[k] for k in range(m))
    return PrincipalPart(r, m, coeffs)
