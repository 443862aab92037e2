"""Dense univariate polynomials over a Field.

Coefficients are stored ascending (coeffs[i] multiplies x**i) as a tuple
with no trailing zeros; the zero polynomial stores the empty tuple.  The
degree of the zero polynomial is float("-inf"), which makes the decoder's
degree comparisons work without special cases: it orders below every
integer and absorbs addition.

Arithmetic methods take an optional OpCounter for callers that tally
coefficient multiplications; the operator forms are uncounted shorthands.

Text form: ascending coefficients separated by single spaces ("0 1" is x);
the zero polynomial is the single token "0".
"""

from __future__ import annotations

import random

from . import backend
from .field import Field, FieldMismatchError

NEG_INF = float("-inf")


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        cs = [field.validate(int(c)) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def _make(cls, field, coeffs) -> "Poly":
        # trusted path: coeffs already normalized ints in range
        p = object.__new__(cls)
        p.field = field
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def zero(cls, field) -> "Poly":
        return cls._make(field, ())

    @classmethod
    def one(cls, field) -> "Poly":
        return cls._make(field, (1,))

    @classmethod
    def constant(cls, field, c) -> "Poly":
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field, c, k) -> "Poly":
        return cls(field, (0,) * k + (c,))

    @classmethod
    def from_text(cls, field, text: str) -> "Poly":
        try:
            coeffs = [int(t) for t in text.split()]
        except ValueError:
            raise ValueError(f"bad polynomial text {text!r}") from None
        if not coeffs:
            raise ValueError("empty polynomial text")
        return cls(field, coeffs)

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        return " ".join(str(c) for c in self.coeffs)

    # -- structure -----------------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def _check(self, other) -> "Poly":
        if not isinstance(other, Poly):
            raise TypeError(f"expected a Poly, got {other!r}")
        if other.field != self.field:
            raise FieldMismatchError(
                f"cannot mix polynomials over {self.field} and {other.field}")
        return other

    # -- arithmetic ------------------------------------------------------------

    def add(self, other) -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        fadd = self.field.add
        out = list(a)
        for i, c in enumerate(b):
            out[i] = fadd(out[i], c)
        while out and out[-1] == 0:
            out.pop()
        return Poly._make(self.field, out)

    def sub(self, other) -> "Poly":
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        out = [0] * n
        for i in range(n):
            ca = a[i] if i < len(a) else 0
            cb = b[i] if i < len(b) else 0
            out[i] = f.sub(ca, cb)
        while out and out[-1] == 0:
            out.pop()
        return Poly._make(f, out)

    def neg(self) -> "Poly":
        f = self.field
        return Poly._make(f, [f.neg(c) for c in self.coeffs])

    def mul(self, other, ctr=None) -> "Poly":
        self._check(other)
        return Poly._make(self.field,
                          backend.poly_mul(self.field, self.coeffs, other.coeffs, ctr))

    def divmod(self, other, ctr=None):
        self._check(other)
        q, r = backend.poly_divmod(self.field, self.coeffs, other.coeffs, ctr)
        return Poly._make(self.field, q), Poly._make(self.field, r)

    def mod(self, other, ctr=None) -> "Poly":
        return self.divmod(other, ctr)[1]

    def floordiv(self, other, ctr=None) -> "Poly":
        return self.divmod(other, ctr)[0]

    def scale(self, c: int, ctr=None) -> "Poly":
        """Multiply every coefficient by the field element c."""
        self.field.validate(c)
        if c == 0:
            return Poly.zero(self.field)
        if c == 1:
            return self
        fmul = self.field.mul
        out = [fmul(a, c) for a in self.coeffs]
        if ctr is not None:
            ctr.mults += sum(1 for a in self.coeffs if a)
        return Poly._make(self.field, out)

    def shifted(self, k: int) -> "Poly":
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return Poly._make(self.field, (0,) * k + self.coeffs)

    def monic(self, ctr=None) -> "Poly":
        if self.is_zero:
            raise ZeroDivisionError("the zero polynomial cannot be made monic")
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        inv = self.field.inv(lead)
        if ctr is not None:
            ctr.invs += 1
        return self.scale(inv, ctr)

    def evaluate(self, v: int) -> int:
        """Horner evaluation at the field element v."""
        self.field.validate(v)
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, v), c)
        return acc

    # -- operators ---------------------------------------------------------------

    def __add__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.sub(other)

    def __neg__(self):
        return self.neg()

    def __mul__(self, other):
        return self.mul(other)

    def __divmod__(self, other):
        return self.divmod(other)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __eq__(self, other):
        return (isinstance(other, Poly)
                and self.field == other.field and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({self.field!r}, '{self.to_text()}')"


def ext_gcd(a: Poly, b: Poly, ctr=None):
    """Monic g = gcd(a, b) plus u, v with u*a + v*b = g."""
    a._check(b)
    if a.is_zero and b.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    field = a.field
    r0, r1 = a, b
    s0, s1 = Poly.one(field), Poly.zero(field)
    t0, t1 = Poly.zero(field), Poly.one(field)
    while not r1.is_zero:
        q, r = r0.divmod(r1, ctr)
        r0, r1 = r1, r
        s0, s1 = s1, s0.sub(q.mul(s1, ctr))
        t0, t1 = t1, t0.sub(q.mul(t1, ctr))
    c = field.inv(r0.lc())
    if ctr is not None:
        ctr.invs += 1
    return r0.scale(c, ctr), s0.scale(c, ctr), t0.scale(c, ctr)


def mod_inverse(b: Poly, m: Poly, ctr=None) -> Poly:
    """w with b*w = 1 (mod m) and deg w < deg m."""
    if not isinstance(m.degree, int) or m.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    g, u, _ = ext_gcd(b, m, ctr)
    if g != Poly.one(b.field):
        raise ValueError(f"{b!r} is not invertible modulo {m!r}")
    return u.mod(m, ctr)


def powmod(a: Poly, e: int, m: Poly, ctr=None) -> Poly:
    """a**e mod m by square and multiply (e >= 0)."""
    if e < 0:
        raise ValueError("negative exponent")
    base = a.mod(m, ctr)
    out = Poly.one(a.field)
    while e:
        if e & 1:
            out = out.mul(base, ctr).mod(m, ctr)
        base = base.mul(base, ctr).mod(m, ctr)
        e >>= 1
    return out


def is_irreducible(f: Poly) -> bool:
    """Rabin's test: f of degree d >= 1 is irreducible over GF(q) iff
    x^(q^d) = x mod f and gcd(x^(q^(d/l)) - x, f) = 1 for each prime l | d."""
    d = f.degree
    if not isinstance(d, int) or d < 1:
        raise ValueError("irreducibility is only defined for degree >= 1")
    f = f.monic()
    field = f.field
    q = field.q
    x = Poly.monomial(field, 1, 1)
    x_mod_f = x.mod(f)
    frob = []
    h = x_mod_f
    for _ in range(d):
        h = powmod(h, q, f)
        frob.append(h)
    if frob[-1] != x_mod_f:
        return False
    for ell in _prime_divisors(d):
        g, _, _ = ext_gcd(frob[d // ell - 1].sub(x_mod_f), f)
        if g.degree != 0:
            return False
    return True


def random_irreducible(field: Field, degree: int, seed: int) -> Poly:
    """Deterministic seeded search for a monic irreducible of exact degree."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    return _random_irreducible(field, degree, random.Random(seed))


def _random_irreducible(field: Field, degree: int, rng: random.Random) -> Poly:
    q = field.q
    while True:
        cand = Poly._make(field, [rng.randrange(q) for _ in range(degree)] + [1])
        if is_irreducible(cand):
            return cand


def irreducible_count(field: Field, degree: int) -> int:
    """Number of monic irreducibles of the given degree (necklace formula)."""
    q = field.q
    total = 0
    for e in _divisors(degree):
        total += _moebius(e) * q ** (degree // e)
    return total // degree


def irreducibles_in_order(field: Field, degree: int):
    """Yield every monic irreducible of the degree, smallest canonical first."""
    from .field import _digits

    for low in range(field.q ** degree):
        cand = Poly(field, _digits(low, field.q, degree) + [1])
        if is_irreducible(cand):
            yield cand


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _moebius(n: int) -> int:
    mu = 1
    for p in _prime_divisors(n):
        if n % (p * p) == 0:
            return 0
        mu = -mu
    return mu
