"""Arithmetic in GF(p) and GF(p^m).

Elements are canonical integers in [0, q): the base-p digits of the value
are the coordinates in the polynomial basis 1, x, ..., x^(m-1).  A Field
does all arithmetic on these raw ints; FieldElement is a thin checked
wrapper that refuses to mix elements from different fields.

Small fields (q <= 2^16) get log/antilog tables built over a generator of
the multiplicative group; the compiled kernel consumes the same tables.
Larger fields fall back to digit-level arithmetic.
"""

from __future__ import annotations

from array import array

TABLE_LIMIT = 1 << 16
MAX_ORDER = 1 << 64


class FieldMismatchError(ValueError):
    """Operands belong to different fields."""


def is_prime(n: int) -> bool:
    """Deterministic primality check by trial division (n < 2^32 intended)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _digits(value: int, p: int, length: int) -> list[int]:
    out = [0] * length
    for i in range(length):
        value, out[i] = divmod(value, p)
    return out


class Field:
    """GF(p^m) with a fixed monic irreducible modulus polynomial.

    p must be prime and below 2^16, 1 <= m <= 16, and q = p^m must fit in
    64 bits.  field_poly is the ascending coefficient list of the modulus
    (length m + 1, monic over GF(p)); it only applies when m > 1 and
    defaults to the irreducible polynomial of degree m whose non-leading
    coefficients encode the smallest canonical integer.
    """

    __slots__ = ("p", "m", "q", "field_poly", "_exp", "_log", "_poly_int",
                 "_karrays", "_kfield")

    def __init__(self, p: int, m: int = 1, field_poly=None):
        if not isinstance(p, int) or not is_prime(p) or p >= (1 << 16):
            raise ValueError(f"p must be a prime below 2^16, got {p!r}")
        if not isinstance(m, int) or not 1 <= m <= 16:
            raise ValueError(f"extension degree must be in [1, 16], got {m!r}")
        q = p ** m
        if q >= MAX_ORDER:
            raise ValueError(f"field order {p}^{m} does not fit in 64 bits")
        self.p = p
        self.m = m
        self.q = q
        if m == 1:
            if field_poly is not None:
                raise ValueError("field_poly only applies to extension fields")
            self.field_poly = None
        else:
            if field_poly is None:
                field_poly = _default_field_poly(p, m)
            field_poly = tuple(int(c) for c in field_poly)
            self._validate_field_poly(p, m, field_poly)
            self.field_poly = field_poly
        self._poly_int = None
        if self.field_poly is not None and p == 2:
            self._poly_int = sum(c << i for i, c in enumerate(self.field_poly))
        self._exp = None
        self._log = None
        if q <= TABLE_LIMIT:
            self._build_tables()
        self._karrays = None
        self._kfield = None

    @staticmethod
    def _validate_field_poly(p, m, coeffs):
        if len(coeffs) != m + 1 or coeffs[-1] != 1:
            raise ValueError("field_poly must be monic of degree exactly m")
        if any(not 0 <= c < p for c in coeffs):
            raise ValueError("field_poly coefficients must lie in [0, p)")
        from . import poly as _poly

        base = Field(p)
        if not _poly.is_irreducible(_poly.Poly(base, coeffs)):
            raise ValueError("field_poly is reducible over GF(p)")

    # -- raw element arithmetic -------------------------------------------

    def validate(self, v: int) -> int:
        if not isinstance(v, int) or not 0 <= v < self.q:
            raise ValueError(f"{v!r} is not a canonical element of {self}")
        return v

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % p
        out = 0
        mult = 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a - b) % p
        out = 0
        mult = 1
        while a or b:
            out += ((a - b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def mul(self, a: int, b: int) -> int:
        log = self._log
        if log is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[log[a] + log[b]]
        return self._mul_generic(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self._log is not None:
            return self._exp[self.q - 1 - self._log[a]]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def _mul_generic(self, a: int, b: int) -> int:
        p = self.p
        if self.m == 1:
            return (a * b) % p
        if p == 2:
            r = 0
            x = a
            while b:
                if b & 1:
                    r ^= x
                x <<= 1
                b >>= 1
            poly = self._poly_int
            for bit in range(r.bit_length() - 1, self.m - 1, -1):
                if (r >> bit) & 1:
                    r ^= poly << (bit - self.m)
            return r
        m = self.m
        da = _digits(a, p, m)
        db = _digits(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        fp = self.field_poly
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(m):
                    prod[i - m + j] = (prod[i - m + j] - c * fp[j]) % p
        out = 0
        for i in range(m - 1, -1, -1):
            out = out * p + prod[i]
        return out

    # -- tables ------------------------------------------------------------

    def _build_tables(self):
        q = self.q
        g = self._find_generator()
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        cur = 1
        for i in range(q - 1):
            exp[i] = cur
            exp[i + q - 1] = cur
            log[cur] = i
            cur = self._mul_generic(cur, g)
        self._exp = exp
        self._log = log

    def _find_generator(self) -> int:
        order = self.q - 1
        factors = _prime_factors(order)
        for g in range(1, self.q):
            if all(self._pow_generic(g, order // f) != 1 for f in factors):
                return g
        raise AssertionError("multiplicative group of a finite field is cyclic")

    def _pow_generic(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_generic(r, a)
            a = self._mul_generic(a, a)
            e >>= 1
        return r

    def kernel_tables(self):
        """(exp, log) as 64-bit arrays for the compiled kernel, or None."""
        if self._exp is None:
            return None
        if self._karrays is None:
            self._karrays = (array("q", self._exp), array("q", self._log))
        return self._karrays

    # -- descriptor text form ----------------------------------------------

    def descriptor(self) -> str:
        if self.m == 1:
            return str(self.p)
        return f"{self.p}:{self.m}:" + ".".join(str(c) for c in self.field_poly)

    @classmethod
    def from_descriptor(cls, text: str) -> "Field":
        parts = text.strip().split(":")
        try:
            if len(parts) == 1:
                return cls(int(parts[0]))
            if len(parts) == 2:
                return cls(int(parts[0]), int(parts[1]))
            if len(parts) == 3:
                coeffs = [int(t) for t in parts[2].split(".")]
                return cls(int(parts[0]), int(parts[1]), coeffs)
        except ValueError as e:
            raise ValueError(f"bad field descriptor {text!r}: {e}") from None
        raise ValueError(f"bad field descriptor {text!r}")

    # -- identity ------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Field)
                and self.p == other.p and self.m == other.m
                and self.field_poly == other.field_poly)

    def __hash__(self):
        return hash((self.p, self.m, self.field_poly))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m})"

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)


def _prime_factors(n: int) -> list[int]:
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


def _default_field_poly(p: int, m: int) -> tuple:
    from . import poly as _poly

    base = Field(p)
    for low in range(p ** m):
        coeffs = _digits(low, p, m) + [1]
        if _poly.is_irreducible(_poly.Poly(base, coeffs)):
            return tuple(coeffs)
    raise AssertionError("irreducible polynomials exist in every degree")


class FieldElement:
    """A checked (field, value) pair; mixing fields raises FieldMismatchError."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        field.validate(value)
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected a FieldElement, got {other!r}")
        if other.field != self.field:
            raise FieldMismatchError(
                f"cannot mix elements of {self.field} and {other.field}")
        return other.value

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and self.field == other.field and self.value == other.value)

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"{self.value}@{self.field!r}"
