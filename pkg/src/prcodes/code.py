"""Code construction, the residue transform pair, and degree-weight metrics.

A code is a list of n distinct monic irreducible moduli m_0..m_{n-1} over
one field plus a message length k: codewords are the residue vectors of
message polynomials a with deg a < K = deg(m_0 * ... * m_{k-1}).  The
interpolating basis for the inverse transform is computed once at
construction and reused by every decode; only the shortened-code reference
decoder ever rebuilds a basis.
"""

from __future__ import annotations

from .field import Field
from .poly import Poly, is_irreducible, mod_inverse

_basis_builds = 0


def basis_build_count() -> int:
    """How many interpolating bases have been constructed in this process."""
    return _basis_builds


def _build_basis(field, moduli, product, ctr=None):
    """One basis polynomial per modulus: b_i = 1 mod m_i and 0 mod m_j."""
    global _basis_builds
    _basis_builds += 1
    basis = []
    for m_i in moduli:
        quot = product.floordiv(m_i, ctr)
        w = mod_inverse(quot, m_i, ctr)
        basis.append(quot.mul(w, ctr))
    return basis


class Code:
    """Validated code parameters with all derived quantities cached."""

    __slots__ = ("field", "moduli", "k", "n", "full_modulus", "message_modulus",
                 "N", "K", "basis", "ordered_degree")

    def __init__(self, field: Field, moduli, k: int):
        moduli = tuple(moduli)
        n = len(moduli)
        if n < 2:
            raise ValueError("a code needs at least two moduli")
        if not 1 <= k <= n:
            raise ValueError(f"k must satisfy 1 <= k <= {n}, got {k}")
        for m_i in moduli:
            if not isinstance(m_i, Poly) or m_i.field != field:
                raise ValueError("every modulus must be a Poly over the code field")
            if not m_i.is_monic():
                raise ValueError(f"modulus {m_i!r} is not monic")
            if not is_irreducible(m_i):
                raise ValueError(f"modulus {m_i!r} is reducible")
        if len(set(moduli)) != n:
            raise ValueError("moduli must be pairwise distinct")

        self.field = field
        self.moduli = moduli
        self.k = k
        self.n = n
        full = Poly.one(field)
        for m_i in moduli:
            full = full.mul(m_i)
        msg = Poly.one(field)
        for m_i in moduli[:k]:
            msg = msg.mul(m_i)
        self.full_modulus = full
        self.message_modulus = msg
        self.N = full.degree
        self.K = msg.degree
        self.basis = tuple(_build_basis(field, moduli, full))
        degs = [m_i.degree for m_i in moduli]
        self.ordered_degree = all(degs[i] <= degs[i + 1] for i in range(n - 1))

        one = Poly.one(field)
        zero = Poly.zero(field)
        for i, b_i in enumerate(self.basis):
            if b_i.degree >= self.N:
                raise AssertionError("basis polynomial exceeds the code degree")
            for j, m_j in enumerate(moduli):
                want = one if i == j else zero
                if b_i.mod(m_j) != want:
                    raise AssertionError("basis fails the residue characterization")

    def __repr__(self):
        return f"Code({self.field!r}, n={self.n}, k={self.k}, N={self.N}, K={self.K})"


def rs_code(field: Field, evaluation_points, k: int) -> Code:
    """Reed-Solomon as the degree-1 special case: moduli x - alpha_i."""
    points = [field.validate(v) for v in evaluation_points]
    if len(set(points)) != len(points):
        raise ValueError("evaluation points must be pairwise distinct")
    moduli = [Poly(field, (field.neg(v), 1)) for v in points]
    return Code(field, moduli, k)


class ReceivedWord:
    """Per-position residue symbols plus the set of erased positions.

    Erased positions always hold the zero polynomial as a placeholder;
    the decoders never read their values.
    """

    __slots__ = ("symbols", "erased")

    def __init__(self, symbols, erased=frozenset()):
        erased = frozenset(erased)
        syms = list(symbols)
        if not syms:
            raise ValueError("a word needs at least one symbol")
        zero = Poly.zero(syms[0].field)
        for i in erased:
            if not isinstance(i, int) or i < 0:
                raise ValueError(f"bad erasure position {i!r}")
            if i < len(syms):
                syms[i] = zero
        self.symbols = tuple(syms)
        self.erased = erased

    def validate(self, code: Code) -> "ReceivedWord":
        if len(self.symbols) != code.n:
            raise ValueError(f"word has {len(self.symbols)} symbols, code needs {code.n}")
        if any(i >= code.n for i in self.erased):
            raise ValueError("erasure position out of range")
        for i, (sym, m_i) in enumerate(zip(self.symbols, code.moduli)):
            if not isinstance(sym, Poly) or sym.field != code.field:
                raise ValueError(f"symbol {i} is not a Poly over the code field")
            if sym.degree >= m_i.degree:
                raise ValueError(f"symbol {i} is not reduced modulo its modulus")
        return self

    def __eq__(self, other):
        return (isinstance(other, ReceivedWord)
                and self.symbols == other.symbols and self.erased == other.erased)

    def __repr__(self):
        parts = []
        for i, sym in enumerate(self.symbols):
            parts.append("?" if i in self.erased else sym.to_text())
        return "ReceivedWord(" + ", ".join(parts) + ")"


def to_residues(code: Code, a: Poly, ctr=None):
    """Forward transform: the vector of residues a mod m_i."""
    if a.degree >= code.N:
        raise ValueError(f"deg a = {a.degree} is not below N = {code.N}")
    return [a.mod(m_i, ctr) for m_i in code.moduli]


def from_residues(code: Code, residues, ctr=None) -> Poly:
    """Inverse transform: the unique a of deg < N with the given residues."""
    residues = list(residues)
    if len(residues) != code.n:
        raise ValueError(f"expected {code.n} residues, got {len(residues)}")
    acc = Poly.zero(code.field)
    for c_i, b_i, m_i in zip(residues, code.basis, code.moduli):
        if c_i.degree >= m_i.degree:
            raise ValueError("residue is not reduced modulo its modulus")
        if not c_i.is_zero:
            acc = acc.add(c_i.mul(b_i, ctr))
    return acc.mod(code.full_modulus, ctr)


def encode(code: Code, a: Poly, ctr=None) -> ReceivedWord:
    """Codeword of the message polynomial a (deg a < K), no erasures."""
    if a.degree >= code.K:
        raise ValueError(f"message degree {a.degree} is not below K = {code.K}")
    return ReceivedWord(to_residues(code, a, ctr))


def degree_weight(code: Code, residues) -> int:
    """Sum of deg m_i over the nonzero positions of the residue vector."""
    residues = list(residues)
    if len(residues) != code.n:
        raise ValueError(f"expected {code.n} residues, got {len(residues)}")
    return sum(m_i.degree for c_i, m_i in zip(residues, code.moduli) if not c_i.is_zero)


def dd_distance(code: Code, u, v) -> int:
    """Degree-weighted distance: weight of the symbol-wise difference."""
    u = list(u)
    v = list(v)
    if len(u) != len(v):
        raise ValueError("residue vectors have different lengths")
    return degree_weight(code, [a.sub(b) for a, b in zip(u, v)])
