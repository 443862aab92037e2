"""Reference decoders used as ground truth.

The shortened-code decoder rebuilds an interpolating basis for the
non-erased positions on every call and then runs plain error-only
decoding; it is the approach the fixed-transform decoders exist to avoid,
kept here both as the third decode path and as a cross-check.  The
exhaustive nearest-codeword search is the distance-level ground truth for
small codes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .backend import OpCounter
from .code import Code, ReceivedWord, _build_basis, encode
from .decode import (DecodeFailure, DecodeOutcome, DecodeStats, Failure, StopKind,
                     StopRule, _exact_message, gcd_engine, locator_for,
                     locator_support, verify_consistency)
from .poly import Poly


@dataclass(frozen=True)
class ShortenedCode:
    """The kept positions of a base code with a freshly built basis."""

    base: Code
    kept: tuple
    modulus: Poly          # product of the kept moduli
    basis: tuple           # interpolating basis, parallel to kept


def shorten(code: Code, erased, ctr=None) -> ShortenedCode:
    erased = frozenset(erased)
    lam = locator_for(code, erased, ctr)
    if lam.degree > code.N - code.K:
        raise ValueError(
            f"erasure budget exceeded: deg {lam.degree} > N - K = {code.N - code.K}")
    kept = tuple(i for i in range(code.n) if i not in erased)
    modulus = Poly.one(code.field)
    for i in kept:
        modulus = modulus.mul(code.moduli[i], ctr)
    moduli = [code.moduli[i] for i in kept]
    basis = tuple(_build_basis(code.field, moduli, modulus, ctr))
    return ShortenedCode(code, kept, modulus, basis)


def decode_modified_transform(code: Code, word: ReceivedWord,
                              recovery: str = "remainder",
                              stop: str = "adaptive",
                              verify: bool = False) -> DecodeOutcome:
    """Error-only decoding of the shortened code spanned by the kept positions."""
    word.validate(code)
    ctr = OpCounter()
    try:
        sc = shorten(code, word.erased, ctr)
    except ValueError:
        return DecodeOutcome(None, None, None, DecodeStats(),
                             Failure.DEGREE_OVERFLOW)
    y_s = Poly.zero(code.field)
    for i, b_i in zip(sc.kept, sc.basis):
        sym = word.symbols[i]
        if not sym.is_zero:
            y_s = y_s.add(sym.mul(b_i, ctr))
    y_s = y_s.mod(sc.modulus, ctr)

    kind = StopKind.ADAPTIVE2 if stop == "adaptive" else StopKind.THRESHOLD2
    rule = StopRule(kind, N=sc.modulus.degree, K=code.K, erasure_degree=0)
    state = gcd_engine(sc.modulus, y_s, rule, ctr)

    locator = None
    try:
        if state.t.is_zero:
            raise DecodeFailure(Failure.NON_DIVISIBLE, "zero locator cofactor")
        locator = state.t.monic(ctr)
        if locator_support(code, word.erased, locator, ctr) is None:
            raise DecodeFailure(Failure.NON_DIVISIBLE,
                                "cofactor is not an error locator")
        if recovery == "remainder":
            numerator = locator.mul(y_s, ctr).mod(sc.modulus, ctr)
            message = _exact_message(code, numerator, locator, ctr)
        else:
            message = _exact_message(code, state.r, state.t, ctr)
        corrected = encode(code, message, ctr)
        if verify:
            lam = locator_for(code, word.erased, ctr)
            verify_consistency(code, word, corrected, locator, lam, ctr)
    except DecodeFailure as f:
        stats = DecodeStats(state.iterations, state.swaps, ctr.mults, ctr.invs)
        return DecodeOutcome(None, locator, None, stats, f.reason)
    stats = DecodeStats(state.iterations, state.swaps, ctr.mults, ctr.invs)
    return DecodeOutcome(message, locator, corrected, stats)


ENUMERATION_LIMIT = 1 << 20


def nearest_codeword(code: Code, word: ReceivedWord):
    """Exhaustive minimum degree-weighted-distance decoding.

    Distance is restricted to the non-erased positions.  Returns
    (message, distance, unique); ties report the first message in
    canonical order with unique=False.
    """
    word.validate(code)
    total = code.field.q ** code.K
    if total > ENUMERATION_LIMIT:
        raise ValueError(f"message space of size {total} is too large to enumerate")
    q = code.field.q
    best = None
    best_dist = None
    best_count = 0
    for index in range(total):
        coeffs = []
        v = index
        for _ in range(code.K):
            v, d = divmod(v, q)
            coeffs.append(d)
        message = Poly(code.field, coeffs)
        cand = encode(code, message)
        dist = 0
        for i in range(code.n):
            if i in word.erased:
                continue
            if cand.symbols[i] != word.symbols[i]:
                dist += code.moduli[i].degree
        if best_dist is None or dist < best_dist:
            best, best_dist, best_count = message, dist, 1
        elif dist == best_dist:
            best_count += 1
    return best, best_dist, best_count == 1
