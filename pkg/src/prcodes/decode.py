"""Joint error-and-erasure decoding via partial extended-GCD solvers.

Two fixed-transform decoders share one engine.  Approach 1 feeds it the
full modulus and the received transform scaled by the erasure locator;
approach 2 feeds it the punctured modulus (full modulus with the erased
moduli divided out) and the plain received transform.  The engine runs
leading-term eliminations, checks a degree-based stopping rule between
division passes, and swaps the working rows; running with the ZERO rule
instead yields the classic extended GCD used when the error transform is
fully known.

On success the engine's t row is a scalar multiple of the error locator
(the product of the moduli at the unknown error positions) and the message
is recovered either from the final remainder r or by one extra modular
product, in both cases as an exact polynomial division.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import backend
from .backend import OpCounter
from .code import Code, ReceivedWord, encode, from_residues
from .poly import Poly


class Failure(Enum):
    NON_DIVISIBLE = "NON_DIVISIBLE"
    DEGREE_OVERFLOW = "DEGREE_OVERFLOW"
    VERIFY_MISMATCH = "VERIFY_MISMATCH"


class DecodeFailure(Exception):
    """Raised by the recovery helpers; decode() turns it into an outcome."""

    def __init__(self, reason: Failure, detail: str = ""):
        super().__init__(detail or reason.value)
        self.reason = reason


class StopKind(Enum):
    ADAPTIVE1 = "adaptive1"
    THRESHOLD1 = "threshold1"
    ADAPTIVE2 = "adaptive2"
    THRESHOLD2 = "threshold2"
    ZERO = "zero"


@dataclass(frozen=True)
class StopRule:
    """Degree-based early-stopping rule for the GCD engine.

    The threshold forms compare 2*deg r against N + K +/- the erasure
    locator degree so that half-integer bounds stay in exact integer
    arithmetic; deg of the zero polynomial is -inf, so a zero t row never
    satisfies an adaptive rule and a zero r row always stops."""

    kind: StopKind
    N: int = 0
    K: int = 0
    erasure_degree: int = 0

    def fires(self, r: Poly, t: Poly) -> bool:
        kind = self.kind
        if kind is StopKind.ZERO:
            return r.is_zero
        dr = r.degree
        if kind is StopKind.ADAPTIVE1:
            return dr < t.degree + self.erasure_degree + self.K
        if kind is StopKind.THRESHOLD1:
            return 2 * dr < self.N + self.K + self.erasure_degree
        if kind is StopKind.ADAPTIVE2:
            return dr < t.degree + self.K
        if kind is StopKind.THRESHOLD2:
            return 2 * dr < self.N + self.K - self.erasure_degree
        raise AssertionError(kind)


@dataclass
class GcdState:
    """Engine state at the stopping point.

    iterations counts executed division steps (inner loop bodies), swaps
    counts row swaps; r = s*R0 + t*R1 and rt = st*R0 + tt*R1 throughout."""

    r: Poly
    rt: Poly
    s: Poly
    st: Poly
    t: Poly
    tt: Poly
    iterations: int
    swaps: int


_invariant_checking = False
_invariant_checks = 0


def set_invariant_checking(on: bool) -> None:
    """Verify the engine's row identities at every checkpoint (test use)."""
    global _invariant_checking
    _invariant_checking = bool(on)


def invariant_check_count() -> int:
    return _invariant_checks


def invariant_checking_enabled() -> bool:
    return _invariant_checking


def _check_invariant(R0, R1, r, rt, s, st, t, tt):
    global _invariant_checks
    _invariant_checks += 1
    if s.mul(R0).add(t.mul(R1)) != r:
        raise AssertionError("gcd invariant violated: r != s*R0 + t*R1")
    if st.mul(R0).add(tt.mul(R1)) != rt:
        raise AssertionError("gcd invariant violated: rt != st*R0 + tt*R1")
    det = s.mul(tt).sub(st.mul(t))
    if det.degree != 0:
        raise AssertionError("gcd invariant violated: row determinant not a nonzero scalar")


def gcd_engine(R0: Poly, R1: Poly, rule: StopRule, ctr=None) -> GcdState:
    """Run the extended GCD on (R0, R1) until the stopping rule fires.

    The rule is evaluated once before the loop against the hypothetical
    state (r, s, t) = (R1, 0, 1); if it already holds, that state is
    returned with no division work.  This covers error-free words, whose
    received transform is shorter than any divisor the loop would build.
    """
    if R0.is_zero:
        raise ValueError("first gcd input must be nonzero")
    R0._check(R1)
    field = R0.field
    one = Poly.one(field)
    zero = Poly.zero(field)

    if rule.fires(R1, one):
        return GcdState(r=R1, rt=R0, s=zero, st=one, t=one, tt=zero,
                        iterations=0, swaps=0)
    if R1.is_zero:
        raise ValueError("second gcd input is zero and the stop rule did not fire")

    r, rt = R0, R1
    s, st = one, zero
    t, tt = zero, one
    iterations = 0
    swaps = 0
    while True:
        if _invariant_checking:
            _check_invariant(R0, R1, r, rt, s, st, t, tt)
        rl, sl, tl, steps = backend.gcd_pass(
            field, r.coeffs, rt.coeffs, s.coeffs, st.coeffs, t.coeffs, tt.coeffs, ctr)
        if steps:
            r = Poly._make(field, rl)
            s = Poly._make(field, sl)
            t = Poly._make(field, tl)
            iterations += steps
        if _invariant_checking:
            _check_invariant(R0, R1, r, rt, s, st, t, tt)
        if rule.fires(r, t):
            return GcdState(r=r, rt=rt, s=s, st=st, t=t, tt=tt,
                            iterations=iterations, swaps=swaps)
        r, rt = rt, r
        s, st = st, s
        t, tt = tt, t
        swaps += 1


# -- locator and transform helpers ----------------------------------------------


def locator_for(code: Code, positions, ctr=None) -> Poly:
    """Product of the moduli at the given positions (1 for the empty set)."""
    out = Poly.one(code.field)
    for i in sorted(set(positions)):
        if not isinstance(i, int) or not 0 <= i < code.n:
            raise ValueError(f"position {i!r} out of range")
        out = out.mul(code.moduli[i], ctr)
    return out


def modified_received(code: Code, word: ReceivedWord, ctr=None) -> Poly:
    """Erasure locator times the received transform, not reduced."""
    word.validate(code)
    lam = locator_for(code, word.erased, ctr)
    return lam.mul(from_residues(code, word.symbols, ctr), ctr)


def punctured_modulus(code: Code, erased, ctr=None) -> Poly:
    """Full modulus with the erased positions' moduli divided out."""
    lam = locator_for(code, erased, ctr)
    quot, rem = code.full_modulus.divmod(lam, ctr)
    if not rem.is_zero:
        raise AssertionError("erasure locator must divide the full modulus")
    return quot


# -- GCD solvers ---------------------------------------------------------------


def extended_gcd1(code: Code, masked_error: Poly, ctr=None) -> GcdState:
    """Full-knowledge solver on (full modulus, erasure-masked error transform).

    Runs to a zero remainder; the returned t is a scalar multiple of the
    error locator, and s*M + t*E = 0 is re-verified on every call."""
    if masked_error.is_zero:
        raise ValueError("error transform must be nonzero")
    state = gcd_engine(code.full_modulus, masked_error,
                       StopRule(StopKind.ZERO), ctr)
    if not state.s.mul(code.full_modulus).add(state.t.mul(masked_error)).is_zero:
        raise AssertionError("extended gcd output identity failed")
    return state


def extended_gcd2(code: Code, erased, error_transform: Poly, ctr=None) -> GcdState:
    """Full-knowledge solver on (punctured modulus, plain error transform)."""
    if error_transform.is_zero:
        raise ValueError("error transform must be nonzero")
    punctured = punctured_modulus(code, erased, ctr)
    state = gcd_engine(punctured, error_transform, StopRule(StopKind.ZERO), ctr)
    if not state.s.mul(punctured).add(state.t.mul(error_transform)).is_zero:
        raise AssertionError("extended gcd output identity failed")
    return state


def partial_gcd1(code: Code, word: ReceivedWord, stop: str = "adaptive",
                 ctr=None) -> GcdState:
    """Approach-1 solver on the received word alone."""
    word.validate(code)
    lam = locator_for(code, word.erased, ctr)
    y = from_residues(code, word.symbols, ctr)
    yhat = lam.mul(y, ctr)
    kind = StopKind.ADAPTIVE1 if stop == "adaptive" else StopKind.THRESHOLD1
    rule = StopRule(kind, N=code.N, K=code.K, erasure_degree=lam.degree)
    return gcd_engine(code.full_modulus, yhat, rule, ctr)


def partial_gcd2(code: Code, word: ReceivedWord, stop: str = "adaptive",
                 ctr=None) -> GcdState:
    """Approach-2 solver on the received word alone."""
    word.validate(code)
    lam = locator_for(code, word.erased, ctr)
    y = from_residues(code, word.symbols, ctr)
    punctured = punctured_modulus(code, word.erased, ctr)
    kind = StopKind.ADAPTIVE2 if stop == "adaptive" else StopKind.THRESHOLD2
    rule = StopRule(kind, N=code.N, K=code.K, erasure_degree=lam.degree)
    return gcd_engine(punctured, y, rule, ctr)


# -- recovery -------------------------------------------------------------------


def _exact_message(code: Code, numerator: Poly, divisor: Poly, ctr=None) -> Poly:
    if divisor.is_zero:
        raise DecodeFailure(Failure.NON_DIVISIBLE, "zero divisor")
    quot, rem = numerator.divmod(divisor, ctr)
    if not rem.is_zero:
        raise DecodeFailure(Failure.NON_DIVISIBLE)
    if quot.degree >= code.K:
        raise DecodeFailure(Failure.DEGREE_OVERFLOW)
    return quot


def recover1_remainder(code: Code, word: ReceivedWord, t: Poly, ctr=None) -> Poly:
    """a = (t * scaled received) mod full modulus, over t * erasure locator."""
    lam = locator_for(code, word.erased, ctr)
    yhat = lam.mul(from_residues(code, word.symbols, ctr), ctr)
    numerator = t.mul(yhat, ctr).mod(code.full_modulus, ctr)
    return _exact_message(code, numerator, t.mul(lam, ctr), ctr)


def recover1_quotient(code: Code, erased, r: Poly, t: Poly, ctr=None) -> Poly:
    """a = r / (t * erasure locator) from the engine's final (r, t) pair."""
    lam = locator_for(code, erased, ctr)
    return _exact_message(code, r, t.mul(lam, ctr), ctr)


def recover2_remainder(code: Code, word: ReceivedWord, t: Poly, ctr=None) -> Poly:
    """a = (t * received transform) mod punctured modulus, over t."""
    punctured = punctured_modulus(code, word.erased, ctr)
    y = from_residues(code, word.symbols, ctr)
    numerator = t.mul(y, ctr).mod(punctured, ctr)
    return _exact_message(code, numerator, t, ctr)


def recover2_quotient(code: Code, r: Poly, t: Poly, ctr=None) -> Poly:
    """a = r / t from the engine's final (r, t) pair."""
    return _exact_message(code, r, t, ctr)


def interpolate_with_locator(code: Code, word: ReceivedWord, G: Poly,
                             approach: str, ctr=None) -> Poly:
    """Recover the message when a multiple G of the error locator is known.

    G = 1 is the pure-erasure path.  Requires deg G <= N - K - deg(erasure
    locator); a larger G cannot separate the message from the error part.
    """
    word.validate(code)
    lam = locator_for(code, word.erased, ctr)
    if G.is_zero or G.degree > code.N - code.K - lam.degree:
        raise ValueError("locator multiple violates the degree bound")
    if approach == "1":
        yhat = lam.mul(from_residues(code, word.symbols, ctr), ctr)
        numerator = yhat.mul(G, ctr).mod(code.full_modulus, ctr)
        return _exact_message(code, numerator, lam.mul(G, ctr), ctr)
    if approach == "2":
        punctured = punctured_modulus(code, word.erased, ctr)
        y = from_residues(code, word.symbols, ctr)
        numerator = y.mul(G, ctr).mod(punctured, ctr)
        return _exact_message(code, numerator, G, ctr)
    raise ValueError(f"unknown approach {approach!r}")


# -- the assembled decoder --------------------------------------------------------


@dataclass(frozen=True)
class DecodeOptions:
    approach: str = "2"          # "1" or "2"
    recovery: str = "remainder"  # "remainder" or "quotient"
    stop: str = "adaptive"       # "adaptive" or "threshold"
    verify: bool = False

    def __post_init__(self):
        if self.approach not in ("1", "2"):
            raise ValueError(f"approach must be '1' or '2', got {self.approach!r}")
        if self.recovery not in ("remainder", "quotient"):
            raise ValueError(f"bad recovery {self.recovery!r}")
        if self.stop not in ("adaptive", "threshold"):
            raise ValueError(f"bad stop rule {self.stop!r}")


@dataclass
class DecodeStats:
    iterations: int = 0
    swaps: int = 0
    mults: int = 0
    invs: int = 0


@dataclass
class DecodeOutcome:
    message: Poly | None
    error_locator: Poly | None
    corrected: ReceivedWord | None
    stats: DecodeStats
    failure: Failure | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None


def locator_support(code: Code, erased, locator: Poly, ctr=None):
    """Positions whose moduli multiply out to exactly this locator.

    Returns None when the locator is not such a product, i.e. when it does
    not divide the punctured modulus; success outcomes require a real
    support, which beyond-bound patterns may fail to produce."""
    support = set()
    product = Poly.one(code.field)
    for i in range(code.n):
        if i in erased:
            continue
        if locator.mod(code.moduli[i], ctr).is_zero:
            support.add(i)
            product = product.mul(code.moduli[i], ctr)
    if product != locator:
        return None
    return support


def verify_consistency(code: Code, word: ReceivedWord, corrected: ReceivedWord,
                       locator: Poly, erasure_locator: Poly, ctr=None) -> None:
    """Re-encoding consistency check, raising VERIFY_MISMATCH on failure.

    The candidate must match the received word on every non-erased
    position outside the locator's support, and the implied pattern must
    fit the correction budget 2*deg(locator) + deg(erasure locator) <= N-K.
    """
    budget = code.N - code.K - erasure_locator.degree
    if 2 * locator.degree > budget:
        raise DecodeFailure(Failure.VERIFY_MISMATCH, "locator exceeds the budget")
    mismatch_weight = 0
    for i in range(code.n):
        if i in word.erased:
            continue
        if corrected.symbols[i] == word.symbols[i]:
            continue
        if not locator.mod(code.moduli[i], ctr).is_zero:
            raise DecodeFailure(Failure.VERIFY_MISMATCH,
                                "mismatch outside the locator support")
        mismatch_weight += code.moduli[i].degree
    if 2 * mismatch_weight > budget:
        raise DecodeFailure(Failure.VERIFY_MISMATCH, "pattern exceeds the budget")


def decode(code: Code, word: ReceivedWord, opts: DecodeOptions = DecodeOptions()) -> DecodeOutcome:
    """Run the selected partial-GCD decoder; never raises for a valid word."""
    word.validate(code)
    ctr = OpCounter()
    lam = locator_for(code, word.erased, ctr)
    y = from_residues(code, word.symbols, ctr)
    if opts.approach == "1":
        received = lam.mul(y, ctr)
        modulus = code.full_modulus
        kind = StopKind.ADAPTIVE1 if opts.stop == "adaptive" else StopKind.THRESHOLD1
    else:
        received = y
        modulus = punctured_modulus(code, word.erased, ctr)
        kind = StopKind.ADAPTIVE2 if opts.stop == "adaptive" else StopKind.THRESHOLD2
    rule = StopRule(kind, N=code.N, K=code.K, erasure_degree=lam.degree)
    state = gcd_engine(modulus, received, rule, ctr)

    locator = None
    try:
        if state.t.is_zero:
            raise DecodeFailure(Failure.NON_DIVISIBLE, "zero locator cofactor")
        locator = state.t.monic(ctr)
        if locator_support(code, word.erased, locator, ctr) is None:
            raise DecodeFailure(Failure.NON_DIVISIBLE,
                                "cofactor is not an error locator")
        if opts.recovery == "remainder":
            numerator = locator.mul(received, ctr).mod(modulus, ctr)
            divisor = locator.mul(lam, ctr) if opts.approach == "1" else locator
            message = _exact_message(code, numerator, divisor, ctr)
        else:
            divisor = state.t.mul(lam, ctr) if opts.approach == "1" else state.t
            message = _exact_message(code, state.r, divisor, ctr)
        corrected = encode(code, message, ctr)
        if opts.verify:
            verify_consistency(code, word, corrected, locator, lam, ctr)
    except DecodeFailure as f:
        stats = DecodeStats(state.iterations, state.swaps, ctr.mults, ctr.invs)
        return DecodeOutcome(None, locator, None, stats, f.reason)
    stats = DecodeStats(state.iterations, state.swaps, ctr.mults, ctr.invs)
    return DecodeOutcome(message, locator, corrected, stats)
