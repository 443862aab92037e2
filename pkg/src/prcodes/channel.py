"""Seeded corruption of codewords and the Monte Carlo trial harness.

Per-trial seeds are derived from the master seed with a splitmix64 step,
so trial i sees the same randomness no matter how many trials run, in
what order, or on how many workers; identical inputs give bit-identical
statistics.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from . import oracle
from .code import Code, ReceivedWord, encode
from .decode import DecodeOptions, decode
from .poly import Poly

_M64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _M64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


def derive_seed(master_seed: int, index: int) -> int:
    """Stable per-trial seed, independent of evaluation order."""
    return _splitmix64((_splitmix64(master_seed & _M64) + index) & _M64)


@dataclass(frozen=True)
class CorruptionPlan:
    """Erasure positions plus nonzero error deltas at disjoint positions."""

    erasures: frozenset
    errors: tuple          # ((position, delta Poly), ...) sorted by position
    seed: int | None = None

    def __post_init__(self):
        positions = [p for p, _ in self.errors]
        if sorted(positions) != positions or len(set(positions)) != len(positions):
            raise ValueError("error positions must be sorted and distinct")
        if self.erasures & set(positions):
            raise ValueError("error and erasure positions must be disjoint")
        for _, delta in self.errors:
            if delta.is_zero:
                raise ValueError("error deltas must be nonzero")

    def validate(self, code: Code) -> "CorruptionPlan":
        for p in self.erasures:
            if not 0 <= p < code.n:
                raise ValueError(f"erasure position {p} out of range")
        for p, delta in self.errors:
            if not 0 <= p < code.n:
                raise ValueError(f"error position {p} out of range")
            if delta.field != code.field or delta.degree >= code.moduli[p].degree:
                raise ValueError(f"error delta at {p} is not a reduced residue")
        return self

    def erasure_degree(self, code: Code) -> int:
        return sum(code.moduli[p].degree for p in self.erasures)

    def error_degree(self, code: Code) -> int:
        return sum(code.moduli[p].degree for p, _ in self.errors)

    def within_bound(self, code: Code) -> bool:
        return 2 * self.error_degree(code) + self.erasure_degree(code) <= code.N - code.K


def make_plan(code: Code, erasures, errors: dict, seed=None) -> CorruptionPlan:
    plan = CorruptionPlan(frozenset(erasures),
                          tuple(sorted(errors.items())), seed)
    return plan.validate(code)


def corrupt(code: Code, word: ReceivedWord, plan: CorruptionPlan) -> ReceivedWord:
    """Apply the plan to a clean codeword: add deltas, zero and flag erasures."""
    word.validate(code)
    if word.erased:
        raise ValueError("corrupt expects a word with no prior erasures")
    plan.validate(code)
    symbols = list(word.symbols)
    for p, delta in plan.errors:
        symbols[p] = symbols[p].add(delta)
    return ReceivedWord(symbols, plan.erasures)


@lru_cache(maxsize=4096)
def _degree_subsets(degrees: tuple, budget: int) -> tuple:
    """Index subsets of `degrees` with total exactly `budget`, lexicographic."""
    out = []

    def walk(start, remaining, chosen):
        if remaining == 0:
            out.append(tuple(chosen))
            return
        for idx in range(start, len(degrees)):
            if degrees[idx] <= remaining:
                chosen.append(idx)
                walk(idx + 1, remaining - degrees[idx], chosen)
                chosen.pop()

    walk(0, budget, [])
    return tuple(out)


def random_plan(code: Code, erasures, error_degree_budget: int, seed: int) -> CorruptionPlan:
    """Uniform plan: erasure positions, then an error-position set of total
    degree exactly error_degree_budget, then uniform nonzero deltas."""
    rng = random.Random(seed)
    if isinstance(erasures, int):
        if not 0 <= erasures <= code.n:
            raise ValueError(f"cannot erase {erasures} of {code.n} positions")
        erased = frozenset(rng.sample(range(code.n), erasures))
    else:
        erased = frozenset(erasures)
    available = [i for i in range(code.n) if i not in erased]
    if error_degree_budget < 0:
        raise ValueError("error degree budget must be >= 0")
    degrees = tuple(code.moduli[i].degree for i in available)
    if degrees and len(set(degrees)) == 1:
        # equal-degree moduli: a uniform subset of the right size is a
        # uniform subset of the right total degree
        d = degrees[0]
        count, rem = divmod(error_degree_budget, d)
        if rem or count > len(available):
            raise ValueError(
                f"no error pattern has total degree {error_degree_budget}")
        chosen = sorted(rng.sample(range(len(available)), count))
    else:
        if len(available) > 24:
            raise ValueError("too many candidate error positions to enumerate")
        subsets = _degree_subsets(degrees, error_degree_budget)
        if not subsets:
            raise ValueError(
                f"no error pattern has total degree {error_degree_budget}")
        chosen = subsets[rng.randrange(len(subsets))]
    q = code.field.q
    errors = {}
    for idx in chosen:
        pos = available[idx]
        d = code.moduli[pos].degree
        v = rng.randrange(1, q ** d)
        coeffs = []
        for _ in range(d):
            v, c = divmod(v, q)
            coeffs.append(c)
        errors[pos] = Poly(code.field, coeffs)
    return make_plan(code, erased, errors, seed)


@dataclass
class OptsRow:
    """Counters for one decode-option combination."""

    approach: str
    recovery: str
    stop: str
    verify: bool = False
    trials: int = 0
    successes: int = 0
    failures: int = 0
    miscorrections: int = 0
    iter_sum: int = 0
    iter_max: int = 0
    mult_sum: int = 0

    @property
    def mean_iterations(self) -> float:
        return self.iter_sum / self.trials if self.trials else 0.0

    @property
    def mean_mults(self) -> float:
        return self.mult_sum / self.trials if self.trials else 0.0


@dataclass
class TrialStats:
    trials: int
    rows: list = dc_field(default_factory=list)

    def to_tsv(self) -> str:
        lines = ["approach\trecovery\tstop\ttrials\tsuccesses\tfailures"
                 "\tmiscorrections\tmean_iter\tmean_mults"]
        for r in self.rows:
            lines.append(
                f"{r.approach}\t{r.recovery}\t{r.stop}\t{r.trials}"
                f"\t{r.successes}\t{r.failures}\t{r.miscorrections}"
                f"\t{r.mean_iterations:.6g}\t{r.mean_mults:.6g}")
        return "\n".join(lines) + "\n"


def decode_any(code: Code, word: ReceivedWord, approach: str,
               recovery: str = "remainder", stop: str = "adaptive",
               verify: bool = False):
    """Dispatch across the fixed-transform and modified-transform decoders."""
    if approach in ("1", "2"):
        return decode(code, word, DecodeOptions(approach, recovery, stop, verify))
    if approach == "modified":
        return oracle.decode_modified_transform(code, word, recovery, stop, verify)
    raise ValueError(f"unknown approach {approach!r}")


def simulate(code: Code, trials: int, erasures, error_degree_budget: int,
             opts_list, master_seed: int) -> TrialStats:
    """Encode random messages, corrupt per random plans, decode under every
    requested option combination, and classify each result exactly once."""
    rows = []
    seen = set()
    for opts in opts_list:
        key = (opts.approach, opts.recovery, opts.stop)
        if key in seen:
            raise ValueError(f"duplicate option combination {key}")
        seen.add(key)
        rows.append(OptsRow(opts.approach, opts.recovery, opts.stop, opts.verify))

    q = code.field.q
    for i in range(trials):
        rng = random.Random(derive_seed(master_seed, i))
        message = Poly(code.field, [rng.randrange(q) for _ in range(code.K)])
        word = encode(code, message)
        plan = random_plan(code, erasures, error_degree_budget, rng.getrandbits(63))
        received = corrupt(code, word, plan)
        for opts, row in zip(opts_list, rows):
            out = decode_any(code, received, opts.approach, opts.recovery,
                             opts.stop, opts.verify)
            row.trials += 1
            if out.ok and out.message == message:
                row.successes += 1
            elif not out.ok:
                row.failures += 1
            else:
                row.miscorrections += 1
            row.iter_sum += out.stats.iterations
            row.iter_max = max(row.iter_max, out.stats.iterations)
            row.mult_sum += out.stats.mults
    return TrialStats(trials, rows)


@dataclass(frozen=True)
class SimOptions:
    """One decode-option combination for the simulator and the CLI."""

    approach: str            # "1", "2" or "modified"
    recovery: str = "remainder"
    stop: str = "adaptive"
    verify: bool = False
