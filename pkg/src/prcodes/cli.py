"""Command-line front end.

Subcommands: gen-code, encode, corrupt, decode, simulate, bench.
Exit codes: 0 success, 1 usage or malformed input, 2 decode failure.
decode writes machine-readable `message:` and `locator_tau:` lines to
stdout and human-readable statistics to stderr.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from . import backend, channel, formats, oracle, poly
from .channel import SimOptions
from .code import Code, rs_code
from .field import Field
from .poly import Poly

APPROACHES = ("1", "2", "modified")
RECOVERIES = ("remainder", "quotient")
STOPS = ("adaptive", "threshold")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _write_out(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_code(path: str) -> Code:
    with open(path) as fh:
        return formats.parse_code(fh.read())


def _load_word(path: str, code: Code):
    with open(path) as fh:
        return formats.parse_word(fh.read(), code)


def _int_list(text: str):
    text = text.strip()
    if not text:
        return []
    return [int(t) for t in text.split(",")]


def cmd_gen_code(args) -> int:
    field = Field.from_descriptor(args.field)
    if (args.degrees is None) == (args.rs is None):
        raise ValueError("give exactly one of --degrees or --rs")
    if args.rs is not None:
        code = rs_code(field, _int_list(args.rs), args.k)
    else:
        degrees = _int_list(args.degrees)
        if not degrees:
            raise ValueError("empty degree list")
        if any(d < 1 for d in degrees):
            raise ValueError("modulus degrees must be >= 1")
        for d in set(degrees):
            want = degrees.count(d)
            have = poly.irreducible_count(field, d)
            if want > have:
                raise ValueError(
                    f"only {have} monic irreducibles of degree {d} exist over {field}")
        rng = random.Random(args.seed)
        moduli = []
        for d in degrees:
            attempts = 0
            while True:
                cand = poly._random_irreducible(field, d, rng)
                if cand not in moduli:
                    moduli.append(cand)
                    break
                attempts += 1
                if attempts >= 1000:
                    # tiny candidate space: fall back to deterministic sweep
                    for cand in poly.irreducibles_in_order(field, d):
                        if cand not in moduli:
                            moduli.append(cand)
                            break
                    break
        code = Code(field, moduli, args.k)
    _write_out(args, formats.dump_code(code))
    return 0


def cmd_encode(args) -> int:
    code = _load_code(args.code)
    message = Poly.from_text(code.field, args.message)
    if message.degree >= code.K:
        raise ValueError(f"message degree {message.degree} is not below K = {code.K}")
    from .code import encode as _encode

    _write_out(args, formats.dump_word(_encode(code, message)))
    return 0


def cmd_corrupt(args) -> int:
    code = _load_code(args.code)
    word = _load_word(args.word, code)
    erasures = frozenset(_int_list(args.erase)) if args.erase else frozenset()
    if args.error_pos is not None and args.error_budget is not None:
        raise ValueError("--error-pos and --error-budget are mutually exclusive")
    if args.error_pos is not None:
        rng = random.Random(args.seed)
        q = code.field.q
        errors = {}
        for pos in _int_list(args.error_pos):
            if not 0 <= pos < code.n:
                raise ValueError(f"error position {pos} out of range")
            d = code.moduli[pos].degree
            v = rng.randrange(1, q ** d)
            coeffs = []
            for _ in range(d):
                v, c = divmod(v, q)
                coeffs.append(c)
            errors[pos] = Poly(code.field, coeffs)
        plan = channel.make_plan(code, erasures, errors, args.seed)
    else:
        budget = args.error_budget or 0
        plan = channel.random_plan(code, erasures, budget, args.seed)
    _write_out(args, formats.dump_word(channel.corrupt(code, word, plan)))
    return 0


def cmd_decode(args) -> int:
    code = _load_code(args.code)
    word = _load_word(args.word, code)
    if args.approach == "oracle":
        message, dist, unique = oracle.nearest_codeword(code, word)
        if not unique:
            sys.stdout.write("failure: NOT_UNIQUE\n")
            return 2
        from .code import encode as _encode

        cand = _encode(code, message)
        support = [i for i in range(code.n)
                   if i not in word.erased and cand.symbols[i] != word.symbols[i]]
        locator = Poly.one(code.field)
        for i in support:
            locator = locator.mul(code.moduli[i])
        sys.stdout.write(f"message: {message.to_text()}\n")
        sys.stdout.write(f"locator_tau: {locator.to_text()}\n")
        sys.stderr.write(f"distance={dist} backend={backend.backend_name()}\n")
        return 0
    out = channel.decode_any(code, word, args.approach, args.recovery,
                             args.stop, args.verify)
    if not out.ok:
        sys.stdout.write(f"failure: {out.failure.value}\n")
        sys.stderr.write(
            f"iterations={out.stats.iterations} swaps={out.stats.swaps} "
            f"mults={out.stats.mults} invs={out.stats.invs} "
            f"backend={backend.backend_name()}\n")
        return 2
    sys.stdout.write(f"message: {out.message.to_text()}\n")
    sys.stdout.write(f"locator_tau: {out.error_locator.to_text()}\n")
    sys.stderr.write(
        f"iterations={out.stats.iterations} swaps={out.stats.swaps} "
        f"mults={out.stats.mults} invs={out.stats.invs} "
        f"backend={backend.backend_name()}\n")
    return 0


def _opts_matrix(args):
    approaches = APPROACHES if args.approach == "all" else (args.approach,)
    recoveries = RECOVERIES if args.recovery == "all" else (args.recovery,)
    stops = STOPS if args.stop == "all" else (args.stop,)
    return [SimOptions(a, r, s, args.verify)
            for a in approaches for r in recoveries for s in stops]


def _run_simulation(args):
    code = _load_code(args.code)
    opts = _opts_matrix(args)
    return channel.simulate(code, args.trials, args.erasures,
                            args.error_budget, opts, args.seed)


def cmd_simulate(args) -> int:
    _write_out(args, _run_simulation(args).to_tsv())
    return 0


def cmd_bench(args) -> int:
    if args.backend != "auto":
        backend.set_backend(args.backend)
    t0 = time.perf_counter()
    stats = _run_simulation(args)
    elapsed = time.perf_counter() - t0
    _write_out(args, stats.to_tsv())
    decodes = stats.trials * len(stats.rows)
    rate = decodes / elapsed if elapsed > 0 else float("inf")
    sys.stderr.write(
        f"backend={backend.backend_name()} trials={stats.trials} "
        f"decodes={decodes} wall={elapsed:.3f}s decodes_per_s={rate:.0f}\n")
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="prcodes",
                     description="Polynomial remainder codes: encode, corrupt, "
                                 "decode and simulate")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-code", help="generate a code spec file")
    p.add_argument("--field", required=True, help="field descriptor p[:m[:poly]]")
    p.add_argument("--degrees", help="comma-separated modulus degrees")
    p.add_argument("--rs", help="comma-separated evaluation points (RS code)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen_code)

    p = sub.add_parser("encode", help="encode a message polynomial")
    p.add_argument("--code", required=True)
    p.add_argument("--message", required=True,
                   help="ascending coefficients, e.g. '0 1' for x")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("corrupt", help="apply errors and erasures to a word")
    p.add_argument("--code", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--erase", help="comma-separated positions to erase")
    p.add_argument("--error-pos", help="comma-separated error positions")
    p.add_argument("--error-budget", type=int,
                   help="total degree of random error positions")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_corrupt)

    p = sub.add_parser("decode", help="decode a word")
    p.add_argument("--code", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--approach", default="2",
                   choices=("1", "2", "modified", "oracle"))
    p.add_argument("--recovery", default="remainder", choices=RECOVERIES)
    p.add_argument("--stop", default="adaptive", choices=STOPS)
    p.add_argument("--verify", action="store_true",
                   help="re-encode and consistency-check the result")
    p.set_defaults(func=cmd_decode)

    for name in ("simulate", "bench"):
        p = sub.add_parser(name, help="run seeded decoding trials"
                           + (" with timing" if name == "bench" else ""))
        p.add_argument("--code", required=True)
        p.add_argument("--trials", type=int, default=1000)
        p.add_argument("--erasures", type=int, default=0)
        p.add_argument("--error-budget", type=int, default=0)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--approach", default="all", choices=APPROACHES + ("all",))
        p.add_argument("--recovery", default="all", choices=RECOVERIES + ("all",))
        p.add_argument("--stop", default="all", choices=STOPS + ("all",))
        p.add_argument("--verify", action="store_true")
        p.add_argument("-o", "--output")
        if name == "bench":
            p.add_argument("--backend", default="auto", choices=("auto", "c", "py"))
            p.set_defaults(func=cmd_bench)
        else:
            p.set_defaults(func=cmd_simulate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        sys.stderr.write(f"prcodes: error: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
