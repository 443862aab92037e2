"""Acceptance suite: one test per criterion, exact sizes and tolerances.

Every check here is exact (field arithmetic has no rounding); randomized
parts are seeded and deterministic.  Run with `pytest -s` to see one
PASS/FAIL line per criterion.
"""

import itertools
import random
from contextlib import contextmanager

import pytest

from prcodes.channel import corrupt, derive_seed, random_plan
from prcodes.cli import main as cli_main
from prcodes.code import (ReceivedWord, degree_weight, encode, from_residues,
                          to_residues)
from prcodes.decode import (DecodeOptions, decode, extended_gcd1, extended_gcd2,
                            invariant_check_count, invariant_checking_enabled,
                            locator_for, partial_gcd1, partial_gcd2,
                            punctured_modulus)
from prcodes.oracle import decode_modified_transform, nearest_codeword
from prcodes.poly import Poly

OPTION_MATRIX = [(a, r, s)
                 for a in ("1", "2", "modified")
                 for r in ("remainder", "quotient")
                 for s in ("adaptive", "threshold")]


@contextmanager
def criterion(n, desc):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {n}: FAIL - {desc}")
        raise
    print(f"ACCEPTANCE {n}: PASS - {desc}")


def P(field, text):
    return Poly.from_text(field, text)


def decode_any(code, word, approach, recovery, stop, verify=False):
    if approach == "modified":
        return decode_modified_transform(code, word, recovery, stop, verify)
    return decode(code, word, DecodeOptions(approach, recovery, stop, verify))


def all_messages(code):
    q = code.field.q
    for index in range(q ** code.K):
        coeffs = []
        v = index
        for _ in range(code.K):
            v, c = divmod(v, q)
            coeffs.append(c)
        yield Poly(code.field, coeffs)


def nonzero_residues(code, pos):
    q = code.field.q
    d = code.moduli[pos].degree
    for value in range(1, q ** d):
        coeffs = []
        v = value
        for _ in range(d):
            v, c = divmod(v, q)
            coeffs.append(c)
        yield Poly(code.field, coeffs)


def bounded_cases(code):
    """All (message, word, pattern) cases for criterion 3: patterns with
    (erasure degree, error degree) in {(0,0),(0,1),(1,0),(2,0)}."""
    patterns = [(frozenset(), {})]
    for pos in range(code.n):
        for delta in nonzero_residues(code, pos):
            patterns.append((frozenset(), {pos: delta}))
    for pos in range(code.n):
        patterns.append((frozenset({pos}), {}))
    for pair in itertools.combinations(range(code.n), 2):
        patterns.append((frozenset(pair), {}))
    for message in all_messages(code):
        clean = encode(code, message)
        for erased, deltas in patterns:
            symbols = list(clean.symbols)
            for pos, delta in deltas.items():
                symbols[pos] = symbols[pos].add(delta)
            yield message, ReceivedWord(symbols, erased)


def planted_trials(code, count, seed, min_erasures=0, within_bound_only=False):
    """Seeded corruption trials with the exact planted data exposed."""
    rng = random.Random(seed)
    budget = code.N - code.K
    trials = []
    while len(trials) < count:
        trial_rng = random.Random(derive_seed(rng.getrandbits(63), len(trials)))
        max_rho = budget if within_bound_only else min(code.n, budget + 1)
        n_erase = trial_rng.randint(min_erasures, max(min_erasures, min(code.n - 1, max_rho)))
        erased = frozenset(trial_rng.sample(range(code.n), n_erase))
        rho = sum(code.moduli[i].degree for i in erased)
        if within_bound_only and rho > budget:
            continue
        tau_room = (budget - rho) // 2 if within_bound_only else code.N
        deltas = {}
        used = 0
        free = [i for i in range(code.n) if i not in erased]
        trial_rng.shuffle(free)
        for i in free:
            d = code.moduli[i].degree
            if used + d <= tau_room and trial_rng.random() < 0.5:
                v = trial_rng.randrange(1, code.field.q ** d)
                coeffs = []
                for _ in range(d):
                    v, c = divmod(v, code.field.q)
                    coeffs.append(c)
                deltas[i] = Poly(code.field, coeffs)
                used += d
        message = Poly(code.field,
                       [trial_rng.randrange(code.field.q) for _ in range(code.K)])
        clean = encode(code, message)
        symbols = list(clean.symbols)
        for pos, delta in deltas.items():
            symbols[pos] = symbols[pos].add(delta)
        word = ReceivedWord(symbols, erased)
        diffs = [word.symbols[i].sub(clean.symbols[i]) for i in range(code.n)]
        err = from_residues(code, diffs)
        if err.is_zero:
            continue
        trials.append((message, word, err, erased, deltas))
    return trials


def test_criterion_1_crt_isomorphism(gf2_code, gf256_rs):
    with criterion(1, "CRT transform round trip, exact"):
        for index in range(16):
            a = Poly(gf2_code.field, [(index >> i) & 1 for i in range(4)])
            assert from_residues(gf2_code, to_residues(gf2_code, a)) == a
        rng = random.Random(1001)
        q = gf256_rs.field.q
        for _ in range(10_000):
            a = Poly(gf256_rs.field, [rng.randrange(q) for _ in range(gf256_rs.K)])
            assert from_residues(gf256_rs, to_residues(gf256_rs, a)) == a


def test_criterion_2_distance_bounds(gf2_code, gf5_rs):
    with criterion(2, "degree-weight and Hamming distance bounds"):
        weights = [degree_weight(gf2_code, encode(gf2_code, a).symbols)
                   for a in all_messages(gf2_code) if not a.is_zero]
        assert min(weights) >= 3 > gf2_code.N - gf2_code.K == 2
        words = [encode(gf5_rs, a).symbols for a in all_messages(gf5_rs)]
        hamming = [sum(1 for x, y in zip(u, v) if x != y)
                   for u, v in itertools.combinations(words, 2)]
        assert min(hamming) == gf5_rs.n - gf5_rs.k + 1 == 3


def test_criterion_3_correction_guarantee(gf5_rs):
    with criterion(3, "exhaustive within-bound correction, all option combos"):
        cases = 0
        for message, word in bounded_cases(gf5_rs):
            for approach, recovery, stop in OPTION_MATRIX:
                out = decode_any(gf5_rs, word, approach, recovery, stop)
                assert out.ok, (message, word, approach, recovery, stop)
                assert out.message == message, \
                    (message, word, approach, recovery, stop)
            cases += 1
        assert cases == 25 * (1 + 16 + 4 + 6)


@pytest.mark.parametrize("codename", ["gf2_code", "gf5_rs", "gf256_rs"])
def test_criterion_4_extended_gcd_output(codename, request):
    code = request.getfixturevalue(codename)
    with criterion(4, f"extended GCD identity and locator on {codename}"):
        for message, word, err, erased, deltas in planted_trials(code, 1000, 211):
            lam = locator_for(code, erased)
            masked = lam.mul(err)
            tau = locator_for(code, deltas.keys())
            st1 = extended_gcd1(code, masked)
            assert st1.s.mul(code.full_modulus).add(st1.t.mul(masked)).is_zero
            assert st1.t.monic() == tau
            st2 = extended_gcd2(code, erased, err)
            punctured = punctured_modulus(code, erased)
            assert st2.s.mul(punctured).add(st2.t.mul(err)).is_zero
            assert st2.t.monic() == tau


@pytest.mark.parametrize("codename", ["gf2_code", "gf5_rs", "gf256_rs"])
def test_criterion_5_partial_equals_extended(codename, request):
    code = request.getfixturevalue(codename)
    with criterion(5, f"partial GCD matches extended GCD on {codename}"):
        trials = planted_trials(code, 1000, 223, within_bound_only=True)
        assert len(trials) == 1000
        for message, word, err, erased, deltas in trials:
            lam = locator_for(code, erased)
            ext1 = extended_gcd1(code, lam.mul(err))
            ext2 = extended_gcd2(code, erased, err)
            for stop in ("adaptive", "threshold"):
                par1 = partial_gcd1(code, word, stop)
                par2 = partial_gcd2(code, word, stop)
                assert (par1.s, par1.t, par1.iterations) == \
                    (ext1.s, ext1.t, ext1.iterations)
                assert (par2.s, par2.t, par2.iterations) == \
                    (ext2.s, ext2.t, ext2.iterations)
                assert par1.r == par1.t.mul(lam).mul(message)
                assert par2.r == par2.t.mul(message)


def test_criterion_6_loop_invariant_checks(gf2_code):
    with criterion(6, "engine invariant checks enabled, zero violations"):
        assert invariant_checking_enabled()
        before = invariant_check_count()
        word = encode(gf2_code, P(gf2_code.field, "1 1"))
        symbols = list(word.symbols)
        symbols[0] = symbols[0].add(Poly.one(gf2_code.field))
        decode(gf2_code, ReceivedWord(symbols))
        assert invariant_check_count() > before


def test_criterion_7_cross_decoder_agreement(gf5_rs):
    with criterion(7, "nearest codeword unique and equal to all decoders"):
        for message, word in bounded_cases(gf5_rs):
            best, dist, unique = nearest_codeword(gf5_rs, word)
            assert unique and best == message
            for approach in ("1", "2", "modified"):
                out = decode_any(gf5_rs, word, approach, "remainder", "adaptive")
                assert out.ok and out.message == best


def test_criterion_8_complexity_ordering(gf256_rs):
    with criterion(8, "approach 2 never multiplies more than approach 1"):
        budget = gf256_rs.N - gf256_rs.K
        rng = random.Random(227)
        trials = 0
        while trials < 1000:
            n_erase = rng.randint(1, budget)
            tau_deg = rng.randint(0, (budget - n_erase) // 2)
            seed = derive_seed(229, trials)
            plan = random_plan(gf256_rs, n_erase, tau_deg, seed)
            message = Poly(gf256_rs.field,
                           [rng.randrange(256) for _ in range(gf256_rs.K)])
            word = corrupt(gf256_rs, encode(gf256_rs, message), plan)

            lam = locator_for(gf256_rs, word.erased)
            assert lam.degree >= 1
            punctured = punctured_modulus(gf256_rs, word.erased)
            assert punctured.degree < gf256_rs.full_modulus.degree
            y = from_residues(gf256_rs, word.symbols)
            assert y.degree < lam.mul(y).degree

            for recovery in ("remainder", "quotient"):
                for stop in ("adaptive", "threshold"):
                    m1 = decode(gf256_rs, word,
                                DecodeOptions("1", recovery, stop)).stats.mults
                    m2 = decode(gf256_rs, word,
                                DecodeOptions("2", recovery, stop)).stats.mults
                    assert m2 <= m1
            trials += 1


def test_criterion_9_beyond_bound_robustness(gf5_rs):
    with criterion(9, "beyond-bound corruptions: typed outcomes only"):
        combos = [(a, r, s) for a in ("1", "2", "modified")
                  for r in ("remainder", "quotient")
                  for s in ("adaptive", "threshold")]
        counts = {"success": 0, "failure": 0, "miscorrection": 0}
        verified_miscorrections = 0
        rng = random.Random(233)
        for i in range(10_000):
            seed = derive_seed(239, i)
            n_erase = rng.choice((0, 1))
            plan = random_plan(gf5_rs, n_erase, 2, seed)  # 2*2 + rho > 2
            assert not plan.within_bound(gf5_rs)
            message = Poly(gf5_rs.field,
                           [rng.randrange(5) for _ in range(gf5_rs.K)])
            word = corrupt(gf5_rs, encode(gf5_rs, message), plan)
            approach, recovery, stop = combos[i % len(combos)]
            out = decode_any(gf5_rs, word, approach, recovery, stop)
            if out.ok and out.message == message:
                counts["success"] += 1
            elif not out.ok:
                counts["failure"] += 1
                assert out.failure is not None
            else:
                counts["miscorrection"] += 1

            vout = decode_any(gf5_rs, word, approach, recovery, stop, verify=True)
            if vout.ok and vout.message != message:
                verified_miscorrections += 1
                # an accepted wrong answer must itself be a codeword within
                # the correction bound of the received word
                cand = encode(gf5_rs, vout.message)
                weight = sum(gf5_rs.moduli[j].degree for j in range(gf5_rs.n)
                             if j not in word.erased
                             and cand.symbols[j] != word.symbols[j])
                rho = sum(gf5_rs.moduli[j].degree for j in word.erased)
                assert 2 * weight + rho <= gf5_rs.N - gf5_rs.K
        assert sum(counts.values()) == 10_000
        print(f"  beyond-bound outcomes: {counts}, "
              f"verify-accepted miscorrections: {verified_miscorrections}")


def run_cli(capsys, *argv):
    rc = cli_main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_criterion_10_cli_end_to_end(gf2_code, tmp_path, capsys):
    with criterion(10, "CLI worked scenarios under every option combination"):
        from prcodes.formats import dump_code

        code_path = tmp_path / "code.txt"
        code_path.write_text(dump_code(gf2_code))
        word_path = tmp_path / "word.txt"
        rc, _, _ = run_cli(capsys, "encode", "--code", str(code_path),
                           "--message", "0 1", "-o", str(word_path))
        assert rc == 0

        single = tmp_path / "single.txt"
        rc, _, _ = run_cli(capsys, "corrupt", "--code", str(code_path),
                           "--word", str(word_path), "--error-pos", "0",
                           "--seed", "1", "-o", str(single))
        assert rc == 0
        erased = tmp_path / "erased.txt"
        rc, _, _ = run_cli(capsys, "corrupt", "--code", str(code_path),
                           "--word", str(word_path), "--erase", "0,1",
                           "-o", str(erased))
        assert rc == 0

        for scenario, want_locator in ((single, "0 1"), (erased, "1")):
            for approach in ("1", "2", "modified"):
                for recovery in ("remainder", "quotient"):
                    for stop in ("adaptive", "threshold"):
                        for verify in (False, True):
                            argv = ["decode", "--code", str(code_path),
                                    "--word", str(scenario),
                                    "--approach", approach,
                                    "--recovery", recovery, "--stop", stop]
                            if verify:
                                argv.append("--verify")
                            rc, out, _ = run_cli(capsys, *argv)
                            assert rc == 0, argv
                            lines = out.splitlines()
                            assert lines[0] == "message: 0 1"
                            assert lines[1] == f"locator_tau: {want_locator}"
            rc, out, _ = run_cli(capsys, "decode", "--code", str(code_path),
                                 "--word", str(scenario), "--approach", "oracle")
            assert rc == 0
            assert out.splitlines()[0] == "message: 0 1"
