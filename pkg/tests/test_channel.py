import pytest

from prcodes.channel import (CorruptionPlan, SimOptions, corrupt, derive_seed,
                             make_plan, random_plan, simulate)
from prcodes.code import ReceivedWord, encode
from prcodes.poly import Poly

ALL_SIM_OPTS = [SimOptions(a, r, s)
                for a in ("1", "2", "modified")
                for r in ("remainder", "quotient")
                for s in ("adaptive", "threshold")]


def P(field, text):
    return Poly.from_text(field, text)


def test_corrupt_examples(gf2_code, gf2):
    x = P(gf2, "0 1")
    w = encode(gf2_code, x)
    noop = make_plan(gf2_code, set(), {})
    assert corrupt(gf2_code, w, noop) == w

    plan = make_plan(gf2_code, set(), {0: Poly.one(gf2)})
    out = corrupt(gf2_code, w, plan)
    assert out.symbols[0] == Poly.one(gf2)
    assert out.symbols[1:] == w.symbols[1:]

    plan = make_plan(gf2_code, {0, 1}, {})
    out = corrupt(gf2_code, w, plan)
    assert out.erased == frozenset({0, 1})
    assert out.symbols[0].is_zero and out.symbols[1].is_zero


def test_plan_validation(gf2_code, gf2):
    with pytest.raises(ValueError):
        make_plan(gf2_code, {0}, {0: Poly.one(gf2)})   # overlap
    with pytest.raises(ValueError):
        make_plan(gf2_code, set(), {1: Poly.zero(gf2)})  # zero delta
    with pytest.raises(ValueError):
        make_plan(gf2_code, {5}, {})                   # out of range
    with pytest.raises(ValueError):
        make_plan(gf2_code, set(), {2: P(gf2, "0 0 1")})  # unreduced delta
    with pytest.raises(ValueError):
        CorruptionPlan(frozenset(), ((1, Poly.one(gf2)), (0, Poly.one(gf2))))
    w = encode(gf2_code, P(gf2, "0 1"))
    erased = ReceivedWord(list(w.symbols), {0})
    with pytest.raises(ValueError):
        corrupt(gf2_code, erased, make_plan(gf2_code, set(), {}))


def test_plan_budget_fields(gf5_rs, gf5):
    plan = make_plan(gf5_rs, {0}, {1: P(gf5, "2")})
    assert plan.erasure_degree(gf5_rs) == 1
    assert plan.error_degree(gf5_rs) == 1
    assert not plan.within_bound(gf5_rs)   # 2*1 + 1 > 2
    plan = make_plan(gf5_rs, {0}, {})
    assert plan.within_bound(gf5_rs)       # 2*0 + 1 <= 2


def test_random_plan_determinism(gf5_rs):
    a = random_plan(gf5_rs, 1, 1, seed=99)
    b = random_plan(gf5_rs, 1, 1, seed=99)
    assert a == b
    c = random_plan(gf5_rs, 1, 1, seed=100)
    assert isinstance(c, CorruptionPlan)


def test_random_plan_budgets(gf5_rs, gf2_code):
    empty = random_plan(gf5_rs, 0, 0, seed=1)
    assert not empty.erasures and not empty.errors
    plan = random_plan(gf5_rs, 1, 0, seed=2)
    assert plan.within_bound(gf5_rs)
    plan = random_plan(gf5_rs, 0, 2, seed=3)
    assert plan.error_degree(gf5_rs) == 2
    # degree-exact budgets respect mixed modulus degrees
    plan = random_plan(gf2_code, 0, 2, seed=4)
    assert plan.error_degree(gf2_code) == 2
    with pytest.raises(ValueError):
        random_plan(gf5_rs, 5, 0, seed=1)
    with pytest.raises(ValueError):
        random_plan(gf5_rs, 0, 9, seed=1)


def test_random_plan_explicit_positions(gf5_rs):
    plan = random_plan(gf5_rs, {1, 3}, 1, seed=5)
    assert plan.erasures == frozenset({1, 3})
    assert all(p not in plan.erasures for p, _ in plan.errors)


def test_derive_seed_is_stable():
    assert derive_seed(42, 0) == derive_seed(42, 0)
    assert derive_seed(42, 0) != derive_seed(42, 1)
    assert derive_seed(41, 5) != derive_seed(42, 5)


def test_simulate_within_bound_all_success(gf5_rs):
    # single random error per trial: within bound (2*1 + 0 <= N - K = 2),
    # and every option combination sees every trial
    trials = 10_000
    stats = simulate(gf5_rs, trials, 0, 1, ALL_SIM_OPTS, master_seed=7)
    for row in stats.rows:
        assert row.trials == trials
        assert row.successes == trials
        assert row.failures == row.miscorrections == 0
        assert row.trials == row.successes + row.failures + row.miscorrections


def test_simulate_zero_budget_skips_the_loop(gf5_rs):
    opts = [SimOptions("1"), SimOptions("2")]
    stats = simulate(gf5_rs, 50, 0, 0, opts, master_seed=3)
    for row in stats.rows:
        assert row.successes == 50
        assert row.iter_max == 0 and row.iter_sum == 0


def test_simulate_deterministic_tsv(gf5_rs):
    opts = [SimOptions("1", "remainder", "adaptive"),
            SimOptions("2", "quotient", "threshold")]
    a = simulate(gf5_rs, 120, 1, 0, opts, master_seed=11).to_tsv()
    b = simulate(gf5_rs, 120, 1, 0, opts, master_seed=11).to_tsv()
    assert a == b
    header = a.splitlines()[0].split("\t")
    assert header == ["approach", "recovery", "stop", "trials", "successes",
                      "failures", "miscorrections", "mean_iter", "mean_mults"]
    assert len(a.splitlines()) == 3


def test_simulate_erasure_heavy_cost_ordering(gf5_rs):
    opts = [SimOptions("1", "quotient", "adaptive"),
            SimOptions("2", "quotient", "adaptive")]
    stats = simulate(gf5_rs, 200, 2, 0, opts, master_seed=13)
    by_approach = {row.approach: row for row in stats.rows}
    assert by_approach["2"].mean_mults <= by_approach["1"].mean_mults


def test_simulate_beyond_bound_classifies_every_trial(gf5_rs):
    opts = [SimOptions("1", verify=True), SimOptions("2", verify=True),
            SimOptions("modified", verify=True)]
    stats = simulate(gf5_rs, 400, 0, 2, opts, master_seed=17)
    for row in stats.rows:
        assert row.trials == 400
        assert row.successes + row.failures + row.miscorrections == 400
        assert row.failures > 0  # beyond-bound patterns mostly fail


def test_simulate_rejects_duplicate_opts(gf5_rs):
    with pytest.raises(ValueError):
        simulate(gf5_rs, 10, 0, 0, [SimOptions("1"), SimOptions("1")], 1)
