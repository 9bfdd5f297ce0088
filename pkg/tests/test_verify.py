import pytest

from frobkernel.verify import CHECKS, Context, check_by_key, run_check

from conftest import context

KEYS = [k for k, _ in CHECKS]
SLOW_AT_21 = {"lemma:converseinclusion"}


@pytest.mark.parametrize("key", KEYS)
@pytest.mark.parametrize("shape", [(1, 1, 2, 1), (1, 1, 3, 1)], ids=str)
def test_ledger_gl11(shape, key):
    res = run_check(context(*shape), key, check_by_key(key))
    assert res.status == "pass" or (res.status == "skip" and key == "coord:leibniz-sign-pinned"
                                    and shape[2] == 2), res.line()


@pytest.mark.slow
@pytest.mark.parametrize("key", KEYS)
def test_ledger_gl11_p2_r2(key):
    res = run_check(context(1, 1, 2, 2), key, check_by_key(key))
    assert res.status in ("pass", "skip"), res.line()


@pytest.mark.slow
@pytest.mark.parametrize("key", [k for k in KEYS if k not in SLOW_AT_21])
def test_ledger_gl21(key):
    res = run_check(context(2, 1, 2, 1), key, check_by_key(key))
    assert res.status in ("pass", "skip"), res.line()


def test_failures_are_reported_not_raised():
    def broken(ctx):
        raise RuntimeError("boom")

    res = run_check(Context(1, 1, 2), "x", broken)
    assert res.status == "fail" and "boom" in res.detail
    assert res.line().startswith("x: fail")


def test_skips_outside_gl11():
    res = run_check(context(2, 1, 2, 1), "thm:center", check_by_key("thm:center"))
    assert res.status == "skip"


def test_unique_keys():
    assert len(KEYS) == len(set(KEYS))
