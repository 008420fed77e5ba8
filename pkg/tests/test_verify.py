import pytest

from noncross.errors import DomainTooLarge, UnknownSuite
from noncross.verify import SUITES, VerifyOutcome, summary, verify_grid

FAST = [s for s in SUITES if s not in ("family-counts", "theorem1", "prop3k")]


@pytest.mark.parametrize("suite", FAST)
def test_suite_passes(suite):
    outcomes = verify_grid(suite)
    assert outcomes
    assert all(o.status == "pass" for o in outcomes), [o for o in outcomes if o.status == "fail"][:3]


def test_small_bound_of_slow_suites():
    for suite in ("family-counts", "theorem1", "prop3k"):
        assert all(o.status == "pass" for o in verify_grid(suite, max_points=9))


def test_deterministic_order():
    a = verify_grid("theorem3", max_points=8)
    b = verify_grid("theorem3", max_points=8)
    assert [(o.check_id, o.params) for o in a] == [(o.check_id, o.params) for o in b]


def test_type_d_suite_covers_grid():
    cells = {(o.params["n"], o.params["k"]) for o in verify_grid("theorem3")}
    assert {(n, 1) for n in range(2, 6)} | {(2, 2), (3, 2)} <= cells


def test_abs_fibers_grid():
    assert [o.params["n"] for o in verify_grid("abs-fibers")] == [1, 2, 3, 4, 5, 6]


def test_status_and_summary():
    good = VerifyOutcome("x", {}, 3, 3)
    bad = VerifyOutcome("x", {}, 3, 4)
    assert good.status == "pass" and bad.status == "fail"
    assert summary("x", [good, bad]) == "x: 2 checks, 1 pass, 1 fail"
    assert bad.as_dict()["formula_value"] == "3"


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        verify_grid("theorem9")


def test_cap_needs_force():
    with pytest.raises(DomainTooLarge):
        verify_grid("first-two", max_points=12)
    assert verify_grid("abs-fibers", max_points=14, force=True)[-1].params == {"n": 7}
