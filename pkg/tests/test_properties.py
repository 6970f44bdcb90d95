from superproj.properties import (
    ALL_SUITES,
    exp_log_round_trips,
    suite_iso_invariance,
    suite_jacobi,
    suite_leibniz,
    suite_sign_laws,
    suite_stabilization,
)

SEED = 7
CASES = 1000
FAST_CASES = 120


def test_sign_laws_full():
    assert suite_sign_laws(SEED, CASES)["failures"] == 0


def test_jacobi_full():
    assert suite_jacobi(SEED, CASES)["failures"] == 0


def test_leibniz_full():
    assert suite_leibniz(SEED, CASES)["failures"] == 0


def test_stabilization_full():
    assert suite_stabilization(SEED, CASES)["failures"] == 0


def test_iso_invariance_full():
    assert suite_iso_invariance(SEED, CASES)["failures"] == 0


def test_seed_reproducibility():
    for suite in ALL_SUITES:
        assert suite(123, FAST_CASES) == suite(123, FAST_CASES)


def test_different_seeds_still_pass():
    for seed in (0, 1, 99):
        assert suite_sign_laws(seed, FAST_CASES)["failures"] == 0


def test_exp_log_round_trips():
    report = exp_log_round_trips(20260823, 500, m_max=6, depth_max=3)
    assert report == {"suite": "exp_log", "cases": 500, "failures": 0}
