import math

import pytest

import linfpt


def test_prob_finite():
    assert linfpt.prob_finite(1.0, 1.0) == pytest.approx(0.2699996716773545, abs=1e-12)
    assert linfpt.prob_finite(0.5, 0.5) == pytest.approx(0.9639452436648751, abs=1e-12)


def test_cdf_and_conditional():
    assert linfpt.cdf(1.0, 1.0, 0.0) == 0.0
    assert linfpt.cdf(1.0, 1.0, 1.0) == pytest.approx(0.18081171102353293, abs=1e-10)
    assert linfpt.conditional_cdf(1.0, 1.0, 1.0) == pytest.approx(0.669673818, abs=1e-8)
    # monotone
    prev = 0.0
    for t in [0.1, 0.5, 1.0, 2.0, 5.0]:
        v = linfpt.cdf(1.0, 1.0, t)
        assert v >= prev
        prev = v


def test_density_matches_cdf_slope():
    h = 1e-4
    fd = (
        linfpt.conditional_cdf(1.0, 1.0, 1.0 + h)
        - linfpt.conditional_cdf(1.0, 1.0, 1.0 - h)
    ) / (2 * h)
    assert linfpt.density(1.0, 1.0, 1.0) == pytest.approx(fd, abs=1e-6)


def test_sampling_deterministic_and_calibrated():
    times1, stats1 = linfpt.sample(1.0, 1.0, 5000, seed=42)
    times2, stats2 = linfpt.sample(1.0, 1.0, 5000, seed=42)
    assert times1 == times2
    assert stats1 == stats2
    assert stats1["unresolved_events"] == 0

    finite = [t for t in times1 if math.isfinite(t)]
    frac = len(finite) / len(times1)
    assert abs(frac - 0.27) < 0.03

    ks = linfpt.ks_statistic(finite, 1.0, 1.0)
    assert ks < 1.63 / math.sqrt(len(finite))


def test_unsupported_boundary():
    with pytest.raises(linfpt.UnsupportedBoundaryError):
        linfpt.sample(1.0, 0.0, 1, seed=1)


def test_envelope_and_tails():
    env = linfpt.calibrate_envelope(1.0, 1.0, alpha=0.5)
    assert env["rate"] == 0.5
    assert 0.0 < env["predicted_acceptance"] < 1.0
    assert linfpt.verify_envelope(1.0, 1.0, alpha=0.5, grid=2048) == 0
    assert linfpt.verify_left_tail(1.0, 1.0, n=3)
    assert linfpt.verify_right_tail(1.0, 1.0)
    assert linfpt.tail_index_q(1.0, 1.0, 1.0) == 2
