import numpy as np
import pytest

from trimatch.bound import (
    BoundReport,
    certify_below,
    default_lambda_grid,
    eval_F,
    eval_F_batch,
    eval_F_lambda,
    maximize_F,
    maximize_F_lambda,
    symmetry_images,
)

ZETA = 0.695347
ARGMAX = (ZETA, ZETA, ZETA, ZETA, 1.0, 1.0, 1.0, 1.0)


def test_zero_point():
    assert eval_F([0.0] * 8) == 0.0


def test_all_ones_closed_form():
    assert abs(eval_F([1.0] * 8) - 12 / 9**1.25) < 1e-14


def test_reported_maximum_value():
    assert abs(eval_F(ARGMAX) - 0.970247) < 1e-5


def test_domain_validation():
    with pytest.raises(ValueError):
        eval_F([1.5] + [0.5] * 7)
    with pytest.raises(ValueError):
        eval_F([-0.1] + [0.5] * 7)
    with pytest.raises(ValueError):
        eval_F([0.5] * 7)


def test_batch_matches_scalar():
    rng = np.random.default_rng(0)
    pts = rng.random((64, 8))
    vals = eval_F_batch(pts)
    for p, v in zip(pts, vals):
        assert abs(eval_F(p) - v) < 1e-15


def test_symmetry_invariance():
    rng = np.random.default_rng(1)
    for _ in range(16):
        p = tuple(rng.random(8))
        base = eval_F(p)
        images = symmetry_images(p)
        assert len(images) == 8
        for img in images:
            assert abs(eval_F(img) - base) < 1e-14


def test_nonnegative_and_finite():
    rng = np.random.default_rng(2)
    vals = eval_F_batch(rng.random((2000, 8)))
    assert (vals >= 0).all() and np.isfinite(vals).all()


def test_lambda_one_reduces_to_eval_F():
    rng = np.random.default_rng(3)
    for _ in range(8):
        p = rng.random(8)
        assert abs(eval_F_lambda(p, 1.0) - eval_F(p)) < 1e-15


def test_lambda_scaling_identity():
    rng = np.random.default_rng(4)
    lam = 0.7
    for _ in range(8):
        p = rng.random(8) * lam**0.25
        assert abs(eval_F_lambda(p, lam) - lam**0.25 * eval_F(p)) < 1e-14


@pytest.fixture(scope="module")
def default_report() -> BoundReport:
    return maximize_F()


def test_maximize_recovers_appendix_value(default_report):
    assert 0.9701 <= default_report.max_value <= 0.9703


def test_maximize_argmax_location(default_report):
    diffs = [
        max(abs(a - b) for a, b in zip(img, ARGMAX))
        for img in symmetry_images(default_report.argmax)
    ]
    assert min(diffs) <= 1e-3


def test_maximize_margin_and_certification(default_report):
    assert default_report.margin > 0
    assert default_report.max_value < 0.971
    assert default_report.certified
    assert default_report.cert_cells > 0


def test_report_value_is_reevaluated(default_report):
    assert default_report.max_value == eval_F(default_report.argmax)


def test_maximum_dominates_probes(default_report):
    rng = np.random.default_rng(5)
    probes = rng.random((5000, 8))
    assert (eval_F_batch(probes) <= default_report.max_value + 1e-9).all()


def test_certify_rejects_unreachable_threshold():
    ok, _ = certify_below(0.9)  # true max is above: must refuse
    assert not ok


def test_lambda_grid_shape():
    grid = default_lambda_grid()
    assert len(grid) == 32
    assert all(0.01 < x <= 1.077 + 1e-12 for x in grid)
    assert grid == sorted(grid)


def test_sweep_endpoint_below_one():
    rep = maximize_F_lambda(1.077)
    assert rep.max_value < 1.0
    assert rep.threshold == 1.0
    assert rep.margin > 0


def test_half_activity_below_unit_activity(default_report):
    rep = maximize_F_lambda(0.5)
    assert rep.max_value < default_report.max_value


def test_parameter_validation():
    with pytest.raises(ValueError):
        maximize_F(grid_steps=1)
    with pytest.raises(ValueError):
        maximize_F(restarts=0)
    with pytest.raises(ValueError):
        maximize_F(tol=0)
    with pytest.raises(ValueError):
        eval_F_lambda([0.5] * 8, 0)
