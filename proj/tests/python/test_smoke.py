import math

import pytest

import hsvr


def test_generate_and_split():
    full = hsvr.generate_named("sin-2pi-x", 0.0, 2.0, 2001)
    assert len(full) == 2001
    train, test = hsvr.split_alternating(full)
    assert len(train.x) == 1001
    assert len(test.x) == 1000
    assert train.dx == pytest.approx(2 * full.dx)


def test_fft_scales_of_pure_sine():
    full = hsvr.generate_named("sin-2pi-x", 0.0, 2.0, 2001)
    train, _ = hsvr.split_alternating(full)
    est = hsvr.fft_scales(train)
    assert est.method == "fft"
    assert len(est.scales) == 1
    assert est.scales[0] == pytest.approx(1.0 / 6.0, rel=0.01)


def test_train_and_predict_round_trip():
    full = hsvr.generate_named("cos-2pi-x-plus-sin-20pi-x", 0.0, 2.0, 801)
    train_set, test_set = hsvr.split_alternating(full)
    eps = hsvr.epsilon_rule(train_set.y)
    model, reports = hsvr.train(train_set.x, train_set.y, [1 / 6, 1 / 60], eps)
    assert len(model.layers) == 2
    assert len(reports) == 2
    errors = hsvr.layerwise_errors(model, test_set.x, test_set.y)
    assert errors[-1] <= 2 * eps

    clone = hsvr.HsvrModel.from_json(model.to_json())
    assert hsvr.predict(clone, [0.3]) == hsvr.predict(model, [0.3])


def test_pipeline_report():
    full = hsvr.generate_named("sin-20pi-x", 0.0, 2.0, 2001)
    model, est, report = hsvr.run_pipeline(full, "sin-20pi-x")
    assert report.predicted_layers == len(model.layers) == len(est.scales)
    assert report.error_over_epsilon == pytest.approx(
        report.final_error / report.epsilon
    )
    assert report.error_over_epsilon <= 2.0


def test_no_oscillatory_content_raises():
    full = hsvr.generate_named("e-x", 0.0, 2.0, 2001)
    with pytest.raises(hsvr.NoOscillatoryContentError):
        hsvr.dmd_scales(full)


def test_lorenz_epsilon():
    x, _, _ = hsvr.lorenz_trajectory(10.0, 2001)
    train_y = x.y[::4]
    assert hsvr.epsilon_rule(train_y) == pytest.approx(0.314, rel=0.05)
    assert math.isfinite(x.dx)
