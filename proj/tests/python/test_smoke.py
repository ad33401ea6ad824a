"""Smoke tests for the Python bindings: each main operation is reachable and
returns values consistent with the C++ suite's frozen constants."""

import math

import numpy as np
import pytest

import mfgp


def test_kernel_and_covariance():
    h = mfgp.Hyperparameters(1.0, np.array([1.0]), 0.0)
    assert math.isclose(
        mfgp.kernel_eval(np.array([0.0]), np.array([1.0]), h),
        math.exp(-1.0),
        rel_tol=1e-12,
    )
    train = mfgp.TrainingSet(np.array([[0.0], [1.0]]), np.array([0.0, 1.0]))
    K = mfgp.covariance_matrix(train, h)
    assert K.shape == (2, 2)
    assert K[0, 0] == pytest.approx(1.0)


def test_benchmark_values_and_domains():
    assert mfgp.forrester_high(0.0) == pytest.approx(3.0272099812317130, rel=1e-12)
    assert mfgp.forrester_low(0.5) == pytest.approx(-6.4544215439045910, rel=1e-12)
    assert mfgp.park_high(np.array([1.0, 0.0, 0.0, 1.0])) == pytest.approx(
        4.0 * math.e, rel=1e-12
    )
    with pytest.raises(ValueError):
        mfgp.forrester_high(1.5)
    with pytest.raises(ValueError):
        mfgp.park_high(np.array([0.0, 0.5, 0.5, 0.5]))


def test_gp_fit_and_predict():
    x = np.linspace(0.0, 1.0, 10).reshape(-1, 1)
    y = np.sin(4.0 * x[:, 0])
    train = mfgp.TrainingSet(x, y)

    config = mfgp.ChainConfig()
    config.length = 400
    config.seed = 3
    chain = mfgp.run_chain(train, mfgp.PriorSpec(), config)
    assert chain.samples.shape == (400, 3)
    assert 0 < chain.accept_count <= 400

    gp = mfgp.CondensedGP(train, mfgp.condense(chain))
    at_train = gp.predict(x[0])
    assert at_train.mean == pytest.approx(y[0], abs=0.2)
    far = gp.predict(np.array([80.0]))
    assert far.variance >= at_train.variance


def test_multifidelity_model_and_selectors():
    rng = np.random.default_rng(0)
    x_low = rng.uniform(size=(6, 1))
    x_high = rng.uniform(size=(3, 1))
    d_eta = mfgp.TrainingSet(x_low, np.array([mfgp.forrester_low(v) for v in x_low[:, 0]]))
    d_y = mfgp.TrainingSet(x_high, np.array([mfgp.forrester_high(v) for v in x_high[:, 0]]))

    config = mfgp.ChainConfig()
    config.length = 300
    config.seed = 5
    model = mfgp.fit_mf(d_eta, d_y, mfgp.PriorSpec(), config)

    p = mfgp.predict_mf(model, np.array([0.5]))
    assert p.var_total == pytest.approx(p.var_eta + p.var_delta)

    bel = mfgp.believer_variance(
        model, np.array([0.5]), np.array([0.5]), mfgp.FidelityLevel.Low
    )
    assert bel <= p.var_total + 1e-8

    K = mfgp.assemble_blocked(model)
    assert K.shape == (3 + 3 + 6, 3 + 3 + 6)
    assert np.allclose(K, K.T)

    pool = mfgp.CandidatePool(rng.uniform(size=(10, 1)), rng.uniform(size=(10, 1)))
    cost = mfgp.CostModel(1.0, 5.0)
    for select in (mfgp.select_mf_ucr, mfgp.select_if_ucr, mfgp.select_if_ucr_bel):
        decision = select(model, pool, cost)
        assert decision.level in (mfgp.FidelityLevel.Low, mfgp.FidelityLevel.High)
        assert 0 <= decision.pool_row < 10
        assert math.isfinite(decision.score)


def test_experiment_roundtrip(tmp_path):
    cfg = mfgp.ExperimentConfig()
    cfg.problem = "forrester"
    cfg.strategy = mfgp.Strategy.IfUcr
    cfg.iterations = 2
    cfg.replications = 2
    cfg.pool_size = 8
    cfg.holdout_size = 6
    cfg.chain_length = 200
    cfg.seed = 11

    result = mfgp.run_experiment(cfg)
    assert len(result.records) == 4
    summary = mfgp.summarize(result.records, cfg)
    assert summary[-1].iteration == 2

    prefix = str(tmp_path / "run_")
    mfgp.emit_results(result, summary, prefix)
    back = mfgp.read_iteration_records(prefix + "iterations.csv")
    assert len(back) == len(result.records)
    assert back[0].cumulative_cost == result.records[0].cumulative_cost

    again = mfgp.run_experiment(cfg)
    assert [r.rmse for r in again.records] == [r.rmse for r in result.records]


def test_fluidized_bed_loader(tmp_path):
    records = mfgp.synthetic_fluidized_bed(0)
    assert len(records) == 28
    path = str(tmp_path / "bed.csv")
    mfgp.write_fluidized_bed(path, records)
    loaded = mfgp.load_fluidized_bed(path)
    assert len(loaded) == 28
    assert loaded[3].t_model == records[3].t_model
