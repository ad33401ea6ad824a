#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mfgp/inference.hpp"
#include "oracles.hpp"

using namespace mfgp;

namespace {
TrainingSet single_zero() {
    return {Eigen::MatrixXd::Zero(1, 1), Eigen::VectorXd::Zero(1)};
}
Hyperparameters hyper1(double sigma, double beta, double lambda) {
    return {sigma, Eigen::VectorXd::Constant(1, beta), lambda};
}
}  // namespace

TEST_CASE("marginal likelihood of one standardized zero observation") {
    // unit-variance Gaussian log-density at 0
    CHECK(log_marginal_likelihood(single_zero(), hyper1(1, 1, 0)) ==
          doctest::Approx(-0.9189385332046727).epsilon(1e-9));
}

TEST_CASE("log posterior is the likelihood plus the log prior") {
    const TrainingSet t = single_zero();
    const Hyperparameters h = hyper1(1, 1, 1);
    PriorSpec prior;
    const double expected =
        log_marginal_likelihood(t, h) + prior.log_density(log_params_from_hyper(h));
    CHECK(log_posterior(t, h, prior) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("doubling the prior density raises the log posterior by log 2") {
    const TrainingSet t = single_zero();
    const Hyperparameters h = hyper1(1, 1, 1);  // log params all zero
    PriorSpec base;
    base.sigma_loc = std::sqrt(2.0 * std::log(2.0));  // N(loc,1) at 0 is half of N(0,1) at 0
    PriorSpec doubled = base;
    doubled.sigma_loc = 0.0;
    CHECK(log_posterior(t, h, doubled) - log_posterior(t, h, base) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("unfactorizable covariance yields the rejection sentinel") {
    // amplitude large enough that sigma^2 overflows the kernel
    const double lp = log_posterior(single_zero(), hyper1(1e200, 1, 0), PriorSpec{});
    CHECK(std::isinf(lp));
    CHECK(lp < 0);
}

TEST_CASE("metropolis acceptance follows min(1, exp(delta))") {
    CHECK(acceptance_probability(0.0, 0.0) == 1.0);
    CHECK(acceptance_probability(1.0, 0.0) == 1.0);
    CHECK(acceptance_probability(-0.7, 0.0) == doctest::Approx(std::exp(-0.7)).epsilon(1e-12));
    const double neg_inf = -std::numeric_limits<double>::infinity();
    CHECK(acceptance_probability(neg_inf, 0.0) == 0.0);
    CHECK(acceptance_probability(neg_inf, neg_inf) == 0.0);  // never move to -inf
    CHECK(acceptance_probability(0.0, neg_inf) == 1.0);
}

TEST_CASE("chains are bit-identical for a fixed seed") {
    Rng rng(5);
    const TrainingSet t = oracle::random_train(rng, 8, 1);
    ChainConfig config;
    config.length = 300;
    config.seed = 99;
    const Chain a = run_chain(t, PriorSpec{}, config);
    const Chain b = run_chain(t, PriorSpec{}, config);
    CHECK(a.samples == b.samples);
    CHECK(a.accept_count == b.accept_count);
}

TEST_CASE("burn-in arithmetic") {
    Rng rng(6);
    const TrainingSet t = oracle::random_train(rng, 6, 1);
    ChainConfig config;
    config.length = 1000;
    config.burn_in_fraction = 0.5;
    const Chain chain = run_chain(t, PriorSpec{}, config);
    CHECK(chain.samples.rows() == 1000);
    CHECK(chain.retained().rows() == 500);
    CHECK(chain.accept_count <= 1000);
}

TEST_CASE("chain config validation") {
    Rng rng(7);
    const TrainingSet t = oracle::random_train(rng, 5, 1);
    ChainConfig config;
    config.length = 99;
    CHECK_THROWS_AS(run_chain(t, PriorSpec{}, config), std::invalid_argument);
    config.length = 200;
    config.burn_in_fraction = 1.0;
    CHECK_THROWS_AS(run_chain(t, PriorSpec{}, config), std::invalid_argument);
    config.burn_in_fraction = 0.5;
    config.step_scale = 0.0;
    CHECK_THROWS_AS(run_chain(t, PriorSpec{}, config), std::invalid_argument);
}

TEST_CASE("an all-rejected chain reports a step-scale diagnostic") {
    Rng rng(8);
    const TrainingSet t = oracle::random_train(rng, 5, 1);
    ChainConfig config;
    config.length = 100;
    config.step_scale = 1e8;  // proposals overflow into rejection everywhere
    CHECK_THROWS_WITH_AS(run_chain(t, PriorSpec{}, config),
                         doctest::Contains("step_scale"), std::runtime_error);
}

TEST_CASE("condense takes coordinate-wise medians in log space") {
    Chain chain;
    chain.burn_in_fraction = 0.0;

    SUBCASE("constant chain returns the constant") {
        chain.samples = Eigen::MatrixXd::Zero(5, 3);
        chain.samples.col(0).setConstant(std::log(2.0));
        chain.samples.col(1).setConstant(std::log(0.5));
        chain.samples.col(2).setConstant(std::log(0.1));
        const Hyperparameters h = condense(chain);
        CHECK(h.amplitude == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(h.inv_length_scales[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(h.nugget == doctest::Approx(0.1).epsilon(1e-12));
    }

    SUBCASE("odd-length median picks the middle order statistic") {
        chain.samples = Eigen::MatrixXd::Zero(5, 3);
        for (int i = 0; i < 5; ++i) chain.samples(i, 0) = std::log(5.0 - i);  // 5,4,3,2,1
        const Hyperparameters h = condense(chain);
        CHECK(h.amplitude == doctest::Approx(3.0).epsilon(1e-12));
    }

    SUBCASE("burn-in discards the first half") {
        chain.burn_in_fraction = 0.5;
        chain.samples = Eigen::MatrixXd::Zero(10, 3);
        for (int i = 5; i < 10; ++i) chain.samples(i, 0) = std::log(10.0);
        const Hyperparameters h = condense(chain);
        CHECK(h.amplitude == doctest::Approx(10.0).epsilon(1e-12));
    }

    SUBCASE("invariant under permutation of retained samples") {
        Rng rng(17);
        chain.samples = Eigen::MatrixXd(9, 3);
        for (int i = 0; i < 9; ++i)
            for (int k = 0; k < 3; ++k) chain.samples(i, k) = rng.normal();
        const Hyperparameters a = condense(chain);
        // reverse the rows
        chain.samples = chain.samples.colwise().reverse().eval();
        const Hyperparameters b = condense(chain);
        CHECK(a.amplitude == b.amplitude);
        CHECK(a.inv_length_scales == b.inv_length_scales);
        CHECK(a.nugget == b.nugget);
    }
}

TEST_CASE("default burn-in fraction sits in the usual 20-50% band") {
    const ChainConfig config;
    CHECK(config.burn_in_fraction >= 0.2);
    CHECK(config.burn_in_fraction <= 0.5);
}

TEST_CASE("generate-and-recover on synthetic data from a known process") {
    // data drawn from sigma=1, beta=5, lambda=0.1; medians must land within
    // 1.5 natural-log units of the truth
    Rng rng(derive_seed(0, 99));
    const int n = 40;
    Eigen::MatrixXd X(n, 1);
    for (int i = 0; i < n; ++i) X(i, 0) = rng.uniform01();
    const Hyperparameters truth = hyper1(1.0, 5.0, 0.1);
    TrainingSet probe(X, Eigen::VectorXd::Zero(n));
    const auto chol = jittered_cholesky(covariance_matrix(probe, truth), 1.0);
    Eigen::VectorXd z(n);
    for (int i = 0; i < n; ++i) z[i] = rng.normal();
    TrainingSet train(X, chol.lower * z);

    ChainConfig config;
    config.seed = 0;
    const Hyperparameters est = condense(run_chain(train, PriorSpec{}, config));
    CHECK(std::abs(std::log(est.amplitude)) <= 1.5);
    CHECK(std::abs(std::log(est.inv_length_scales[0]) - std::log(5.0)) <= 1.5);
    CHECK(std::abs(std::log(est.nugget) - std::log(0.1)) <= 1.5);
}
