#include "mfgp/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "mfgp/rng.hpp"

namespace mfgp {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double normal_log_pdf(double x, double loc, double scale) {
    const double z = (x - loc) / scale;
    return -0.5 * z * z - std::log(scale) - 0.5 * std::log(2.0 * std::numbers::pi);
}

double median_of(std::vector<double> v) {
    const std::size_t n = v.size();
    std::sort(v.begin(), v.end());
    if (n % 2 == 1) return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

void PriorSpec::validate() const {
    if (!(sigma_scale > 0.0) || !(beta_scale > 0.0) || !(lambda_scale > 0.0))
        throw std::invalid_argument("PriorSpec: prior scales must be positive");
}

double PriorSpec::log_density(const Eigen::Ref<const Eigen::VectorXd>& log_params) const {
    validate();
    const Eigen::Index p = log_params.size();
    if (p < 3) throw std::invalid_argument("PriorSpec::log_density: need at least 3 parameters");
    double lp = normal_log_pdf(log_params[0], sigma_loc, sigma_scale);
    for (Eigen::Index k = 1; k < p - 1; ++k)
        lp += normal_log_pdf(log_params[k], beta_loc, beta_scale);
    lp += normal_log_pdf(log_params[p - 1], lambda_loc, lambda_scale);
    return lp;
}

Eigen::MatrixXd Chain::retained() const {
    const Eigen::Index m = samples.rows();
    const Eigen::Index start = static_cast<Eigen::Index>(
        std::floor(burn_in_fraction * static_cast<double>(m)));
    return samples.bottomRows(m - start);
}

double log_marginal_likelihood(const TrainingSet& train, const Hyperparameters& hyper) {
    const auto chol = jittered_cholesky(covariance_matrix(train, hyper),
                                        hyper.amplitude * hyper.amplitude);
    const Eigen::VectorXd v =
        chol.lower.triangularView<Eigen::Lower>().solve(train.outputs);
    const double log_det = 2.0 * chol.lower.diagonal().array().log().sum();
    const double n = static_cast<double>(train.size());
    return -0.5 * v.squaredNorm() - 0.5 * log_det - 0.5 * n * std::log(2.0 * std::numbers::pi);
}

double log_posterior(const TrainingSet& train, const Hyperparameters& hyper,
                     const PriorSpec& prior) {
    double lp;
    try {
        lp = log_marginal_likelihood(train, hyper);
    } catch (const NumericalError&) {
        return kNegInf;  // rejection sentinel
    }
    lp += prior.log_density(log_params_from_hyper(hyper));
    if (std::isnan(lp)) return kNegInf;
    return lp;
}

double acceptance_probability(double lp_proposed, double lp_current) {
    if (std::isinf(lp_proposed) && lp_proposed < 0) return 0.0;  // never move to -inf
    if (lp_proposed >= lp_current) return 1.0;
    return std::exp(lp_proposed - lp_current);
}

Eigen::VectorXd log_params_from_hyper(const Hyperparameters& hyper) {
    const Eigen::Index d = hyper.dim();
    Eigen::VectorXd lp(d + 2);
    lp[0] = std::log(hyper.amplitude);
    for (Eigen::Index k = 0; k < d; ++k) lp[1 + k] = std::log(hyper.inv_length_scales[k]);
    lp[d + 1] = std::log(hyper.nugget);
    return lp;
}

Hyperparameters hyper_from_log_params(const Eigen::Ref<const Eigen::VectorXd>& log_params) {
    const Eigen::Index p = log_params.size();
    if (p < 3) throw std::invalid_argument("hyper_from_log_params: need at least 3 parameters");
    const double sigma = std::exp(log_params[0]);
    Eigen::VectorXd beta = log_params.segment(1, p - 2).array().exp();
    const double lambda = std::exp(log_params[p - 1]);
    return Hyperparameters(sigma, std::move(beta), lambda);
}

namespace {

// Log posterior of a log-space point; -inf for anything the model cannot
// represent (overflowing exp, zero amplitude, failed factorization).
double log_posterior_at(const TrainingSet& train, const PriorSpec& prior,
                        const Eigen::VectorXd& log_params) {
    if (!log_params.allFinite()) return kNegInf;
    const double sigma = std::exp(log_params[0]);
    if (!std::isfinite(sigma) || sigma <= 0.0) return kNegInf;
    const double lambda = std::exp(log_params[log_params.size() - 1]);
    if (!std::isfinite(lambda)) return kNegInf;
    for (Eigen::Index k = 1; k < log_params.size() - 1; ++k)
        if (!std::isfinite(std::exp(log_params[k]))) return kNegInf;
    return log_posterior(train, hyper_from_log_params(log_params), prior);
}

}  // namespace

Chain run_chain(const TrainingSet& train, const PriorSpec& prior, const ChainConfig& config) {
    prior.validate();
    if (config.length < 100)
        throw std::invalid_argument("run_chain: chain length must be at least 100");
    if (!(config.burn_in_fraction >= 0.0) || !(config.burn_in_fraction < 1.0))
        throw std::invalid_argument("run_chain: burn_in_fraction must lie in [0, 1)");
    if (!(config.step_scale > 0.0))
        throw std::invalid_argument("run_chain: step_scale must be positive");

    const Eigen::Index d = train.dim();
    const Eigen::Index p = d + 2;
    Rng rng(config.seed);

    // Start at the prior locations.
    Eigen::VectorXd current(p);
    current[0] = prior.sigma_loc;
    for (Eigen::Index k = 0; k < d; ++k) current[1 + k] = prior.beta_loc;
    current[p - 1] = prior.lambda_loc;
    double lp_current = log_posterior_at(train, prior, current);

    double step = config.step_scale;
    Eigen::VectorXd proposal(p);

    auto metropolis_step = [&]() -> bool {
        for (Eigen::Index k = 0; k < p; ++k) proposal[k] = current[k] + step * rng.normal();
        const double lp_prop = log_posterior_at(train, prior, proposal);
        const double u = rng.uniform01();
        if (u < acceptance_probability(lp_prop, lp_current)) {
            current = proposal;
            lp_current = lp_prop;
            return true;
        }
        return false;
    };

    // Adaptation pre-phase: tune the step scale toward 25-40% acceptance,
    // then freeze it so the main phase keeps detailed balance.
    for (int round = 0; round < config.adapt_rounds; ++round) {
        int accepted = 0;
        for (int i = 0; i < config.adapt_round_length; ++i)
            if (metropolis_step()) ++accepted;
        const double rate = static_cast<double>(accepted) / config.adapt_round_length;
        if (rate < 0.25)
            step *= 0.7;
        else if (rate > 0.40)
            step *= 1.4;
        else
            break;
    }

    Chain chain;
    chain.samples.resize(config.length, p);
    chain.burn_in_fraction = config.burn_in_fraction;
    for (int i = 0; i < config.length; ++i) {
        if (metropolis_step()) ++chain.accept_count;
        chain.samples.row(i) = current.transpose();
    }
    if (chain.accept_count == 0)
        throw std::runtime_error(
            "run_chain: no proposal was accepted; decrease step_scale (frozen at " +
            std::to_string(step) + ") or check the data scaling");
    return chain;
}

Hyperparameters condense(const Chain& chain) {
    const Eigen::MatrixXd kept = chain.retained();
    if (kept.rows() == 0)
        throw std::invalid_argument("condense: post-burn-in segment is empty");
    Eigen::VectorXd med(kept.cols());
    std::vector<double> col(static_cast<std::size_t>(kept.rows()));
    for (Eigen::Index k = 0; k < kept.cols(); ++k) {
        for (Eigen::Index i = 0; i < kept.rows(); ++i) col[static_cast<std::size_t>(i)] = kept(i, k);
        med[k] = median_of(col);
    }
    return hyper_from_log_params(med);
}

}  // namespace mfgp
