#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "mfgp/gp.hpp"
#include "mfgp/types.hpp"

namespace mfgp {

/// Independent Gaussian priors on the log hyperparameters. One
/// (location, scale) pair per parameter group; the beta prior applies to
/// every input dimension. Defaults assume inputs in [0,1] and
/// standardized outputs.
struct PriorSpec {
    double sigma_loc = 0.0;
    double sigma_scale = 1.0;
    double beta_loc = 0.0;
    double beta_scale = 1.5;
    double lambda_loc = -3.0;
    double lambda_scale = 1.0;

    void validate() const;

    /// Log prior density of a log-parameter vector [log sigma, log beta_1..d, log lambda].
    double log_density(const Eigen::Ref<const Eigen::VectorXd>& log_params) const;
};

struct ChainConfig {
    int length = 2000;              // main-phase samples stored
    double burn_in_fraction = 0.5;  // fraction of stored samples discarded
    double step_scale = 0.25;       // initial proposal sd in log space
    std::uint64_t seed = 0;
    int adapt_rounds = 10;          // pre-phase rounds tuning step_scale
    int adapt_round_length = 50;
};

/// Random-walk Metropolis chain over log hyperparameters.
struct Chain {
    Eigen::MatrixXd samples;        // M x p, log space
    int accept_count = 0;
    double burn_in_fraction = 0.5;

    /// Post-burn-in block: the last M - floor(f*M) rows.
    Eigen::MatrixXd retained() const;
};

/// Gaussian marginal log-likelihood -1/2 y'K^-1 y - 1/2 log|K| - N/2 log 2pi,
/// with K factorized under the jitter policy.
double log_marginal_likelihood(const TrainingSet& train, const Hyperparameters& hyper);

/// Marginal log-likelihood plus log prior. Returns -infinity when the
/// covariance cannot be factorized (the proposal is rejected, never fatal).
double log_posterior(const TrainingSet& train, const Hyperparameters& hyper,
                     const PriorSpec& prior);

/// Metropolis acceptance probability min(1, exp(lp_proposed - lp_current))
/// for a symmetric proposal.
double acceptance_probability(double lp_proposed, double lp_current);

/// Conversions between Hyperparameters and the chain's log-space layout.
Eigen::VectorXd log_params_from_hyper(const Hyperparameters& hyper);
Hyperparameters hyper_from_log_params(const Eigen::Ref<const Eigen::VectorXd>& log_params);

/// Run random-walk Metropolis in log space. A short adaptation pre-phase
/// tunes the step scale toward 25-40% acceptance, then freezes it; only
/// frozen-step samples are stored. Deterministic for a fixed seed.
Chain run_chain(const TrainingSet& train, const PriorSpec& prior, const ChainConfig& config);

/// Coordinate-wise median of the post-burn-in samples, mapped back from
/// log space. Known limitation: a multi-modal posterior is not represented
/// well by its median, and no mitigation is attempted.
Hyperparameters condense(const Chain& chain);

}  // namespace mfgp
