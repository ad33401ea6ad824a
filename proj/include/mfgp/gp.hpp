#pragma once

#include <Eigen/Dense>

#include "mfgp/types.hpp"

namespace mfgp {

/// Squared-exponential covariance between two points:
///   sigma^2 * exp(-sum_k beta_k (a_k - b_k)^2)
/// plus lambda^2 when `same_point` is set (the nugget applies to the
/// diagonal only, never to cross-covariances between distinct observations).
double kernel_eval(const Eigen::Ref<const Eigen::VectorXd>& a,
                   const Eigen::Ref<const Eigen::VectorXd>& b,
                   const Hyperparameters& hyper, bool same_point = false);

/// Kernel matrix K(i,j) = k(x_i, x_j) with the nugget on the diagonal.
/// Exactly symmetric by assembly; no jitter is added here.
Eigen::MatrixXd covariance_matrix(const TrainingSet& train, const Hyperparameters& hyper);

/// Cross-covariance k(X, Z), no nugget anywhere.
Eigen::MatrixXd cross_covariance_matrix(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Z,
                                        const Hyperparameters& hyper);

struct CholeskyResult {
    Eigen::MatrixXd lower;   // L with L L^T = K + jitter I
    double jitter;           // jitter actually applied
};

/// Cholesky with the jitter escalation policy: start at 1e-10 sigma^2,
/// escalate x10 on failure up to 1e-4 sigma^2, then give up.
CholeskyResult jittered_cholesky(const Eigen::MatrixXd& covariance, double sigma_sq);

/// Whether the prior variance of an unseen point includes the nugget.
/// Noisy is the default: a new point is treated as a new noisy observation.
enum class PredictMode { Noisy, Interpolating };

struct Prediction {
    double mean;
    double variance;
};

/// A single-fidelity GP collapsed to one hyperparameter vector, with the
/// Cholesky factor and K^-1 y cached. Immutable after construction.
class CondensedGP {
public:
    CondensedGP(TrainingSet train, Hyperparameters hyper);

    Prediction predict(const Eigen::Ref<const Eigen::VectorXd>& x_star,
                       PredictMode mode = PredictMode::Noisy) const;

    /// k* vector between the training inputs and one point (no nugget).
    Eigen::VectorXd cross_covariance(const Eigen::Ref<const Eigen::VectorXd>& x) const;

    const TrainingSet& train() const { return train_; }
    const Hyperparameters& hyper() const { return hyper_; }
    const Eigen::MatrixXd& chol_lower() const { return chol_lower_; }
    const Eigen::VectorXd& alpha() const { return alpha_; }
    double jitter() const { return jitter_; }

private:
    TrainingSet train_;
    Hyperparameters hyper_;
    Eigen::MatrixXd chol_lower_;
    Eigen::VectorXd alpha_;   // K^-1 y
    double jitter_;
};

}  // namespace mfgp
