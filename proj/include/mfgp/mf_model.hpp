#pragma once

#include <Eigen/Dense>

#include "mfgp/gp.hpp"
#include "mfgp/inference.hpp"
#include "mfgp/types.hpp"

namespace mfgp {

/// Kennedy-O'Hagan two-fidelity composition y(x) = eta(x) + delta(x):
/// a low-fidelity GP plus a discrepancy GP over the residuals at the
/// high-fidelity inputs. Immutable after construction; prediction and
/// believer scoring are safe to call concurrently.
class MultiFidelityModel {
public:
    MultiFidelityModel(CondensedGP eta, CondensedGP delta);

    const CondensedGP& eta() const { return eta_; }
    const CondensedGP& delta() const { return delta_; }
    Eigen::Index dim() const { return eta_.train().dim(); }

private:
    CondensedGP eta_;
    CondensedGP delta_;
};

/// Two-stage fit: eta by MCMC on the low-fidelity set, then delta by MCMC
/// on the residuals y_i - mean_eta(x_i) at the high-fidelity inputs. Both
/// chains are condensed to their medians; sub-seeds are derived from
/// config.seed (stream 0 for eta, stream 1 for delta).
MultiFidelityModel fit_mf(const TrainingSet& d_eta, const TrainingSet& d_y,
                          const PriorSpec& prior, const ChainConfig& config);

struct MfPrediction {
    double mean;
    double var_total;   // var_eta + var_delta
    double var_eta;
    double var_delta;
};

MfPrediction predict_mf(const MultiFidelityModel& model,
                        const Eigen::Ref<const Eigen::VectorXd>& x_star);

/// The (N_y + N_y + N_eta)-square blocked covariance over (y, u, w):
/// discrepancy kernel on the high-fidelity inputs, eta kernel on the
/// high-fidelity inputs, eta kernel on the low-fidelity inputs, with the
/// eta cross block between them and zeros against the y block.
Eigen::MatrixXd assemble_blocked(const MultiFidelityModel& model);

struct BelieverComponents {
    double var_eta;
    double var_delta;
};

/// Per-GP variances at x_eval after hypothetically appending x_bel to the
/// training inputs of the GP selected by `level`, all hyperparameters held
/// fixed. Only the selected GP's component changes.
BelieverComponents believer_components(const MultiFidelityModel& model,
                                       const Eigen::Ref<const Eigen::VectorXd>& x_eval,
                                       const Eigen::Ref<const Eigen::VectorXd>& x_bel,
                                       FidelityLevel level);

/// Total predictive variance at x_eval under the believer update. No refit
/// is performed; the update is a rank-one covariance augmentation of the
/// affected GP.
double believer_variance(const MultiFidelityModel& model,
                         const Eigen::Ref<const Eigen::VectorXd>& x_eval,
                         const Eigen::Ref<const Eigen::VectorXd>& x_bel,
                         FidelityLevel level);

}  // namespace mfgp
