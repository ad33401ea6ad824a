#include "mfgp/mf_model.hpp"

#include <cmath>

#include "mfgp/rng.hpp"

namespace mfgp {

MultiFidelityModel::MultiFidelityModel(CondensedGP eta, CondensedGP delta)
    : eta_(std::move(eta)), delta_(std::move(delta)) {
    if (eta_.train().dim() != delta_.train().dim())
        throw std::invalid_argument("MultiFidelityModel: eta and delta must share the input dimension");
}

MultiFidelityModel fit_mf(const TrainingSet& d_eta, const TrainingSet& d_y,
                          const PriorSpec& prior, const ChainConfig& config) {
    if (d_eta.size() < 2)
        throw std::invalid_argument("fit_mf: need at least 2 low-fidelity points");
    if (d_eta.dim() != d_y.dim())
        throw std::invalid_argument("fit_mf: low- and high-fidelity inputs must share a dimension");

    ChainConfig eta_config = config;
    eta_config.seed = derive_seed(config.seed, 0);
    CondensedGP eta(d_eta, condense(run_chain(d_eta, prior, eta_config)));

    Eigen::VectorXd residuals(d_y.size());
    for (Eigen::Index i = 0; i < d_y.size(); ++i)
        residuals[i] = d_y.outputs[i] - eta.predict(d_y.inputs.row(i)).mean;
    TrainingSet d_delta(d_y.inputs, std::move(residuals));

    ChainConfig delta_config = config;
    delta_config.seed = derive_seed(config.seed, 1);
    CondensedGP delta(d_delta, condense(run_chain(d_delta, prior, delta_config)));

    return MultiFidelityModel(std::move(eta), std::move(delta));
}

MfPrediction predict_mf(const MultiFidelityModel& model,
                        const Eigen::Ref<const Eigen::VectorXd>& x_star) {
    const Prediction pe = model.eta().predict(x_star);
    const Prediction pd = model.delta().predict(x_star);
    return {pe.mean + pd.mean, pe.variance + pd.variance, pe.variance, pd.variance};
}

Eigen::MatrixXd assemble_blocked(const MultiFidelityModel& model) {
    const TrainingSet& d_y = model.delta().train();
    const TrainingSet& d_w = model.eta().train();
    const Eigen::Index ny = d_y.size();
    const Eigen::Index nw = d_w.size();

    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(2 * ny + nw, 2 * ny + nw);
    K.topLeftCorner(ny, ny) = covariance_matrix(d_y, model.delta().hyper());
    // u block: the eta process evaluated at the high-fidelity inputs
    TrainingSet u_set(d_y.inputs, Eigen::VectorXd::Zero(ny));
    K.block(ny, ny, ny, ny) = covariance_matrix(u_set, model.eta().hyper());
    K.block(ny, ny + ny, ny, nw) =
        cross_covariance_matrix(d_y.inputs, d_w.inputs, model.eta().hyper());
    K.block(ny + ny, ny, nw, ny) = K.block(ny, ny + ny, ny, nw).transpose();
    K.bottomRightCorner(nw, nw) = covariance_matrix(d_w, model.eta().hyper());
    return K;
}

namespace {

// Predictive variance at `eval` after appending `bel` to the training
// inputs of `gp` at fixed hyperparameters. Rank-one Schur update of the
// cached factorization; falls back to a full jittered rebuild when the
// augmented pivot degenerates (believer duplicating a training point with
// a tiny nugget).
double augmented_variance(const CondensedGP& gp,
                          const Eigen::Ref<const Eigen::VectorXd>& eval,
                          const Eigen::Ref<const Eigen::VectorXd>& bel) {
    const Hyperparameters& hyper = gp.hyper();
    const double prior_var =
        hyper.amplitude * hyper.amplitude + hyper.nugget * hyper.nugget;

    const Eigen::VectorXd k_e = gp.cross_covariance(eval);
    const Eigen::VectorXd k_b = gp.cross_covariance(bel);
    const double k_bb = kernel_eval(bel, bel, hyper, true) + gp.jitter();
    const double k_be = kernel_eval(bel, eval, hyper, false);

    const auto lower = gp.chol_lower().triangularView<Eigen::Lower>();
    const Eigen::VectorXd w = lower.solve(k_b);
    const Eigen::VectorXd z = lower.solve(k_e);
    const double pivot = k_bb - w.squaredNorm();

    if (pivot > gp.jitter() * 1e-3) {
        const double v_old = prior_var - z.squaredNorm();
        const double c = k_be - z.dot(w);
        return std::max(0.0, v_old - c * c / pivot);
    }

    // Degenerate pivot: rebuild the augmented covariance under the jitter policy.
    const Eigen::Index n = gp.train().size();
    Eigen::MatrixXd K_aug(n + 1, n + 1);
    K_aug.topLeftCorner(n, n) = covariance_matrix(gp.train(), hyper);
    K_aug.block(0, n, n, 1) = k_b;
    K_aug.block(n, 0, 1, n) = k_b.transpose();
    K_aug(n, n) = kernel_eval(bel, bel, hyper, true);
    const auto chol = jittered_cholesky(K_aug, hyper.amplitude * hyper.amplitude);

    Eigen::VectorXd k_star(n + 1);
    k_star.head(n) = k_e;
    k_star[n] = k_be;
    const Eigen::VectorXd v = chol.lower.triangularView<Eigen::Lower>().solve(k_star);
    return std::max(0.0, prior_var - v.squaredNorm());
}

}  // namespace

BelieverComponents believer_components(const MultiFidelityModel& model,
                                       const Eigen::Ref<const Eigen::VectorXd>& x_eval,
                                       const Eigen::Ref<const Eigen::VectorXd>& x_bel,
                                       FidelityLevel level) {
    if (level == FidelityLevel::Low) {
        return {augmented_variance(model.eta(), x_eval, x_bel),
                model.delta().predict(x_eval).variance};
    }
    return {model.eta().predict(x_eval).variance,
            augmented_variance(model.delta(), x_eval, x_bel)};
}

double believer_variance(const MultiFidelityModel& model,
                         const Eigen::Ref<const Eigen::VectorXd>& x_eval,
                         const Eigen::Ref<const Eigen::VectorXd>& x_bel,
                         FidelityLevel level) {
    const BelieverComponents c = believer_components(model, x_eval, x_bel, level);
    return c.var_eta + c.var_delta;
}

}  // namespace mfgp
