#include "mfgp/gp.hpp"

#include <cmath>
#include <sstream>

namespace mfgp {

double kernel_eval(const Eigen::Ref<const Eigen::VectorXd>& a,
                   const Eigen::Ref<const Eigen::VectorXd>& b,
                   const Hyperparameters& hyper, bool same_point) {
    if (a.size() != hyper.dim() || b.size() != hyper.dim())
        throw std::invalid_argument("kernel_eval: point dimension does not match hyperparameters");
    double q = 0.0;
    for (Eigen::Index k = 0; k < a.size(); ++k) {
        const double diff = a[k] - b[k];
        q += hyper.inv_length_scales[k] * diff * diff;
    }
    double v = hyper.amplitude * hyper.amplitude * std::exp(-q);
    if (same_point) v += hyper.nugget * hyper.nugget;
    return v;
}

Eigen::MatrixXd covariance_matrix(const TrainingSet& train, const Hyperparameters& hyper) {
    if (train.dim() != hyper.dim())
        throw std::invalid_argument("covariance_matrix: training dimension does not match hyperparameters");
    const Eigen::Index n = train.size();
    Eigen::MatrixXd K(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        K(i, i) = kernel_eval(train.inputs.row(i), train.inputs.row(i), hyper, true);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double v = kernel_eval(train.inputs.row(i), train.inputs.row(j), hyper, false);
            K(i, j) = v;
            K(j, i) = v;
        }
    }
    return K;
}

Eigen::MatrixXd cross_covariance_matrix(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Z,
                                        const Hyperparameters& hyper) {
    Eigen::MatrixXd C(X.rows(), Z.rows());
    for (Eigen::Index i = 0; i < X.rows(); ++i)
        for (Eigen::Index j = 0; j < Z.rows(); ++j)
            C(i, j) = kernel_eval(X.row(i), Z.row(j), hyper, false);
    return C;
}

CholeskyResult jittered_cholesky(const Eigen::MatrixXd& covariance, double sigma_sq) {
    if (!covariance.allFinite())
        throw NumericalError("jittered_cholesky: covariance contains non-finite entries");
    const double max_jitter = 1e-4 * sigma_sq;
    for (double jitter = 1e-10 * sigma_sq; jitter <= max_jitter * (1.0 + 1e-12); jitter *= 10.0) {
        Eigen::MatrixXd K = covariance;
        K.diagonal().array() += jitter;
        Eigen::LLT<Eigen::MatrixXd> llt(K);
        if (llt.info() == Eigen::Success && llt.matrixL().toDenseMatrix().allFinite())
            return {llt.matrixL(), jitter};
    }
    std::ostringstream msg;
    msg << "jittered_cholesky: factorization failed for a " << covariance.rows() << "x"
        << covariance.cols() << " covariance even at jitter " << max_jitter
        << " (diagonal range [" << covariance.diagonal().minCoeff() << ", "
        << covariance.diagonal().maxCoeff() << "])";
    throw NumericalError(msg.str());
}

CondensedGP::CondensedGP(TrainingSet train, Hyperparameters hyper)
    : train_(std::move(train)), hyper_(std::move(hyper)) {
    if (train_.dim() != hyper_.dim())
        throw std::invalid_argument("CondensedGP: training dimension does not match hyperparameters");
    if (hyper_.nugget == 0.0 && train_.has_duplicate_rows())
        throw std::invalid_argument("CondensedGP: duplicate inputs require a positive nugget");
    auto chol = jittered_cholesky(covariance_matrix(train_, hyper_), hyper_.amplitude * hyper_.amplitude);
    chol_lower_ = std::move(chol.lower);
    jitter_ = chol.jitter;
    alpha_ = chol_lower_.triangularView<Eigen::Lower>().solve(train_.outputs);
    chol_lower_.triangularView<Eigen::Lower>().transpose().solveInPlace(alpha_);
}

Eigen::VectorXd CondensedGP::cross_covariance(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    Eigen::VectorXd k_star(train_.size());
    for (Eigen::Index i = 0; i < train_.size(); ++i)
        k_star[i] = kernel_eval(train_.inputs.row(i), x, hyper_, false);
    return k_star;
}

Prediction CondensedGP::predict(const Eigen::Ref<const Eigen::VectorXd>& x_star,
                                PredictMode mode) const {
    if (x_star.size() != train_.dim())
        throw std::invalid_argument("CondensedGP::predict: point dimension mismatch");
    const Eigen::VectorXd k_star = cross_covariance(x_star);
    const double mean = k_star.dot(alpha_);
    const Eigen::VectorXd v = chol_lower_.triangularView<Eigen::Lower>().solve(k_star);
    double prior = hyper_.amplitude * hyper_.amplitude;
    if (mode == PredictMode::Noisy) prior += hyper_.nugget * hyper_.nugget;
    const double variance = std::max(0.0, prior - v.squaredNorm());
    return {mean, variance};
}

}  // namespace mfgp
