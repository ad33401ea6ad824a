#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace mfgp {

/// Affine map between a bounded input domain and the unit cube.
struct InputNormalizer {
    Eigen::VectorXd lower;
    Eigen::VectorXd span;

    InputNormalizer(Eigen::VectorXd lo, const Eigen::VectorXd& hi)
        : lower(std::move(lo)), span(hi - lower) {
        if (lower.size() != span.size())
            throw std::invalid_argument("InputNormalizer: bound dimension mismatch");
        for (Eigen::Index k = 0; k < span.size(); ++k) {
            if (!(span[k] > 0.0))
                throw std::invalid_argument("InputNormalizer: upper bound must exceed lower bound");
        }
    }

    Eigen::VectorXd to_unit(const Eigen::Ref<const Eigen::VectorXd>& x) const {
        return (x - lower).cwiseQuotient(span);
    }
    Eigen::VectorXd to_domain(const Eigen::Ref<const Eigen::VectorXd>& u) const {
        return lower + u.cwiseProduct(span);
    }
    Eigen::MatrixXd to_unit_rows(const Eigen::MatrixXd& X) const {
        return (X.rowwise() - lower.transpose()).array().rowwise() / span.transpose().array();
    }
    Eigen::MatrixXd to_domain_rows(const Eigen::MatrixXd& U) const {
        return (U.array().rowwise() * span.transpose().array()).rowwise() + lower.transpose().array();
    }
};

/// Zero-mean unit-variance transform for outputs. One scaler is shared by
/// every fidelity level of a model so that the affine map is common.
struct OutputScaler {
    double mean = 0.0;
    double stddev = 1.0;

    static OutputScaler fit(const Eigen::VectorXd& values) {
        OutputScaler s;
        s.mean = values.mean();
        const double var = (values.array() - s.mean).square().sum() /
                           static_cast<double>(values.size());
        s.stddev = std::sqrt(var);
        if (s.stddev < 1e-12) s.stddev = 1.0;  // constant outputs: shift only
        return s;
    }

    double standardize(double y) const { return (y - mean) / stddev; }
    double unstandardize(double z) const { return mean + stddev * z; }
    Eigen::VectorXd standardize(const Eigen::VectorXd& y) const {
        return (y.array() - mean) / stddev;
    }
    Eigen::VectorXd unstandardize(const Eigen::VectorXd& z) const {
        return mean + stddev * z.array();
    }
};

}  // namespace mfgp
