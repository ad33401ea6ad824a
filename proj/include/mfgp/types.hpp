#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace mfgp {

inline constexpr const char* kVersion = "0.1.0";

/// Thrown when a linear-algebra step fails beyond repair (e.g. the
/// covariance cannot be factorized even at the maximum jitter level).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class FidelityLevel { Low, High };

inline const char* to_string(FidelityLevel level) {
    return level == FidelityLevel::Low ? "low" : "high";
}

/// Squared-exponential kernel hyperparameters: output scale sigma,
/// one inverse length scale per input dimension, and the nugget lambda.
struct Hyperparameters {
    double amplitude;                    // sigma
    Eigen::VectorXd inv_length_scales;   // beta, one per input dimension
    double nugget;                       // lambda

    Hyperparameters(double sigma, Eigen::VectorXd beta, double lambda)
        : amplitude(sigma), inv_length_scales(std::move(beta)), nugget(lambda) {
        if (!(amplitude > 0.0) || !std::isfinite(amplitude))
            throw std::invalid_argument("Hyperparameters: amplitude must be a positive finite real");
        if (inv_length_scales.size() == 0)
            throw std::invalid_argument("Hyperparameters: need at least one inverse length scale");
        for (Eigen::Index k = 0; k < inv_length_scales.size(); ++k) {
            const double b = inv_length_scales[k];
            if (!(b >= 0.0) || !std::isfinite(b))
                throw std::invalid_argument("Hyperparameters: inverse length scales must be non-negative finite reals");
        }
        if (!(nugget >= 0.0) || !std::isfinite(nugget))
            throw std::invalid_argument("Hyperparameters: nugget must be a non-negative finite real");
    }

    Eigen::Index dim() const { return inv_length_scales.size(); }
};

/// Paired inputs/outputs for one fidelity level. Inputs are one design
/// point per row; outputs are the matching responses.
struct TrainingSet {
    Eigen::MatrixXd inputs;    // N x d
    Eigen::VectorXd outputs;   // N

    TrainingSet(Eigen::MatrixXd in, Eigen::VectorXd out)
        : inputs(std::move(in)), outputs(std::move(out)) {
        if (inputs.rows() == 0)
            throw std::invalid_argument("TrainingSet: empty training set rejected");
        if (inputs.rows() != outputs.size())
            throw std::invalid_argument("TrainingSet: " + std::to_string(inputs.rows()) +
                                        " input rows vs " + std::to_string(outputs.size()) + " outputs");
    }

    Eigen::Index size() const { return inputs.rows(); }
    Eigen::Index dim() const { return inputs.cols(); }

    /// Copy with one extra (input, output) pair appended.
    TrainingSet with_point(const Eigen::Ref<const Eigen::VectorXd>& x, double y) const {
        if (x.size() != dim())
            throw std::invalid_argument("TrainingSet::with_point: dimension mismatch");
        Eigen::MatrixXd in(size() + 1, dim());
        in.topRows(size()) = inputs;
        in.row(size()) = x.transpose();
        Eigen::VectorXd out(size() + 1);
        out.head(size()) = outputs;
        out[size()] = y;
        return TrainingSet(std::move(in), std::move(out));
    }

    bool has_duplicate_rows() const {
        for (Eigen::Index i = 0; i < size(); ++i)
            for (Eigen::Index j = i + 1; j < size(); ++j)
                if (inputs.row(i) == inputs.row(j)) return true;
        return false;
    }
};

}  // namespace mfgp
