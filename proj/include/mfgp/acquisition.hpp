#pragma once

#include <Eigen/Dense>
#include <vector>

#include "mfgp/gp.hpp"
#include "mfgp/mf_model.hpp"
#include "mfgp/types.hpp"

namespace mfgp {

/// Per-run costs of the two fidelity levels.
struct CostModel {
    double cost_low;
    double cost_high;

    CostModel(double low, double high) : cost_low(low), cost_high(high) {
        if (!(cost_low > 0.0) || !(cost_high >= cost_low))
            throw std::invalid_argument("CostModel: require cost_high >= cost_low > 0");
    }

    double of(FidelityLevel level) const {
        return level == FidelityLevel::Low ? cost_low : cost_high;
    }
};

/// Prospective candidate inputs per fidelity, consumed without replacement
/// as the adaptive loop picks them.
class CandidatePool {
public:
    CandidatePool(Eigen::MatrixXd low_candidates, Eigen::MatrixXd high_candidates);

    const Eigen::MatrixXd& rows(FidelityLevel level) const {
        return level == FidelityLevel::Low ? low_ : high_;
    }
    bool consumed(FidelityLevel level, Eigen::Index row) const {
        return flags(level)[static_cast<std::size_t>(row)];
    }
    Eigen::Index total(FidelityLevel level) const { return rows(level).rows(); }
    Eigen::Index active_count(FidelityLevel level) const;
    void consume(FidelityLevel level, Eigen::Index row);

private:
    const std::vector<char>& flags(FidelityLevel level) const {
        return level == FidelityLevel::Low ? low_consumed_ : high_consumed_;
    }
    Eigen::MatrixXd low_;
    Eigen::MatrixXd high_;
    std::vector<char> low_consumed_;
    std::vector<char> high_consumed_;
};

/// An acquisition outcome: the chosen point, its fidelity, the score that
/// won, and the row of the chosen fidelity's pool it came from.
struct Decision {
    Eigen::VectorXd point;
    FidelityLevel level = FidelityLevel::Low;
    double score = 0.0;
    Eigen::Index pool_row = -1;
};

/// Single-fidelity uncertainty sampling: the pool row with the largest
/// predictive variance. Ties go to the lowest row index. The returned
/// level is High (the single-fidelity reduction samples the truth).
Decision select_uncertainty(const CondensedGP& gp, const Eigen::MatrixXd& pool);

/// Two-step rule: maximize the total multi-fidelity standard deviation over
/// the union of both pools, then choose the fidelity by comparing
/// sigma_eta/C_L against sigma_delta/C_H at the winner. When the winner
/// belongs to the other fidelity's pool, the nearest unconsumed candidate
/// of the chosen fidelity is taken instead.
Decision select_mf_ucr(const MultiFidelityModel& model, const CandidatePool& pool,
                       const CostModel& cost);

/// One-step rule: score low candidates by sigma_eta/C_L and high candidates
/// by sigma_delta/C_H; take the global maximizer with its own fidelity.
Decision select_if_ucr(const MultiFidelityModel& model, const CandidatePool& pool,
                       const CostModel& cost);

/// One-step believer rule: score each candidate by the drop in total
/// standard deviation a believer at that candidate would cause, per unit
/// cost of its fidelity.
Decision select_if_ucr_bel(const MultiFidelityModel& model, const CandidatePool& pool,
                           const CostModel& cost);

}  // namespace mfgp
