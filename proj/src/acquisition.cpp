#include "mfgp/acquisition.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace mfgp {

CandidatePool::CandidatePool(Eigen::MatrixXd low_candidates, Eigen::MatrixXd high_candidates)
    : low_(std::move(low_candidates)),
      high_(std::move(high_candidates)),
      low_consumed_(static_cast<std::size_t>(low_.rows()), 0),
      high_consumed_(static_cast<std::size_t>(high_.rows()), 0) {
    if (low_.cols() != high_.cols())
        throw std::invalid_argument("CandidatePool: pools must share the input dimension");
}

Eigen::Index CandidatePool::active_count(FidelityLevel level) const {
    Eigen::Index n = 0;
    for (char c : flags(level))
        if (!c) ++n;
    return n;
}

void CandidatePool::consume(FidelityLevel level, Eigen::Index row) {
    auto& f = level == FidelityLevel::Low ? low_consumed_ : high_consumed_;
    if (row < 0 || row >= rows(level).rows())
        throw std::invalid_argument("CandidatePool::consume: row out of range");
    if (f[static_cast<std::size_t>(row)])
        throw std::invalid_argument("CandidatePool::consume: row already consumed");
    f[static_cast<std::size_t>(row)] = 1;
}

Decision select_uncertainty(const CondensedGP& gp, const Eigen::MatrixXd& pool) {
    if (pool.rows() == 0)
        throw std::invalid_argument("select_uncertainty: empty candidate pool");
    Eigen::Index best = 0;
    double best_var = -1.0;
    for (Eigen::Index i = 0; i < pool.rows(); ++i) {
        const double v = gp.predict(pool.row(i)).variance;
        if (v > best_var) {
            best_var = v;
            best = i;
        }
    }
    return {pool.row(best), FidelityLevel::High, best_var, best};
}

namespace {

void require_scannable(const CandidatePool& pool) {
    if (pool.active_count(FidelityLevel::Low) == 0 ||
        pool.active_count(FidelityLevel::High) == 0)
        throw std::invalid_argument("acquisition: both candidate pools must be non-empty");
}

[[noreturn]] void throw_exhausted(FidelityLevel level) {
    throw std::runtime_error(std::string("acquisition: the ") + to_string(level) +
                             "-fidelity candidate pool is exhausted");
}

// Scan both pools, low rows first, keeping the strict maximum; the scan
// order realizes the tie rule (prefer low fidelity, then lowest index).
template <typename Score>
Decision scan_pools(const CandidatePool& pool, Score&& score) {
    Decision best{Eigen::VectorXd(), FidelityLevel::Low,
                  -std::numeric_limits<double>::infinity(), -1};
    for (FidelityLevel level : {FidelityLevel::Low, FidelityLevel::High}) {
        const Eigen::MatrixXd& rows = pool.rows(level);
        for (Eigen::Index i = 0; i < rows.rows(); ++i) {
            if (pool.consumed(level, i)) continue;
            const double s = score(rows.row(i), level);
            if (s > best.score) best = {rows.row(i), level, s, i};
        }
    }
    return best;
}

Eigen::Index nearest_active_row(const CandidatePool& pool, FidelityLevel level,
                                const Eigen::VectorXd& target) {
    const Eigen::MatrixXd& rows = pool.rows(level);
    Eigen::Index best = -1;
    double best_dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
        if (pool.consumed(level, i)) continue;
        const double d = (rows.row(i).transpose() - target).squaredNorm();
        if (d < best_dist) {
            best_dist = d;
            best = i;
        }
    }
    if (best < 0) throw_exhausted(level);
    return best;
}

}  // namespace

Decision select_mf_ucr(const MultiFidelityModel& model, const CandidatePool& pool,
                       const CostModel& cost) {
    require_scannable(pool);
    Decision winner = scan_pools(pool, [&](const auto& x, FidelityLevel) {
        return std::sqrt(predict_mf(model, x.transpose()).var_total);
    });

    const MfPrediction p = predict_mf(model, winner.point);
    const FidelityLevel level =
        std::sqrt(p.var_eta) / cost.cost_low >= std::sqrt(p.var_delta) / cost.cost_high
            ? FidelityLevel::Low
            : FidelityLevel::High;

    if (level != winner.level) {
        const Eigen::Index row = nearest_active_row(pool, level, winner.point);
        const Eigen::VectorXd snapped = pool.rows(level).row(row).transpose();
        return {snapped, level, std::sqrt(predict_mf(model, snapped).var_total), row};
    }
    return {winner.point, level, winner.score, winner.pool_row};
}

Decision select_if_ucr(const MultiFidelityModel& model, const CandidatePool& pool,
                       const CostModel& cost) {
    require_scannable(pool);
    return scan_pools(pool, [&](const auto& x, FidelityLevel level) {
        const MfPrediction p = predict_mf(model, x.transpose());
        return level == FidelityLevel::Low ? std::sqrt(p.var_eta) / cost.cost_low
                                           : std::sqrt(p.var_delta) / cost.cost_high;
    });
}

Decision select_if_ucr_bel(const MultiFidelityModel& model, const CandidatePool& pool,
                           const CostModel& cost) {
    require_scannable(pool);
    return scan_pools(pool, [&](const auto& x, FidelityLevel level) {
        const Eigen::VectorXd point = x.transpose();
        const double sd = std::sqrt(predict_mf(model, point).var_total);
        const double sd_bel = std::sqrt(believer_variance(model, point, point, level));
        return (sd - sd_bel) / cost.of(level);
    });
}

}  // namespace mfgp
