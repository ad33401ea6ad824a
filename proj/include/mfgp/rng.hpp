#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace mfgp {

/// splitmix64 mixing step; used to derive independent named substreams
/// from one base seed without correlated successors.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(splitmix64(base) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

/// Deterministic RNG with hand-rolled variate transforms so that streams
/// depend only on the mt19937_64 bit sequence, not on library internals.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1]; avoids exact zero for domains open at the bottom.
    double uniform01_open_low() { return 1.0 - uniform01(); }

    /// Standard normal via Box-Muller (one variate per two uniforms).
    double normal() {
        const double u1 = uniform01_open_low();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_int(std::uint64_t n) {
        // modulo-rejection to keep the draw unbiased
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % n;
    }

private:
    std::mt19937_64 engine_;
};

/// n random points, one per row, uniform over the box (lower, upper] per
/// dimension (open at the bottom so strictly-positive domains are honored).
inline Eigen::MatrixXd uniform_points(Rng& rng, int n,
                                      const Eigen::VectorXd& lower,
                                      const Eigen::VectorXd& upper) {
    Eigen::MatrixXd pts(n, lower.size());
    for (int i = 0; i < n; ++i)
        for (Eigen::Index k = 0; k < lower.size(); ++k)
            pts(i, k) = lower[k] + (upper[k] - lower[k]) * rng.uniform01_open_low();
    return pts;
}

/// Latin hypercube sample: one point per stratum per dimension, strata
/// independently permuted across dimensions.
inline Eigen::MatrixXd latin_hypercube(Rng& rng, int n,
                                       const Eigen::VectorXd& lower,
                                       const Eigen::VectorXd& upper) {
    const Eigen::Index d = lower.size();
    Eigen::MatrixXd pts(n, d);
    std::vector<int> perm(n);
    for (Eigen::Index k = 0; k < d; ++k) {
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(i) + 1))]);
        for (int i = 0; i < n; ++i) {
            const double u = (perm[i] + rng.uniform01_open_low()) / n;
            pts(i, k) = lower[k] + (upper[k] - lower[k]) * u;
        }
    }
    return pts;
}

/// k distinct indices drawn from [0, n) (partial Fisher-Yates), in draw order.
inline std::vector<int> sample_without_replacement(Rng& rng, int n, int k) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    for (int i = 0; i < k; ++i)
        std::swap(idx[i], idx[i + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(n - i)))]);
    idx.resize(k);
    return idx;
}

}  // namespace mfgp
