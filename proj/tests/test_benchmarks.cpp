#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "mfgp/benchmarks.hpp"
#include "mfgp/rng.hpp"

using namespace mfgp;

namespace {

Eigen::Vector4d park_point(double a, double b, double c, double d) {
    return Eigen::Vector4d(a, b, c, d);
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

// Scalar values recomputed independently (30-digit arithmetic) before being
// frozen here.
TEST_CASE("forrester golden values") {
    CHECK(std::abs(forrester_high(1.0 / 3.0)) < 1e-30);  // (6x-2)^2 vanishes
    CHECK(forrester_high(0.0) == doctest::Approx(3.0272099812317130).epsilon(1e-12));
    CHECK(forrester_high(1.0) == doctest::Approx(15.829731945974108).epsilon(1e-12));
    CHECK(forrester_low(0.5) == doctest::Approx(-6.4544215439045910).epsilon(1e-12));
    CHECK(forrester_low(1.0 / 3.0) == doctest::Approx(-8.6666666666666667).epsilon(1e-12));
    CHECK(forrester_low(0.0) == doctest::Approx(-10.183674011260972).epsilon(1e-12));
}

TEST_CASE("forrester domain check") {
    CHECK_THROWS_AS(forrester_high(-0.01), std::invalid_argument);
    CHECK_THROWS_AS(forrester_high(1.01), std::invalid_argument);
    CHECK_THROWS_AS(forrester_low(1.5), std::invalid_argument);
}

TEST_CASE("low-fidelity forrester differs from the scaled high fidelity by a line") {
    for (int i = 0; i <= 200; ++i) {
        const double x = i / 200.0;
        const double linear = forrester_low(x) - 0.6 * forrester_high(x);
        CHECK(linear == doctest::Approx(10.0 * x - 12.0).epsilon(1e-12));
    }
}

TEST_CASE("park golden values") {
    CHECK(park_high(park_point(1, 0, 0, 1)) ==
          doctest::Approx(4.0 * std::exp(1.0)).epsilon(1e-12));
    CHECK(park_high(park_point(1, 1, 1, 1)) ==
          doctest::Approx(25.589254158606548).epsilon(1e-12));
    CHECK(park_high(park_point(0.5, 0.5, 0.5, 0.5)) ==
          doctest::Approx(8.9261303633639324).epsilon(1e-12));
    CHECK(park_low(park_point(1, 0, 0, 1)) ==
          doctest::Approx(10.288069428707718).epsilon(1e-12));
    CHECK(park_low(park_point(0.5, 0.5, 0.5, 0.5)) ==
          doctest::Approx(9.3540718490746408).epsilon(1e-12));
}

TEST_CASE("park domain check") {
    CHECK_THROWS_AS(park_high(park_point(0, 0.5, 0.5, 0.5)), std::invalid_argument);
    CHECK_THROWS_AS(park_high(park_point(-0.1, 0.5, 0.5, 0.5)), std::invalid_argument);
    CHECK_THROWS_AS(park_high(park_point(0.5, 0.5, 0.5, 1.1)), std::invalid_argument);
    CHECK_THROWS_AS(park_low(park_point(0.5, -0.2, 0.5, 0.5)), std::invalid_argument);
    CHECK_THROWS_AS(park_high(Eigen::VectorXd::Ones(3)), std::invalid_argument);
    CHECK_NOTHROW(park_high(park_point(1, 0, 0, 1)));
}

TEST_CASE("park functions stay finite over the open box") {
    Rng rng(77);
    for (int i = 0; i < 10000; ++i) {
        Eigen::VectorXd x(4);
        for (int k = 0; k < 4; ++k) x[k] = 1.0 - rng.uniform01();  // (0,1]
        const double hi = park_high(x);
        const double lo = park_low(x);
        CHECK(std::isfinite(hi));
        CHECK(std::isfinite(lo));
    }
}

TEST_CASE("park low is affine in the high-fidelity value") {
    Rng rng(79);
    for (int i = 0; i < 100; ++i) {
        Eigen::VectorXd a(4), b(4);
        for (int k = 0; k < 4; ++k) a[k] = 1.0 - rng.uniform01();
        b = a;
        b[3] = 1.0 - rng.uniform01();  // x4 moves f_H without touching the offset terms
        const double slope = 1.0 + std::sin(a[0]) / 10.0;
        CHECK(park_low(a) - park_low(b) ==
              doctest::Approx(slope * (park_high(a) - park_high(b))).epsilon(1e-9));
    }
}

TEST_CASE("rmse examples") {
    Eigen::VectorXd p(2), t(2);
    p << 0, 0;
    t << 3, 4;
    CHECK(rmse(p, t) == doctest::Approx(3.5355339059327378).epsilon(1e-12));
    CHECK(rmse(t, t) == 0.0);
    CHECK(rmse(Eigen::VectorXd::Constant(1, 1.0), Eigen::VectorXd::Constant(1, 4.0)) == 3.0);
    CHECK_THROWS_AS(rmse(p, Eigen::VectorXd::Zero(3)), std::invalid_argument);
}

TEST_CASE("fluidized-bed writer and loader round-trip") {
    const auto path = temp_file("mfgp_bed_roundtrip.csv");
    const auto records = synthetic_fluidized_bed(4);
    REQUIRE(records.size() == 28);
    write_fluidized_bed(path, records);
    const auto loaded = load_fluidized_bed(path);
    REQUIRE(loaded.size() == 28);
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        CHECK(loaded[i].inputs() == records[i].inputs());
        CHECK(loaded[i].t_experiment == records[i].t_experiment);
        CHECK(loaded[i].t_model == records[i].t_model);
    }
    std::filesystem::remove(path);
}

TEST_CASE("loader rejects malformed files with located errors") {
    const auto path = temp_file("mfgp_bed_bad.csv");

    SUBCASE("empty file") {
        std::ofstream(path).close();
        CHECK_THROWS_WITH_AS(load_fluidized_bed(path), doctest::Contains("empty"),
                             std::runtime_error);
    }
    SUBCASE("wrong header") {
        std::ofstream(path) << "H_R,T_R,T_a,R_f,P_a,V_f,T_exp\n";
        CHECK_THROWS_WITH_AS(load_fluidized_bed(path), doctest::Contains("header"),
                             std::runtime_error);
    }
    SUBCASE("wrong arity") {
        std::ofstream(path) << kFluidizedBedHeader << "\n1,2,3,4,5,6,7\n";
        CHECK_THROWS_WITH_AS(load_fluidized_bed(path), doctest::Contains("row 2"),
                             std::runtime_error);
    }
    SUBCASE("non-numeric cell names row and column") {
        std::ofstream(path) << kFluidizedBedHeader << "\n1,2,3,4,5,abc,7,8\n";
        CHECK_THROWS_WITH_AS(load_fluidized_bed(path),
                             doctest::Contains("row 2, column 6"), std::runtime_error);
    }
    SUBCASE("header-only file loads as empty") {
        std::ofstream(path) << kFluidizedBedHeader << "\n";
        CHECK(load_fluidized_bed(path).empty());
    }
    std::filesystem::remove(path);
}

TEST_CASE("synthetic stand-in is deterministic per seed and spans sane ranges") {
    const auto a = synthetic_fluidized_bed(1);
    const auto b = synthetic_fluidized_bed(1);
    const auto c = synthetic_fluidized_bed(2);
    REQUIRE(a.size() == 28);
    CHECK(a[5].t_experiment == b[5].t_experiment);
    CHECK(a[5].t_experiment != c[5].t_experiment);
    for (const auto& r : a) {
        CHECK(r.humidity >= 20.0);
        CHECK(r.humidity <= 80.0);
        CHECK(std::isfinite(r.t_experiment));
        CHECK(std::abs(r.t_experiment - r.t_model) < 5.0);  // mild discrepancy by design
    }
}
