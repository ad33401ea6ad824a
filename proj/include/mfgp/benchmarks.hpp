#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace mfgp {

/// One analytic benchmark: paired low/high fidelity functions on a box.
struct Problem {
    std::string name;
    int dim;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;
    std::function<double(const Eigen::VectorXd&)> eval_low;
    std::function<double(const Eigen::VectorXd&)> eval_high;
};

/// (6x-2)^2 sin(12x-4) on [0,1].
double forrester_high(double x);
/// 0.6 f_H(x) + 10(x-0.5) - 7.
double forrester_low(double x);

/// x1/2 [sqrt(1+(x2+x3^2) x4/x1^2) - 1] + (x1+3x4) exp(1+sin x3),
/// x1 in (0,1], x2..x4 in [0,1].
double park_high(const Eigen::Ref<const Eigen::VectorXd>& x);
/// [1 + sin(x1)/10] f_H(x) - 2x1 + x2^2 + x3^2 + 0.5.
double park_low(const Eigen::Ref<const Eigen::VectorXd>& x);

Problem make_forrester_problem();
Problem make_park_problem();

/// One steady-state operating condition of the top-spray fluidized bed:
/// six process inputs plus the measured and the simulated bed temperature.
struct FluidizedBedRecord {
    double humidity;                // H_R
    double room_temp;               // T_R
    double pump_air_temp;           // T_a
    double coating_flow_rate;       // R_f
    double atomization_pressure;    // P_a
    double fluidization_velocity;   // V_f
    double t_experiment;            // measured temperature, high fidelity
    double t_model;                 // simulated temperature, low fidelity

    Eigen::VectorXd inputs() const {
        Eigen::VectorXd x(6);
        x << humidity, room_temp, pump_air_temp, coating_flow_rate,
            atomization_pressure, fluidization_velocity;
        return x;
    }
};

inline constexpr const char* kFluidizedBedHeader = "H_R,T_R,T_a,R_f,P_a,V_f,T_exp,T_model";
inline constexpr int kFluidizedBedConditions = 28;

/// Strict CSV loader for the schema above: exactly that header, one record
/// per line, decimal-point reals. Parse failures name the row and column.
/// A header-only file yields an empty list with a warning on stderr.
std::vector<FluidizedBedRecord> load_fluidized_bed(const std::filesystem::path& path);

void write_fluidized_bed(const std::filesystem::path& path,
                         const std::vector<FluidizedBedRecord>& records);

/// Seeded synthetic stand-in for the real 28-condition dataset: a smooth
/// 6-D quadratic response plus noise, in plausible physical ranges. Keeps
/// the harness runnable until the published values are transcribed.
std::vector<FluidizedBedRecord> synthetic_fluidized_bed(std::uint64_t seed,
                                                        int rows = kFluidizedBedConditions);

/// sqrt(mean((p_i - t_i)^2)).
double rmse(const Eigen::Ref<const Eigen::VectorXd>& predictions,
            const Eigen::Ref<const Eigen::VectorXd>& truth);

}  // namespace mfgp
