#include "mfgp/benchmarks.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "mfgp/rng.hpp"

namespace mfgp {

double forrester_high(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("forrester_high: x must lie in [0,1]");
    const double a = 6.0 * x - 2.0;
    return a * a * std::sin(12.0 * x - 4.0);
}

double forrester_low(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("forrester_low: x must lie in [0,1]");
    return 0.6 * forrester_high(x) + 10.0 * (x - 0.5) - 7.0;
}

namespace {

void check_park_domain(const Eigen::Ref<const Eigen::VectorXd>& x, const char* who) {
    if (x.size() != 4)
        throw std::invalid_argument(std::string(who) + ": expected a 4-vector");
    if (!(x[0] > 0.0))
        throw std::invalid_argument(std::string(who) + ": x1 must be strictly positive");
    for (int k = 0; k < 4; ++k)
        if (!(x[k] >= 0.0 && x[k] <= 1.0))
            throw std::invalid_argument(std::string(who) +
                                        ": coordinates must lie in [0,1] with x1 > 0");
}

}  // namespace

double park_high(const Eigen::Ref<const Eigen::VectorXd>& x) {
    check_park_domain(x, "park_high");
    const double root = std::sqrt(1.0 + (x[1] + x[2] * x[2]) * x[3] / (x[0] * x[0]));
    return 0.5 * x[0] * (root - 1.0) + (x[0] + 3.0 * x[3]) * std::exp(1.0 + std::sin(x[2]));
}

double park_low(const Eigen::Ref<const Eigen::VectorXd>& x) {
    check_park_domain(x, "park_low");
    return (1.0 + std::sin(x[0]) / 10.0) * park_high(x) - 2.0 * x[0] + x[1] * x[1] +
           x[2] * x[2] + 0.5;
}

Problem make_forrester_problem() {
    Problem p;
    p.name = "forrester";
    p.dim = 1;
    p.lower = Eigen::VectorXd::Zero(1);
    p.upper = Eigen::VectorXd::Ones(1);
    p.eval_low = [](const Eigen::VectorXd& x) { return forrester_low(x[0]); };
    p.eval_high = [](const Eigen::VectorXd& x) { return forrester_high(x[0]); };
    return p;
}

Problem make_park_problem() {
    Problem p;
    p.name = "park";
    p.dim = 4;
    p.lower = Eigen::VectorXd::Zero(4);
    p.upper = Eigen::VectorXd::Ones(4);
    p.eval_low = [](const Eigen::VectorXd& x) { return park_low(x); };
    p.eval_high = [](const Eigen::VectorXd& x) { return park_high(x); };
    return p;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_cell(const std::string& cell, int row, int col) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(cell, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    // trailing whitespace is fine; anything else is not numeric
    for (std::size_t i = used; i < cell.size(); ++i)
        if (!std::isspace(static_cast<unsigned char>(cell[i]))) used = 0;
    if (used == 0)
        throw std::runtime_error("fluidized-bed parse error at row " + std::to_string(row) +
                                 ", column " + std::to_string(col + 1) + ": '" + cell +
                                 "' is not a number");
    return v;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

}  // namespace

std::vector<FluidizedBedRecord> load_fluidized_bed(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("load_fluidized_bed: cannot open " + path.string());

    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("load_fluidized_bed: " + path.string() +
                                 " is empty (expected header " + kFluidizedBedHeader + ")");
    if (strip_cr(line) != kFluidizedBedHeader)
        throw std::runtime_error("load_fluidized_bed: " + path.string() +
                                 " has header '" + strip_cr(line) + "', expected '" +
                                 kFluidizedBedHeader + "'");

    std::vector<FluidizedBedRecord> records;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        line = strip_cr(line);
        if (line.empty()) continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != 8)
            throw std::runtime_error("fluidized-bed parse error at row " + std::to_string(row) +
                                     ": expected 8 fields, got " + std::to_string(cells.size()));
        FluidizedBedRecord r;
        r.humidity = parse_cell(cells[0], row, 0);
        r.room_temp = parse_cell(cells[1], row, 1);
        r.pump_air_temp = parse_cell(cells[2], row, 2);
        r.coating_flow_rate = parse_cell(cells[3], row, 3);
        r.atomization_pressure = parse_cell(cells[4], row, 4);
        r.fluidization_velocity = parse_cell(cells[5], row, 5);
        r.t_experiment = parse_cell(cells[6], row, 6);
        r.t_model = parse_cell(cells[7], row, 7);
        records.push_back(r);
    }
    if (records.empty())
        std::cerr << "load_fluidized_bed: warning: " << path.string()
                  << " contains a header but no records\n";
    return records;
}

void write_fluidized_bed(const std::filesystem::path& path,
                         const std::vector<FluidizedBedRecord>& records) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("write_fluidized_bed: cannot open " + path.string());
    out << kFluidizedBedHeader << "\n";
    char buf[256];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      r.humidity, r.room_temp, r.pump_air_temp, r.coating_flow_rate,
                      r.atomization_pressure, r.fluidization_velocity, r.t_experiment,
                      r.t_model);
        out << buf;
    }
}

std::vector<FluidizedBedRecord> synthetic_fluidized_bed(std::uint64_t seed, int rows) {
    if (rows < 1) throw std::invalid_argument("synthetic_fluidized_bed: rows must be positive");
    Rng rng(derive_seed(seed, 0xbedULL));
    // plausible operating ranges for the six process inputs
    const double lo[6] = {20.0, 15.0, 40.0, 5.0, 1.0, 2.0};
    const double hi[6] = {80.0, 30.0, 90.0, 20.0, 3.0, 6.0};

    std::vector<FluidizedBedRecord> records;
    records.reserve(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) {
        double u[6];
        for (int k = 0; k < 6; ++k) u[k] = rng.uniform01();
        // smooth quadratic response for the simulated bed temperature
        const double t_model = 42.0 - 6.0 * u[0] + 3.5 * u[1] + 9.0 * u[2] - 7.5 * u[3] -
                               2.0 * u[4] * u[4] + 4.0 * u[5] - 3.0 * u[2] * u[3] +
                               1.5 * u[0] * u[0];
        // the "experiment" differs by a mild input-dependent bias plus noise
        const double bias = 1.2 * (u[3] - 0.5) + 0.8 * u[0] * u[5] - 0.5 * u[1];
        const double t_exp = t_model + bias + 0.3 * rng.normal();

        FluidizedBedRecord r;
        r.humidity = lo[0] + (hi[0] - lo[0]) * u[0];
        r.room_temp = lo[1] + (hi[1] - lo[1]) * u[1];
        r.pump_air_temp = lo[2] + (hi[2] - lo[2]) * u[2];
        r.coating_flow_rate = lo[3] + (hi[3] - lo[3]) * u[3];
        r.atomization_pressure = lo[4] + (hi[4] - lo[4]) * u[4];
        r.fluidization_velocity = lo[5] + (hi[5] - lo[5]) * u[5];
        r.t_experiment = t_exp;
        r.t_model = t_model;
        records.push_back(r);
    }
    return records;
}

double rmse(const Eigen::Ref<const Eigen::VectorXd>& predictions,
            const Eigen::Ref<const Eigen::VectorXd>& truth) {
    if (predictions.size() != truth.size() || predictions.size() == 0)
        throw std::invalid_argument("rmse: need equal-length non-empty vectors");
    return std::sqrt((predictions - truth).squaredNorm() /
                     static_cast<double>(predictions.size()));
}

}  // namespace mfgp
