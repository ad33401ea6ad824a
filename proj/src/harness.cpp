#include "mfgp/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mfgp/benchmarks.hpp"
#include "mfgp/mf_model.hpp"
#include "mfgp/rng.hpp"
#include "mfgp/scaling.hpp"

namespace mfgp {

const char* to_string(Strategy strategy) {
    switch (strategy) {
        case Strategy::MfUcr: return "mf_ucr";
        case Strategy::IfUcr: return "if_ucr";
        case Strategy::IfUcrBel: return "if_ucr_bel";
        case Strategy::SingleUs: return "single_us";
    }
    return "?";
}

Strategy strategy_from_string(const std::string& name) {
    if (name == "mf_ucr") return Strategy::MfUcr;
    if (name == "if_ucr") return Strategy::IfUcr;
    if (name == "if_ucr_bel") return Strategy::IfUcrBel;
    if (name == "single_us") return Strategy::SingleUs;
    throw std::invalid_argument("unknown strategy '" + name +
                                "' (expected mf_ucr, if_ucr, if_ucr_bel or single_us)");
}

int problem_dim(const std::string& problem) {
    if (problem == "forrester") return 1;
    if (problem == "park") return 4;
    if (problem == "fluidized_bed") return 6;
    throw std::invalid_argument("unknown problem '" + problem +
                                "' (expected forrester, park or fluidized_bed)");
}

void ExperimentConfig::validate() const {
    problem_dim(problem);  // throws on unknown problem
    if (iterations < 1) throw std::invalid_argument("config: iterations must be >= 1");
    if (replications < 1) throw std::invalid_argument("config: replications must be >= 1");
    if (n_init_low < 2) throw std::invalid_argument("config: n_init_low must be >= 2");
    if (n_init_high < 1) throw std::invalid_argument("config: n_init_high must be >= 1");
    if (pool_size < iterations)
        throw std::invalid_argument("config: pool_size must be >= iterations");
    if (holdout_size < 1) throw std::invalid_argument("config: holdout_size must be >= 1");
    if (!(cost_low > 0.0) || !(cost_high >= cost_low))
        throw std::invalid_argument("config: require cost_high >= cost_low > 0");
    if (chain_length < 100) throw std::invalid_argument("config: chain_length must be >= 100");
    if (!(burn_in_fraction >= 0.0) || !(burn_in_fraction < 1.0))
        throw std::invalid_argument("config: burn_in_fraction must lie in [0, 1)");
    if (!(step_scale > 0.0)) throw std::invalid_argument("config: step_scale must be positive");
    if (!(stop_rmse >= 0.0)) throw std::invalid_argument("config: stop_rmse must be >= 0");
    prior.validate();
}

namespace {

struct ReplicationSetup {
    InputNormalizer normalizer;
    Eigen::MatrixXd init_low_X, init_high_X;   // normalized inputs
    Eigen::VectorXd init_low_y, init_high_y;   // raw outputs
    Eigen::MatrixXd pool_low_X, pool_high_X;
    Eigen::VectorXd pool_low_y, pool_high_y;
    Eigen::MatrixXd holdout_X;
    Eigen::VectorXd holdout_y;                 // raw high-fidelity truth
    std::vector<int> holdout_rows;             // dataset rows, bed only

    explicit ReplicationSetup(InputNormalizer norm) : normalizer(std::move(norm)) {}
};

Eigen::MatrixXd draw_points(Rng& rng, int n, const Problem& prob, bool lhs) {
    return lhs ? latin_hypercube(rng, n, prob.lower, prob.upper)
               : uniform_points(rng, n, prob.lower, prob.upper);
}

Eigen::VectorXd evaluate_rows(const Eigen::MatrixXd& X,
                              const std::function<double(const Eigen::VectorXd&)>& f) {
    Eigen::VectorXd y(X.rows());
    for (Eigen::Index i = 0; i < X.rows(); ++i) y[i] = f(X.row(i));
    return y;
}

ReplicationSetup analytic_setup(const Problem& prob, const ExperimentConfig& cfg,
                                std::uint64_t rep_seed) {
    ReplicationSetup s(InputNormalizer(prob.lower, prob.upper));

    Rng rng_init(derive_seed(rep_seed, substream::kInitialDesign));
    const Eigen::MatrixXd raw_low = draw_points(rng_init, cfg.n_init_low, prob, cfg.use_latin_hypercube);
    const Eigen::MatrixXd raw_high = draw_points(rng_init, cfg.n_init_high, prob, cfg.use_latin_hypercube);
    s.init_low_X = s.normalizer.to_unit_rows(raw_low);
    s.init_low_y = evaluate_rows(raw_low, prob.eval_low);
    s.init_high_X = s.normalizer.to_unit_rows(raw_high);
    s.init_high_y = evaluate_rows(raw_high, prob.eval_high);

    Rng rng_pools(derive_seed(rep_seed, substream::kPools));
    const Eigen::MatrixXd raw_pool_low = draw_points(rng_pools, cfg.pool_size, prob, cfg.use_latin_hypercube);
    const Eigen::MatrixXd raw_pool_high = draw_points(rng_pools, cfg.pool_size, prob, cfg.use_latin_hypercube);
    s.pool_low_X = s.normalizer.to_unit_rows(raw_pool_low);
    s.pool_low_y = evaluate_rows(raw_pool_low, prob.eval_low);
    s.pool_high_X = s.normalizer.to_unit_rows(raw_pool_high);
    s.pool_high_y = evaluate_rows(raw_pool_high, prob.eval_high);

    Rng rng_holdout(derive_seed(rep_seed, substream::kHoldout));
    const Eigen::MatrixXd raw_holdout = uniform_points(rng_holdout, cfg.holdout_size, prob.lower, prob.upper);
    s.holdout_X = s.normalizer.to_unit_rows(raw_holdout);
    s.holdout_y = evaluate_rows(raw_holdout, prob.eval_high);
    return s;
}

InputNormalizer bed_normalizer(const std::vector<FluidizedBedRecord>& records) {
    Eigen::MatrixXd X(static_cast<Eigen::Index>(records.size()), 6);
    for (std::size_t i = 0; i < records.size(); ++i)
        X.row(static_cast<Eigen::Index>(i)) = records[i].inputs().transpose();
    Eigen::VectorXd lo = X.colwise().minCoeff();
    Eigen::VectorXd hi = X.colwise().maxCoeff();
    for (Eigen::Index k = 0; k < 6; ++k)
        if (!(hi[k] > lo[k])) hi[k] = lo[k] + 1.0;  // constant column: leave unscaled
    return InputNormalizer(std::move(lo), hi);
}

ReplicationSetup bed_setup(const std::vector<FluidizedBedRecord>& records,
                           const ExperimentConfig& cfg, std::uint64_t rep_seed) {
    const int n = static_cast<int>(records.size());
    if (cfg.holdout_size >= n)
        throw std::invalid_argument("fluidized_bed: holdout_size must be below the record count");
    const int n_train = n - cfg.holdout_size;
    if (cfg.n_init_high > n_train || cfg.n_init_low > n_train)
        throw std::invalid_argument("fluidized_bed: initial designs exceed the non-holdout rows");
    if (n_train - cfg.n_init_low < 1 || n_train - cfg.n_init_high < 1)
        throw std::invalid_argument("fluidized_bed: no candidate rows left after the initial design");

    ReplicationSetup s(bed_normalizer(records));

    Rng rng_holdout(derive_seed(rep_seed, substream::kHoldout));
    std::vector<int> holdout = sample_without_replacement(rng_holdout, n, cfg.holdout_size);
    std::sort(holdout.begin(), holdout.end());
    std::vector<char> is_holdout(static_cast<std::size_t>(n), 0);
    for (int r : holdout) is_holdout[static_cast<std::size_t>(r)] = 1;

    std::vector<int> train_rows;
    for (int r = 0; r < n; ++r)
        if (!is_holdout[static_cast<std::size_t>(r)]) train_rows.push_back(r);

    Rng rng_init(derive_seed(rep_seed, substream::kInitialDesign));
    const auto pick_high = sample_without_replacement(rng_init, n_train, cfg.n_init_high);
    const auto pick_low = sample_without_replacement(rng_init, n_train, cfg.n_init_low);
    std::vector<char> used_high(static_cast<std::size_t>(n_train), 0);
    std::vector<char> used_low(static_cast<std::size_t>(n_train), 0);
    for (int i : pick_high) used_high[static_cast<std::size_t>(i)] = 1;
    for (int i : pick_low) used_low[static_cast<std::size_t>(i)] = 1;

    auto fill = [&](const std::vector<int>& rows, bool low_fidelity, Eigen::MatrixXd& X,
                    Eigen::VectorXd& y) {
        X.resize(static_cast<Eigen::Index>(rows.size()), 6);
        y.resize(static_cast<Eigen::Index>(rows.size()));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const FluidizedBedRecord& rec = records[static_cast<std::size_t>(rows[i])];
            X.row(static_cast<Eigen::Index>(i)) = s.normalizer.to_unit(rec.inputs()).transpose();
            y[static_cast<Eigen::Index>(i)] = low_fidelity ? rec.t_model : rec.t_experiment;
        }
    };

    std::vector<int> init_low, init_high, pool_low, pool_high;
    for (int i : pick_low) init_low.push_back(train_rows[static_cast<std::size_t>(i)]);
    for (int i : pick_high) init_high.push_back(train_rows[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n_train; ++i) {
        if (!used_low[static_cast<std::size_t>(i)])
            pool_low.push_back(train_rows[static_cast<std::size_t>(i)]);
        if (!used_high[static_cast<std::size_t>(i)])
            pool_high.push_back(train_rows[static_cast<std::size_t>(i)]);
    }

    fill(init_low, true, s.init_low_X, s.init_low_y);
    fill(init_high, false, s.init_high_X, s.init_high_y);
    fill(pool_low, true, s.pool_low_X, s.pool_low_y);
    fill(pool_high, false, s.pool_high_X, s.pool_high_y);
    fill(holdout, false, s.holdout_X, s.holdout_y);
    s.holdout_rows = holdout;
    return s;
}

std::pair<Eigen::MatrixXd, std::vector<Eigen::Index>> active_rows(const CandidatePool& pool,
                                                                  FidelityLevel level) {
    std::vector<Eigen::Index> map;
    for (Eigen::Index i = 0; i < pool.total(level); ++i)
        if (!pool.consumed(level, i)) map.push_back(i);
    Eigen::MatrixXd X(static_cast<Eigen::Index>(map.size()), pool.rows(level).cols());
    for (std::size_t i = 0; i < map.size(); ++i)
        X.row(static_cast<Eigen::Index>(i)) = pool.rows(level).row(map[i]);
    return {std::move(X), std::move(map)};
}

void run_replication(int rep, const ReplicationSetup& setup, const ExperimentConfig& cfg,
                     RunResult& out) {
    const CostModel cost(cfg.cost_low, cfg.cost_high);
    CandidatePool pool(setup.pool_low_X, setup.pool_high_X);
    TrainingSet d_eta(setup.init_low_X, setup.init_low_y);
    TrainingSet d_y(setup.init_high_X, setup.init_high_y);

    const std::uint64_t rep_seed = cfg.seed + static_cast<std::uint64_t>(rep);
    const std::uint64_t mcmc_base = derive_seed(rep_seed, substream::kMcmc);
    double cumulative_cost = 0.0;
    bool truncated = false;

    for (int it = 1; it <= cfg.iterations; ++it) {
        const bool needs_low = cfg.strategy != Strategy::SingleUs;
        if (pool.active_count(FidelityLevel::High) == 0 ||
            (needs_low && pool.active_count(FidelityLevel::Low) == 0)) {
            truncated = true;
            break;
        }

        ChainConfig chain;
        chain.length = cfg.chain_length;
        chain.burn_in_fraction = cfg.burn_in_fraction;
        chain.step_scale = cfg.step_scale;
        chain.seed = derive_seed(mcmc_base, static_cast<std::uint64_t>(it));

        Decision decision;
        Eigen::VectorXd holdout_pred(setup.holdout_X.rows());

        if (cfg.strategy == Strategy::SingleUs) {
            const OutputScaler scaler = OutputScaler::fit(d_y.outputs);
            TrainingSet std_y(d_y.inputs, scaler.standardize(d_y.outputs));
            CondensedGP gp(std_y, condense(run_chain(std_y, cfg.prior, chain)));

            auto [candidates, map] = active_rows(pool, FidelityLevel::High);
            decision = select_uncertainty(gp, candidates);
            decision.pool_row = map[static_cast<std::size_t>(decision.pool_row)];
            for (Eigen::Index i = 0; i < setup.holdout_X.rows(); ++i)
                holdout_pred[i] = scaler.unstandardize(gp.predict(setup.holdout_X.row(i)).mean);
        } else {
            Eigen::VectorXd all_outputs(d_eta.size() + d_y.size());
            all_outputs << d_eta.outputs, d_y.outputs;
            const OutputScaler scaler = OutputScaler::fit(all_outputs);
            TrainingSet std_eta(d_eta.inputs, scaler.standardize(d_eta.outputs));
            TrainingSet std_y(d_y.inputs, scaler.standardize(d_y.outputs));
            const MultiFidelityModel model = fit_mf(std_eta, std_y, cfg.prior, chain);

            switch (cfg.strategy) {
                case Strategy::MfUcr: decision = select_mf_ucr(model, pool, cost); break;
                case Strategy::IfUcr: decision = select_if_ucr(model, pool, cost); break;
                case Strategy::IfUcrBel: decision = select_if_ucr_bel(model, pool, cost); break;
                case Strategy::SingleUs: break;  // unreachable
            }
            for (Eigen::Index i = 0; i < setup.holdout_X.rows(); ++i)
                holdout_pred[i] =
                    scaler.unstandardize(predict_mf(model, setup.holdout_X.row(i)).mean);
        }

        const double y_raw = decision.level == FidelityLevel::Low
                                 ? setup.pool_low_y[decision.pool_row]
                                 : setup.pool_high_y[decision.pool_row];
        pool.consume(decision.level, decision.pool_row);
        if (decision.level == FidelityLevel::Low)
            d_eta = d_eta.with_point(decision.point, y_raw);
        else
            d_y = d_y.with_point(decision.point, y_raw);
        cumulative_cost += cost.of(decision.level);

        const double holdout_rmse = rmse(holdout_pred, setup.holdout_y);
        for (Eigen::Index i = 0; i < holdout_pred.size(); ++i)
            out.predictions.push_back(
                {rep, it, static_cast<int>(i), holdout_pred[i], setup.holdout_y[i]});
        out.records.push_back({rep, it, setup.normalizer.to_domain(decision.point),
                               decision.level, holdout_rmse, cumulative_cost,
                               pool.active_count(FidelityLevel::Low),
                               pool.active_count(FidelityLevel::High)});

        if (cfg.stop_rmse > 0.0 && holdout_rmse <= cfg.stop_rmse) break;
    }
    if (truncated) out.truncated_replications.push_back(rep);
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config) {
    config.validate();

    RunResult result;
    result.config = config;

    const bool is_bed = config.problem == "fluidized_bed";
    std::vector<FluidizedBedRecord> records;
    Problem prob;
    if (is_bed) {
        records = config.bed_data.empty() ? synthetic_fluidized_bed(0)
                                          : load_fluidized_bed(config.bed_data);
        if (records.empty())
            throw std::invalid_argument("fluidized_bed: dataset has no records");
    } else {
        prob = config.problem == "park" ? make_park_problem() : make_forrester_problem();
    }

    for (int rep = 0; rep < config.replications; ++rep) {
        const std::uint64_t rep_seed = config.seed + static_cast<std::uint64_t>(rep);
        ReplicationSetup setup = is_bed ? bed_setup(records, config, rep_seed)
                                        : analytic_setup(prob, config, rep_seed);
        result.holdout_indices.push_back(setup.holdout_rows);
        run_replication(rep, setup, config, result);
    }
    return result;
}

namespace {

double quantile(std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    const double h = q * static_cast<double>(v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    const double frac = h - static_cast<double>(lo);
    return v[lo] + frac * (v[hi] - v[lo]);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<IterationRecord>& records,
                                  const ExperimentConfig& config) {
    int max_it = 0;
    for (const auto& r : records) max_it = std::max(max_it, r.iteration);

    std::vector<SummaryRow> rows;
    for (int it = 1; it <= max_it; ++it) {
        std::vector<double> errs, costs;
        for (const auto& r : records) {
            if (r.iteration != it) continue;
            errs.push_back(r.rmse);
            costs.push_back(r.cumulative_cost);
        }
        if (errs.empty()) continue;
        rows.push_back({to_string(config.strategy), config.cost_high, config.cost_low, it,
                        quantile(errs, 0.5), quantile(errs, 0.75) - quantile(errs, 0.25),
                        quantile(costs, 0.5), quantile(costs, 0.75) - quantile(costs, 0.25)});
    }
    return rows;
}

void emit_results(const RunResult& result, const std::vector<SummaryRow>& summary,
                  const std::string& prefix) {
    const int dim = problem_dim(result.config.problem);

    const auto parent = std::filesystem::path(prefix + "iterations.csv").parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);

    {
        const std::string path = prefix + "iterations.csv";
        std::ofstream out(path);
        if (!out) throw std::runtime_error("emit_results: cannot open " + path);
        out << "replication,iteration,level,rmse,cumulative_cost,pool_low_remaining,pool_high_remaining";
        for (int k = 0; k < dim; ++k) out << ",x" << k;
        out << "\n";
        for (const auto& r : result.records) {
            out << r.replication << ',' << r.iteration << ',' << to_string(r.level) << ','
                << fmt(r.rmse) << ',' << fmt(r.cumulative_cost) << ',' << r.pool_low_remaining
                << ',' << r.pool_high_remaining;
            for (int k = 0; k < dim; ++k) out << ',' << fmt(r.point[k]);
            out << "\n";
        }
        if (!out) throw std::runtime_error("emit_results: failed writing " + path);
    }

    {
        const std::string path = prefix + "summary.csv";
        std::ofstream out(path);
        if (!out) throw std::runtime_error("emit_results: cannot open " + path);
        out << "strategy,cost_high,cost_low,iteration,rmse_median,rmse_iqr,cost_median,cost_iqr\n";
        for (const auto& s : summary)
            out << s.strategy << ',' << fmt(s.cost_high) << ',' << fmt(s.cost_low) << ','
                << s.iteration << ',' << fmt(s.rmse_median) << ',' << fmt(s.rmse_iqr) << ','
                << fmt(s.cost_median) << ',' << fmt(s.cost_iqr) << "\n";
        if (!out) throw std::runtime_error("emit_results: failed writing " + path);
    }

    {
        const std::string path = prefix + "predictions.csv";
        std::ofstream out(path);
        if (!out) throw std::runtime_error("emit_results: cannot open " + path);
        out << "replication,iteration,holdout_index,prediction,truth\n";
        for (const auto& p : result.predictions)
            out << p.replication << ',' << p.iteration << ',' << p.index << ','
                << fmt(p.predicted) << ',' << fmt(p.truth) << "\n";
        if (!out) throw std::runtime_error("emit_results: failed writing " + path);
    }

    {
        nlohmann::json j;
        j["version"] = kVersion;
        const ExperimentConfig& c = result.config;
        j["config"] = {{"problem", c.problem},
                       {"strategy", to_string(c.strategy)},
                       {"cost_high", c.cost_high},
                       {"cost_low", c.cost_low},
                       {"iterations", c.iterations},
                       {"replications", c.replications},
                       {"n_init_low", c.n_init_low},
                       {"n_init_high", c.n_init_high},
                       {"pool_size", c.pool_size},
                       {"holdout_size", c.holdout_size},
                       {"seed", c.seed},
                       {"chain_length", c.chain_length},
                       {"burn_in_fraction", c.burn_in_fraction},
                       {"step_scale", c.step_scale},
                       {"use_latin_hypercube", c.use_latin_hypercube},
                       {"stop_rmse", c.stop_rmse},
                       {"bed_data", c.bed_data},
                       {"prior",
                        {{"sigma_loc", c.prior.sigma_loc},
                         {"sigma_scale", c.prior.sigma_scale},
                         {"beta_loc", c.prior.beta_loc},
                         {"beta_scale", c.prior.beta_scale},
                         {"lambda_loc", c.prior.lambda_loc},
                         {"lambda_scale", c.prior.lambda_scale}}}};
        std::vector<std::uint64_t> rep_seeds;
        for (int rep = 0; rep < c.replications; ++rep)
            rep_seeds.push_back(c.seed + static_cast<std::uint64_t>(rep));
        j["replication_seeds"] = rep_seeds;
        j["substreams"] = {{"initial_design", substream::kInitialDesign},
                           {"pools", substream::kPools},
                           {"holdout", substream::kHoldout},
                           {"mcmc", substream::kMcmc}};
        j["holdout_indices"] = result.holdout_indices;
        j["truncated_replications"] = result.truncated_replications;

        const std::string path = prefix + "run.json";
        std::ofstream out(path);
        if (!out) throw std::runtime_error("emit_results: cannot open " + path);
        out << j.dump(2) << "\n";
        if (!out) throw std::runtime_error("emit_results: failed writing " + path);
    }
}

std::vector<IterationRecord> read_iteration_records(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("read_iteration_records: cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("read_iteration_records: empty file " + path.string());

    int dim = 0;
    {
        std::istringstream header(line);
        std::string col;
        while (std::getline(header, col, ','))
            if (!col.empty() && col[0] == 'x') ++dim;
    }

    std::vector<IterationRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string cell;
        auto next = [&]() {
            if (!std::getline(ss, cell, ','))
                throw std::runtime_error("read_iteration_records: truncated row in " +
                                         path.string());
            return cell;
        };
        IterationRecord r;
        r.replication = std::stoi(next());
        r.iteration = std::stoi(next());
        const std::string level = next();
        if (level != "low" && level != "high")
            throw std::runtime_error("read_iteration_records: bad level '" + level + "'");
        r.level = level == "low" ? FidelityLevel::Low : FidelityLevel::High;
        r.rmse = std::stod(next());
        r.cumulative_cost = std::stod(next());
        r.pool_low_remaining = std::stol(next());
        r.pool_high_remaining = std::stol(next());
        r.point.resize(dim);
        for (int k = 0; k < dim; ++k) r.point[k] = std::stod(next());
        records.push_back(std::move(r));
    }
    return records;
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

bool parse_bool(const std::string& v, const std::string& key) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument("config: bad boolean for '" + key + "': " + v);
}

}  // namespace

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_config: cannot open " + path.string());

    ExperimentConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "problem") cfg.problem = value;
            else if (key == "strategy") cfg.strategy = strategy_from_string(value);
            else if (key == "cost_high") cfg.cost_high = std::stod(value);
            else if (key == "cost_low") cfg.cost_low = std::stod(value);
            else if (key == "cost_ratio") {
                const auto colon = value.find(':');
                if (colon == std::string::npos)
                    throw std::invalid_argument("expected H:L");
                cfg.cost_high = std::stod(value.substr(0, colon));
                cfg.cost_low = std::stod(value.substr(colon + 1));
            } else if (key == "iterations") cfg.iterations = std::stoi(value);
            else if (key == "replications") cfg.replications = std::stoi(value);
            else if (key == "n_init_low") cfg.n_init_low = std::stoi(value);
            else if (key == "n_init_high") cfg.n_init_high = std::stoi(value);
            else if (key == "pool_size") cfg.pool_size = std::stoi(value);
            else if (key == "holdout_size") cfg.holdout_size = std::stoi(value);
            else if (key == "seed") cfg.seed = std::stoull(value);
            else if (key == "chain_length") cfg.chain_length = std::stoi(value);
            else if (key == "burn_in_fraction") cfg.burn_in_fraction = std::stod(value);
            else if (key == "step_scale") cfg.step_scale = std::stod(value);
            else if (key == "sigma_prior_loc") cfg.prior.sigma_loc = std::stod(value);
            else if (key == "sigma_prior_scale") cfg.prior.sigma_scale = std::stod(value);
            else if (key == "beta_prior_loc") cfg.prior.beta_loc = std::stod(value);
            else if (key == "beta_prior_scale") cfg.prior.beta_scale = std::stod(value);
            else if (key == "lambda_prior_loc") cfg.prior.lambda_loc = std::stod(value);
            else if (key == "lambda_prior_scale") cfg.prior.lambda_scale = std::stod(value);
            else if (key == "use_latin_hypercube") cfg.use_latin_hypercube = parse_bool(value, key);
            else if (key == "stop_rmse") cfg.stop_rmse = std::stod(value);
            else if (key == "bed_data") cfg.bed_data = value;
            else
                throw std::invalid_argument("unknown config key '" + key + "'");
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

}  // namespace mfgp
