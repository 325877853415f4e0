// fiqsim: reproducible experiment runner for finite-information-quantity
// dynamics, hidden-variable supplements, and the randomness test battery.
//
// Subcommands: info, evolve, compare, qmeasure, diverge.
// Every run persists its resolved config next to its outputs; re-running from
// that config reproduces the payload files byte for byte. Exit codes:
// 0 success, 1 validation error, 2 budget/undecided runtime error.
#include <CLI11.hpp>
#include <json.hpp>

#include "fiqsim/dynamics.hpp"
#include "fiqsim/io.hpp"
#include "fiqsim/qmodel.hpp"
#include "fiqsim/stats.hpp"
#include "fiqsim/tape.hpp"
#include "fiqsim/version.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace fiqsim;

namespace {

// Test hook for the power check: replaces tail (1/2) propensities on the fiq
// side with a fixed bias before the draw.
class BiasedActualizer final : public ActualizeSource {
public:
    BiasedActualizer(ActualizeSource& inner, Rational bias) : inner_(&inner), bias_(std::move(bias)) {}
    int draw_bit(std::uint64_t position, const Rational& propensity) override {
        return inner_->draw_bit(position, propensity == Rational(1, 2) ? bias_ : propensity);
    }

private:
    ActualizeSource* inner_;
    Rational bias_;
};

json load_config_file(const std::string& path) {
    json j = json::parse(read_file(path));
    if (!j.is_object()) throw std::invalid_argument("config root must be a JSON object");
    return j;
}

// defaults <- file <- explicit CLI overrides
json resolve_config(json defaults, const std::optional<std::string>& config_path,
                    const std::vector<std::pair<std::string, json>>& overrides) {
    if (config_path) {
        json file = load_config_file(*config_path);
        for (auto& [key, value] : file.items()) {
            if (!defaults.contains(key)) {
                throw std::invalid_argument("unknown config key '" + key + "'");
            }
            defaults[key] = value;
        }
    }
    for (const auto& [key, value] : overrides) defaults[key] = value;
    return defaults;
}

std::string config_hash(const json& resolved) {
    return hash_hex(fnv1a64(resolved.dump()));
}

void persist_run(const fs::path& out, const json& resolved) {
    fs::create_directories(out);
    write_file((out / "config.json").string(), resolved.dump(2) + "\n");
    // Wall-clock info lives outside the payload so payloads stay byte-stable.
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(now).count();
    write_file((out / "run.log").string(),
               "fiqsim " FIQSIM_VERSION "\nunix_time " + std::to_string(secs) + "\n");
}

std::string csv_provenance(const std::string& hash, std::uint64_t seed) {
    return "# config=" + hash + " seed=" + std::to_string(seed) + "\n";
}

FiqState parse_state(const MapSpec& map, const json& cfg) {
    FiqState st;
    st.x = Fiq::parse(cfg.at("x0").get<std::string>());
    if (map.two_dimensional()) st.y = Fiq::parse(cfg.at("y0").get<std::string>());
    return st;
}

json trajectory_steps_json(const Trajectory& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        steps.push_back({{"step", s.step},
                         {"emitted_digits", bits_str(s.emitted)},
                         {"actualized_positions", s.actualized_positions},
                         {"interval_width", rational_str(s.interval_width)},
                         {"information_after", s.info_after}});
    }
    return steps;
}

// ---- info ----------------------------------------------------------------

int cmd_info(const json& cfg, const std::optional<std::string>& out_dir) {
    const std::string literal = cfg.at("literal").get<std::string>();
    Fiq x = Fiq::parse(literal);
    std::cout << "fiq " << x.str() << "\n";
    json bits = json::array();
    for (const auto& [pos, cell] : x.cells()) {
        const double info = cell.det ? 1.0 : bit_information(cell.prop);
        std::cout << "  bit " << pos << ": "
                  << (cell.det ? std::string(1, static_cast<char>('0' + cell.bit))
                               : "propensity " + rational_str(cell.prop.value()))
                  << "  I = " << info << "\n";
        bits.push_back({{"position", pos},
                        {"determined", cell.det},
                        {"value", cell.det ? rational_str(Rational(cell.bit))
                                           : rational_str(cell.prop.value())},
                        {"information", info}});
    }
    const double total = x.information_content();
    std::cout << "I(x) = " << total << " bits over " << x.explicit_len()
              << " explicit positions (tail contributes 0)\n";
    if (out_dir) {
        fs::path out(*out_dir);
        persist_run(out, cfg);
        json j{{"literal", x.str()}, {"bits", bits}, {"information_content", total},
               {"config_hash", config_hash(cfg)}};
        write_file((out / "info.json").string(), j.dump(2) + "\n");
    }
    return 0;
}

// ---- evolve ----------------------------------------------------------------

Trajectory run_evolution(const json& cfg) {
    const MapSpec map = MapSpec::from_name(cfg.at("map").get<std::string>());
    const FiqState x0 = parse_state(map, cfg);
    const std::uint64_t steps = cfg.at("steps").get<std::uint64_t>();
    const int m = cfg.at("precision").get<int>();
    const int budget = cfg.at("budget").get<int>();
    const std::uint64_t seed = cfg.at("seed").get<std::uint64_t>();
    const std::string model = cfg.at("model").get<std::string>();
    if (model == "fiq") {
        RandomSource rng(seed);
        return evolve(map, x0, steps, m, rng, budget);
    }
    if (model == "tape") {
        BitTape tape = BitTape::from_seed(seed);
        return evolve_supplemented(map, tape, steps, m, budget, x0);
    }
    throw std::invalid_argument("model must be 'fiq' or 'tape'");
}

int cmd_evolve(const json& cfg, const std::string& out_dir, const std::string& format) {
    Trajectory traj = run_evolution(cfg);
    const std::string hash = config_hash(cfg);
    fs::path out(out_dir);
    persist_run(out, cfg);
    if (format == "json") {
        json j{{"manifest", json::parse(trajectory_manifest_json(traj, hash))},
               {"steps", trajectory_steps_json(traj)}};
        write_file((out / "trajectory.json").string(), j.dump(2) + "\n");
    } else {
        write_file((out / "trajectory.csv").string(),
                   csv_provenance(hash, traj.manifest.seed) + trajectory_csv(traj));
    }
    write_file((out / "manifest.json").string(), trajectory_manifest_json(traj, hash));
    std::cout << "map " << traj.manifest.map << ", model " << traj.manifest.model << ", seed "
              << traj.manifest.seed << "\n"
              << "bits emitted " << traj.steps.size() * static_cast<std::size_t>(traj.manifest.precision)
              << ", bits consumed " << traj.bits_consumed() << "\n";
    if (traj.manifest.model == "fiq") {
        std::cout << "final I(x) = " << traj.final_information() << " bits\n";
    }
    std::cout << "wrote " << (out / (format == "json" ? "trajectory.json" : "trajectory.csv")).string()
              << "\n";
    return 0;
}

// ---- compare ----------------------------------------------------------------

int cmd_compare(const json& cfg, const std::string& out_dir) {
    const MapSpec map = MapSpec::from_name(cfg.at("map").get<std::string>());
    const std::uint64_t seeds = cfg.at("seeds").get<std::uint64_t>();
    if (seeds < 50) throw std::invalid_argument("ensemble too small: need >= 50 seeds per model");
    const std::uint64_t base = cfg.at("seed").get<std::uint64_t>();
    const std::uint64_t steps = cfg.at("steps").get<std::uint64_t>();
    const int m = cfg.at("precision").get<int>();
    const int budget = cfg.at("budget").get<int>();
    const double alpha = cfg.at("alpha").get<double>();
    const FiqState x0 = parse_state(map, cfg);
    std::optional<Rational> bias;
    if (!cfg.at("fiq_bias").get<std::string>().empty()) {
        bias = parse_rational(cfg.at("fiq_bias").get<std::string>());
    }

    std::vector<DigitStream> fiq_streams, tape_streams;
    fiq_streams.reserve(seeds);
    tape_streams.reserve(seeds);
    for (std::uint64_t i = 0; i < seeds; ++i) {
        RandomSource rng(base + i);
        RngActualizer plain(rng);
        Trajectory ft;
        if (bias) {
            BiasedActualizer biased(plain, *bias);
            ft = evolve_with_source(map, x0, steps, m, biased, budget, "fiq", rng.seed());
        } else {
            ft = evolve_with_source(map, x0, steps, m, plain, budget, "fiq", rng.seed());
        }
        fiq_streams.push_back({ft.emitted_stream(), "fiq-" + std::to_string(base + i)});

        BitTape tape = BitTape::from_seed(base + i);
        Trajectory tt = evolve_supplemented(map, tape, steps, m, budget, x0);
        tape_streams.push_back({tt.emitted_stream(), "tape-" + std::to_string(base + i)});
    }

    std::vector<TestReport> equivalence;
    bool any_reject = false;
    for (int k : cfg.at("block_lengths").get<std::vector<int>>()) {
        TestReport r = two_sample_equivalence(fiq_streams, tape_streams, k, alpha);
        any_reject |= r.reject;
        equivalence.push_back(std::move(r));
    }

    // Per-stream battery: rejection counts per model at the battery alpha.
    json battery = json::array();
    auto run_battery = [&](const std::vector<DigitStream>& streams, const std::string& model) {
        std::uint64_t mono = 0, block = 0, serial = 0;
        for (const auto& s : streams) {
            mono += monobit_test(s, alpha).reject ? 1 : 0;
            block += block_frequency_test(s, 2, alpha).reject ? 1 : 0;
            serial += serial_correlation(s, 1, alpha).reject ? 1 : 0;
        }
        battery.push_back({{"model", model},
                           {"streams", streams.size()},
                           {"alpha", alpha},
                           {"monobit_rejections", mono},
                           {"block_frequency_k2_rejections", block},
                           {"serial_lag1_rejections", serial}});
    };
    run_battery(fiq_streams, "fiq");
    run_battery(tape_streams, "tape");

    const std::string hash = config_hash(cfg);
    fs::path out(out_dir);
    persist_run(out, cfg);
    json report{{"config_hash", hash},
                {"map", map.name()},
                {"seeds_per_model", seeds},
                {"base_seed", base},
                {"stream_bits", steps * static_cast<std::uint64_t>(m)},
                {"equivalence", json::parse(reports_to_json(equivalence))},
                {"battery", battery},
                {"verdict", any_reject ? "distinguished"
                                       : "indistinguishable at alpha=" + std::to_string(alpha)}};
    write_file((out / "report.json").string(), report.dump(2) + "\n");
    write_file((out / "equivalence.csv").string(), reports_to_csv(equivalence));
    std::cout << "verdict: " << report["verdict"].get<std::string>() << "\n"
              << "wrote " << (out / "report.json").string() << "\n";
    return 0;
}

// ---- qmeasure ----------------------------------------------------------------

std::vector<Rational> measurement_probabilities(const json& cfg) {
    std::vector<Rational> ps;
    const json& probs = cfg.at("probabilities");
    const json& pairs = cfg.at("pairs");
    if (!probs.empty() && !pairs.empty()) {
        throw std::invalid_argument("give either 'probabilities' or 'pairs', not both");
    }
    for (const auto& p : probs) {
        Rational q = parse_rational(p.get<std::string>());
        if (q < 0 || q > 1) throw std::invalid_argument("probability outside [0,1]: " + p.get<std::string>());
        ps.push_back(std::move(q));
    }
    for (const auto& pair : pairs) {
        std::vector<std::complex<double>> amps;
        for (const auto& entry : pair.at("state")) {
            amps.emplace_back(entry.at(0).get<double>(), entry.at(1).get<double>());
        }
        QState psi = QState::make(std::move(amps));
        const json& rows = pair.at("projector");
        std::vector<std::complex<double>> proj;
        for (const auto& row : rows) {
            for (const auto& entry : row) {
                proj.emplace_back(entry.at(0).get<double>(), entry.at(1).get<double>());
            }
        }
        BinaryMeasurement meas = BinaryMeasurement::make(psi.dim(), std::move(proj));
        // Exact dyadic image of the computed double keeps the comparison exact.
        ps.emplace_back(born_probability(psi, meas));
    }
    if (ps.empty()) throw std::invalid_argument("no measurements configured");
    return ps;
}

int cmd_qmeasure(const json& cfg, const std::string& out_dir) {
    const std::vector<Rational> ps = measurement_probabilities(cfg);
    const std::uint64_t trials = cfg.at("trials").get<std::uint64_t>();
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    const std::uint64_t base = cfg.at("seed").get<std::uint64_t>();
    const std::uint32_t limit = cfg.at("comparison_limit").get<std::uint32_t>();

    std::vector<std::uint64_t> plus_counts(ps.size(), 0);
    std::string rows;
    for (std::uint64_t trial = 1; trial <= trials; ++trial) {
        std::vector<int> outs;
        try {
            outs = run_measurement_sequence(ps, HiddenVar::from_seed(base + trial - 1), limit);
        } catch (const UndecidedError& e) {
            throw std::runtime_error("trial " + std::to_string(trial) + ": " + e.what());
        }
        for (std::size_t j = 0; j < outs.size(); ++j) {
            if (outs[j] > 0) ++plus_counts[j];
            rows += std::to_string(trial) + "," + std::to_string(j + 1) + "," +
                    (outs[j] > 0 ? "+1" : "-1") + "\n";
        }
    }

    json steps = json::array();
    bool all_within = true;
    for (std::size_t j = 0; j < ps.size(); ++j) {
        const double p = ps[j].convert_to<double>();
        const double freq = static_cast<double>(plus_counts[j]) / static_cast<double>(trials);
        const double bound = 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
        const bool within = std::abs(freq - p) <= bound || trials < 16;
        all_within &= within;
        steps.push_back({{"step", j + 1},
                         {"p", rational_str(ps[j])},
                         {"frequency", freq},
                         {"bound_4sigma", bound},
                         {"within", within}});
    }

    const std::string hash = config_hash(cfg);
    fs::path out(out_dir);
    persist_run(out, cfg);
    write_file((out / "outcomes.csv").string(),
               csv_provenance(hash, base) + "trial,step,outcome\n" + rows);
    json summary{{"config_hash", hash},
                 {"trials", trials},
                 {"base_seed", base},
                 {"steps", steps},
                 {"verdict", all_within ? "frequencies within 4 sigma" : "frequency deviation beyond 4 sigma"}};
    write_file((out / "summary.json").string(), summary.dump(2) + "\n");
    std::cout << "ran " << trials << " trials of " << ps.size() << " measurements\n"
              << "verdict: " << summary["verdict"].get<std::string>() << "\n"
              << "wrote " << (out / "outcomes.csv").string() << "\n";
    return 0;
}

// ---- diverge ----------------------------------------------------------------

int cmd_diverge(const json& cfg, const std::string& out_dir) {
    const MapSpec map = MapSpec::from_name(cfg.at("map").get<std::string>());
    const std::vector<std::uint32_t> ks = cfg.at("k_list").get<std::vector<std::uint32_t>>();
    if (ks.empty()) throw std::invalid_argument("k_list must be non-empty");
    const std::uint32_t trials = cfg.at("trials").get<std::uint32_t>();
    const std::uint64_t horizon = cfg.at("horizon").get<std::uint64_t>();
    const std::uint32_t depth = cfg.at("depth").get<std::uint32_t>();
    const std::uint64_t seed = cfg.at("seed").get<std::uint64_t>();

    RandomSource rng(seed);
    std::vector<DivergenceResult> all;
    json summary_rows = json::array();
    for (std::uint32_t k : ks) {
        auto rows = divergence_experiment(map, k, trials, rng, horizon, depth);
        std::uint64_t censored = 0, lo = UINT64_MAX, hi = 0, sum = 0, n = 0;
        for (const auto& r : rows) {
            if (!r.step) {
                ++censored;
                continue;
            }
            lo = std::min(lo, *r.step);
            hi = std::max(hi, *r.step);
            sum += *r.step;
            ++n;
        }
        json row{{"k", k}, {"trials", trials}, {"censored", censored}};
        if (n > 0) {
            row["mean"] = static_cast<double>(sum) / static_cast<double>(n);
            row["min"] = lo;
            row["max"] = hi;
        }
        summary_rows.push_back(std::move(row));
        all.insert(all.end(), rows.begin(), rows.end());
    }

    const std::string hash = config_hash(cfg);
    fs::path out(out_dir);
    persist_run(out, cfg);
    write_file((out / "divergence.csv").string(), csv_provenance(hash, seed) + divergence_csv(all));
    json summary{{"config_hash", hash}, {"map", map.name()}, {"seed", seed},
                 {"horizon", horizon}, {"per_k", summary_rows}};
    write_file((out / "summary.json").string(), summary.dump(2) + "\n");
    std::cout << "divergence over k = {";
    for (std::size_t i = 0; i < ks.size(); ++i) std::cout << (i ? "," : "") << ks[i];
    std::cout << "}, " << trials << " trials each\n"
              << "wrote " << (out / "divergence.csv").string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-information dynamics simulator (" FIQSIM_VERSION ")"};
    app.require_subcommand(1);

    std::optional<std::string> config_path;
    std::optional<std::uint64_t> seed_flag;
    std::string out_dir = "fiqsim_out";
    std::string format = "csv";

    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--seed", seed_flag, "seed override");
        sub->add_option("--out", out_dir, "output directory");
        if (with_format) {
            sub->add_option("--format", format, "bulk output format")
                ->check(CLI::IsMember({"csv", "json"}));
        }
    };

    // info
    auto* info = app.add_subcommand("info", "information content of a fiq literal");
    std::optional<std::string> literal_arg;
    info->add_option("literal", literal_arg, "fiq literal, e.g. \"101?(1/4)?*\"");
    std::optional<std::string> info_out;
    info->add_option("--config", config_path, "JSON config file");
    info->add_option("--out", info_out, "optional output directory");

    // evolve
    auto* evolve_cmd = app.add_subcommand("evolve", "run one trajectory");
    add_common(evolve_cmd);
    std::optional<std::string> map_flag, model_flag, x0_flag;
    std::optional<std::uint64_t> steps_flag;
    std::optional<int> precision_flag, budget_flag;
    evolve_cmd->add_option("--map", map_flag, "map name");
    evolve_cmd->add_option("--model", model_flag, "fiq or tape");
    evolve_cmd->add_option("--x0", x0_flag, "initial fiq literal");
    evolve_cmd->add_option("--steps", steps_flag, "number of steps");
    evolve_cmd->add_option("--precision", precision_flag, "emitted bits per step");
    evolve_cmd->add_option("--budget", budget_flag, "actualization budget per step");

    // compare
    auto* compare_cmd = app.add_subcommand("compare", "fiq vs tape ensemble equivalence");
    add_common(compare_cmd, false);
    std::optional<std::uint64_t> seeds_flag, csteps_flag;
    std::optional<std::string> cmap_flag;
    compare_cmd->add_option("--map", cmap_flag, "map name");
    compare_cmd->add_option("--seeds", seeds_flag, "seeds per model");
    compare_cmd->add_option("--steps", csteps_flag, "steps per trajectory");

    // qmeasure
    auto* qmeasure_cmd = app.add_subcommand("qmeasure", "binary-measurement hidden-variable model");
    add_common(qmeasure_cmd, false);
    std::optional<std::uint64_t> trials_flag;
    std::vector<std::string> probs_flag;
    qmeasure_cmd->add_option("--trials", trials_flag, "number of trials");
    qmeasure_cmd->add_option("--p", probs_flag, "probability list, e.g. --p 3/10 --p 1/2");

    // diverge
    auto* diverge_cmd = app.add_subcommand("diverge", "divergence-time experiment");
    add_common(diverge_cmd, false);
    std::optional<std::string> dmap_flag;
    std::vector<std::uint32_t> k_flag;
    std::optional<std::uint32_t> dtrials_flag;
    std::optional<std::uint64_t> horizon_flag;
    diverge_cmd->add_option("--map", dmap_flag, "map name");
    diverge_cmd->add_option("--k", k_flag, "shared prefix lengths");
    diverge_cmd->add_option("--trials", dtrials_flag, "trials per k");
    diverge_cmd->add_option("--horizon", horizon_flag, "max steps before censoring");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (info->parsed()) {
            std::vector<std::pair<std::string, json>> over;
            if (literal_arg) over.emplace_back("literal", *literal_arg);
            json cfg = resolve_config(json{{"literal", "?*"}}, config_path, over);
            return cmd_info(cfg, info_out);
        }
        if (evolve_cmd->parsed()) {
            std::vector<std::pair<std::string, json>> over;
            if (map_flag) over.emplace_back("map", *map_flag);
            if (model_flag) over.emplace_back("model", *model_flag);
            if (x0_flag) over.emplace_back("x0", *x0_flag);
            if (steps_flag) over.emplace_back("steps", *steps_flag);
            if (precision_flag) over.emplace_back("precision", *precision_flag);
            if (budget_flag) over.emplace_back("budget", *budget_flag);
            if (seed_flag) over.emplace_back("seed", *seed_flag);
            json cfg = resolve_config(json{{"map", "doubling"},
                                           {"model", "fiq"},
                                           {"x0", "?*"},
                                           {"y0", "?*"},
                                           {"steps", 1000},
                                           {"precision", 1},
                                           {"budget", 64},
                                           {"seed", 1}},
                                      config_path, over);
            return cmd_evolve(cfg, out_dir, format);
        }
        if (compare_cmd->parsed()) {
            std::vector<std::pair<std::string, json>> over;
            if (cmap_flag) over.emplace_back("map", *cmap_flag);
            if (seeds_flag) over.emplace_back("seeds", *seeds_flag);
            if (csteps_flag) over.emplace_back("steps", *csteps_flag);
            if (seed_flag) over.emplace_back("seed", *seed_flag);
            json cfg = resolve_config(json{{"map", "doubling"},
                                           {"seeds", 200},
                                           {"steps", 1000},
                                           {"precision", 1},
                                           {"budget", 64},
                                           {"seed", 1},
                                           {"alpha", 0.001},
                                           {"block_lengths", json::array({1, 2, 3, 4})},
                                           {"x0", "?*"},
                                           {"y0", "?*"},
                                           {"fiq_bias", ""}},
                                      config_path, over);
            return cmd_compare(cfg, out_dir);
        }
        if (qmeasure_cmd->parsed()) {
            std::vector<std::pair<std::string, json>> over;
            if (!probs_flag.empty()) over.emplace_back("probabilities", probs_flag);
            if (trials_flag) over.emplace_back("trials", *trials_flag);
            if (seed_flag) over.emplace_back("seed", *seed_flag);
            json cfg = resolve_config(json{{"probabilities", json::array()},
                                           {"pairs", json::array()},
                                           {"trials", 1000},
                                           {"seed", 1},
                                           {"comparison_limit", 256}},
                                      config_path, over);
            return cmd_qmeasure(cfg, out_dir);
        }
        if (diverge_cmd->parsed()) {
            std::vector<std::pair<std::string, json>> over;
            if (dmap_flag) over.emplace_back("map", *dmap_flag);
            if (!k_flag.empty()) over.emplace_back("k_list", k_flag);
            if (dtrials_flag) over.emplace_back("trials", *dtrials_flag);
            if (horizon_flag) over.emplace_back("horizon", *horizon_flag);
            if (seed_flag) over.emplace_back("seed", *seed_flag);
            json cfg = resolve_config(json{{"map", "doubling"},
                                           {"k_list", json::array({5, 10, 20})},
                                           {"trials", 100},
                                           {"horizon", 10000},
                                           {"depth", 0},
                                           {"seed", 1}},
                                      config_path, over);
            return cmd_diverge(cfg, out_dir);
        }
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UndecidedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        // Budget/undecided failures wrapped with run context also land here.
        const std::string what = e.what();
        const bool runtime = what.find("undecided") != std::string::npos ||
                             what.find("budget") != std::string::npos;
        std::cerr << "error: " << what << "\n";
        return runtime ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
