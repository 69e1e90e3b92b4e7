#include "insdel/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "insdel/encoder.hpp"
#include "insdel/errors.hpp"
#include "insdel/goodness.hpp"

namespace insdel {
namespace {

std::string trim(const std::string& s) {
    const std::size_t a = s.find_first_not_of(" \t");
    const std::size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

std::vector<Symbol> random_message(const CodeParams& params, Rng& rng) {
    std::vector<Symbol> msg(params.k);
    for (Symbol& s : msg)
        s = static_cast<Symbol>(rng.below(std::uint64_t{1} << params.sigma_bits));
    return msg;
}

bool all_searched_blocks_locally_good(const DecodeSession& session,
                                      const std::vector<bool>& locally_good) {
    for (const SearchTrace& t : session.traces())
        if (!locally_good[t.target - 1]) return false;
    return true;
}

}  // namespace

ExperimentConfig read_experiment_config(std::istream& is) {
    ExperimentConfig cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              " is not `key = value`: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key == "params")
            cfg.params_file = val;
        else if (key == "codebook")
            cfg.codebook_file = val;
        else if (key == "outer")
            cfg.outer = val;
        else if (key == "strategies")
            cfg.strategies = split_list(val);
        else if (key == "deltas") {
            cfg.deltas.clear();
            for (const std::string& d : split_list(val)) cfg.deltas.push_back(std::stod(d));
        } else if (key == "trials")
            cfg.trials = std::stoull(val);
        else if (key == "seed")
            cfg.seed = std::stoull(val);
        else if (key == "mode")
            cfg.mode = val;
        else if (key == "targets") {
            cfg.targets.clear();
            if (val != "all")
                for (const std::string& t : split_list(val)) cfg.targets.push_back(std::stoull(t));
        } else if (key == "allow_overbudget")
            cfg.allow_overbudget = val != "0";
        else if (key == "csv")
            cfg.csv_path = val;
        else if (key == "csv_lcc")
            cfg.csv_lcc_path = val;
        else if (key == "summary")
            cfg.summary_path = val;
        else
            throw ConfigError("unknown config key: " + key);
    }
    if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
    if (cfg.mode != "ldc" && cfg.mode != "lcc" && cfg.mode != "both")
        throw ConfigError("mode must be ldc, lcc or both");
    if (cfg.strategies.empty()) throw ConfigError("no strategies configured");
    return cfg;
}

ExperimentConfig read_experiment_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open config file: " + path);
    return read_experiment_config(is);
}

ExperimentResult run_experiment(const ExperimentConfig& config, const CodeParams& params,
                                const InnerCodebook& cb, const OuterCode& outer) {
    check_compatibility(params, cb, outer);
    for (double delta : config.deltas) {
        if (delta > params.delta && !config.allow_overbudget)
            throw ConfigError("delta " + format_double(delta) +
                              " exceeds the derived budget fraction " +
                              format_double(params.delta) +
                              " (set allow_overbudget = 1 to run it)");
    }

    ExperimentResult result;
    std::size_t total_queries = 0;
    std::size_t cell = 0;
    for (const std::string& strategy : config.strategies) {
        for (double delta : config.deltas) {
            const double effective_delta = delta > 0.0 ? delta : params.delta;
            for (std::size_t trial = 0; trial < config.trials; ++trial) {
                const std::uint64_t trial_seed =
                    Rng::mix(config.seed, (static_cast<std::uint64_t>(cell) << 32) | trial);
                Rng msg_rng(Rng::mix(trial_seed, 0x5EED));
                const std::vector<Symbol> message = random_message(params, msg_rng);
                const BitString codeword = encode(params, message, cb, outer);
                const ChannelTrial ch =
                    corrupt(codeword, params, strategy, trial_seed, effective_delta);
                const GoodnessReport goodness = analyze_trial(codeword, ch, params);

                auto run_targets = [&](bool lcc_mode) {
                    std::vector<std::size_t> targets = config.targets;
                    if (targets.empty()) {
                        const std::size_t count = lcc_mode ? params.n : params.k;
                        targets.resize(count);
                        for (std::size_t i = 0; i < count; ++i) targets[i] = i + 1;
                    }
                    for (std::size_t target : targets) {
                        WordOracle oracle(ch.corrupted);
                        DecodeSession session(oracle, params, cb, outer,
                                              Rng::mix(trial_seed, target * 2 + lcc_mode));
                        TrialRecord rec;
                        rec.trial = trial;
                        rec.seed = trial_seed;
                        rec.strategy = strategy;
                        rec.delta = effective_delta;
                        rec.index = target;
                        if (lcc_mode) {
                            rec.expected = codeword.bit(target) ? 1 : 0;
                            rec.decoded = session.correct_codeword_bit(target) ? 1 : 0;
                        } else {
                            rec.expected = message[target - 1];
                            rec.decoded = session.decode_message(target);
                        }
                        rec.success = rec.expected == rec.decoded;
                        rec.queries = oracle.query_count();
                        rec.depth = session.max_search_depth();
                        rec.locally_good =
                            all_searched_blocks_locally_good(session, goodness.locally_good);
                        total_queries += rec.queries;
                        (lcc_mode ? result.lcc_records : result.ldc_records)
                            .push_back(std::move(rec));
                    }
                };
                if (config.mode == "ldc" || config.mode == "both") run_targets(false);
                if (config.mode == "lcc" || config.mode == "both") run_targets(true);
            }
            ++cell;
        }
    }

    auto summarize = [&result](const char* prefix, const std::vector<TrialRecord>& records) {
        if (records.empty()) return;
        std::size_t ok = 0, ok_good = 0, n_good = 0;
        std::vector<std::size_t> queries;
        queries.reserve(records.size());
        for (const TrialRecord& r : records) {
            ok += r.success ? 1 : 0;
            if (r.locally_good) {
                ++n_good;
                ok_good += r.success ? 1 : 0;
            }
            queries.push_back(r.queries);
        }
        std::sort(queries.begin(), queries.end());
        const auto q = [&queries](double p) {
            const std::size_t idx = static_cast<std::size_t>(
                p * static_cast<double>(queries.size() - 1) + 0.5);
            return queries[idx];
        };
        auto& s = result.summary;
        const std::string pre(prefix);
        s.emplace_back(pre + "_records", std::to_string(records.size()));
        s.emplace_back(pre + "_success_rate",
                       format_double(static_cast<double>(ok) /
                                     static_cast<double>(records.size())));
        if (n_good > 0)
            s.emplace_back(pre + "_success_rate_locally_good",
                           format_double(static_cast<double>(ok_good) /
                                         static_cast<double>(n_good)));
        s.emplace_back(pre + "_queries_p50", std::to_string(q(0.5)));
        s.emplace_back(pre + "_queries_p90", std::to_string(q(0.9)));
        s.emplace_back(pre + "_queries_max", std::to_string(queries.back()));
    };
    summarize("ldc", result.ldc_records);
    summarize("lcc", result.lcc_records);
    result.summary.emplace_back("total_queries", std::to_string(total_queries));
    return result;
}

void write_records_csv(std::ostream& os, const std::vector<TrialRecord>& records) {
    os << "trial,seed,strategy,delta,index,expected,decoded,success,queries,depth,"
          "locally_good\n";
    for (const TrialRecord& r : records) {
        os << r.trial << ',' << r.seed << ',' << r.strategy << ',' << format_double(r.delta)
           << ',' << r.index << ',' << r.expected << ',' << r.decoded << ','
           << (r.success ? 1 : 0) << ',' << r.queries << ',' << r.depth << ','
           << (r.locally_good ? 1 : 0) << '\n';
    }
}

void write_summary(std::ostream& os,
                   const std::vector<std::pair<std::string, std::string>>& summary) {
    for (const auto& [key, value] : summary) os << key << " = " << value << '\n';
}

void emit_reports(const ExperimentResult& result, const ExperimentConfig& config) {
    auto write_file = [](const std::string& path, auto writer) {
        if (path.empty()) return;
        std::ofstream os(path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot write " + path);
        writer(os);
    };
    if (config.mode == "lcc") {
        write_file(config.csv_path,
                   [&](std::ostream& os) { write_records_csv(os, result.lcc_records); });
    } else {
        write_file(config.csv_path,
                   [&](std::ostream& os) { write_records_csv(os, result.ldc_records); });
        write_file(config.csv_lcc_path,
                   [&](std::ostream& os) { write_records_csv(os, result.lcc_records); });
    }
    write_file(config.summary_path,
               [&](std::ostream& os) { write_summary(os, result.summary); });
}

}  // namespace insdel
