#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "insdel/channel.hpp"
#include "insdel/decoder.hpp"
#include "insdel/inner_code.hpp"
#include "insdel/outer_code.hpp"
#include "insdel/params.hpp"

namespace insdel {

// Harness configuration; parsed from `key = value` lines.
struct ExperimentConfig {
    std::string params_file;
    std::string codebook_file;      // optional cache; built when absent/empty
    std::string outer = "hadamard";
    std::vector<std::string> strategies{"none"};
    std::vector<double> deltas{0.0};  // 0 selects the derived budget fraction
    std::size_t trials = 200;
    std::uint64_t seed = 1;
    std::string mode = "ldc";         // ldc | lcc | both
    std::vector<std::size_t> targets; // empty = every index of the active mode
    bool allow_overbudget = false;
    std::string csv_path;
    std::string csv_lcc_path;
    std::string summary_path;
};

ExperimentConfig read_experiment_config(std::istream& is);
ExperimentConfig read_experiment_config_file(const std::string& path);

struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::string strategy;
    double delta = 0.0;
    std::size_t index = 0;
    std::uint64_t expected = 0;
    std::uint64_t decoded = 0;
    bool success = false;
    std::size_t queries = 0;
    std::size_t depth = 0;
    bool locally_good = true;  // every block the session searched was locally good
};

struct ExperimentResult {
    std::vector<TrialRecord> ldc_records;
    std::vector<TrialRecord> lcc_records;
    std::vector<std::pair<std::string, std::string>> summary;
};

// Runs every (strategy, delta) cell: fresh random message, corrupt, decode
// each target, record. Deterministic in (config, seed).
ExperimentResult run_experiment(const ExperimentConfig& config, const CodeParams& params,
                                const InnerCodebook& cb, const OuterCode& outer);

// CSV: `trial,seed,strategy,delta,index,expected,decoded,success,queries,depth,locally_good`.
void write_records_csv(std::ostream& os, const std::vector<TrialRecord>& records);
void write_summary(std::ostream& os,
                   const std::vector<std::pair<std::string, std::string>>& summary);

void emit_reports(const ExperimentResult& result, const ExperimentConfig& config);

}  // namespace insdel
