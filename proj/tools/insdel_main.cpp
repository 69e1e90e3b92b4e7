// Command-line front end: encode / corrupt / decode / analyze / experiment /
// search-demo / codebook build|verify. File formats are ASCII bit lines,
// `key = value` parameter and config files, and edit-script traces.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "insdel/array_search.hpp"
#include "insdel/channel.hpp"
#include "insdel/decoder.hpp"
#include "insdel/encoder.hpp"
#include "insdel/errors.hpp"
#include "insdel/experiment.hpp"
#include "insdel/goodness.hpp"
#include "insdel/inner_code.hpp"
#include "insdel/outer_code.hpp"
#include "insdel/params.hpp"

namespace {

using namespace insdel;

BitString read_bits_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open " + path);
    return read_bitstring(is);
}

void write_bits_file(const std::string& path, const BitString& s) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("cannot write " + path);
    write_bitstring(os, s);
}

// Loads the cache when present, otherwise builds (and saves when a path was
// given). beta_in from the parameter file acts as the build cap.
InnerCodebook resolve_codebook(const ParamOptions& opts, const CodeParams& geometry,
                               const std::string& cache_path) {
    const double delta_in = geometry.delta_in;
    if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
        InnerCodebook cb = load_codebook_file(cache_path, delta_in);
        if (cb.t != geometry.msg_bits)
            throw ConfigError("cached codebook was built for t = " + std::to_string(cb.t) +
                              ", geometry needs t = " + std::to_string(geometry.msg_bits));
        return cb;
    }
    const std::size_t cap = opts.beta_in.value_or(6);
    InnerCodebook cb = build_codebook(geometry.msg_bits, delta_in, cap, geometry.seed);
    if (!cache_path.empty()) {
        std::ofstream os(cache_path, std::ios::binary);
        if (!os) throw ConfigError("cannot write " + cache_path);
        save_codebook(os, cb);
    }
    return cb;
}

struct BoundStack {
    CodeParams params;
    InnerCodebook cb;
    std::unique_ptr<OuterCode> outer;
};

BoundStack bind_stack(const std::string& params_path, const std::string& codebook_path) {
    const ParamOptions opts = read_param_file(params_path);
    const CodeParams geometry = derive_params(opts);
    InnerCodebook cb = resolve_codebook(opts, geometry, codebook_path);
    CodeParams params = derive_params(opts, cb.beta_in());
    auto outer = make_outer_code(opts.outer, params.k, params.delta_out);
    check_compatibility(params, cb, *outer);
    return BoundStack{std::move(params), std::move(cb), std::move(outer)};
}

std::vector<Symbol> read_message_file(const std::string& path, const CodeParams& params) {
    if (params.sigma_bits != 1)
        throw ConfigError("message files carry bit symbols (sigma_bits = 1)");
    const BitString bits = read_bits_file(path);
    if (bits.size() != params.k)
        throw ConfigError("message holds " + std::to_string(bits.size()) +
                          " symbols, expected k = " + std::to_string(params.k));
    std::vector<Symbol> msg(params.k);
    for (std::size_t i = 1; i <= params.k; ++i) msg[i - 1] = bits.bit(i) ? 1 : 0;
    return msg;
}

int cmd_codebook_build(const std::string& params_path, const std::string& out_path) {
    const ParamOptions opts = read_param_file(params_path);
    const CodeParams geometry = derive_params(opts);
    const InnerCodebook cb =
        build_codebook(geometry.msg_bits, geometry.delta_in, opts.beta_in.value_or(6),
                       geometry.seed);
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw ConfigError("cannot write " + out_path);
    save_codebook(os, cb);
    std::cout << "built codebook: t=" << cb.t << " n_in=" << cb.n_in
              << " beta_in=" << cb.beta_in() << " dmin=" << cb.min_pairwise_ed << '\n';
    return 0;
}

int cmd_codebook_verify(const std::string& file, double delta_in) {
    const InnerCodebook cb = load_codebook_file(file, delta_in);
    std::cout << "codebook ok: t=" << cb.t << " n_in=" << cb.n_in
              << " dmin=" << cb.min_pairwise_ed << " entries=" << cb.size() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"insdel code toolkit"};
    app.require_subcommand(1);

    std::string params_path, codebook_path, message_path, codeword_path, out_path;
    std::string trace_path, word_path, config_path, strategy = "uniform-random";
    std::uint64_t seed = 1;
    double delta = 0.0, delta_in = 0.05, theta = 0.25;
    bool allow_overbudget = false, count_queries = false;
    std::size_t index = 0, position = 0;
    std::size_t demo_n = 1024, demo_corruptions = 10, demo_samples = 100, demo_trials = 20;

    auto* enc = app.add_subcommand("encode", "encode a message file");
    enc->add_option("--params", params_path)->required();
    enc->add_option("--message", message_path)->required();
    enc->add_option("--out", out_path)->required();
    enc->add_option("--codebook", codebook_path);

    auto* cor = app.add_subcommand("corrupt", "apply an adversarial strategy");
    cor->add_option("--codeword", codeword_path)->required();
    cor->add_option("--params", params_path)->required();
    cor->add_option("--strategy", strategy);
    cor->add_option("--seed", seed);
    cor->add_option("--out", out_path)->required();
    cor->add_option("--trace", trace_path);
    cor->add_option("--delta", delta);
    cor->add_flag("--allow-overbudget", allow_overbudget);

    auto* dec = app.add_subcommand("decode", "locally decode one index or position");
    dec->add_option("--word", word_path)->required();
    dec->add_option("--params", params_path)->required();
    dec->add_option("--codebook", codebook_path);
    dec->add_option("--index", index);
    dec->add_option("--position", position);
    dec->add_option("--seed", seed);
    dec->add_flag("--count-queries", count_queries);

    auto* ana = app.add_subcommand("analyze", "per-block goodness report for a trial");
    ana->add_option("--codeword", codeword_path)->required();
    ana->add_option("--trace", trace_path)->required();
    ana->add_option("--params", params_path)->required();
    ana->add_option("--codebook", codebook_path);
    ana->add_option("--out", out_path);

    auto* exp = app.add_subcommand("experiment", "run a full experiment config");
    exp->add_option("--config", config_path)->required();

    auto* demo = app.add_subcommand("search-demo", "nearly-sorted-array search demo");
    demo->add_option("--n", demo_n);
    demo->add_option("--corruptions", demo_corruptions);
    demo->add_option("--theta", theta);
    demo->add_option("--samples", demo_samples);
    demo->add_option("--trials", demo_trials);
    demo->add_option("--seed", seed);

    auto* cbk = app.add_subcommand("codebook", "build or verify a codebook cache");
    cbk->require_subcommand(1);
    auto* cbk_build = cbk->add_subcommand("build");
    cbk_build->add_option("--params", params_path)->required();
    cbk_build->add_option("--out", out_path)->required();
    auto* cbk_verify = cbk->add_subcommand("verify");
    cbk_verify->add_option("--file", codebook_path)->required();
    cbk_verify->add_option("--delta-in", delta_in);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enc) {
            BoundStack s = bind_stack(params_path, codebook_path);
            const std::vector<Symbol> msg = read_message_file(message_path, s.params);
            write_bits_file(out_path, encode(s.params, msg, s.cb, *s.outer));
            return 0;
        }
        if (*cor) {
            const ParamOptions opts = read_param_file(params_path);
            const BitString c = read_bits_file(codeword_path);
            // geometry check against the declared expansion
            const std::size_t declared_n = derive_params(opts).n;
            CodeParams params = derive_params(opts);
            if (c.size() != declared_n) {
                // the codeword fixes the achieved inner expansion
                const std::size_t block = c.size() / params.d;
                const std::size_t inner = block - 2 * params.buffer_len;
                if (c.size() % params.d != 0 || inner % params.msg_bits != 0)
                    throw ConfigError("codeword length does not fit the configured geometry");
                params = derive_params(opts, inner / params.msg_bits);
            }
            if (delta > params.delta && !allow_overbudget)
                throw ConfigError("requested delta exceeds the derived budget fraction; "
                                  "pass --allow-overbudget to force it");
            const ChannelTrial trial = corrupt(c, params, strategy, seed, delta);
            write_bits_file(out_path, trial.corrupted);
            if (!trace_path.empty()) {
                std::ofstream os(trace_path, std::ios::binary);
                if (!os) throw ConfigError("cannot write " + trace_path);
                write_trial_trace(os, trial);
            }
            std::cout << "strategy=" << trial.strategy << " ops=" << trial.budget_used
                      << " budget=" << trial.budget_limit << " n'=" << trial.corrupted.size()
                      << '\n';
            return 0;
        }
        if (*dec) {
            if ((index == 0) == (position == 0))
                throw ConfigError("pass exactly one of --index (message) or --position "
                                  "(codeword bit)");
            BoundStack s = bind_stack(params_path, codebook_path);
            const BitString word = read_bits_file(word_path);
            WordOracle oracle(word);
            DecodeSession session(oracle, s.params, s.cb, *s.outer, seed);
            std::uint64_t value;
            if (index > 0)
                value = session.decode_message(index);
            else
                value = session.correct_codeword_bit(position) ? 1 : 0;
            bool hit_bottom = false;
            for (const SearchTrace& t : session.traces())
                if (t.returned_bottom) hit_bottom = true;
            std::cout << "decoded = " << value << '\n';
            if (count_queries) std::cout << "queries = " << oracle.query_count() << '\n';
            return hit_bottom ? 1 : 0;
        }
        if (*ana) {
            BoundStack s = bind_stack(params_path, codebook_path);
            const BitString c = read_bits_file(codeword_path);
            std::ifstream ts(trace_path);
            if (!ts) throw ConfigError("cannot open " + trace_path);
            const ChannelTrial trial = read_trial_trace(ts, c, s.params);
            const GoodnessReport report = analyze_trial(c, trial, s.params);
            const BoundCheck check = check_bounds(report, trial, s.params);
            if (out_path.empty()) {
                write_goodness_report(std::cout, report, check);
            } else {
                std::ofstream os(out_path, std::ios::binary);
                if (!os) throw ConfigError("cannot write " + out_path);
                write_goodness_report(os, report, check);
            }
            return check.all_ok() ? 0 : 2;
        }
        if (*exp) {
            const ExperimentConfig cfg = read_experiment_config_file(config_path);
            const ParamOptions opts = read_param_file(cfg.params_file);
            const CodeParams geometry = derive_params(opts);
            const InnerCodebook cb = resolve_codebook(opts, geometry, cfg.codebook_file);
            const CodeParams params = derive_params(opts, cb.beta_in());
            const auto outer = make_outer_code(cfg.outer, params.k, params.delta_out);
            const ExperimentResult result = run_experiment(cfg, params, cb, *outer);
            emit_reports(result, cfg);
            write_summary(std::cout, result.summary);
            return 0;
        }
        if (*demo) {
            const NearlySortedArray arr = make_nearly_sorted(demo_n, demo_corruptions, seed);
            const std::vector<std::size_t> good = locally_good_indices(arr, theta);
            std::vector<bool> is_good(demo_n, false);
            for (std::size_t g : good) is_good[g] = true;
            std::cout << "n = " << demo_n << ", corruptions = " << arr.corrupted.size()
                      << ", locally_good = " << good.size() << '\n';
            std::size_t found = 0;
            for (std::size_t t = 0; t < demo_trials; ++t) {
                Rng trial_rng(Rng::mix(seed, 100 + t));
                const std::size_t i = good.empty()
                                          ? 0
                                          : good[trial_rng.below(good.size())];
                Rng search_rng(Rng::mix(seed, 1000 + t));
                ArraySearchTrace tr;
                const auto idx =
                    noisy_search(arr, arr.values[i], demo_samples, search_rng, &tr);
                const bool ok = idx && *idx == i;
                found += ok ? 1 : 0;
                std::cout << "trial " << t << ": target_index=" << i
                          << " locally_good=" << (is_good[i] ? 1 : 0)
                          << " found=" << (ok ? 1 : 0) << " rounds=" << tr.rounds
                          << " probes=" << tr.probes << '\n';
            }
            std::cout << "found_rate = "
                      << static_cast<double>(found) / static_cast<double>(demo_trials) << '\n';
            return 0;
        }
        if (*cbk_build) return cmd_codebook_build(params_path, out_path);
        if (*cbk_verify) return cmd_codebook_verify(codebook_path, delta_in);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
