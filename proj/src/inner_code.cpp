#include "insdel/inner_code.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "insdel/errors.hpp"
#include "insdel/rng.hpp"

namespace insdel {
namespace {

constexpr double kEps = 1e-9;
constexpr std::size_t kMaxInteriorZeroRun = 2;

// Draws one candidate codeword. Bits are random except where a constraint
// forces a 1: edge pinning, the interior run cap, and window-density
// feasibility. The stream stays deterministic for a given Rng state.
BitString draw_candidate(Rng& rng, std::size_t n_in, std::size_t window,
                         std::size_t min_weight) {
    BitString cw;
    std::size_t run = 0;           // current trailing 0-run
    std::size_t window_weight = 0; // weight of the last min(|cw|, window) bits
    for (std::size_t i = 1; i <= n_in; ++i) {
        bool b;
        if (i == 1 || i == n_in) {
            b = true;
        } else {
            b = rng.bit();
            if (!b && run >= kMaxInteriorZeroRun) b = true;
            if (!b) {
                // weight the completed window would have if this bit is 0
                std::size_t w_after = window_weight;
                if (i > window && cw.bit(i - window)) --w_after;
                const std::size_t slack = i < window ? window - i : 0;
                if (w_after + slack < min_weight) b = true;
            }
        }
        if (i > window && cw.bit(i - window)) --window_weight;
        if (b) ++window_weight;
        run = b ? 0 : run + 1;
        cw.push_back(b);
    }
    return cw;
}

bool run_cap_holds(const BitString& cw) {
    if (cw.empty() || !cw.bit(1) || !cw.bit(cw.size())) return false;
    std::size_t run = 0;
    for (std::size_t i = 1; i <= cw.size(); ++i) {
        run = cw.bit(i) ? 0 : run + 1;
        if (run > kMaxInteriorZeroRun) return false;
    }
    return true;
}

std::size_t exact_min_pairwise_ed(const std::vector<BitString>& table) {
    std::size_t best = SIZE_MAX;
    for (std::size_t a = 0; a < table.size(); ++a) {
        for (std::size_t b = a + 1; b < table.size(); ++b) {
            const std::size_t bound = best == SIZE_MAX ? 2 * table[a].size() : best - 1;
            const std::size_t ed = edit_distance_bounded(table[a], table[b], bound);
            if (ed < best) best = ed;
            if (best == 0) return 0;
        }
    }
    return best;
}

}  // namespace

std::size_t density_window_for(std::size_t t) {
    std::size_t lg = 0;
    while ((std::size_t{1} << lg) < t) ++lg;
    return 2 * std::max<std::size_t>(lg, 1);
}

std::size_t density_min_weight(std::size_t window) { return (2 * window + 4) / 5; }

bool density_holds(const BitString& cw, std::size_t window) {
    if (cw.size() < window) return true;
    const std::size_t need = density_min_weight(window);
    std::size_t w = hamming_weight(cw, Interval{1, window + 1});
    if (w < need) return false;
    for (std::size_t i = 2; i + window <= cw.size() + 1; ++i) {
        if (cw.bit(i - 1)) --w;
        if (cw.bit(i + window - 1)) ++w;
        if (w < need) return false;
    }
    return true;
}

const BitString& InnerCodebook::encode(const BitString& msg) const {
    if (msg.size() != t)
        throw std::invalid_argument("inner message has length " +
                                    std::to_string(msg.size()) + ", expected " +
                                    std::to_string(t));
    return table[value_from_bits(msg)];
}

std::optional<BitString> InnerCodebook::decode(const BitString& word) const {
    const double radius = decode_radius();
    const std::size_t bound = static_cast<std::size_t>(std::floor(radius + kEps));
    std::size_t best = bound + 1;
    std::size_t best_msg = 0;
    bool tie = false;
    for (std::size_t msg = 0; msg < table.size(); ++msg) {
        const std::size_t ed = edit_distance_bounded(word, table[msg], bound);
        if (ed < best) {
            best = ed;
            best_msg = msg;
            tie = false;
        } else if (ed == best && best <= bound) {
            tie = true;
        }
    }
    if (best > bound || static_cast<double>(best) > radius + kEps || tie)
        return std::nullopt;
    return bits_from_value(best_msg, t);
}

InnerCodebook build_codebook(std::size_t t, double delta_in, std::size_t beta_in_max,
                             std::uint64_t seed) {
    if (t < 2 || t > 20)
        throw CapacityError("inner message width " + std::to_string(t) +
                                " outside buildable range [2, 20]",
                            0);
    if (delta_in <= 0.0 || delta_in >= 0.5)
        throw ParamError("constraint violated: 0 < delta_in < 1/2");
    const std::size_t want = std::size_t{1} << t;
    const std::size_t window = density_window_for(t);
    const std::size_t min_weight = density_min_weight(window);
    std::size_t achieved = 0;

    for (std::size_t beta = 1; beta <= beta_in_max; ++beta) {
        const std::size_t n_in = beta * t;
        if (n_in < window || n_in < 2) continue;
        const double dmin_floor = 4.0 * delta_in * static_cast<double>(n_in);
        const std::size_t reject_bound =
            static_cast<std::size_t>(std::floor(dmin_floor + kEps));
        Rng rng(Rng::mix(seed, (std::uint64_t{t} << 32) | n_in));
        std::vector<BitString> accepted;
        std::unordered_set<std::string> seen;
        accepted.reserve(want);
        const std::size_t budget = 64 * want + 4096;
        for (std::size_t tries = 0; tries < budget && accepted.size() < want; ++tries) {
            BitString cand = draw_candidate(rng, n_in, window, min_weight);
            if (!run_cap_holds(cand) || !density_holds(cand, window)) continue;
            if (!seen.insert(cand.str()).second) continue;
            bool far = true;
            for (const BitString& prev : accepted) {
                const std::size_t ed = edit_distance_bounded(cand, prev, reject_bound);
                if (static_cast<double>(ed) <= dmin_floor + kEps) {
                    far = false;
                    break;
                }
            }
            if (far) accepted.push_back(std::move(cand));
        }
        achieved = std::max(achieved, accepted.size());
        if (accepted.size() == want) {
            InnerCodebook cb;
            cb.t = t;
            cb.n_in = n_in;
            cb.density_window = window;
            cb.seed = seed;
            cb.delta_in = delta_in;
            cb.table = std::move(accepted);
            cb.min_pairwise_ed = exact_min_pairwise_ed(cb.table);
            return cb;
        }
    }
    throw CapacityError("codebook build filled only " + std::to_string(achieved) +
                            " of " + std::to_string(want) + " messages within beta_in <= " +
                            std::to_string(beta_in_max),
                        achieved);
}

void verify_codebook(const InnerCodebook& cb) {
    if (cb.t < 1 || cb.table.size() != (std::size_t{1} << cb.t))
        throw ConfigError("codebook table holds " + std::to_string(cb.table.size()) +
                          " entries, expected 2^" + std::to_string(cb.t));
    if (cb.n_in % cb.t != 0) throw ConfigError("codeword length is not a multiple of t");
    std::unordered_set<std::string> seen;
    for (const BitString& cw : cb.table) {
        if (cw.size() != cb.n_in)
            throw ConfigError("codeword of length " + std::to_string(cw.size()) +
                              ", expected " + std::to_string(cb.n_in));
        if (!seen.insert(cw.str()).second) throw ConfigError("duplicate codeword in table");
        if (!density_holds(cw, cb.density_window))
            throw ConfigError("density certificate fails for codeword " + cw.str());
        if (!run_cap_holds(cw))
            throw ConfigError("edge/run certificate fails for codeword " + cw.str());
    }
    const std::size_t dmin = exact_min_pairwise_ed(cb.table);
    if (dmin != cb.min_pairwise_ed)
        throw ConfigError("recorded dmin " + std::to_string(cb.min_pairwise_ed) +
                          " != recomputed " + std::to_string(dmin));
    if (static_cast<double>(dmin) <= 4.0 * cb.delta_in * static_cast<double>(cb.n_in))
        throw ConfigError("min pairwise distance " + std::to_string(dmin) +
                          " does not clear 4*delta_in*n_in");
}

void save_codebook(std::ostream& os, const InnerCodebook& cb) {
    os << "t=" << cb.t << " n=" << cb.n_in << " dmin=" << cb.min_pairwise_ed
       << " seed=" << cb.seed << '\n';
    for (std::size_t msg = 0; msg < cb.table.size(); ++msg)
        os << bits_from_value(msg, cb.t).str() << ' ' << cb.table[msg].str() << '\n';
}

InnerCodebook load_codebook(std::istream& is, double delta_in) {
    std::string header;
    if (!std::getline(is, header)) throw ConfigError("empty codebook file");
    InnerCodebook cb;
    cb.delta_in = delta_in;
    {
        std::istringstream hs(header);
        std::string field;
        while (hs >> field) {
            const std::size_t eq = field.find('=');
            if (eq == std::string::npos)
                throw ConfigError("bad codebook header field: " + field);
            const std::string key = field.substr(0, eq);
            const std::string val = field.substr(eq + 1);
            if (key == "t")
                cb.t = std::stoull(val);
            else if (key == "n")
                cb.n_in = std::stoull(val);
            else if (key == "dmin")
                cb.min_pairwise_ed = std::stoull(val);
            else if (key == "seed")
                cb.seed = std::stoull(val);
            else
                throw ConfigError("unknown codebook header key: " + key);
        }
    }
    if (cb.t < 1 || cb.t > 20) throw ConfigError("codebook t out of range");
    cb.density_window = density_window_for(cb.t);
    cb.table.assign(std::size_t{1} << cb.t, BitString{});
    std::vector<bool> filled(cb.table.size(), false);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::size_t sp = line.find(' ');
        if (sp == std::string::npos) throw ConfigError("bad codebook line: " + line);
        const BitString msg = BitString::parse(line.substr(0, sp));
        if (msg.size() != cb.t) throw ConfigError("message width mismatch: " + line);
        const std::size_t idx = value_from_bits(msg);
        if (filled[idx]) throw ConfigError("duplicate message in codebook: " + line);
        filled[idx] = true;
        cb.table[idx] = BitString::parse(line.substr(sp + 1));
    }
    for (std::size_t i = 0; i < filled.size(); ++i)
        if (!filled[i]) throw ConfigError("codebook misses message value " + std::to_string(i));
    verify_codebook(cb);
    return cb;
}

InnerCodebook load_codebook_file(const std::string& path, double delta_in) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open codebook file: " + path);
    return load_codebook(is, delta_in);
}

}  // namespace insdel
