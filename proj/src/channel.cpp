#include "insdel/channel.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "insdel/errors.hpp"
#include "insdel/rng.hpp"

namespace insdel {

const char* const kChannelStrategies[6] = {"none",         "uniform-random", "block-burst",
                                           "buffer-spoof", "buffer-erase",   "freeform"};

std::size_t BlockDecomposition::total() const {
    return std::accumulate(lengths.begin(), lengths.end(), std::size_t{0});
}

Interval BlockDecomposition::region(std::size_t block) const {
    std::size_t lo = 1;
    for (std::size_t j = 1; j < block; ++j) lo += lengths[j - 1];
    return Interval{lo, lo + lengths[block - 1]};
}

std::size_t BlockDecomposition::block_of(std::size_t pos) const {
    std::size_t hi = 0;
    for (std::size_t j = 0; j < lengths.size(); ++j) {
        hi += lengths[j];
        if (pos <= hi) return j + 1;
    }
    return lengths.size();
}

namespace {

// Mutable view of an in-progress trial: evolving word plus region lengths.
struct Workspace {
    std::vector<std::uint8_t> word;
    std::vector<std::size_t> lengths;
    EditScript script;

    std::size_t region_start(std::size_t block) const {  // 0-based offset
        std::size_t s = 0;
        for (std::size_t j = 0; j + 1 < block; ++j) s += lengths[j];
        return s;
    }

    void insert(std::size_t block, std::size_t pos, bool bit) {
        word.insert(word.begin() + static_cast<std::ptrdiff_t>(pos - 1), bit ? 1 : 0);
        lengths[block - 1] += 1;
        script.push_back({EditOp::Kind::Insert, pos, bit, block});
    }

    void erase(std::size_t block, std::size_t pos) {
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(pos - 1));
        lengths[block - 1] -= 1;
        script.push_back({EditOp::Kind::Delete, pos, false, block});
    }
};

void op_uniform(Workspace& ws, Rng& rng, std::size_t d) {
    const std::size_t block = 1 + rng.below(d);
    const std::size_t start = ws.region_start(block);
    const std::size_t len = ws.lengths[block - 1];
    if (len == 0 || rng.bit()) {
        const std::size_t pos = start + 1 + rng.below(len + 1);
        ws.insert(block, pos, rng.bit());
    } else {
        const std::size_t pos = start + 1 + rng.below(len);
        ws.erase(block, pos);
    }
}

void op_burst(Workspace& ws, Rng& rng, std::size_t block) {
    const std::size_t start = ws.region_start(block);
    const std::size_t len = ws.lengths[block - 1];
    if (len == 0 || rng.bit()) {
        ws.insert(block, start + 1 + rng.below(len + 1), rng.bit());
    } else {
        ws.erase(block, start + 1 + rng.below(len));
    }
}

// Fabricates buffer look-alikes: 0-runs dropped into codeword interiors.
std::size_t op_spoof(Workspace& ws, Rng& rng, const CodeParams& params,
                     std::size_t remaining) {
    const std::size_t block = 1 + rng.below(params.d);
    const std::size_t start = ws.region_start(block);
    const std::size_t len = ws.lengths[block - 1];
    const std::size_t run = std::min(remaining, params.buffer_window);
    // land strictly inside the codeword part when the region still has one
    std::size_t lo = params.buffer_len + 1;
    std::size_t hi = len > params.buffer_len ? len - params.buffer_len : 0;
    if (lo > hi) {
        lo = 1;
        hi = len + 1;
    }
    const std::size_t pos = start + lo + rng.below(hi - lo + 1);
    for (std::size_t r = 0; r < run; ++r) ws.insert(block, pos, false);
    return run;
}

// Attacks real buffers: rewrites a buffer zero to a one (delete + insert).
std::size_t op_erase_buffer(Workspace& ws, Rng& rng, const CodeParams& params,
                            std::size_t remaining) {
    if (remaining < 2) return 0;
    const std::size_t block = 1 + rng.below(params.d);
    const std::size_t start = ws.region_start(block);
    const std::size_t len = ws.lengths[block - 1];
    if (len == 0) return 0;
    const std::size_t zone = std::min(params.buffer_len, len);
    const bool leading = rng.bit();
    const std::size_t off = rng.below(zone);
    const std::size_t pos = leading ? start + 1 + off : start + len - off;
    ws.erase(block, pos);
    ws.insert(block, pos, true);
    return 2;
}

// Optimal-alignment fallback for unattributed scripts: match c' against c,
// inherit block ids through the matches, hand inserted bits to the block on
// their left.
BlockDecomposition align_decomposition(const BitString& original, const BitString& corrupted,
                                       const CodeParams& params) {
    const auto& a = original.raw();
    const auto& b = corrupted.raw();
    const std::size_t n = a.size(), np = b.size();
    std::vector<std::vector<std::uint32_t>> lcs(n + 1,
                                                std::vector<std::uint32_t>(np + 1, 0));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= np; ++j)
            lcs[i][j] = a[i - 1] == b[j - 1]
                            ? lcs[i - 1][j - 1] + 1
                            : std::max(lcs[i - 1][j], lcs[i][j - 1]);
    // walk back collecting, for every matched c' position, the c position
    std::vector<std::size_t> match_of(np + 1, 0);
    std::size_t i = n, j = np;
    while (i > 0 && j > 0) {
        if (a[i - 1] == b[j - 1] && lcs[i][j] == lcs[i - 1][j - 1] + 1) {
            match_of[j] = i;
            --i;
            --j;
        } else if (lcs[i - 1][j] >= lcs[i][j - 1]) {
            --i;
        } else {
            --j;
        }
    }
    BlockDecomposition dec;
    dec.lengths.assign(params.d, 0);
    std::size_t current = 1;
    for (std::size_t p = 1; p <= np; ++p) {
        if (match_of[p] != 0) current = (match_of[p] - 1) / params.block_len + 1;
        dec.lengths[current - 1] += 1;
    }
    return dec;
}

}  // namespace

ChannelTrial corrupt(const BitString& c, const CodeParams& params,
                     const std::string& strategy, std::uint64_t seed,
                     double delta_override) {
    const bool known = std::any_of(std::begin(kChannelStrategies), std::end(kChannelStrategies),
                                   [&](const char* s) { return strategy == s; });
    if (!known) throw ConfigError("unknown channel strategy: " + strategy);
    if (c.size() != params.n)
        throw ConfigError("codeword length " + std::to_string(c.size()) +
                          " does not match params.n = " + std::to_string(params.n));

    ChannelTrial trial;
    trial.strategy = strategy;
    trial.seed = seed;
    trial.delta_budget = delta_override > 0.0 ? delta_override : params.delta;
    trial.budget_limit = params.channel_budget(trial.delta_budget);

    Workspace ws;
    ws.word.assign(c.raw().begin(), c.raw().end());
    ws.lengths.assign(params.d, params.block_len);
    Rng rng(Rng::mix(seed, 0xC0DE));

    if (strategy == "freeform") {
        // unattributed edits at uniform global positions
        std::size_t used = 0;
        while (used < trial.budget_limit) {
            if (ws.word.empty() || rng.bit()) {
                const std::size_t pos = 1 + rng.below(ws.word.size() + 1);
                const bool bit = rng.bit();
                ws.word.insert(ws.word.begin() + static_cast<std::ptrdiff_t>(pos - 1),
                               bit ? 1 : 0);
                ws.script.push_back({EditOp::Kind::Insert, pos, bit, 0});
            } else {
                const std::size_t pos = 1 + rng.below(ws.word.size());
                ws.script.push_back({EditOp::Kind::Delete, pos, false, 0});
                ws.word.erase(ws.word.begin() + static_cast<std::ptrdiff_t>(pos - 1));
            }
            ++used;
        }
        trial.certified = false;
    } else if (strategy == "none") {
        // identity
    } else if (strategy == "uniform-random") {
        for (std::size_t i = 0; i < trial.budget_limit; ++i) op_uniform(ws, rng, params.d);
    } else if (strategy == "block-burst") {
        const std::size_t target = 1 + rng.below(params.d);
        for (std::size_t i = 0; i < trial.budget_limit; ++i) op_burst(ws, rng, target);
    } else if (strategy == "buffer-spoof") {
        std::size_t used = 0;
        while (used < trial.budget_limit)
            used += op_spoof(ws, rng, params, trial.budget_limit - used);
    } else {  // buffer-erase
        std::size_t used = 0;
        while (trial.budget_limit - used >= 2) {
            const std::size_t spent = op_erase_buffer(ws, rng, params, trial.budget_limit - used);
            if (spent == 0) break;
            used += spent;
        }
    }

    trial.script = std::move(ws.script);
    trial.budget_used = trial.script.size();
    trial.corrupted = apply_edit_script(c, trial.script);
    if (trial.certified) {
        trial.decomposition = decomposition_lengths(trial.script, params);
    } else {
        trial.decomposition = align_decomposition(c, trial.corrupted, params);
    }
    if (trial.decomposition.total() != trial.corrupted.size())
        throw AnalysisError("decomposition lengths do not sum to the corrupted length");
    return trial;
}

BlockDecomposition decomposition_lengths(const EditScript& script, const CodeParams& params) {
    BlockDecomposition dec;
    dec.lengths.assign(params.d, params.block_len);
    for (std::size_t k = 0; k < script.size(); ++k) {
        const EditOp& op = script[k];
        if (op.block < 1 || op.block > params.d)
            throw TraceError("op " + std::to_string(k + 1) + " attributed to block " +
                             std::to_string(op.block) + " outside [1, d]");
        std::size_t start = 0;
        for (std::size_t j = 0; j + 1 < op.block; ++j) start += dec.lengths[j];
        const std::size_t len = dec.lengths[op.block - 1];
        if (op.kind == EditOp::Kind::Insert) {
            if (op.pos < start + 1 || op.pos > start + len + 1)
                throw TraceError("op " + std::to_string(k + 1) +
                                 " inserts outside its attributed block");
            dec.lengths[op.block - 1] += 1;
        } else {
            if (len == 0 || op.pos < start + 1 || op.pos > start + len)
                throw TraceError("op " + std::to_string(k + 1) +
                                 " deletes outside its attributed block");
            dec.lengths[op.block - 1] -= 1;
        }
    }
    return dec;
}

void write_trial_trace(std::ostream& os, const ChannelTrial& trial) {
    os << "# strategy=" << trial.strategy << " seed=" << trial.seed
       << " budget=" << trial.budget_limit << " delta=" << trial.delta_budget
       << " certified=" << (trial.certified ? 1 : 0) << '\n';
    write_edit_script(os, trial.script);
    os << "lengths:";
    for (std::size_t len : trial.decomposition.lengths) os << ' ' << len;
    os << '\n';
}

ChannelTrial read_trial_trace(std::istream& is, const BitString& original,
                              const CodeParams& params) {
    ChannelTrial trial;
    trial.strategy = "trace";
    std::string content((std::istreambuf_iterator<char>(is)),
                        std::istreambuf_iterator<char>());
    std::istringstream body(content);

    // optional header comment
    std::string first;
    std::streampos at = body.tellg();
    if (std::getline(body, first) && first.rfind("# strategy=", 0) == 0) {
        std::istringstream hs(first.substr(2));
        std::string field;
        while (hs >> field) {
            const std::size_t eq = field.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = field.substr(0, eq);
            const std::string val = field.substr(eq + 1);
            if (key == "strategy") trial.strategy = val;
            else if (key == "seed") trial.seed = std::stoull(val);
            else if (key == "budget") trial.budget_limit = std::stoull(val);
            else if (key == "delta") trial.delta_budget = std::stod(val);
            else if (key == "certified") trial.certified = val != "0";
        }
    } else {
        body.clear();
        body.seekg(at);
    }

    trial.script = read_edit_script(body);
    trial.budget_used = trial.script.size();
    trial.corrupted = apply_edit_script(original, trial.script);

    // footer, if present; otherwise recompute from attributions
    const std::size_t fpos = content.find("lengths:");
    if (fpos != std::string::npos) {
        std::istringstream fs(content.substr(fpos + 8));
        std::size_t v;
        while (fs >> v) trial.decomposition.lengths.push_back(v);
        if (trial.decomposition.lengths.size() != params.d)
            throw TraceError("lengths footer holds " +
                             std::to_string(trial.decomposition.lengths.size()) +
                             " entries, expected d = " + std::to_string(params.d));
    } else {
        trial.decomposition = decomposition_lengths(trial.script, params);
    }
    if (trial.decomposition.total() != trial.corrupted.size())
        throw TraceError("lengths footer does not sum to the corrupted length");
    return trial;
}

}  // namespace insdel
