#include "insdel/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace insdel {
namespace {

// Greedy non-overlapping buffer marks over a locally-read window buffer.
// Marks are (start, end) pairs, 0-based and inclusive, relative to `bits`.
std::vector<std::pair<std::size_t, std::size_t>> greedy_marks(
    const std::vector<std::uint8_t>& bits, std::size_t window, std::size_t weight_cap,
    bool right_to_left) {
    std::vector<std::pair<std::size_t, std::size_t>> marks;
    const std::size_t len = bits.size();
    if (len < window) return marks;
    if (!right_to_left) {
        std::size_t s = 0;
        std::size_t weight = 0;
        std::size_t loaded = 0;  // bits [s, s+loaded) accounted in `weight`
        while (s + window <= len) {
            while (loaded < window) {
                weight += bits[s + loaded];
                ++loaded;
            }
            if (weight <= weight_cap) {
                marks.emplace_back(s, s + window - 1);
                s += window;
                weight = 0;
                loaded = 0;
            } else {
                weight -= bits[s];
                ++s;
                --loaded;
            }
        }
    } else {
        std::size_t end = len;  // window is [end-window, end)
        std::size_t weight = 0;
        std::size_t loaded = 0;
        while (end >= window) {
            while (loaded < window) {
                ++loaded;
                weight += bits[end - loaded];
            }
            if (weight <= weight_cap) {
                marks.emplace_back(end - window, end - 1);
                if (end < 2 * window) break;
                end -= window;
                weight = 0;
                loaded = 0;
            } else {
                weight -= bits[end - 1];
                --end;
                --loaded;
            }
        }
        std::reverse(marks.begin(), marks.end());
    }
    return marks;
}

BitString slice_local(const std::vector<std::uint8_t>& bits, std::size_t lo, std::size_t hi) {
    BitString s;
    for (std::size_t p = lo; p < hi; ++p) s.push_back(bits[p] != 0);
    return s;
}

}  // namespace

std::optional<BufferPair> buff_find(WordOracle& oracle, std::size_t i,
                                    const CodeParams& params) {
    const std::size_t n_prime = oracle.size();
    if (i < 1 || i > n_prime) throw std::out_of_range("probe position outside [1, n']");
    const std::size_t w = params.buffer_window;
    const std::size_t cap = params.buffer_weight_threshold();
    const std::size_t ball = params.eta * params.tau;
    const std::size_t js = i > ball ? i - ball : 1;
    if (n_prime < w) return std::nullopt;
    const std::size_t je = std::min(n_prime - w + 1, i + ball);
    if (je < js) return std::nullopt;

    // read the ball once, then slide over the local copy
    std::vector<std::uint8_t> ball_bits(je + w - js);
    for (std::size_t p = js; p < je + w; ++p) ball_bits[p - js] = oracle.read(p) ? 1 : 0;
    std::vector<std::pair<std::size_t, std::size_t>> windows;
    std::size_t weight = 0;
    for (std::size_t p = 0; p < w; ++p) weight += ball_bits[p];
    for (std::size_t s = js;; ++s) {
        if (weight <= cap) windows.emplace_back(s, s + w - 1);
        if (s == je) break;
        weight -= ball_bits[s - js];
        weight += ball_bits[s - js + w];
    }
    for (std::size_t k = 0; k + 1 < windows.size(); ++k) {
        if (windows[k].second < i && i < windows[k + 1].first) {
            BufferPair pair;
            pair.a = windows[k].first;
            pair.b = windows[k].second;
            pair.a2 = windows[k + 1].first;
            pair.b2 = windows[k + 1].second;
            return pair;
        }
    }
    return std::nullopt;
}

std::optional<ParsedInnerMessage> block_decode(WordOracle& oracle, std::size_t i,
                                               const CodeParams& params,
                                               const InnerCodebook& cb) {
    const std::optional<BufferPair> pair = buff_find(oracle, i, params);
    if (!pair) return std::nullopt;
    if (!(pair->b < i && i < pair->a2)) return std::nullopt;
    const std::size_t lo = pair->b + 1;
    const std::size_t hi = pair->a2;  // exclusive
    BitString span;
    for (std::size_t p = lo; p < hi; ++p) span.push_back(oracle.read(p));
    const std::optional<BitString> msg = cb.decode(span);
    if (!msg) return std::nullopt;
    return parse_inner_message(params, *msg);
}

std::optional<std::vector<Symbol>> interval_decode(WordOracle& oracle, std::size_t l,
                                                   std::size_t r, std::size_t j,
                                                   const CodeParams& params,
                                                   const InnerCodebook& cb) {
    const std::size_t n_prime = oracle.size();
    if (!(1 <= l && l < r && r <= n_prime + 1))
        throw std::out_of_range("interval outside [1, n'+1)");
    const std::size_t w = params.buffer_window;
    const std::size_t cap = params.buffer_weight_threshold();
    const std::size_t radius = params.decode_radius_num();

    // one read per interval position; both passes work off this local copy
    std::vector<std::uint8_t> bits(r - l);
    for (std::size_t p = l; p < r; ++p) bits[p - l] = oracle.read(p) ? 1 : 0;

    std::vector<std::optional<std::vector<Symbol>>> hits;
    auto decode_spans = [&](const std::vector<std::pair<std::size_t, std::size_t>>& marks) {
        for (std::size_t k = 0; k + 1 < marks.size(); ++k) {
            const std::size_t lo = marks[k].second + 1;
            const std::size_t hi = marks[k + 1].first;
            if (hi <= lo) continue;
            const std::size_t len = hi - lo;
            if (len + radius < cb.n_in || len > cb.n_in + radius) continue;
            const std::optional<BitString> msg = cb.decode(slice_local(bits, lo, hi));
            if (!msg) continue;
            const ParsedInnerMessage parsed = parse_inner_message(params, *msg);
            if (parsed.block == j) hits.emplace_back(parsed.symbols);
        }
    };
    decode_spans(greedy_marks(bits, w, cap, false));
    decode_spans(greedy_marks(bits, w, cap, true));

    std::optional<std::vector<Symbol>> result;
    for (const auto& h : hits) {
        if (!result) {
            result = h;
        } else if (*result != *h) {
            return std::nullopt;  // conflicting candidates for block j
        }
    }
    return result;
}

std::optional<std::vector<Symbol>> noisy_binary_search(WordOracle& oracle, std::size_t l,
                                                       std::size_t r, std::size_t j,
                                                       const CodeParams& params,
                                                       const InnerCodebook& cb, Rng& rng,
                                                       SearchTrace* trace) {
    const std::size_t n_prime = oracle.size();
    if (!(1 <= l && l < r && r <= n_prime + 1))
        throw std::out_of_range("interval outside [1, n'+1)");
    if (j < 1 || j > params.d) throw std::out_of_range("block id outside [1, d]");
    if (trace) trace->target = j;
    const std::size_t sample_count = params.sample_count(n_prime);

    while (static_cast<double>(r - l) > params.base_case_width) {
        const std::size_t shift = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::llround(params.rho * static_cast<double>(r - l))));
        const std::size_t m1 = l + shift;
        const std::size_t m2 = r - shift;

        SearchStep step;
        step.l = l;
        step.r = r;
        step.m1 = m1;
        step.m2 = m2;
        step.samples = sample_count;

        std::vector<std::size_t> seen;
        seen.reserve(sample_count);
        for (std::size_t s = 0; s < sample_count; ++s) {
            const std::size_t i = m1 + static_cast<std::size_t>(rng.below(m2 - m1));
            const std::optional<ParsedInnerMessage> dec = block_decode(oracle, i, params, cb);
            if (dec) seen.push_back(dec->block);
        }
        step.bottoms = sample_count - seen.size();
        if (seen.empty()) {
            if (trace) {
                trace->steps.push_back(step);
                trace->returned_bottom = true;
            }
            return std::nullopt;
        }
        std::sort(seen.begin(), seen.end());
        const std::size_t median = seen[(seen.size() - 1) / 2];  // lower middle
        step.median = median;
        step.went_left = j <= median;
        if (trace) trace->steps.push_back(step);
        if (j <= median)
            r = m2;
        else
            l = m1;
    }
    if (trace) {
        trace->final_l = l;
        trace->final_r = r;
    }
    const auto result = interval_decode(oracle, l, r, j, params, cb);
    if (trace && !result) trace->returned_bottom = true;
    return result;
}

DecodeSession::DecodeSession(WordOracle& oracle, const CodeParams& params,
                             const InnerCodebook& cb, const OuterCode& outer,
                             std::uint64_t seed, bool use_memo)
    : oracle_(oracle),
      params_(params),
      cb_(cb),
      outer_(outer),
      rng_(Rng::mix(seed, 0xD6C0DE)),
      use_memo_(use_memo) {}

std::optional<std::vector<Symbol>> DecodeSession::search_block(std::size_t block) {
    if (use_memo_) {
        const auto it = memo_.find(block);
        if (it != memo_.end()) return it->second;
    }
    SearchTrace trace;
    auto result =
        noisy_binary_search(oracle_, 1, oracle_.size() + 1, block, params_, cb_, rng_, &trace);
    traces_.push_back(std::move(trace));
    if (use_memo_) memo_[block] = result;
    return result;
}

SymbolOrBottom DecodeSession::answer_outer_query(std::size_t q) {
    const std::size_t block = (q - 1) / params_.tau + 1;
    const std::size_t offset = (q - 1) % params_.tau;
    const auto symbols = search_block(block);
    if (!symbols) return std::nullopt;
    return (*symbols)[offset];
}

Symbol DecodeSession::decode_message(std::size_t i) {
    return outer_.decode_message(
        i, [this](std::size_t q) { return answer_outer_query(q); }, rng_);
}

bool DecodeSession::correct_codeword_bit(std::size_t j) {
    if (j < 1 || j > params_.n) throw std::out_of_range("codeword position outside [1, n]");
    const std::size_t block = (j - 1) / params_.block_len + 1;
    const std::size_t offset = (j - 1) % params_.block_len;  // 0-based within the block
    const std::size_t zero_zone = params_.lcc_buffer_width;
    if (offset < zero_zone || offset >= params_.block_len - zero_zone) return false;
    if (offset < params_.buffer_len || offset >= params_.block_len - params_.buffer_len)
        return false;  // structurally a buffer bit even under a narrow override

    std::vector<Symbol> symbols(params_.tau, 0);
    for (std::size_t s = 0; s < params_.tau; ++s) {
        const std::size_t q = (block - 1) * params_.tau + s + 1;
        symbols[s] = outer_.correct_symbol(
            q, [this](std::size_t pos) { return answer_outer_query(pos); }, rng_);
    }
    const BitString& cw = cb_.encode(inner_message(params_, block, symbols));
    return cw.bit(offset - params_.buffer_len + 1);
}

std::size_t DecodeSession::max_search_depth() const {
    std::size_t depth = 0;
    for (const SearchTrace& t : traces_) depth = std::max(depth, t.steps.size());
    return depth;
}

}  // namespace insdel
