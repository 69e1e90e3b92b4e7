#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "insdel/encoder.hpp"
#include "insdel/inner_code.hpp"
#include "insdel/outer_code.hpp"
#include "insdel/params.hpp"
#include "insdel/rng.hpp"

namespace insdel {

// Counting oracle over the received word. Every single-bit read passes
// through here; out-of-range positions answer 0 and are still counted.
class WordOracle {
  public:
    explicit WordOracle(const BitString& word, bool keep_log = false)
        : word_(&word), keep_log_(keep_log) {}

    std::size_t size() const { return word_->size(); }

    bool read(std::size_t pos) {
        ++queries_;
        if (keep_log_) log_.push_back(pos);
        if (pos < 1 || pos > word_->size()) return false;
        return word_->bit(pos);
    }

    std::size_t query_count() const { return queries_; }
    const std::vector<std::size_t>& query_log() const { return log_; }

  private:
    const BitString* word_;
    bool keep_log_;
    std::size_t queries_ = 0;
    std::vector<std::size_t> log_;
};

// Two consecutive low-weight windows straddling the probe position.
struct BufferPair {
    std::size_t a = 0, b = 0;    // first window [a, b]
    std::size_t a2 = 0, b2 = 0;  // second window [a2, b2]
};

// Search bookkeeping, one record per halving step.
struct SearchStep {
    std::size_t l = 0, r = 0, m1 = 0, m2 = 0;
    std::size_t samples = 0, bottoms = 0;
    std::size_t median = 0;
    bool went_left = false;
};
struct SearchTrace {
    std::size_t target = 0;
    std::vector<SearchStep> steps;
    std::size_t final_l = 0, final_r = 0;
    bool returned_bottom = false;
};

// Scans the ball of radius eta*tau around i for approximate buffers (windows
// of buffer_window bits with weight <= floor(delta_b * buffer_len / 2)) and
// returns the first consecutive pair with b < i < a2.
std::optional<BufferPair> buff_find(WordOracle& oracle, std::size_t i,
                                    const CodeParams& params);

// buff_find + inner decode of the span between the straddling buffers.
std::optional<ParsedInnerMessage> block_decode(WordOracle& oracle, std::size_t i,
                                               const CodeParams& params,
                                               const InnerCodebook& cb);

// Greedy buffer marking over [l, r), left-to-right plus a right-to-left pass
// for the leftmost block; decodes inter-buffer spans and returns the symbols
// of block j when exactly one distinct value emerges.
std::optional<std::vector<Symbol>> interval_decode(WordOracle& oracle, std::size_t l,
                                                   std::size_t r, std::size_t j,
                                                   const CodeParams& params,
                                                   const InnerCodebook& cb);

// Median-routed halving search for block j over [l, r); delegates to
// interval_decode below the base-case width.
std::optional<std::vector<Symbol>> noisy_binary_search(WordOracle& oracle, std::size_t l,
                                                       std::size_t r, std::size_t j,
                                                       const CodeParams& params,
                                                       const InnerCodebook& cb, Rng& rng,
                                                       SearchTrace* trace = nullptr);

// One decoding session: owns the per-session randomness, the block-result
// memo, and the collected search traces.
class DecodeSession {
  public:
    DecodeSession(WordOracle& oracle, const CodeParams& params, const InnerCodebook& cb,
                  const OuterCode& outer, std::uint64_t seed, bool use_memo = true);

    // Message symbol i in [1, k], through the outer decoder.
    Symbol decode_message(std::size_t i);

    // Codeword bit j in [1, n]: buffer positions answer 0, everything else is
    // re-encoded from the recovered block symbols.
    bool correct_codeword_bit(std::size_t j);

    // Full-word search for one block, memoized per session.
    std::optional<std::vector<Symbol>> search_block(std::size_t block);

    const std::vector<SearchTrace>& traces() const { return traces_; }
    std::size_t max_search_depth() const;

  private:
    SymbolOrBottom answer_outer_query(std::size_t q);

    WordOracle& oracle_;
    const CodeParams& params_;
    const InnerCodebook& cb_;
    const OuterCode& outer_;
    Rng rng_;
    bool use_memo_;
    std::map<std::size_t, std::optional<std::vector<Symbol>>> memo_;
    std::vector<SearchTrace> traces_;
};

}  // namespace insdel
