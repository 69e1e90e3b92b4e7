#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "insdel/bitstring.hpp"
#include "insdel/params.hpp"

namespace insdel {

// Partition of the corrupted word into d consecutive block regions; the
// non-decreasing position -> block map is induced by the region lengths.
struct BlockDecomposition {
    std::vector<std::size_t> lengths;

    std::size_t total() const;
    Interval region(std::size_t block) const;      // 1-based block id
    std::size_t block_of(std::size_t pos) const;   // 1-based position
};

// One channel run with full provenance: the corrupted word, the script that
// produced it, and the block decomposition tracking where every edit landed.
struct ChannelTrial {
    BitString corrupted;
    EditScript script;
    BlockDecomposition decomposition;
    std::string strategy;
    std::uint64_t seed = 0;
    std::size_t budget_used = 0;
    std::size_t budget_limit = 0;
    double delta_budget = 0.0;   // fraction the budget was computed from
    bool certified = true;       // false for freeform (alignment-derived map)
};

extern const char* const kChannelStrategies[6];  // incl. freeform escape hatch

// Applies `strategy` to c within budget floor(2 * n * delta). delta_override
// = 0 uses the derived params.delta. Unknown strategy -> ConfigError.
ChannelTrial corrupt(const BitString& c, const CodeParams& params,
                     const std::string& strategy, std::uint64_t seed,
                     double delta_override = 0.0);

// Region lengths implied by a block-attributed script; throws TraceError on
// an attribution that is invalid at the moment its op applies.
BlockDecomposition decomposition_lengths(const EditScript& script,
                                         const CodeParams& params);

// Trace file: comment header, script lines, then a `lengths:` footer.
void write_trial_trace(std::ostream& os, const ChannelTrial& trial);
ChannelTrial read_trial_trace(std::istream& is, const BitString& original,
                              const CodeParams& params);

}  // namespace insdel
