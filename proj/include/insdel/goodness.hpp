#pragma once

#include <iosfwd>
#include <vector>

#include "insdel/channel.hpp"
#include "insdel/encoder.hpp"
#include "insdel/params.hpp"

namespace insdel {

// Per-block edit costs and the (locally-)good classification, with the
// fraction bounds they are required to satisfy. A bound violation is a
// reportable finding rather than an exception: uncertified decompositions
// can legitimately cross them.
struct GoodnessReport {
    std::vector<std::size_t> block_costs;   // ED(region_j, clean block j)
    std::vector<bool> gamma_good;
    std::vector<bool> locally_good;
    double fraction_gamma_bad = 0.0;
    double fraction_locally_bad = 0.0;
    double delta = 0.0;                     // budget fraction the bounds use
    double bound_gamma_bad = 0.0;           // 2*beta*delta/(gamma*alpha)
    double bound_locally_bad = 0.0;         // (4/(gamma*alpha))*(1+1/theta)*delta*beta
};

struct BoundCheck {
    bool gamma_bound_ok = true;
    bool local_bound_ok = true;
    bool good_block_lengths_ok = true;      // each good region within (beta +- alpha*gamma)*tau
    std::vector<std::size_t> length_violations;

    bool all_ok() const { return gamma_bound_ok && local_bound_ok && good_block_lengths_ok; }
};

// Edit cost of every corrupted region against its uncorrupted block.
std::vector<std::size_t> block_costs(const BitString& original, const ChannelTrial& trial,
                                     const CodeParams& params);

std::vector<bool> classify_gamma_good(const std::vector<std::size_t>& costs,
                                      const CodeParams& params);

// Both interval conditions: total cost <= gamma*(b-a+1)*alpha*tau and at
// least a (1-theta) fraction of good blocks among a..b (1-based, inclusive).
bool interval_is_good(std::size_t a, std::size_t b, const std::vector<std::size_t>& costs,
                      const std::vector<bool>& good, const CodeParams& params);

// Block j is locally good when every interval containing j is good; prefix
// sums keep the scan at O(d^2).
std::vector<bool> classify_locally_good(const std::vector<std::size_t>& costs,
                                        const CodeParams& params);

GoodnessReport analyze_trial(const BitString& original, const ChannelTrial& trial,
                             const CodeParams& params);

BoundCheck check_bounds(const GoodnessReport& report, const ChannelTrial& trial,
                        const CodeParams& params);

// One line per block `j cost gamma_good locally_good`, then fraction and
// bound footers.
void write_goodness_report(std::ostream& os, const GoodnessReport& report,
                           const BoundCheck& check);

}  // namespace insdel
