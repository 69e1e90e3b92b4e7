#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "insdel/rng.hpp"

namespace insdel {

// Nearly sorted array: `values` agrees with the sorted `reference` except on
// `corrupted` positions (0-based). Elements stay pairwise distinct.
struct NearlySortedArray {
    std::vector<std::int64_t> values;
    std::vector<std::int64_t> reference;
    std::vector<std::size_t> corrupted;
};

// reference = 1..n with `corruptions` positions deranged among themselves.
NearlySortedArray make_nearly_sorted(std::size_t n, std::size_t corruptions,
                                     std::uint64_t seed);

// Index i is locally good when every window anchored at i, on either side,
// contains at most a theta fraction of corrupted positions. 0-based indices.
std::vector<std::size_t> locally_good_indices(const NearlySortedArray& arr, double theta);

struct ArraySearchTrace {
    std::size_t rounds = 0;
    std::size_t probes = 0;
};

// Median-sampled search: sample `samples` positions per round, compare x with
// the sample median and shrink the interval by an eighth from the matching
// side; below `base_case` elements, scan linearly. Returns the 0-based index
// holding x, or nullopt.
std::optional<std::size_t> noisy_search(const NearlySortedArray& arr, std::int64_t x,
                                        std::size_t samples, Rng& rng,
                                        ArraySearchTrace* trace = nullptr,
                                        std::size_t base_case = 64);

}  // namespace insdel
