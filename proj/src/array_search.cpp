#include "insdel/array_search.hpp"

#include <algorithm>
#include <stdexcept>

namespace insdel {

NearlySortedArray make_nearly_sorted(std::size_t n, std::size_t corruptions,
                                     std::uint64_t seed) {
    if (corruptions > n) throw std::invalid_argument("more corruptions than elements");
    NearlySortedArray arr;
    arr.reference.resize(n);
    for (std::size_t i = 0; i < n; ++i) arr.reference[i] = static_cast<std::int64_t>(i + 1);
    arr.values = arr.reference;
    if (corruptions < 2) return arr;  // a single position cannot disagree and stay distinct

    Rng rng(Rng::mix(seed, 0xA77A7));
    std::vector<std::size_t> picks(n);
    for (std::size_t i = 0; i < n; ++i) picks[i] = i;
    for (std::size_t i = 0; i < corruptions; ++i) {
        const std::size_t j = i + rng.below(n - i);
        std::swap(picks[i], picks[j]);
    }
    picks.resize(corruptions);
    std::sort(picks.begin(), picks.end());

    // cyclic shift of the chosen values: every picked position disagrees
    std::vector<std::int64_t> vals(corruptions);
    for (std::size_t i = 0; i < corruptions; ++i) vals[i] = arr.reference[picks[i]];
    for (std::size_t i = 0; i < corruptions; ++i)
        arr.values[picks[i]] = vals[(i + 1) % corruptions];
    arr.corrupted = picks;
    return arr;
}

std::vector<std::size_t> locally_good_indices(const NearlySortedArray& arr, double theta) {
    if (theta <= 0.0 || theta >= 1.0) throw std::invalid_argument("theta outside (0, 1)");
    const std::size_t n = arr.values.size();
    std::vector<bool> corrupt(n, false);
    for (std::size_t c : arr.corrupted) corrupt[c] = true;

    std::vector<std::size_t> good;
    for (std::size_t i = 0; i < n; ++i) {
        bool ok = true;
        std::size_t bad = 0;
        for (std::size_t r = 0; i + r < n; ++r) {  // windows [i, i+r]
            if (corrupt[i + r]) ++bad;
            if (static_cast<double>(bad) > theta * static_cast<double>(r + 1) + 1e-12) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        bad = 0;
        for (std::size_t r = 0; r <= i; ++r) {  // windows [i-r, i]
            if (corrupt[i - r]) ++bad;
            if (static_cast<double>(bad) > theta * static_cast<double>(r + 1) + 1e-12) {
                ok = false;
                break;
            }
        }
        if (ok) good.push_back(i);
    }
    return good;
}

std::optional<std::size_t> noisy_search(const NearlySortedArray& arr, std::int64_t x,
                                        std::size_t samples, Rng& rng,
                                        ArraySearchTrace* trace, std::size_t base_case) {
    if (samples < 1) throw std::invalid_argument("need at least one sample per round");
    const std::size_t n = arr.values.size();
    if (n == 0) return std::nullopt;
    std::size_t lo = 0, hi = n - 1;  // inclusive
    std::size_t rounds = 0, probes = 0;

    while (hi - lo + 1 > base_case) {
        ++rounds;
        std::vector<std::pair<std::int64_t, std::size_t>> picked;
        picked.reserve(samples);
        for (std::size_t s = 0; s < samples; ++s) {
            const std::size_t idx = lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
            ++probes;
            if (arr.values[idx] == x) {
                if (trace) {
                    trace->rounds = rounds;
                    trace->probes = probes;
                }
                return idx;
            }
            picked.emplace_back(arr.values[idx], idx);
        }
        std::sort(picked.begin(), picked.end());
        const std::int64_t median = picked[(picked.size() - 1) / 2].first;
        const std::size_t cut = (hi - lo + 1 + 7) / 8;  // an eighth, rounded up
        if (x > median)
            lo = std::min(lo + cut, hi);
        else
            hi = std::max(hi - cut, lo);
    }
    if (trace) {
        trace->rounds = rounds;
        trace->probes = probes + (hi - lo + 1);
    }
    for (std::size_t i = lo; i <= hi; ++i)
        if (arr.values[i] == x) return i;
    return std::nullopt;
}

}  // namespace insdel
