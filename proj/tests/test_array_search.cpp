#include "insdel/array_search.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using namespace insdel;

namespace {

// Brute-force window oracle straight from the definition.
bool locally_good_brute(const NearlySortedArray& arr, std::size_t i, double theta) {
    const std::size_t n = arr.values.size();
    std::set<std::size_t> corrupt(arr.corrupted.begin(), arr.corrupted.end());
    for (std::size_t r = 0;; ++r) {
        if (i + r < n) {
            std::size_t bad = 0;
            for (std::size_t j = i; j <= i + r; ++j) bad += corrupt.count(j);
            if (static_cast<double>(bad) > theta * static_cast<double>(r + 1) + 1e-12)
                return false;
        }
        if (r <= i) {
            std::size_t bad = 0;
            for (std::size_t j = i - r; j <= i; ++j) bad += corrupt.count(j);
            if (static_cast<double>(bad) > theta * static_cast<double>(r + 1) + 1e-12)
                return false;
        }
        if (i + r >= n && r > i) break;
    }
    return true;
}

}  // namespace

TEST_CASE("instance construction: distinct values, sorted reference, tracked corruption") {
    const NearlySortedArray arr = make_nearly_sorted(64, 8, 3);
    CHECK(arr.values.size() == 64);
    CHECK(arr.corrupted.size() == 8);
    std::vector<std::int64_t> sorted = arr.values;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == arr.reference);
    for (std::size_t i = 0; i < 64; ++i) {
        const bool marked = std::find(arr.corrupted.begin(), arr.corrupted.end(), i) !=
                            arr.corrupted.end();
        CHECK((arr.values[i] != arr.reference[i]) == marked);
    }
}

TEST_CASE("zero corruption: every index is locally good") {
    const NearlySortedArray arr = make_nearly_sorted(50, 0, 1);
    CHECK(locally_good_indices(arr, 0.25).size() == 50);
}

TEST_CASE("locally good agrees with brute force on small random instances") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const std::size_t n = 10 + (seed % 41);  // up to 50
        const NearlySortedArray arr = make_nearly_sorted(n, std::min<std::size_t>(n / 5, 8), seed);
        for (double theta : {0.2, 0.25, 0.4}) {
            const std::vector<std::size_t> fast = locally_good_indices(arr, theta);
            std::vector<std::size_t> brute;
            for (std::size_t i = 0; i < n; ++i)
                if (locally_good_brute(arr, i, theta)) brute.push_back(i);
            CHECK(fast == brute);
        }
    }
}

TEST_CASE("census bound: |good| >= n - 2*corruptions/theta") {
    const double theta = 0.25;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const NearlySortedArray arr = make_nearly_sorted(512, 10, seed);
        const auto good = locally_good_indices(arr, theta);
        const double floor_count =
            512.0 - 2.0 * static_cast<double>(arr.corrupted.size()) / theta;
        CHECK(static_cast<double>(good.size()) >= floor_count);
    }
}

TEST_CASE("sorted array: any present value is found") {
    const NearlySortedArray arr = make_nearly_sorted(1024, 0, 1);
    Rng rng(5);
    for (std::int64_t x : {std::int64_t{1}, std::int64_t{500}, std::int64_t{1024}}) {
        const auto idx = noisy_search(arr, x, 64, rng);
        REQUIRE(idx.has_value());
        CHECK(arr.values[*idx] == x);
    }
}

TEST_CASE("absent value comes back bottom") {
    const NearlySortedArray arr = make_nearly_sorted(256, 4, 9);
    Rng rng(17);
    CHECK(noisy_search(arr, 100000, 64, rng) == std::nullopt);
}

TEST_CASE("round budget: interval shrinks an eighth per round") {
    const NearlySortedArray arr = make_nearly_sorted(4096, 0, 1);
    Rng rng(23);
    ArraySearchTrace trace;
    const auto idx = noisy_search(arr, 2048, 144, rng, &trace);
    REQUIRE(idx.has_value());
    // width w goes to ceil(7w/8): rounds <= log_{8/7}(n/64) + 1
    const double cap = std::log(4096.0 / 64.0) / std::log(8.0 / 7.0) + 1.0;
    CHECK(static_cast<double>(trace.rounds) <= cap);
}

TEST_CASE("statistical harness: locally good targets found in 95% of trials") {
    // n = 1024, corruptions = n/100, t = ceil(log2(n)^2) = 100
    const NearlySortedArray arr = make_nearly_sorted(1024, 10, 77);
    const auto good = locally_good_indices(arr, 0.25);
    REQUIRE(!good.empty());
    std::size_t found = 0;
    const std::size_t trials = 200;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng pick(Rng::mix(4242, t));
        const std::size_t i = good[pick.below(good.size())];
        Rng rng(Rng::mix(999, t));
        const auto idx = noisy_search(arr, arr.values[i], 100, rng);
        if (idx && *idx == i) ++found;
    }
    CHECK(static_cast<double>(found) >= 0.95 * static_cast<double>(trials));
}
