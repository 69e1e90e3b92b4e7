#include "insdel/inner_code.hpp"

#include <set>
#include <sstream>

#include "doctest.h"
#include "insdel/errors.hpp"
#include "insdel/rng.hpp"

using namespace insdel;

namespace {

// Exhaustive pairwise audit with the plain quadratic distance.
std::size_t audit_min_pairwise(const InnerCodebook& cb) {
    std::size_t best = SIZE_MAX;
    for (std::size_t a = 0; a < cb.size(); ++a)
        for (std::size_t b = a + 1; b < cb.size(); ++b)
            best = std::min(best, edit_distance(cb.table[a], cb.table[b]));
    return best;
}

// Exhaustive nearest-codeword scan, independent of InnerCodebook::decode.
std::optional<std::size_t> nearest_oracle(const InnerCodebook& cb, const BitString& word) {
    std::size_t best = SIZE_MAX, best_msg = 0, ties = 0;
    for (std::size_t msg = 0; msg < cb.size(); ++msg) {
        const std::size_t ed = edit_distance(word, cb.table[msg]);
        if (ed < best) {
            best = ed;
            best_msg = msg;
            ties = 1;
        } else if (ed == best) {
            ++ties;
        }
    }
    if (ties != 1 || static_cast<double>(best) > cb.decode_radius() + 1e-9)
        return std::nullopt;
    return best_msg;
}

void enumerate_scripts(const BitString& base, std::size_t remaining_ops,
                       const EditScript& prefix, const auto& visit) {
    visit(prefix);
    if (remaining_ops == 0) return;
    const BitString cur = apply_edit_script(base, prefix);
    for (std::size_t p = 1; p <= cur.size() + 1; ++p) {
        for (bool bit : {false, true}) {
            EditScript next = prefix;
            next.push_back({EditOp::Kind::Insert, p, bit, 0});
            enumerate_scripts(base, remaining_ops - 1, next, visit);
        }
    }
    for (std::size_t p = 1; p <= cur.size(); ++p) {
        EditScript next = prefix;
        next.push_back({EditOp::Kind::Delete, p, false, 0});
        enumerate_scripts(base, remaining_ops - 1, next, visit);
    }
}

EditScript random_script(Rng& rng, std::size_t base_len, std::size_t ops) {
    EditScript script;
    std::size_t len = base_len;
    for (std::size_t o = 0; o < ops; ++o) {
        if (len == 0 || rng.bit()) {
            script.push_back({EditOp::Kind::Insert, 1 + rng.below(len + 1), rng.bit(), 0});
            ++len;
        } else {
            script.push_back({EditOp::Kind::Delete, 1 + rng.below(len), false, 0});
            --len;
        }
    }
    return script;
}

}  // namespace

TEST_CASE("t=2 build: greedy result passes the exhaustive pairwise audit") {
    const InnerCodebook cb = build_codebook(2, 0.05, 6, 7);
    CHECK(cb.size() == 4);
    CHECK(cb.n_in % 2 == 0);
    const std::size_t dmin = audit_min_pairwise(cb);
    CHECK(dmin == cb.min_pairwise_ed);
    CHECK(static_cast<double>(dmin) > 4.0 * 0.05 * static_cast<double>(cb.n_in));
    CHECK_NOTHROW(verify_codebook(cb));
}

TEST_CASE("t=8 build: full pairwise audit and density certificate") {
    const InnerCodebook cb = build_codebook(8, 0.05, 6, 11);
    CHECK(cb.size() == 256);
    CHECK(audit_min_pairwise(cb) == cb.min_pairwise_ed);
    CHECK(static_cast<double>(cb.min_pairwise_ed) >
          4.0 * 0.05 * static_cast<double>(cb.n_in));
    // density: every window of 2*ceil(log2 t) bits, exhaustively
    CHECK(cb.density_window == 6);
    for (const BitString& cw : cb.table) {
        for (std::size_t lo = 1; lo + cb.density_window <= cw.size() + 1; ++lo) {
            const std::size_t w =
                hamming_weight(cw, {lo, lo + cb.density_window});
            CHECK(5 * w >= 2 * cb.density_window);
        }
        // construction extras: pinned edges, interior zero-runs capped at 2
        CHECK(cw.bit(1));
        CHECK(cw.bit(cw.size()));
    }
}

TEST_CASE("encode is a table lookup; wrong length throws") {
    const InnerCodebook cb = build_codebook(4, 0.05, 6, 3);
    const BitString msg = bits_from_value(9, 4);
    CHECK(cb.encode(msg) == cb.table[9]);
    CHECK(cb.decode(cb.encode(msg)) == msg);
    CHECK_THROWS_AS(cb.encode(BitString::parse("01")), std::invalid_argument);
}

TEST_CASE("decode: exact codewords, far words, and the all-ones rejection") {
    const InnerCodebook cb = build_codebook(8, 0.05, 6, 11);
    for (std::size_t msg = 0; msg < cb.size(); msg += 17)
        CHECK(cb.decode(cb.table[msg]) == bits_from_value(msg, 8));

    // all-ones is far from every codeword: confirm with the exhaustive scan
    const BitString ones(cb.n_in + 5, true);
    CHECK(nearest_oracle(cb, ones) == std::nullopt);
    CHECK(cb.decode(ones) == std::nullopt);

    // one deletion stays within the radius here (2*delta_in*n_in = 2.4)
    REQUIRE(cb.decode_radius() >= 2.0);
    for (std::size_t msg = 0; msg < cb.size(); msg += 31) {
        BitString word = apply_edit_script(cb.table[msg], {{EditOp::Kind::Delete, 5, false, 0}});
        CHECK(cb.decode(word) == bits_from_value(msg, 8));
    }
}

TEST_CASE("unique decoding radius: exhaustive for t = 2 and t = 4") {
    for (std::size_t t : {std::size_t{2}, std::size_t{4}}) {
        const InnerCodebook cb = build_codebook(t, 0.05, 6, 7);
        const std::size_t max_ops =
            static_cast<std::size_t>(cb.decode_radius());  // floor
        for (std::size_t msg = 0; msg < cb.size(); ++msg) {
            enumerate_scripts(cb.table[msg], max_ops, {}, [&](const EditScript& script) {
                const BitString word = apply_edit_script(cb.table[msg], script);
                const auto decoded = cb.decode(word);
                REQUIRE(decoded.has_value());
                REQUIRE(value_from_bits(*decoded) == msg);
            });
        }
    }
}

TEST_CASE("unique decoding radius: 10^4 random scripts at t = 8") {
    const InnerCodebook cb = build_codebook(8, 0.05, 6, 11);
    const std::size_t max_ops = static_cast<std::size_t>(cb.decode_radius());
    REQUIRE(max_ops >= 1);
    Rng rng(515);
    std::size_t failures = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        const std::size_t msg = rng.below(cb.size());
        const EditScript script = random_script(rng, cb.n_in, 1 + rng.below(max_ops));
        const BitString word = apply_edit_script(cb.table[msg], script);
        const auto decoded = cb.decode(word);
        if (!decoded || value_from_bits(*decoded) != msg) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("determinism: identical inputs give bit-identical codebooks") {
    const InnerCodebook a = build_codebook(6, 0.05, 6, 99);
    const InnerCodebook b = build_codebook(6, 0.05, 6, 99);
    CHECK(a.n_in == b.n_in);
    CHECK(a.table == b.table);
    const InnerCodebook c = build_codebook(6, 0.05, 6, 100);
    CHECK(c.table != a.table);  // different stream, different greedy path
}

TEST_CASE("construction failure reports the achieved count") {
    try {
        build_codebook(8, 0.24, 2, 5);  // distance floor ~0.96*n_in is unreachable
        FAIL("expected CapacityError");
    } catch (const CapacityError& e) {
        CHECK(e.achieved_count < 256);
    }
}

TEST_CASE("cache file round trip re-verifies invariants") {
    const InnerCodebook cb = build_codebook(4, 0.05, 6, 21);
    std::ostringstream os;
    save_codebook(os, cb);
    const std::string text = os.str();
    CHECK(text.rfind("t=4 n=" + std::to_string(cb.n_in) + " dmin=" +
                         std::to_string(cb.min_pairwise_ed) + " seed=21",
                     0) == 0);

    std::istringstream is(text);
    const InnerCodebook back = load_codebook(is, 0.05);
    CHECK(back.table == cb.table);
    CHECK(back.min_pairwise_ed == cb.min_pairwise_ed);

    // tampered copy: recorded dmin no longer matches
    std::string bad = text;
    bad.replace(bad.find("dmin=") + 5, 1, "9");
    std::istringstream bs(bad);
    CHECK_THROWS_AS(load_codebook(bs, 0.05), ConfigError);
}
