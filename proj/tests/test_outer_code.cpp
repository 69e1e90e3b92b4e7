#include "insdel/outer_code.hpp"

#include <bit>

#include "doctest.h"
#include "insdel/errors.hpp"

using namespace insdel;

namespace {

// Direct inner-product oracle, independent of HadamardCode::encode.
std::vector<Symbol> hadamard_oracle(const std::vector<Symbol>& x) {
    const std::size_t k = x.size();
    std::vector<Symbol> cw(std::size_t{1} << k);
    for (std::size_t a = 0; a < cw.size(); ++a) {
        Symbol acc = 0;
        for (std::size_t i = 0; i < k; ++i)
            acc ^= x[i] & ((a >> (k - 1 - i)) & 1);
        cw[a] = acc;
    }
    return cw;
}

OuterOracle exact_oracle(const std::vector<Symbol>& cw) {
    return [&cw](std::size_t q) -> SymbolOrBottom { return cw[q - 1]; };
}

}  // namespace

TEST_CASE("hadamard encoding: pinned examples and the oracle") {
    HadamardCode code(3, 0.125);
    CHECK(code.encode({0, 0, 0}) == std::vector<Symbol>{0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(code.encode({1, 0, 1}) == std::vector<Symbol>{0, 1, 0, 1, 1, 0, 1, 0});
    for (std::size_t x = 0; x < 8; ++x) {
        std::vector<Symbol> msg = {static_cast<Symbol>((x >> 2) & 1),
                                   static_cast<Symbol>((x >> 1) & 1),
                                   static_cast<Symbol>(x & 1)};
        const auto cw = code.encode(msg);
        CHECK(cw == hadamard_oracle(msg));
        CHECK(cw[0] == 0);  // position indexed by the zero vector
    }
}

TEST_CASE("hadamard linearity") {
    HadamardCode code(4, 0.125);
    for (std::size_t a = 0; a < 16; ++a) {
        for (std::size_t b = 0; b < 16; ++b) {
            std::vector<Symbol> xa(4), xb(4), xc(4);
            for (std::size_t i = 0; i < 4; ++i) {
                xa[i] = (a >> (3 - i)) & 1;
                xb[i] = (b >> (3 - i)) & 1;
                xc[i] = xa[i] ^ xb[i];
            }
            const auto ca = code.encode(xa), cb = code.encode(xb), cc = code.encode(xc);
            for (std::size_t p = 0; p < ca.size(); ++p) CHECK(cc[p] == (ca[p] ^ cb[p]));
        }
    }
}

TEST_CASE("decoder issues exactly two queries and is exact on clean words") {
    HadamardCode code(4, 0.125);
    CHECK(code.spec().locality == 2);
    Rng rng(5);
    for (std::size_t x = 0; x < 16; ++x) {
        std::vector<Symbol> msg(4);
        for (std::size_t i = 0; i < 4; ++i) msg[i] = (x >> (3 - i)) & 1;
        const auto cw = code.encode(msg);
        for (std::size_t i = 1; i <= 4; ++i) {
            OuterQueryTrace trace;
            const Symbol got = code.decode_message(i, exact_oracle(cw), rng, &trace);
            CHECK(got == msg[i - 1]);
            CHECK(trace.queried_positions.size() == 2);
        }
        for (std::size_t q = 1; q <= 16; ++q) {
            OuterQueryTrace trace;
            const Symbol got = code.correct_symbol(q, exact_oracle(cw), rng, &trace);
            CHECK(got == cw[q - 1]);
            CHECK(trace.queried_positions.size() == 2);
        }
    }
}

TEST_CASE("all-bottom oracle degrades to a fair coin") {
    HadamardCode code(3, 0.125);
    const OuterOracle bottom = [](std::size_t) -> SymbolOrBottom { return std::nullopt; };
    Rng rng(17);
    std::size_t ones = 0;
    const std::size_t trials = 4000;
    for (std::size_t t = 0; t < trials; ++t) ones += code.decode_message(1, bottom, rng);

    // exactly two queries still issued, answer is a uniform bit
    OuterQueryTrace trace;
    code.decode_message(2, bottom, rng, &trace);
    CHECK(trace.queried_positions.size() == 2);
    CHECK(ones > trials / 2 - 200);
    CHECK(ones < trials / 2 + 200);
}

TEST_CASE("exhaustive soundness at k <= 4: corruption up to delta_out*m") {
    // For every message and every corruption pattern of weight <= 2 (m = 16,
    // delta_out = 1/8), average success over all selector choices must clear
    // 1/2 + epsilon_out with epsilon_out = 1/2 - 2*delta_out = 1/4.
    const std::size_t k = 4, m = 16;
    HadamardCode code(k, 0.125);
    CHECK(code.spec().epsilon_out == doctest::Approx(0.25));
    for (std::size_t x = 0; x < 16; ++x) {
        std::vector<Symbol> msg(k);
        for (std::size_t i = 0; i < k; ++i) msg[i] = (x >> (k - 1 - i)) & 1;
        const auto clean = code.encode(msg);
        // weight-2 patterns dominate weight 0/1, so only they are enumerated
        for (std::size_t p1 = 0; p1 < m; ++p1) {
            for (std::size_t p2 = p1 + 1; p2 < m; ++p2) {
                auto cw = clean;
                cw[p1] ^= 1;
                cw[p2] ^= 1;
                for (std::size_t i = 1; i <= k; ++i) {
                    // enumerate the selector directly instead of sampling
                    const std::size_t mask = std::size_t{1} << (k - i);
                    std::size_t good = 0;
                    for (std::size_t a = 0; a < m; ++a) {
                        const Symbol v = cw[a] ^ cw[a ^ mask];
                        if (v == msg[i - 1]) ++good;
                    }
                    CHECK(static_cast<double>(good) / static_cast<double>(m) >= 0.75);
                }
            }
        }
    }
}

TEST_CASE("flipped-fraction example: success >= 1 - 2*rho") {
    const std::size_t k = 3, m = 8;
    HadamardCode code(k, 0.1);
    const std::vector<Symbol> msg = {1, 1, 0};
    const auto clean = code.encode(msg);
    for (std::size_t p1 = 0; p1 < m; ++p1) {  // rho = 1/8
        auto cw = clean;
        cw[p1] ^= 1;
        for (std::size_t i = 1; i <= k; ++i) {
            const std::size_t mask = std::size_t{1} << (k - i);
            std::size_t good = 0;
            for (std::size_t a = 0; a < m; ++a)
                if ((cw[a] ^ cw[a ^ mask]) == msg[i - 1]) ++good;
            CHECK(static_cast<double>(good) / static_cast<double>(m) >=
                  1.0 - 2.0 / static_cast<double>(m));
        }
    }
}

TEST_CASE("factory and validation") {
    CHECK_NOTHROW(make_outer_code("hadamard", 4, 0.125));
    CHECK_THROWS_AS(make_outer_code("reed-muller", 4, 0.125), ConfigError);
    CHECK_THROWS_AS(HadamardCode(4, 0.3), ParamError);  // no advantage left
    HadamardCode code(3, 0.125);
    CHECK_THROWS_AS(code.encode({1, 0}), std::invalid_argument);
    Rng rng(1);
    CHECK_THROWS_AS(code.decode_message(4, exact_oracle({}), rng), std::out_of_range);
}
