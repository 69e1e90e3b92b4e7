#include "insdel/outer_code.hpp"

#include <bit>
#include <stdexcept>

#include "insdel/errors.hpp"

namespace insdel {

HadamardCode::HadamardCode(std::size_t k, double delta_out) {
    if (k < 1 || k > 16) throw ConfigError("hadamard k out of range [1, 16]");
    if (delta_out <= 0.0 || delta_out >= 0.25)
        throw ParamError("constraint violated: 0 < delta_out < 1/4 (Hadamard advantage)");
    spec_.k = k;
    spec_.m = std::size_t{1} << k;
    spec_.sigma_bits = 1;
    spec_.locality = 2;
    spec_.delta_out = delta_out;
    spec_.epsilon_out = 0.5 - 2.0 * delta_out;
}

std::vector<Symbol> HadamardCode::encode(const std::vector<Symbol>& message) const {
    if (message.size() != spec_.k)
        throw std::invalid_argument("hadamard message has length " +
                                    std::to_string(message.size()) + ", expected " +
                                    std::to_string(spec_.k));
    // Message bit i pairs with selector bit i, big-endian over k bits.
    std::size_t x = 0;
    for (std::size_t i = 0; i < spec_.k; ++i) {
        if (message[i] > 1) throw std::invalid_argument("hadamard symbols are bits");
        x = (x << 1) | message[i];
    }
    std::vector<Symbol> cw(spec_.m);
    for (std::size_t a = 0; a < spec_.m; ++a)
        cw[a] = static_cast<Symbol>(std::popcount(x & a) & 1);
    return cw;
}

Symbol HadamardCode::two_point_decode(std::size_t mask, const OuterOracle& oracle, Rng& rng,
                                      OuterQueryTrace* trace) const {
    const std::size_t a = rng.below(spec_.m);
    const std::size_t b = a ^ mask;
    const std::size_t q1 = a + 1;
    const std::size_t q2 = b + 1;
    if (trace) {
        trace->queried_positions.push_back(q1);
        trace->queried_positions.push_back(q2);
    }
    const SymbolOrBottom v1 = oracle(q1);
    const SymbolOrBottom v2 = oracle(q2);
    if (!v1 || !v2) return rng.bit() ? 1 : 0;
    return (*v1 ^ *v2) & 1;
}

Symbol HadamardCode::decode_message(std::size_t i, const OuterOracle& oracle, Rng& rng,
                                    OuterQueryTrace* trace) const {
    if (i < 1 || i > spec_.k) throw std::out_of_range("message index out of [1, k]");
    // x_i = <x, e_i>; sample a and XOR positions a, a ^ e_i.
    const std::size_t mask = std::size_t{1} << (spec_.k - i);
    return two_point_decode(mask, oracle, rng, trace);
}

Symbol HadamardCode::correct_symbol(std::size_t q, const OuterOracle& oracle, Rng& rng,
                                    OuterQueryTrace* trace) const {
    if (q < 1 || q > spec_.m) throw std::out_of_range("codeword index out of [1, m]");
    // <x, a_q> = <x, a_q ^ r> xor <x, r>; mask 0 still issues both queries.
    return two_point_decode(q - 1, oracle, rng, trace);
}

std::unique_ptr<OuterCode> make_outer_code(const std::string& name, std::size_t k,
                                           double delta_out) {
    if (name == "hadamard") return std::make_unique<HadamardCode>(k, delta_out);
    throw ConfigError("unknown outer code: " + name);
}

}  // namespace insdel
