#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "insdel/rng.hpp"

namespace insdel {

using Symbol = std::uint32_t;
using SymbolOrBottom = std::optional<Symbol>;

struct OuterCodeSpec {
    std::size_t k = 0;           // message symbols
    std::size_t m = 0;           // codeword symbols
    std::size_t sigma_bits = 1;  // bits per symbol
    std::size_t locality = 0;    // queries per decode
    double delta_out = 0.0;      // tolerated symbol-corruption fraction
    double epsilon_out = 0.0;    // advantage over 1/2
};

// Query interface handed to the outer decoder; answers are symbols or bottom.
// Bottom answers are absorbed by the decoder's random-guess policy.
using OuterOracle = std::function<SymbolOrBottom(std::size_t)>;

struct OuterQueryTrace {
    std::vector<std::size_t> queried_positions;
};

// Outer code with a local message decoder and a local codeword corrector.
class OuterCode {
  public:
    virtual ~OuterCode() = default;
    virtual const OuterCodeSpec& spec() const = 0;
    virtual std::vector<Symbol> encode(const std::vector<Symbol>& message) const = 0;

    // Recovers message symbol i in [1, k] with exactly `locality` queries.
    virtual Symbol decode_message(std::size_t i, const OuterOracle& oracle, Rng& rng,
                                  OuterQueryTrace* trace = nullptr) const = 0;

    // Recovers codeword symbol q in [1, m] with exactly `locality` queries.
    virtual Symbol correct_symbol(std::size_t q, const OuterOracle& oracle, Rng& rng,
                                  OuterQueryTrace* trace = nullptr) const = 0;
};

// Binary Hadamard code: position indexed by a in {0,1}^k carries <x, a> mod 2.
// Two queries per decode; a bottom answer degrades to a uniform random bit.
class HadamardCode final : public OuterCode {
  public:
    HadamardCode(std::size_t k, double delta_out);

    const OuterCodeSpec& spec() const override { return spec_; }
    std::vector<Symbol> encode(const std::vector<Symbol>& message) const override;
    Symbol decode_message(std::size_t i, const OuterOracle& oracle, Rng& rng,
                          OuterQueryTrace* trace) const override;
    Symbol correct_symbol(std::size_t q, const OuterOracle& oracle, Rng& rng,
                          OuterQueryTrace* trace) const override;

  private:
    Symbol two_point_decode(std::size_t mask, const OuterOracle& oracle, Rng& rng,
                            OuterQueryTrace* trace) const;
    OuterCodeSpec spec_;
};

// Factory keyed by the configuration name (`outer = hadamard`).
std::unique_ptr<OuterCode> make_outer_code(const std::string& name, std::size_t k,
                                           double delta_out);

}  // namespace insdel
