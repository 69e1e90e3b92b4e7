#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "insdel/bitstring.hpp"

namespace insdel {

// Inner insdel code held as an explicit message -> codeword table.
// Certified properties:
//   * min pairwise edit distance  > 4 * delta_in * n_in  (unique decoding
//     within radius 2 * delta_in * n_in),
//   * every window of density_window bits has fractional weight >= 2/5,
//   * codewords start and end with a 1 and contain no interior 0-run longer
//     than 2, so buffer zeros never bleed into codewords.
struct InnerCodebook {
    std::size_t t = 0;               // message bit length
    std::size_t n_in = 0;            // codeword bit length
    std::size_t density_window = 0;  // 2 * ceil(log2 t)
    std::size_t min_pairwise_ed = 0;
    std::uint64_t seed = 0;
    double delta_in = 0.0;
    std::vector<BitString> table;    // indexed by big-endian message value

    std::size_t size() const { return table.size(); }
    std::size_t beta_in() const { return n_in / t; }
    double decode_radius() const { return 2.0 * delta_in * static_cast<double>(n_in); }

    // Table lookup; throws std::invalid_argument on a wrong-length message.
    const BitString& encode(const BitString& msg) const;

    // Nearest codeword under edit distance. Returns the message when the
    // unique nearest codeword is within the decoding radius, and nullopt on
    // out-of-radius words or distance ties.
    std::optional<BitString> decode(const BitString& word) const;
};

std::size_t density_window_for(std::size_t t);
std::size_t density_min_weight(std::size_t window);

// True iff every length-`window` slice of cw has weight >= ceil(2*window/5).
bool density_holds(const BitString& cw, std::size_t window);

// Greedy fill over a seeded candidate stream, smallest integer expansion
// first. Throws CapacityError (with the achieved count) when no expansion
// up to beta_in_max fills all 2^t messages.
InnerCodebook build_codebook(std::size_t t, double delta_in, std::size_t beta_in_max,
                             std::uint64_t seed);

// Recomputes every certified property; throws on any mismatch.
void verify_codebook(const InnerCodebook& cb);

// Cache format: `t=<t> n=<n_in> dmin=<d> seed=<s>` header, then one
// `<message-bits> <codeword-bits>` line per message. Loading re-verifies.
void save_codebook(std::ostream& os, const InnerCodebook& cb);
InnerCodebook load_codebook(std::istream& is, double delta_in);
InnerCodebook load_codebook_file(const std::string& path, double delta_in);

}  // namespace insdel
