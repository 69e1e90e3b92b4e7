#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace insdel {

// Raw configuration, prior to derivation. Unset fields take defaults; a field
// that is explicitly set counts as an override (this matters for alpha, see
// derive_params).
struct ParamOptions {
    std::optional<double> delta_in;
    std::optional<double> delta_out;
    std::optional<double> gamma;
    std::optional<double> theta;
    std::optional<double> delta_b;
    std::optional<double> alpha;
    std::optional<std::size_t> beta_in;   // declared inner expansion (build cap)
    std::optional<std::size_t> sigma_bits;
    std::optional<std::size_t> k;
    std::optional<std::size_t> m;          // default: 2^k (binary Hadamard geometry)
    std::optional<std::size_t> tau;        // default: log2(m)
    std::optional<std::size_t> eta;
    std::optional<double> n_mult;
    std::optional<double> eps_fail;
    std::optional<std::size_t> buffer_window;
    std::optional<std::size_t> lcc_buffer_width;
    std::optional<std::uint64_t> seed;
    std::string outer = "hadamard";
};

ParamOptions read_param_file(std::istream& is);
ParamOptions read_param_file(const std::string& path);

// Every derived constant of the construction, with the constraint set
// verified at derivation time.
struct CodeParams {
    // inputs
    double delta_in = 0.05;
    double delta_out = 0.125;
    double gamma = 1.0 / 12.0;
    double theta = 1.0 / 51.0;
    double delta_b = 1.0 / 6.0;
    double alpha = 0.0;
    std::size_t sigma_bits = 1;
    std::size_t k = 4;
    std::uint64_t seed = 1;

    // geometry
    std::size_t m = 16;           // outer codeword length (symbols)
    std::size_t tau = 4;          // symbols per block
    std::size_t d = 4;            // block count
    std::size_t index_bits = 4;   // width of the block-id field in the inner message
    std::size_t msg_bits = 8;     // inner message length t
    std::size_t beta_in = 3;      // inner expansion (codeword = beta_in * msg_bits)
    std::size_t n_in = 24;        // inner codeword length
    std::size_t buffer_len = 3;   // zeros on each side of a block
    std::size_t block_len = 30;   // buffer + inner codeword + buffer
    std::size_t n = 120;          // full codeword length

    // derived constants
    double beta = 7.5;            // block_len / tau, exact
    double delta = 0.0;           // insdel budget fraction
    double rho = 0.0;             // search shrink factor
    double base_case_width = 0.0; // interval width below which search scans
    std::size_t eta = 9;          // buffer-search ball radius, in tau units
    double eps_fail = 1e-6;
    double n_mult = 1.0;
    std::size_t buffer_window = 3;
    std::size_t lcc_buffer_width = 3;

    // constraints that were violated but tolerated due to an explicit alpha
    // override; empty when every inequality holds.
    std::vector<std::string> waived_constraints;

    std::size_t decode_radius_num() const;     // floor(2 * delta_in * n_in)
    double decode_radius() const { return 2.0 * delta_in * static_cast<double>(n_in); }
    double min_distance_required() const {
        return 4.0 * delta_in * static_cast<double>(n_in);
    }
    std::size_t channel_budget() const;        // floor(2 * n * delta)
    std::size_t channel_budget(double delta_override) const;
    std::size_t sample_count(std::size_t n_prime) const;
    std::size_t buffer_weight_threshold() const;  // floor(delta_b * buffer_len / 2)

    // positions (1-based, relative to a block) covered by the leading or
    // trailing buffer of width `w`
    bool in_buffer_region(std::size_t offset_in_block, std::size_t w) const {
        return offset_in_block <= w || offset_in_block > block_len - w;
    }
};

// Derives every constant and verifies the constraint set. Constraints that
// involve alpha are hard errors when alpha is left at its formula default,
// and recorded (waived) when alpha was set explicitly: the formula value
// alpha = 2*gamma*delta_in/(gamma+6) produces sub-bit buffers at small m, so
// desk-scale configurations must inflate it deliberately.
CodeParams derive_params(const ParamOptions& opts, std::size_t achieved_beta_in = 0);

void write_param_file(std::ostream& os, const ParamOptions& opts);

}  // namespace insdel
