#include "insdel/params.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "insdel/errors.hpp"

namespace insdel {
namespace {

constexpr double kEps = 1e-12;

std::size_t bits_needed(std::size_t max_value) {
    std::size_t bits = 1;
    while ((std::size_t{1} << bits) <= max_value) ++bits;
    return max_value == 0 ? 1 : bits;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    std::size_t b = s.find_last_not_of(" \t\r");
    if (a == std::string::npos) return "";
    return s.substr(a, b - a + 1);
}

}  // namespace

ParamOptions read_param_file(std::istream& is) {
    ParamOptions opts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("parameter line " + std::to_string(lineno) +
                              " is not `key = value`: " + line);
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "delta_in")
                opts.delta_in = std::stod(val);
            else if (key == "delta_out")
                opts.delta_out = std::stod(val);
            else if (key == "gamma")
                opts.gamma = std::stod(val);
            else if (key == "theta")
                opts.theta = std::stod(val);
            else if (key == "delta_b")
                opts.delta_b = std::stod(val);
            else if (key == "alpha")
                opts.alpha = std::stod(val);
            else if (key == "beta_in")
                opts.beta_in = std::stoull(val);
            else if (key == "sigma_bits")
                opts.sigma_bits = std::stoull(val);
            else if (key == "k")
                opts.k = std::stoull(val);
            else if (key == "m")
                opts.m = std::stoull(val);
            else if (key == "tau")
                opts.tau = std::stoull(val);
            else if (key == "eta")
                opts.eta = std::stoull(val);
            else if (key == "N_mult")
                opts.n_mult = std::stod(val);
            else if (key == "eps_fail")
                opts.eps_fail = std::stod(val);
            else if (key == "buffer_window")
                opts.buffer_window = std::stoull(val);
            else if (key == "lcc_buffer_width")
                opts.lcc_buffer_width = std::stoull(val);
            else if (key == "seed")
                opts.seed = std::stoull(val);
            else if (key == "outer")
                opts.outer = val;
            else
                throw ConfigError("unknown parameter key: " + key);
        } catch (const std::invalid_argument&) {
            throw ConfigError("bad value for " + key + ": " + val);
        }
    }
    return opts;
}

ParamOptions read_param_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open parameter file: " + path);
    return read_param_file(is);
}

void write_param_file(std::ostream& os, const ParamOptions& opts) {
    auto put = [&os](const char* key, auto opt) {
        if (opt) os << key << " = " << *opt << '\n';
    };
    put("delta_in", opts.delta_in);
    put("delta_out", opts.delta_out);
    put("gamma", opts.gamma);
    put("theta", opts.theta);
    put("delta_b", opts.delta_b);
    put("alpha", opts.alpha);
    put("beta_in", opts.beta_in);
    put("sigma_bits", opts.sigma_bits);
    put("k", opts.k);
    put("m", opts.m);
    put("tau", opts.tau);
    put("eta", opts.eta);
    put("N_mult", opts.n_mult);
    put("eps_fail", opts.eps_fail);
    put("buffer_window", opts.buffer_window);
    put("lcc_buffer_width", opts.lcc_buffer_width);
    put("seed", opts.seed);
    os << "outer = " << opts.outer << '\n';
}

std::size_t CodeParams::decode_radius_num() const {
    return static_cast<std::size_t>(std::floor(decode_radius() + kEps));
}

std::size_t CodeParams::channel_budget() const { return channel_budget(delta); }

std::size_t CodeParams::channel_budget(double delta_override) const {
    return static_cast<std::size_t>(
        std::floor(2.0 * static_cast<double>(n) * delta_override + kEps));
}

std::size_t CodeParams::sample_count(std::size_t n_prime) const {
    const double floor_term = 36.0 * std::ceil(std::log(1.0 / eps_fail) - kEps);
    const double lg = std::log2(static_cast<double>(std::max<std::size_t>(n_prime, 2)));
    const double poly_term = n_mult * std::ceil(lg * lg - kEps);
    return static_cast<std::size_t>(std::max(1.0, std::max(floor_term, poly_term)));
}

std::size_t CodeParams::buffer_weight_threshold() const {
    return static_cast<std::size_t>(
        std::floor(delta_b * static_cast<double>(buffer_len) / 2.0 + kEps));
}

CodeParams derive_params(const ParamOptions& opts, std::size_t achieved_beta_in) {
    CodeParams p;
    p.delta_in = opts.delta_in.value_or(p.delta_in);
    p.delta_out = opts.delta_out.value_or(p.delta_out);
    p.gamma = opts.gamma.value_or(p.gamma);
    p.theta = opts.theta.value_or(p.theta);
    p.delta_b = opts.delta_b.value_or(p.delta_b);
    p.sigma_bits = opts.sigma_bits.value_or(p.sigma_bits);
    p.k = opts.k.value_or(p.k);
    p.seed = opts.seed.value_or(p.seed);
    p.eps_fail = opts.eps_fail.value_or(p.eps_fail);
    p.n_mult = opts.n_mult.value_or(p.n_mult);

    if (p.delta_in <= 0.0 || p.delta_in >= 0.5)
        throw ParamError("constraint violated: 0 < delta_in < 1/2");
    if (p.delta_out <= 0.0 || p.delta_out >= 0.25)
        throw ParamError("constraint violated: 0 < delta_out < 1/4 (Hadamard advantage)");
    if (p.gamma <= 0.0 || p.gamma > 1.0 / 12.0 + kEps)
        throw ParamError("constraint violated: 0 < gamma <= 1/12");
    if (p.theta <= 0.0 || p.theta >= 1.0 / 50.0)
        throw ParamError("constraint violated: 0 < theta < 1/50");
    if (!(p.gamma < p.delta_b && p.delta_b < 0.5))
        throw ParamError("constraint violated: gamma < delta_b < 1/2");
    if (p.sigma_bits < 1) throw ParamError("sigma_bits must be a positive integer");

    const bool alpha_overridden = opts.alpha.has_value();
    p.alpha = alpha_overridden ? *opts.alpha
                               : 2.0 * p.gamma * p.delta_in / (p.gamma + 6.0);
    if (p.alpha <= 0.0 || p.alpha >= 1.0)
        throw ParamError("constraint violated: 0 < alpha < 1");

    // geometry
    p.m = opts.m.value_or(std::size_t{1} << p.k);
    const double log2m = std::log2(static_cast<double>(p.m));
    if (std::abs(log2m - std::round(log2m)) > kEps)
        throw GeometryError("m = " + std::to_string(p.m) + " is not a power of two");
    p.tau = opts.tau.value_or(static_cast<std::size_t>(std::round(log2m)));
    if (p.tau < 2) throw GeometryError("tau must be at least 2");
    if (p.m % p.tau != 0)
        throw GeometryError("tau = " + std::to_string(p.tau) + " does not divide m = " +
                            std::to_string(p.m));
    p.d = p.m / p.tau;
    p.index_bits = std::max(p.tau, bits_needed(p.d - 1));
    p.msg_bits = p.index_bits + p.sigma_bits * p.tau;
    if (p.msg_bits > 20)
        throw GeometryError("inner message width " + std::to_string(p.msg_bits) +
                            " exceeds the exhaustive-codebook range");

    p.beta_in = achieved_beta_in != 0 ? achieved_beta_in : opts.beta_in.value_or(3);
    if (p.beta_in < 1) throw ParamError("beta_in must be >= 1");
    p.n_in = p.beta_in * p.msg_bits;
    p.buffer_len = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(p.alpha * static_cast<double>(p.tau) - kEps)));
    p.block_len = 2 * p.buffer_len + p.n_in;
    p.n = p.d * p.block_len;
    p.beta = static_cast<double>(p.block_len) / static_cast<double>(p.tau);

    // constraint set; alpha-driven inequalities degrade to recorded waivers
    // under an explicit override (sub-bit buffers are not realizable).
    auto check = [&](bool ok, const std::string& name, bool alpha_scaled) {
        if (ok) return;
        if (alpha_scaled && alpha_overridden) {
            p.waived_constraints.push_back(name);
            return;
        }
        throw ParamError("constraint violated: " + name);
    };
    check((p.beta + p.gamma) / (p.beta - p.gamma) < 4.0 / 3.0,
          "(beta+gamma)/(beta-gamma) < 4/3", false);
    check(p.alpha <= 2.0 * p.gamma / (p.gamma + 6.0) + kEps,
          "alpha <= 2*gamma/(gamma+6)", true);
    check(p.alpha * (1.0 + 3.0 * p.gamma) / (p.beta - 2.0 * p.alpha) < p.delta_in,
          "alpha*(1+3*gamma)/(beta-2*alpha) < delta_in", true);
    check((5.0 * p.delta_b + 3.0 * p.gamma) * p.alpha / (p.beta - 2.0 * p.alpha) <=
              p.delta_in + kEps,
          "(5*delta_b+3*gamma)*alpha/(beta-2*alpha) <= delta_in", true);

    p.rho = std::min(0.25 * (p.beta - p.gamma) / (p.beta + p.gamma),
                     1.0 - 0.75 * (p.beta + p.gamma) / (p.beta - p.gamma));
    if (p.rho <= 0.0) throw ParamError("constraint violated: rho > 0");

    p.delta = p.delta_out * p.alpha * p.gamma / (2.0 * p.beta * (1.0 + 1.0 / p.theta));
    p.base_case_width = 36.0 * (p.beta + p.gamma) * static_cast<double>(p.tau);
    p.eta = opts.eta.value_or(static_cast<std::size_t>(std::ceil(p.beta - kEps)) + 1);
    p.buffer_window = opts.buffer_window.value_or(p.buffer_len);
    if (p.buffer_window < 1 || p.buffer_window > p.n)
        throw ParamError("buffer_window out of range");
    p.lcc_buffer_width = opts.lcc_buffer_width.value_or(p.buffer_len);
    if (p.lcc_buffer_width * 2 > p.block_len)
        throw ParamError("lcc_buffer_width exceeds half a block");
    return p;
}

}  // namespace insdel
