#include "insdel/encoder.hpp"

#include <stdexcept>

#include "insdel/errors.hpp"

namespace insdel {

BitString block_index_pad(const CodeParams& params, std::size_t block) {
    if (block < 1 || block > params.d) throw std::out_of_range("block id out of [1, d]");
    return bits_from_value(block - 1, params.index_bits);
}

BitString inner_message(const CodeParams& params, std::size_t block,
                        const std::vector<Symbol>& symbols) {
    if (symbols.size() != params.tau)
        throw std::invalid_argument("block carries " + std::to_string(symbols.size()) +
                                    " symbols, expected tau = " + std::to_string(params.tau));
    BitString msg = block_index_pad(params, block);
    for (Symbol s : symbols) {
        for (std::size_t b = 0; b < params.sigma_bits; ++b)
            msg.push_back((s >> (params.sigma_bits - 1 - b)) & 1);
    }
    return msg;
}

ParsedInnerMessage parse_inner_message(const CodeParams& params, const BitString& msg) {
    if (msg.size() != params.msg_bits)
        throw std::invalid_argument("inner message has length " + std::to_string(msg.size()) +
                                    ", expected " + std::to_string(params.msg_bits));
    ParsedInnerMessage parsed;
    parsed.block = value_from_bits(msg.slice({1, params.index_bits + 1})) + 1;
    parsed.symbols.reserve(params.tau);
    for (std::size_t s = 0; s < params.tau; ++s) {
        const std::size_t lo = params.index_bits + s * params.sigma_bits + 1;
        parsed.symbols.push_back(static_cast<Symbol>(
            value_from_bits(msg.slice({lo, lo + params.sigma_bits}))));
    }
    return parsed;
}

std::vector<Symbol> block_symbols(const CodeParams& params,
                                  const std::vector<Symbol>& outer_codeword,
                                  std::size_t block) {
    std::vector<Symbol> out(params.tau);
    for (std::size_t s = 0; s < params.tau; ++s)
        out[s] = outer_codeword[(block - 1) * params.tau + s];
    return out;
}

void check_compatibility(const CodeParams& params, const InnerCodebook& cb,
                         const OuterCode& outer) {
    if (cb.t != params.msg_bits)
        throw ConfigError("codebook message width " + std::to_string(cb.t) +
                          " != params.msg_bits " + std::to_string(params.msg_bits));
    if (cb.n_in != params.n_in)
        throw ConfigError("codebook codeword length " + std::to_string(cb.n_in) +
                          " != params.n_in " + std::to_string(params.n_in));
    if (static_cast<double>(cb.min_pairwise_ed) <= params.min_distance_required())
        throw ConfigError("codebook min distance below 4*delta_in*n_in for these params");
    const OuterCodeSpec& os = outer.spec();
    if (os.k != params.k || os.m != params.m || os.sigma_bits != params.sigma_bits)
        throw ConfigError("outer code geometry does not match params");
}

BitString buffered_block(const CodeParams& params, std::size_t block,
                         const std::vector<Symbol>& outer_codeword,
                         const InnerCodebook& cb) {
    const BitString inner =
        cb.encode(inner_message(params, block, block_symbols(params, outer_codeword, block)));
    BitString out = BitString::zeros(params.buffer_len);
    out.append(inner);
    out.append(BitString::zeros(params.buffer_len));
    return out;
}

BitString encode(const CodeParams& params, const std::vector<Symbol>& message,
                 const InnerCodebook& cb, const OuterCode& outer) {
    check_compatibility(params, cb, outer);
    if (message.size() != params.k)
        throw std::invalid_argument("message has length " + std::to_string(message.size()) +
                                    ", expected k = " + std::to_string(params.k));
    const std::vector<Symbol> s = outer.encode(message);
    BitString cw;
    for (std::size_t block = 1; block <= params.d; ++block)
        cw.append(buffered_block(params, block, s, cb));
    return cw;
}

}  // namespace insdel
