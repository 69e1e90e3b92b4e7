#pragma once

#include <vector>

#include "insdel/bitstring.hpp"
#include "insdel/inner_code.hpp"
#include "insdel/outer_code.hpp"
#include "insdel/params.hpp"

namespace insdel {

// Block-id tag stored in front of the block symbols; big-endian, 0-based so
// a block count of exactly 2^index_bits still fits.
BitString block_index_pad(const CodeParams& params, std::size_t block);

// Inner message for one block: index pad followed by tau symbols.
BitString inner_message(const CodeParams& params, std::size_t block,
                        const std::vector<Symbol>& block_symbols);

// Splits a decoded inner message back into (block id, symbols).
struct ParsedInnerMessage {
    std::size_t block = 0;
    std::vector<Symbol> symbols;
};
ParsedInnerMessage parse_inner_message(const CodeParams& params, const BitString& msg);

// Buffered concatenation: outer-encode, group tau symbols per block, inner-
// encode each block with its index, and wrap every block in zero buffers.
BitString encode(const CodeParams& params, const std::vector<Symbol>& message,
                 const InnerCodebook& cb, const OuterCode& outer);

// The uncorrupted buffered block (buffer + inner codeword + buffer).
BitString buffered_block(const CodeParams& params, std::size_t block,
                         const std::vector<Symbol>& outer_codeword,
                         const InnerCodebook& cb);

// Symbols of block `block` within an outer codeword.
std::vector<Symbol> block_symbols(const CodeParams& params,
                                  const std::vector<Symbol>& outer_codeword,
                                  std::size_t block);

void check_compatibility(const CodeParams& params, const InnerCodebook& cb,
                         const OuterCode& outer);

}  // namespace insdel
