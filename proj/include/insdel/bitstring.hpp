#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace insdel {

// Half-open index interval [lo, hi), 1-based to match block arithmetic.
struct Interval {
    std::size_t lo = 1;
    std::size_t hi = 1;

    std::size_t size() const { return hi - lo; }
    bool empty() const { return lo == hi; }
    bool contains(std::size_t i) const { return lo <= i && i < hi; }
    bool operator==(const Interval&) const = default;
};

// Finite bit sequence. Positions are 1-based throughout the public API;
// one byte per bit keeps the edit-distance inner loops branch-light.
class BitString {
  public:
    BitString() = default;
    explicit BitString(std::size_t n, bool value = false) : bits_(n, value ? 1 : 0) {}

    static BitString parse(const std::string& zeros_and_ones);
    static BitString zeros(std::size_t n) { return BitString(n, false); }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    // 1-based access; no bounds check on get for inner-loop speed.
    bool bit(std::size_t pos) const { return bits_[pos - 1] != 0; }
    void set_bit(std::size_t pos, bool v) { bits_[pos - 1] = v ? 1 : 0; }

    void push_back(bool v) { bits_.push_back(v ? 1 : 0); }
    void append(const BitString& other) {
        bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
    }

    BitString slice(Interval window) const;

    const std::vector<std::uint8_t>& raw() const { return bits_; }

    std::string str() const;

    bool operator==(const BitString&) const = default;

    friend BitString operator+(const BitString& a, const BitString& b) {
        BitString r = a;
        r.append(b);
        return r;
    }

  private:
    std::vector<std::uint8_t> bits_;
};

// Big-endian value <-> fixed-width bit string helpers.
BitString bits_from_value(std::uint64_t value, std::size_t width);
std::uint64_t value_from_bits(const BitString& s);

// One insertion or deletion, interpreted sequentially; positions are valid
// at the moment the operation is applied. `block` is an attribution tag
// (1-based block id, 0 when untagged).
struct EditOp {
    enum class Kind { Insert, Delete };
    Kind kind = Kind::Delete;
    std::size_t pos = 1;
    bool bit = false;
    std::size_t block = 0;
};

using EditScript = std::vector<EditOp>;

// --- operations ---------------------------------------------------------

// Insertion/deletion edit distance: ED(x,y) = |x| + |y| - 2 LCS(x,y).
std::size_t edit_distance(const BitString& x, const BitString& y);

// Banded variant: exact when ED <= bound, otherwise returns bound + 1.
std::size_t edit_distance_bounded(const BitString& x, const BitString& y, std::size_t bound);

// Number of 1-bits of x inside `window`; throws std::out_of_range when the
// window is not contained in [1, |x|+1).
std::size_t hamming_weight(const BitString& x, Interval window);
std::size_t hamming_weight(const BitString& x);

BitString apply_edit_script(const BitString& x, const EditScript& script);

// --- serialization ------------------------------------------------------

// Bit strings: one ASCII line of '0'/'1', newline-terminated.
void write_bitstring(std::ostream& os, const BitString& s);
BitString read_bitstring(std::istream& is);

// Edit scripts: one op per line, `I <pos> <bit>` or `D <pos>`, with an
// optional ` # block=<j>` suffix.
void write_edit_script(std::ostream& os, const EditScript& script);
EditScript read_edit_script(std::istream& is);

}  // namespace insdel
