#include "insdel/bitstring.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "insdel/errors.hpp"

namespace insdel {

BitString BitString::parse(const std::string& zeros_and_ones) {
    BitString s;
    s.bits_.reserve(zeros_and_ones.size());
    for (char c : zeros_and_ones) {
        if (c == '0')
            s.bits_.push_back(0);
        else if (c == '1')
            s.bits_.push_back(1);
        else
            throw std::invalid_argument("bit string may contain only '0'/'1', got '" +
                                        std::string(1, c) + "'");
    }
    return s;
}

BitString BitString::slice(Interval window) const {
    if (window.lo < 1 || window.hi > size() + 1 || window.lo > window.hi)
        throw std::out_of_range("slice window [" + std::to_string(window.lo) + "," +
                                std::to_string(window.hi) + ") outside [1," +
                                std::to_string(size() + 1) + ")");
    BitString r;
    r.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(window.lo - 1),
                   bits_.begin() + static_cast<std::ptrdiff_t>(window.hi - 1));
    return r;
}

std::string BitString::str() const {
    std::string s(size(), '0');
    for (std::size_t i = 0; i < size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

BitString bits_from_value(std::uint64_t value, std::size_t width) {
    BitString s(width);
    for (std::size_t i = 0; i < width; ++i)
        s.set_bit(width - i, (value >> i) & 1);
    return s;
}

std::uint64_t value_from_bits(const BitString& s) {
    std::uint64_t v = 0;
    for (std::size_t i = 1; i <= s.size(); ++i) v = (v << 1) | (s.bit(i) ? 1 : 0);
    return v;
}

std::size_t edit_distance(const BitString& x, const BitString& y) {
    // Two-row LCS table; distance = |x| + |y| - 2 LCS.
    const auto& a = x.raw();
    const auto& b = y.raw();
    const std::size_t n = a.size(), m = b.size();
    if (n == 0) return m;
    if (m == 0) return n;
    std::vector<std::size_t> prev(m + 1, 0), cur(m + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            if (a[i - 1] == b[j - 1])
                cur[j] = prev[j - 1] + 1;
            else
                cur[j] = std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    return n + m - 2 * prev[m];
}

std::size_t edit_distance_bounded(const BitString& x, const BitString& y, std::size_t bound) {
    const auto& a = x.raw();
    const auto& b = y.raw();
    const std::size_t n = a.size(), m = b.size();
    const std::size_t len_gap = n > m ? n - m : m - n;
    if (len_gap > bound) return bound + 1;
    if (n == 0 || m == 0) return n + m;

    // Ukkonen band on the insertion/deletion metric. Cells with |i-j| > bound
    // cannot lie on a path of cost <= bound.
    const std::size_t big = bound + 1;
    std::vector<std::size_t> prev(m + 1, big), cur(m + 1, big);
    for (std::size_t j = 0; j <= std::min(m, bound); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t jlo = i > bound ? i - bound : 0;
        const std::size_t jhi = std::min(m, i + bound);
        std::fill(cur.begin() + static_cast<std::ptrdiff_t>(jlo),
                  cur.begin() + static_cast<std::ptrdiff_t>(jhi) + 1, big);
        if (jlo == 0) cur[0] = std::min(i, big);
        for (std::size_t j = std::max<std::size_t>(jlo, 1); j <= jhi; ++j) {
            std::size_t best = big;
            if (a[i - 1] == b[j - 1]) best = prev[j - 1];
            if (prev[j] + 1 < best) best = prev[j] + 1;
            if (cur[j - 1] + 1 < best) best = cur[j - 1] + 1;
            cur[j] = std::min(best, big);
        }
        std::swap(prev, cur);
    }
    return std::min(prev[m], big);
}

std::size_t hamming_weight(const BitString& x, Interval window) {
    if (window.lo < 1 || window.hi > x.size() + 1 || window.lo > window.hi)
        throw std::out_of_range("weight window [" + std::to_string(window.lo) + "," +
                                std::to_string(window.hi) + ") outside [1," +
                                std::to_string(x.size() + 1) + ")");
    std::size_t w = 0;
    for (std::size_t i = window.lo; i < window.hi; ++i)
        if (x.bit(i)) ++w;
    return w;
}

std::size_t hamming_weight(const BitString& x) {
    return hamming_weight(x, Interval{1, x.size() + 1});
}

BitString apply_edit_script(const BitString& x, const EditScript& script) {
    std::vector<std::uint8_t> work(x.raw());
    for (std::size_t k = 0; k < script.size(); ++k) {
        const EditOp& op = script[k];
        if (op.kind == EditOp::Kind::Insert) {
            if (op.pos < 1 || op.pos > work.size() + 1)
                throw ScriptError("insert position " + std::to_string(op.pos) +
                                  " invalid for length " + std::to_string(work.size()) +
                                  " at op " + std::to_string(k + 1));
            work.insert(work.begin() + static_cast<std::ptrdiff_t>(op.pos - 1),
                        op.bit ? 1 : 0);
        } else {
            if (op.pos < 1 || op.pos > work.size())
                throw ScriptError("delete position " + std::to_string(op.pos) +
                                  " invalid for length " + std::to_string(work.size()) +
                                  " at op " + std::to_string(k + 1));
            work.erase(work.begin() + static_cast<std::ptrdiff_t>(op.pos - 1));
        }
    }
    BitString out;
    for (std::uint8_t b : work) out.push_back(b != 0);
    return out;
}

void write_bitstring(std::ostream& os, const BitString& s) { os << s.str() << '\n'; }

BitString read_bitstring(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("expected a bit-string line");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return BitString::parse(line);
}

void write_edit_script(std::ostream& os, const EditScript& script) {
    for (const EditOp& op : script) {
        if (op.kind == EditOp::Kind::Insert)
            os << "I " << op.pos << ' ' << (op.bit ? 1 : 0);
        else
            os << "D " << op.pos;
        if (op.block != 0) os << " # block=" << op.block;
        os << '\n';
    }
}

EditScript read_edit_script(std::istream& is) {
    EditScript script;
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.rfind("lengths:", 0) == 0) break;  // trial-trace footer
        std::size_t block = 0;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            const std::string tail = line.substr(hash + 1);
            const std::size_t eq = tail.find("block=");
            if (eq != std::string::npos) block = std::stoull(tail.substr(eq + 6));
            line = line.substr(0, hash);
        }
        std::istringstream ls(line);
        char kind = 0;
        ls >> kind;
        EditOp op;
        op.block = block;
        if (kind == 'I') {
            int b = 0;
            ls >> op.pos >> b;
            op.kind = EditOp::Kind::Insert;
            op.bit = b != 0;
        } else if (kind == 'D') {
            ls >> op.pos;
            op.kind = EditOp::Kind::Delete;
        } else {
            throw TraceError("unknown edit-script line: " + line);
        }
        if (!ls && kind != 'D') throw TraceError("malformed edit-script line: " + line);
        script.push_back(op);
    }
    return script;
}

}  // namespace insdel
