#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "gf2.hpp"

namespace nonunital::graph6 {

using gf2::BitMatrix;

/// Decodes one graph6 line into a symmetric 0/1 adjacency matrix.
/// Supports the one-byte order (n <= 62) and the 126-prefixed 3-byte order.
inline BitMatrix parse(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw std::invalid_argument("graph6: empty input");

    std::size_t pos = 0;
    auto next = [&]() -> unsigned {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
        char ch = s[pos++];
        if (ch < 63 || ch > 126) throw std::invalid_argument("graph6: byte out of range");
        return unsigned(ch) - 63;
    };

    std::size_t n;
    unsigned first = next();
    if (first < 63) {
        n = first;
    } else {
        // 126 prefix: next three bytes hold an 18-bit order
        unsigned b1 = next();
        if (b1 == 63) throw std::invalid_argument("graph6: 8-byte orders not supported");
        n = (std::size_t(b1) << 12) | (std::size_t(next()) << 6) | next();
    }

    BitMatrix a(n, n);
    unsigned buf = 0;
    int avail = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (avail == 0) {
                buf = next();
                avail = 6;
            }
            bool bit = (buf >> (avail - 1)) & 1u;
            --avail;
            if (bit) {
                a.set(i, j, true);
                a.set(j, i, true);
            }
        }
    }
    // any leftover pad bits must be zero
    while (avail > 0) {
        if ((buf >> (avail - 1)) & 1u) throw std::invalid_argument("graph6: nonzero padding");
        --avail;
    }
    if (pos != s.size()) throw std::invalid_argument("graph6: trailing bytes");
    return a;
}

/// Encodes a symmetric zero-diagonal 0/1 matrix into graph6.
inline std::string encode(const BitMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("graph6: matrix not square");
    for (std::size_t i = 0; i < n; ++i) {
        if (a.get(i, i)) throw std::invalid_argument("graph6: nonzero diagonal");
        for (std::size_t j = 0; j < i; ++j)
            if (a.get(i, j) != a.get(j, i)) throw std::invalid_argument("graph6: matrix not symmetric");
    }
    std::string out;
    if (n <= 62) {
        out += char(n + 63);
    } else if (n <= 258047) {
        out += char(126);
        out += char(((n >> 12) & 63) + 63);
        out += char(((n >> 6) & 63) + 63);
        out += char((n & 63) + 63);
    } else {
        throw std::invalid_argument("graph6: order too large");
    }
    unsigned buf = 0;
    int used = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            buf = (buf << 1) | unsigned(a.get(i, j));
            if (++used == 6) {
                out += char(buf + 63);
                buf = 0;
                used = 0;
            }
        }
    }
    if (used) out += char((buf << (6 - used)) + 63);
    return out;
}

}  // namespace nonunital::graph6
