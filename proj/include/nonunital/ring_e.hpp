#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf2.hpp"

namespace nonunital::ring_e {

/// The four elements of the non-unital ring E = <a,b | 2a=2b=0, a^2=a, b^2=b, ab=a, ba=b>,
/// with c = a+b. Encoded as two bits: bit 0 is the residue bit alpha(x),
/// bit 1 distinguishes the coset (b and c carry it). With this encoding
/// addition is XOR and multiplication reads only alpha of the right factor.
enum class E : std::uint8_t {
    zero = 0b00,
    a    = 0b01,
    b    = 0b11,
    c    = 0b10,
};

constexpr E add(E x, E y) {
    return E(std::uint8_t(x) ^ std::uint8_t(y));
}

/// x*y = x when y is a unit-like generator (a or b), 0 when y is 0 or c.
constexpr E mul(E x, E y) {
    return (std::uint8_t(y) & 1u) ? x : E::zero;
}

/// Reduction modulo the maximal ideal J = {0, c}.
constexpr int alpha(E x) { return std::uint8_t(x) & 1; }

/// Integer scalars act through the characteristic-2 additive group.
constexpr E scalar_mul(long long m, E x) { return (m & 1) ? x : E::zero; }

constexpr int hamming_wt(E x) { return x == E::zero ? 0 : 1; }

constexpr int lee_wt(E x) {
    switch (x) {
        case E::zero: return 0;
        case E::a:
        case E::b: return 1;
        case E::c: return 2;
    }
    return 0;
}

constexpr char to_char(E x) {
    switch (x) {
        case E::zero: return '0';
        case E::a: return 'a';
        case E::b: return 'b';
        case E::c: return 'c';
    }
    return '?';
}

inline E from_char(char ch) {
    switch (ch) {
        case '0': return E::zero;
        case 'a': return E::a;
        case 'b': return E::b;
        case 'c': return E::c;
    }
    throw std::invalid_argument("ring E: unknown element '" + std::string(1, ch) + "'");
}

constexpr E ALL[4] = {E::zero, E::a, E::b, E::c};

/// GF(4) = F2[w] with w^2 = w + 1, encoded so that addition is XOR:
/// 0 -> 00, 1 -> 01, w -> 10, w^2 -> 11.
enum class F4 : std::uint8_t {
    zero   = 0b00,
    one    = 0b01,
    omega  = 0b10,
    omega2 = 0b11,
};

constexpr F4 add(F4 x, F4 y) { return F4(std::uint8_t(x) ^ std::uint8_t(y)); }

constexpr char to_char(F4 x) {
    switch (x) {
        case F4::zero: return '0';
        case F4::one: return '1';
        case F4::omega: return 'w';
        case F4::omega2: return 'W';
    }
    return '?';
}

/// The substitution 0 -> 0, a -> w, b -> w^2, c -> 1. A bijection E -> F4
/// and an isomorphism of additive groups.
constexpr F4 phi(E x) {
    switch (x) {
        case E::zero: return F4::zero;
        case E::a: return F4::omega;
        case E::b: return F4::omega2;
        case E::c: return F4::one;
    }
    return F4::zero;
}

/// A length-n vector over E held as two GF(2) bit planes: the alpha plane
/// (residue bits) and the J plane. Coordinate i is (alpha_bit, j_bit):
/// (0,0)=0, (1,0)=a, (1,1)=b, (0,1)=c.
class EVector {
public:
    EVector() = default;

    explicit EVector(std::size_t n) : a_(n), j_(n) {}

    EVector(gf2::BitVector alpha_plane, gf2::BitVector j_plane)
        : a_(std::move(alpha_plane)), j_(std::move(j_plane)) {
        if (a_.size() != j_.size()) throw std::invalid_argument("EVector: plane length mismatch");
    }

    static EVector from_string(const std::string& s) {
        EVector v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) v.set(i, from_char(s[i]));
        return v;
    }

    std::size_t size() const { return a_.size(); }

    E get(std::size_t i) const {
        return E(std::uint8_t(a_.get(i)) | (std::uint8_t(j_.get(i)) << 1));
    }

    void set(std::size_t i, E x) {
        a_.set(i, std::uint8_t(x) & 1u);
        j_.set(i, (std::uint8_t(x) >> 1) & 1u);
    }

    EVector& operator^=(const EVector& o) {
        a_ ^= o.a_;
        j_ ^= o.j_;
        return *this;
    }
    friend EVector operator^(EVector x, const EVector& y) { return x ^= y; }

    /// Coordinatewise left multiplication e * v.
    EVector left_mul(E e) const {
        // e*(coordinate x) = e when alpha(x) = 1, else 0: both planes of the
        // result are alpha(v) masked by the corresponding bit of e.
        EVector out(size());
        if (std::uint8_t(e) & 1u) out.a_ = a_;
        if (std::uint8_t(e) & 2u) {
            gf2::BitVector jm = a_;
            out.j_ = jm;
        }
        return out;
    }

    std::size_t hamming_weight() const {
        std::size_t c = 0;
        const auto& aw = a_.words();
        const auto& jw = j_.words();
        for (std::size_t i = 0; i < aw.size(); ++i) c += std::size_t(std::popcount(aw[i] | jw[i]));
        return c;
    }

    std::size_t lee_weight() const {
        std::size_t c = 0;
        const auto& aw = a_.words();
        const auto& jw = j_.words();
        for (std::size_t i = 0; i < aw.size(); ++i)
            c += std::size_t(std::popcount(aw[i])) + 2 * std::size_t(std::popcount(jw[i] & ~aw[i]));
        return c;
    }

    bool is_zero() const { return a_.is_zero() && j_.is_zero(); }

    /// Inner product sum_i x_i * y_i in E.
    E inner(const EVector& o) const {
        // x_i*y_i = x_i when alpha(y_i)=1 else 0, so the sum has alpha bit
        // <alpha(x), alpha(y)> and J bit <j(x), alpha(y)>.
        int ab = a_.dot(o.a_);
        int jb = j_.dot(o.a_);
        return E(std::uint8_t(ab) | (std::uint8_t(jb) << 1));
    }

    const gf2::BitVector& alpha_plane() const { return a_; }
    const gf2::BitVector& j_plane() const { return j_; }

    bool operator==(const EVector& o) const { return a_ == o.a_ && j_ == o.j_; }
    bool operator!=(const EVector& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s(size(), '0');
        for (std::size_t i = 0; i < size(); ++i) s[i] = to_char(get(i));
        return s;
    }

private:
    gf2::BitVector a_, j_;
};

}  // namespace nonunital::ring_e
