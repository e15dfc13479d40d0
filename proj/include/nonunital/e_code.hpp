#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "binary_code.hpp"
#include "gf2.hpp"
#include "ring_e.hpp"

namespace nonunital::e_code {

using binary_code::BinaryCode;
using binary_code::DistanceMethod;
using binary_code::EnumerationOptions;
using gf2::BitMatrix;
using gf2::BitVector;
using ring_e::E;
using ring_e::EVector;
using ring_e::F4;

struct EWeightEnumerator {
    std::vector<std::uint64_t> hamming_counts;  // indexed 0..n
    std::vector<std::uint64_t> lee_counts;      // indexed 0..2n
};

/// Additive generator matrix of the F4 image of an E-code.
struct F4Matrix {
    std::size_t cols = 0;
    std::vector<std::vector<F4>> rows;

    std::string to_text() const {
        std::string out = std::to_string(rows.size()) + " " + std::to_string(cols) + "\n";
        for (const auto& r : rows) {
            for (F4 x : r) out += ring_e::to_char(x);
            out += '\n';
        }
        return out;
    }
};

/// A linear E-code, i.e. a left E-submodule of E^n. Every such module splits
/// as a*U + c*V for binary codes U = res(C) and V = tor(C) with U contained
/// in V, which is how the closure is stored: a codeword a*u + c*v
/// corresponds to the plane pair (u, v) with u in U, v in V.
class ECode {
public:
    ECode() = default;

    /// Smallest left submodule containing the generators. The additive
    /// closure is generated by {g, a*g, b*g}; on the planes this reads
    /// U = <alpha(g)> and V = <j(g)> + U.
    static ECode span_closure(const std::vector<EVector>& generators, std::size_t n) {
        for (const auto& g : generators)
            if (g.size() != n) throw std::invalid_argument("span_closure: generator length mismatch");
        BitMatrix ua(0, n), va(0, n);
        for (const auto& g : generators) {
            ua.append_row(g.alpha_plane());
            va.append_row(g.j_plane());
            va.append_row(g.alpha_plane());
        }
        ECode c;
        c.n_ = n;
        c.res_ = BinaryCode::from_generators(ua);
        c.tor_ = BinaryCode::from_generators(va);
        c.gens_ = generators;
        return c;
    }

    static ECode span_closure(const std::vector<EVector>& generators) {
        if (generators.empty())
            throw std::invalid_argument("span_closure: need explicit length for empty generator set");
        return span_closure(generators, generators[0].size());
    }

    static ECode zero_code(std::size_t n) { return span_closure({}, n); }

    /// Theorem-3 construction C = a*B + c*B_perp from a self-orthogonal binary code.
    static ECode from_self_orthogonal_binary(const BinaryCode& b) {
        if (!b.is_self_orthogonal())
            throw std::invalid_argument("qsd_from_binary: code is not self-orthogonal");
        ECode c;
        c.n_ = b.length();
        c.res_ = b;
        c.tor_ = b.dual();
        for (std::size_t i = 0; i < b.dimension(); ++i)
            c.gens_.push_back(EVector(b.generator().row(i), BitVector(c.n_)));
        for (std::size_t i = 0; i < c.tor_.dimension(); ++i)
            c.gens_.push_back(EVector(BitVector(c.n_), c.tor_.generator().row(i)));
        return c;
    }

    std::size_t length() const { return n_; }
    std::size_t closure_log2_size() const { return res_.dimension() + tor_.dimension(); }

    const BinaryCode& residue() const { return res_; }
    const BinaryCode& torsion() const { return tor_; }
    const std::vector<EVector>& generators() const { return gens_; }

    bool contains(const EVector& w) const {
        return w.size() == n_ && res_.contains(w.alpha_plane()) && tor_.contains(w.j_plane());
    }

    bool operator==(const ECode& o) const { return n_ == o.n_ && res_ == o.res_ && tor_ == o.tor_; }
    bool operator!=(const ECode& o) const { return !(*this == o); }

    /// (x,y) = 0 for all codeword pairs; reduces to res(C) orthogonal to tor(C).
    bool is_self_orthogonal() const {
        if (res_.dimension() == 0) return true;
        return gf2::mul_transpose(tor_.generator(), res_.generator()).is_zero();
    }

    bool is_qsd() const { return closure_log2_size() == n_ && is_self_orthogonal(); }

    /// For a QSD code all residue words are even (self-orthogonal), and
    /// weights split as wt(a*u+c*v) = wt(u)+wt(v) mod 2, so Type IV reduces
    /// to the torsion code having only even weights.
    bool is_typeiv() const {
        if (!is_qsd()) return false;
        for (std::size_t i = 0; i < tor_.dimension(); ++i)
            if (tor_.generator().row(i).popcount() % 2 != 0) return false;
        return true;
    }

    /// Visits (hamming, lee) of every codeword including zero.
    template <typename Fn>
    void for_each_weight(Fn&& fn, const EnumerationOptions& opts = {}) const {
        const std::size_t ku = res_.dimension(), kv = tor_.dimension();
        if (ku + kv > opts.exhaustive_cap)
            throw std::runtime_error("E-code enumeration: size 2^" + std::to_string(ku + kv) +
                                     " exceeds cap 2^" + std::to_string(opts.exhaustive_cap));
        const std::size_t nwords = (n_ + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows_a, rows_j;
        for (std::size_t i = 0; i < ku; ++i) {
            rows_a.push_back(res_.generator().row(i).words());
            rows_j.push_back(std::vector<std::uint64_t>(nwords, 0));
        }
        for (std::size_t i = 0; i < kv; ++i) {
            rows_a.push_back(std::vector<std::uint64_t>(nwords, 0));
            rows_j.push_back(tor_.generator().row(i).words());
        }
        std::vector<std::uint64_t> pa(nwords, 0), pj(nwords, 0);
        auto emit = [&]() {
            std::size_t h = 0, l = 0;
            for (std::size_t k = 0; k < nwords; ++k) {
                h += std::size_t(std::popcount(pa[k] | pj[k]));
                l += std::size_t(std::popcount(pa[k])) + 2 * std::size_t(std::popcount(pj[k] & ~pa[k]));
            }
            fn(h, l);
        };
        emit();
        const std::uint64_t total = std::uint64_t(1) << (ku + kv);
        for (std::uint64_t m = 1; m < total; ++m) {
            std::size_t i = std::size_t(std::countr_zero(m));
            for (std::size_t k = 0; k < nwords; ++k) {
                pa[k] ^= rows_a[i][k];
                pj[k] ^= rows_j[i][k];
            }
            emit();
        }
    }

    EWeightEnumerator weight_enumerator(const EnumerationOptions& opts = {}) const {
        EWeightEnumerator we;
        we.hamming_counts.assign(n_ + 1, 0);
        we.lee_counts.assign(2 * n_ + 1, 0);
        for_each_weight([&](std::size_t h, std::size_t l) {
            ++we.hamming_counts[h];
            ++we.lee_counts[l];
        }, opts);
        return we;
    }

    /// d(C) = d(tor(C)): torsion contains the residue, and for every residue
    /// word u the pair (u, 0) is a codeword of the same Hamming weight.
    std::size_t min_hamming(const EnumerationOptions& opts = {}) const {
        if (tor_.dimension() == 0) throw std::runtime_error("min_hamming: zero code");
        return tor_.min_distance(DistanceMethod::automatic, opts);
    }

    std::size_t min_lee(const EnumerationOptions& opts = {}) const {
        if (tor_.dimension() == 0) throw std::runtime_error("min_lee: zero code");
        std::size_t best = 2 * tor_.min_distance(DistanceMethod::automatic, opts);
        if (res_.dimension() > 0)
            best = std::min(best, res_.min_distance(DistanceMethod::automatic, opts));
        return best;
    }

    /// Exact-coefficient MacWilliams fixed-point test for the Hamming weight
    /// enumerator: W(x,y) = |C|^{-1} W(x+3y, x-y) with alphabet size 4.
    bool macwilliams_formally_self_dual(const EnumerationOptions& opts = {}) const {
        if (closure_log2_size() != n_)
            throw std::runtime_error("macwilliams test: code size is not 2^n");
        auto counts = weight_enumerator(opts).hamming_counts;
        const std::size_t n = n_;
        using wide = __int128;
        // trans[j] = sum_w A_w [y^j] (x+3y)^{n-w} (x-y)^w
        std::vector<wide> trans(n + 1, 0);
        std::vector<wide> binom((n + 1) * (n + 1), 0);
        auto C = [&](std::size_t a, std::size_t b) -> wide& { return binom[a * (n + 1) + b]; };
        for (std::size_t a = 0; a <= n; ++a) {
            C(a, 0) = 1;
            for (std::size_t b = 1; b <= a; ++b) C(a, b) = C(a - 1, b - 1) + (b <= a - 1 ? C(a - 1, b) : 0);
        }
        std::vector<wide> pow3(n + 1, 1);
        for (std::size_t i = 1; i <= n; ++i) pow3[i] = pow3[i - 1] * 3;
        for (std::size_t w = 0; w <= n; ++w) {
            if (!counts[w]) continue;
            for (std::size_t j = 0; j <= n; ++j) {
                wide coef = 0;
                for (std::size_t i = 0; i <= j && i <= w; ++i) {
                    if (j - i > n - w) continue;
                    wide term = C(w, i) * C(n - w, j - i) * pow3[j - i];
                    coef += (i % 2) ? -term : term;
                }
                trans[j] += wide(counts[w]) * coef;
            }
        }
        wide size = wide(1) << n;
        for (std::size_t j = 0; j <= n; ++j) {
            if (trans[j] % size != 0) return false;
            if (trans[j] / size != wide(counts[j])) return false;
        }
        return true;
    }

    /// Stacked additive F4 generator matrix: rows phi(a*u_i), phi(b*u_i) for a
    /// residue basis, then phi(c*v_j) for a completion of the torsion code.
    /// Its GF(2) row span is phi(C).
    F4Matrix phi_image() const {
        F4Matrix m;
        m.cols = n_;
        auto push_scaled = [&](const BitVector& bits, F4 unit) {
            std::vector<F4> row(n_, F4::zero);
            for (std::size_t i = 0; i < n_; ++i)
                if (bits.get(i)) row[i] = unit;
            m.rows.push_back(std::move(row));
        };
        for (std::size_t i = 0; i < res_.dimension(); ++i)
            push_scaled(res_.generator().row(i), F4::omega);
        for (std::size_t i = 0; i < res_.dimension(); ++i)
            push_scaled(res_.generator().row(i), F4::omega2);
        // torsion words outside the residue span appear as phi(c*v) = v
        BitMatrix acc = res_.generator();
        std::size_t r = res_.dimension();
        for (std::size_t i = 0; i < tor_.dimension(); ++i) {
            BitMatrix trial = acc;
            trial.append_row(tor_.generator().row(i));
            if (gf2::rank(trial) > r) {
                acc = std::move(trial);
                ++r;
                push_scaled(tor_.generator().row(i), F4::one);
            }
        }
        return m;
    }

private:
    std::size_t n_ = 0;
    BinaryCode res_, tor_;
    std::vector<EVector> gens_;
};

/// Theorem-1 bound on the minimum distance of a Type IV E-code.
inline std::size_t typeiv_bound(std::size_t n) { return 2 * (n / 6 + 1); }

/// Previously known bound d <= 2*floor((n+2)/4).
inline std::size_t old_bound(std::size_t n) { return 2 * ((n + 2) / 4); }

}  // namespace nonunital::e_code
