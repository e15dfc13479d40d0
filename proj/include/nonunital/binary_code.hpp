#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gf2.hpp"

namespace nonunital::binary_code {

using gf2::BitMatrix;
using gf2::BitVector;

enum class DistanceMethod { automatic, exhaustive, information_set };

struct EnumerationOptions {
    std::size_t exhaustive_cap = 28;   // max dimension for full codeword enumeration
    unsigned workers = 0;              // 0 = hardware concurrency
};

namespace detail {

inline unsigned resolve_workers(unsigned w) {
    if (w) return w;
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

/// Visits every nonzero codeword weight of the span of `rows` for message
/// indices in [lo, hi), in Gray-code order. `fn(weight)` must be thread-safe
/// only in the sense that each worker gets its own instance.
template <typename Fn>
void gray_scan(const std::vector<BitVector>& rows, std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
    if (rows.empty() || lo >= hi) return;
    const std::size_t nwords = rows[0].words().size();
    std::vector<std::uint64_t> word(nwords, 0);
    std::vector<const std::uint64_t*> rw(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rw[i] = rows[i].words().data();

    std::uint64_t g = lo ^ (lo >> 1);
    for (std::size_t i = 0; i < rows.size(); ++i)
        if ((g >> i) & 1u)
            for (std::size_t k = 0; k < nwords; ++k) word[k] ^= rw[i][k];

    auto weight = [&]() {
        std::size_t c = 0;
        for (std::size_t k = 0; k < nwords; ++k) c += std::size_t(std::popcount(word[k]));
        return c;
    };

    if (lo != 0) fn(weight());
    for (std::uint64_t m = lo + 1; m < hi; ++m) {
        const std::uint64_t* r = rw[std::size_t(std::countr_zero(m))];
        for (std::size_t k = 0; k < nwords; ++k) word[k] ^= r[k];
        fn(weight());
    }
}

/// Partitions the 2^k message space across workers; merge(w_results) at the end.
template <typename Worker>
void parallel_messages(std::size_t k, unsigned workers, Worker&& run_range) {
    const std::uint64_t total = std::uint64_t(1) << k;
    workers = resolve_workers(workers);
    if (k < 16 || workers <= 1) {
        run_range(0, 0, total);
        return;
    }
    std::vector<std::thread> ts;
    std::uint64_t chunk = total / workers;
    for (unsigned t = 0; t < workers; ++t) {
        std::uint64_t lo = t * chunk;
        std::uint64_t hi = (t + 1 == workers) ? total : lo + chunk;
        ts.emplace_back([&, t, lo, hi] { run_range(t, lo, hi); });
    }
    for (auto& t : ts) t.join();
}

}  // namespace detail

/// Exact Hamming weight counts by full enumeration of the row span.
inline std::vector<std::uint64_t> span_weight_distribution(const BitMatrix& g,
                                                           const EnumerationOptions& opts = {}) {
    const std::size_t k = g.rows(), n = g.cols();
    if (k > opts.exhaustive_cap)
        throw std::runtime_error("weight distribution: dimension " + std::to_string(k) +
                                 " exceeds enumeration cap " + std::to_string(opts.exhaustive_cap));
    std::vector<BitVector> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(g.row(i));
    unsigned workers = detail::resolve_workers(opts.workers);
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n + 1, 0));
    detail::parallel_messages(k, workers, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
        auto& counts = partial[t];
        detail::gray_scan(rows, lo, hi, [&](std::size_t w) { ++counts[w]; });
    });
    std::vector<std::uint64_t> counts(n + 1, 0);
    counts[0] = 1;
    for (const auto& p : partial)
        for (std::size_t w = 0; w <= n; ++w) counts[w] += p[w];
    return counts;
}

namespace detail {

inline std::size_t min_weight_exhaustive(const std::vector<BitVector>& rows, std::size_t n,
                                         unsigned workers) {
    const std::size_t k = rows.size();
    workers = resolve_workers(workers);
    std::vector<std::size_t> best(workers, n + 1);
    parallel_messages(k, workers, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
        std::size_t b = n + 1;
        gray_scan(rows, lo, hi, [&](std::size_t w) {
            if (w < b) b = w;
        });
        best[t] = b;
    });
    return *std::min_element(best.begin(), best.end());
}

/// One information set for the Brouwer-Zimmermann scan: a generator matrix in
/// reduced form whose pivots avoid the columns already claimed by earlier sets.
struct InfoSet {
    std::vector<BitVector> rows;  // k rows, reduced on this set's pivot columns
    std::size_t rank = 0;
};

inline std::vector<InfoSet> build_info_sets(const BitMatrix& g) {
    const std::size_t k = g.rows(), n = g.cols();
    std::vector<bool> used(n, false);
    std::vector<InfoSet> sets;
    std::size_t covered = 0;
    while (covered < n) {
        std::vector<BitVector> rows;
        for (std::size_t i = 0; i < k; ++i) rows.push_back(g.row(i));
        std::size_t r = 0;
        for (std::size_t col = 0; col < n && r < k; ++col) {
            if (used[col]) continue;
            std::size_t piv = k;
            for (std::size_t i = r; i < k; ++i)
                if (rows[i].get(col)) { piv = i; break; }
            if (piv == k) continue;
            std::swap(rows[r], rows[piv]);
            for (std::size_t i = 0; i < k; ++i)
                if (i != r && rows[i].get(col)) rows[i] ^= rows[r];
            used[col] = true;
            ++covered;
            ++r;
        }
        if (r == 0) break;
        sets.push_back(InfoSet{std::move(rows), r});
    }
    return sets;
}

/// Minimum over all XORs of exactly w of the given rows.
inline void scan_combinations(const std::vector<BitVector>& rows, std::size_t w,
                              std::size_t& best) {
    const std::size_t k = rows.size();
    if (w > k) return;
    const std::size_t nwords = rows[0].words().size();
    std::vector<std::uint64_t> acc(nwords, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) {
        if (left == 0) {
            std::size_t c = 0;
            for (std::size_t i = 0; i < nwords; ++i) c += std::size_t(std::popcount(acc[i]));
            if (c < best) best = c;
            return;
        }
        for (std::size_t i = start; i + left <= k; ++i) {
            const auto& rv = rows[i].words();
            for (std::size_t j = 0; j < nwords; ++j) acc[j] ^= rv[j];
            rec(i + 1, left - 1);
            for (std::size_t j = 0; j < nwords; ++j) acc[j] ^= rv[j];
        }
    };
    rec(0, w);
}

/// Brouwer-Zimmermann lower/upper bound refinement over one or more
/// information sets; exact once the bounds meet.
inline std::size_t min_weight_information_set(const BitMatrix& g) {
    const std::size_t k = g.rows(), n = g.cols();
    auto sets = build_info_sets(g);
    if (sets.empty()) throw std::runtime_error("information_set: no information set found");
    std::size_t ub = n + 1;
    for (std::size_t w = 1; w <= k; ++w) {
        for (const auto& s : sets) scan_combinations(s.rows, w, ub);
        std::size_t lb = 0;
        for (const auto& s : sets) {
            std::size_t deficiency = k - s.rank;
            if (w + 1 > deficiency) lb += w + 1 - deficiency;
        }
        if (lb >= ub) break;
    }
    return ub;
}

}  // namespace detail

struct WeightDistribution {
    std::vector<std::uint64_t> counts;  // indexed by weight, size n+1
};

/// A binary [n,k] linear code held by a full-rank generator matrix in rref.
class BinaryCode {
public:
    BinaryCode() = default;

    /// Builds from arbitrary (possibly dependent) generating rows.
    static BinaryCode from_generators(const BitMatrix& g) {
        BinaryCode c;
        auto rr = gf2::rref(g);
        c.g_ = std::move(rr.mat);
        c.n_ = g.cols();
        c.k_ = c.g_.rows();
        return c;
    }

    static BinaryCode zero_code(std::size_t n) { return from_generators(BitMatrix(0, n)); }

    static BinaryCode full_space(std::size_t n) { return from_generators(BitMatrix::identity(n)); }

    std::size_t length() const { return n_; }
    std::size_t dimension() const { return k_; }
    const BitMatrix& generator() const { return g_; }

    BinaryCode dual() const {
        if (k_ == 0) return full_space(n_);
        return from_generators(gf2::nullspace(g_));
    }

    bool contains(const BitVector& v) const {
        if (v.size() != n_) return false;
        BitVector w = v;
        for (std::size_t i = 0; i < k_; ++i) {
            std::size_t p = g_.row(i).first_set();
            if (w.get(p)) w ^= g_.row(i);
        }
        return w.is_zero();
    }

    bool is_self_orthogonal() const {
        if (k_ == 0) return true;
        return gf2::mul_transpose(g_, g_).is_zero();
    }

    bool operator==(const BinaryCode& o) const { return n_ == o.n_ && g_ == o.g_; }
    bool operator!=(const BinaryCode& o) const { return !(*this == o); }

    /// Minimum Hamming weight over nonzero codewords.
    std::size_t min_distance(DistanceMethod method = DistanceMethod::automatic,
                             const EnumerationOptions& opts = {}) const {
        if (k_ == 0) throw std::runtime_error("min_distance: no nonzero codewords");
        if (method == DistanceMethod::automatic)
            method = k_ <= opts.exhaustive_cap ? DistanceMethod::exhaustive
                                               : DistanceMethod::information_set;
        if (method == DistanceMethod::exhaustive) {
            if (k_ > opts.exhaustive_cap)
                throw std::runtime_error("min_distance: dimension exceeds enumeration cap");
            std::vector<BitVector> rows;
            for (std::size_t i = 0; i < k_; ++i) rows.push_back(g_.row(i));
            return detail::min_weight_exhaustive(rows, n_, opts.workers);
        }
        return detail::min_weight_information_set(g_);
    }

    WeightDistribution weight_distribution(const EnumerationOptions& opts = {}) const {
        return WeightDistribution{span_weight_distribution(g_, opts)};
    }

private:
    std::size_t n_ = 0, k_ = 0;
    BitMatrix g_;
};

}  // namespace nonunital::binary_code
