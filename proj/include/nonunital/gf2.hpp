#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nonunital::gf2 {

/// Dense bit-packed vector over GF(2). Trailing pad bits are kept zero.
class BitVector {
public:
    BitVector() = default;

    explicit BitVector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVector from_string(const std::string& s) {
        BitVector v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.set(i, true);
            else if (s[i] != '0')
                throw std::invalid_argument("BitVector: expected 0/1, got '" + std::string(1, s[i]) + "'");
        }
        return v;
    }

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1u; }

    void set(std::size_t i, bool b) {
        std::uint64_t m = std::uint64_t(1) << (i % 64);
        if (b)
            w_[i / 64] |= m;
        else
            w_[i / 64] &= ~m;
    }

    BitVector& operator^=(const BitVector& o) {
        check_same(o);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto x : w_) c += std::size_t(std::popcount(x));
        return c;
    }

    bool is_zero() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }

    /// Standard inner product mod 2.
    bool dot(const BitVector& o) const {
        check_same(o);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
        return std::popcount(acc) & 1u;
    }

    /// Index of first set bit, or size() if zero.
    std::size_t first_set() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return i * 64 + std::size_t(std::countr_zero(w_[i]));
        return n_;
    }

    bool operator==(const BitVector& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }

    /// Lexicographic by bit index; used only for canonical ordering in tests.
    bool operator<(const BitVector& o) const {
        check_same(o);
        for (std::size_t i = w_.size(); i-- > 0;)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
        return false;
    }

    std::string to_string() const {
        std::string s(n_, '0');
        for (std::size_t i = 0; i < n_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }

private:
    void check_same(const BitVector& o) const {
        if (n_ != o.n_) throw std::invalid_argument("BitVector: length mismatch");
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

/// Dense row-major bit matrix over GF(2).
class BitMatrix {
public:
    BitMatrix() = default;

    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), r_(rows, BitVector(cols)) {}

    explicit BitMatrix(std::vector<BitVector> rows) : r_(std::move(rows)) {
        rows_ = r_.size();
        cols_ = rows_ ? r_[0].size() : 0;
        for (const auto& v : r_)
            if (v.size() != cols_) throw std::invalid_argument("BitMatrix: ragged rows");
    }

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static BitMatrix all_ones(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.set(i, j, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const BitVector& row(std::size_t i) const { return r_[i]; }
    BitVector& row(std::size_t i) { return r_[i]; }

    bool get(std::size_t i, std::size_t j) const { return r_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool b) { r_[i].set(j, b); }

    void append_row(BitVector v) {
        if (rows_ == 0 && cols_ == 0) cols_ = v.size();
        if (v.size() != cols_) throw std::invalid_argument("BitMatrix: row length mismatch");
        r_.push_back(std::move(v));
        ++rows_;
    }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (get(i, j)) t.set(j, i, true);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : r_)
            if (!v.is_zero()) return false;
        return true;
    }

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && r_ == o.r_;
    }
    bool operator!=(const BitMatrix& o) const { return !(*this == o); }

    std::string to_text() const {
        std::ostringstream os;
        os << rows_ << ' ' << cols_ << '\n';
        for (const auto& v : r_) os << v.to_string() << '\n';
        return os.str();
    }

    static BitMatrix from_text(std::istream& is) {
        std::size_t rows, cols;
        if (!(is >> rows >> cols)) throw std::invalid_argument("BitMatrix: bad header");
        BitMatrix m;
        m.cols_ = cols;
        std::string line;
        for (std::size_t i = 0; i < rows; ++i) {
            if (!(is >> line) || line.size() != cols)
                throw std::invalid_argument("BitMatrix: bad row " + std::to_string(i));
            m.append_row(BitVector::from_string(line));
        }
        return m;
    }

    static BitMatrix from_text(const std::string& s) {
        std::istringstream is(s);
        return from_text(is);
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BitVector> r_;
};

inline BitMatrix matmul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    BitMatrix bt = b.transpose();
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (a.row(i).dot(bt.row(j))) c.set(i, j, true);
    return c;
}

/// A * B^T, the Gram-style product used for orthogonality checks.
inline BitMatrix mul_transpose(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("mul_transpose: dimension mismatch");
    BitMatrix c(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.rows(); ++j)
            if (a.row(i).dot(b.row(j))) c.set(i, j, true);
    return c;
}

struct Rref {
    BitMatrix mat;               // reduced echelon form, zero rows dropped
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; pivot at the first set bit of each row.
inline Rref rref(const BitMatrix& a) {
    std::vector<BitVector> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < rows.size(); ++col) {
        std::size_t piv = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i].get(col)) { piv = i; break; }
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(col)) rows[i] ^= rows[r];
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r, BitVector(a.cols()));
    Rref out;
    out.mat = r ? BitMatrix(std::move(rows)) : BitMatrix(0, a.cols());
    out.pivots = std::move(pivots);
    return out;
}

inline std::size_t rank(const BitMatrix& a) { return rref(a).pivots.size(); }

/// Rows form a basis of { x : A x^T = 0 }.
inline BitMatrix nullspace(const BitMatrix& a) {
    Rref rr = rref(a);
    std::size_t n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    BitMatrix ns(0, n);
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        BitVector v(n);
        v.set(free_col, true);
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            if (rr.mat.get(i, free_col)) v.set(rr.pivots[i], true);
        ns.append_row(std::move(v));
    }
    return ns;
}

/// Row-space equality via canonical forms.
inline bool same_row_space(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) return false;
    return rref(a).mat == rref(b).mat;
}

}  // namespace nonunital::gf2
