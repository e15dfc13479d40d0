#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gf2.hpp"

namespace nonunital::schemes {

using gf2::BitMatrix;

enum class SchemeKind { srg, drt };

inline const char* kind_name(SchemeKind k) { return k == SchemeKind::srg ? "SRG" : "DRT"; }

struct SchemeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Small dense integer matrix, just enough for the defining-equation checks.
using IntMatrix = std::vector<std::vector<int>>;

inline IntMatrix to_int(const BitMatrix& a) {
    IntMatrix m(a.rows(), std::vector<int>(a.cols(), 0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a.get(i, j);
    return m;
}

inline IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
    std::size_t n = a.size(), m = b[0].size(), k = b.size();
    IntMatrix c(n, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            int v = a[i][l];
            if (!v) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += v * b[l][j];
        }
    return c;
}

/// A verified SRG or DRT adjacency matrix with its integer parameters.
struct SchemeMatrix {
    SchemeKind kind;
    std::size_t n = 0;
    int kappa = 0;
    int lambda = 0;  // common neighbours of adjacent pairs
    int mu = 0;      // common neighbours of non-adjacent pairs
    BitMatrix adj;

    BitMatrix complement_adj() const {
        BitMatrix c(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && !adj.get(i, j)) c.set(i, j, true);
        return c;
    }
};

/// The three F2 parameters of M*M^T = lambda*I + mu*J + nu*M for the mod-2
/// reduced adjacency matrix.
struct Mod2Params {
    int lambda = 0, mu = 0, nu = 0;
    int n_parity = 0;
};

namespace detail {

inline void check_adjacency_shape(const BitMatrix& a) {
    if (a.rows() != a.cols()) throw SchemeError("scheme: matrix not square");
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (a.get(i, i)) throw SchemeError("scheme: nonzero diagonal at (" + std::to_string(i) + "," + std::to_string(i) + ")");
}

inline int constant_row_sum(const BitMatrix& a) {
    std::size_t n = a.rows();
    int kappa = int(a.row(0).popcount());
    for (std::size_t i = 1; i < n; ++i)
        if (int(a.row(i).popcount()) != kappa)
            throw SchemeError("scheme: row " + std::to_string(i) + " degree differs from " + std::to_string(kappa));
    // column regularity, so that AJ = JA = kappa*J holds
    BitMatrix t = a.transpose();
    for (std::size_t i = 0; i < n; ++i)
        if (int(t.row(i).popcount()) != kappa)
            throw SchemeError("scheme: column " + std::to_string(i) + " degree differs from " + std::to_string(kappa));
    return kappa;
}

/// Verifies A^2 = diag_coef*I + lambda*A + mu*(J-I-A) over the integers, with
/// (lambda, mu) fitted from the first adjacent / non-adjacent pair.
inline std::pair<int, int> fit_and_check_square(const BitMatrix& a, int diag_coef) {
    std::size_t n = a.rows();
    IntMatrix ai = to_int(a);
    IntMatrix a2 = int_mul(ai, ai);
    int lambda = -1, mu = -1;
    for (std::size_t i = 0; i < n && (lambda < 0 || mu < 0); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a.get(i, j) && lambda < 0) lambda = a2[i][j];
            if (!a.get(i, j) && mu < 0) mu = a2[i][j];
        }
    if (lambda < 0) lambda = 0;
    if (mu < 0) mu = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int expect = (i == j) ? diag_coef : (a.get(i, j) ? lambda : mu);
            if (a2[i][j] != expect)
                throw SchemeError("scheme: defining equation fails at cell (" + std::to_string(i) +
                                  "," + std::to_string(j) + "): got " + std::to_string(a2[i][j]) +
                                  ", expected " + std::to_string(expect));
        }
    return {lambda, mu};
}

}  // namespace detail

/// Checks Eq. A^2 = kappa*I + Lambda*A + Mu*(J-I-A) exactly and returns the
/// fitted parameters.
inline SchemeMatrix verify_srg(const BitMatrix& a) {
    detail::check_adjacency_shape(a);
    std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (a.get(i, j) != a.get(j, i))
                throw SchemeError("SRG: not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    int kappa = detail::constant_row_sum(a);
    auto [lambda, mu] = detail::fit_and_check_square(a, kappa);
    return SchemeMatrix{SchemeKind::srg, n, kappa, lambda, mu, a};
}

/// Checks A + A^T = J - I, Eq. A^2 = Lambda*A + Mu*(J-I-A), and the
/// AA^T = kappa*I + (kappa-1-Lambda)*A + (kappa-Mu)*Abar identity.
inline SchemeMatrix verify_drt(const BitMatrix& a) {
    detail::check_adjacency_shape(a);
    std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && a.get(i, j) == a.get(j, i))
                throw SchemeError("DRT: A + A^T != J - I at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    int kappa = detail::constant_row_sum(a);
    auto [lambda, mu] = detail::fit_and_check_square(a, 0);
    // Lemma-1 identity for tournaments
    IntMatrix ai = to_int(a);
    IntMatrix at(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) at[i][j] = ai[j][i];
    IntMatrix aat = int_mul(ai, at);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int abar = (i != j && !a.get(i, j)) ? 1 : 0;
            int expect = (i == j ? kappa : 0) + (kappa - 1 - lambda) * ai[i][j] + (kappa - mu) * abar;
            if (aat[i][j] != expect)
                throw SchemeError("DRT: AA^T identity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return SchemeMatrix{SchemeKind::drt, n, kappa, lambda, mu, a};
}

inline SchemeMatrix verify(SchemeKind kind, const BitMatrix& a) {
    return kind == SchemeKind::srg ? verify_srg(a) : verify_drt(a);
}

inline bool is_prime(std::size_t q) {
    if (q < 2) return false;
    for (std::size_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

namespace detail {

inline std::vector<bool> quadratic_residues(std::size_t q) {
    std::vector<bool> qr(q, false);
    for (std::size_t i = 1; i < q; ++i) qr[(i * i) % q] = true;
    return qr;
}

}  // namespace detail

/// Paley graph on F_q, q prime, q = 1 mod 4: i ~ j iff i - j is a nonzero square.
inline SchemeMatrix paley_graph(std::size_t q) {
    if (!is_prime(q)) throw SchemeError("paley_graph: q must be prime");
    if (q % 4 != 1) throw SchemeError("paley_graph: q must be 1 mod 4");
    auto qr = detail::quadratic_residues(q);
    BitMatrix a(q, q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            if (i != j && qr[(i + q - j) % q]) a.set(i, j, true);
    return verify_srg(a);
}

/// Paley tournament on F_q, q prime, q = 3 mod 4: i -> j iff j - i is a nonzero square.
inline SchemeMatrix paley_tournament(std::size_t q) {
    if (!is_prime(q)) throw SchemeError("paley_tournament: q must be prime");
    if (q % 4 != 3) throw SchemeError("paley_tournament: q must be 3 mod 4");
    auto qr = detail::quadratic_residues(q);
    BitMatrix a(q, q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            if (i != j && qr[(j + q - i) % q]) a.set(i, j, true);
    return verify_drt(a);
}

/// Triangular graph T(m): 2-subsets of an m-set, adjacent when they intersect.
inline SchemeMatrix triangular_graph(std::size_t m) {
    if (m < 3) throw SchemeError("triangular_graph: need m >= 3");
    std::vector<std::pair<std::size_t, std::size_t>> verts;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) verts.emplace_back(i, j);
    std::size_t n = verts.size();
    BitMatrix a(n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (x == y) continue;
            auto [p, q] = verts[x];
            auto [r, s] = verts[y];
            if (p == r || p == s || q == r || q == s) a.set(x, y, true);
        }
    return verify_srg(a);
}

/// Lattice graph L2(m): the m x m rook's graph.
inline SchemeMatrix lattice_graph(std::size_t m) {
    if (m < 2) throw SchemeError("lattice_graph: need m >= 2");
    std::size_t n = m * m;
    BitMatrix a(n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y && (x / m == y / m || x % m == y % m)) a.set(x, y, true);
    return verify_srg(a);
}

/// Chang graphs: the three SRG(28,12,6,4) graphs other than T(8), obtained
/// from T(8) by Seidel switching with respect to (1) a perfect matching of
/// K8, (2) an 8-cycle, (3) a disjoint triangle and 5-cycle.
inline SchemeMatrix chang_graph(int which) {
    std::vector<std::pair<int, int>> sw;
    switch (which) {
        case 1: sw = {{0, 1}, {2, 3}, {4, 5}, {6, 7}}; break;
        case 2: sw = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 7}}; break;
        case 3: sw = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 7}}; break;
        default: throw SchemeError("chang_graph: which must be 1, 2, or 3");
    }
    std::vector<std::pair<int, int>> verts;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) verts.emplace_back(i, j);
    auto in_sw = [&](std::size_t v) {
        for (const auto& e : sw)
            if (verts[v] == e) return true;
        return false;
    };
    BitMatrix a(28, 28);
    for (std::size_t x = 0; x < 28; ++x)
        for (std::size_t y = x + 1; y < 28; ++y) {
            auto [p, q] = verts[x];
            auto [r, s] = verts[y];
            bool adj = (p == r || p == s || q == r || q == s);
            if (in_sw(x) != in_sw(y)) adj = !adj;
            a.set(x, y, adj);
            a.set(y, x, adj);
        }
    return verify_srg(a);
}

inline SchemeMatrix complement(const SchemeMatrix& s) {
    if (s.kind != SchemeKind::srg) throw SchemeError("complement: only defined for SRGs here");
    return verify_srg(s.complement_adj());
}

/// The Proposition's mod-2 parameters, re-verified against the GF(2) identity
/// M*M^T = lambda*I + mu*J + nu*M.
inline Mod2Params mod2_params(const SchemeMatrix& s) {
    Mod2Params p;
    p.n_parity = int(s.n % 2);
    if (s.kind == SchemeKind::srg) {
        p.lambda = ((s.kappa - s.mu) % 2 + 2) % 2;
        p.mu = ((s.mu) % 2 + 2) % 2;
        p.nu = ((s.lambda - s.mu) % 2 + 2) % 2;
    } else {
        p.lambda = ((s.mu) % 2 + 2) % 2;
        p.mu = ((s.kappa - s.mu) % 2 + 2) % 2;
        p.nu = ((s.mu - s.lambda - 1) % 2 + 2) % 2;
    }
    BitMatrix mmt = gf2::mul_transpose(s.adj, s.adj);
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t j = 0; j < s.n; ++j) {
            int expect = (p.lambda * (i == j) + p.mu + p.nu * s.adj.get(i, j)) % 2;
            if (int(mmt.get(i, j)) != expect)
                throw SchemeError("mod2_params: GF(2) identity fails at (" + std::to_string(i) +
                                  "," + std::to_string(j) + ")");
        }
    return p;
}

/// Plain-text 0/1 adjacency ingestion (gf2 matrix format).
inline BitMatrix parse_matrix_text(const std::string& text) { return BitMatrix::from_text(text); }

}  // namespace nonunital::schemes
