#pragma once

// Test-side oracle: brute-force left-module closure over E^n, independent of
// the library's residue/torsion decomposition. Words are stored as byte
// vectors of E values; closure is computed by saturating under pairwise
// addition and left scalar multiplication.

#include <cstdint>
#include <set>
#include <vector>

#include "nonunital/ring_e.hpp"

namespace oracle {

using Word = std::vector<std::uint8_t>;  // entries are E codes 0..3
using nonunital::ring_e::E;

inline Word add(const Word& x, const Word& y) {
    Word z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] ^ y[i];
    return z;
}

inline Word scale(E e, const Word& x) {
    Word z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        z[i] = std::uint8_t(nonunital::ring_e::mul(e, E(x[i])));
    return z;
}

inline E inner(const Word& x, const Word& y) {
    E acc = E::zero;
    for (std::size_t i = 0; i < x.size(); ++i)
        acc = nonunital::ring_e::add(acc, nonunital::ring_e::mul(E(x[i]), E(y[i])));
    return acc;
}

inline std::size_t hamming(const Word& x) {
    std::size_t w = 0;
    for (auto v : x) w += v != 0;
    return w;
}

inline std::size_t lee(const Word& x) {
    std::size_t w = 0;
    for (auto v : x) w += nonunital::ring_e::lee_wt(E(v));
    return w;
}

/// Smallest set containing the generators, closed under + and left scaling.
inline std::set<Word> module_closure(const std::vector<Word>& gens, std::size_t n) {
    std::set<Word> c;
    c.insert(Word(n, 0));
    std::vector<Word> frontier;
    for (const auto& g : gens) frontier.push_back(g);
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
            if (!c.insert(w).second) continue;
            for (E e : {E::a, E::b, E::c}) next.push_back(scale(e, w));
            for (const auto& v : c) next.push_back(add(w, v));
        }
        frontier = std::move(next);
    }
    // saturate additions missed while iterating
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Word> add_list;
        for (const auto& x : c)
            for (const auto& y : c) {
                Word z = add(x, y);
                if (!c.count(z)) add_list.push_back(z);
            }
        for (auto& z : add_list) grew |= c.insert(z).second;
    }
    return c;
}

/// The left span {x1 g1 + ... + xk gk}: no generator self-inclusion.
inline std::set<Word> left_span(const std::vector<Word>& gens, std::size_t n) {
    std::vector<Word> scaled;
    for (const auto& g : gens)
        for (E e : {E::a, E::b, E::c}) scaled.push_back(scale(e, g));
    // scaled generators reproduce themselves under scaling, so the additive
    // span of these is already a left module
    std::set<Word> c;
    c.insert(Word(n, 0));
    bool grew = true;
    for (const auto& g : scaled) c.insert(g);
    while (grew) {
        grew = false;
        std::vector<Word> add_list;
        for (const auto& x : c)
            for (const auto& y : c)
                if (!c.count(add(x, y))) add_list.push_back(add(x, y));
        for (auto& z : add_list) grew |= c.insert(z).second;
    }
    return c;
}

inline bool self_orthogonal(const std::set<Word>& c) {
    for (const auto& x : c)
        for (const auto& y : c)
            if (inner(x, y) != E::zero) return false;
    return true;
}

inline bool all_even(const std::set<Word>& c) {
    for (const auto& x : c)
        if (hamming(x) % 2 != 0) return false;
    return true;
}

inline std::size_t min_hamming(const std::set<Word>& c) {
    std::size_t best = SIZE_MAX;
    for (const auto& x : c)
        if (hamming(x) != 0) best = std::min(best, hamming(x));
    return best;
}

}  // namespace oracle
