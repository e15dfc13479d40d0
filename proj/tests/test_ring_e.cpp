#include <catch2/catch_amalgamated.hpp>

#include "nonunital/ring_e.hpp"

using namespace nonunital::ring_e;

namespace {
// Frozen expected tables, written out independently of the implementation.
// Order of operands: 0, a, b, c.
constexpr char ADD[4][4] = {{'0', 'a', 'b', 'c'},
                            {'a', '0', 'c', 'b'},
                            {'b', 'c', '0', 'a'},
                            {'c', 'b', 'a', '0'}};
constexpr char MUL[4][4] = {{'0', '0', '0', '0'},
                            {'0', 'a', 'a', '0'},
                            {'0', 'b', 'b', '0'},
                            {'0', 'c', 'c', '0'}};
constexpr E ELTS[4] = {E::zero, E::a, E::b, E::c};
}  // namespace

TEST_CASE("addition and multiplication tables match the presentation") {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(to_char(add(ELTS[i], ELTS[j])) == ADD[i][j]);
            CHECK(to_char(mul(ELTS[i], ELTS[j])) == MUL[i][j]);
        }
}

TEST_CASE("ring axioms hold on all triples") {
    for (E x : ALL)
        for (E y : ALL) {
            CHECK(add(x, y) == add(y, x));
            CHECK(add(x, add(x, y)) == y);  // characteristic 2
            for (E z : ALL) {
                CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
                CHECK(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)));
                CHECK(mul(add(x, y), z) == add(mul(x, z), mul(y, z)));
            }
        }
}

TEST_CASE("defining relations of the presentation") {
    CHECK(add(E::a, E::a) == E::zero);
    CHECK(add(E::b, E::b) == E::zero);
    CHECK(mul(E::a, E::a) == E::a);
    CHECK(mul(E::b, E::b) == E::b);
    CHECK(mul(E::a, E::b) == E::a);
    CHECK(mul(E::b, E::a) == E::b);
    CHECK(add(E::a, E::b) == E::c);
    // noncommutative and non-unital: no element acts as identity
    CHECK(mul(E::a, E::b) != mul(E::b, E::a));
    for (E u : ALL) {
        bool unit_like = true;
        for (E x : ALL) unit_like = unit_like && mul(u, x) == x && mul(x, u) == x;
        CHECK_FALSE(unit_like);
    }
}

TEST_CASE("alpha reduction mod the maximal ideal") {
    CHECK(alpha(E::zero) == 0);
    CHECK(alpha(E::c) == 0);
    CHECK(alpha(E::a) == 1);
    CHECK(alpha(E::b) == 1);
    for (E x : ALL)
        for (E y : ALL) {
            CHECK(alpha(add(x, y)) == (alpha(x) ^ alpha(y)));
            CHECK(alpha(mul(x, y)) == (alpha(x) & alpha(y)));
        }
}

TEST_CASE("weights") {
    CHECK(hamming_wt(E::zero) == 0);
    CHECK(hamming_wt(E::a) == 1);
    CHECK(hamming_wt(E::b) == 1);
    CHECK(hamming_wt(E::c) == 1);
    CHECK(lee_wt(E::zero) == 0);
    CHECK(lee_wt(E::a) == 1);
    CHECK(lee_wt(E::b) == 1);
    CHECK(lee_wt(E::c) == 2);
}

TEST_CASE("phi is an additive bijection onto F4") {
    CHECK(phi(E::zero) == F4::zero);
    CHECK(phi(E::a) == F4::omega);
    CHECK(phi(E::b) == F4::omega2);
    CHECK(phi(E::c) == F4::one);
    for (E x : ALL)
        for (E y : ALL) CHECK(phi(add(x, y)) == add(phi(x), phi(y)));
    CHECK(to_char(F4::zero) == '0');
    CHECK(to_char(F4::one) == '1');
    CHECK(to_char(F4::omega) == 'w');
    CHECK(to_char(F4::omega2) == 'W');
}

TEST_CASE("char round trip") {
    for (E x : ALL) CHECK(from_char(to_char(x)) == x);
    CHECK_THROWS(from_char('d'));
}

TEST_CASE("EVector string round trip and planes") {
    EVector v = EVector::from_string("0abc");
    CHECK(v.size() == 4);
    CHECK(v.to_string() == "0abc");
    CHECK(v.get(0) == E::zero);
    CHECK(v.get(1) == E::a);
    CHECK(v.get(2) == E::b);
    CHECK(v.get(3) == E::c);
    CHECK(v.hamming_weight() == 3);
    CHECK(v.lee_weight() == 1 + 1 + 2);
    // alpha plane picks units, j plane picks {b, c}
    CHECK_FALSE(v.alpha_plane().get(0));
    CHECK(v.alpha_plane().get(1));
    CHECK(v.alpha_plane().get(2));
    CHECK_FALSE(v.alpha_plane().get(3));
    CHECK_FALSE(v.j_plane().get(0));
    CHECK_FALSE(v.j_plane().get(1));
    CHECK(v.j_plane().get(2));
    CHECK(v.j_plane().get(3));
}

TEST_CASE("EVector addition and scaling agree with coordinatewise ring ops") {
    EVector x = EVector::from_string("0abcabc0");
    EVector y = EVector::from_string("abc0c0ab");
    EVector s = x ^ y;
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(s.get(i) == add(x.get(i), y.get(i)));
    for (E e : ALL) {
        EVector m = x.left_mul(e);
        for (std::size_t i = 0; i < x.size(); ++i) CHECK(m.get(i) == mul(e, x.get(i)));
    }
}

TEST_CASE("EVector inner product matches scalar expansion") {
    EVector x = EVector::from_string("0abcabc0ab");
    EVector y = EVector::from_string("abc0c0ab0c");
    E acc = E::zero;
    for (std::size_t i = 0; i < x.size(); ++i) acc = add(acc, mul(x.get(i), y.get(i)));
    CHECK(x.inner(y) == acc);
    // the inner product is not symmetric in general
    EVector u = EVector::from_string("a");
    EVector w = EVector::from_string("b");
    CHECK(u.inner(w) == E::a);
    CHECK(w.inner(u) == E::b);
}

TEST_CASE("scalar_mul reduces integer coefficients mod 2") {
    for (E x : ALL) {
        CHECK(scalar_mul(0, x) == E::zero);
        CHECK(scalar_mul(1, x) == x);
        CHECK(scalar_mul(2, x) == E::zero);
        CHECK(scalar_mul(-3, x) == x);
        CHECK(scalar_mul(7, x) == x);
    }
}
