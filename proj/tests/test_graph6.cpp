#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nonunital/graph6.hpp"
#include "nonunital/schemes.hpp"

using namespace nonunital;
using gf2::BitMatrix;

TEST_CASE("known small encodings") {
    // K3 in graph6 is "Bw": n=3 -> 'B', upper triangle 110 padded -> 'w'
    BitMatrix k3(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) k3.set(i, j, true);
    CHECK(graph6::encode(k3) == "Bw");
    CHECK(graph6::parse("Bw") == k3);
    // empty graph on one vertex
    BitMatrix k1(1, 1);
    CHECK(graph6::encode(k1) == "@");
    CHECK(graph6::parse("@") == k1);
}

TEST_CASE("the pentagon decodes to SRG(5,2,0,1) under any labeling") {
    // two distinct labelings of the 5-cycle
    for (const char* g6 : {"Dhc", "DUW"}) {
        auto adj = graph6::parse(g6);
        auto s = schemes::verify(schemes::SchemeKind::srg, adj);
        CHECK(s.n == 5);
        CHECK(s.kappa == 2);
        CHECK(s.lambda == 0);
        CHECK(s.mu == 1);
    }
}

TEST_CASE("header prefix is accepted") {
    BitMatrix k3 = graph6::parse("Bw");
    CHECK(graph6::parse(">>graph6<<Bw") == k3);
}

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS(graph6::parse(""));
    CHECK_THROWS(graph6::parse("B"));            // truncated body
    CHECK_THROWS(graph6::parse("Bw!"));          // trailing bytes
    CHECK_THROWS(graph6::parse(std::string(1, char(10))));  // byte out of range
    // nonzero padding bits
    BitMatrix k2(2, 2);
    k2.set(0, 1, true);
    k2.set(1, 0, true);
    std::string enc = graph6::encode(k2);  // "A_"
    std::string bad = enc;
    bad[1] = char(bad[1] + 1);  // sets the lowest padding bit
    CHECK_THROWS(graph6::parse(bad));
}

TEST_CASE("encode validates the adjacency matrix") {
    BitMatrix loop(2, 2);
    loop.set(0, 0, true);
    CHECK_THROWS(graph6::encode(loop));
    BitMatrix asym(2, 2);
    asym.set(0, 1, true);
    CHECK_THROWS(graph6::encode(asym));
}

TEST_CASE("three-byte order form") {
    BitMatrix big(100, 100);
    big.set(0, 99, true);
    big.set(99, 0, true);
    std::string enc = graph6::encode(big);
    CHECK(enc[0] == char(126));
    CHECK(graph6::parse(enc) == big);
}

TEST_CASE("round trip on 1000 random graphs") {
    std::mt19937 rng(60402);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 1 + rng() % 62;
        std::bernoulli_distribution bit(0.3);
        BitMatrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (bit(rng)) {
                    a.set(i, j, true);
                    a.set(j, i, true);
                }
        REQUIRE(graph6::parse(graph6::encode(a)) == a);
    }
}
