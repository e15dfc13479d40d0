// Acceptance gate: one pass/fail line per criterion, exit 1 on any failure.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "closure_oracle.hpp"
#include "nonunital/constructions.hpp"
#include "nonunital/graph6.hpp"

using namespace nonunital;
using namespace nonunital::constructions;
using gf2::BitMatrix;
using ring_e::E;

namespace {

bool any_failed = false;

struct Criterion {
    int number;
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }

    void report(const std::string& summary) const {
        if (ok) {
            std::printf("criterion %d: PASS — %s\n", number, summary.c_str());
        } else {
            std::printf("criterion %d: FAIL — %s\n", number, detail.c_str());
            any_failed = true;
        }
        std::fflush(stdout);
    }
};

std::string scheme_dir() {
    if (const char* env = std::getenv("NONUNITAL_SCHEME_DIR")) return env;
    return "data";
}

std::string read_first_line(const std::string& path) {
    std::ifstream in(path);
    std::string line;
    if (!in || !std::getline(in, line)) throw std::runtime_error("cannot read " + path);
    return line;
}

void criterion1() {
    Criterion c{1};
    using namespace ring_e;
    const char table[4][5] = {"0000", "0aa0", "0bb0", "0cc0"};  // rows x, cols y in order 0,a,b,c
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            c.require(to_char(mul(ALL[i], ALL[j])) == table[i][j], "product table");
    for (E x : ALL)
        for (E y : ALL)
            for (E z : ALL) {
                c.require(mul(mul(x, y), z) == mul(x, mul(y, z)), "associativity");
                c.require(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)), "left distributivity");
                c.require(mul(add(x, y), z) == add(mul(x, z), mul(y, z)), "right distributivity");
            }
    c.report("16 products match the ring table; 64 triples associative and distributive");
}

void criterion2() {
    Criterion c{2};
    auto p11 = schemes::paley_tournament(11);
    ECode pure = pure_code(p11, CaseLabel::i);
    c.require(pure.length() == 22, "pure length");
    c.require(pure.is_qsd(), "pure QSD");
    c.require(pure.closure_log2_size() == 22, "pure size 2^22");
    c.require(pure.min_hamming() == 6, "pure d=6");
    c.require(pure.min_lee() == 6, "pure Lee=6");
    // full-enumeration cross-check over all 2^22 codewords
    auto we = pure.weight_enumerator();
    std::uint64_t total = 0;
    std::size_t min_h = 0, min_l = 0;
    for (std::size_t w = 0; w < we.hamming_counts.size(); ++w) {
        total += we.hamming_counts[w];
        if (min_h == 0 && w > 0 && we.hamming_counts[w] > 0) min_h = w;
    }
    for (std::size_t w = 1; w < we.lee_counts.size(); ++w)
        if (we.lee_counts[w] > 0) { min_l = w; break; }
    c.require(total == (std::uint64_t(1) << 22), "enumeration count 2^22");
    c.require(min_h == 6 && min_l == 6, "enumeration min weights");

    ECode bord = bordered_code(p11, CaseLabel::ii);
    c.require(bord.length() == 24, "bordered length");
    c.require(bord.is_qsd(), "bordered QSD");
    c.require(bord.min_hamming() == 8, "bordered d=8");
    c.report("Paley-11: pure (i) QSD [22, 2^22, d=6, Lee 6] with 2^22 enumeration; "
             "bordered (ii) QSD [24, d=8]");
}

void criterion3() {
    Criterion c{3};
    struct Row {
        int q;
        Variant v;
        CaseLabel cl;
        std::size_t len, d;
        bool qsd;
    };
    // QSD flags follow the Table 3 parity conditions; the pure-(ii) and
    // bordered-(i) rows fail them at both q=11 and q=19 (kappa=(q-1)/2 is odd).
    const std::vector<Row> rows = {
        {11, Variant::pure, CaseLabel::i, 22, 6, true},
        {11, Variant::pure, CaseLabel::ii, 22, 7, false},
        {11, Variant::bordered, CaseLabel::i, 24, 7, false},
        {11, Variant::bordered, CaseLabel::ii, 24, 8, true},
        {19, Variant::pure, CaseLabel::i, 38, 8, true},
        {19, Variant::pure, CaseLabel::ii, 38, 7, false},
        {19, Variant::bordered, CaseLabel::i, 40, 8, false},
        {19, Variant::bordered, CaseLabel::ii, 40, 8, true},
    };
    for (const auto& r : rows) {
        auto s = schemes::paley_tournament(r.q);
        ECode code = r.v == Variant::pure ? pure_code(s, r.cl) : bordered_code(s, r.cl);
        std::ostringstream tag;
        tag << "q=" << r.q << " " << variant_name(r.v) << " (" << case_name(r.cl) << ")";
        c.require(code.length() == r.len, tag.str() + " length");
        c.require(code.min_hamming() == r.d, tag.str() + " distance (binary reduction)");
        c.require(code.is_qsd() == r.qsd, tag.str() + " qsd flag");
        c.require(table23_conditions(s, r.v, r.cl).qsd == r.qsd, tag.str() + " table flag");
        if (r.q == 11) {  // full-enumeration cross-check at n=11
            auto we = code.weight_enumerator();
            std::size_t min_h = 0;
            for (std::size_t w = 1; w < we.hamming_counts.size(); ++w)
                if (we.hamming_counts[w] > 0) { min_h = w; break; }
            c.require(min_h == r.d, tag.str() + " full enumeration");
        }
    }
    c.report("all eight distance entries 22:6/7, 24:7/8, 38:8/7, 40:8/8 match; "
             "pure-(ii)/bordered-(i) rows flagged non-QSD per Table 3 parities");
}

void criterion4() {
    Criterion c{4};
    struct Row {
        schemes::SchemeMatrix s;
        Variant v;
        std::size_t len, d;
        std::string tag;
    };
    std::vector<Row> rows;
    rows.push_back({schemes::lattice_graph(4), Variant::pure, 32, 8, "(16,6,2,2) pure (ii)"});
    rows.push_back({schemes::chang_graph(1), Variant::pure, 56, 8, "(28,12,6,4) pure (ii)"});
    rows.push_back({schemes::complement(schemes::triangular_graph(6)), Variant::bordered, 32, 8,
                    "(15,6,1,3) bordered (i)"});
    try {
        auto g = graph6::parse(read_first_line(scheme_dir() + "/srg_27_10_1_5.g6"));
        rows.push_back({schemes::verify_srg(g), Variant::bordered, 56, 8,
                        "(27,10,1,5) bordered (i)"});
    } catch (const std::exception& e) {
        c.require(false, std::string("(27,10,1,5) graph6 load: ") + e.what());
    }
    for (const auto& r : rows) {
        CaseLabel cl = r.v == Variant::pure ? CaseLabel::ii : CaseLabel::i;
        ECode code = r.v == Variant::pure ? pure_code(r.s, cl) : bordered_code(r.s, cl);
        c.require(code.length() == r.len, r.tag + " length");
        c.require(code.is_qsd(), r.tag + " qsd");
        c.require(code.min_hamming() == r.d, r.tag + " distance");
    }
    c.report("mandatory Table 4 rows: lengths 32/56/32/56 all QSD with d=8 "
             "(the (28,12,6,4) row uses a Chang graph)");
}

void check_predicates(Criterion& c, E x, E y, const BitMatrix& m) {
    ECode code = cm_code(x, y, m);
    bool so = code.is_self_orthogonal();
    bool qsd = code.is_qsd();
    bool t4 = qsd && code.is_typeiv();
    std::ostringstream tag;
    tag << "n=" << m.rows() << " x=" << ring_e::to_char(x) << " y=" << ring_e::to_char(y);
    if (cm_self_orthogonal(x, y, m) != so) c.require(false, tag.str() + " self-orthogonality");
    try {
        if (thm6_qsd(x, y, m) != qsd) c.require(false, tag.str() + " qsd");
    } catch (const std::invalid_argument&) {
        if (so) c.require(false, tag.str() + " qsd rejected a self-orthogonal input");
    }
    if (qsd && cm_typeiv(x, y, m) != t4) c.require(false, tag.str() + " type iv");
}

void criterion5() {
    Criterion c{5};
    // n <= 3: every matrix, checked against a word-level brute-force closure
    // as well as the structural decomposition.
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t bits = n * n;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bits) && c.ok; ++mask) {
            BitMatrix m(n, n);
            for (std::size_t b = 0; b < bits; ++b)
                if ((mask >> b) & 1) m.set(b / n, b % n, true);
            for (E x : ring_e::ALL)
                for (E y : ring_e::ALL) {
                    check_predicates(c, x, y, m);
                    std::vector<oracle::Word> gens;
                    for (std::size_t i = 0; i < n; ++i) {
                        oracle::Word w(2 * n, 0);
                        w[i] = std::uint8_t(x);
                        for (std::size_t j = 0; j < n; ++j)
                            if (m.get(i, j)) w[n + j] = std::uint8_t(y);
                        gens.push_back(std::move(w));
                    }
                    auto closure = oracle::module_closure(gens, 2 * n);
                    ECode code = cm_code(x, y, m);
                    if (oracle::self_orthogonal(closure) != code.is_self_orthogonal())
                        c.require(false, "word-level closure disagrees at n<=3");
                }
        }
    }
    // n = 4: every matrix, against the structural closure decomposition.
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << 16) && c.ok; ++mask) {
        BitMatrix m(4, 4);
        for (std::size_t b = 0; b < 16; ++b)
            if ((mask >> b) & 1) m.set(b / 4, b % 4, true);
        for (E x : ring_e::ALL)
            for (E y : ring_e::ALL) check_predicates(c, x, y, m);
    }
    // n = 5, 6: structured matrices plus random samples (exhausting all 2^25
    // and 2^36 matrices is infeasible; documented deviation).
    std::vector<BitMatrix> big;
    for (std::size_t n : {5, 6}) {
        big.push_back(BitMatrix::identity(n));
        big.push_back(BitMatrix::all_ones(n));
        BitMatrix jmi = BitMatrix::all_ones(n);
        for (std::size_t i = 0; i < n; ++i) jmi.set(i, i, false);
        big.push_back(jmi);
        big.push_back(BitMatrix(n, n));
    }
    {
        BitMatrix m6(6, 6);  // rank 3, MM^T = 0
        for (int j : {0, 1}) m6.set(0, j, true);
        for (int j : {2, 3}) m6.set(1, j, true);
        for (int j : {4, 5}) m6.set(2, j, true);
        big.push_back(m6);
    }
    std::mt19937 rng(987654321);
    std::bernoulli_distribution bit(0.5);
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t n = 5 + trial % 2;
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (bit(rng)) m.set(i, j, true);
        big.push_back(m);
    }
    for (const auto& m : big) {
        if (!c.ok) break;
        for (E x : ring_e::ALL)
            for (E y : ring_e::ALL) check_predicates(c, x, y, m);
    }
    c.report("theorem 5/6/7 predicates equal closure checks: exhaustive for n<=4 "
             "(word-level oracle through n=3), structured + 400 random samples at n=5,6");
}

void criterion6() {
    Criterion c{6};
    std::mt19937 rng(24601);
    std::bernoulli_distribution bit(0.5);
    int built = 0;
    while (built < 100 && c.ok) {
        std::size_t n = 4 + rng() % 11;
        std::size_t k = 1 + rng() % (n / 2);
        BitMatrix g(k, n);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (bit(rng)) g.set(i, j, true);
        auto b = binary_code::BinaryCode::from_generators(g);
        if (!b.is_self_orthogonal() || b.dimension() == 0) continue;
        ++built;
        ECode code = ECode::from_self_orthogonal_binary(b);
        c.require(code.residue() == b, "res = B");
        c.require(code.torsion() == b.dual(), "tor = B_perp");
        c.require(code.closure_log2_size() == n, "log2 size = n");
        std::size_t d = code.min_hamming();
        c.require(d <= std::min(b.min_distance(), b.dual().min_distance()),
                  "d(C) <= min(d(B), d(B_perp))");
        // d(C) = d(tor) confirmed by enumeration over the full module
        std::size_t min_enum = 0;
        auto we = code.weight_enumerator();
        for (std::size_t w = 1; w < we.hamming_counts.size(); ++w)
            if (we.hamming_counts[w] > 0) { min_enum = w; break; }
        c.require(min_enum == code.torsion().min_distance(), "d(C) = d(tor) by enumeration");
    }
    c.report("100 random self-orthogonal binary codes (n<=14): res/tor/size/distance "
             "properties hold, d(C)=d(tor) confirmed by enumeration");
}

void criterion7() {
    Criterion c{7};
    std::vector<schemes::SchemeMatrix> schemes_list = {
        schemes::paley_graph(5), schemes::lattice_graph(4), schemes::paley_tournament(11),
        schemes::paley_tournament(19)};
    for (const auto& s : schemes_list)
        for (E r : ring_e::ALL)
            for (E sc : ring_e::ALL)
                for (E t : ring_e::ALL)
                    if (!lemma8_matches_product(r, sc, t, s)) {
                        std::ostringstream tag;
                        tag << "n=" << s.n << " (" << ring_e::to_char(r) << ","
                            << ring_e::to_char(sc) << "," << ring_e::to_char(t) << ")";
                        c.require(false, tag.str());
                    }
    c.report("Lemma 8 coefficient formulas equal Q_E*Q_E^T for all 64 triples on "
             "pentagon, L2(4), Paley-11, Paley-19");
}

void criterion8() {
    Criterion c{8};
    std::vector<schemes::SchemeMatrix> list = {
        schemes::paley_tournament(3), schemes::paley_graph(5), schemes::paley_tournament(11)};
    for (const auto& s : list)
        for (Variant v : {Variant::pure, Variant::bordered}) {
            if (!lemma9_equal(s, v)) {
                std::ostringstream tag;
                tag << "n=" << s.n << " " << variant_name(v);
                c.require(false, tag.str());
            }
        }
    c.report("case (i) and case (iii) codes coincide (pure and bordered) on "
             "Paley-3, pentagon, Paley-11");
}

void criterion9() {
    Criterion c{9};
    std::vector<schemes::SchemeMatrix> list = {
        schemes::paley_graph(5), schemes::paley_graph(13), schemes::paley_graph(17),
        schemes::paley_tournament(7), schemes::paley_tournament(11),
        schemes::paley_tournament(19)};
    for (const auto& s : list) {
        for (E r : {E::zero, E::c, E::a, E::b}) {
            // For unit r the "exactly 2" class needs s = t = r (mixed unit
            // coefficients admit lighter words); for r in {0,c} use s = t = a,
            // except that the pentagon needs s != t to land in "2 or 3".
            E ss = (r == E::a || r == E::b) ? r : E::a;
            E tt = ss;
            if (s.n < 7 && (r == E::zero || r == E::c)) tt = E::b;
            auto dc = thm10_11_distance_check(s, r, ss, tt);
            std::ostringstream tag;
            tag << "n=" << s.n << " r=" << ring_e::to_char(r) << " d=" << dc.distance
                << " predicted " << dc.predicted;
            c.require(dc.matches, tag.str());
            if (r == E::a || r == E::b) c.require(dc.distance == 2, tag.str() + " (want 2)");
            else if (s.n >= 7) c.require(dc.distance == 4, tag.str() + " (want 4)");
            else c.require(dc.distance == 2 || dc.distance == 3, tag.str() + " (want 2 or 3)");
        }
    }
    c.report("theorem 10/11 distance classes verified on Paley graphs q=5,13,17 and "
             "tournaments q=7,11,19 for r in {0,c,a,b}");
}

void criterion10() {
    Criterion c{10};
    // every Type IV code constructed in this run
    struct Item {
        ECode code;
        std::string tag;
    };
    std::vector<Item> typeiv;
    auto add_if_typeiv = [&](ECode code, std::string tag) {
        if (code.is_typeiv()) typeiv.push_back({std::move(code), std::move(tag)});
    };
    add_if_typeiv(pure_code(schemes::paley_tournament(11), CaseLabel::i), "Paley-11 pure (i)");
    add_if_typeiv(bordered_code(schemes::paley_tournament(11), CaseLabel::ii),
                  "Paley-11 bordered (ii)");
    add_if_typeiv(pure_code(schemes::paley_tournament(19), CaseLabel::i), "Paley-19 pure (i)");
    add_if_typeiv(bordered_code(schemes::paley_tournament(19), CaseLabel::ii),
                  "Paley-19 bordered (ii)");
    add_if_typeiv(pure_code(schemes::lattice_graph(4), CaseLabel::ii), "L2(4) pure (ii)");
    add_if_typeiv(bordered_code(schemes::complement(schemes::triangular_graph(6)), CaseLabel::i),
                  "comp T(6) bordered (i)");
    add_if_typeiv(cm_code(E::a, E::a, schemes::paley_tournament(3).adj), "C(M) Paley-3");
    c.require(typeiv.size() == 7, "expected 7 Type IV constructions");
    int macwilliams_checked = 0;
    for (const auto& item : typeiv) {
        // the exact MacWilliams identity needs the full weight enumerator, so
        // restrict it to codes whose 2^n codewords are enumerable
        if (item.code.closure_log2_size() <= 24) {
            c.require(item.code.macwilliams_formally_self_dual(), item.tag + " MacWilliams");
            ++macwilliams_checked;
        }
        c.require(item.code.min_hamming() <= e_code::typeiv_bound(item.code.length()),
                  item.tag + " bound");
    }
    c.require(macwilliams_checked >= 3, "expected at least 3 enumerable Type IV codes");
    for (std::size_t n = 2; n <= 1000; ++n)
        if (e_code::typeiv_bound(n) > e_code::old_bound(n)) {
            c.require(false, "bound sweep fails at n=" + std::to_string(n));
            break;
        }
    c.report("7 constructed Type IV codes satisfy the "
             "2(floor(n/6)+1) bound, with exact MacWilliams self-duality on the enumerable ones; new bound <= old bound for 2 <= n <= 1000");
}

void criterion11() {
    Criterion c{11};
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 1000 && c.ok; ++trial) {
        std::size_t n = 1 + rng() % 62;
        BitMatrix a(n, n);
        std::bernoulli_distribution bit(std::uniform_real_distribution<>(0.05, 0.95)(rng));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (bit(rng)) {
                    a.set(i, j, true);
                    a.set(j, i, true);
                }
        std::string enc = graph6::encode(a);
        if (!(graph6::parse(enc) == a)) c.require(false, "round trip, n=" + std::to_string(n));
    }
    c.report("graph6 decode(encode(G)) = G on 1000 random graphs of order <= 62");
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::printf("%s (%lld ms total)\n", any_failed ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS",
                static_cast<long long>(dt));
    return any_failed ? 1 : 0;
}
