// Command-line front end for constructing and analyzing codes over the
// non-unital ring E, ingesting association schemes, running verification
// suites, and reproducing the reference tables.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nonunital/constructions.hpp"
#include "nonunital/graph6.hpp"

using json = nlohmann::json;
using namespace nonunital;
using namespace nonunital::constructions;
using gf2::BitMatrix;
using ring_e::E;
using ring_e::EVector;

namespace {

constexpr int EXIT_OK = 0;
constexpr int EXIT_VERIFY_FAIL = 1;
constexpr int EXIT_USAGE = 2;

struct GlobalOptions {
    bool table = false;                       // aligned-text output instead of JSON
    std::size_t max_enumeration = 28;         // dimension cap for exhaustive search
    unsigned workers = 0;                     // 0 = available parallelism
    std::string manifest_path;                // defaults to <scheme dir>/manifest.json
};

binary_code::EnumerationOptions enum_opts(const GlobalOptions& g) {
    return {g.max_enumeration, g.workers};
}

std::string scheme_dir() {
    if (const char* env = std::getenv("NONUNITAL_SCHEME_DIR")) return env;
    return "data";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string first_line(const std::string& text) {
    auto pos = text.find('\n');
    return pos == std::string::npos ? text : text.substr(0, pos);
}

schemes::SchemeMatrix load_graph6_scheme(const std::string& path) {
    return schemes::verify_srg(graph6::parse(first_line(read_file(path))));
}

/// Resolves a manifest "source" string: builtin:<family>:<param> or file:<name>.
schemes::SchemeMatrix load_source(const std::string& source) {
    if (source.rfind("file:", 0) == 0)
        return load_graph6_scheme(scheme_dir() + "/" + source.substr(5));
    if (source.rfind("builtin:", 0) != 0)
        throw std::runtime_error("unknown scheme source: " + source);
    std::string rest = source.substr(8);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw std::runtime_error("malformed builtin source: " + source);
    std::string family = rest.substr(0, colon);
    std::size_t q = std::stoul(rest.substr(colon + 1));
    if (family == "paley-graph") return schemes::paley_graph(q);
    if (family == "paley-tournament") return schemes::paley_tournament(q);
    if (family == "triangular") return schemes::triangular_graph(q);
    if (family == "lattice") return schemes::lattice_graph(q);
    if (family == "chang") return schemes::chang_graph(int(q));
    if (family == "complement-triangular")
        return schemes::complement(schemes::triangular_graph(q));
    throw std::runtime_error("unknown builtin scheme family: " + family);
}

json load_manifest(const GlobalOptions& g) {
    std::string path = g.manifest_path.empty() ? scheme_dir() + "/manifest.json" : g.manifest_path;
    return json::parse(read_file(path));
}

/// Finds a manifest scheme by exact (n, kappa, lambda, mu), preferring an
/// entry named `prefer` when several share the parameters.
std::optional<schemes::SchemeMatrix> find_scheme(const json& manifest, schemes::SchemeKind kind,
                                                 std::array<int, 4> params,
                                                 const std::string& prefer = "") {
    const json* best = nullptr;
    for (const auto& entry : manifest.at("schemes")) {
        if (entry.at("kind").get<std::string>() != (kind == schemes::SchemeKind::srg ? "srg" : "drt"))
            continue;
        auto p = entry.at("params").get<std::vector<int>>();
        if (p.size() != 4) continue;
        if (p[0] != params[0] || p[1] != params[1] || p[2] != params[2] || p[3] != params[3])
            continue;
        if (!best || entry.at("name").get<std::string>() == prefer) best = &entry;
    }
    if (!best) return std::nullopt;
    auto s = load_source(best->at("source").get<std::string>());
    return schemes::verify(kind, s.adj);
}

json scheme_json(const schemes::SchemeMatrix& s) {
    return {{"kind", s.kind == schemes::SchemeKind::srg ? "srg" : "drt"},
            {"n", s.n},
            {"kappa", s.kappa},
            {"lambda", s.lambda},
            {"mu", s.mu}};
}

json report_record(const std::string& id, const schemes::SchemeMatrix& s, Variant v, CaseLabel cl,
                   const ECode& code, const GlobalOptions& g) {
    auto opts = enum_opts(g);
    auto cond = table23_conditions(s, v, cl);
    bool qsd = code.is_qsd();
    bool typeiv = qsd && code.is_typeiv();
    json rec = {
        {"construction", id},
        {"scheme", scheme_json(s)},
        {"variant", variant_name(v)},
        {"case", case_name(cl)},
        {"length", code.length()},
        {"log2_size", code.closure_log2_size()},
        {"qsd", qsd},
        {"typeiv", typeiv},
        {"d_hamming", code.min_hamming(opts)},
        {"d_lee", code.min_lee(opts)},
        {"typeiv_bound", e_code::typeiv_bound(code.length())},
        {"old_bound", e_code::old_bound(code.length())},
        {"rule", cond.rule},
    };
    json warnings = json::array();
    if (s.n < 7 && v == Variant::pure)
        warnings.push_back("scheme order n < 7: the pure-construction distance class "
                           "degenerates to 2 or 3 instead of exactly 4");
    if (cond.qsd != qsd)
        warnings.push_back("table parity prediction disagrees with the structural QSD check");
    rec["warnings"] = warnings;
    return rec;
}

void print_json_or_table(const json& j, const GlobalOptions& g) {
    if (!g.table) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // aligned key/value rendering, arrays-of-objects as one row per entry
    std::function<void(const json&, int)> render = [&](const json& node, int indent) {
        std::string pad(indent, ' ');
        if (node.is_object()) {
            std::size_t width = 0;
            for (auto& [k, v] : node.items()) width = std::max(width, k.size());
            for (auto& [k, v] : node.items()) {
                if (v.is_object() || v.is_array()) {
                    std::cout << pad << k << ":\n";
                    render(v, indent + 2);
                } else {
                    std::cout << pad << k << std::string(width - k.size() + 1, ' ')
                              << v.dump() << "\n";
                }
            }
        } else if (node.is_array()) {
            for (const auto& v : node) {
                if (v.is_object() || v.is_array()) {
                    render(v, indent + 2);
                    std::cout << "\n";
                } else {
                    std::cout << pad << "- " << v.dump() << "\n";
                }
            }
        } else {
            std::cout << pad << node.dump() << "\n";
        }
    };
    render(j, 0);
}

// ---------------------------------------------------------------- construct

struct SchemeSelection {
    std::size_t paley_graph = 0, paley_tournament = 0, triangular = 0, lattice = 0;
    std::size_t complement_triangular = 0;
    int chang = 0;
    std::string graph6_path, matrix_path, scheme_name, kind = "auto";
};

void add_scheme_flags(CLI::App* cmd, SchemeSelection& sel) {
    cmd->add_option("--paley-graph", sel.paley_graph, "Paley graph on q vertices");
    cmd->add_option("--paley-tournament", sel.paley_tournament, "Paley tournament on q vertices");
    cmd->add_option("--triangular", sel.triangular, "triangular graph T(m)");
    cmd->add_option("--lattice", sel.lattice, "lattice graph L2(m)");
    cmd->add_option("--complement-triangular", sel.complement_triangular,
                    "complement of the triangular graph T(m)");
    cmd->add_option("--chang", sel.chang, "Chang graph 1, 2 or 3");
    cmd->add_option("--graph6", sel.graph6_path, "graph6 file with an SRG");
    cmd->add_option("--matrix", sel.matrix_path, "0/1 adjacency matrix text file");
    cmd->add_option("--scheme", sel.scheme_name, "scheme name from the manifest");
    cmd->add_option("--kind", sel.kind, "srg, drt or auto (for --matrix/--scheme)");
}

schemes::SchemeMatrix resolve_scheme(const SchemeSelection& sel, const GlobalOptions& g) {
    if (sel.paley_graph) return schemes::paley_graph(sel.paley_graph);
    if (sel.paley_tournament) return schemes::paley_tournament(sel.paley_tournament);
    if (sel.triangular) return schemes::triangular_graph(sel.triangular);
    if (sel.lattice) return schemes::lattice_graph(sel.lattice);
    if (sel.complement_triangular)
        return schemes::complement(schemes::triangular_graph(sel.complement_triangular));
    if (sel.chang) return schemes::chang_graph(sel.chang);
    if (!sel.graph6_path.empty()) return load_graph6_scheme(sel.graph6_path);
    if (!sel.matrix_path.empty()) {
        BitMatrix a = schemes::parse_matrix_text(read_file(sel.matrix_path));
        if (sel.kind == "srg") return schemes::verify_srg(a);
        if (sel.kind == "drt") return schemes::verify_drt(a);
        try {
            return schemes::verify_srg(a);
        } catch (const schemes::SchemeError&) {
            return schemes::verify_drt(a);
        }
    }
    if (!sel.scheme_name.empty()) {
        auto manifest = load_manifest(g);
        for (const auto& entry : manifest.at("schemes"))
            if (entry.at("name").get<std::string>() == sel.scheme_name) {
                auto s = load_source(entry.at("source").get<std::string>());
                auto kind = entry.at("kind").get<std::string>() == "drt" ? schemes::SchemeKind::drt
                                                                         : schemes::SchemeKind::srg;
                return schemes::verify(kind, s.adj);
            }
        throw std::runtime_error("scheme not in manifest: " + sel.scheme_name);
    }
    throw std::runtime_error("no scheme source given (see --help)");
}

CaseLabel parse_case(const std::string& c) {
    if (c == "i") return CaseLabel::i;
    if (c == "ii") return CaseLabel::ii;
    if (c == "iii") return CaseLabel::iii;
    throw std::runtime_error("unknown case: " + c + " (expected i, ii or iii)");
}

Variant parse_variant(const std::string& v) {
    if (v == "pure") return Variant::pure;
    if (v == "bordered") return Variant::bordered;
    throw std::runtime_error("unknown variant: " + v + " (expected pure or bordered)");
}

int cmd_construct(const SchemeSelection& sel, const std::string& variant_str,
                  const std::string& case_str, const GlobalOptions& g) {
    auto s = resolve_scheme(sel, g);
    Variant v = parse_variant(variant_str);
    CaseLabel cl = parse_case(case_str);
    ECode code = v == Variant::pure ? pure_code(s, cl) : bordered_code(s, cl);
    std::ostringstream id;
    id << variant_name(v) << " (" << case_name(cl) << ") from "
       << (s.kind == schemes::SchemeKind::srg ? "srg" : "drt") << "(" << s.n << "," << s.kappa
       << "," << s.lambda << "," << s.mu << ")";
    print_json_or_table(report_record(id.str(), s, v, cl, code, g), g);
    return EXIT_OK;
}

// ------------------------------------------------------------------ analyze

std::vector<EVector> parse_e_rows(const std::string& text) {
    std::vector<EVector> rows;
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        EVector v = EVector::from_string(line);
        if (n == 0) n = v.size();
        else if (v.size() != n) throw std::runtime_error("ragged generator rows");
        rows.push_back(std::move(v));
    }
    if (rows.empty()) throw std::runtime_error("no generator rows in input");
    return rows;
}

int cmd_analyze(const std::string& path, bool use_left_span, const GlobalOptions& g) {
    auto rows = parse_e_rows(read_file(path));
    std::size_t n = rows[0].size();
    ECode code = use_left_span ? left_span(rows, n) : ECode::span_closure(rows, n);
    auto opts = enum_opts(g);
    bool qsd = code.is_qsd();
    json rec = {
        {"source", path},
        {"span", use_left_span ? "left multiples {xG}" : "module closure of the rows"},
        {"length", code.length()},
        {"log2_size", code.closure_log2_size()},
        {"self_orthogonal", code.is_self_orthogonal()},
        {"qsd", qsd},
        {"typeiv", qsd && code.is_typeiv()},
        {"residue_dimension", code.residue().dimension()},
        {"torsion_dimension", code.torsion().dimension()},
    };
    if (code.torsion().dimension() > 0) {
        rec["d_hamming"] = code.min_hamming(opts);
        rec["d_lee"] = code.min_lee(opts);
    }
    print_json_or_table(rec, g);
    return EXIT_OK;
}

// ------------------------------------------------------------------- ingest

int cmd_ingest(const SchemeSelection& sel, const std::string& name, const GlobalOptions& g) {
    auto s = resolve_scheme(sel, g);
    auto m2 = schemes::mod2_params(s);
    json rec = {
        {"name", name.empty() ? "unnamed" : name},
        {"scheme", scheme_json(s)},
        {"mod2", {{"lambda", m2.lambda}, {"mu", m2.mu}, {"nu", m2.nu}, {"n_parity", m2.n_parity}}},
        {"graph6", s.kind == schemes::SchemeKind::srg ? json(graph6::encode(s.adj)) : json()},
    };
    print_json_or_table(rec, g);
    return EXIT_OK;
}

// ------------------------------------------------------------------- verify

struct SuiteResult {
    json checks = json::array();
    bool ok = true;

    void add(const std::string& name, bool pass, const std::string& note = "") {
        json c = {{"check", name}, {"pass", pass}};
        if (!note.empty()) c["note"] = note;
        checks.push_back(c);
        ok = ok && pass;
    }
};

void verify_ring(SuiteResult& out) {
    using namespace ring_e;
    const char table[4][5] = {"0000", "0aa0", "0bb0", "0cc0"};  // rows x, cols y in order 0,a,b,c
    bool products = true, assoc = true, distrib = true;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            products &= to_char(mul(ALL[i], ALL[j])) == table[i][j];
    for (E x : ALL)
        for (E y : ALL) {
            for (E z : ALL) {
                assoc &= mul(mul(x, y), z) == mul(x, mul(y, z));
                distrib &= mul(x, add(y, z)) == add(mul(x, y), mul(x, z)) &&
                           mul(add(x, y), z) == add(mul(x, z), mul(y, z));
            }
        }
    out.add("ring product table (16 entries)", products);
    out.add("associativity (64 triples)", assoc);
    out.add("distributivity (64 triples)", distrib);
}

void verify_schemes(SuiteResult& out) {
    auto try_scheme = [&](const std::string& name, auto&& build) {
        try {
            auto s = build();
            auto m2 = schemes::mod2_params(s);
            // defining equation check is part of the verify_* constructors;
            // additionally confirm the mod-2 Gram identity directly
            BitMatrix gram = gf2::mul_transpose(s.adj, s.adj);
            BitMatrix expect(s.n, s.n);
            for (std::size_t i = 0; i < s.n; ++i)
                for (std::size_t j = 0; j < s.n; ++j) {
                    int v = (i == j ? m2.lambda : 0) + m2.mu + (s.adj.get(i, j) ? m2.nu : 0);
                    if (v % 2) expect.set(i, j, true);
                }
            out.add("scheme " + name, schemes::verify(s.kind, s.adj).n == s.n && gram == expect);
        } catch (const std::exception& e) {
            out.add("scheme " + name, false, e.what());
        }
    };
    for (std::size_t q : {5, 13, 17})
        try_scheme("paley graph " + std::to_string(q), [q] { return schemes::paley_graph(q); });
    for (std::size_t q : {3, 7, 11, 19})
        try_scheme("paley tournament " + std::to_string(q),
                   [q] { return schemes::paley_tournament(q); });
    try_scheme("triangular T(8)", [] { return schemes::triangular_graph(8); });
    try_scheme("lattice L2(4)", [] { return schemes::lattice_graph(4); });
    try_scheme("complement of T(6)",
               [] { return schemes::complement(schemes::triangular_graph(6)); });
    for (int k : {1, 2, 3})
        try_scheme("chang " + std::to_string(k), [k] { return schemes::chang_graph(k); });
}

void verify_theorems(SuiteResult& out) {
    // Theorem 5/6/7 predicates against the structural closure, exhaustively
    // for all binary M with n <= 3 and all 16 (x, y) pairs.
    bool agree = true;
    for (std::size_t n = 1; n <= 3 && agree; ++n) {
        const std::size_t bits = n * n;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bits) && agree; ++mask) {
            BitMatrix m(n, n);
            for (std::size_t b = 0; b < bits; ++b)
                if ((mask >> b) & 1) m.set(b / n, b % n, true);
            for (E x : ring_e::ALL)
                for (E y : ring_e::ALL) {
                    ECode code = cm_code(x, y, m);
                    agree &= cm_self_orthogonal(x, y, m) == code.is_self_orthogonal();
                    try {
                        agree &= thm6_qsd(x, y, m) == code.is_qsd();
                    } catch (const std::invalid_argument&) {
                        agree &= !code.is_self_orthogonal();
                    }
                    if (code.is_qsd())
                        agree &= cm_typeiv(x, y, m) == (code.is_qsd() && code.is_typeiv());
                }
        }
    }
    out.add("theorem 5/6/7 vs closure, all M with n <= 3, all (x,y)", agree);

    bool lemma8 = true;
    for (const auto& s : {schemes::paley_graph(5), schemes::lattice_graph(4),
                          schemes::paley_tournament(11)})
        for (E r : ring_e::ALL)
            for (E sc : ring_e::ALL)
                for (E t : ring_e::ALL) lemma8 &= lemma8_matches_product(r, sc, t, s);
    out.add("lemma 8 coefficients (pentagon, L2(4), Paley-11; 64 triples each)", lemma8);

    bool lemma9 = true;
    for (const auto& s : {schemes::paley_tournament(3), schemes::paley_graph(5),
                          schemes::paley_tournament(11)})
        for (Variant v : {Variant::pure, Variant::bordered}) lemma9 &= lemma9_equal(s, v);
    out.add("lemma 9 case (i) = case (iii) (Paley-3, pentagon, Paley-11)", lemma9);

    bool thm1011 = true;
    thm1011 &= thm10_11_distance_check(schemes::paley_graph(5), E::zero, E::a, E::b).matches;
    thm1011 &= thm10_11_distance_check(schemes::paley_graph(13), E::zero, E::a, E::a).matches;
    thm1011 &= thm10_11_distance_check(schemes::paley_tournament(11), E::a, E::a, E::a).matches;
    out.add("theorem 10/11 distance classes (pentagon, Paley-13, Paley-11)", thm1011);
}

int cmd_verify(const std::string& suite, const GlobalOptions& g) {
    SuiteResult res;
    if (suite == "ring" || suite == "all") verify_ring(res);
    if (suite == "schemes" || suite == "all") verify_schemes(res);
    if (suite == "theorems" || suite == "all") verify_theorems(res);
    if (res.checks.empty()) throw std::runtime_error("unknown suite: " + suite);
    json rec = {{"suite", suite}, {"pass", res.ok}, {"checks", res.checks}};
    print_json_or_table(rec, g);
    return res.ok ? EXIT_OK : EXIT_VERIFY_FAIL;
}

// ---------------------------------------------------------------- reproduce

struct TableRow {
    std::string label;
    schemes::SchemeKind kind;
    std::array<int, 4> params;
    std::string prefer;  // manifest name preference when parameters repeat
    Variant variant;
    CaseLabel cl;
    std::size_t length, d_hamming, d_lee;
};

json run_row(const TableRow& row, const json& manifest, const GlobalOptions& g, bool& any_fail) {
    json rec = {{"row", row.label},
                {"params", row.params},
                {"variant", variant_name(row.variant)},
                {"case", case_name(row.cl)},
                {"expected", {{"length", row.length}, {"d_hamming", row.d_hamming},
                              {"d_lee", row.d_lee}}}};
    std::optional<schemes::SchemeMatrix> s;
    try {
        s = find_scheme(manifest, row.kind, row.params, row.prefer);
    } catch (const std::exception& e) {
        rec["status"] = std::string("skipped: scheme not supplied (") + e.what() + ")";
        return rec;
    }
    if (!s) {
        rec["status"] = "skipped: scheme not supplied";
        return rec;
    }
    ECode code = row.variant == Variant::pure ? pure_code(*s, row.cl) : bordered_code(*s, row.cl);
    auto opts = enum_opts(g);
    std::size_t dh = code.min_hamming(opts), dl = code.min_lee(opts);
    bool qsd = code.is_qsd();
    rec["computed"] = {{"length", code.length()}, {"d_hamming", dh}, {"d_lee", dl},
                       {"qsd", qsd}, {"typeiv", qsd && code.is_typeiv()}};
    bool pass = code.length() == row.length && dh == row.d_hamming && dl == row.d_lee;
    rec["status"] = pass ? "pass" : "fail";
    if (!pass) any_fail = true;
    return rec;
}

int cmd_reproduce(const std::string& target, const GlobalOptions& g) {
    bool any_fail = false;
    json rows = json::array();
    const auto srg = schemes::SchemeKind::srg;
    const auto drt = schemes::SchemeKind::drt;
    if (target == "bounds") {
        bool ok = true;
        for (std::size_t n = 2; n <= 100; ++n)
            ok &= e_code::typeiv_bound(n) <= e_code::old_bound(n);
        json rec = {{"target", "bounds"},
                    {"range", "2..100"},
                    {"pass", ok},
                    {"statement", "2*(floor(n/6)+1) <= 2*floor((n+2)/4)"}};
        print_json_or_table(rec, g);
        return ok ? EXIT_OK : EXIT_VERIFY_FAIL;
    }
    std::vector<TableRow> table;
    if (target == "example1") {
        table = {
            {"pure (i) of the Paley-11 tournament", drt, {11, 5, 2, 3}, "", Variant::pure,
             CaseLabel::i, 22, 6, 6},
            {"bordered (ii) of the Paley-11 tournament", drt, {11, 5, 2, 3}, "",
             Variant::bordered, CaseLabel::ii, 24, 8, 8},
        };
    } else if (target == "table5") {
        table = {
            {"n=11 pure (i)", drt, {11, 5, 2, 3}, "", Variant::pure, CaseLabel::i, 22, 6, 6},
            {"n=11 pure (ii)", drt, {11, 5, 2, 3}, "", Variant::pure, CaseLabel::ii, 22, 7, 7},
            {"n=11 bordered (i)", drt, {11, 5, 2, 3}, "", Variant::bordered, CaseLabel::i, 24, 7, 7},
            {"n=11 bordered (ii)", drt, {11, 5, 2, 3}, "", Variant::bordered, CaseLabel::ii, 24, 8, 8},
            {"n=19 pure (i)", drt, {19, 9, 4, 5}, "", Variant::pure, CaseLabel::i, 38, 8, 8},
            {"n=19 pure (ii)", drt, {19, 9, 4, 5}, "", Variant::pure, CaseLabel::ii, 38, 7, 7},
            {"n=19 bordered (i)", drt, {19, 9, 4, 5}, "", Variant::bordered, CaseLabel::i, 40, 8, 8},
            {"n=19 bordered (ii)", drt, {19, 9, 4, 5}, "", Variant::bordered, CaseLabel::ii, 40, 8, 8},
        };
    } else if (target == "table4") {
        table = {
            {"(36-15-6-6) pure", srg, {36, 15, 6, 6}, "", Variant::pure, CaseLabel::ii, 72, 12, 12},
            {"(16-6-2-2) pure", srg, {16, 6, 2, 2}, "", Variant::pure, CaseLabel::ii, 32, 8, 8},
            {"(28-12-6-4) pure", srg, {28, 12, 6, 4}, "chang-1", Variant::pure, CaseLabel::ii, 56, 8, 8},
            {"(35-16-6-8) pure", srg, {35, 16, 6, 8}, "", Variant::pure, CaseLabel::ii, 70, 10, 10},
            {"(36-14-4-6) pure", srg, {36, 14, 4, 6}, "", Variant::pure, CaseLabel::ii, 72, 12, 12},
            {"(40-12-2-4) pure", srg, {40, 12, 2, 4}, "", Variant::pure, CaseLabel::ii, 80, 12, 12},
            {"(15-6-1-3) bordered", srg, {15, 6, 1, 3}, "", Variant::bordered, CaseLabel::i, 32, 8, 8},
            {"(27-10-1-5) bordered", srg, {27, 10, 1, 5}, "", Variant::bordered, CaseLabel::i, 56, 8, 8},
            {"(45-12-3-3) bordered", srg, {45, 12, 3, 3}, "", Variant::bordered, CaseLabel::i, 92, 12, 12},
        };
    } else {
        throw std::runtime_error("unknown reproduce target: " + target);
    }
    json manifest;
    try {
        manifest = load_manifest(g);
    } catch (const std::exception& e) {
        manifest = {{"schemes", json::array()}};
    }
    for (const auto& row : table) rows.push_back(run_row(row, manifest, g, any_fail));
    json rec = {{"target", target}, {"pass", !any_fail}, {"rows", rows}};
    print_json_or_table(rec, g);
    return any_fail ? EXIT_VERIFY_FAIL : EXIT_OK;
}

// ---------------------------------------------------------------- export-f4

int cmd_export_f4(const SchemeSelection& sel, const std::string& variant_str,
                  const std::string& case_str, const std::string& generators_path,
                  const std::string& out_path, const GlobalOptions& g) {
    std::vector<EVector> rows;
    std::size_t n = 0;
    ECode code = ECode::zero_code(0);
    if (!generators_path.empty()) {
        rows = parse_e_rows(read_file(generators_path));
        n = rows[0].size();
        code = ECode::span_closure(rows, n);
    } else {
        auto s = resolve_scheme(sel, g);
        Variant v = parse_variant(variant_str);
        auto [r, sc, t] = case_rst(parse_case(case_str));
        rows = v == Variant::pure ? pure_generator_rows(s, r, sc, t)
                                  : bordered_generator_rows(s, r, sc, t);
        n = rows[0].size();
        code = v == Variant::pure ? pure_code(s, r, sc, t) : bordered_code(s, r, sc, t);
    }
    // G' = (phi(aG); phi(bG)), one row per generator and unit
    e_code::F4Matrix f4;
    f4.cols = n;
    for (E unit : {E::a, E::b})
        for (const auto& row : rows) {
            EVector scaled = row.left_mul(unit);
            std::vector<ring_e::F4> out(n, ring_e::F4::zero);
            for (std::size_t j = 0; j < n; ++j) out[j] = ring_e::phi(scaled.get(j));
            f4.rows.push_back(std::move(out));
        }
    auto opts = enum_opts(g);
    auto we = code.weight_enumerator(opts);
    std::ostringstream body;
    body << f4.to_text();
    body << "hamming_enumerator";
    for (auto cnt : we.hamming_counts) body << " " << cnt;
    body << "\n";
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << body.str();
    json rec = {{"out", out_path},
                {"rows", f4.rows.size()},
                {"cols", f4.cols},
                {"length", code.length()},
                {"log2_size", code.closure_log2_size()},
                {"hamming_enumerator", we.hamming_counts}};
    print_json_or_table(rec, g);
    return EXIT_OK;
}

// --------------------------------------------------------------- ring-table

int cmd_ring_table(const GlobalOptions& g) {
    using namespace ring_e;
    json add_t = json::array(), mul_t = json::array();
    for (E x : ALL) {
        json ra = json::array(), rm = json::array();
        for (E y : ALL) {
            ra.push_back(std::string(1, to_char(add(x, y))));
            rm.push_back(std::string(1, to_char(mul(x, y))));
        }
        add_t.push_back(ra);
        mul_t.push_back(rm);
    }
    if (g.table) {
        auto render = [](const char* title, const json& t) {
            std::cout << title << "\n    0 a b c\n";
            const char* names = "0abc";
            for (int i = 0; i < 4; ++i) {
                std::cout << "  " << names[i] << " ";
                for (int j = 0; j < 4; ++j)
                    std::cout << t[i][j].get<std::string>() << " ";
                std::cout << "\n";
            }
        };
        render("addition", add_t);
        render("multiplication (row * column)", mul_t);
    } else {
        print_json_or_table({{"elements", {"0", "a", "b", "c"}}, {"add", add_t}, {"mul", mul_t}}, g);
    }
    return EXIT_OK;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"codes over the non-unital ring E = {0, a, b, c}"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_flag("--table", g.table, "aligned text output instead of JSON");
    app.add_option("--max-enumeration", g.max_enumeration,
                   "dimension cap for exhaustive codeword enumeration");
    app.add_option("--workers", g.workers, "worker threads (0 = available parallelism)");
    app.add_option("--manifest", g.manifest_path, "scheme manifest path");

    SchemeSelection con_sel, ing_sel, exp_sel;
    std::string con_variant = "pure", con_case = "i";
    auto* construct = app.add_subcommand("construct", "build and analyze a scheme code");
    add_scheme_flags(construct, con_sel);
    construct->add_option("--variant", con_variant, "pure or bordered");
    construct->add_option("--case", con_case, "coefficient case i, ii or iii");

    std::string analyze_path;
    bool analyze_left = false;
    auto* analyze = app.add_subcommand("analyze", "analyze a generator matrix over E");
    analyze->add_option("file", analyze_path, "text file, one row per line over 0abc")
        ->required();
    analyze->add_flag("--left-span", analyze_left,
                      "span {xG} by left multiples instead of the module closure");

    std::string ingest_name;
    auto* ingest = app.add_subcommand("ingest", "validate a scheme and print its record");
    add_scheme_flags(ingest, ing_sel);
    ingest->add_option("--name", ingest_name, "record name");

    std::string verify_suite = "all";
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", verify_suite, "ring, schemes, theorems or all");

    std::string repro_target;
    auto* reproduce = app.add_subcommand("reproduce", "reproduce a reference table");
    reproduce->add_option("target", repro_target, "example1, table4, table5 or bounds")
        ->required();

    std::string exp_variant = "pure", exp_case = "i", exp_generators, exp_out = "f4_export.txt";
    auto* exportf4 = app.add_subcommand("export-f4", "export the additive F4 image");
    add_scheme_flags(exportf4, exp_sel);
    exportf4->add_option("--variant", exp_variant, "pure or bordered");
    exportf4->add_option("--case", exp_case, "coefficient case i, ii or iii");
    exportf4->add_option("--generators", exp_generators, "generator matrix file over E");
    exportf4->add_option("--out", exp_out, "output file");

    app.add_subcommand("ring-table", "print the addition and multiplication tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? EXIT_OK : EXIT_USAGE;
    }

    try {
        if (construct->parsed()) return cmd_construct(con_sel, con_variant, con_case, g);
        if (analyze->parsed()) return cmd_analyze(analyze_path, analyze_left, g);
        if (ingest->parsed()) return cmd_ingest(ing_sel, ingest_name, g);
        if (verify->parsed()) return cmd_verify(verify_suite, g);
        if (reproduce->parsed()) return cmd_reproduce(repro_target, g);
        if (exportf4->parsed())
            return cmd_export_f4(exp_sel, exp_variant, exp_case, exp_generators, exp_out, g);
        return cmd_ring_table(g);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
}
