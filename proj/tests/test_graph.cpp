#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "l2zeta/char_poly.hpp"
#include "l2zeta/graph.hpp"

using namespace l2zeta;

namespace {

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

UPoly up(std::initializer_list<long> coeffs) {
    UPoly p;
    for (long c : coeffs) p.c.emplace_back(c);
    p.trim();
    return p;
}

}  // namespace

TEST_CASE("parsing and validation") {
    VoltageGraph line = parse_graph(fixture("line.json"));
    CHECK(line.vertex_count() == 1);
    CHECK(line.edge_count() == 1);
    CHECK(line.degrees() == std::vector<int>{2});

    CHECK_THROWS_AS(parse_graph(std::string("{\"vertices\":[],\"edges\":[]}")), validation_error);
    CHECK_THROWS_AS(parse_graph(std::string("not json")), validation_error);
    CHECK_THROWS_AS(
        parse_graph(std::string(
            R"({"vertices":["a"],"edges":[{"from":"a","to":"z","shift":0}]})")),
        validation_error);
    CHECK_THROWS_AS(
        parse_graph(std::string(
            R"({"vertices":["a"],"edges":[{"from":"a","to":"a","shift":0.5}]})")),
        validation_error);
}

TEST_CASE("adjacency matrices of the named examples") {
    VoltageGraph line = parse_graph(fixture("line.json"));
    Matrix<LaurentPoly> d = line.adjacency();
    LaurentPoly expect = LaurentPoly::term(1, up({1}));
    expect += LaurentPoly::term(-1, up({1}));
    CHECK(d.at(0, 0) == expect);

    VoltageGraph two = parse_graph(fixture("two_loops.json"));
    Matrix<LaurentPoly> d2 = two.adjacency();
    LaurentPoly expect2 = expect;
    expect2 += LaurentPoly(up({2}));  // 1/t + 2 + t
    CHECK(d2.at(0, 0) == expect2);

    VoltageGraph saw = parse_graph(fixture("sawtooth.json"));
    Matrix<LaurentPoly> ds = saw.adjacency();
    CHECK(ds.at(0, 0) == expect);
    CHECK(ds.at(1, 1) == expect);
    LaurentPoly upper = LaurentPoly(up({1}));
    upper += LaurentPoly::term(-1, up({1}));  // 1 + 1/t
    CHECK(ds.at(0, 1) == upper);
    CHECK(ds.at(1, 0) == upper.inverted());
}

TEST_CASE("delta_u examples and symmetry") {
    VoltageGraph line = parse_graph(fixture("line.json"));
    LaurentPoly d = laurent_det(line.delta_u());
    LaurentPoly expect = LaurentPoly(up({1, 0, 1}));
    expect += LaurentPoly::term(1, up({0, -1}));
    expect += LaurentPoly::term(-1, up({0, -1}));
    CHECK(d == expect);

    VoltageGraph saw = parse_graph(fixture("sawtooth.json"));
    Matrix<LaurentPoly> m = saw.delta_u();
    LaurentPoly diag = LaurentPoly(up({1, 0, 3}));
    diag += LaurentPoly::term(1, up({0, -1}));
    diag += LaurentPoly::term(-1, up({0, -1}));
    CHECK(m.at(0, 0) == diag);
    CHECK(m.at(1, 1) == diag);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) CHECK(m.at(i, j) == m.at(j, i).inverted());
    // at u = 0 the matrix is the identity
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            cplx v = m.at(i, j)(0.0, std::polar(1.0, 0.7));
            CHECK(std::abs(v - (i == j ? 1.0 : 0.0)) < 1e-14);
        }
}

TEST_CASE("graph invariants") {
    VoltageGraph two = parse_graph(fixture("two_loops.json"));
    CHECK(two.euler_char() == -1);
    CHECK(two.regular_q() == 3);

    VoltageGraph line = parse_graph(fixture("line.json"));
    CHECK(line.euler_char() == 0);
    CHECK(line.regular_q() == 1);

    VoltageGraph mixed = parse_graph(fixture("mixed_degree.json"));
    CHECK(mixed.euler_char() == -2);
    CHECK(!mixed.regular_q().has_value());

    VoltageGraph five = parse_graph(fixture("five_strand.json"));
    CHECK(five.euler_char() == -3);
    CHECK(five.regular_q() == 4);
}

TEST_CASE("char poly at u = 0 is 1 and lead vanishes at 0") {
    for (const char* name :
         {"line.json", "two_loops.json", "five_strand.json", "k4_twist.json",
          "looped_rungs.json", "double_loop.json", "mixed_degree.json", "sawtooth.json",
          "triangle_ladder.json"}) {
        VoltageGraph g = parse_graph(fixture(name));
        CharPoly cp = char_poly(g);
        // P_0(x) = 1: constant coefficient 1 in u, all other x-coefficients vanish at u=0
        CHECK(cp.p.coeff(0).coeff(0) == 1);
        for (int k = 1; k <= cp.n; ++k) CHECK(cp.p.coeff(k).coeff(0) == 0);
        if (cp.n >= 1) CHECK(cp.lead.coeff(0) == 0);
    }
}

TEST_CASE("lift independence: potentials leave the char poly fixed") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<long long> pot(-3, 3);
    for (const char* name : {"two_loops.json", "sawtooth.json", "k4_twist.json",
                             "triangle_ladder.json", "mixed_degree.json"}) {
        VoltageGraph g = parse_graph(fixture(name));
        CharPoly base = char_poly(g);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<long long> k(g.vertex_count());
            for (auto& v : k) v = pot(rng);
            CharPoly shifted = char_poly(g.with_potentials(k));
            CHECK(shifted.p == base.p);
            CHECK(shifted.lead == base.lead);
        }
    }
}

TEST_CASE("x-degree equals the t bandwidth of the determinant") {
    struct Expect {
        const char* name;
        int n;
    } cases[] = {{"line.json", 1},      {"two_loops.json", 1}, {"five_strand.json", 1},
                 {"k4_twist.json", 1},  {"looped_rungs.json", 1}, {"double_loop.json", 1},
                 {"mixed_degree.json", 1}, {"sawtooth.json", 2},  {"triangle_ladder.json", 3}};
    for (const auto& c : cases) {
        VoltageGraph g = parse_graph(fixture(c.name));
        LaurentPoly det = laurent_det(g.delta_u());
        CharPoly cp = char_poly(g);
        CHECK(cp.n == c.n);
        CHECK(det.max_tpow() == c.n);
    }
}
