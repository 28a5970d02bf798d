#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "l2zeta/surface.hpp"

using namespace l2zeta;

namespace {

VoltageGraph load(const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

const BranchPoint* find_branch(const SurfaceReport& rep, cplx where, double tol = 1e-8) {
    for (const auto& bp : rep.branch_points)
        if (bp.location && std::abs(*bp.location - where) < tol) return &bp;
    return nullptr;
}

const BranchPoint* find_infinite(const SurfaceReport& rep) {
    for (const auto& bp : rep.branch_points)
        if (!bp.location) return &bp;
    return nullptr;
}

}  // namespace

TEST_CASE("line: one sheet, no branching, genus 0") {
    SurfaceReport rep = surface_report(load("line.json"));
    CHECK(rep.sheets == 1);
    CHECK(rep.branch_points.empty());
    CHECK(rep.total_branching == 0);
    CHECK(rep.genus == 0);
    CHECK(rep.galois);
    CHECK(!rep.omega_irreducible);  // splits as (T - u)(uT - 1)/u
    CHECK(rep.deflation.empty());
}

TEST_CASE("two-loop graph: torus") {
    SurfaceReport rep = surface_report(load("two_loops.json"));
    CHECK(rep.sheets == 2);
    CHECK(rep.omega_irreducible);
    CHECK(rep.galois);  // index 2
    REQUIRE(rep.branch_points.size() == 4);
    double s3 = 1.0 / std::sqrt(3.0);
    for (cplx want : {cplx(1, 0), cplx(1.0 / 3, 0), cplx(0, s3), cplx(0, -s3)}) {
        const BranchPoint* bp = find_branch(rep, want);
        REQUIRE(bp != nullptr);
        CHECK(bp->cycles == std::vector<int>{2});
        CHECK(bp->order == 1);
        REQUIRE(bp->in_c.has_value());
        CHECK(*bp->in_c);
    }
    CHECK(rep.total_branching == 4);
    CHECK(rep.genus == 1);
}

TEST_CASE("looped-rung and double-loop graphs share branch data") {
    for (const char* name : {"looped_rungs.json", "double_loop.json"}) {
        SurfaceReport rep = surface_report(load(name));
        CHECK(rep.sheets == 2);
        CHECK(rep.genus == 1);
        CHECK(rep.galois);
        REQUIRE(rep.branch_points.size() == 4);
        for (cplx want : {cplx(1, 0), cplx(1.0 / 3, 0), cplx(-1, 0), cplx(-1.0 / 3, 0)}) {
            const BranchPoint* bp = find_branch(rep, want);
            REQUIRE(bp != nullptr);
            CHECK(bp->order == 1);
            CHECK(bp->in_c.value());
        }
    }
}

TEST_CASE("sawtooth: branch points on and off the critical set") {
    SurfaceReport rep = surface_report(load("sawtooth.json"));
    CHECK(rep.sheets == 4);
    CHECK(rep.omega_irreducible);
    CHECK(!rep.galois);
    CHECK(rep.square_free_degree == 4);
    CHECK(rep.deflation.empty());

    double s3 = 1.0 / std::sqrt(3.0);
    double y111 = std::sqrt(111.0) / 24.0;
    // two pairs of multiplicity two at these four
    for (cplx want : {cplx(1, 0), cplx(1.0 / 3, 0), cplx(0, s3), cplx(0, -s3)}) {
        const BranchPoint* bp = find_branch(rep, want);
        REQUIRE(bp != nullptr);
        CHECK(bp->cycles == std::vector<int>{2, 2});
        CHECK(bp->order == 2);
        CHECK(bp->in_c.value());
    }
    // one pair collides, two sheets untouched
    for (cplx want : {cplx(0, 0), cplx(-3.0 / 8, y111), cplx(-3.0 / 8, -y111)}) {
        const BranchPoint* bp = find_branch(rep, want);
        REQUIRE(bp != nullptr);
        CHECK(bp->cycles == std::vector<int>{2, 1, 1});
        CHECK(bp->order == 1);
    }
    const BranchPoint* inf = find_infinite(rep);
    REQUIRE(inf != nullptr);
    CHECK(inf->cycles == std::vector<int>{2, 1, 1});

    // 0 and infinity are branched yet outside C
    CHECK(!find_branch(rep, cplx(0, 0))->in_c.value());
    CHECK(!inf->in_c.value());
    // the finite off-axis pair sits on the circle |u| = 1/sqrt(3)
    CHECK(find_branch(rep, cplx(-3.0 / 8, y111))->in_c.value());

    CHECK(rep.unbranched_candidates == 4);
    CHECK(rep.total_branching == 12);
    CHECK(rep.genus == 3);
}

TEST_CASE("triangle ladder: reducible with a multiplicity-2 quadratic") {
    SurfaceReport rep = surface_report(load("triangle_ladder.json"));
    REQUIRE(rep.deflation.size() == 1);
    CHECK(rep.deflation[0] == std::pair<int, int>{2, 2});
    CHECK(rep.square_free_degree == 6);
    CHECK(rep.sheets == 4);
    CHECK(!rep.omega_irreducible);

    double s3 = 1.0 / std::sqrt(3.0);
    std::vector<cplx> printed = {{1.0 / 3, 0}, {1, 0}, {0, s3}, {0, -s3}};
    printed.push_back(cplx(-0.5, std::sqrt(3.0) / 6));
    printed.push_back(cplx(-0.5, -std::sqrt(3.0) / 6));
    for (double sx : {1.0, -1.0})
        for (double sy : {1.0, -1.0}) printed.push_back(cplx(sx / 6.0, sy * std::sqrt(11.0) / 6));
    double re = -0.25 + std::sqrt(7.0 / 3.0) / 4;
    double im = 0.5 * std::sqrt(0.5 + std::sqrt(7.0 / 3.0) / 2);
    printed.push_back(cplx(re, im));
    printed.push_back(cplx(re, -im));
    REQUIRE(printed.size() == 12);

    REQUIRE(rep.branch_points.size() == 12);
    for (cplx want : printed) {
        const BranchPoint* bp = find_branch(rep, want);
        REQUIRE(bp != nullptr);
        CHECK(bp->order == 2);
        CHECK(bp->in_c.value());
    }
    CHECK(rep.total_branching == 24);
    CHECK(rep.genus == 9);
}

TEST_CASE("monodromy is base-point independent") {
    VoltageGraph g = load("sawtooth.json");
    SurfaceOptions a, b;
    a.base_point = cplx(0.05, 0.0);
    b.base_point = cplx(0.07, 0.013);
    SurfaceReport ra = surface_report(g, a);
    SurfaceReport rb = surface_report(g, b);
    REQUIRE(ra.branch_points.size() == rb.branch_points.size());
    for (const auto& bp : ra.branch_points) {
        bool matched = false;
        for (const auto& bq : rb.branch_points) {
            bool same_loc =
                (!bp.location && !bq.location) ||
                (bp.location && bq.location && std::abs(*bp.location - *bq.location) < 1e-7);
            if (same_loc) {
                CHECK(bp.cycles == bq.cycles);
                matched = true;
            }
        }
        CHECK(matched);
    }
    CHECK(ra.genus == rb.genus);
    CHECK(ra.galois == rb.galois);
}

TEST_CASE("functional equation") {
    // the line: the second sheet value is u^2 times the first
    FunctionalEqResult line = functional_eq_check(load("line.json"), {cplx(0.3, 0.0)});
    CHECK(line.max_residual < 1e-10);
    CHECK(line.lead_scaling_residual < 1e-12);

    std::vector<cplx> samples{cplx(0.08, 0.0), cplx(0.05, 0.02), cplx(0.11, -0.01),
                              cplx(-0.07, 0.03), cplx(0.04, -0.04)};
    for (const char* name : {"two_loops.json", "sawtooth.json", "five_strand.json",
                             "looped_rungs.json", "double_loop.json", "triangle_ladder.json"}) {
        FunctionalEqResult r = functional_eq_check(load(name), samples);
        CHECK(r.max_residual < 1e-8);
        CHECK(r.lead_scaling_residual < 1e-10);
    }

    CHECK_THROWS_AS(functional_eq_check(load("mixed_degree.json"), samples), validation_error);
}

TEST_CASE("quotient zeta poles versus branch points") {
    VoltageGraph two = load("two_loops.json");
    SurfaceReport rep = surface_report(two);
    std::vector<PolePoint> poles = quotient_pole_compare(two, rep);
    REQUIRE(poles.size() == 2);  // 3u^2 - 4u + 1 = 0: u = 1/3, 1
    for (const auto& p : poles) {
        CHECK(p.is_candidate);
        CHECK(p.branched);
    }

    // the twisted complete graph: two pole points that are NOT branched
    VoltageGraph k4 = load("k4_twist.json");
    SurfaceReport rep4 = surface_report(k4);
    std::vector<PolePoint> poles4 = quotient_pole_compare(k4, rep4);
    cplx special(-0.25, std::sqrt(7.0) / 4);
    int found = 0;
    for (const auto& p : poles4)
        if (std::abs(p.u - special) < 1e-8 || std::abs(p.u - std::conj(special)) < 1e-8) {
            ++found;
            CHECK(p.is_candidate);
            CHECK(!p.branched);
        }
    CHECK(found == 2);

    // the line: P_u(1) = (1-u)^2, the lone pole is unbranched
    VoltageGraph line = load("line.json");
    SurfaceReport repl = surface_report(line);
    std::vector<PolePoint> polesl = quotient_pole_compare(line, repl);
    REQUIRE(polesl.size() == 1);
    CHECK(std::abs(polesl[0].u - cplx(1.0, 0.0)) < 1e-10);
    CHECK(!polesl[0].branched);
}

TEST_CASE("galois check on explicit permutation groups") {
    CHECK(galois_check({{1, 0}}, 2));                // degree 2: always normal
    CHECK(!galois_check({{1, 0, 2}, {0, 2, 1}}, 3));  // S3: stabilizers differ
    CHECK(galois_check({{1, 2, 3, 0}}, 4));          // cyclic
    CHECK(galois_check({}, 1));                      // trivial covering
}

TEST_CASE("non-regular graphs skip the critical-set membership") {
    SurfaceReport rep = surface_report(load("mixed_degree.json"));
    CHECK(!rep.q.has_value());
    for (const auto& bp : rep.branch_points) CHECK(!bp.in_c.has_value());
    CHECK(rep.sheets == 2);
}

TEST_CASE("remaining fixtures match their printed genus") {
    CHECK(surface_report(load("k4_twist.json")).genus == 3);
    CHECK(surface_report(load("mixed_degree.json")).genus == 3);
    CHECK(surface_report(load("five_strand.json")).genus == 3);
}
