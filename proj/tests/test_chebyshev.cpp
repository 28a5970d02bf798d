#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "l2zeta/chebyshev.hpp"

using namespace l2zeta;

namespace {

UPoly up(std::initializer_list<long> coeffs) {
    UPoly p;
    for (long c : coeffs) p.c.emplace_back(c);
    p.trim();
    return p;
}

}  // namespace

TEST_CASE("chebyshev recurrence") {
    CHECK(chebyshev_t(0) == up({1}));
    CHECK(chebyshev_t(1) == up({0, 1}));
    CHECK(chebyshev_t(2) == up({-1, 0, 2}));
    CHECK(chebyshev_t(3) == up({0, -3, 0, 4}));
}

TEST_CASE("t + 1/t becomes 2x") {
    LaurentPoly l = LaurentPoly::term(1, up({1}));
    l += LaurentPoly::term(-1, up({1}));
    XPoly p = to_x_basis(l);
    CHECK(p.degree() == 1);
    CHECK(p.coeff(0).is_zero_poly());
    CHECK(p.coeff(1) == up({2}));
}

TEST_CASE("line and two-loop determinants in the x basis") {
    // 1 - (t + 1/t) u + u^2  ->  1 + u^2 - 2ux
    LaurentPoly line = LaurentPoly(up({1, 0, 1}));
    line += LaurentPoly::term(1, up({0, -1}));
    line += LaurentPoly::term(-1, up({0, -1}));
    XPoly p = to_x_basis(line);
    CHECK(p.coeff(0) == up({1, 0, 1}));
    CHECK(p.coeff(1) == up({0, -2}));

    // 1 - (1/t + 2 + t) u + 3u^2  ->  1 - 2u + 3u^2 - 2ux
    LaurentPoly g1 = LaurentPoly(up({1, -2, 3}));
    g1 += LaurentPoly::term(1, up({0, -1}));
    g1 += LaurentPoly::term(-1, up({0, -1}));
    XPoly p1 = to_x_basis(g1);
    CHECK(p1.coeff(0) == up({1, -2, 3}));
    CHECK(p1.coeff(1) == up({0, -2}));
}

TEST_CASE("non-symmetric input is rejected") {
    LaurentPoly bad = LaurentPoly::term(1, up({1}));
    CHECK_THROWS_AS(to_x_basis(bad), validation_error);
}

TEST_CASE("round trip: substituting x = (t + 1/t)/2 reproduces the input") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> coeff(-5, 5), deg(0, 3), band(0, 3);
    std::uniform_real_distribution<double> pt(-0.8, 0.8);
    for (int trial = 0; trial < 20; ++trial) {
        LaurentPoly l;
        for (int k = 0; k <= band(rng); ++k) {
            UPoly p;
            int d = deg(rng);
            for (int i = 0; i <= d; ++i) p.c.emplace_back(coeff(rng));
            p.trim();
            l += LaurentPoly::term(k, p);
            if (k > 0) l += LaurentPoly::term(-k, p);
        }
        if (l.is_zero_laurent()) continue;
        XPoly p = to_x_basis(l);
        cplx u(pt(rng), pt(rng));
        cplx t = std::polar(1.0 + 0.3 * std::abs(pt(rng)), pt(rng) * 3.0);
        cplx x = (t + 1.0 / t) / 2.0;
        cplx lhs = eval(p, u, x);
        cplx rhs = l(u, t);
        double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        CHECK(std::abs(lhs - rhs) <= 1e-12 * scale * 100.0);
    }
}
