#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "l2zeta/char_poly.hpp"
#include "l2zeta/laurent.hpp"
#include "l2zeta/matrix.hpp"

using namespace l2zeta;

namespace {

UPoly up(std::initializer_list<long> coeffs) {
    UPoly p;
    for (long c : coeffs) p.c.emplace_back(c);
    p.trim();
    return p;
}

std::mt19937 rng(77);

LaurentPoly random_laurent() {
    std::uniform_int_distribution<int> tpow(-2, 2), coeff(-4, 4), deg(0, 2);
    LaurentPoly l;
    int terms = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int t = 0; t < terms; ++t) {
        UPoly p;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) p.c.emplace_back(coeff(rng));
        p.trim();
        l += LaurentPoly::term(tpow(rng), p);
    }
    l.trim();
    return l;
}

// complex determinant by partial-pivot elimination, for cross-checking
cplx det_numeric(std::vector<std::vector<cplx>> m) {
    size_t n = m.size();
    cplx det = 1.0;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        for (size_t i = k + 1; i < n; ++i)
            if (std::abs(m[i][k]) > std::abs(m[piv][k])) piv = i;
        if (std::abs(m[piv][k]) == 0.0) return 0.0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            cplx f = m[i][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

}  // namespace

TEST_CASE("laurent determinant: identity and 1x1") {
    Matrix<LaurentPoly> id = Matrix<LaurentPoly>::identity(2);
    CHECK(laurent_det(id) == LaurentPoly(1));

    // 1 - (t + 1/t) u + u^2
    LaurentPoly d;
    d += LaurentPoly(up({1, 0, 1}));
    d += LaurentPoly::term(1, up({0, -1}));
    d += LaurentPoly::term(-1, up({0, -1}));
    Matrix<LaurentPoly> m(1);
    m.at(0, 0) = d;
    CHECK(laurent_det(m) == d);
    CHECK(laurent_det(Matrix<LaurentPoly>(0)) == LaurentPoly(1));
}

TEST_CASE("sawtooth determinant by cofactor expansion") {
    // diagonal 1 - (t + 1/t) u + 3u^2, off-diagonals -(1 + 1/t) u and -(1 + t) u
    LaurentPoly diag = LaurentPoly(up({1, 0, 3}));
    diag += LaurentPoly::term(1, up({0, -1}));
    diag += LaurentPoly::term(-1, up({0, -1}));
    LaurentPoly off_upper = LaurentPoly::term(0, up({0, -1}));
    off_upper += LaurentPoly::term(-1, up({0, -1}));
    LaurentPoly off_lower = off_upper.inverted();
    Matrix<LaurentPoly> m(2);
    m.at(0, 0) = diag;
    m.at(1, 1) = diag;
    m.at(0, 1) = off_upper;
    m.at(1, 0) = off_lower;

    LaurentPoly expect = diag * diag - off_upper * off_lower;
    CHECK(laurent_det(m) == expect);
    CHECK(laurent_det(m).is_symmetric());
}

TEST_CASE("bareiss agrees with cofactor and with floating point") {
    std::uniform_real_distribution<double> pt(-0.7, 0.7);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 5;  // forces the Bareiss path
        Matrix<LaurentPoly> m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = random_laurent();
        LaurentPoly bar = det_bareiss(m);
        LaurentPoly cof = det_cofactor(m);
        CHECK(bar == cof);

        cplx u(pt(rng), pt(rng));
        cplx t = std::polar(1.0, pt(rng) * 3.0);
        std::vector<std::vector<cplx>> num(n, std::vector<cplx>(n));
        double scale = 1.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                num[i][j] = m.at(i, j)(u, t);
                scale = std::max(scale, std::abs(num[i][j]));
            }
        cplx expect = det_numeric(num);
        cplx got = bar(u, t);
        CHECK(std::abs(got - expect) <= 1e-10 * std::max(1.0, std::abs(expect)) * scale * scale);
    }
}

TEST_CASE("matrices with the transpose-inverse symmetry have symmetric determinants") {
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3;
        Matrix<LaurentPoly> m(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                LaurentPoly l = random_laurent();
                if (i == j) l += l.inverted();  // symmetric diagonal
                m.at(i, j) = l;
                if (i != j) m.at(j, i) = l.inverted();
            }
        CHECK(laurent_det(m).is_symmetric());
    }
}
