#pragma once

#include <vector>

#include "chebyshev.hpp"
#include "graph.hpp"
#include "rational_fn.hpp"

namespace l2zeta {

/// det(I - delta u + Q u^2) rewritten as a polynomial P(x, u) with
/// x = (t + 1/t)/2, together with its x-degree n and the signed leading
/// coefficient lead(u) = (-1)^n [x^n] P. For n >= 1, lead(0) = 0 and
/// P/lead is monic-up-to-sign wherever lead does not vanish.
struct CharPoly {
    XPoly p;
    int n = 0;
    UPoly lead;
    /// Square-free factors of P over Q(u) with multiplicities; root
    /// finding solves each simple factor instead of the full polynomial,
    /// which keeps repeated roots at full accuracy.
    std::vector<std::pair<poly<RationalFn>, int>> x_factors;

    /// Elementary symmetric functions of the roots of P in x, as rational
    /// functions of u: e_i = (-1)^(n-i) [x^(n-i)] (P / lead).
    std::vector<RationalFn> elem_sym() const {
        std::vector<RationalFn> sigma(n + 1);
        sigma[0] = RationalFn(1);
        for (int i = 1; i <= n; ++i) {
            RationalFn v(p.coeff(n - i), lead);
            sigma[i] = ((n - i) % 2 == 0) ? v : -v;
        }
        return sigma;
    }
};

inline LaurentPoly laurent_det(const Matrix<LaurentPoly>& m) { return det_exact(m); }

inline CharPoly char_poly_from_det(const LaurentPoly& det) {
    CharPoly cp;
    cp.p = to_x_basis(det);
    cp.n = cp.p.degree();
    if (cp.n < 0) throw numeric_error("char_poly: zero determinant");
    cp.lead = cp.p.c[cp.n];
    if (cp.n % 2 == 1)
        for (auto& x : cp.lead.c) x = -x;
    if (cp.n >= 1) {
        poly<RationalFn> px;
        for (const auto& c : cp.p.c) px.c.emplace_back(c);
        px.trim();
        cp.x_factors = square_free_decomposition(px);
    }
    return cp;
}

inline CharPoly char_poly(const VoltageGraph& g) {
    return char_poly_from_det(laurent_det(g.delta_u()));
}

}  // namespace l2zeta
