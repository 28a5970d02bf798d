#pragma once

#include "laurent.hpp"
#include "poly.hpp"

namespace l2zeta {

/// Polynomial in x with coefficients that are integer polynomials in u.
using XPoly = poly<UPoly>;

/// Chebyshev polynomial of the first kind, by the recurrence
/// T_k = 2 x T_{k-1} - T_{k-2}.
inline poly<Int> chebyshev_t(int k) {
    poly<Int> t0(1);
    if (k == 0) return t0;
    poly<Int> t1 = poly<Int>::monomial(1);
    poly<Int> two_x = poly<Int>::monomial(1, Int(2));
    for (int i = 1; i < k; ++i) {
        poly<Int> t2 = two_x * t1 - t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return t1;
}

/// Rewrite a symmetric Laurent polynomial L(t, u) as P(x, u) with
/// x = (t + 1/t)/2, using t^k + t^-k = 2 T_k(x).
inline XPoly to_x_basis(const LaurentPoly& l) {
    if (!l.is_symmetric()) throw validation_error("to_x_basis: input is not symmetric in t and 1/t");
    XPoly p;
    for (const auto& [k, cu] : l.c) {
        if (k < 0) continue;
        poly<Int> tk = chebyshev_t(k);
        Int scale = k == 0 ? Int(1) : Int(2);
        if (static_cast<int>(p.c.size()) <= tk.degree()) p.c.resize(tk.degree() + 1, UPoly());
        for (int j = 0; j <= tk.degree(); ++j) {
            Int w = tk.coeff(j) * scale;
            if (!is_zero(w)) p.c[j] += cu * w;
        }
    }
    p.trim();
    return p;
}

inline cplx eval(const XPoly& p, cplx u, cplx x) {
    cplx acc = 0.0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + eval(*it, u);
    return acc;
}

/// The integer polynomial in u obtained by fixing x.
inline UPoly at_x(const XPoly& p, const Int& x) {
    UPoly acc;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace l2zeta
