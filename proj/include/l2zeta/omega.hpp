#pragma once

#include <optional>

#include "symmetric.hpp"
#include "zeta.hpp"

namespace l2zeta {

/// Polynomial in T with rational-function coefficients.
struct TPoly {
    poly<RationalFn> p;
    bool palindromic = false;

    int degree() const { return p.degree(); }

    void detect_palindromic() {
        int d = p.degree();
        palindromic = d >= 0;
        for (int k = 0; k <= d && palindromic; ++k)
            palindromic = p.coeff(k) == p.coeff(d - k);
    }

    std::vector<cplx> coeffs_at(cplx u) const {
        std::vector<cplx> out(p.degree() + 1);
        for (int k = 0; k <= p.degree(); ++k) out[k] = p.coeff(k)(u);
        return out;
    }
};

constexpr int kSymbolicSheetLimit = 4;  // beyond this, only the numeric path

/// The degree-2^n polynomial whose roots are the 2^n sheet values
/// prod_i (r_i + sign_i s_i), as an exact polynomial over Q(u).
inline TPoly omega_symbolic(const CharPoly& cp) {
    if (cp.n > kSymbolicSheetLimit)
        throw validation_error("omega_symbolic: degree too large, use the numeric path");
    const auto& universal = sheet_poly_universal(cp.n);
    std::vector<RationalFn> sigma = cp.elem_sym();
    TPoly t;
    t.p.c.resize(universal.size());
    for (size_t k = 0; k < universal.size(); ++k) t.p.c[k] = eval_sigma(universal[k], sigma);
    t.p.trim();
    t.detect_palindromic();
    return t;
}

/// The 2^n sign-product values prod_i (r_i + sign_i s_i) at u0, one per
/// sign vector. These are the roots of the sheet-product polynomial.
inline std::vector<cplx> sheet_values_at(const CharPoly& cp, cplx u0) {
    RootSet rs = roots_at(cp, u0);
    std::vector<std::pair<cplx, cplx>> pairs;
    for (cplx r : rs.roots) pairs.push_back(sheet_pair(r));
    std::vector<cplx> out;
    for (int mask = 0; mask < (1 << cp.n); ++mask) {
        cplx w = 1.0;
        for (int i = 0; i < cp.n; ++i) w *= (mask >> i) & 1 ? pairs[i].first : pairs[i].second;
        out.push_back(w);
    }
    return out;
}

/// Numeric specialization at u0: the monic polynomial with all 2^n sheet
/// values as roots. Returns ascending complex coefficients (degree 2^n).
inline std::vector<cplx> omega_numeric_at(const CharPoly& cp, cplx u0) {
    std::vector<cplx> coeffs{1.0};
    for (cplx w : sheet_values_at(cp, u0)) {
        std::vector<cplx> next(coeffs.size() + 1, 0.0);
        for (size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] += coeffs[k];
            next[k] -= w * coeffs[k];
        }
        coeffs = std::move(next);
    }
    std::reverse(coeffs.begin(), coeffs.end());
    return coeffs;  // ascending in T, monic
}

/// All 2^n sheet values of the zeta extension at u0:
/// (1-u0^2)^chi * 2^n / lead(u0) * W for each sign product W.
inline std::vector<cplx> sheet_zeta_values(const ZetaContext& ctx, cplx u0) {
    cplx front = ipow(1.0 - u0 * u0, ctx.chi) * std::pow(2.0, ctx.cp.n) / eval(ctx.cp.lead, u0);
    std::vector<cplx> out;
    for (cplx w : sheet_values_at(ctx.cp, u0)) out.push_back(front * w);
    return out;
}

// ---- exact operations on TPoly ----

namespace detail {

/// Clear denominators: D * P with D = lcm of coefficient denominators.
/// Returns (bipoly in T over Z[u], D).
inline std::pair<poly<UPoly>, UPoly> clear_denominators(const TPoly& t) {
    UPoly lcm(1);
    for (const auto& c : t.p.c) {
        if (c.is_zero_fn()) continue;
        UPoly g = gcd(lcm, c.den);
        lcm = exact_div(lcm * c.den, g);
    }
    poly<UPoly> b;
    b.c.resize(t.p.c.size());
    for (size_t k = 0; k < t.p.c.size(); ++k) {
        const auto& c = t.p.c[k];
        if (!c.is_zero_fn()) b.c[k] = c.num * exact_div(lcm, c.den);
    }
    b.trim();
    return {b, lcm};
}

/// Sylvester-matrix resultant of two polynomials in T over Z[u],
/// evaluated by fraction-free elimination.
inline UPoly resultant_T(const poly<UPoly>& a, const poly<UPoly>& b) {
    int m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) return UPoly();
    if (m == 0) return pow(a.c[0], n);
    if (n == 0) return pow(b.c[0], m);
    Matrix<UPoly> syl(m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) syl.at(i, i + j) = a.c[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) syl.at(n + i, i + j) = b.c[n - j];
    return det_bareiss(std::move(syl));
}

}  // namespace detail

/// Discriminant with respect to T, as a reduced rational function of u.
/// The zero set of its numerator is where the polynomial has a repeated
/// root (away from denominator degenerations).
inline RationalFn discriminant_T(const TPoly& t) {
    int d = t.degree();
    if (d < 1) throw validation_error("discriminant_T: polynomial is constant in T");
    auto [b, den] = detail::clear_denominators(t);
    poly<UPoly> db;
    for (int i = 1; i <= b.degree(); ++i) db.c.push_back(b.c[i] * Int(i));
    db.trim();
    UPoly res = detail::resultant_T(b, db);
    // disc(P) = disc(D P) / D^(2d-2); disc = (-1)^(d(d-1)/2) res / lc
    RationalFn disc(res, b.lead());
    disc = disc / RationalFn(pow(den, 2 * d - 2));
    if ((d * (d - 1) / 2) % 2 == 1) disc = -disc;
    return disc;
}

/// Square-free part over Q(u) plus the repeated factors that were removed,
/// via Yun's decomposition. The returned part is monic; a factor listed
/// with multiplicity k >= 2 divided the input exactly k times.
struct Deflation {
    TPoly square_free;
    std::vector<std::pair<TPoly, int>> repeated;
};

inline Deflation deflate_repeated_factors(const TPoly& t) {
    if (t.p.is_zero_poly()) throw validation_error("deflate_repeated_factors: zero polynomial");
    Deflation out;
    if (t.p.degree() < 1) {
        out.square_free.p = make_monic(t.p);
        out.square_free.detect_palindromic();
        return out;
    }
    poly<RationalFn> square_free(1);
    for (const auto& [factor, mult] : square_free_decomposition(t.p)) {
        square_free *= factor;
        if (mult >= 2) {
            TPoly rep;
            rep.p = factor;
            rep.detect_palindromic();
            out.repeated.emplace_back(std::move(rep), mult);
        }
    }
    out.square_free.p = make_monic(square_free);
    out.square_free.detect_palindromic();
    return out;
}

}  // namespace l2zeta
