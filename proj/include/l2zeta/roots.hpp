#pragma once

#include <cmath>
#include <vector>

#include "char_poly.hpp"

namespace l2zeta {

/// All complex roots of a polynomial given by ascending coefficients,
/// via Aberth-Ehrlich simultaneous iteration. `warm` seeds the iteration
/// (used by path tracking); otherwise starts on a perturbed circle at
/// the Cauchy root bound.
inline std::vector<cplx> all_roots(std::vector<cplx> coeffs,
                                   const std::vector<cplx>* warm = nullptr) {
    double scale = 0.0;
    for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) throw numeric_error("all_roots: zero polynomial");
    while (!coeffs.empty() && std::abs(coeffs.back()) < 1e-300 * scale) coeffs.pop_back();
    int n = static_cast<int>(coeffs.size()) - 1;
    if (n <= 0) return {};

    std::vector<cplx> z(n);
    if (warm && static_cast<int>(warm->size()) == n) {
        z = *warm;
    } else {
        double r = 0.0;
        for (int i = 0; i < n; ++i) r = std::max(r, std::abs(coeffs[i] / coeffs[n]));
        r = 1.0 + r;
        for (int i = 0; i < n; ++i)
            z[i] = std::polar(r * (0.5 + 0.5 * (i + 1.0) / n), 2 * M_PI * i / n + 0.4);
    }

    auto horner = [&](cplx x, cplx& p, cplx& dp) {
        p = coeffs[n];
        dp = 0.0;
        for (int i = n - 1; i >= 0; --i) {
            dp = dp * x + p;
            p = p * x + coeffs[i];
        }
    };

    for (int iter = 0; iter < 300; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            cplx p, dp;
            horner(z[i], p, dp);
            if (p == cplx(0.0)) continue;
            if (dp == cplx(0.0)) dp = cplx(1e-30);
            cplx nr = p / dp;
            cplx s = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) {
                    cplx d = z[i] - z[j];
                    if (std::abs(d) < 1e-100) d = cplx(1e-100);
                    s += 1.0 / d;
                }
            cplx corr = nr / (1.0 - nr * s);
            if (!std::isfinite(corr.real()) || !std::isfinite(corr.imag())) corr = nr;
            z[i] -= corr;
            worst = std::max(worst, std::abs(corr) / (1.0 + std::abs(z[i])));
        }
        if (worst < 1e-14) break;
    }
    // one Newton polish per root
    for (int i = 0; i < n; ++i) {
        cplx p, dp;
        horner(z[i], p, dp);
        if (dp != cplx(0.0)) {
            cplx step = p / dp;
            if (std::abs(step) < 0.1 * (1.0 + std::abs(z[i]))) z[i] -= step;
        }
    }
    return z;
}

/// Roots of P_{u0}(x) at a fixed complex u0.
struct RootSet {
    cplx u0;
    std::vector<cplx> roots;
    double max_residual = 0.0;  // max |P(r_i)| relative to coefficient scale
};

inline RootSet roots_at(const CharPoly& cp, cplx u0) {
    cplx lead_val = eval(cp.lead, u0);
    std::vector<cplx> coeffs(cp.n + 1);
    double scale = 0.0;
    for (int i = 0; i <= cp.n; ++i) {
        coeffs[i] = eval(cp.p.coeff(i), u0);
        scale = std::max(scale, std::abs(coeffs[i]));
    }
    if (std::abs(lead_val) <= 1e-13 * std::max(1.0, scale)) {
        throw numeric_error("degenerate leading coefficient at u0 = (" + std::to_string(u0.real()) +
                            ", " + std::to_string(u0.imag()) + ")");
    }
    RootSet rs;
    rs.u0 = u0;
    // solve each square-free factor; a repeated root of P is a simple
    // root of its factor, so it comes out at full accuracy
    bool factored = false;
    if (!cp.x_factors.empty()) {
        factored = true;
        std::vector<cplx> roots;
        for (const auto& [factor, mult] : cp.x_factors) {
            std::vector<cplx> fc(factor.degree() + 1);
            bool finite = true;
            for (int i = 0; i <= factor.degree() && finite; ++i) {
                cplx den = eval(factor.coeff(i).den, u0);
                finite = std::abs(den) > 1e-13;
                if (finite) fc[i] = factor.coeff(i)(u0);
            }
            if (!finite) {
                factored = false;
                break;
            }
            for (cplx r : all_roots(fc))
                for (int m = 0; m < mult; ++m) roots.push_back(r);
        }
        if (factored) rs.roots = std::move(roots);
    }
    if (!factored) rs.roots = all_roots(coeffs);
    for (const auto& r : rs.roots) {
        cplx p = 0.0;
        for (int i = cp.n; i >= 0; --i) p = p * r + coeffs[i];
        rs.max_residual = std::max(rs.max_residual, std::abs(p) / std::max(1.0, scale));
    }
    if (rs.max_residual > 1e-9)
        throw numeric_error("roots_at: residual " + std::to_string(rs.max_residual) +
                            " exceeds tolerance");
    return rs;
}

}  // namespace l2zeta
