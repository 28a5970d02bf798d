#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "roots.hpp"

namespace l2zeta {

/// s = sqrt(r+1) sqrt(r-1) with principal square roots. Returns the pair
/// (r + s, r - s); their product is exactly 1, so the smaller one is
/// recomputed as the reciprocal of the larger to avoid cancellation.
inline std::pair<cplx, cplx> sheet_pair(cplx r) {
    cplx s = std::sqrt(r + 1.0) * std::sqrt(r - 1.0);
    cplx plus = r + s, minus = r - s;
    if (std::abs(plus) >= 1.0)
        minus = 1.0 / plus;
    else
        plus = 1.0 / minus;
    return {plus, minus};
}

inline cplx ipow(cplx z, int e) {
    if (e < 0) return 1.0 / ipow(z, -e);
    cplx r = 1.0;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= z;
        z *= z;
    }
    return r;
}

/// Everything u-independent the evaluators need, computed once per graph.
struct ZetaContext {
    CharPoly cp;
    LaurentPoly det;  // det(I - delta u + Q u^2) as a Laurent polynomial
    int chi = 0;

    explicit ZetaContext(const VoltageGraph& g)
        : det(laurent_det(g.delta_u())), chi(g.euler_char()) {
        cp = char_poly_from_det(det);
    }
};

struct ZetaValue {
    cplx value;
    bool limit_value = false;       // u = 0 handled as the limit Z(0) = 1
    bool branch_ambiguous = false;  // some root lies on [-1, 1]
    bool outside_validity = false;  // Re P_u(x) <= 0 somewhere on [-1, 1]
};

/// Z(u0) by the closed formula: Z = (1-u^2)^chi * 2^n / lead(u) * prod_i (r_i - s_i),
/// principal branches throughout.
inline ZetaValue zeta_closed_form(const ZetaContext& ctx, cplx u0) {
    ZetaValue out;
    if (std::abs(u0) < 1e-15) {
        out.value = 1.0;
        out.limit_value = true;
        return out;
    }
    RootSet rs = roots_at(ctx.cp, u0);
    cplx w = 1.0;
    for (cplx r : rs.roots) {
        w *= sheet_pair(r).second;
        if (std::abs(r.imag()) < 1e-9 && r.real() >= -1.0 - 1e-9 && r.real() <= 1.0 + 1e-9)
            out.branch_ambiguous = true;
    }
    cplx lead_val = eval(ctx.cp.lead, u0);
    out.value = ipow(1.0 - u0 * u0, ctx.chi) * (std::pow(2.0, ctx.cp.n) / lead_val) * w;
    // validity probe: Re P_u(x) should stay positive on [-1, 1]
    for (int i = 0; i < 64; ++i) {
        double x = -1.0 + 2.0 * i / 63.0;
        if (eval(ctx.cp.p, u0, cplx(x, 0.0)).real() <= 0.0) {
            out.outside_validity = true;
            break;
        }
    }
    return out;
}

struct ThetaIntegral {
    cplx value;
    int winding = 0;  // winding of det M_u(theta) around 0; nonzero flags invalidity
    int samples_used = 0;
};

/// exp of the mean of log det M_{u0}(theta) over the circle, theta sampled
/// uniformly and the log phase unwrapped continuously rather than taken
/// per-sample principal. Sample count doubles until two successive answers
/// agree to 1e-10 or 2^20 is hit.
inline ThetaIntegral theta_integral_det(const LaurentPoly& det, cplx u0, int samples = 256) {
    if (samples < 64) samples = 64;
    std::vector<std::pair<int, cplx>> terms;
    double scale = 0.0;
    for (const auto& [k, p] : det.c) {
        cplx v = eval(p, u0);
        terms.emplace_back(k, v);
        scale += std::abs(v);
    }
    auto f_at = [&](double theta) {
        cplx acc = 0.0;
        for (const auto& [k, v] : terms) acc += v * std::polar(1.0, k * theta);
        return acc;
    };
    auto integrate = [&](int n, ThetaIntegral& res) {
        double re_sum = 0.0, im_sum = 0.0, prev_arg = 0.0;
        double first_arg = 0.0;
        for (int j = 0; j < n; ++j) {
            cplx f = f_at(2 * M_PI * j / n);
            double m = std::abs(f);
            if (m < 1e-13 * std::max(1.0, scale))
                throw numeric_error("theta integral: integrand singularity near theta = " +
                                    std::to_string(2 * M_PI * j / n));
            double a = std::arg(f);
            if (j == 0) {
                first_arg = a;
            } else {
                while (a - prev_arg > M_PI) a -= 2 * M_PI;
                while (a - prev_arg < -M_PI) a += 2 * M_PI;
            }
            prev_arg = a;
            re_sum += std::log(m);
            im_sum += a;
        }
        // closing the loop reveals the winding number
        double a_end = std::arg(f_at(0.0));
        while (a_end - prev_arg > M_PI) a_end -= 2 * M_PI;
        while (a_end - prev_arg < -M_PI) a_end += 2 * M_PI;
        res.winding = static_cast<int>(std::lround((a_end - first_arg) / (2 * M_PI)));
        res.value = std::exp(cplx(re_sum / n, im_sum / n));
        res.samples_used = n;
    };
    ThetaIntegral cur;
    integrate(samples, cur);
    for (int n = samples * 2; n <= (1 << 20); n *= 2) {
        ThetaIntegral next;
        integrate(n, next);
        if (std::abs(next.value - cur.value) <= 1e-10 * std::max(1.0, std::abs(next.value)))
            return next;
        cur = next;
    }
    return cur;
}

inline ThetaIntegral theta_integral_det(const ZetaContext& ctx, cplx u0, int samples = 256) {
    return theta_integral_det(ctx.det, u0, samples);
}

/// Quadrature check of (1/2pi) Int log(r - cos theta) dtheta against
/// arccosh(r) - log 2. On the real segment [-1, 1] the integrand is
/// singular: the real part is taken from the absolute-value identity
/// |r + sqrt(r+1)sqrt(r-1)|/2, and the imaginary part is the limit from
/// above, realized by Richardson extrapolation in the offset.
struct IntegralCheck {
    cplx lhs;
    cplx rhs;
};

inline cplx log_circle_mean(cplx r, int n) {
    double re_sum = 0.0, im_sum = 0.0, prev = 0.0;
    for (int j = 0; j < n; ++j) {
        cplx f = r - std::cos(2 * M_PI * j / n);
        double a = std::arg(f);
        if (j > 0) {
            while (a - prev > M_PI) a -= 2 * M_PI;
            while (a - prev < -M_PI) a += 2 * M_PI;
        }
        prev = a;
        re_sum += std::log(std::abs(f));
        im_sum += a;
    }
    return cplx(re_sum / n, im_sum / n);
}

inline IntegralCheck arccosh_integral_check(cplx r, int samples = 65536) {
    if (samples < 64) samples = 64;
    IntegralCheck out;
    out.rhs = std::acosh(r) - std::log(2.0);
    bool on_segment = std::abs(r.imag()) < 1e-10 && std::abs(r.real()) <= 1.0 + 1e-12;
    if (!on_segment) {
        out.lhs = log_circle_mean(r, samples);
        return out;
    }
    double x = r.real();
    cplx s = std::sqrt(r + 1.0) * std::sqrt(r - 1.0);
    double re = std::log(0.5 * std::abs(r + s));
    if (std::abs(std::abs(x) - 1.0) < 1e-12) {
        // endpoints: the jump set of arg(r - cos) has measure zero
        out.lhs = cplx(re, x > 0 ? 0.0 : M_PI);
        return out;
    }
    // Richardson ladder in the imaginary offset for the arg integral
    std::vector<double> eps = {2e-3, 1e-3, 5e-4, 2.5e-4};
    std::vector<cplx> vals;
    for (double e : eps) vals.push_back(log_circle_mean(cplx(x, e), samples));
    for (size_t lev = 1; lev < eps.size(); ++lev)
        for (size_t i = 0; i + lev < eps.size(); ++i)
            vals[i] = vals[i + 1] + (vals[i] - vals[i + 1]) * (0.0 - eps[i + lev]) / (eps[i] - eps[i + lev]);
    out.lhs = cplx(re, vals[0].imag());
    return out;
}

/// Taylor coefficients of Z at 0 from closed-form samples on |u| = radius.
inline std::vector<cplx> taylor_closed_form(const ZetaContext& ctx, double radius, int count,
                                            int samples = 2048) {
    std::vector<cplx> vals(samples);
    for (int j = 0; j < samples; ++j)
        vals[j] = zeta_closed_form(ctx, std::polar(radius, 2 * M_PI * j / samples)).value;
    std::vector<cplx> out(count);
    for (int k = 0; k < count; ++k) {
        cplx acc = 0.0;
        for (int j = 0; j < samples; ++j) acc += vals[j] * std::polar(1.0, -2 * M_PI * j * k / samples);
        out[k] = acc / (static_cast<double>(samples) * std::pow(radius, k));
    }
    return out;
}

}  // namespace l2zeta
