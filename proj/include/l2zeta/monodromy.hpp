#pragma once

#include <algorithm>
#include <climits>
#include <functional>
#include <optional>
#include <set>

#include "omega.hpp"

namespace l2zeta {

/// Complex roots of an integer polynomial, with 2-adic balancing so that
/// arbitrarily large coefficients survive the conversion to doubles.
/// Roots at 0 (trailing zero coefficients) are reported directly.
inline std::vector<cplx> upoly_complex_roots(const UPoly& p) {
    if (p.degree() < 1) return {};
    std::vector<cplx> out;
    size_t t0 = 0;
    while (t0 < p.c.size() && is_zero(p.c[t0])) ++t0;
    for (size_t i = 0; i < t0; ++i) out.push_back(0.0);
    int d = p.degree() - static_cast<int>(t0);
    if (d == 0) return out;
    std::vector<double> mant(d + 1, 0.0);
    std::vector<long> expo(d + 1, 0);
    for (int k = 0; k <= d; ++k) {
        const Int& c = p.c[t0 + k];
        if (!is_zero(c)) mant[k] = mpz_get_d_2exp(&expo[k], c.get_mpz_t());
    }
    // substitute u = 2^sigma v to balance the extreme exponents
    long sigma = d > 0 ? (expo[0] - expo[d]) / d : 0;
    long emax = LONG_MIN;
    for (int k = 0; k <= d; ++k)
        if (mant[k] != 0.0) emax = std::max(emax, expo[k] + k * sigma);
    std::vector<cplx> coeffs(d + 1);
    for (int k = 0; k <= d; ++k) {
        long e = expo[k] + k * sigma - emax;
        coeffs[k] = e < -1060 ? 0.0 : std::ldexp(mant[k], static_cast<int>(e));
    }
    double scale = std::ldexp(1.0, static_cast<int>(std::max(std::min(sigma, 500L), -500L)));
    for (cplx v : all_roots(coeffs)) out.push_back(v * scale);
    return out;
}

/// Distinct complex roots: the repeated factors are removed exactly over
/// the integers first, so every root is simple and solved at full
/// accuracy (a numeric solve of a multiplicity-m root is only good to
/// eps^(1/m), far too coarse for candidate deduplication).
inline std::vector<cplx> distinct_complex_roots(const UPoly& p) {
    if (p.degree() < 1) return {};
    UPoly g = gcd(p, p.derivative());
    if (g.degree() < 1) return upoly_complex_roots(p);
    return upoly_complex_roots(exact_div(p, g));
}

/// A point of CP^1 to probe; nullopt location means infinity.
struct Candidate {
    std::optional<cplx> u;
    bool from_discriminant = false;

    bool infinite() const { return !u.has_value(); }
};

/// Discriminant-numerator zeros (clustered), zeros of the leading
/// coefficient, and always 0 and infinity.
inline std::vector<Candidate> branch_candidates(const TPoly& square_free, const CharPoly& cp) {
    RationalFn disc = discriminant_T(square_free);
    if (disc.is_zero_fn())
        throw numeric_error("branch_candidates: discriminant vanishes identically; deflate first");
    std::vector<cplx> pts = distinct_complex_roots(disc.num);
    size_t n_disc = pts.size();
    for (cplx z : distinct_complex_roots(cp.lead)) pts.push_back(z);
    for (const auto& c : square_free.p.c)
        for (cplx z : distinct_complex_roots(c.den)) pts.push_back(z);

    std::vector<Candidate> out;
    out.push_back({cplx(0.0), false});
    auto add = [&](cplx z, bool from_disc) {
        for (auto& c : out)
            if (!c.infinite() && std::abs(*c.u - z) < 1e-6) {
                // merge towards the mean of the cluster
                c.from_discriminant = c.from_discriminant || from_disc;
                return;
            }
        out.push_back({z, from_disc});
    };
    for (size_t i = 0; i < pts.size(); ++i) add(pts[i], i < n_disc);
    out.push_back({std::nullopt, false});
    return out;
}

// ---- root tracking ----

namespace detail {

inline double chordal(cplx a, cplx b) {
    return std::abs(a - b) /
           std::sqrt((1.0 + std::norm(a)) * (1.0 + std::norm(b)));
}

inline double dist_point_segment(cplx p, cplx a, cplx b) {
    cplx ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

}  // namespace detail

/// Straight segment when clear of the obstacles, otherwise a single
/// perpendicular waypoint detour.
inline std::vector<cplx> plan_path(cplx from, cplx to, const std::vector<cplx>& obstacles,
                                   double clearance) {
    auto clear = [&](const std::vector<cplx>& waypoints) {
        for (size_t i = 0; i + 1 < waypoints.size(); ++i)
            for (cplx obs : obstacles)
                if (detail::dist_point_segment(obs, waypoints[i], waypoints[i + 1]) < clearance)
                    return false;
        return true;
    };
    for (int relax = 0; relax < 4; ++relax, clearance *= 0.5) {
        std::vector<cplx> direct{from, to};
        if (clear(direct)) return direct;
        cplx mid = 0.5 * (from + to);
        cplx dir = to - from;
        double len = std::abs(dir);
        if (len == 0.0) return direct;
        cplx perp = cplx(0.0, 1.0) * dir / len;
        double step = std::max(2.0 * clearance, 0.15 * len);
        for (int k = 1; k <= 12; ++k)
            for (double sign : {1.0, -1.0}) {
                std::vector<cplx> via{from, mid + sign * k * step * perp, to};
                if (clear(via)) return via;
            }
    }
    throw numeric_error("plan_path: no clear route between tracking points");
}

/// Continuously track the roots of a u-family of polynomials along a path,
/// adaptively bisecting whenever nearest-neighbor matching is ambiguous
/// (chordal metric, so sheets through infinity stay trackable).
/// Returns perm with perm[i] = final label of the sheet starting at
/// base_roots[i].
inline std::vector<int> track_roots(const std::function<std::vector<cplx>(cplx)>& coeffs_at,
                                    std::vector<cplx> path, const std::vector<cplx>& base_roots) {
    size_t n = base_roots.size();
    std::vector<cplx> cur = base_roots;
    auto match = [&](const std::vector<cplx>& from, const std::vector<cplx>& to,
                     std::vector<int>& perm) {
        perm.assign(n, -1);
        std::vector<bool> used(n, false);
        bool ambiguous = false;
        for (size_t i = 0; i < n; ++i) {
            double best = 1e300, second = 1e300;
            int bj = -1;
            for (size_t j = 0; j < n; ++j) {
                if (used[j]) continue;
                double d = detail::chordal(from[i], to[j]);
                if (d < best) {
                    second = best;
                    best = d;
                    bj = static_cast<int>(j);
                } else if (d < second) {
                    second = d;
                }
            }
            perm[i] = bj;
            used[bj] = true;
            if (best > second / 3.0 && second < 1e299) ambiguous = true;
        }
        return !ambiguous;
    };

    size_t k = 1;
    int refinements = 0;
    while (k < path.size()) {
        std::vector<cplx> roots = all_roots(coeffs_at(path[k]), &cur);
        std::vector<int> perm;
        if (!match(cur, roots, perm)) {
            if (std::abs(path[k] - path[k - 1]) < 1e-13 || ++refinements > 200000)
                throw numeric_error("track_roots: coincident-path failure near u = (" +
                                    std::to_string(path[k].real()) + ", " +
                                    std::to_string(path[k].imag()) + ")");
            path.insert(path.begin() + k, 0.5 * (path[k - 1] + path[k]));
            continue;
        }
        std::vector<cplx> next(n);
        for (size_t i = 0; i < n; ++i) next[i] = roots[perm[i]];
        cur = std::move(next);
        ++k;
    }
    std::vector<int> final_perm;
    if (!match(cur, base_roots, final_perm))
        throw numeric_error("track_roots: ambiguous final matching to the base fiber");
    return final_perm;
}

inline std::vector<cplx> densify(const std::vector<cplx>& waypoints, double max_step) {
    std::vector<cplx> out{waypoints.front()};
    for (size_t i = 0; i + 1 < waypoints.size(); ++i) {
        cplx a = waypoints[i], b = waypoints[i + 1];
        int steps = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / max_step)));
        for (int s = 1; s <= steps; ++s)
            out.push_back(a + (b - a) * (static_cast<double>(s) / steps));
    }
    return out;
}

/// Permutation of the base fiber induced by a small loop around one
/// candidate (or around infinity, realized as a large circle).
inline std::vector<int> monodromy_at(const std::function<std::vector<cplx>(cplx)>& coeffs_at,
                                     const Candidate& cand, cplx base,
                                     const std::vector<cplx>& base_roots,
                                     const std::vector<cplx>& finite_candidates) {
    std::vector<cplx> path;
    if (cand.infinite()) {
        double radius = 1.0;
        for (cplx c : finite_candidates) radius = std::max(radius, std::abs(c));
        radius = 2.0 * radius + 1.0;
        // pick the approach ray angle farthest from every finite candidate
        double best_angle = 0.0, best_score = -1.0;
        for (int a = 0; a < 720; ++a) {
            double ang = 2 * M_PI * a / 720;
            cplx tip = std::polar(radius, ang);
            double score = 1e300;
            for (cplx c : finite_candidates)
                score = std::min(score, detail::dist_point_segment(c, base, tip));
            if (score > best_score) {
                best_score = score;
                best_angle = ang;
            }
        }
        cplx start = std::polar(radius, best_angle);
        std::vector<cplx> approach = densify({base, start}, radius / 24.0);
        path = approach;
        for (int s = 1; s <= 128; ++s)  // clockwise: a positive loop in w = 1/u
            path.push_back(std::polar(radius, best_angle - 2 * M_PI * s / 128.0));
        path.insert(path.end(), approach.rbegin(), approach.rend());
        return track_roots(coeffs_at, path, base_roots);
    }

    cplx c = *cand.u;
    double radius = 0.1;
    for (cplx other : finite_candidates)
        if (std::abs(other - c) > 1e-9) radius = std::min(radius, 0.5 * std::abs(other - c));
    cplx start = c + std::polar(radius, std::arg(base - c));
    std::vector<cplx> obstacles;
    for (cplx other : finite_candidates)
        if (std::abs(other - c) > 1e-9) obstacles.push_back(other);
    std::vector<cplx> approach =
        densify(plan_path(base, start, obstacles, std::min(0.4 * radius, 0.03)), 0.02);
    path = approach;
    double theta0 = std::arg(start - c);
    for (int s = 1; s <= 64; ++s)
        path.push_back(c + std::polar(radius, theta0 + 2 * M_PI * s / 64.0));
    path.insert(path.end(), approach.rbegin(), approach.rend());
    return track_roots(coeffs_at, path, base_roots);
}

inline std::vector<int> cycle_lengths(const std::vector<int>& perm,
                                      const std::vector<int>& subset) {
    std::vector<int> lens;
    std::vector<bool> seen(perm.size(), false);
    for (int start : subset) {
        if (seen[start]) continue;
        int len = 0, j = start;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

/// Orbit of the base sheet under the group generated by all monodromies.
inline std::vector<int> sheet_orbit(int base_sheet, const std::vector<std::vector<int>>& perms) {
    std::vector<int> orbit{base_sheet};
    std::vector<bool> in_orbit;
    size_t n = perms.empty() ? static_cast<size_t>(base_sheet) + 1 : perms[0].size();
    in_orbit.assign(n, false);
    in_orbit[base_sheet] = true;
    for (size_t k = 0; k < orbit.size(); ++k)
        for (const auto& p : perms) {
            if (!in_orbit[p[orbit[k]]]) {
                in_orbit[p[orbit[k]]] = true;
                orbit.push_back(p[orbit[k]]);
            }
            // also apply the inverse so the orbit is under the full group
            for (size_t i = 0; i < p.size(); ++i)
                if (p[i] == orbit[k] && !in_orbit[i]) {
                    in_orbit[i] = true;
                    orbit.push_back(static_cast<int>(i));
                }
        }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

/// Normality of the covering restricted to one component: with a faithful
/// transitive action, all point stabilizers coincide exactly when the
/// group order equals the degree.
inline bool galois_check(const std::vector<std::vector<int>>& restricted_perms, int d) {
    if (d <= 1) return true;
    std::set<std::vector<int>> group;
    std::vector<int> id(d);
    for (int i = 0; i < d; ++i) id[i] = i;
    group.insert(id);
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& g : frontier)
            for (const auto& h : restricted_perms) {
                std::vector<int> gh(d);
                for (int i = 0; i < d; ++i) gh[i] = h[g[i]];
                if (group.insert(gh).second) next.push_back(gh);
                if (group.size() > 40320)
                    return false;  // far beyond any normal covering of this degree
            }
        frontier = std::move(next);
    }
    return static_cast<int>(group.size()) == d;
}

}  // namespace l2zeta
