#pragma once

#include "census.hpp"
#include "monodromy.hpp"

namespace l2zeta {

struct BranchPoint {
    std::optional<cplx> location;  // nullopt = infinity
    std::vector<int> cycles;       // cycle structure on the component, descending
    int order = 0;                 // sum of (cycle length - 1)
    std::optional<bool> in_c;      // set only for regular graphs, finite points
};

struct SurfaceReport {
    int sheets = 0;                // degree d of the component carrying the zeta germ
    std::vector<BranchPoint> branch_points;
    std::vector<Candidate> candidates;  // everything that was probed
    int unbranched_candidates = 0;
    long long total_branching = 0;
    long long genus = 0;
    bool galois = false;
    bool omega_irreducible = false;
    std::vector<std::pair<int, int>> deflation;  // (factor degree, multiplicity)
    int square_free_degree = 0;
    std::optional<TPoly> omega;  // symbolic form, omitted on request
    CharPoly char_data;
    int chi = 0;
    std::optional<int> q;
};

struct SurfaceOptions {
    bool include_symbolic = true;  // carry the symbolic sheet polynomial in the report
    cplx base_point = cplx(0.05, 0.0);
};

namespace detail {

/// Candidate coordinates in the C-set for a (q+1)-regular graph:
/// the circle |u| = q^-1/2 or the real segments [-1,-1/q] and [1/q,1].
inline bool in_c_set(cplx u, int q, double tol = 1e-8) {
    if (std::abs(std::abs(u) - 1.0 / std::sqrt(static_cast<double>(q))) <= tol) return true;
    if (std::abs(u.imag()) <= tol) {
        double a = std::abs(u.real());
        if (a >= 1.0 / q - tol && a <= 1.0 + tol) return true;
    }
    return false;
}

}  // namespace detail

/// Full branch analysis: square-free reduction, discriminant candidates,
/// numeric monodromy at every candidate (plus 0 and infinity), the
/// component carrying the germ at 0, and the resulting genus data.
inline SurfaceReport surface_report(const VoltageGraph& g,
                                    const SurfaceOptions& opts = SurfaceOptions()) {
    SurfaceReport rep;
    rep.chi = g.euler_char();
    rep.q = g.regular_q();
    rep.char_data = char_poly(g);
    const CharPoly& cp = rep.char_data;

    TPoly omega = omega_symbolic(cp);  // throws beyond the symbolic degree limit
    Deflation defl = deflate_repeated_factors(omega);
    if (opts.include_symbolic) rep.omega = omega;
    rep.square_free_degree = defl.square_free.degree();
    for (const auto& [factor, mult] : defl.repeated)
        rep.deflation.emplace_back(factor.degree(), mult);

    std::vector<Candidate> candidates = branch_candidates(defl.square_free, cp);
    rep.candidates = candidates;
    std::vector<cplx> finite;
    for (const auto& c : candidates)
        if (!c.infinite()) finite.push_back(*c.u);

    const poly<RationalFn>& sf = defl.square_free.p;
    auto coeffs_at = [&sf](cplx u) {
        std::vector<cplx> out(sf.degree() + 1);
        for (int k = 0; k <= sf.degree(); ++k) out[k] = sf.coeff(k)(u);
        return out;
    };

    // base fiber and the sheet carrying the germ of Z at 0
    cplx base = opts.base_point;
    std::vector<cplx> base_roots = all_roots(coeffs_at(base));
    cplx germ = 1.0;
    for (cplx r : roots_at(cp, base).roots) germ *= sheet_pair(r).second;
    int base_sheet = -1;
    double best = 1e300, second = 1e300;
    for (size_t i = 0; i < base_roots.size(); ++i) {
        double d = std::abs(base_roots[i] - germ);
        if (d < best) {
            second = best;
            best = d;
            base_sheet = static_cast<int>(i);
        } else if (d < second) {
            second = d;
        }
    }
    if (base_sheet < 0 || second < 1e-9)
        throw numeric_error("surface_report: base sheet identification ambiguous; try a different base point");

    std::vector<std::vector<int>> perms;
    for (const auto& cand : candidates)
        perms.push_back(monodromy_at(coeffs_at, cand, base, base_roots, finite));

    std::vector<int> component = sheet_orbit(base_sheet, perms);
    rep.sheets = static_cast<int>(component.size());

    std::vector<int> all_sheets(base_roots.size());
    for (size_t i = 0; i < all_sheets.size(); ++i) all_sheets[i] = static_cast<int>(i);

    // restrict each permutation to the component
    std::vector<int> index_in_component(base_roots.size(), -1);
    for (size_t i = 0; i < component.size(); ++i) index_in_component[component[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> restricted;
    for (const auto& p : perms) {
        std::vector<int> r(component.size());
        for (size_t i = 0; i < component.size(); ++i) r[i] = index_in_component[p[component[i]]];
        restricted.push_back(std::move(r));
    }

    for (size_t ci = 0; ci < candidates.size(); ++ci) {
        std::vector<int> cycles = cycle_lengths(perms[ci], component);
        int order = 0;
        for (int len : cycles) order += len - 1;
        if (order == 0) {
            ++rep.unbranched_candidates;
            continue;
        }
        BranchPoint bp;
        bp.location = candidates[ci].u;
        bp.cycles = std::move(cycles);
        bp.order = order;
        if (rep.q && !candidates[ci].infinite()) bp.in_c = detail::in_c_set(*candidates[ci].u, *rep.q);
        else if (rep.q) bp.in_c = false;  // infinity is never in C
        rep.total_branching += order;
        rep.branch_points.push_back(std::move(bp));
    }

    std::sort(rep.branch_points.begin(), rep.branch_points.end(),
              [](const BranchPoint& a, const BranchPoint& b) {
                  if (!a.location.has_value()) return false;
                  if (!b.location.has_value()) return true;
                  double ma = std::abs(*a.location), mb = std::abs(*b.location);
                  if (std::abs(ma - mb) > 1e-12) return ma < mb;
                  return std::arg(*a.location) < std::arg(*b.location);
              });

    if (rep.total_branching % 2 != 0)
        throw numeric_error("surface_report: total branching order came out odd");
    rep.genus = rep.total_branching / 2 - rep.sheets + 1;
    rep.galois = galois_check(restricted, rep.sheets);
    rep.omega_irreducible = rep.deflation.empty() &&
                            sheet_orbit(0, perms).size() == base_roots.size();
    return rep;
}

/// Max residual of the u <-> 1/(qu) functional equation over the given
/// samples, matched between the full multisets of sheet values, plus the
/// residual of the leading-coefficient scaling identity.
struct FunctionalEqResult {
    double max_residual = 0.0;
    double lead_scaling_residual = 0.0;
};

inline FunctionalEqResult functional_eq_check(const VoltageGraph& g,
                                              const std::vector<cplx>& samples) {
    auto q_opt = g.regular_q();
    if (!q_opt) throw validation_error("functional_eq_check: graph is not regular");
    int q = *q_opt;
    int v = g.vertex_count(), e = g.edge_count(), chi = g.euler_char();
    ZetaContext ctx(g);
    FunctionalEqResult out;
    for (cplx u : samples) {
        cplx tu = 1.0 / (static_cast<double>(q) * u);
        std::vector<cplx> at_u = sheet_zeta_values(ctx, u);
        std::vector<cplx> at_tu = sheet_zeta_values(ctx, tu);
        cplx factor = std::pow(static_cast<double>(q), 2 * e - v) * ipow(u, 2 * e) *
                      ipow((1.0 - u * u) / (static_cast<double>(q * q) * u * u - 1.0), -chi);
        std::vector<bool> used(at_u.size(), false);
        for (cplx b : at_tu) {
            double best = 1e300;
            int bj = -1;
            for (size_t j = 0; j < at_u.size(); ++j) {
                if (used[j]) continue;
                double d = std::abs(b - factor * at_u[j]);
                if (d < best) {
                    best = d;
                    bj = static_cast<int>(j);
                }
            }
            used[bj] = true;
            out.max_residual = std::max(out.max_residual, best / std::max(1.0, std::abs(b)));
        }
        cplx lhs = eval(ctx.cp.lead, tu) * ipow(static_cast<double>(q) * u * u, v);
        cplx rhs = eval(ctx.cp.lead, u);
        out.lead_scaling_residual =
            std::max(out.lead_scaling_residual, std::abs(lhs / rhs - 1.0));
    }
    return out;
}

/// Zeros of P_u(1): the pole locations of the quotient graph's zeta.
/// Each is matched against the branch candidates and classified by the
/// computed monodromy.
struct PolePoint {
    cplx u;
    bool is_candidate = false;
    bool branched = false;
};

inline std::vector<PolePoint> quotient_pole_compare(const VoltageGraph& g,
                                                    const SurfaceReport& rep) {
    UPoly at_one = at_x(rep.char_data.p, Int(1));
    std::vector<cplx> roots = distinct_complex_roots(at_one);
    std::vector<PolePoint> out;
    for (size_t i = 0; i < roots.size(); ++i) {
        PolePoint pp;
        pp.u = roots[i];
        for (const auto& bp : rep.branch_points)
            if (bp.location && std::abs(*bp.location - pp.u) < 1e-5) pp.branched = true;
        for (const auto& cand : rep.candidates)
            if (!cand.infinite() && std::abs(*cand.u - pp.u) < 1e-5) pp.is_candidate = true;
        out.push_back(pp);
    }
    std::sort(out.begin(), out.end(), [](const PolePoint& a, const PolePoint& b) {
        double ma = std::abs(a.u), mb = std::abs(b.u);
        if (std::abs(ma - mb) > 1e-12) return ma < mb;
        return std::arg(a.u) < std::arg(b.u);
    });
    return out;
}

}  // namespace l2zeta
