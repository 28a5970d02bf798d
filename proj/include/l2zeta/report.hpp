#pragma once

#include <json.hpp>

#include "surface.hpp"

namespace l2zeta {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json complex_json(cplx z) {
    return ordered_json{{"re", z.real()}, {"im", z.imag()}};
}

inline cplx complex_from_json(const ordered_json& j) {
    return cplx(j.at("re").get<double>(), j.at("im").get<double>());
}

inline std::vector<std::string> upoly_json(const UPoly& p) {
    std::vector<std::string> out;
    for (int i = 0; i <= p.degree(); ++i) out.push_back(p.coeff(i).get_str());
    if (out.empty()) out.push_back("0");
    return out;
}

inline UPoly upoly_from_json(const std::vector<std::string>& v) {
    UPoly p;
    for (const auto& s : v) p.c.emplace_back(s);
    p.trim();
    return p;
}

}  // namespace detail

/// Everything the analyze command reports, in a JSON-stable form.
struct AnalysisReport {
    int schema = 1;
    int vertices = 0, edges = 0, euler_characteristic = 0;
    std::optional<int> q;

    int degree_x = 0;
    std::vector<std::vector<std::string>> char_coeffs;  // [x power][u power]
    std::vector<std::string> lead;
    bool zeta_identically_one = false;

    bool has_sheet_poly = false;
    bool palindromic = false;
    int sheet_poly_degree = 0;
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> sheet_poly_coeffs;

    int square_free_degree = 0;
    std::vector<std::pair<int, int>> repeated_factors;

    int sheets = 0;
    struct BP {
        bool infinite = false;
        cplx location{};
        std::vector<int> cycles;
        int order = 0;
        std::optional<bool> in_c;
    };
    std::vector<BP> branch_points;
    int unbranched_candidates = 0;
    long long total_branching = 0;
    long long genus = 0;
    bool galois = false;
    bool irreducible = false;

    std::optional<double> functional_max_residual;
    std::optional<double> lead_scaling_residual;
    double theta_oracle_residual = 0.0;
    struct Pole {
        cplx u{};
        bool is_candidate = false;
        bool branched = false;
    };
    std::vector<Pole> quotient_poles;
};

inline ordered_json to_json(const AnalysisReport& r) {
    ordered_json j;
    j["schema"] = r.schema;
    j["graph"] = {{"vertices", r.vertices},
                  {"edges", r.edges},
                  {"euler_characteristic", r.euler_characteristic},
                  {"q", r.q ? ordered_json(*r.q) : ordered_json(nullptr)}};
    ordered_json cp;
    cp["degree_x"] = r.degree_x;
    cp["coefficients"] = r.char_coeffs;
    cp["lead"] = r.lead;
    cp["zeta_identically_one"] = r.zeta_identically_one;
    j["char_poly"] = cp;
    if (r.has_sheet_poly) {
        ordered_json sp;
        sp["degree"] = r.sheet_poly_degree;
        sp["palindromic"] = r.palindromic;
        ordered_json coeffs = ordered_json::array();
        for (const auto& [num, den] : r.sheet_poly_coeffs)
            coeffs.push_back(ordered_json{{"num", num}, {"den", den}});
        sp["coefficients"] = coeffs;
        j["sheet_poly"] = sp;
    } else {
        j["sheet_poly"] = nullptr;
    }
    ordered_json defl;
    defl["square_free_degree"] = r.square_free_degree;
    ordered_json reps = ordered_json::array();
    for (const auto& [deg, mult] : r.repeated_factors)
        reps.push_back(ordered_json{{"degree", deg}, {"multiplicity", mult}});
    defl["repeated_factors"] = reps;
    j["deflation"] = defl;
    ordered_json surf;
    surf["sheets"] = r.sheets;
    ordered_json bps = ordered_json::array();
    for (const auto& bp : r.branch_points) {
        ordered_json b;
        b["location"] = bp.infinite ? ordered_json("inf") : detail::complex_json(bp.location);
        b["cycles"] = bp.cycles;
        b["order"] = bp.order;
        b["in_c"] = bp.in_c ? ordered_json(*bp.in_c) : ordered_json(nullptr);
        bps.push_back(b);
    }
    surf["branch_points"] = bps;
    surf["unbranched_candidates"] = r.unbranched_candidates;
    surf["total_branching"] = r.total_branching;
    surf["genus"] = r.genus;
    surf["galois"] = r.galois;
    surf["irreducible"] = r.irreducible;
    j["surface"] = surf;
    ordered_json checks;
    if (r.functional_max_residual) {
        checks["functional_equation"] = ordered_json{
            {"max_residual", *r.functional_max_residual},
            {"lead_scaling_residual", r.lead_scaling_residual ? *r.lead_scaling_residual : 0.0}};
    } else {
        checks["functional_equation"] = nullptr;
    }
    checks["theta_oracle_residual"] = r.theta_oracle_residual;
    ordered_json poles = ordered_json::array();
    for (const auto& p : r.quotient_poles)
        poles.push_back(ordered_json{{"u", detail::complex_json(p.u)},
                                     {"is_candidate", p.is_candidate},
                                     {"branched", p.branched}});
    checks["quotient_poles"] = poles;
    j["checks"] = checks;
    return j;
}

inline AnalysisReport report_from_json(const ordered_json& j) {
    AnalysisReport r;
    r.schema = j.at("schema").get<int>();
    const auto& g = j.at("graph");
    r.vertices = g.at("vertices").get<int>();
    r.edges = g.at("edges").get<int>();
    r.euler_characteristic = g.at("euler_characteristic").get<int>();
    if (!g.at("q").is_null()) r.q = g.at("q").get<int>();
    const auto& cp = j.at("char_poly");
    r.degree_x = cp.at("degree_x").get<int>();
    r.char_coeffs = cp.at("coefficients").get<std::vector<std::vector<std::string>>>();
    r.lead = cp.at("lead").get<std::vector<std::string>>();
    r.zeta_identically_one = cp.at("zeta_identically_one").get<bool>();
    if (!j.at("sheet_poly").is_null()) {
        r.has_sheet_poly = true;
        const auto& sp = j.at("sheet_poly");
        r.sheet_poly_degree = sp.at("degree").get<int>();
        r.palindromic = sp.at("palindromic").get<bool>();
        for (const auto& c : sp.at("coefficients"))
            r.sheet_poly_coeffs.emplace_back(c.at("num").get<std::vector<std::string>>(),
                                             c.at("den").get<std::vector<std::string>>());
    }
    const auto& defl = j.at("deflation");
    r.square_free_degree = defl.at("square_free_degree").get<int>();
    for (const auto& f : defl.at("repeated_factors"))
        r.repeated_factors.emplace_back(f.at("degree").get<int>(), f.at("multiplicity").get<int>());
    const auto& surf = j.at("surface");
    r.sheets = surf.at("sheets").get<int>();
    for (const auto& b : surf.at("branch_points")) {
        AnalysisReport::BP bp;
        if (b.at("location").is_string())
            bp.infinite = true;
        else
            bp.location = detail::complex_from_json(b.at("location"));
        bp.cycles = b.at("cycles").get<std::vector<int>>();
        bp.order = b.at("order").get<int>();
        if (!b.at("in_c").is_null()) bp.in_c = b.at("in_c").get<bool>();
        r.branch_points.push_back(std::move(bp));
    }
    r.unbranched_candidates = surf.at("unbranched_candidates").get<int>();
    r.total_branching = surf.at("total_branching").get<long long>();
    r.genus = surf.at("genus").get<long long>();
    r.galois = surf.at("galois").get<bool>();
    r.irreducible = surf.at("irreducible").get<bool>();
    const auto& checks = j.at("checks");
    if (!checks.at("functional_equation").is_null()) {
        r.functional_max_residual = checks.at("functional_equation").at("max_residual").get<double>();
        r.lead_scaling_residual =
            checks.at("functional_equation").at("lead_scaling_residual").get<double>();
    }
    r.theta_oracle_residual = checks.at("theta_oracle_residual").get<double>();
    for (const auto& p : checks.at("quotient_poles")) {
        AnalysisReport::Pole pp;
        pp.u = detail::complex_from_json(p.at("u"));
        pp.is_candidate = p.at("is_candidate").get<bool>();
        pp.branched = p.at("branched").get<bool>();
        r.quotient_poles.push_back(pp);
    }
    return r;
}

/// Full pipeline behind the analyze command.
inline AnalysisReport run_analysis(const VoltageGraph& g,
                                   const SurfaceOptions& opts = SurfaceOptions()) {
    AnalysisReport r;
    r.vertices = g.vertex_count();
    r.edges = g.edge_count();
    r.euler_characteristic = g.euler_char();
    r.q = g.regular_q();

    SurfaceReport surf = surface_report(g, opts);
    const CharPoly& cp = surf.char_data;
    r.degree_x = cp.n;
    for (int k = 0; k <= cp.n; ++k) r.char_coeffs.push_back(detail::upoly_json(cp.p.coeff(k)));
    r.lead = detail::upoly_json(cp.lead);

    ZetaContext ctx(g);
    r.zeta_identically_one = true;
    for (cplx probe : {cplx(0.1, 0.0), cplx(0.2, 0.1), cplx(-0.15, 0.05)})
        if (std::abs(zeta_closed_form(ctx, probe).value - 1.0) > 1e-10) {
            r.zeta_identically_one = false;
            break;
        }

    if (surf.omega) {
        r.has_sheet_poly = true;
        r.palindromic = surf.omega->palindromic;
        r.sheet_poly_degree = surf.omega->degree();
        for (int k = 0; k <= surf.omega->degree(); ++k) {
            const RationalFn& c = surf.omega->p.coeff(k);
            r.sheet_poly_coeffs.emplace_back(detail::upoly_json(c.num), detail::upoly_json(c.den));
        }
    }
    r.square_free_degree = surf.square_free_degree;
    r.repeated_factors = surf.deflation;
    r.sheets = surf.sheets;
    for (const auto& bp : surf.branch_points) {
        AnalysisReport::BP b;
        b.infinite = !bp.location.has_value();
        if (bp.location) b.location = *bp.location;
        b.cycles = bp.cycles;
        b.order = bp.order;
        b.in_c = bp.in_c;
        r.branch_points.push_back(std::move(b));
    }
    r.unbranched_candidates = surf.unbranched_candidates;
    r.total_branching = surf.total_branching;
    r.genus = surf.genus;
    r.galois = surf.galois;
    r.irreducible = surf.omega_irreducible;

    if (r.q) {
        std::vector<cplx> samples{cplx(0.07, 0.0), cplx(0.05, 0.02), cplx(0.09, -0.03)};
        FunctionalEqResult feq = functional_eq_check(g, samples);
        r.functional_max_residual = feq.max_residual;
        r.lead_scaling_residual = feq.lead_scaling_residual;
    }

    cplx probe(0.06, 0.02);
    ZetaValue z = zeta_closed_form(ctx, probe);
    ThetaIntegral theta = theta_integral_det(ctx, probe, 1024);
    cplx inv_z = 1.0 / z.value;
    cplx rhs = ipow(1.0 - probe * probe, -r.euler_characteristic) * theta.value;
    r.theta_oracle_residual = std::abs(inv_z - rhs) / std::abs(inv_z);

    r.quotient_poles.clear();
    for (const auto& p : quotient_pole_compare(g, surf))
        r.quotient_poles.push_back({p.u, p.is_candidate, p.branched});
    return r;
}

}  // namespace l2zeta
