#pragma once

#include <cstdio>
#include <string>

#include "report.hpp"

namespace l2zeta {

namespace detail {

inline std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace detail

/// Branch-point diagram: marks for finite branch points, the circle
/// |u| = q^-1/2 and the real segments of C as guides for regular graphs,
/// scale circles of radius 1/sqrt(2) and 1/sqrt(3) otherwise. Fixed
/// 800x800 viewport, emitted by hand so the output is byte-reproducible.
inline std::string render_branch_svg(const AnalysisReport& r) {
    const double size = 800.0, margin = 60.0;
    double extent = 1.0;
    for (const auto& bp : r.branch_points)
        if (!bp.infinite)
            extent = std::max({extent, std::abs(bp.location.real()), std::abs(bp.location.imag())});
    extent *= 1.15;
    double scale = (size / 2.0 - margin) / extent;
    auto X = [&](double re) { return size / 2.0 + re * scale; };
    auto Y = [&](double im) { return size / 2.0 - im * scale; };
    using detail::fmt;

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
         "viewBox=\"0 0 800 800\">\n";
    s += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    s += "<line x1=\"" + fmt(X(-extent)) + "\" y1=\"" + fmt(Y(0)) + "\" x2=\"" + fmt(X(extent)) +
         "\" y2=\"" + fmt(Y(0)) + "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    s += "<line x1=\"" + fmt(X(0)) + "\" y1=\"" + fmt(Y(-extent)) + "\" x2=\"" + fmt(X(0)) +
         "\" y2=\"" + fmt(Y(extent)) + "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";

    if (r.q) {
        double q = static_cast<double>(*r.q);
        double rc = 1.0 / std::sqrt(q);
        s += "<circle cx=\"" + fmt(X(0)) + "\" cy=\"" + fmt(Y(0)) + "\" r=\"" + fmt(rc * scale) +
             "\" fill=\"none\" stroke=\"#4477cc\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"/>\n";
        for (double sign : {1.0, -1.0}) {
            s += "<line x1=\"" + fmt(X(sign / q)) + "\" y1=\"" + fmt(Y(0)) + "\" x2=\"" +
                 fmt(X(sign)) + "\" y2=\"" + fmt(Y(0)) +
                 "\" stroke=\"#4477cc\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
        }
    } else {
        for (double rc : {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(3.0)}) {
            s += "<circle cx=\"" + fmt(X(0)) + "\" cy=\"" + fmt(Y(0)) + "\" r=\"" +
                 fmt(rc * scale) +
                 "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"3 5\"/>\n";
        }
    }

    bool branched_at_infinity = false;
    for (const auto& bp : r.branch_points) {
        if (bp.infinite) {
            branched_at_infinity = true;
            continue;
        }
        double cx = X(bp.location.real()), cy = Y(bp.location.imag());
        const double h = 7.0;
        s += "<path d=\"M " + fmt(cx - h) + " " + fmt(cy - h) + " L " + fmt(cx + h) + " " +
             fmt(cy + h) + " M " + fmt(cx - h) + " " + fmt(cy + h) + " L " + fmt(cx + h) + " " +
             fmt(cy - h) + "\" stroke=\"#cc2222\" stroke-width=\"2.5\"/>\n";
    }

    double ty = 28.0;
    auto text = [&](const std::string& msg) {
        s += "<text x=\"16\" y=\"" + fmt(ty) + "\" font-family=\"monospace\" font-size=\"16\">" +
             msg + "</text>\n";
        ty += 22.0;
    };
    text("sheets: " + std::to_string(r.sheets) + "  genus: " + std::to_string(r.genus));
    text("branch points: " + std::to_string(r.branch_points.size()) +
         (branched_at_infinity ? " (one at infinity)" : ""));
    if (r.q)
        text("guides: |u| = q^-1/2 and the real segments, q = " + std::to_string(*r.q));
    else
        text("not regular; scale circles of radius 1/sqrt(2), 1/sqrt(3)");
    s += "</svg>\n";
    return s;
}

}  // namespace l2zeta
