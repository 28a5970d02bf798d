#pragma once

#include <set>
#include <vector>

#include "graph.hpp"
#include "poly.hpp"

namespace l2zeta {

/// Counts of translation orbits of primitive closed geodesics per length.
///
/// A closed geodesic of length m in the covering graph projects to a
/// cyclically non-backtracking closed dart word of length m in the
/// quotient with total shift 0, and the translation orbits correspond
/// exactly to such words up to cyclic rotation. A finite word with total
/// shift 0 cannot equal a nonzero translate of itself, so every orbit
/// stabilizer is trivial and each orbit contributes exponent 1.
/// Orientation convention: a word and its reverse count as distinct
/// classes when they differ as cyclic words.
struct GeodesicCensus {
    int max_length = 0;
    std::vector<long long> counts;  // counts[m] = primitive orbits of length m
};

namespace detail {

struct Dart {
    int tail, head;
    long long shift;
    int id;  // inverse dart is id ^ 1
};

}  // namespace detail

inline GeodesicCensus geodesic_census(const VoltageGraph& g, int max_length) {
    if (max_length < 1) throw validation_error("geodesic_census: length bound must be >= 1");
    if (max_length > 24) throw validation_error("geodesic_census: length bound too large for memory budget");
    std::vector<detail::Dart> darts;
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges[i];
        darts.push_back({e.from, e.to, e.shift, 2 * i});
        darts.push_back({e.to, e.from, -e.shift, 2 * i + 1});
    }
    std::vector<std::vector<detail::Dart>> by_tail(g.vertex_count());
    long long max_shift = 1;
    for (const auto& d : darts) {
        by_tail[d.tail].push_back(d);
        max_shift = std::max(max_shift, std::llabs(d.shift));
    }

    GeodesicCensus census;
    census.max_length = max_length;
    census.counts.assign(max_length + 1, 0);

    std::set<std::vector<int>> seen;
    auto canonical = [](const std::vector<int>& w) {
        std::vector<int> best = w;
        std::vector<int> rot = w;
        for (size_t i = 1; i < w.size(); ++i) {
            std::rotate(rot.begin(), rot.begin() + 1, rot.end());
            if (rot < best) best = rot;
        }
        return best;
    };
    auto is_primitive = [](const std::vector<int>& w) {
        size_t m = w.size();
        for (size_t p = 1; p < m; ++p) {
            if (m % p != 0) continue;
            bool periodic = true;
            for (size_t k = 0; k < m && periodic; ++k) periodic = w[k] == w[k % p];
            if (periodic) return false;
        }
        return true;
    };

    std::vector<int> word;
    std::vector<detail::Dart> path;
    auto dfs = [&](auto&& self, int vertex, long long shift) -> void {
        int m = static_cast<int>(word.size());
        if (m > 0 && vertex == path.front().tail && shift == 0 &&
            (m == 1 || word.front() != (word.back() ^ 1))) {
            std::vector<int> canon = canonical(word);
            if (!seen.count(canon)) {
                seen.insert(canon);
                if (is_primitive(word)) census.counts[m] += 1;
            }
        }
        if (m == max_length) return;
        const auto& pool = m == 0 ? darts : by_tail[vertex];
        for (const auto& d : pool) {
            if (m > 0 && d.id == (word.back() ^ 1)) continue;
            if (std::llabs(shift + d.shift) > static_cast<long long>(max_length - m - 1) * max_shift)
                continue;
            word.push_back(d.id);
            path.push_back(d);
            self(self, d.head, shift + d.shift);
            word.pop_back();
            path.pop_back();
        }
    };
    dfs(dfs, -1, 0);
    return census;
}

/// Truncated power series of Z(u) = prod over orbits of (1 - u^len)^-1,
/// degree max_length, exact integer coefficients.
inline std::vector<Int> series_from_census(const GeodesicCensus& census) {
    int deg = census.max_length;
    std::vector<Int> series(deg + 1, 0);
    series[0] = 1;
    for (int m = 1; m <= deg; ++m) {
        for (long long rep = 0; rep < census.counts[m]; ++rep) {
            // multiply by 1 + u^m + u^2m + ...
            std::vector<Int> next(deg + 1, 0);
            for (int i = 0; i <= deg; ++i)
                for (int j = 0; i + j * m <= deg; ++j) next[i + j * m] += series[i];
            series = std::move(next);
        }
    }
    return series;
}

}  // namespace l2zeta
