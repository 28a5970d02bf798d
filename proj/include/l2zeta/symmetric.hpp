#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "rational_fn.hpp"

namespace l2zeta {

/// Sparse multivariate polynomial over the integers; the exponent vector
/// length fixes the variable count. std::map keys give lex order for free.
using MultiPoly = std::map<std::vector<int>, Int>;

namespace detail {

inline void mp_add(MultiPoly& f, const std::vector<int>& e, const Int& c) {
    if (is_zero(c)) return;
    auto it = f.find(e);
    if (it == f.end())
        f.emplace(e, c);
    else {
        it->second += c;
        if (is_zero(it->second)) f.erase(it);
    }
}

inline MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e = ea;
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            mp_add(r, e, ca * cb);
        }
    return r;
}

inline MultiPoly mp_sub(MultiPoly a, const MultiPoly& b) {
    for (const auto& [e, c] : b) mp_add(a, e, -c);
    return a;
}

/// Variables 0..n-1 are r_i, variables n..2n-1 are s_i.
/// Rewrites s_i^2 -> r_i^2 - 1 until every s exponent is 0 or 1.
inline MultiPoly reduce_s(const MultiPoly& f, int n) {
    MultiPoly out;
    std::vector<std::pair<std::vector<int>, Int>> queue(f.begin(), f.end());
    while (!queue.empty()) {
        auto [e, c] = queue.back();
        queue.pop_back();
        int var = -1;
        for (int i = n; i < 2 * n; ++i)
            if (e[i] >= 2) {
                var = i;
                break;
            }
        if (var < 0) {
            mp_add(out, e, c);
            continue;
        }
        std::vector<int> e1 = e;
        e1[var] -= 2;
        std::vector<int> er = e1;
        er[var - n] += 2;  // r_i^2 factor
        queue.emplace_back(er, c);
        queue.emplace_back(e1, -c);
    }
    return out;
}

inline MultiPoly elementary_symmetric(int n, int i) {
    MultiPoly e;
    std::vector<int> idx(i);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == i) {
            std::vector<int> expo(n, 0);
            for (int k = 0; k < i; ++k) expo[idx[k]] = 1;
            e.emplace(std::move(expo), Int(1));
            return;
        }
        for (int v = start; v <= n - (i - depth); ++v) {
            idx[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    if (i == 0)
        e.emplace(std::vector<int>(n, 0), Int(1));
    else
        rec(rec, 0, 0);
    return e;
}

/// Writes a symmetric polynomial in r_1..r_n as a polynomial in the
/// elementary symmetric functions (Gauss descent on the lex-leading term).
inline MultiPoly symmetrize(MultiPoly f, int n) {
    std::vector<MultiPoly> elem(n + 1);
    for (int i = 0; i <= n; ++i) elem[i] = elementary_symmetric(n, i);
    MultiPoly out;
    while (!f.empty()) {
        auto [lead, c] = *f.rbegin();
        for (int i = 0; i + 1 < n; ++i)
            if (lead[i] < lead[i + 1])
                throw numeric_error("symmetrize: input polynomial is not symmetric");
        std::vector<int> mu(n, 0);
        for (int i = 0; i < n; ++i) mu[i] = lead[i] - (i + 1 < n ? lead[i + 1] : 0);
        MultiPoly term;
        term.emplace(std::vector<int>(n, 0), c);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < mu[i]; ++k) term = mp_mul(term, elem[i + 1]);
        f = mp_sub(std::move(f), term);
        mp_add(out, mu, c);
    }
    return out;
}

}  // namespace detail

/// Coefficients of the sheet-product polynomial prod_I (T - W_I) over all
/// 2^n sign vectors, expressed in the elementary symmetric functions of
/// the roots. Entry k is the T^k coefficient as a polynomial in
/// sigma_1..sigma_n (exponent vectors of length n). Depends only on n.
inline const std::vector<MultiPoly>& sheet_poly_universal(int n) {
    static std::map<int, std::vector<MultiPoly>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    using namespace detail;
    std::vector<MultiPoly> coeffs;  // polynomial in T, ascending, over Z[r, s]
    {
        MultiPoly one;
        one.emplace(std::vector<int>(2 * n, 0), Int(1));
        coeffs.push_back(one);
    }
    for (int mask = 0; mask < (1 << n); ++mask) {
        MultiPoly w;
        w.emplace(std::vector<int>(2 * n, 0), Int(1));
        for (int i = 0; i < n; ++i) {
            MultiPoly factor;
            std::vector<int> er(2 * n, 0), es(2 * n, 0);
            er[i] = 1;
            es[n + i] = 1;
            factor.emplace(er, Int(1));
            factor.emplace(es, Int((mask >> i) & 1 ? 1 : -1));
            w = mp_mul(w, factor);
        }
        std::vector<MultiPoly> next(coeffs.size() + 1);
        for (size_t k = 0; k < coeffs.size(); ++k) {
            for (const auto& [e, c] : coeffs[k]) mp_add(next[k + 1], e, c);
            for (const auto& [e, c] : mp_mul(w, coeffs[k])) mp_add(next[k], e, -c);
        }
        for (auto& c : next) c = reduce_s(c, n);
        coeffs = std::move(next);
    }
    std::vector<MultiPoly> sigma_coeffs;
    for (auto& c : coeffs) {
        MultiPoly in_r;
        for (const auto& [e, v] : c) {
            for (int i = n; i < 2 * n; ++i)
                if (e[i] != 0) throw numeric_error("sheet polynomial: odd power of a square root survived");
            in_r.emplace(std::vector<int>(e.begin(), e.begin() + n), v);
        }
        sigma_coeffs.push_back(detail::symmetrize(std::move(in_r), n));
    }
    return cache.emplace(n, std::move(sigma_coeffs)).first->second;
}

/// Evaluate a polynomial in sigma variables at rational-function values.
inline RationalFn eval_sigma(const MultiPoly& f, const std::vector<RationalFn>& sigma) {
    RationalFn acc(0);
    for (const auto& [e, c] : f) {
        RationalFn term((UPoly(1) * c));
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) term *= sigma[i + 1];
        acc += term;
    }
    return acc;
}

}  // namespace l2zeta
