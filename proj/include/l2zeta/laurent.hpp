#pragma once

#include <map>

#include "poly.hpp"

namespace l2zeta {

/// Laurent polynomial in t whose coefficients are integer polynomials
/// in u. Zero coefficients are never stored, so degree bounds in t are
/// exactly the stored key range.
struct LaurentPoly {
    std::map<int, UPoly> c;  // t-power -> coefficient in u

    LaurentPoly() = default;
    LaurentPoly(int v) {
        if (v != 0) c[0] = UPoly(v);
    }
    explicit LaurentPoly(UPoly p) {
        if (!p.is_zero_poly()) c[0] = std::move(p);
    }

    static LaurentPoly term(int tpow, UPoly coeff) {
        LaurentPoly l;
        if (!coeff.is_zero_poly()) l.c[tpow] = std::move(coeff);
        return l;
    }

    void trim() {
        for (auto it = c.begin(); it != c.end();)
            it = it->second.is_zero_poly() ? c.erase(it) : std::next(it);
    }

    bool is_zero_laurent() const { return c.empty(); }

    int min_tpow() const { return c.empty() ? 0 : c.begin()->first; }
    int max_tpow() const { return c.empty() ? 0 : c.rbegin()->first; }

    UPoly coeff(int tpow) const {
        auto it = c.find(tpow);
        return it == c.end() ? UPoly() : it->second;
    }

    bool operator==(const LaurentPoly& o) const { return c == o.c; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [k, p] : r.c) p = -p;
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [k, p] : o.c) {
            auto it = c.find(k);
            if (it == c.end())
                c.emplace(k, p);
            else {
                it->second += p;
                if (it->second.is_zero_poly()) c.erase(it);
            }
        }
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        r += o;
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        r -= o;
        return r;
    }

    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (const auto& [ka, pa] : c)
            for (const auto& [kb, pb] : o.c) {
                UPoly prod = pa * pb;
                auto it = r.c.find(ka + kb);
                if (it == r.c.end())
                    r.c.emplace(ka + kb, std::move(prod));
                else
                    it->second += prod;
            }
        r.trim();
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// Symmetric under t <-> 1/t.
    bool is_symmetric() const {
        for (const auto& [k, p] : c)
            if (coeff(-k) != p) return false;
        return true;
    }

    /// Substitute t <-> 1/t.
    LaurentPoly inverted() const {
        LaurentPoly r;
        for (const auto& [k, p] : c) r.c.emplace(-k, p);
        return r;
    }

    cplx operator()(cplx u, cplx t) const {
        cplx acc = 0.0;
        for (const auto& [k, p] : c) acc += eval(p, u) * std::pow(t, k);
        return acc;
    }

    /// As an ordinary polynomial in t (coefficients in u), plus the
    /// power of t that was factored out.
    std::pair<poly<UPoly>, int> as_tpoly() const {
        poly<UPoly> p;
        if (c.empty()) return {p, 0};
        int lo = min_tpow();
        p.c.assign(max_tpow() - lo + 1, UPoly());
        for (const auto& [k, q] : c) p.c[k - lo] = q;
        return {p, lo};
    }

    static LaurentPoly from_tpoly(const poly<UPoly>& p, int shift) {
        LaurentPoly l;
        for (size_t i = 0; i < p.c.size(); ++i)
            if (!p.c[i].is_zero_poly()) l.c[static_cast<int>(i) + shift] = p.c[i];
        return l;
    }
};

inline bool is_zero(const LaurentPoly& l) { return l.is_zero_laurent(); }

/// Exact quotient of Laurent polynomials (the caller guarantees b | a).
inline LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero_laurent()) throw validation_error("laurent division by zero");
    if (a.is_zero_laurent()) return {};
    auto [pa, sa] = a.as_tpoly();
    auto [pb, sb] = b.as_tpoly();
    return LaurentPoly::from_tpoly(exact_div(pa, pb), sa - sb);
}

}  // namespace l2zeta
