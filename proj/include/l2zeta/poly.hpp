#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace l2zeta {

/// Dense univariate polynomial over a commutative ring T.
/// Coefficients are stored ascending by power with no trailing zeros;
/// the zero polynomial has an empty coefficient vector.
template <class T>
struct poly {
    std::vector<T> c;

    poly() = default;
    poly(int v) {
        if (v != 0) c.push_back(T(v));
    }
    explicit poly(T v) {
        if (!is_zero(v)) c.push_back(std::move(v));
    }
    explicit poly(std::vector<T> cs) : c(std::move(cs)) { trim(); }

    static poly monomial(int power, T coeff = T(1)) {
        poly p;
        if (is_zero(coeff)) return p;
        p.c.assign(power + 1, T(0));
        p.c[power] = std::move(coeff);
        return p;
    }

    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }

    bool is_zero_poly() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    T coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c.size())) return T(0);
        return c[i];
    }

    const T& lead() const {
        assert(!c.empty());
        return c.back();
    }

    bool operator==(const poly& o) const { return c == o.c; }
    bool operator!=(const poly& o) const { return !(*this == o); }

    poly operator-() const {
        poly r = *this;
        for (auto& x : r.c) x = -x;
        return r;
    }

    poly& operator+=(const poly& o) {
        if (c.size() < o.c.size()) c.resize(o.c.size(), T(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    poly& operator-=(const poly& o) {
        if (c.size() < o.c.size()) c.resize(o.c.size(), T(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        trim();
        return *this;
    }

    poly operator+(const poly& o) const {
        poly r = *this;
        r += o;
        return r;
    }
    poly operator-(const poly& o) const {
        poly r = *this;
        r -= o;
        return r;
    }

    poly operator*(const poly& o) const {
        if (is_zero_poly() || o.is_zero_poly()) return {};
        std::vector<T> r(c.size() + o.c.size() - 1, T(0));
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
        poly p;
        p.c = std::move(r);
        p.trim();
        return p;
    }
    poly& operator*=(const poly& o) { return *this = *this * o; }

    poly operator*(const T& s) const {
        if (is_zero(s)) return {};
        poly r = *this;
        for (auto& x : r.c) x = x * s;
        r.trim();
        return r;
    }

    /// Evaluation by Horner at a point of the coefficient ring.
    T operator()(const T& x) const {
        T acc(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    poly derivative() const {
        poly r;
        for (size_t i = 1; i < c.size(); ++i) r.c.push_back(c[i] * T(static_cast<int>(i)));
        r.trim();
        return r;
    }

    /// Coefficient list reversed: x^deg * p(1/x).
    poly reversed() const {
        poly r = *this;
        std::reverse(r.c.begin(), r.c.end());
        r.trim();
        return r;
    }
};

template <class T>
bool is_zero(const poly<T>& p) {
    return p.is_zero_poly();
}

template <class T>
poly<T> pow(const poly<T>& p, int e) {
    poly<T> r(1);
    poly<T> b = p;
    for (; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        if (e > 1) b *= b;
    }
    return r;
}

/// Quotient/remainder over a coefficient field (T must support division).
template <class T>
std::pair<poly<T>, poly<T>> divmod(const poly<T>& a, const poly<T>& b) {
    if (b.is_zero_poly()) throw validation_error("polynomial division by zero");
    poly<T> q, r = a;
    if (a.degree() < b.degree()) return {q, r};
    q.c.assign(a.degree() - b.degree() + 1, T(0));
    while (!r.is_zero_poly() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        T f = r.lead() / b.lead();
        q.c[k] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c[i + k] -= f * b.c[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

/// Exact quotient over a ring: requires b | a, relies on exact_div of
/// the coefficient type for the leading-coefficient steps.
template <class T>
poly<T> exact_div(const poly<T>& a, const poly<T>& b) {
    if (b.is_zero_poly()) throw validation_error("polynomial division by zero");
    if (a.is_zero_poly()) return {};
    if (a.degree() < b.degree()) throw numeric_error("inexact polynomial division");
    poly<T> q, r = a;
    q.c.assign(a.degree() - b.degree() + 1, T(0));
    while (!r.is_zero_poly() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        T f = exact_div(r.lead(), b.lead());
        q.c[k] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c[i + k] -= f * b.c[i];
        r.trim();
    }
    if (!r.is_zero_poly()) throw numeric_error("inexact polynomial division");
    q.trim();
    return q;
}

// ---- field-coefficient algorithms ----

template <class T>
poly<T> make_monic(poly<T> p) {
    if (p.is_zero_poly()) return p;
    T lead = p.lead();
    for (auto& c : p.c) c = c / lead;
    return p;
}

template <class T>
poly<T> gcd_monic(poly<T> a, poly<T> b) {
    a = make_monic(std::move(a));
    b = make_monic(std::move(b));
    while (!b.is_zero_poly()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = make_monic(std::move(r));
    }
    return a;
}

/// Yun's square-free decomposition over a characteristic-0 field:
/// p = prod f_i^i with the f_i monic, square-free and pairwise coprime.
/// Factors of multiplicity 1 are included; constant factors are not.
template <class T>
std::vector<std::pair<poly<T>, int>> square_free_decomposition(const poly<T>& p_in) {
    std::vector<std::pair<poly<T>, int>> out;
    poly<T> p = make_monic(p_in);
    if (p.degree() < 1) return out;
    poly<T> dp = p.derivative();
    poly<T> g = gcd_monic(p, dp);
    if (g.degree() == 0) {
        out.emplace_back(p, 1);
        return out;
    }
    poly<T> w = divmod(p, g).first;
    poly<T> y = divmod(dp, g).first;
    for (int mult = 1; w.degree() > 0 && mult <= p.degree() + 1; ++mult) {
        poly<T> z = y - w.derivative();
        poly<T> a = gcd_monic(w, z);
        if (a.degree() > 0) out.emplace_back(a, mult);
        w = divmod(w, a).first;
        y = divmod(z, a).first;
    }
    return out;
}

// ---- integer-coefficient specifics ----

using UPoly = poly<Int>;

inline Int content(const UPoly& p) {
    Int g = 0;
    for (const auto& x : p.c) {
        g = gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

inline UPoly primitive_part(const UPoly& p) {
    if (p.is_zero_poly()) return p;
    Int g = content(p);
    if (sgn(p.lead()) < 0) g = -g;
    UPoly r = p;
    for (auto& x : r.c) x = exact_div(x, g);
    return r;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
inline UPoly pseudo_rem(UPoly a, const UPoly& b) {
    assert(!b.is_zero_poly());
    const Int& lb = b.lead();
    int steps = a.degree() - b.degree() + 1;
    while (!a.is_zero_poly() && a.degree() >= b.degree()) {
        Int la = a.lead();
        int k = a.degree() - b.degree();
        for (auto& x : a.c) x *= lb;
        for (int i = 0; i <= b.degree(); ++i) a.c[i + k] -= la * b.c[i];
        a.trim();
        --steps;
    }
    // align the cofactor so the result is exactly lc(b)^(d+1) * a mod b
    UPoly r = a;
    for (int i = 0; i < steps; ++i)
        for (auto& x : r.c) x *= lb;
    return r;
}

/// Primitive PRS gcd over the integers, positive leading coefficient.
inline UPoly gcd(UPoly a, UPoly b) {
    auto abs_lead = [](UPoly p) {
        if (!p.is_zero_poly() && sgn(p.lead()) < 0)
            for (auto& x : p.c) x = -x;
        return p;
    };
    if (a.is_zero_poly()) return abs_lead(b);
    if (b.is_zero_poly()) return abs_lead(a);
    Int cg = gcd(content(a), content(b));
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero_poly()) {
        UPoly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a * cg;
}

inline cplx eval(const UPoly& p, cplx u) {
    cplx acc = 0.0;
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) acc = acc * u + to_double(*it);
    return acc;
}

}  // namespace l2zeta
