#pragma once

#include <string>

#include "poly.hpp"

namespace l2zeta {

/// Quotient of integer-coefficient polynomials in u, kept fully reduced
/// (gcd of numerator and denominator is 1, denominator has positive
/// leading coefficient). Reduction runs after every operation so that
/// downstream discriminant numerators stay minimal.
struct RationalFn {
    UPoly num;
    UPoly den;

    RationalFn() : num(), den(1) {}
    RationalFn(int v) : num(v), den(1) {}
    explicit RationalFn(UPoly n) : num(std::move(n)), den(1) {}
    RationalFn(UPoly n, UPoly d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero_poly()) throw validation_error("rational function with zero denominator");
        reduce();
    }

    void reduce() {
        if (num.is_zero_poly()) {
            den = UPoly(1);
            return;
        }
        UPoly g = gcd(num, den);
        if (g.degree() > 0 || g.coeff(0) != 1) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
        if (sgn(den.lead()) < 0) {
            for (auto& x : num.c) x = -x;
            for (auto& x : den.c) x = -x;
        }
    }

    bool is_zero_fn() const { return num.is_zero_poly(); }
    bool is_polynomial() const { return den.degree() == 0 && den.coeff(0) == 1; }

    bool operator==(const RationalFn& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    RationalFn operator-() const {
        RationalFn r = *this;
        r.num = -r.num;
        return r;
    }

    RationalFn operator+(const RationalFn& o) const {
        return RationalFn(num * o.den + o.num * den, den * o.den);
    }
    RationalFn operator-(const RationalFn& o) const {
        return RationalFn(num * o.den - o.num * den, den * o.den);
    }
    RationalFn operator*(const RationalFn& o) const { return RationalFn(num * o.num, den * o.den); }
    RationalFn operator/(const RationalFn& o) const {
        if (o.is_zero_fn()) throw validation_error("division by zero rational function");
        return RationalFn(num * o.den, den * o.num);
    }
    RationalFn& operator+=(const RationalFn& o) { return *this = *this + o; }
    RationalFn& operator-=(const RationalFn& o) { return *this = *this - o; }
    RationalFn& operator*=(const RationalFn& o) { return *this = *this * o; }
    RationalFn& operator/=(const RationalFn& o) { return *this = *this / o; }

    cplx operator()(cplx u) const { return eval(num, u) / eval(den, u); }
};

inline bool is_zero(const RationalFn& f) { return f.is_zero_fn(); }

inline std::string to_string(const UPoly& p) {
    if (p.is_zero_poly()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        Int c = p.coeff(i);
        if (is_zero(c)) continue;
        if (!s.empty()) s += sgn(c) > 0 ? " + " : " - ";
        else if (sgn(c) < 0) s += "-";
        Int a = abs(c);
        if (a != 1 || i == 0) s += a.get_str();
        if (i > 0) {
            if (a != 1) s += "*";
            s += "u";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

inline std::string to_string(const RationalFn& f) {
    if (f.is_polynomial()) return to_string(f.num);
    return "(" + to_string(f.num) + ")/(" + to_string(f.den) + ")";
}

}  // namespace l2zeta
