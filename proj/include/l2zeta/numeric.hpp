#pragma once

#include <complex>
#include <gmpxx.h>

namespace l2zeta {

using Int = mpz_class;
using cplx = std::complex<double>;

inline bool is_zero(const Int& a) { return sgn(a) == 0; }
inline bool is_zero(long long a) { return a == 0; }
inline bool is_zero(const cplx& a) { return a == cplx(0.0, 0.0); }

// Exact quotient; the caller guarantees divisibility.
inline Int exact_div(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline double to_double(const Int& a) { return a.get_d(); }

}  // namespace l2zeta
