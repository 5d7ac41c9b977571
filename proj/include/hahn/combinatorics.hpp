#pragma once

#include "hahn/rational.hpp"

namespace hahn {

/// Rising factorial (a)_k = a(a+1)...(a+k-1); empty product for k = 0.
inline Rational pochhammer(const Rational& a, long k) {
    if (k < 0) throw OutOfRangeError("pochhammer: k must be nonnegative");
    Rational r = 1;
    Rational t = a;
    for (long i = 0; i < k; ++i, t += 1) r *= t;
    return r;
}

/// Integer fast path of (a)_k.
inline Integer pochhammer_i(long a, long k) {
    if (k < 0) throw OutOfRangeError("pochhammer: k must be nonnegative");
    Integer r = 1;
    for (long i = 0; i < k; ++i) r *= a + i;
    return r;
}

/// (a)_k == 0 for integer a exactly when a <= 0 < a + k.
inline bool pochhammer_is_zero(long a, long k) { return a <= 0 && a + k > 0; }

inline Integer factorial(long n) {
    if (n < 0) throw OutOfRangeError("factorial of negative integer");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

/// Binomial coefficient with the usual out-of-range convention:
/// 0 for k < 0 or k > n. Requires n >= 0.
inline Rational binomial(long n, long k) {
    if (n < 0) throw OutOfRangeError("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Rational(r);
}

}  // namespace hahn
