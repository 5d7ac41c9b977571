#pragma once

#include <utility>
#include <vector>

#include "hahn/combinatorics.hpp"
#include "hahn/polynomial.hpp"

namespace hahn {

/// Parameters (l1, l2, N) of the one-variable hypergeometric distribution.
struct Params1D {
    int ell1;
    int ell2;
    int N;
    Params1D(int l1, int l2, int n);
};

/// Support [lo, hi] of the weight and the top orthogonal degree.
struct Support1D {
    int lo;
    int hi;
    int deg_bound;
};

Support1D support(const Params1D& p);

/// Weight sH_{l,N}(x), binomial form. Zero outside [lo, hi].
Rational weight_H(long x, const Params1D& p);
/// Second closed form of the same weight (factorial/Pochhammer form).
Rational weight_H_alt(long x, const Params1D& p);

/// Classical Hahn polynomial Q_n(x; a, b, N) as a polynomial in x.
/// Throws PoleError when a denominator Pochhammer (a+1)_k vanishes.
PolyQ hahn_classical(int n, const Rational& a, const Rational& b, int N);

/// Classical Hahn weight w_{a,b}(x; N) on {0,...,N}.
Rational hahn_classical_weight(long x, const Rational& a, const Rational& b, int N);

/// sQ_n(x; l1, l2, N), negative integer parameters, 0 <= n <= l1 /\ N.
PolyQ hahn_sQ(int n, const Params1D& p);
/// Same series without Params1D validation; callers guarantee n <= l1 /\ N
/// (used for reduced polynomials whose parameters fall outside Params1D).
PolyQ hahn_sQ_raw(int n, long ell1, long ell2, long N);

Rational inner_product(const PolyQ& f, const PolyQ& g, const Params1D& p);

/// Closed-form norm sB_n(l, N), 0 <= n <= deg bound.
Rational norm_B(int n, const Params1D& p);

/// Factorization of the out-of-range polynomials: constant, forced roots,
/// and the lower-degree Hahn polynomial, with product == hahn_sQ(n, p).
struct Factor1D {
    Rational prefactor;
    std::vector<long> linear_roots;
    PolyQ reduced;
    int m;
    long reduced_ell1, reduced_ell2, reduced_N;
    PolyQ product() const;
};

Factor1D factorize_thm(int n, const Params1D& p);

/// G_n^{(l1,l2)}(t), n <= l1 /\ l2.
PolyQ jacobi_G(int n, long ell1, long ell2);

/// Generating function over the full range 0..N.
bool genfun_simplex_check(int n, const Params1D& p);
/// Generating function restricted to the support [lo, hi], with constant b.
bool genfun_support_check(int n, const Params1D& p);
Rational genfun_b_const(int n, const Params1D& p);

/// Moment functional with L(x^k) = 2F1(-k, -l1; -l1-l2; 2), deg q <= l1+l2.
Rational moment_L(const PolyQ& q, long ell1, long ell2);
/// h_n = L(G_n G_n).
Rational moment_h(int n, long ell1, long ell2);

/// Recurrence coefficients (A_n, C_n); a vanishing denominator is reported
/// in-band, not thrown.
std::pair<EvalResult, EvalResult> three_term_coeffs(int n, const Params1D& p);

/// R_n(x; l1, l2, y) = (-y)_n sQ_n(x; l1, l2, y) as a polynomial in (x, y).
PolyQ r_poly(int n, long ell1, long ell2);

}  // namespace hahn
