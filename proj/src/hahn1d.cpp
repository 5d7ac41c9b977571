#include "hahn/hahn1d.hpp"

#include <algorithm>

#include "hahn/errors.hpp"

namespace hahn {

namespace {

long lmin(long a, long b) { return std::min(a, b); }
long lmax(long a, long b) { return std::max(a, b); }

}  // namespace

Params1D::Params1D(int l1, int l2, int n) : ell1(l1), ell2(l2), N(n) {
    if (l1 < 1 || l2 < 1 || n < 1)
        throw OutOfRangeError("Params1D: ell1, ell2, N must be positive");
    if (l1 + l2 < n) throw OutOfRangeError("Params1D: requires ell1 + ell2 >= N");
}

Support1D support(const Params1D& p) {
    int lo = p.N - static_cast<int>(lmin(p.ell2, p.N));
    int hi = static_cast<int>(lmin(p.ell1, p.N));
    return Support1D{lo, hi, hi - lo};
}

Rational weight_H(long x, const Params1D& p) {
    if (x < 0 || x > p.N) return 0;
    return binomial(p.ell1, x) * binomial(p.ell2, p.N - x) /
           binomial(p.ell1 + p.ell2, p.N);
}

Rational weight_H_alt(long x, const Params1D& p) {
    if (x < 0 || x > p.N) return 0;
    long l1N = lmax(p.ell1, p.N), l2N = lmax(p.ell2, p.N);
    if (x - p.N + l2N < 0 || l1N - x < 0) return 0;
    Rational num = Rational(factorial(l1N)) * Rational(factorial(l2N)) *
                   pochhammer(rat(-lmin(p.ell1, p.N)), x) *
                   pochhammer(rat(-lmin(p.ell2, p.N)), p.N - x);
    Rational den = Rational(factorial(p.N)) *
                   pochhammer(rat(-p.ell1 - p.ell2), p.N) *
                   Rational(factorial(x - p.N + l2N)) * Rational(factorial(l1N - x));
    return num / den;
}

Rational hahn_classical_weight(long x, const Rational& a, const Rational& b, int N) {
    if (x < 0 || x > N) return 0;
    return Rational(factorial(N)) / pochhammer(a + b + 2, N) *
           pochhammer(a + 1, x) * pochhammer(b + 1, N - x) /
           (Rational(factorial(x)) * Rational(factorial(N - x)));
}

PolyQ hahn_classical(int n, const Rational& a, const Rational& b, int N) {
    if (n < 0 || n > N) throw OutOfRangeError("hahn_classical: requires 0 <= n <= N");
    PolyQ acc = PolyQ::constant(1, 0);
    Rational scalar = 1;  // (-n)_k (n+a+b+1)_k / ((a+1)_k (-N)_k k!)
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            Rational den = (a + k) * rat(-N + k - 1) * rat(k);
            if (den == 0) throw PoleError("hahn_classical: vanishing denominator Pochhammer");
            scalar *= rat(-n + k - 1) * (a + b + rat(n + k)) / den;
        }
        acc += scalar * neg_var_poch(1, 0, k);
    }
    return acc;
}

PolyQ hahn_sQ_raw(int n, long ell1, long ell2, long N) {
    if (n < 0 || n > lmin(ell1, N))
        throw OutOfRangeError("hahn_sQ: requires 0 <= n <= ell1 /\\ N");
    PolyQ acc = PolyQ::constant(1, 0);
    Rational scalar = 1;  // (-n)_k (n-l1-l2-1)_k / ((-l1)_k (-N)_k k!)
    for (int k = 0; k <= n; ++k) {
        if (k > 0)
            scalar *= rat(-n + k - 1) * rat(n - ell1 - ell2 - 1 + k - 1) /
                      (rat(-ell1 + k - 1) * rat(-N + k - 1) * rat(k));
        acc += scalar * neg_var_poch(1, 0, k);
    }
    return acc;
}

PolyQ hahn_sQ(int n, const Params1D& p) { return hahn_sQ_raw(n, p.ell1, p.ell2, p.N); }

Rational inner_product(const PolyQ& f, const PolyQ& g, const Params1D& p) {
    if (f.nvars() != 1 || g.nvars() != 1)
        throw DimensionError("inner_product: univariate polynomials required");
    Support1D s = support(p);
    Rational acc = 0;
    for (int x = s.lo; x <= s.hi; ++x) {
        std::vector<Rational> pt{rat(x)};
        acc += f.eval(pt) * g.eval(pt) * weight_H(x, p);
    }
    return acc;
}

Rational norm_B(int n, const Params1D& p) {
    Support1D s = support(p);
    if (n < 0 || n > s.deg_bound)
        throw OutOfRangeError("norm_B: requires 0 <= n <= deg bound");
    long l1 = p.ell1, l2 = p.ell2, N = p.N;
    Rational num = Rational((n % 2 == 0) ? 1 : -1) * Rational(factorial(n)) *
                   pochhammer(rat(-l2), n) * pochhammer(rat(-l1 - l2 + N), n) *
                   rat(-n + l1 + l2 + 1);
    Rational den = pochhammer(rat(-l1), n) * pochhammer(rat(-l1 - l2), n) *
                   pochhammer(rat(-N), n) * rat(-2 * n + l1 + l2 + 1);
    return num / den;
}

PolyQ Factor1D::product() const {
    PolyQ r = PolyQ::constant(1, prefactor);
    for (long root : linear_roots)
        r = r * (PolyQ::variable(1, 0) - PolyQ::constant(1, rat(root)));
    return r * reduced;
}

Factor1D factorize_thm(int n, const Params1D& p) {
    Support1D s = support(p);
    long l1N = lmin(p.ell1, p.N);
    if (p.ell2 > p.N)
        throw NotApplicableError("factorize_thm: requires ell2 <= N");
    if (n <= s.deg_bound || n > l1N)
        throw NotApplicableError("factorize_thm: requires deg bound < n <= ell1 /\\ N");
    int m = n - s.deg_bound - 1;

    Factor1D out;
    out.m = m;
    out.prefactor = pochhammer(rat(-p.N + p.ell2 + 1), m) / pochhammer(rat(-l1N), n);
    for (long j = p.N - p.ell2; j <= l1N; ++j) out.linear_roots.push_back(j);
    out.reduced_ell1 = p.N - p.ell2 - 1;
    out.reduced_ell2 = std::abs(static_cast<long>(p.N) - p.ell1) - 1;
    out.reduced_N = lmax(p.ell1, p.N);
    out.reduced = hahn_sQ_raw(m, out.reduced_ell1, out.reduced_ell2, out.reduced_N);

    // The decomposition is an identity; any mismatch is a bug, not a data
    // condition.
    if (out.product() != hahn_sQ(n, p))
        throw Error("factorize_thm: decomposition does not re-multiply to sQ_n");
    return out;
}

PolyQ jacobi_G(int n, long ell1, long ell2) {
    if (n < 0 || n > lmin(ell1, ell2))
        throw OutOfRangeError("jacobi_G: requires 0 <= n <= ell1 /\\ ell2");
    PolyQ t = PolyQ::variable(1, 0);
    PolyQ half_one_minus_t = (PolyQ::constant(1, 1) - t).scaled(rat(1, 2));
    PolyQ acc = PolyQ::constant(1, 0);
    PolyQ power = PolyQ::constant(1, 1);
    Rational scalar = 1;  // (-n)_k (n-l1-l2-1)_k / ((-l1)_k k!)
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            scalar *= rat(-n + k - 1) * rat(n - ell1 - ell2 - 1 + k - 1) /
                      (rat(-ell1 + k - 1) * rat(k));
            power = power * half_one_minus_t;
        }
        acc += scalar * power;
    }
    return acc;
}

namespace {

// Coefficients c_k of G_n^{(l1,l2)} as sum_k c_k ((1-s)/2)^k; after the
// substitution s = (1-t)/(1+t) this turns the generating function's left side
// into sum_k c_k t^k (1+t)^{binomial power - k}.
std::vector<Rational> g_series_coeffs(int n, long ell1, long ell2) {
    std::vector<Rational> c(n + 1);
    c[0] = 1;
    for (int k = 1; k <= n; ++k)
        c[k] = c[k - 1] * rat(-n + k - 1) * rat(n - ell1 - ell2 - 1 + k - 1) /
               (rat(-ell1 + k - 1) * rat(k));
    return c;
}

PolyQ binomial_power(int deg) {  // (1+t)^deg
    PolyQ r(1);
    for (int i = 0; i <= deg; ++i) r.add_term({i}, binomial(deg, i));
    return r;
}

}  // namespace

bool genfun_simplex_check(int n, const Params1D& p) {
    Support1D s = support(p);
    if (n < 0 || n > s.deg_bound) throw OutOfRangeError("genfun: requires n <= deg bound");
    auto c = g_series_coeffs(n, p.ell1, p.ell2);
    PolyQ lhs(1);
    for (int k = 0; k <= n; ++k)
        lhs += c[k] * (PolyQ::monomial(1, {k}, 1) * binomial_power(p.N - k));
    PolyQ rhs(1);
    for (int x = 0; x <= p.N; ++x) {
        Rational v = hahn_sQ(n, p).eval({rat(x)});
        rhs.add_term({x}, binomial(p.N, x) * v);
    }
    return lhs == rhs;
}

Rational genfun_b_const(int n, const Params1D& p) {
    long l1 = p.ell1, l2 = p.ell2, N = p.N;
    return pochhammer(rat(-l2), n) * pochhammer(rat(-l1 - lmin(l2, N) + N), n) /
           (pochhammer(rat(-l1), n) * pochhammer(rat(-l2 + lmin(l2, N) - N), n));
}

bool genfun_support_check(int n, const Params1D& p) {
    Support1D s = support(p);
    if (n < 0 || n > s.deg_bound) throw OutOfRangeError("genfun: requires n <= deg bound");
    long alpha = p.ell1 + lmin(p.ell2, p.N) - lmin(p.ell1, p.N);
    long beta = p.ell2 + lmin(p.ell1, p.N) - lmin(p.ell2, p.N);
    auto c = g_series_coeffs(n, alpha, beta);
    PolyQ lhs(1);
    for (int k = 0; k <= n; ++k)
        lhs += c[k] * (PolyQ::monomial(1, {s.lo + k}, 1) * binomial_power(s.deg_bound - k));
    lhs = lhs.scaled(genfun_b_const(n, p));
    PolyQ rhs(1);
    PolyQ q = hahn_sQ(n, p);
    for (int x = s.lo; x <= s.hi; ++x)
        rhs.add_term({x}, binomial(s.deg_bound, lmin(p.ell1, p.N) - x) * q.eval({rat(x)}));
    return lhs == rhs;
}

Rational moment_L(const PolyQ& q, long ell1, long ell2) {
    if (q.nvars() != 1) throw DimensionError("moment_L: univariate polynomial required");
    if (q.total_degree() > ell1 + ell2)
        throw OutOfRangeError("moment_L: degree exceeds ell1 + ell2");
    // Moments m_k = 2F1(-k, -l1; -l1-l2; 2), computed once up to deg q.
    int d = std::max(q.total_degree(), 0);
    std::vector<Rational> m(d + 1);
    for (int k = 0; k <= d; ++k) {
        Rational term = 1, acc = 0;
        for (int j = 0; j <= k; ++j) {
            if (j > 0)
                term *= rat(-k + j - 1) * rat(-ell1 + j - 1) * rat(2) /
                        (rat(-ell1 - ell2 + j - 1) * rat(j));
            acc += term;
        }
        m[k] = acc;
    }
    Rational acc = 0;
    for (const auto& [e, coef] : q.terms()) acc += coef * m[e[0]];
    return acc;
}

Rational moment_h(int n, long ell1, long ell2) {
    if (n < 0 || n > lmin(ell1, ell2))
        throw OutOfRangeError("moment_h: requires n <= ell1 /\\ ell2");
    return Rational(factorial(n)) * pochhammer(rat(-ell2), n) * rat(1 + ell1 + ell2 - n) /
           (pochhammer(rat(-ell1), n) * pochhammer(rat(-ell1 - ell2), n) *
            rat(1 + ell1 + ell2 - 2 * n));
}

std::pair<EvalResult, EvalResult> three_term_coeffs(int n, const Params1D& p) {
    Support1D s = support(p);
    if (n < 0 || n > s.deg_bound)
        throw OutOfRangeError("three_term_coeffs: requires 0 <= n <= deg bound");
    long l1 = p.ell1, l2 = p.ell2, N = p.N;
    Rational dA = rat(2 * n - l1 - l2 - 1) * rat(2 * n - l1 - l2);
    Rational dC = rat(2 * n - l1 - l2 - 1) * rat(2 * n - l1 - l2 - 2);
    EvalResult A = dA == 0 ? EvalResult::undefined("pole in A_n at n = (ell1+ell2)/2")
                           : EvalResult::finite(rat(n - l1 - l2 - 1) * rat(n - l1) *
                                                rat(N - n) / dA);
    EvalResult C = dC == 0 ? EvalResult::undefined("pole in C_n")
                           : EvalResult::finite(rat(n) * rat(n + N - l1 - l2 - 1) *
                                                rat(n - l2 - 1) / dC);
    return {A, C};
}

PolyQ r_poly(int n, long ell1, long ell2) {
    if (n < 0 || n > lmin(ell1, ell2))
        throw OutOfRangeError("r_poly: requires 0 <= n <= ell1 /\\ ell2");
    const int X = 0, Y = 1;
    PolyQ acc(2);
    Rational scalar = 1;  // (-n)_k (n-l1-l2-1)_k / ((-l1)_k k!)
    for (int k = 0; k <= n; ++k) {
        if (k > 0)
            scalar *= rat(-n + k - 1) * rat(n - ell1 - ell2 - 1 + k - 1) /
                      (rat(-ell1 + k - 1) * rat(k));
        PolyQ tail = poch_poly(-PolyQ::variable(2, Y) + PolyQ::constant(2, rat(k)), n - k);
        acc += scalar * (neg_var_poch(2, X, k) * tail);
    }
    return acc;
}

}  // namespace hahn
