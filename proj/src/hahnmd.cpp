#include "hahn/hahnmd.hpp"

#include <algorithm>

#include "hahn/errors.hpp"

namespace hahn {

namespace {

// One factor of the product definition in cleared form:
//   (-Npoly)_n sQ_n(xj; l1, l2, Npoly)
//     = sum_k (-n)_k (n-l1-l2-1)_k / ((-l1)_k k!) (-xj)_k (-Npoly+k)_{n-k}.
// Scalar numerator zeros are checked before any division, so a term the
// terminating series has already killed never trips a pole; a zero scalar
// denominator under a live numerator is a genuine pole. When the N
// parameter is itself a scalar (the leading factor of the product), a zero
// (-N)_k counts as such a pole: the clearing identity must not regularize
// a diverging raw factor. Pass a negative scalar_N to disable the check
// (a negative scalar parameter never produces a vanishing Pochhammer).
Eval<PolyQ> cleared_factor(int n, long l1, long l2, const PolyQ& xj, const PolyQ& Npoly,
                           long scalar_N) {
    const int nv = xj.nvars();
    PolyQ acc(nv);
    Integer num = 1;  // (-n)_k (n-l1-l2-1)_k
    Integer den = 1;  // (-l1)_k k!
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            num *= Integer(-n + k - 1) * Integer(n - l1 - l2 - 1 + k - 1);
            den *= Integer(-l1 + k - 1) * Integer(k);
        }
        if (num == 0) break;  // Pochhammer zeros persist; the series has terminated.
        if (den == 0)
            return Eval<PolyQ>::undefined("pole: (-" + std::to_string(l1) + ")_" +
                                          std::to_string(k) + " = 0 with nonzero numerator");
        if (scalar_N >= 0 && k > scalar_N)
            return Eval<PolyQ>::undefined("pole: (-" + std::to_string(scalar_N) + ")_" +
                                          std::to_string(k) + " = 0 with nonzero numerator");
        PolyQ tail = poch_poly(-Npoly + PolyQ::constant(nv, rat(k)), n - k);
        acc += rat(num, den) * (poch_poly(-xj, k) * tail);
    }
    return Eval<PolyQ>::finite(acc);
}

Eval<PolyQ> cleared_factor_j(int j, const MultiIndex& nu, const LatticeParams& p) {
    const int d = p.d;
    PolyQ xj = PolyQ::variable(d, j - 1);
    long head = p.N - nu.tail_sum(j + 1);
    PolyQ Npoly = PolyQ::constant(d, rat(head));
    for (int i = 0; i < j - 1; ++i) Npoly -= PolyQ::variable(d, i);
    // Only the leading factor has a scalar N parameter.
    long scalar_N = j == 1 ? head : -1;
    return cleared_factor(nu[j - 1], p.ell[j - 1], zhat_a(j, nu, p), xj, Npoly, scalar_N);
}

Eval<PolyQ> mul(const Eval<PolyQ>& a, const Eval<PolyQ>& b) {
    if (!a.defined()) return a;
    if (!b.defined()) return b;
    return Eval<PolyQ>::finite(a.value() * b.value());
}

void check_index(const MultiIndex& nu, const LatticeParams& p) {
    if (nu.dim() != p.d) throw DimensionError("index dimension mismatch");
    for (int i = 0; i < p.d; ++i)
        if (nu[i] < 0) throw OutOfRangeError("index entries must be nonnegative");
}

}  // namespace

Eval<PolyQ> sQ_nu(const MultiIndex& nu, const LatticeParams& p) {
    check_index(nu, p);
    Eval<PolyQ> prod = Eval<PolyQ>::finite(PolyQ::constant(p.d, 1));
    for (int j = 1; j <= p.d; ++j) prod = mul(prod, cleared_factor_j(j, nu, p));
    return prod;
}

Eval<PolyQ> hat_sQ(const MultiIndex& nu, const LatticeParams& p) {
    check_index(nu, p);
    long t = nu.total();
    if (t > p.N)
        return Eval<PolyQ>::undefined("hat normalization needs |nu| <= N");
    Eval<PolyQ> q = sQ_nu(nu, p);
    if (!q.defined()) return q;
    return Eval<PolyQ>::finite(q.value().scaled(1 / pochhammer(rat(-p.N), t)));
}

Rational sH_nu_at(const MultiIndex& nu, const std::vector<int>& alpha,
                  const LatticeParams& p) {
    check_index(nu, p);
    if (static_cast<int>(alpha.size()) != p.d + 1)
        throw DimensionError("sH_nu_at: alpha must have d+1 entries");
    long asum = 0;
    for (int a : alpha) asum += a;
    if (asum != p.N) throw OutOfRangeError("sH_nu_at: requires |alpha| = N");
    long t = nu.total();
    if (t > p.N) throw OutOfRangeError("sH_nu_at: requires |nu| <= N");
    Rational c = rat(t % 2 == 0 ? 1 : -1) / pochhammer(rat(-p.N), t);
    for (int j = 1; j <= p.d; ++j) {
        Rational den = pochhammer(rat(-zhat_a(j, nu, p)), nu[j - 1]);
        if (den == 0) throw PoleError("sH_nu_at: (-za_j)_{nu_j} = 0");
        c *= pochhammer(rat(-p.ell[j - 1]), nu[j - 1]) / den;
    }
    std::vector<Rational> pt;
    for (int i = 0; i < p.d; ++i) pt.push_back(rat(alpha[i]));
    return c * sQ_nu(nu, p).value().eval(pt);
}

namespace {

// Product of factors (c + m*eps + t), t = 0..k-1, tracked as value of the
// lowest eps-order: the analytic-continuation direction kappa = -ell-1+eps.
struct EpsProd {
    bool dead = false;  // a factor vanished identically in eps
    long order = 0;
    Rational lead = 1;

    void mul_poch(long c, long m, long k) {
        for (long t = 0; t < k; ++t) {
            if (c + t != 0) {
                lead *= rat(c + t);
            } else if (m == 0) {
                dead = true;
                return;
            } else {
                ++order;
                lead *= rat(m);
            }
        }
    }
    void mul(const Rational& v) {
        if (v == 0) dead = true;
        else lead *= v;
    }
};

}  // namespace

EvalResult norm_B_nu(const MultiIndex& nu, const LatticeParams& p) {
    check_index(nu, p);
    const long t = nu.total();
    const long L = p.ell_total();
    const int d = p.d;

    EpsProd num, den;
    num.mul(rat(t % 2 == 0 ? 1 : -1));
    num.mul_poch(-p.N, 0, t);
    num.mul_poch(-L, d + 1, p.N + t);
    den.mul_poch(-L, d + 1, p.N);
    den.mul_poch(-L, d + 1, 2 * t);
    for (int j = 1; j <= d; ++j) {
        long nj = nu[j - 1], lj = p.ell[j - 1], za = zhat_a(j, nu, p);
        num.mul_poch(-za, d + 1 - j, nj);
        num.mul_poch(-lj - za - 1, d + 2 - j, 2 * nj);
        num.mul(Rational(factorial(nj)));
        den.mul_poch(-lj, 1, nj);
        den.mul_poch(-lj - za - 1, d + 2 - j, nj);
    }
    if (den.dead) return EvalResult::undefined("norm denominator vanishes identically");
    if (num.dead || num.order > den.order) return EvalResult::finite(0);
    if (num.order < den.order)
        return EvalResult::undefined("norm closed form diverges at this index");
    return EvalResult::finite(num.lead / den.lead);
}

Rational weight_H_md(const MultiIndex& x, const LatticeParams& p) {
    check_index(x, p);
    long rest = p.N - x.total();
    Rational acc = 1 / binomial(p.ell_total(), p.N);
    for (int i = 0; i < p.d; ++i) acc *= binomial(p.ell[i], x[i]);
    return acc * binomial(p.ell[p.d], rest);
}

Rational weight_H_md_poch(const MultiIndex& x, const LatticeParams& p) {
    check_index(x, p);
    long rest = p.N - x.total();
    if (rest < 0) return 0;
    Rational acc = Rational(factorial(p.N)) / pochhammer(rat(-p.ell_total()), p.N);
    for (int i = 0; i < p.d; ++i)
        acc *= pochhammer(rat(-p.ell[i]), x[i]) / Rational(factorial(x[i]));
    return acc * pochhammer(rat(-p.ell[p.d]), rest) / Rational(factorial(rest));
}

bool vanishing_check(const MultiIndex& nu, const LatticeParams& p) {
    if (in_H(nu, p))
        throw NotApplicableError("vanishing_check: nu lies in H");
    Eval<PolyQ> e = sQ_nu(nu, p);
    if (!e.defined())
        throw NotApplicableError("vanishing_check: sQ_nu undefined: " + e.reason());
    const PolyQ& q = e.value();
    for (const MultiIndex& x : enum_V(p)) {
        std::vector<Rational> pt;
        for (int i = 0; i < p.d; ++i) pt.push_back(rat(x[i]));
        if (q.eval(pt) != 0) return false;
    }
    return true;
}

Eval<PolyQ> sR(int nu2, int ell2, int ell3, int N) {
    if (nu2 < 0 || nu2 > std::min(ell2, ell3) + 1)
        throw OutOfRangeError("sR: requires 0 <= nu2 <= ell2 /\\ ell3 + 1");
    PolyQ x2 = PolyQ::variable(2, 1);
    PolyQ Npoly = PolyQ::constant(2, rat(N)) - PolyQ::variable(2, 0);
    return cleared_factor(nu2, ell2, ell3, x2, Npoly, -1);
}

namespace {

// The first factor of the two-variable product: (-Nhat)_{nu1} sQ_{nu1}(x1;
// lhat, Nhat) in cleared form, together with the prefactor so callers can
// divide back to sQ_{nu1} itself when that is possible. A vanishing
// prefactor with surviving numerator terms is the 0 * infinity situation
// the frontier propositions call not well-defined; the cleared evaluation
// reports it in-band.
struct FirstFactor {
    Eval<PolyQ> cleared;   // (-Nhat)_{nu1} sQ_{nu1}
    Rational prefactor;    // (-Nhat)_{nu1}
};

FirstFactor first_factor(int nu1, int nu2, const LatticeParams& p) {
    long lhat2 = p.ell[1] + p.ell[2] - 2L * nu2;
    long Nhat = p.N - nu2;
    FirstFactor f;
    f.prefactor = pochhammer(rat(-Nhat), nu1);
    f.cleared = cleared_factor(nu1, p.ell[0], lhat2, PolyQ::variable(1, 0),
                               PolyQ::constant(1, rat(Nhat)), Nhat);
    return f;
}

PolyQ root_chain(long from, long to) {  // prod_{k=from}^{to} (x1 - k), univariate
    PolyQ r = PolyQ::constant(1, 1);
    for (long k = from; k <= to; ++k)
        r = r * (PolyQ::variable(1, 0) - PolyQ::constant(1, rat(k)));
    return r;
}

}  // namespace

FrontierReport d2_frontier_classify(int nu1, const LatticeParams& p) {
    if (p.d != 2) throw NotApplicableError("d2_frontier_classify: d = 2 only");
    if (nu1 < 0 || nu1 > p.ell[0])
        throw OutOfRangeError("d2_frontier_classify: nu1 out of range");
    FrontierReport rep;
    rep.nu1 = nu1;
    rep.nu2 = height(nu1, p);
    const long l1 = p.ell[0], l2 = p.ell[1], l3 = p.ell[2], N = p.N;
    const long L = l1 + l2 + l3;

    Eval<PolyQ> r_factor = sR(rep.nu2, static_cast<int>(l2), static_cast<int>(l3),
                              static_cast<int>(N));
    FirstFactor f1 = first_factor(nu1, rep.nu2, p);
    rep.direct_undefined = !r_factor.defined() || !f1.cleared.defined();
    // The iff-conditions, with the two boundary corrections forced by the
    // worked cases: (i) needs ell3 > ell2 strictly (the equal-parameter case
    // is the limiting one that carries a value), and (ii) starts one column
    // earlier, at nu1 = 2N - ell2 - ell3 (the overlap column of the height
    // ranges has the same divergence).
    rep.predicted_undefined = (l3 > l2 && nu1 <= l3 - l2) ||
                              (L > 2 * N && nu1 >= 1 && nu1 >= 2 * N - l2 - l3);

    if (f1.cleared.defined() && f1.prefactor != 0)
        rep.factor1 = f1.cleared.value().scaled(1 / f1.prefactor);

    // First-factor closed forms. The split statements are symmetric in
    // (ell2, ell3) because only ell2 + ell3 - 2 nu2 enters the factor;
    // degree 0 and 1 factorizations are trivial and carry no formula
    // (form A needs nu1 >= 1, form B nu1 >= 2).
    const long lo = std::min(l2, l3), hi = std::max(l2, l3);
    const long gap = hi - lo, corner = std::labs(2 * N - L);
    // The forms A and B have denominator (-N+lo-i+1)_{nu1}, which equals the
    // j = 1 product prefactor (-Nhat)_{nu1}; the cleared statements below
    // are division free and remain exact assertions when both vanish.
    // Form B's extra linear factor is the degree-one reduced polynomial of
    // the 1D factorization, sQ_1(x1; N-hi-i, |Nhat-l1|-1, l1 v Nhat).
    std::optional<PolyQ> closed_cleared;
    const long Nhat = N - rep.nu2;
    const long lhat2 = l2 + l3 - 2L * rep.nu2;
    if (nu1 >= gap - 1 && nu1 <= l1 - corner && nu1 >= 1) {
        long j = nu1 - gap;
        long i = (j + 1) / 2;  // j >= -1 here, so this is floor((j+1)/2)
        bool odd = (j % 2 + 2) % 2 == 1;
        PolyQ chain = root_chain(N - hi - i + 1, N - lo + i - 1);
        Rational denom = pochhammer(rat(-N + lo - i + 1), nu1);
        if (odd) {  // j = 2i - 1, factorization applied with m = 0
            rep.split = SplitForm::A;
            closed_cleared = chain;
            if (denom != 0) rep.split_closed_form = chain.scaled(1 / denom);
        } else if (Nhat - lhat2 - 1 >= 1) {  // j = 2i, factorization with m = 1
            rep.split = SplitForm::B;
            long la = N - hi - i;
            long lb = std::labs(Nhat - l1) - 1;
            long nc = std::max(l1, Nhat);
            // (hi+i-N) * sQ_1(x1; la, lb, nc), combined so la never divides.
            PolyQ lin = PolyQ::constant(1, rat(hi + i - N)) +
                        PolyQ::variable(1, 0).scaled(rat(la + lb) / rat(nc));
            closed_cleared = lin * chain;
            if (denom != 0) rep.split_closed_form = closed_cleared->scaled(1 / denom);
        }
    } else if (L <= 2 * N && nu1 >= l1 - (2 * N - L) + 1) {
        long j = nu1 - l1 + (2 * N - L);
        rep.split = SplitForm::C;
        PolyQ chain = root_chain(2 * N - L - j + 1, l1);
        Rational denom = pochhammer(rat(-l1), nu1);
        rep.split_closed_form = chain.scaled(1 / denom);
        closed_cleared = chain.scaled(f1.prefactor / denom);
    }

    if (closed_cleared && f1.cleared.defined())
        rep.split_matches = *closed_cleared == f1.cleared.value();

    if (rep.direct_undefined) rep.kind = FrontierKind::Undefined;
    else if (rep.split != SplitForm::None && rep.split_matches) rep.kind = FrontierKind::Splits;
    else rep.kind = FrontierKind::General;
    return rep;
}

Rational elementary_E(int k, const MultiIndex& x, const MultiIndex& y,
                      const LatticeParams& p) {
    check_index(x, p);
    check_index(y, p);
    if (k < 0) throw OutOfRangeError("elementary_E: k must be nonnegative");
    std::vector<long> X, Y;
    for (int i = 0; i < p.d; ++i) X.push_back(x[i]), Y.push_back(y[i]);
    X.push_back(p.N - x.total());
    Y.push_back(p.N - y.total());

    Rational acc = 0;
    std::vector<int> g(p.d + 1, 0);
    // Walk compositions of k into d+1 parts capped by ell.
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == p.d) {
            if (rem > p.ell[pos]) return;
            g[pos] = rem;
            Rational term = 1;
            for (int i = 0; i <= p.d; ++i) {
                term *= pochhammer(rat(-X[i]), g[i]) * pochhammer(rat(-Y[i]), g[i]) /
                        (pochhammer(rat(-p.ell[i]), g[i]) * Rational(factorial(g[i])));
            }
            acc += term;
            return;
        }
        for (int v = 0; v <= std::min(rem, p.ell[pos]); ++v) {
            g[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, k);
    return acc;
}

int max_H_degree(const LatticeParams& p) {
    // |nu| <= min(N, |ell| - N) and the bound is attained in H.
    int m = 0;
    for (const MultiIndex& nu : enum_H(p)) m = std::max<long>(m, nu.total());
    return m;
}

HahnBasis::HahnBasis(const LatticeParams& params)
    : p(params), V(enum_V(params)), H(enum_H(params)), CH(enum_CH(params)) {
    for (const MultiIndex& x : V) weight.push_back(weight_H_md(x, p));
    for (const MultiIndex& nu : H) {
        PolyQ q = sQ_nu(nu, p).value();
        std::vector<Rational> vals;
        vals.reserve(V.size());
        for (const MultiIndex& x : V) {
            std::vector<Rational> pt;
            for (int i = 0; i < p.d; ++i) pt.push_back(rat(x[i]));
            vals.push_back(q.eval(pt));
        }
        poly.emplace(nu, std::move(q));
        norm.emplace(nu, norm_B_nu(nu, p).value());
        value.emplace(nu, std::move(vals));
    }
}

int HahnBasis::v_index(const MultiIndex& x) const {
    auto it = std::lower_bound(V.begin(), V.end(), x, GradedLexMI{});
    if (it == V.end() || !(*it == x)) throw OutOfRangeError("point not in V");
    return static_cast<int>(it - V.begin());
}

Rational kernel_P_direct(int n, const MultiIndex& x, const MultiIndex& y,
                         const HahnBasis& basis) {
    int ix = basis.v_index(x), iy = basis.v_index(y);
    Rational acc = 0;
    for (const MultiIndex& nu : basis.H) {
        if (nu.total() != n) continue;
        const auto& vals = basis.value.at(nu);
        acc += vals[ix] * vals[iy] / basis.norm.at(nu);
    }
    return acc;
}

Rational kernel_P_closed(int n, const MultiIndex& x, const MultiIndex& y,
                         const LatticeParams& p) {
    if (n < 0 || n > p.ell_min())
        throw NotApplicableError("kernel_P_closed: requires 0 <= n <= ell_min");
    if (!in_V(x, p) || !in_V(y, p))
        throw OutOfRangeError("kernel_P_closed: requires x, y in V");
    long L = p.ell_total();
    Rational front = pochhammer(rat(-p.N), n) * pochhammer(rat(-L), p.N) *
                     pochhammer(rat(-L), n) * rat(L + 1 - 2 * n) /
                     (Rational(factorial(n)) * pochhammer(rat(-L), p.N + n) *
                      rat(L + 1 - n));
    Rational sum = 0;
    Rational coeff = 1;  // (-n)_k (n-1-L)_k / ((-N)_k)^2
    for (int k = 0; k <= n; ++k) {
        if (k > 0)
            coeff *= rat(-n + k - 1) * rat(n - 1 - L + k - 1) /
                     (rat(-p.N + k - 1) * rat(-p.N + k - 1));
        sum += coeff * elementary_E(k, x, y, p);
    }
    return front * sum;
}

Rational kernel_P(int n, const MultiIndex& x, const MultiIndex& y,
                  const LatticeParams& p, bool closed) {
    if (closed) return kernel_P_closed(n, x, y, p);
    HahnBasis basis(p);
    if (n < 0 || n > max_H_degree(p))
        throw OutOfRangeError("kernel_P: degree beyond the basis");
    return kernel_P_direct(n, x, y, basis);
}

Rational poisson_Phi(const Rational& r, const MultiIndex& x, const MultiIndex& y,
                     const HahnBasis& basis) {
    int M = max_H_degree(basis.p);
    Rational acc = 0, rp = 1;
    for (int n = 0; n <= M; ++n) {
        acc += kernel_P_direct(n, x, y, basis) * rp;
        rp *= r;
    }
    return acc;
}

std::map<std::vector<int>, Rational> genfun_md(const MultiIndex& nu,
                                               const LatticeParams& p) {
    if (!in_H(nu, p)) throw OutOfRangeError("genfun_md: requires nu in H");
    const int d = p.d, nv = d + 1;
    // S_j = y_j + ... + y_{d+1}; the G_nu factor for slot j contributes
    // sum_k c_{jk} S_j^{nu_j - k} S_{j+1}^k after homogenization.
    std::vector<PolyQ> S(d + 3, PolyQ(nv));
    for (int j = 1; j <= d + 1; ++j) {
        PolyQ s(nv);
        for (int i = j - 1; i <= d; ++i) s += PolyQ::variable(nv, i);
        S[j] = s;
    }
    S[d + 2] = PolyQ::constant(nv, 0);

    PolyQ prod = PolyQ::constant(nv, 1);
    for (int j = 1; j <= d; ++j) {
        long n = nu[j - 1], za = zhat_a(j, nu, p), lj = p.ell[j - 1];
        std::vector<PolyQ> spow{PolyQ::constant(nv, 1)}, tpow{PolyQ::constant(nv, 1)};
        for (long k = 1; k <= n; ++k) {
            spow.push_back(spow.back() * S[j]);
            tpow.push_back(tpow.back() * S[j + 1]);
        }
        PolyQ factor(nv);
        Rational c = 1;  // (-n)_k (n-za-lj-1)_k / ((-za)_k k!)
        for (long k = 0; k <= n; ++k) {
            if (k > 0) c *= rat(-n + k - 1) * rat(n - za - lj - 1 + k - 1) /
                            (rat(-za + k - 1) * rat(k));
            factor += c * (spow[n - k] * tpow[k]);
        }
        prod = prod * factor;
    }
    // Remaining homogenization power |y|^{N - |nu|}.
    PolyQ ypow = PolyQ::constant(nv, 1);
    for (long i = 0; i < p.N - nu.total(); ++i) ypow = ypow * S[1];
    prod = prod * ypow;

    std::map<std::vector<int>, Rational> out;
    // All alpha with |alpha| = N, including zero coefficients.
    std::vector<int> alpha(nv, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == nv - 1) {
            alpha[pos] = rem;
            Rational scale = 1;
            for (int i = 0; i < nv; ++i) scale *= Rational(factorial(alpha[i]));
            scale /= Rational(factorial(p.N));
            out[alpha] = prod.coeff(alpha) * scale;
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            alpha[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, p.N);
    return out;
}

}  // namespace hahn
