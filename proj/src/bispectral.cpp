#include "hahn/bispectral.hpp"

#include <algorithm>

#include "hahn/errors.hpp"

namespace hahn {

const Rational& GridFunction::at(const MultiIndex& i) const {
    auto it = values.find(i);
    if (it == values.end()) throw GridDomainError("grid value missing");
    return it->second;
}

void GridFunction::set(const MultiIndex& i, Rational v) { values[i] = std::move(v); }

// ---------------------------------------------------------------------------
// L^x_k

Stencil make_Lx(int k, const LatticeParams& p) {
    if (k < 1 || k > p.d) throw OutOfRangeError("make_Lx: requires 1 <= k <= d");
    const int d = p.d;
    const int first = d - k;  // operator acts on variables first..d-1
    Stencil st;
    std::vector<StencilTerm> off_diag;

    auto add = [&](std::vector<int> off, std::function<Rational(const MultiIndex&)> c) {
        off_diag.push_back(StencilTerm{
            std::move(off), [c](const MultiIndex& x) { return EvalResult::finite(c(x)); }});
    };

    for (int i = first; i < d; ++i) {
        for (int j = first; j < d; ++j) {
            if (i == j) continue;
            std::vector<int> off(d, 0);
            off[i] = 1;
            off[j] = -1;
            long li = p.ell[i];
            add(off, [i, j, li](const MultiIndex& x) -> Rational {
                return rat(x[j]) * rat(x[i] - li);
            });
        }
        std::vector<int> up(d, 0);
        up[i] = 1;
        long li = p.ell[i], N = p.N;
        add(up, [i, li, N](const MultiIndex& x) -> Rational {
            return rat(x[i] - li) * rat(N - x.total());
        });
        std::vector<int> down(d, 0);
        down[i] = -1;
        long ld1 = p.ell[p.d];
        add(down, [i, ld1, N](const MultiIndex& x) -> Rational {
            return rat(x[i]) * rat(N - x.total() - ld1);
        });
    }

    // Diagonal collects -sum of the shift coefficients (each term is E - 1).
    std::vector<std::function<EvalResult(const MultiIndex&)>> coeffs;
    for (const auto& t : off_diag) coeffs.push_back(t.coeff);
    StencilTerm diag{std::vector<int>(d, 0), [coeffs](const MultiIndex& x) {
                         Rational acc = 0;
                         for (const auto& c : coeffs) acc -= c(x).value();
                         return EvalResult::finite(acc);
                     }};
    st.terms = std::move(off_diag);
    st.terms.push_back(std::move(diag));
    return st;
}

GridFunction apply_Lx(int k, const GridFunction& f, const LatticeParams& p) {
    Stencil st = make_Lx(k, p);
    GridFunction out;
    out.domain = f.domain;
    for (const MultiIndex& x : f.domain) {
        Rational acc = 0;
        for (const StencilTerm& t : st.terms) {
            Rational c = t.coeff(x).value();
            if (c == 0) continue;
            MultiIndex y = x;
            for (int i = 0; i < p.d; ++i) y[i] += t.offset[i];
            if (!f.has(y))
                throw GridDomainError("apply_Lx: value needed outside domain with nonzero coefficient");
            acc += c * f.at(y);
        }
        out.set(x, acc);
    }
    return out;
}

Rational lx_eigenvalue(int k, const MultiIndex& nu, const LatticeParams& p) {
    long nt = nu.tail_sum(p.d - k + 1);
    long lt = p.ell_tail(p.d - k + 1);
    return rat(-nt) * rat(nt - lt - 1);
}

// ---------------------------------------------------------------------------
// Index-side coefficient tables, generic over the scalar type so the same
// construction serves numeric evaluation and the symbolic identity checks.

namespace {

template <typename T>
struct TableCtx {
    std::vector<T> nu;   // entries nu_1..nu_dk
    std::vector<T> ell;  // entries ell_1..ell_{dk+1}
    T N;
    std::function<T(long)> cst;
    std::function<T(const T&, const Rational&)> scale;

    int dk() const { return static_cast<int>(nu.size()); }
    T nu_tail(int i) const {  // |nu^i|, 1 <= i <= dk+1
        T acc = cst(0);
        for (int t = i - 1; t < dk(); ++t) acc = acc + nu[t];
        return acc;
    }
    T ell_tail(int i) const {  // |ell^i|, 1 <= i <= dk+2
        T acc = cst(0);
        for (int t = i - 1; t <= dk(); ++t) acc = acc + ell[t];
        return acc;
    }
};

template <typename T>
T table_B(const TableCtx<T>& c, int i, int j, int k) {
    if (i == 0) {
        if (j != 0) throw TableError("coeff_B: B_0 defined only for j = 0");
        if (k == 0) return c.scale(c.ell_tail(1), rat(1, 2)) - c.N;
        if (k == 1) return c.N - c.nu_tail(1);
        if (k == -1) return c.nu_tail(1) - c.ell_tail(1) + c.N - c.cst(1);
        throw TableError("coeff_B: k outside {-1,0,1}");
    }
    if (i < 1 || i > c.dk()) throw TableError("coeff_B: i out of range");
    const T& ni = c.nu[i - 1];
    const T& li = c.ell[i - 1];
    T ti = c.nu_tail(i), ti1 = c.nu_tail(i + 1);
    T Li = c.ell_tail(i), Li1 = c.ell_tail(i + 1);
    T z = ni + c.cst(2) * ti1;  // nu_i + 2|nu^{i+1}|

    if (j == 0 && k == 0)
        return ti * (ti - Li - c.cst(1)) + ti1 * (ti1 - Li1 - c.cst(1)) +
               c.scale(Li1 * (Li + c.cst(2)), rat(1, 2));
    if (j == 0 && k == 1) return c.cst(0) - ni * (z - Li - c.cst(1));
    if (j == 0 && k == -1) return (li - ni) * (z - Li1 - c.cst(1));
    if (j == 1 && k == 0) return (li - ni) * (z - Li - c.cst(1));
    if (j == -1 && k == 0) return c.cst(0) - ni * (z - Li1 - c.cst(1));
    if (j == 1 && k == 1) return (z - Li - c.cst(1)) * (z - Li);
    if (j == -1 && k == 1) return ni * (ni - c.cst(1));
    if (j == 1 && k == -1) return (li - ni) * (li - ni - c.cst(1));
    if (j == -1 && k == -1) return (z - Li1 - c.cst(1)) * (z - Li1 - c.cst(2));
    throw TableError("coeff_B: (j,k) outside the table");
}

template <typename T>
T table_b(const TableCtx<T>& c, int i, int j) {
    if (i < 1 || i > c.dk()) throw TableError("coeff_b: i out of range");
    T w = c.cst(2) * c.nu_tail(i) - c.ell_tail(i);  // 2|nu^i| - |ell^i|
    if (j == 0) return c.scale(w * (w - c.cst(2)), rat(1, 2));
    if (j == 1) return w * (w - c.cst(1));
    if (j == -1) return (w - c.cst(2)) * (w - c.cst(1));
    throw TableError("coeff_b: j outside {-1,0,1}");
}

TableCtx<Rational> full_ctx(const MultiIndex& nu, const LatticeParams& p) {
    TableCtx<Rational> c;
    for (int i = 0; i < p.d; ++i) c.nu.push_back(rat(nu[i]));
    for (int i = 0; i <= p.d; ++i) c.ell.push_back(rat(p.ell[i]));
    c.N = rat(p.N);
    c.cst = [](long v) { return rat(v); };
    c.scale = [](const Rational& v, const Rational& s) { return v * s; };
    return c;
}

// Context of the k-dimensional sub-operator L^nu_k: indices nu_1..nu_k with
// parameters (ell_1..ell_k, |ell^{k+1}| - 2|nu^{k+1}|) and N - |nu^{k+1}|.
TableCtx<Rational> sub_ctx(int k, const MultiIndex& nu, const LatticeParams& p) {
    TableCtx<Rational> c;
    for (int i = 0; i < k; ++i) c.nu.push_back(rat(nu[i]));
    for (int i = 0; i < k; ++i) c.ell.push_back(rat(p.ell[i]));
    c.ell.push_back(rat(zhat_a(k, nu, p)));
    c.N = rat(p.N - nu.tail_sum(k + 1));
    c.cst = [](long v) { return rat(v); };
    c.scale = [](const Rational& v, const Rational& s) { return v * s; };
    return c;
}

// A numerator zero is "structural" when the integer index alone forces it
// (factors nu_i or nu_i - 1): such C_mu vanish along every parameter
// perturbation, so the term is dropped exactly. These are precisely the
// boundary-condition cases. A zero that involves ell or N is parametric.
bool structural_zero(int t, int jt, int kt, const TableCtx<Rational>& ctx) {
    if (t == 0) return false;
    const Rational& ni = ctx.nu[t - 1];
    if (jt == 0 && kt == 1) return ni == 0;
    if (jt == -1 && kt == 0) return ni == 0;
    if (jt == -1 && kt == 1) return ni == 0 || ni == 1;
    return false;
}

EvalResult c_from_ctx(const TableCtx<Rational>& ctx, const std::vector<int>& mu) {
    const int k = ctx.dk();
    for (int t = 0; t <= k; ++t) {
        int jt = t == 0 ? 0 : mu[t - 1];
        int kt = t == k ? 0 : mu[t];
        if (structural_zero(t, jt, kt, ctx)) return EvalResult::finite(0);
    }
    Rational den = 1;
    for (int t = 1; t <= k; ++t) {
        Rational b = table_b(ctx, t, mu[t - 1]);
        // Without a structural numerator zero the limit of C_mu at a
        // vanishing b is direction dependent, hence undefined.
        if (b == 0)
            return EvalResult::undefined("b_" + std::to_string(t) + "^" +
                                         std::to_string(mu[t - 1]) +
                                         " = 0 at a degenerate index");
        den *= b;
    }
    Rational num = 1;
    for (int t = 0; t <= k; ++t) {
        int jt = t == 0 ? 0 : mu[t - 1];
        int kt = t == k ? 0 : mu[t];
        num *= table_B(ctx, t, jt, kt);
    }
    return EvalResult::finite(num / den);
}

}  // namespace

Rational coeff_B(int i, int j, int k, const MultiIndex& nu, const LatticeParams& p) {
    return table_B(full_ctx(nu, p), i, j, k);
}

Rational coeff_b(int i, int j, const MultiIndex& nu, const LatticeParams& p) {
    return table_b(full_ctx(nu, p), i, j);
}

EvalResult coeff_C(const std::vector<int>& mu, const MultiIndex& nu,
                   const LatticeParams& p) {
    if (static_cast<int>(mu.size()) != p.d)
        throw DimensionError("coeff_C: mu must have d entries");
    if (std::all_of(mu.begin(), mu.end(), [](int v) { return v == 0; }))
        throw OutOfRangeError("coeff_C: mu = 0 is the diagonal, not a table entry");
    return c_from_ctx(full_ctx(nu, p), mu);
}

std::pair<PolyQ, PolyQ> coeff_C_symbolic(const std::vector<int>& mu, int d) {
    if (static_cast<int>(mu.size()) != d)
        throw DimensionError("coeff_C_symbolic: mu must have d entries");
    const int nv = 2 * d + 2;  // nu_1..nu_d, ell_1..ell_{d+1}, N
    TableCtx<PolyQ> c;
    for (int i = 0; i < d; ++i) c.nu.push_back(PolyQ::variable(nv, i));
    for (int i = 0; i <= d; ++i) c.ell.push_back(PolyQ::variable(nv, d + i));
    c.N = PolyQ::variable(nv, 2 * d + 1);
    c.cst = [nv](long v) { return PolyQ::constant(nv, rat(v)); };
    c.scale = [](const PolyQ& v, const Rational& s) { return v.scaled(s); };

    PolyQ num = c.cst(1), den = c.cst(1);
    for (int t = 0; t <= d; ++t) {
        int jt = t == 0 ? 0 : mu[t - 1];
        int kt = t == d ? 0 : mu[t];
        num = num * table_B(c, t, jt, kt);
    }
    for (int t = 1; t <= d; ++t) den = den * table_b(c, t, mu[t - 1]);
    return {num, den};
}

std::vector<LnuTerm> lnu_terms(int k, const LatticeParams& p, const MultiIndex& nu) {
    if (k < 1 || k > p.d) throw OutOfRangeError("lnu_terms: requires 1 <= k <= d");
    if (nu.dim() != p.d) throw DimensionError("lnu_terms: index dimension mismatch");
    TableCtx<Rational> ctx = sub_ctx(k, nu, p);
    std::vector<LnuTerm> out;
    std::vector<int> mu(k, -1);
    while (true) {
        if (std::any_of(mu.begin(), mu.end(), [](int v) { return v != 0; })) {
            LnuTerm t;
            t.mu = mu;
            t.offset.assign(p.d, 0);
            for (int i = 1; i <= k; ++i)
                t.offset[i - 1] = mu[i - 1] - (i == k ? 0 : mu[i]);
            t.coeff = c_from_ctx(ctx, mu);
            out.push_back(std::move(t));
        }
        int i = 0;
        while (i < k && mu[i] == 1) mu[i++] = -1;
        if (i == k) break;
        ++mu[i];
    }
    return out;
}

EvalResult apply_Lnu_at(int k, const LatticeParams& p, const MultiIndex& nu,
                        const std::function<EvalResult(const MultiIndex&)>& g) {
    EvalResult center = g(nu);
    if (!center.defined()) return center;
    Rational acc = 0;
    for (const LnuTerm& t : lnu_terms(k, p, nu)) {
        if (!t.coeff.defined())
            return EvalResult::undefined("coefficient undefined at mu: " + t.coeff.reason());
        if (t.coeff.value() == 0) continue;  // boundary convention: dropped terms are exact zeros
        MultiIndex shifted = nu;
        for (int i = 0; i < p.d; ++i) shifted[i] += t.offset[i];
        for (int i = 0; i < p.d; ++i)
            if (shifted[i] < 0)
                throw GridDomainError("apply_Lnu_at: nonzero coefficient on negative shift");
        EvalResult val = g(shifted);
        if (!val.defined())
            return EvalResult::undefined("shifted value undefined: " + val.reason());
        acc += t.coeff.value() * (val.value() - center.value());
    }
    return EvalResult::finite(acc);
}

EvalResult apply_Lnu_at(int k, const LatticeParams& p, const MultiIndex& nu,
                        const GridFunction& g) {
    return apply_Lnu_at(k, p, nu, [&g](const MultiIndex& i) {
        if (!g.has(i)) return EvalResult::undefined("index outside the grid domain");
        return EvalResult::finite(g.at(i));
    });
}

EvalResult HatEvaluator::value(const MultiIndex& nu, const MultiIndex& x) {
    for (int i = 0; i < nu.dim(); ++i)
        if (nu[i] < 0) return EvalResult::undefined("negative index");
    auto it = cache_.find(nu);
    if (it == cache_.end()) it = cache_.emplace(nu, hat_sQ(nu, p_)).first;
    if (!it->second.defined()) return EvalResult::undefined(it->second.reason());
    std::vector<Rational> pt;
    for (int i = 0; i < p_.d; ++i) pt.push_back(rat(x[i]));
    return EvalResult::finite(it->second.value().eval(pt));
}

bool commutator_check(char family, int k1, int k2, const LatticeParams& p,
                      std::vector<std::string>* exclusions) {
    if (k1 == k2) return true;
    if (family == 'x') {
        HahnBasis basis(p);
        for (const MultiIndex& nu : basis.H) {
            GridFunction f;
            f.domain = basis.V;
            const auto& vals = basis.value.at(nu);
            for (size_t i = 0; i < basis.V.size(); ++i) f.set(basis.V[i], vals[i]);
            GridFunction a = apply_Lx(k1, apply_Lx(k2, f, p), p);
            GridFunction b = apply_Lx(k2, apply_Lx(k1, f, p), p);
            for (const MultiIndex& x : basis.V)
                if (a.at(x) != b.at(x)) return false;
        }
        return true;
    }
    if (family == 'n') {
        HatEvaluator hat(p);
        std::vector<MultiIndex> H = enum_H(p);
        std::vector<MultiIndex> V = enum_V(p);
        for (const MultiIndex& x : V) {
            auto g = [&](const MultiIndex& i) { return hat.value(i, x); };
            auto inner1 = [&](const MultiIndex& i) { return apply_Lnu_at(k2, p, i, g); };
            auto inner2 = [&](const MultiIndex& i) { return apply_Lnu_at(k1, p, i, g); };
            for (const MultiIndex& nu : H) {
                EvalResult a = apply_Lnu_at(k1, p, nu, inner1);
                EvalResult b = apply_Lnu_at(k2, p, nu, inner2);
                if (!a.defined() || !b.defined()) {
                    if (exclusions) {
                        std::string s = "nu=(";
                        for (int i = 0; i < p.d; ++i)
                            s += std::to_string(nu[i]) + (i + 1 < p.d ? "," : ")");
                        s += " x=(";
                        for (int i = 0; i < p.d; ++i)
                            s += std::to_string(x[i]) + (i + 1 < p.d ? "," : ")");
                        exclusions->push_back(s);
                    }
                    continue;
                }
                if (!(a.value() == b.value())) return false;
            }
        }
        return true;
    }
    throw OutOfRangeError("commutator_check: family must be 'x' or 'n'");
}

}  // namespace hahn
