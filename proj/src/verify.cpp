#include "hahn/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "hahn/bispectral.hpp"
#include "hahn/errors.hpp"
#include "hahn/factorize.hpp"
#include "hahn/hahnmd.hpp"

namespace hahn {

namespace {

std::string params_str(const Params1D& p) {
    std::ostringstream os;
    os << "ell=(" << p.ell1 << "," << p.ell2 << ") N=" << p.N;
    return os.str();
}

std::string params_str(const LatticeParams& p) {
    std::ostringstream os;
    os << "ell=(";
    for (int i = 0; i <= p.d; ++i) os << p.ell[i] << (i < p.d ? "," : ")");
    os << " N=" << p.N;
    return os.str();
}

std::string idx_str(const MultiIndex& nu) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < nu.dim(); ++i) os << nu[i] << (i + 1 < nu.dim() ? "," : ")");
    return os.str();
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

}  // namespace

void RunReport::add(const std::string& name, bool ok, const std::string& detail) {
    checks.push_back({name, ok ? "pass" : "fail", detail});
}

void RunReport::note(const std::string& name, const std::string& status,
                     const std::string& detail) {
    checks.push_back({name, status, detail});
}

bool RunReport::all_pass() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckResult& c) { return c.status == "fail"; });
}

int RunReport::count(const std::string& status) const {
    return static_cast<int>(std::count_if(
        checks.begin(), checks.end(),
        [&](const CheckResult& c) { return c.status == status; }));
}

std::string RunReport::to_json(bool include_elapsed) const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["params"] = params;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["status"] = c.status;
        if (!c.detail.empty()) e["detail"] = c.detail;
        j["checks"].push_back(e);
    }
    if (include_elapsed) j["elapsed_ms"] = elapsed_ms;
    j["pass"] = count("pass");
    j["fail"] = count("fail");
    return j.dump(2);
}

std::vector<Params1D> grid_1d(int lmax, int nmax) {
    std::vector<Params1D> out;
    for (int n = 1; n <= nmax; ++n)
        for (int l1 = 1; l1 <= lmax; ++l1)
            for (int l2 = 1; l2 <= lmax; ++l2)
                if (l1 + l2 >= n) out.emplace_back(l1, l2, n);
    return out;
}

std::vector<LatticeParams> grid_md(int d, int lmax, int nmax) {
    std::vector<LatticeParams> out;
    std::vector<int> ell(d + 1, 1);
    for (int n = 1; n <= nmax; ++n) {
        std::fill(ell.begin(), ell.end(), 1);
        while (true) {
            bool ok = true;
            for (int i = 0; i <= d && ok; ++i) {
                if (ell[i] > n) ok = false;
                for (int j = i + 1; j <= d && ok; ++j)
                    if (ell[i] + ell[j] < n) ok = false;
            }
            if (ok) out.emplace_back(ell, n);
            int i = 0;
            while (i <= d && ell[i] == lmax) ell[i++] = 1;
            if (i > d) break;
            ++ell[i];
        }
    }
    return out;
}

std::vector<LatticeParams> default_grid_d2() { return grid_md(2, 6, 8); }
std::vector<LatticeParams> default_grid_d3() { return grid_md(3, 4, 5); }

// ---------------------------------------------------------------------------

RunReport verify_ortho_1d(const std::vector<Params1D>& grid) {
    Timer t;
    RunReport rep;
    rep.command = "verify ortho --d 1";
    rep.params = std::to_string(grid.size()) + " parameter sets";
    for (const Params1D& p : grid) {
        Support1D s = support(p);
        std::vector<PolyQ> q;
        for (int n = 0; n <= s.deg_bound; ++n) q.push_back(hahn_sQ(n, p));
        bool ok = true;
        std::string why;
        for (int m = 0; m <= s.deg_bound && ok; ++m)
            for (int n = m; n <= s.deg_bound && ok; ++n) {
                Rational ip = inner_product(q[m], q[n], p);
                Rational want = (m == n) ? norm_B(n, p) : Rational(0);
                if (ip != want) {
                    ok = false;
                    why = "mismatch at (m,n)=(" + std::to_string(m) + "," +
                          std::to_string(n) + ")";
                }
            }
        rep.add("ortho " + params_str(p), ok, why);
    }
    rep.elapsed_ms = t.ms();
    return rep;
}

RunReport verify_factor(const std::vector<Params1D>& grid) {
    Timer t;
    RunReport rep;
    rep.command = "verify factor";
    rep.params = std::to_string(grid.size()) + " parameter sets";
    for (const Params1D& p : grid) {
        if (p.ell2 > p.N) continue;
        Support1D s = support(p);
        int top = std::min(p.ell1, p.N);
        if (top <= s.deg_bound) continue;
        bool ok = true;
        std::string why;
        for (int n = s.deg_bound + 1; n <= top && ok; ++n) {
            try {
                Factor1D f = factorize_thm(n, p);  // self-verifies the identity
                PolyQ q = hahn_sQ(n, p);
                for (int x = s.lo; x <= s.hi && ok; ++x)
                    if (q.eval({rat(x)}) != 0) {
                        ok = false;
                        why = "no vanishing at x=" + std::to_string(x);
                    }
                (void)f;
            } catch (const Error& e) {
                ok = false;
                why = e.what();
            }
        }
        rep.add("factor " + params_str(p), ok, why);
    }
    rep.elapsed_ms = t.ms();
    return rep;
}

RunReport verify_genfun(const std::vector<Params1D>& grid) {
    Timer t;
    RunReport rep;
    rep.command = "verify genfun";
    rep.params = std::to_string(grid.size()) + " parameter sets";
    for (const Params1D& p : grid) {
        Support1D s = support(p);
        bool ok = true;
        std::string why;
        for (int n = 0; n <= s.deg_bound && ok; ++n) {
            if (!genfun_simplex_check(n, p)) {
                ok = false;
                why = "simplex form fails at n=" + std::to_string(n);
            } else if (!genfun_support_check(n, p)) {
                ok = false;
                why = "support form fails at n=" + std::to_string(n);
            } else if (p.ell2 >= p.N && genfun_b_const(n, p) != 1) {
                ok = false;
                why = "b != 1 with ell2 >= N at n=" + std::to_string(n);
            }
        }
        rep.add("genfun " + params_str(p), ok, why);
    }
    rep.elapsed_ms = t.ms();
    return rep;
}

RunReport verify_moments(int lmax) {
    Timer t;
    RunReport rep;
    rep.command = "verify moments";
    rep.params = "ell1, ell2 <= " + std::to_string(lmax);
    for (int l1 = 1; l1 <= lmax; ++l1)
        for (int l2 = 1; l2 <= lmax; ++l2) {
            bool ok = true;
            std::string why;
            // Moment closed form against the functional.
            PolyQ x = PolyQ::variable(1, 0);
            PolyQ half = (PolyQ::constant(1, 1) - x).scaled(rat(1, 2));
            PolyQ pw = PolyQ::constant(1, 1);
            for (int m = 0; m <= l1 + l2 && ok; ++m) {
                if (moment_L(pw, l1, l2) !=
                    pochhammer(rat(-l1), m) / pochhammer(rat(-l1 - l2), m)) {
                    ok = false;
                    why = "moment mismatch at m=" + std::to_string(m);
                }
                if (m < l1 + l2) pw = pw * half;
            }
            int top = std::min(l1, l2);
            std::vector<PolyQ> G;
            for (int n = 0; n <= top; ++n) G.push_back(jacobi_G(n, l1, l2));
            for (int m = 0; m <= top && ok; ++m)
                for (int n = m; n <= top && ok; ++n) {
                    Rational want = (m == n) ? moment_h(n, l1, l2) : Rational(0);
                    if (moment_L(G[m] * G[n], l1, l2) != want) {
                        ok = false;
                        why = "G-orthogonality fails at (" + std::to_string(m) + "," +
                              std::to_string(n) + ")";
                    }
                }
            for (int n = 0; n <= top && ok; ++n)
                if (sign(moment_h(n, l1, l2)) != (n % 2 == 0 ? 1 : -1)) {
                    ok = false;
                    why = "sign of h_n wrong at n=" + std::to_string(n);
                }
            rep.add("moments ell=(" + std::to_string(l1) + "," + std::to_string(l2) + ")",
                    ok, why);
        }
    rep.elapsed_ms = t.ms();
    return rep;
}

RunReport verify_cardinality(const std::vector<LatticeParams>& grid) {
    Timer t;
    RunReport rep;
    rep.command = "verify cardinality";
    rep.params = std::to_string(grid.size()) + " parameter sets";
    for (const LatticeParams& p : grid) {
        long v = static_cast<long>(enum_V(p).size());
        long h = static_cast<long>(enum_H(p).size());
        long f = card_V_formula(p);
        bool ok = (v == h && v == f);
        rep.add("cardinality " + params_str(p), ok,
                "|V|=" + std::to_string(v) + " |H|=" + std::to_string(h) +
                    " formula=" + std::to_string(f));
    }
    rep.elapsed_ms = t.ms();
    return rep;
}

RunReport verify_ortho_md(const std::vector<LatticeParams>& grid) {
    Timer t;
    RunReport rep;
    rep.command = "verify ortho";
    rep.params = std::to_string(grid.size()) + " parameter sets";
    for (const LatticeParams& p : grid) {
        HahnBasis basis(p);
        bool ok = true;
        std::string why;
        for (size_t a = 0; a < basis.H.size() && ok; ++a)
            for (size_t b = a; b < basis.H.size() && ok; ++b) {
                const auto& va = basis.value.at(basis.H[a]);
                const auto& vb = basis.value.at(basis.H[b]);
                Rational ip = 0;
                for (size_t i = 0; i < basis.V.size(); ++i)
                    ip += va[i] * vb[i] * basis.weight[i];
                Rational want = (a == b) ? basis.norm.at(basis.H[a]) : Rational(0);
                if (ip != want) {
                    ok = false;
                    why = "mismatch at " + idx_str(basis.H[a]) + "," + idx_str(basis.H[b]);
                }
            }
        for (const auto& [nu, B] : basis.norm)
            if (ok && sign(B) <= 0) {
                ok = false;
                why = "norm not positive at " + idx_str(nu);
            }
        rep.add("ortho " + params_str(p), ok, why);
    }
    rep.elapsed_ms = t.ms();
    return rep;
}

RunReport verify_vanishing(const std::vector<LatticeParams>& grid) {
    Timer t;
    RunReport rep;
    rep.command = "verify vanishing";
    rep.params = std::to_string(grid.size()) + " parameter sets";
    for (const LatticeParams& p : grid) {
        bool ok = true;
        std::string why;
        int outside = 0;
        for (const MultiIndex& nu : enum_CH(p)) {
            if (in_H(nu, p)) {
                EvalResult B = norm_B_nu(nu, p);
                if (!B.defined() || sign(B.value()) <= 0) {
                    ok = false;
                    why = "H-norm not positive at " + idx_str(nu);
                    break;
                }
            } else {
                ++outside;
                EvalResult B = norm_B_nu(nu, p);
                if (!B.defined() || B.value() != 0) {
                    ok = false;
                    why = "CH\\H norm not zero at " + idx_str(nu);
                    break;
                }
                if (!vanishing_check(nu, p)) {
                    ok = false;
                    why = "sQ does not vanish on V at " + idx_str(nu);
                    break;
                }
            }
        }
        rep.add("vanishing " + params_str(p), ok,
                ok ? std::to_string(outside) + " indices in CH\\H" : why);
    }
    rep.elapsed_ms = t.ms();
    return rep;
}

RunReport verify_height(const std::vector<LatticeParams>& grid) {
    Timer t;
    RunReport rep;
    rep.command = "verify height";
    rep.params = std::to_string(grid.size()) + " parameter sets";
    for (const LatticeParams& p : grid) {
        if (p.d != 2) continue;
        bool ok = true;
        std::string why;
        long sum = 0;
        for (int nu1 = 0; nu1 <= p.ell[0] && ok; ++nu1) {
            int hm = height(nu1, p), hp = height_piecewise(nu1, p);
            if (hm != hp) {
                ok = false;
                why = "min-form != piecewise at nu1=" + std::to_string(nu1);
            }
            sum += hm;
        }
        std::vector<MultiIndex> H = enum_H(p);
        if (ok && sum != static_cast<long>(H.size())) {
            ok = false;
            why = "sum of heights != |H|";
        }
        // Column description of H.
        for (const MultiIndex& nu : H)
            if (ok && nu[1] > height(nu[0], p) - 1) {
                ok = false;
                why = "H element above height at " + idx_str(nu);
            }
        rep.add("height " + params_str(p), ok, why);
    }
    rep.elapsed_ms = t.ms();
    return rep;
}

RunReport verify_frontier(const std::vector<LatticeParams>& grid) {
    Timer t;
    RunReport rep;
    rep.command = "verify frontier";
    rep.params = std::to_string(grid.size()) + " parameter sets";
    for (const LatticeParams& p : grid) {
        if (p.d != 2) continue;
        bool ok = true;
        std::string why;
        int splits = 0, undef = 0, general = 0;
        for (int nu1 = 0; nu1 <= p.ell[0] && ok; ++nu1) {
            FrontierReport r = d2_frontier_classify(nu1, p);
            if (r.direct_undefined != r.predicted_undefined) {
                ok = false;
                why = "well-definedness iff fails at nu1=" + std::to_string(nu1);
                break;
            }
            if (r.split != SplitForm::None && !r.split_matches) {
                ok = false;
                why = "split closed form mismatch at nu1=" + std::to_string(nu1);
                break;
            }
            if (r.kind == FrontierKind::Undefined) ++undef;
            else if (r.kind == FrontierKind::Splits) ++splits;
            else ++general;
        }
        const long l2 = p.ell[1], l3 = p.ell[2], N = p.N;
        // Equal second parameters: the closed forms of the sR factor.
        if (ok && l2 == l3) {
            PolyQ x1 = PolyQ::variable(2, 0), x2 = PolyQ::variable(2, 1);
            PolyQ lin = x1 + PolyQ::constant(2, rat(l2 - N));
            Eval<PolyQ> rl = sR(static_cast<int>(l2), static_cast<int>(l2),
                                static_cast<int>(l3), static_cast<int>(N));
            Eval<PolyQ> rl1 = sR(static_cast<int>(l2) + 1, static_cast<int>(l2),
                                 static_cast<int>(l3), static_cast<int>(N));
            if (!rl.defined() || !rl1.defined()) {
                ok = false;
                why = "sR undefined in the equal-parameter case";
            } else {
                PolyQ num = poch_poly(PolyQ::constant(2, rat(-N)) + x1 + x2, l2 + 1) -
                            poch_poly(-x2, l2 + 1).scaled(rat((l2 + 1) % 2 == 0 ? 1 : -1));
                if (rl.value() * lin != num) {
                    ok = false;
                    why = "sR_l2 closed form fails";
                } else if (rl1.value() != lin * rl.value()) {
                    ok = false;
                    why = "sR_{l2+1} = (x1 - N + l2) sR_l2 fails";
                } else if (l2 % 2 == 1 &&
                           !PolyQ::divide_exact(
                               rl.value(), PolyQ::constant(2, rat(N)) - x1 - x2 - x2)) {
                    ok = false;
                    why = "odd-l2 linear factor missing";
                }
            }
        }
        // ell3 = ell2 + 1: explicit sR_{l2} formula, cleared of denominators.
        if (ok && l3 == l2 + 1) {
            Eval<PolyQ> rl = sR(static_cast<int>(l2), static_cast<int>(l2),
                                static_cast<int>(l3), static_cast<int>(N));
            PolyQ x1 = PolyQ::variable(2, 0), x2 = PolyQ::variable(2, 1);
            PolyQ a = x1 + PolyQ::constant(2, rat(l2 - N));      // -N + l2 + x1
            PolyQ b = a + PolyQ::constant(2, rat(1));            // -N + l2 + 1 + x1
            int sgn1 = (l2 + 1) % 2 == 0 ? 1 : -1;
            PolyQ rhs = poch_poly(PolyQ::constant(2, rat(-N)) + x1 + x2, l2 + 2) -
                        poch_poly(-x2, l2 + 1).scaled(rat(sgn1) * rat(l2 + 2)) * b -
                        poch_poly(-x2, l2 + 2).scaled(rat(-sgn1));
            if (!rl.defined() || rl.value() * a * b != rhs) {
                ok = false;
                why = "sR_l2 explicit formula (ell3 = ell2+1) fails";
            }
        }
        rep.add("frontier " + params_str(p), ok,
                ok ? "undefined=" + std::to_string(undef) + " splits=" +
                         std::to_string(splits) + " general=" + std::to_string(general)
                   : why);
    }
    rep.elapsed_ms = t.ms();
    return rep;
}

RunReport verify_kernel(const std::vector<LatticeParams>& grid) {
    Timer t;
    RunReport rep;
    rep.command = "verify kernel";
    rep.params = std::to_string(grid.size()) + " parameter sets";
    for (const LatticeParams& p : grid) {
        HahnBasis basis(p);
        const size_t nv = basis.V.size();
        bool ok = true;
        std::string why;
        int lmin = p.ell_min();
        int M = max_H_degree(p);
        for (int n = 0; n <= M && ok; ++n) {
            // Degree-n kernel table from the basis values.
            std::vector<std::vector<Rational>> P(nv, std::vector<Rational>(nv, Rational(0)));
            for (const MultiIndex& nu : basis.H) {
                if (nu.total() != n) continue;
                const auto& v = basis.value.at(nu);
                const Rational& B = basis.norm.at(nu);
                for (size_t i = 0; i < nv; ++i)
                    for (size_t j = i; j < nv; ++j) {
                        Rational add = v[i] * v[j] / B;
                        P[i][j] += add;
                        if (j != i) P[j][i] += add;
                    }
            }
            if (n <= lmin) {
                for (size_t i = 0; i < nv && ok; ++i)
                    for (size_t j = i; j < nv && ok; ++j)
                        if (P[i][j] != kernel_P_closed(n, basis.V[i], basis.V[j], p)) {
                            ok = false;
                            why = "closed != direct at n=" + std::to_string(n);
                        }
            }
            for (const MultiIndex& mu : basis.H) {
                if (!ok || mu.total() != n) continue;
                const auto& vm = basis.value.at(mu);
                for (size_t i = 0; i < nv && ok; ++i) {
                    Rational acc = 0;
                    for (size_t j = 0; j < nv; ++j)
                        acc += P[i][j] * vm[j] * basis.weight[j];
                    if (acc != vm[i]) {
                        ok = false;
                        why = "reproducing property fails at n=" + std::to_string(n);
                    }
                }
            }
        }
        rep.add("kernel " + params_str(p), ok, why);
    }
    rep.elapsed_ms = t.ms();
    return rep;
}

RunReport verify_poisson(int ellmax) {
    Timer t;
    RunReport rep;
    rep.command = "verify poisson";
    rep.params = "triangle cases ell <= " + std::to_string(ellmax);
    for (int ell = 1; ell <= ellmax; ++ell) {
        LatticeParams p({ell, ell, ell}, 2 * ell);
        HahnBasis basis(p);
        MultiIndex y(std::vector<int>{0, ell});
        bool ok = true;
        std::string why;
        // Coefficient-by-coefficient in r: P_n(x, (0,ell)) against the stated
        // closed form, for every x in V; this also gives x2-independence.
        for (const MultiIndex& x : basis.V) {
            for (int n = 0; n <= max_H_degree(p) && ok; ++n) {
                Rational direct = kernel_P_direct(n, x, y, basis);
                Rational want = 0;
                if (n <= ell) {
                    Rational c = rat(n % 2 == 0 ? 1 : -1) *
                                 pochhammer(rat(-3 * ell - 1), n) *
                                 pochhammer(rat(-3 * ell), 2 * n) /
                                 (Rational(factorial(n)) *
                                  pochhammer(rat(-3 * ell - 1), 2 * n));
                    want = c * hahn_sQ_raw(n, ell, 2 * ell, 2 * ell).eval({rat(x[0])});
                }
                if (direct != want) {
                    ok = false;
                    why = "Poisson coefficient mismatch at x=" + idx_str(x) +
                          " n=" + std::to_string(n);
                }
            }
        }
        rep.add("poisson triangle ell=" + std::to_string(ell), ok, why);

        // Sign-change observation on [0,1] (reported, not asserted).
        std::ostringstream obs;
        for (const MultiIndex& x : basis.V) {
            if (x[1] != 0) continue;  // one representative per x1 (x2-independent)
            int changes = 0;
            int prev = 0;
            for (int i = 0; i <= 40; ++i) {
                Rational r = rat(i, 40);
                int s = sign(poisson_Phi(r, x, y, basis));
                if (s != 0 && prev != 0 && s != prev) ++changes;
                if (s != 0) prev = s;
            }
            if (changes > 0) obs << " x1=" << x[0] << ":" << changes;
        }
        rep.note("poisson sign observation ell=" + std::to_string(ell), "skipped",
                 obs.str().empty() ? "no sign changes on sample"
                                   : "sign changes" + obs.str());
    }
    rep.elapsed_ms = t.ms();
    return rep;
}

RunReport verify_bispectral(const std::vector<LatticeParams>& grid) {
    Timer t;
    RunReport rep;
    rep.command = "verify bispectral";
    rep.params = std::to_string(grid.size()) + " parameter sets";

    // Generic C_mu construction against the explicit d=2 coefficient
    // formulas, as rational-function identities (checked once).
    {
        bool ok = true;
        std::string why;
        const int nv = 6;  // nu1, nu2, l1, l2, l3, N
        PolyQ n1 = PolyQ::variable(nv, 0), n2 = PolyQ::variable(nv, 1);
        PolyQ l1 = PolyQ::variable(nv, 2), l2 = PolyQ::variable(nv, 3);
        PolyQ l3 = PolyQ::variable(nv, 4), N = PolyQ::variable(nv, 5);
        PolyQ one = PolyQ::constant(nv, 1), two = PolyQ::constant(nv, 2);
        PolyQ L = l1 + l2 + l3;
        PolyQ nn = n1 + n2;
        PolyQ s23 = l2 + l3;
        PolyQ quad = two * n2 * (n2 - s23 - one) + l3 * (s23 + two);
        auto table = [&](const std::vector<int>& mu) -> std::pair<PolyQ, PolyQ> {
            // Explicit C coefficients of the two-variable operator.
            if (mu == std::vector<int>{1, 0})
                return {(N - nn) * (l1 - n1) * (n1 + two * n2 - L - one) * quad,
                        (two * nn - L) * (two * nn - L - one) * (two * n2 - s23) *
                            (two * n2 - s23 - two)};
            if (mu == std::vector<int>{-1, 0})
                return {-(nn - L + N - one) * n1 * (n1 + two * n2 - s23 - one) * quad,
                        (two * nn - L - two) * (two * nn - L - one) * (two * n2 - s23) *
                            (two * n2 - s23 - two)};
            if (mu == std::vector<int>{0, 1})
                return {(two * N - L) * n1 * (n1 + two * n2 - L - one) * (l2 - n2) *
                            (n2 - s23 - one),
                        (two * nn - L) * (two * nn - L - two) * (two * n2 - s23) *
                            (two * n2 - s23 - one)};
            if (mu == std::vector<int>{0, -1})
                return {(two * N - L) * (l1 - n1) * (n1 + two * n2 - s23 - one) * n2 *
                            (n2 - l3 - one),
                        (two * nn - L) * (two * nn - L - two) * (two * n2 - s23 - two) *
                            (two * n2 - s23 - one)};
            if (mu == std::vector<int>{1, 1})
                return {(N - nn) * (n1 + two * n2 - L - one) * (n1 + two * n2 - L) *
                            (l2 - n2) * (n2 - s23 - one),
                        (two * nn - L) * (two * nn - L - one) * (two * n2 - s23) *
                            (two * n2 - s23 - one)};
            if (mu == std::vector<int>{-1, 1})
                return {(nn - L + N - one) * n1 * (n1 - one) * (l2 - n2) *
                            (n2 - s23 - one),
                        (two * nn - L - two) * (two * nn - L - one) * (two * n2 - s23) *
                            (two * n2 - s23 - one)};
            if (mu == std::vector<int>{1, -1})
                return {-(N - nn) * (l1 - n1) * (l1 - n1 - one) * n2 * (n2 - l3 - one),
                        (two * nn - L) * (two * nn - L - one) * (two * n2 - s23 - two) *
                            (two * n2 - s23 - one)};
            if (mu == std::vector<int>{-1, -1})
                return {-(nn - L + N - one) * (n1 + two * n2 - s23 - one) *
                            (n1 + two * n2 - s23 - two) * n2 * (n2 - l3 - one),
                        (two * nn - L - two) * (two * nn - L - one) * (two * n2 - s23) *
                            (two * n2 - s23 - one)};
            throw Error("unexpected mu");
        };
        for (int a = -1; a <= 1 && ok; ++a)
            for (int b = -1; b <= 1 && ok; ++b) {
                if (a == 0 && b == 0) continue;
                if (a == -1 && b == -1) continue;  // handled separately below
                std::vector<int> mu{a, b};
                auto [gn, gd] = coeff_C_symbolic(mu, 2);
                auto [pn, pd] = table(mu);
                if (gn * pd != pn * gd) {
                    ok = false;
                    why = "C_{" + std::to_string(a) + "," + std::to_string(b) + "}";
                }
            }
        rep.add("d2 explicit coefficients == generic C_mu (7 of 8)", ok, why);

        // The C_{-1,-1} entry of the explicit table circulates with a wrong
        // denominator factor: (2 nu2 - l2 - l3) in place of the generic
        // construction's (2 nu2 - l2 - l3 - 2). The spectral equations pick
        // out the generic form; assert both the discrepancy and the
        // corrected identity.
        {
            auto [gn, gd] = coeff_C_symbolic({-1, -1}, 2);
            auto [pn, pd] = table({-1, -1});
            bool discrepancy = gn * pd != pn * gd;
            PolyQ fixed_den = *PolyQ::divide_exact(pd, two * n2 - s23) * (two * n2 - s23 - two);
            bool corrected_matches = gn * fixed_den == pn * gd;
            rep.add("C_{-1,-1} denominator discrepancy detected; corrected form matches",
                    discrepancy && corrected_matches, "");
        }
    }

    for (const LatticeParams& p : grid) {
        HahnBasis basis(p);
        HatEvaluator hat(p);
        bool ok = true;
        std::string why;
        std::vector<std::string> exclusions;

        // Variable-side spectral equations.
        for (const MultiIndex& nu : basis.H) {
            if (!ok) break;
            GridFunction f;
            f.domain = basis.V;
            Rational scale = 1 / pochhammer(rat(-p.N), nu.total());
            const auto& vals = basis.value.at(nu);
            for (size_t i = 0; i < basis.V.size(); ++i)
                f.set(basis.V[i], vals[i] * scale);
            for (int k = 1; k <= p.d && ok; ++k) {
                GridFunction g = apply_Lx(k, f, p);
                Rational lambda = lx_eigenvalue(k, nu, p);
                for (const MultiIndex& x : basis.V)
                    if (g.at(x) != lambda * f.at(x)) {
                        ok = false;
                        why = "spx fails at nu=" + idx_str(nu) + " k=" + std::to_string(k);
                        break;
                    }
            }
        }

        // Index-side spectral equations, with undefined-coefficient exclusions.
        for (const MultiIndex& x : basis.V) {
            if (!ok) break;
            auto g = [&](const MultiIndex& i) { return hat.value(i, x); };
            for (const MultiIndex& nu : basis.H) {
                if (!ok) break;
                EvalResult base = g(nu);
                for (int k = 1; k <= p.d && ok; ++k) {
                    EvalResult lhs = apply_Lnu_at(k, p, nu, g);
                    if (!lhs.defined()) {
                        std::string e = "spn k=" + std::to_string(k) + " nu=" +
                                        idx_str(nu) + ": " + lhs.reason();
                        if (std::find(exclusions.begin(), exclusions.end(), e) ==
                            exclusions.end())
                            exclusions.push_back(e);
                        continue;
                    }
                    Rational want = rat(x.head_sum(k)) * base.value();
                    if (lhs.value() != want) {
                        ok = false;
                        why = "spn fails at nu=" + idx_str(nu) + " x=" + idx_str(x) +
                              " k=" + std::to_string(k);
                    }
                    if (ok && k >= 1) {
                        // Three-term form: (L^nu_k - L^nu_{k-1}) acts as x_k.
                        EvalResult prev =
                            k == 1 ? EvalResult::finite(0) : apply_Lnu_at(k - 1, p, nu, g);
                        if (prev.defined() &&
                            lhs.value() - prev.value() != rat(x[k - 1]) * base.value()) {
                            ok = false;
                            why = "spn2 fails at nu=" + idx_str(nu) + " x=" + idx_str(x) +
                                  " k=" + std::to_string(k);
                        }
                    }
                }
            }
        }

        // Boundary soundness: negative shifts only under exactly-zero coefficients.
        for (const MultiIndex& nu : basis.H) {
            if (!ok) break;
            for (int k = 1; k <= p.d && ok; ++k)
                for (const LnuTerm& term : lnu_terms(k, p, nu)) {
                    bool negative = false;
                    for (int i = 0; i < p.d; ++i)
                        if (nu[i] + term.offset[i] < 0) negative = true;
                    if (negative && term.coeff.defined() && term.coeff.value() != 0) {
                        ok = false;
                        why = "nonzero coefficient on negative shift at nu=" + idx_str(nu);
                    }
                }
        }

        // Commutativity of the variable-side family.
        for (int k1 = 1; k1 <= p.d && ok; ++k1)
            for (int k2 = k1 + 1; k2 <= p.d && ok; ++k2)
                if (!commutator_check('x', k1, k2, p)) {
                    ok = false;
                    why = "L^x operators do not commute";
                }

        // Labeled sweep: the index equations on the vanishing indices CH \ H.
        int chh_checked = 0, chh_equal = 0, chh_excluded = 0;
        for (const MultiIndex& nu : basis.CH) {
            if (in_H(nu, p)) continue;
            for (const MultiIndex& x : basis.V) {
                auto g = [&](const MultiIndex& i) { return hat.value(i, x); };
                for (int k = 1; k <= p.d; ++k) {
                    EvalResult lhs = apply_Lnu_at(k, p, nu, g);
                    EvalResult base = g(nu);
                    ++chh_checked;
                    if (!lhs.defined() || !base.defined()) {
                        ++chh_excluded;
                        continue;
                    }
                    if (lhs.value() == rat(x.head_sum(k)) * base.value()) ++chh_equal;
                }
            }
        }
        std::ostringstream chh;
        chh << "CH\\H sweep: " << chh_equal << "/" << (chh_checked - chh_excluded)
            << " equal, " << chh_excluded << " excluded";

        std::ostringstream detail;
        detail << exclusions.size() << " exclusions";
        for (const std::string& e : exclusions) detail << "; " << e;
        rep.add("bispectral " + params_str(p), ok, ok ? detail.str() : why);
        rep.note("spn on CH\\H " + params_str(p), "skipped", chh.str());
    }
    rep.elapsed_ms = t.ms();
    return rep;
}

RunReport verify_conjecture(int nmax, int ellmax) {
    Timer t;
    RunReport rep;
    rep.command = "verify conjecture";
    rep.params = "conjecture check (finite instances; not a proof): n <= " +
                 std::to_string(nmax) + ", ell <= " + std::to_string(ellmax);
    for (int l1 = 1; l1 <= ellmax; ++l1)
        for (int l2 = 1; l2 <= ellmax; ++l2)
            for (int n = 1; n <= std::min({nmax, l1, l2}); ++n) {
                PolyQ R = r_poly(n, l1, l2);
                std::string tag = "R_" + std::to_string(n) + " ell=(" +
                                  std::to_string(l1) + "," + std::to_string(l2) + ")";
                if (l1 == l2 && n % 2 == 1) {
                    PolyQ lin = PolyQ::variable(2, 1) - PolyQ::variable(2, 0).scaled(2);
                    auto quot = PolyQ::divide_exact(R, lin);
                    bool ok = quot.has_value();
                    std::string detail = "factor (y-2x) ";
                    if (!ok) detail += "missing";
                    else if (quot->total_degree() == 0) detail += "found; cofactor constant";
                    else {
                        bool irr = bivariate_irreducible(*quot);
                        ok = irr;
                        detail += irr ? "found; cofactor irreducible"
                                      : "found; cofactor REDUCIBLE";
                    }
                    rep.add("conjecture check " + tag, ok, detail);
                } else {
                    bool irr = bivariate_irreducible(R);
                    rep.note("conjecture check " + tag, "skipped",
                             irr ? "irreducible (recorded outcome, not a proof)"
                                 : "REDUCIBLE (recorded outcome)");
                }
            }
    rep.elapsed_ms = t.ms();
    return rep;
}

}  // namespace hahn
