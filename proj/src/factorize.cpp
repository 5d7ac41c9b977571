#include "hahn/factorize.hpp"

#include <algorithm>
#include <random>

#include "hahn/errors.hpp"

namespace hahn {

namespace {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q (ascending powers).

using UPoly = std::vector<Rational>;

void utrim(UPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int udeg(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

UPoly uscale(const UPoly& a, const Rational& c) {
    if (c == 0) return {};
    UPoly r = a;
    for (auto& v : r) v *= c;
    return r;
}

UPoly uadd(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    utrim(r);
    return r;
}

UPoly usub(const UPoly& a, const UPoly& b) {
    UPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    utrim(r);
    return r;
}

std::pair<UPoly, UPoly> udivrem(const UPoly& a, const UPoly& b) {
    if (b.empty()) throw Error("univariate division by zero");
    UPoly r = a, q;
    utrim(r);
    int db = udeg(b);
    if (udeg(r) >= db) q.assign(udeg(r) - db + 1, Rational(0));
    while (udeg(r) >= db) {
        int k = udeg(r) - db;
        Rational c = r.back() / b.back();
        q[k] = c;
        for (int i = 0; i <= db; ++i) r[k + i] -= c * b[i];
        utrim(r);
    }
    utrim(q);
    return {q, r};
}

UPoly uderiv(const UPoly& f) {
    UPoly r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * rat(static_cast<long>(i)));
    utrim(r);
    return r;
}

UPoly umonic(const UPoly& f) {
    if (f.empty()) return f;
    return uscale(f, 1 / f.back());
}

UPoly ugcd(UPoly a, UPoly b) {
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = udivrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : umonic(a);
}

// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic or empty.
struct XGcd {
    UPoly g, s, t;
};

XGcd uxgcd(UPoly a, UPoly b) {
    UPoly s0{Rational(1)}, s1, t0, t1{Rational(1)};
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        auto [q, r] = udivrem(a, b);
        a = std::move(b);
        b = std::move(r);
        UPoly ns = usub(s0, umul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(ns);
        UPoly nt = usub(t0, umul(q, t1));
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (!a.empty()) {
        Rational lc = a.back();
        a = uscale(a, 1 / lc);
        s0 = uscale(s0, 1 / lc);
        t0 = uscale(t0, 1 / lc);
    }
    return {a, s0, t0};
}

Rational ueval(const UPoly& f, const Rational& c) {
    Rational acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * c + *it;
    return acc;
}

// Taylor shift f(x) -> f(x + c).
UPoly ushift(const UPoly& f, const Rational& c) {
    UPoly r;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        UPoly nr(r.size() + 1, Rational(0));
        for (size_t i = 0; i < r.size(); ++i) {
            nr[i + 1] += r[i];
            nr[i] += r[i] * c;
        }
        if (nr.empty()) nr.resize(1, Rational(0));
        nr[0] += *it;
        utrim(nr);
        r = std::move(nr);
    }
    return r;
}

UPoly from_poly1(const PolyQ& p) {
    UPoly f(std::max(p.degree_in(0), 0) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) f[e[0]] = c;
    utrim(f);
    return f;
}

PolyQ to_poly1(const UPoly& f) {
    PolyQ p(1);
    for (int i = 0; i <= udeg(f); ++i)
        if (f[i] != 0) p.add_term({i}, f[i]);
    return p;
}

// ---------------------------------------------------------------------------
// Integer polynomials.

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Rational poly == scale * (primitive integer poly with positive lc).
std::pair<Rational, ZPoly> primitive_int(const UPoly& f) {
    Integer den = 1;
    for (const auto& c : f) den = lcm(den, c.get_den());
    ZPoly z;
    for (const auto& c : f) z.push_back(Integer(c.get_num() * (den / c.get_den())));
    ztrim(z);
    if (z.empty()) return {Rational(0), {}};
    Integer g = 0;
    for (const auto& c : z) g = gcd(g, c);
    if (z.back() < 0) g = -g;
    for (auto& c : z) c /= g;
    return {rat(g, den), z};
}

UPoly to_rational(const ZPoly& f) {
    UPoly r;
    for (const auto& c : f) r.push_back(Rational(c));
    utrim(r);
    return r;
}

// ---------------------------------------------------------------------------
// GF(p) polynomials (p a small odd prime; products fit in long).

using FpPoly = std::vector<long>;

void ftrim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fmul(const FpPoly& a, const FpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ftrim(r);
    return r;
}

long finv(long a, long p) {
    long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return ((t % p) + p) % p;
}

std::pair<FpPoly, FpPoly> fdivrem(FpPoly a, const FpPoly& b, long p) {
    ftrim(a);
    if (b.empty()) throw Error("GF(p) division by zero");
    long inv = finv(b.back(), p);
    FpPoly q;
    int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 >= db)
        q.assign(a.size() - b.size() + 1, 0);
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        long c = a.back() * inv % p;
        size_t k = a.size() - b.size();
        q[k] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[k + i] = ((a[k + i] - c * b[i]) % p + p) % p;
        ftrim(a);
    }
    ftrim(q);
    return {q, a};
}

FpPoly fmod(const FpPoly& a, const FpPoly& m, long p) { return fdivrem(a, m, p).second; }

FpPoly fgcd(FpPoly a, FpPoly b, long p) {
    ftrim(a);
    ftrim(b);
    while (!b.empty()) {
        FpPoly r = fmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long inv = finv(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

FpPoly fmonic(FpPoly f, long p) {
    ftrim(f);
    if (f.empty()) return f;
    long inv = finv(f.back(), p);
    for (auto& c : f) c = c * inv % p;
    return f;
}

FpPoly fpowmod(const FpPoly& base, const Integer& e, const FpPoly& m, long p) {
    FpPoly r{1};
    FpPoly b = fmod(base, m, p);
    long bits = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2));
    for (long bit = bits - 1; bit >= 0; --bit) {
        r = fmod(fmul(r, r, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) r = fmod(fmul(r, b, p), m, p);
    }
    return r;
}

FpPoly fderiv(const FpPoly& f, long p) {
    FpPoly r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back(f[i] * static_cast<long>(i % p) % p);
    ftrim(r);
    return r;
}

void equal_degree(const FpPoly& f, int dd, long p, std::mt19937_64& rng,
                  std::vector<FpPoly>& out) {
    int n = static_cast<int>(f.size()) - 1;
    if (n == dd) {
        out.push_back(f);
        return;
    }
    Integer pe = 1;
    for (int i = 0; i < dd; ++i) pe *= p;
    Integer half = (pe - 1) / 2;
    while (true) {
        FpPoly a(n, 0);
        for (int i = 0; i < n; ++i)
            a[i] = static_cast<long>(rng() % static_cast<unsigned long>(p));
        ftrim(a);
        if (a.empty()) continue;
        FpPoly b = fpowmod(a, half, f, p);
        if (b.empty()) continue;
        if (b.size() < 1) b.resize(1, 0);
        b[0] = ((b[0] - 1) % p + p) % p;
        ftrim(b);
        if (b.empty()) continue;
        FpPoly g = fgcd(f, b, p);
        int dg = static_cast<int>(g.size()) - 1;
        if (dg > 0 && dg < n) {
            equal_degree(g, dd, p, rng, out);
            equal_degree(fmonic(fdivrem(f, g, p).first, p), dd, p, rng, out);
            return;
        }
    }
}

// Distinct-degree then equal-degree factorization of a monic squarefree f.
std::vector<FpPoly> factor_mod_p(FpPoly f, long p, std::mt19937_64& rng) {
    f = fmonic(std::move(f), p);
    std::vector<FpPoly> out;
    FpPoly h{0, 1};  // x^(p^dd) mod f, advanced one dd per round
    int dd = 0;
    while (2 * (dd + 1) <= static_cast<int>(f.size()) - 1) {
        ++dd;
        h = fpowmod(h, Integer(p), f, p);
        FpPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = ((hx[1] - 1) % p + p) % p;
        ftrim(hx);
        // gcd(f, 0) = f: x^{p^dd} = x means every remaining factor has degree dd.
        FpPoly g = fgcd(f, hx, p);
        if (static_cast<int>(g.size()) - 1 > 0) {
            equal_degree(g, dd, p, rng, out);
            f = fmonic(fdivrem(f, g, p).first, p);
            h = fmod(h, f, p);
        }
    }
    if (static_cast<int>(f.size()) - 1 > 0) out.push_back(f);
    return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting and Zassenhaus recombination over Z.

FpPoly reduce_mod(const ZPoly& f, long p) {
    FpPoly r;
    for (const auto& c : f)
        r.push_back(static_cast<long>(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p))));
    ftrim(r);
    return r;
}

Integer inv_mod(const Integer& a, const Integer& m) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error("not invertible in Z/m");
    return r;
}

// Lifts the monic factorization of w/lc(w) mod p to modulus q = p^steps.
std::vector<ZPoly> hensel_lift(const ZPoly& w, std::vector<FpPoly> fbar, long p,
                               int steps) {
    const int r = static_cast<int>(fbar.size());
    // Bezout data over GF(p): u_i = (prod_{j != i} fbar_j)^{-1} mod fbar_i.
    std::vector<FpPoly> u(r);
    for (int i = 0; i < r; ++i) {
        FpPoly prod{1};
        for (int j = 0; j < r; ++j)
            if (j != i) prod = fmul(prod, fbar[j], p);
        prod = fmod(prod, fbar[i], p);
        // Invert mod fbar[i] by extended Euclid in GF(p)[x].
        FpPoly a = fbar[i], b = prod, s0, s1{1};
        while (!b.empty()) {
            auto [qq, rr] = fdivrem(a, b, p);
            a = std::move(b);
            b = std::move(rr);
            FpPoly ns = s0;
            FpPoly qs = fmul(qq, s1, p);
            if (qs.size() > ns.size()) ns.resize(qs.size(), 0);
            for (size_t t = 0; t < qs.size(); ++t) ns[t] = ((ns[t] - qs[t]) % p + p) % p;
            ftrim(ns);
            s0 = std::move(s1);
            s1 = std::move(ns);
        }
        if (a.size() != 1) throw Error("hensel: factors not coprime mod p");
        long inv = finv(a[0], p);
        for (auto& c : s0) c = c * inv % p;
        u[i] = fmod(s0, fbar[i], p);
    }

    std::vector<ZPoly> G(r);
    for (int i = 0; i < r; ++i) {
        G[i].clear();
        for (long c : fbar[i]) G[i].push_back(Integer(c));
    }

    Integer q = p;
    for (int step = 1; step < steps; ++step) {
        Integer qp = q * p;
        // Monic image of w mod qp.
        Integer lcinv = inv_mod(w.back() % qp, qp);
        ZPoly wt;
        for (const auto& c : w) {
            Integer v = c * lcinv % qp;
            if (v < 0) v += qp;
            wt.push_back(v);
        }
        ztrim(wt);
        // Error term e = (wt - prod G_i)/q mod p.
        ZPoly prod{Integer(1)};
        for (int i = 0; i < r; ++i) {
            ZPoly np(prod.size() + G[i].size() - 1, Integer(0));
            for (size_t a = 0; a < prod.size(); ++a)
                for (size_t b = 0; b < G[i].size(); ++b) {
                    np[a + b] += prod[a] * G[i][b];
                    np[a + b] %= qp;
                }
            ztrim(np);
            prod = std::move(np);
        }
        ZPoly diff = wt;
        if (prod.size() > diff.size()) diff.resize(prod.size(), Integer(0));
        for (size_t i = 0; i < prod.size(); ++i) {
            diff[i] = (diff[i] - prod[i]) % qp;
            if (diff[i] < 0) diff[i] += qp;
        }
        ztrim(diff);
        FpPoly e;
        for (const auto& c : diff) {
            Integer v = c / q;
            e.push_back(static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p))));
        }
        ftrim(e);
        if (!e.empty()) {
            for (int i = 0; i < r; ++i) {
                FpPoly delta = fmod(fmul(e, u[i], p), fbar[i], p);
                if (G[i].size() < delta.size() + 0) G[i].resize(delta.size(), Integer(0));
                for (size_t t = 0; t < delta.size(); ++t) G[i][t] += q * delta[t];
            }
        }
        q = qp;
    }
    return G;
}

Integer symmetric(const Integer& c, const Integer& q) {
    Integer v = c % q;
    if (v < 0) v += q;
    if (2 * v > q) v -= q;
    return v;
}

ZPoly primitive_z(ZPoly f) {
    ztrim(f);
    if (f.empty()) return f;
    Integer g = 0;
    for (const auto& c : f) g = gcd(g, c);
    if (f.back() < 0) g = -g;
    for (auto& c : f) c /= g;
    return f;
}

// Exact division test in Z[x] (via rational division; Gauss lemma makes the
// quotient integral for primitive divisors).
std::optional<UPoly> divide_exact_u(const UPoly& a, const UPoly& b) {
    auto [q, r] = udivrem(a, b);
    if (!r.empty()) return std::nullopt;
    return q;
}

// Factors a primitive squarefree integer polynomial into irreducibles.
std::vector<ZPoly> zassenhaus(ZPoly w) {
    ztrim(w);
    if (udeg(to_rational(w)) <= 1) return {w};

    static const long primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,  37,  41,
                                  43, 47, 53, 59, 61, 67, 71, 73, 79, 83,  89,  97,
                                  101, 103, 107, 109, 113, 127, 131, 137, 139, 149};
    std::mt19937_64 rng(0xB5u);
    long p = 0;
    FpPoly wbar;
    for (long cand : primes) {
        if (mpz_fdiv_ui(w.back().get_mpz_t(), static_cast<unsigned long>(cand)) == 0) continue;
        wbar = reduce_mod(w, cand);
        FpPoly g = fgcd(wbar, fderiv(wbar, cand), cand);
        if (static_cast<int>(g.size()) - 1 == 0) {
            p = cand;
            break;
        }
    }
    if (p == 0) throw Error("zassenhaus: no suitable prime found");

    std::vector<FpPoly> fbar = factor_mod_p(wbar, p, rng);
    if (fbar.size() == 1) return {w};

    // Coefficient bound for lc * (any factor): 2^n * two-norm * |lc|.
    Integer norm2 = 0;
    for (const auto& c : w) norm2 += c * c;
    Integer root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    Integer bound = root * abs(w.back());
    bound <<= udeg(to_rational(w));
    int steps = 1;
    Integer q = p;
    while (q <= 2 * bound) {
        q *= p;
        ++steps;
    }
    std::vector<ZPoly> lifted = hensel_lift(w, fbar, p, steps);

    std::vector<ZPoly> out;
    std::vector<int> live(lifted.size());
    for (size_t i = 0; i < lifted.size(); ++i) live[i] = static_cast<int>(i);
    UPoly wq = to_rational(w);

    auto try_subset = [&](const std::vector<int>& subset) -> bool {
        ZPoly cand{w.back()};
        for (int idx : subset) {
            ZPoly np(cand.size() + lifted[idx].size() - 1, Integer(0));
            for (size_t a = 0; a < cand.size(); ++a)
                for (size_t b = 0; b < lifted[idx].size(); ++b) {
                    np[a + b] += cand[a] * lifted[idx][b];
                    np[a + b] %= q;
                }
            ztrim(np);
            cand = std::move(np);
        }
        for (auto& c : cand) c = symmetric(c, q);
        ztrim(cand);
        cand = primitive_z(cand);
        if (cand.empty() || udeg(to_rational(cand)) < 1) return false;
        auto quot = divide_exact_u(wq, to_rational(cand));
        if (!quot) return false;
        out.push_back(cand);
        wq = *quot;
        auto [sc, wz] = primitive_int(wq);
        (void)sc;
        w = wz;
        wq = to_rational(w);
        std::vector<int> nl;
        for (int idx : live)
            if (std::find(subset.begin(), subset.end(), idx) == subset.end())
                nl.push_back(idx);
        live = std::move(nl);
        return true;
    };

    for (size_t s = 1; s <= live.size() && !live.empty(); ) {
        if (2 * s > live.size()) break;
        // All size-s subsets of the live list.
        std::vector<int> pick(s);
        bool found = false;
        auto rec = [&](auto&& self, size_t pos, size_t start) -> bool {
            if (pos == s) {
                std::vector<int> subset;
                for (size_t i = 0; i < s; ++i) subset.push_back(live[pick[i]]);
                return try_subset(subset);
            }
            for (size_t i = start; i < live.size(); ++i) {
                pick[pos] = static_cast<int>(i);
                if (self(self, pos + 1, i + 1)) return true;
            }
            return false;
        };
        found = rec(rec, 0, 0);
        if (!found) ++s;
    }
    if (udeg(wq) >= 1) out.push_back(primitive_z(w));
    return out;
}

PolyQ embed2(const UPoly& f, int var) {
    PolyQ p(2);
    for (int i = 0; i <= udeg(f); ++i) {
        if (f[i] == 0) continue;
        Exponents e{0, 0};
        e[var] = i;
        p.add_term(e, f[i]);
    }
    return p;
}

bool poly_less(const PolyQ& a, const PolyQ& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (ia->first != ib->first) return GradedLexLess{}(ia->first, ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return a.terms().size() < b.terms().size();
}

// ---------------------------------------------------------------------------
// Bivariate layer: Q[x][y] with dense UPoly coefficients (index = y power).

using BPoly = std::vector<UPoly>;

void btrim(BPoly& f) {
    while (!f.empty() && f.back().empty()) f.pop_back();
}

int bdeg_y(const BPoly& f) { return static_cast<int>(f.size()) - 1; }

BPoly bp_from_poly(const PolyQ& p) {
    BPoly f(std::max(p.degree_in(1), 0) + 1);
    for (const auto& [e, c] : p.terms()) {
        UPoly& u = f[e[1]];
        if (udeg(u) < e[0]) u.resize(e[0] + 1, Rational(0));
        u[e[0]] = c;
    }
    for (auto& u : f) utrim(u);
    btrim(f);
    return f;
}

PolyQ bp_to_poly(const BPoly& f) {
    PolyQ p(2);
    for (int j = 0; j <= bdeg_y(f); ++j)
        for (int i = 0; i <= udeg(f[j]); ++i)
            if (f[j][i] != 0) p.add_term({i, j}, f[j][i]);
    return p;
}

UPoly content_x(const BPoly& f) {
    UPoly g;
    for (const auto& u : f) g = ugcd(g, u);
    return g;
}

BPoly bp_divide_content(const BPoly& f, const UPoly& c) {
    BPoly r;
    for (const auto& u : f) {
        if (u.empty()) {
            r.push_back({});
            continue;
        }
        auto q = divide_exact_u(u, c);
        if (!q) throw Error("content division failed");
        r.push_back(*q);
    }
    return r;
}

BPoly bp_deriv_y(const BPoly& f) {
    BPoly r;
    for (size_t j = 1; j < f.size(); ++j) r.push_back(uscale(f[j], rat(static_cast<long>(j))));
    btrim(r);
    return r;
}

// Pseudo-remainder of a by b in (Q[x])[y].
BPoly bprem(BPoly a, const BPoly& b) {
    btrim(a);
    int db = bdeg_y(b);
    if (db < 0) throw Error("bprem: zero divisor");
    const UPoly& lb = b.back();
    while (bdeg_y(a) >= db && !a.empty()) {
        int k = bdeg_y(a) - db;
        UPoly la = a.back();
        // a <- lb * a - la * y^k * b
        for (auto& u : a) u = umul(u, lb);
        for (int i = 0; i <= db; ++i) a[k + i] = usub(a[k + i], umul(la, b[i]));
        btrim(a);
    }
    return a;
}

BPoly bp_primitive(BPoly f) {
    btrim(f);
    if (f.empty()) return f;
    UPoly c = content_x(f);
    return bp_divide_content(f, c);
}

// Primitive gcd of f and g with respect to y (content in Q[x] ignored).
BPoly bgcd_y(BPoly a, BPoly b) {
    a = bp_primitive(std::move(a));
    b = bp_primitive(std::move(b));
    if (bdeg_y(a) < bdeg_y(b)) std::swap(a, b);
    while (!b.empty()) {
        BPoly r = bp_primitive(bprem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Truncated power-series helpers over Q[[T]] (vectors capped at length m).
UPoly series_mul(const UPoly& a, const UPoly& b, int m) {
    UPoly r(std::min<size_t>(m, a.empty() || b.empty() ? 0 : a.size() + b.size() - 1),
            Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < static_cast<size_t>(m) && j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

UPoly series_inv(const UPoly& a, int m) {
    if (a.empty() || a[0] == 0) throw Error("series not invertible");
    UPoly r{1 / a[0]};
    for (int k = 1; k < m; ++k) {
        Rational acc = 0;
        for (size_t t = 1; t <= static_cast<size_t>(k) && t < a.size(); ++t)
            acc += a[t] * (static_cast<size_t>(k) - t < r.size() ? r[k - t] : Rational(0));
        r.push_back(-acc / a[0]);
    }
    utrim(r);
    return r;
}

// y-polynomials with truncated series coefficients.
using SPoly = std::vector<UPoly>;

SPoly sp_mul(const SPoly& a, const SPoly& b, int m) {
    SPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = uadd(r[i + j], series_mul(a[i], b[j], m));
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------

PolyQ Factorization::product() const {
    int nv = factors.empty() ? 1 : factors.front().first.nvars();
    PolyQ r = PolyQ::constant(nv, content);
    for (const auto& [f, mult] : factors)
        for (int i = 0; i < mult; ++i) r = r * f;
    return r;
}

Factorization univariate_factor(const PolyQ& p) {
    if (p.nvars() != 1) throw DimensionError("univariate_factor: one variable required");
    if (p.total_degree() > 12)
        throw UnsupportedDegreeError("univariate_factor: degree > 12 unsupported");
    Factorization out;
    UPoly f = from_poly1(p);
    if (f.empty()) {
        out.content = 0;
        return out;
    }
    if (udeg(f) == 0) {
        out.content = f[0];
        return out;
    }
    auto [scale, z] = primitive_int(f);
    out.content = scale;
    UPoly w = to_rational(z);

    // Squarefree part carries one copy of each irreducible factor.
    UPoly g = ugcd(w, uderiv(w));
    UPoly sf = udivrem(w, g).first;
    auto [s2, zsf] = primitive_int(sf);
    (void)s2;

    std::vector<ZPoly> irred = zassenhaus(zsf);
    std::vector<std::pair<PolyQ, int>> factors;
    UPoly rem = w;
    for (const auto& zq : irred) {
        UPoly q = to_rational(zq);
        int mult = 0;
        while (true) {
            auto quot = divide_exact_u(rem, q);
            if (!quot) break;
            rem = *quot;
            ++mult;
        }
        factors.emplace_back(to_poly1(q), mult);
    }
    if (udeg(rem) != 0 || rem.empty() || rem[0] != 1)
        throw Error("univariate_factor: residual after factor extraction");
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    out.factors = std::move(factors);
    if (out.product() != p) throw Error("univariate_factor: re-multiplication mismatch");
    return out;
}

std::optional<PolyQ> bivariate_proper_factor(const PolyQ& p) {
    if (p.nvars() != 2) throw DimensionError("bivariate factor: two variables required");
    if (p.total_degree() > 8)
        throw UnsupportedDegreeError("bivariate factor: total degree > 8 unsupported");
    if (p.is_zero() || p.total_degree() < 1) return std::nullopt;

    // Purely univariate content in either variable.
    auto univariate_split = [](const PolyQ& q, int var) -> std::optional<PolyQ> {
        PolyQ one_var(1);
        for (const auto& [e, c] : q.terms()) one_var.add_term({e[var]}, c);
        Factorization fac = univariate_factor(one_var);
        int count = 0;
        for (const auto& [f, m] : fac.factors) count += m;
        if (count <= 1) return std::nullopt;
        UPoly f0 = from_poly1(fac.factors.front().first);
        return embed2(f0, var);
    };
    if (p.degree_in(1) == 0) return univariate_split(p, 0);
    if (p.degree_in(0) == 0) return univariate_split(p, 1);

    BPoly B = bp_from_poly(p);
    UPoly cont = content_x(B);
    if (udeg(cont) >= 1) return embed2(cont, 0);
    B = bp_divide_content(B, cont);

    BPoly gy = bgcd_y(B, bp_deriv_y(B));
    if (bdeg_y(gy) >= 1) return bp_to_poly(gy);

    // Specialize x = c keeping full y-degree and squarefreeness.
    const UPoly& lcy = B.back();
    long c_found = 0;
    bool ok = false;
    UPoly u;
    for (long mag = 0; mag <= 1000 && !ok; ++mag) {
        for (long sgn : {1L, -1L}) {
            if (mag == 0 && sgn == -1) continue;
            long c = sgn * mag;
            if (ueval(lcy, rat(c)) == 0) continue;
            UPoly spec;
            for (const auto& coeffs : B) spec.push_back(ueval(coeffs, rat(c)));
            utrim(spec);
            UPoly g = ugcd(spec, uderiv(spec));
            if (udeg(g) == 0) {
                c_found = c;
                u = spec;
                ok = true;
                break;
            }
        }
    }
    if (!ok) throw Error("bivariate factor: no squarefree specialization found");

    auto [su, zu] = primitive_int(u);
    (void)su;
    std::vector<ZPoly> ufac = zassenhaus(zu);
    if (ufac.size() == 1) return std::nullopt;

    const int m = p.degree_in(0) + udeg(lcy) + 1;
    const int r = static_cast<int>(ufac.size());
    std::vector<UPoly> ubar(r);
    for (int i = 0; i < r; ++i) ubar[i] = umonic(to_rational(ufac[i]));

    // Bezout inverses over Q[y].
    std::vector<UPoly> winv(r);
    for (int i = 0; i < r; ++i) {
        UPoly prod{Rational(1)};
        for (int j = 0; j < r; ++j)
            if (j != i) prod = umul(prod, ubar[j]);
        prod = udivrem(prod, ubar[i]).second;
        XGcd xg = uxgcd(prod, ubar[i]);
        if (udeg(xg.g) != 0) throw Error("bivariate factor: specialization not coprime");
        winv[i] = udivrem(uscale(xg.s, 1 / xg.g[0]), ubar[i]).second;
    }

    // Shift to T = x - c and monicize as a series in T.
    BPoly F;
    for (const auto& coeffs : B) F.push_back(ushift(coeffs, rat(c_found)));
    UPoly lcs = F.back();
    if (static_cast<int>(lcs.size()) > m) lcs.resize(m);
    UPoly ilc = series_inv(lcs, m);
    SPoly Ft(F.size());
    for (size_t j = 0; j < F.size(); ++j) Ft[j] = series_mul(F[j], ilc, m);

    // Linear lift in T of the monic univariate factorization.
    std::vector<SPoly> G(r);
    for (int i = 0; i < r; ++i) {
        G[i].resize(ubar[i].size());
        for (size_t j = 0; j < ubar[i].size(); ++j)
            if (ubar[i][j] != 0) G[i][j] = UPoly{ubar[i][j]};
    }
    for (int k = 1; k < m; ++k) {
        SPoly prod{UPoly{Rational(1)}};
        for (int i = 0; i < r; ++i) prod = sp_mul(prod, G[i], m);
        // e(y) = T^k coefficient of (Ft - prod)
        UPoly e;
        for (size_t j = 0; j < std::max(Ft.size(), prod.size()); ++j) {
            Rational ce = 0;
            if (j < Ft.size() && static_cast<int>(Ft[j].size()) > k) ce += Ft[j][k];
            if (j < prod.size() && static_cast<int>(prod[j].size()) > k) ce -= prod[j][k];
            if (e.size() <= j) e.resize(j + 1, Rational(0));
            e[j] = ce;
        }
        utrim(e);
        if (e.empty()) continue;
        for (int i = 0; i < r; ++i) {
            UPoly delta = udivrem(umul(e, winv[i]), ubar[i]).second;
            for (size_t j = 0; j < delta.size(); ++j) {
                if (delta[j] == 0) continue;
                if (G[i].size() <= j) G[i].resize(j + 1);
                UPoly& series = G[i][j];
                if (static_cast<int>(series.size()) <= k) series.resize(k + 1, Rational(0));
                series[k] += delta[j];
            }
        }
    }

    // Subset recombination with trial division.
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    for (int s = 1; 2 * s <= r; ++s) {
        std::vector<int> pick(s);
        auto rec = [&](auto&& self, int pos, int start) -> std::optional<PolyQ> {
            if (pos == s) {
                SPoly cand{UPoly{Rational(1)}};
                for (int t = 0; t < s; ++t) cand = sp_mul(cand, G[pick[t]], m);
                // Multiply by the true leading coefficient and un-truncate.
                SPoly full(cand.size());
                for (size_t j = 0; j < cand.size(); ++j)
                    full[j] = series_mul(cand[j], lcs, m);
                // Back to x, then primitive part.
                BPoly bx;
                for (const auto& series : full) bx.push_back(ushift(series, rat(-c_found)));
                btrim(bx);
                if (bx.empty()) return std::nullopt;
                UPoly cc = content_x(bx);
                BPoly prim = bp_divide_content(bx, cc);
                PolyQ g = bp_to_poly(prim);
                if (g.total_degree() < 1) return std::nullopt;
                if (PolyQ::divide_exact(p, g)) return g;
                return std::nullopt;
            }
            for (int i = start; i < r; ++i) {
                pick[pos] = i;
                if (auto res = self(self, pos + 1, i + 1)) return res;
            }
            return std::nullopt;
        };
        if (auto res = rec(rec, 0, 0)) return res;
    }
    return std::nullopt;
}

bool bivariate_irreducible(const PolyQ& p) {
    if (p.nvars() != 2) throw DimensionError("bivariate_irreducible: two variables required");
    if (p.total_degree() > 8)
        throw UnsupportedDegreeError("bivariate_irreducible: total degree > 8 unsupported");
    if (p.is_zero() || p.total_degree() < 1) return false;
    if (p.total_degree() == 1) return true;
    return !bivariate_proper_factor(p).has_value();
}

}  // namespace hahn
