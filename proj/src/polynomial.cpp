#include "hahn/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hahn/errors.hpp"

namespace hahn {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

PolyQ PolyQ::constant(int nvars, const Rational& c) {
    PolyQ p(nvars);
    if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
    return p;
}

PolyQ PolyQ::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw DimensionError("variable index out of range");
    PolyQ p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

PolyQ PolyQ::monomial(int nvars, const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars) throw DimensionError("exponent length mismatch");
    PolyQ p(nvars);
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

bool PolyQ::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](int x) { return x == 0; }));
}

Rational PolyQ::constant_value() const {
    if (!is_constant()) throw Error("constant_value on non-constant polynomial");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int PolyQ::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

int PolyQ::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return terms_.empty() ? -1 : d;
}

Rational PolyQ::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void PolyQ::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw DimensionError("exponent length mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else if (c == 0) {
        terms_.erase(it);
    }
}

const std::pair<const Exponents, Rational>& PolyQ::leading_term() const {
    if (terms_.empty()) throw Error("leading_term of zero polynomial");
    return *terms_.rbegin();
}

void PolyQ::check_same_ring(const PolyQ& o) const {
    if (nvars_ != o.nvars_) throw DimensionError("polynomial nvars mismatch");
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
    check_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    PolyQ r = *this;
    r += o;
    return r;
}

PolyQ PolyQ::operator-(const PolyQ& o) const {
    PolyQ r = *this;
    r -= o;
    return r;
}

PolyQ PolyQ::operator-() const { return scaled(Rational(-1)); }

PolyQ PolyQ::scaled(const Rational& c) const {
    PolyQ r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    check_same_ring(o);
    PolyQ r(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool PolyQ::operator==(const PolyQ& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Rational PolyQ::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw DimensionError("evaluation point length mismatch");
    // Per-variable power tables keep repeated evaluation cheap.
    std::vector<std::vector<Rational>> pows(nvars_);
    for (int v = 0; v < nvars_; ++v) {
        int d = std::max(degree_in(v), 0);
        pows[v].resize(d + 1);
        pows[v][0] = 1;
        for (int i = 1; i <= d; ++i) pows[v][i] = pows[v][i - 1] * point[v];
    }
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int v = 0; v < nvars_; ++v)
            if (e[v] > 0) t *= pows[v][e[v]];
        acc += t;
    }
    return acc;
}

PolyQ PolyQ::substitute(int var, const PolyQ& repl) const {
    check_same_ring(repl);
    int dmax = std::max(degree_in(var), 0);
    std::vector<PolyQ> pows;
    pows.reserve(dmax + 1);
    pows.push_back(PolyQ::constant(nvars_, 1));
    for (int i = 1; i <= dmax; ++i) pows.push_back(pows.back() * repl);
    PolyQ r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        int k = rest[var];
        rest[var] = 0;
        r += PolyQ::monomial(nvars_, rest, c) * pows[k];
    }
    return r;
}

PolyQ PolyQ::substitute(int var, const Rational& value) const {
    PolyQ r(nvars_);
    std::vector<Rational> pows{Rational(1)};
    for (const auto& [e, c] : terms_) {
        while (static_cast<int>(pows.size()) <= e[var]) pows.push_back(pows.back() * value);
        Exponents rest = e;
        rest[var] = 0;
        r.add_term(rest, c * pows[e[var]]);
    }
    return r;
}

PolyQ PolyQ::derivative(int var) const {
    PolyQ r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

std::optional<PolyQ> PolyQ::divide_exact(const PolyQ& f, const PolyQ& g) {
    f.check_same_ring(g);
    if (g.is_zero()) return std::nullopt;
    PolyQ q(f.nvars());
    PolyQ r = f;
    const auto& [ge, gc] = g.leading_term();
    while (!r.is_zero()) {
        const auto& [re, rc] = r.leading_term();
        Exponents d(f.nvars());
        for (int i = 0; i < f.nvars(); ++i) {
            d[i] = re[i] - ge[i];
            if (d[i] < 0) return std::nullopt;
        }
        PolyQ t = PolyQ::monomial(f.nvars(), d, rc / gc);
        q += t;
        r -= t * g;
    }
    return q;
}

std::string PolyQ::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print highest terms first for readability.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (!first) os << (sign(a) < 0 ? " - " : " + ");
        else if (sign(a) < 0)
            os << "-";
        first = false;
        a = abs(a);
        bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        if (a != 1 || !any_var) os << to_string(a);
        bool need_star = (a != 1);
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            if (need_star) os << "*";
            need_star = true;
            if (static_cast<int>(names.size()) > v) os << names[v];
            else os << "x" << (v + 1);
            if (e[v] > 1) os << "^" << e[v];
        }
    }
    return os.str();
}

PolyQ poch_poly(const PolyQ& base, long k) {
    if (k < 0) throw OutOfRangeError("poch_poly: k must be nonnegative");
    PolyQ r = PolyQ::constant(base.nvars(), 1);
    PolyQ t = base;
    for (long i = 0; i < k; ++i) {
        r = r * t;
        t += PolyQ::constant(base.nvars(), 1);
    }
    return r;
}

PolyQ neg_var_poch(int nvars, int var, long k) {
    return poch_poly(-PolyQ::variable(nvars, var), k);
}

}  // namespace hahn
