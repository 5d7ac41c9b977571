#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hahn/rational.hpp"

namespace hahn {

using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then lex on entries.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate polynomial over the rationals in canonical form: a map from
/// exponent vectors to nonzero coefficients, graded-lex ordered. Equality of
/// term maps is equality of polynomials.
class PolyQ {
public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    explicit PolyQ(int nvars = 0) : nvars_(nvars) {}
    static PolyQ constant(int nvars, const Rational& c);
    static PolyQ variable(int nvars, int index);
    static PolyQ monomial(int nvars, const Exponents& e, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(int var) const;

    const TermMap& terms() const { return terms_; }
    Rational coeff(const Exponents& e) const;
    void add_term(const Exponents& e, const Rational& c);

    /// Leading term under graded-lex. Polynomial must be nonzero.
    const std::pair<const Exponents, Rational>& leading_term() const;

    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ operator-() const;
    PolyQ scaled(const Rational& c) const;
    bool operator==(const PolyQ& o) const;
    bool operator!=(const PolyQ& o) const { return !(*this == o); }

    Rational eval(const std::vector<Rational>& point) const;
    /// Replaces x_var by an arbitrary polynomial in the same ring.
    PolyQ substitute(int var, const PolyQ& repl) const;
    /// Replaces x_var by a scalar, keeping nvars unchanged.
    PolyQ substitute(int var, const Rational& value) const;
    PolyQ derivative(int var) const;

    /// Exact quotient f/g, or nullopt when g does not divide f.
    static std::optional<PolyQ> divide_exact(const PolyQ& f, const PolyQ& g);

    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void check_same_ring(const PolyQ& o) const;
    int nvars_;
    TermMap terms_;
};

inline PolyQ operator*(const Rational& c, const PolyQ& p) { return p.scaled(c); }

/// Rising factorial of a polynomial: (base)_k = base(base+1)...(base+k-1).
PolyQ poch_poly(const PolyQ& base, long k);

/// (-x_var)_k expanded as a polynomial; the workhorse of every
/// terminating-series expansion.
PolyQ neg_var_poch(int nvars, int var, long k);

}  // namespace hahn
