#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

#include "hahn/errors.hpp"

namespace hahn {

/// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
/// positive denominator) through arithmetic; construct via rat() so that
/// explicit numerator/denominator pairs are canonicalized too.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const Integer& num, const Integer& den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "a/b" or "a" (decimal strings).
inline Rational rat_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw Error("unparsable rational: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

inline Rational pow_rat(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;
}

/// Tagged value: either a finite result or an in-band description of why
/// the defining formula has no value (a genuine pole). Poles that are part
/// of the domain being studied, rather than usage errors, travel through
/// this type instead of exceptions.
template <typename T>
class Eval {
public:
    /// Default state is undefined (no value).
    Eval() : reason_("uninitialized") {}

    static Eval finite(T v) { return Eval(std::move(v), {}); }
    static Eval undefined(std::string reason) {
        Eval e;
        e.reason_ = std::move(reason);
        return e;
    }

    bool defined() const { return value_.has_value(); }
    explicit operator bool() const { return defined(); }

    const T& value() const {
        if (!defined()) throw PoleError("undefined value used: " + reason_);
        return *value_;
    }
    const std::string& reason() const { return reason_; }

    bool operator==(const Eval& o) const {
        if (defined() != o.defined()) return false;
        return !defined() || *value_ == *o.value_;
    }

private:
    Eval(T v, std::string r) : value_(std::move(v)), reason_(std::move(r)) {}
    std::optional<T> value_;
    std::string reason_;
};

using EvalResult = Eval<Rational>;

}  // namespace hahn
