#pragma once

#include <vector>

#include "hahn/combinatorics.hpp"

namespace hahn {

/// Point of N_0^d, used both for lattice points x and polynomial indices nu.
struct MultiIndex {
    std::vector<int> e;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> v) : e(std::move(v)) {}
    static MultiIndex zeros(int d) { return MultiIndex(std::vector<int>(d, 0)); }

    int dim() const { return static_cast<int>(e.size()); }
    int operator[](int i) const { return e[i]; }
    int& operator[](int i) { return e[i]; }

    /// |nu|.
    long total() const;
    /// |nu-bar_j| = nu_1 + ... + nu_j, 0 <= j <= d.
    long head_sum(int j) const;
    /// |nu^j| = nu_j + ... + nu_d, 1 <= j <= d+1 (empty sum for j = d+1).
    long tail_sum(int j) const;

    bool operator==(const MultiIndex& o) const { return e == o.e; }
    bool operator!=(const MultiIndex& o) const { return e != o.e; }
};

/// Graded-lex order on multi-indices; the canonical iteration order for all
/// stored sets, so output is deterministic.
struct GradedLexMI {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

inline bool operator<(const MultiIndex& a, const MultiIndex& b) {
    return GradedLexMI{}(a, b);
}

/// The tuple (ell in N^{d+1}, N) defining domain, weight and index sets.
/// Validity (ell_i <= N, ell_i + ell_j >= N) is enforced at construction.
struct LatticeParams {
    std::vector<int> ell;
    int N;
    int d;

    LatticeParams(std::vector<int> ell_, int N_);

    long ell_total() const;
    /// |ell^j| = ell_j + ... + ell_{d+1}, 1 <= j <= d+2 (empty sum for d+2).
    long ell_tail(int j) const;
    int ell_min() const;
};

/// za_j = |ell^{j+1}| - 2|nu^{j+1}|, 1 <= j <= d (equals ell_{d+1} at j = d).
long zhat_a(int j, const MultiIndex& nu, const LatticeParams& p);

bool in_V(const MultiIndex& x, const LatticeParams& p);
bool in_H(const MultiIndex& nu, const LatticeParams& p);
bool in_CH(const MultiIndex& nu, const LatticeParams& p);

/// Lattice points of the polyhedral domain, graded-lex sorted.
std::vector<MultiIndex> enum_V(const LatticeParams& p);
/// Index set of the orthogonal basis, graded-lex sorted.
std::vector<MultiIndex> enum_H(const LatticeParams& p);
/// Indices on which the polynomials are well defined, graded-lex sorted.
std::vector<MultiIndex> enum_CH(const LatticeParams& p);

/// Closed-form cardinality of V; must equal enum_V(p).size().
long card_V_formula(const LatticeParams& p);

/// Number of admissible nu_2 over column nu_1 of H (d = 2 only), via the
/// min formula.
int height(int nu1, const LatticeParams& p);
/// The same value via the piecewise closed form; kept separate so the two
/// routes can be tested against each other instead of assuming either.
int height_piecewise(int nu1, const LatticeParams& p);

}  // namespace hahn
