#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hahn/hahnmd.hpp"

namespace hahn {

/// Function on a finite set of multi-indices. Lookups outside the domain are
/// an error, distinct from a stored zero.
struct GridFunction {
    std::vector<MultiIndex> domain;  // graded-lex sorted
    std::map<MultiIndex, Rational, GradedLexMI> values;

    bool has(const MultiIndex& i) const { return values.count(i) != 0; }
    const Rational& at(const MultiIndex& i) const;
    void set(const MultiIndex& i, Rational v);
};

/// One shift term of a difference operator: offset plus a coefficient
/// function of the lattice point.
struct StencilTerm {
    std::vector<int> offset;
    std::function<EvalResult(const MultiIndex&)> coeff;
};

struct Stencil {
    std::vector<StencilTerm> terms;  // includes the diagonal term
};

/// The variable-side operator L^x_k (acting on the last k variables),
/// 1 <= k <= d. Coefficients vanish exactly where a shift would leave V.
Stencil make_Lx(int k, const LatticeParams& p);

/// Applies L^x_k pointwise over f's domain; a needed value outside the
/// domain under a nonzero coefficient raises GridDomainError.
GridFunction apply_Lx(int k, const GridFunction& f, const LatticeParams& p);

/// Eigenvalue of L^x_k on hat-sQ_nu: -|nu^{d-k+1}| (|nu^{d-k+1}| - |ell^{d-k+1}| - 1).
Rational lx_eigenvalue(int k, const MultiIndex& nu, const LatticeParams& p);

/// Coefficient tables of the index-side operator (full-parameter context).
/// i = 0 only carries j = 0; unknown (j,k) pairs are a TableError.
Rational coeff_B(int i, int j, int k, const MultiIndex& nu, const LatticeParams& p);
Rational coeff_b(int i, int j, const MultiIndex& nu, const LatticeParams& p);

/// C_mu = prod_k B_k^{mu_k, mu_{k+1}} / prod_k b_k^{mu_k}. Zero numerator
/// factors are detected before any division; a vanishing b under a live
/// numerator is reported in-band.
EvalResult coeff_C(const std::vector<int>& mu, const MultiIndex& nu,
                   const LatticeParams& p);

/// The same C_mu as an unreduced rational function: numerator and
/// denominator polynomials in (nu_1..nu_d, ell_1..ell_{d+1}, N).
std::pair<PolyQ, PolyQ> coeff_C_symbolic(const std::vector<int>& mu, int d);

/// One term of L^nu_k at a fixed index.
struct LnuTerm {
    std::vector<int> mu;      // k entries
    std::vector<int> offset;  // d entries (only the first k may be nonzero)
    EvalResult coeff;
};

/// All off-diagonal terms of L^nu_k at nu (zero coefficients included, so
/// boundary soundness can be asserted).
std::vector<LnuTerm> lnu_terms(int k, const LatticeParams& p, const MultiIndex& nu);

/// (L^nu_k g)(nu) for a value source g over shifted indices. Terms with zero
/// coefficient are dropped without consulting g; a shift to a negative index
/// under a nonzero coefficient is an invariant violation.
EvalResult apply_Lnu_at(int k, const LatticeParams& p, const MultiIndex& nu,
                        const std::function<EvalResult(const MultiIndex&)>& g);

/// Same, reading values from a finite grid function; indices missing from
/// its domain come back in-band undefined.
EvalResult apply_Lnu_at(int k, const LatticeParams& p, const MultiIndex& nu,
                        const GridFunction& g);

/// Lazy, cached evaluator of nu -> hat-sQ_nu(x).
class HatEvaluator {
public:
    explicit HatEvaluator(const LatticeParams& p) : p_(p) {}
    EvalResult value(const MultiIndex& nu, const MultiIndex& x);

private:
    LatticeParams p_;
    std::map<MultiIndex, Eval<PolyQ>, GradedLexMI> cache_;
};

/// True iff the two operators of the family commute on every basis element
/// (family 'x' over V, family 'n' over H). Index pairs excluded for
/// undefined coefficients are appended to *exclusions when given.
bool commutator_check(char family, int k1, int k2, const LatticeParams& p,
                      std::vector<std::string>* exclusions = nullptr);

}  // namespace hahn
