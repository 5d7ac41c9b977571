#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hahn/hahn1d.hpp"
#include "hahn/lattice.hpp"
#include "hahn/polynomial.hpp"

namespace hahn {

/// Hahn polynomial on the polyhedron, product-form definition, computed in
/// the Pochhammer-cleared form: every factor is the cleared sum
/// (-N_j)_{nu_j} sQ_{nu_j}(x_j; ell_j, za_j, N_j) with numerator zeros
/// checked before any division. Defined for nu in CH and for the limiting
/// frontier cases; a genuine pole is reported in-band.
Eval<PolyQ> sQ_nu(const MultiIndex& nu, const LatticeParams& p);

/// sQ_nu divided by (-N)_{|nu|}; requires |nu| <= N.
Eval<PolyQ> hat_sQ(const MultiIndex& nu, const LatticeParams& p);

/// Renormalization sH_nu at a homogeneous coordinate alpha, |alpha| = N.
Rational sH_nu_at(const MultiIndex& nu, const std::vector<int>& alpha,
                  const LatticeParams& p);

/// Closed-form norm sB_nu(ell, N) as the analytic-continuation limit along
/// kappa = -ell - 1 + eps. Positive on H, zero on CH \ H; a pole that does
/// not cancel is reported in-band.
EvalResult norm_B_nu(const MultiIndex& nu, const LatticeParams& p);

/// Hypergeometric weight, binomial product form; zero outside V.
Rational weight_H_md(const MultiIndex& x, const LatticeParams& p);
/// The same weight in the Pochhammer product form.
Rational weight_H_md_poch(const MultiIndex& x, const LatticeParams& p);

/// True iff sQ_nu vanishes at every point of V. Only meaningful for
/// nu in CH \ H (error otherwise).
bool vanishing_check(const MultiIndex& nu, const LatticeParams& p);

/// sR_{nu2}(x; ell2, ell3, N) = (-N+x1)_{nu2} sQ_{nu2}(x2; ell2, ell3, N-x1)
/// in the cleared form, as a polynomial in (x1, x2).
Eval<PolyQ> sR(int nu2, int ell2, int ell3, int N);

enum class FrontierKind { Undefined, Splits, General };
enum class SplitForm { None, A, B, C };

/// Classification of sQ_{(nu1, h(nu1))}, the first index above each column
/// of H (d = 2).
struct FrontierReport {
    int nu1 = 0;
    int nu2 = 0;  // h(nu1)
    FrontierKind kind = FrontierKind::General;
    /// The iff-conditions for "not well-defined" (with the strict reading
    /// of the equal-parameter borderline; the limiting cases carry values).
    bool predicted_undefined = false;
    /// Direct evaluation came out undefined.
    bool direct_undefined = false;

    /// First-factor analysis (valid whenever the split range applies,
    /// independently of the overall classification).
    SplitForm split = SplitForm::None;
    std::optional<PolyQ> factor1;             // sQ_{nu1}(x1; lhat, Nhat)
    std::optional<PolyQ> split_closed_form;   // the A/B/C right-hand side
    bool split_matches = false;
};

FrontierReport d2_frontier_classify(int nu1, const LatticeParams& p);

/// Elementary kernel building block E_k(x, y; ell).
Rational elementary_E(int k, const MultiIndex& x, const MultiIndex& y,
                      const LatticeParams& p);

/// Highest degree present in H.
int max_H_degree(const LatticeParams& p);

/// Precomputed orthogonal basis data for one parameter set: index sets,
/// polynomials, their values on V, norms and weights. The expensive sweeps
/// (orthogonality, kernels, bispectral verification) all run off this.
struct HahnBasis {
    LatticeParams p;
    std::vector<MultiIndex> V;
    std::vector<MultiIndex> H;
    std::vector<MultiIndex> CH;
    std::map<MultiIndex, PolyQ, GradedLexMI> poly;        // nu in H
    std::map<MultiIndex, Rational, GradedLexMI> norm;     // nu in H
    std::map<MultiIndex, std::vector<Rational>, GradedLexMI> value;  // over V
    std::vector<Rational> weight;                         // sH over V
    explicit HahnBasis(const LatticeParams& params);
    int v_index(const MultiIndex& x) const;
};

/// Reproducing kernel of degree n: direct basis sum.
Rational kernel_P_direct(int n, const MultiIndex& x, const MultiIndex& y,
                         const HahnBasis& basis);
/// Closed form in terms of E_k; requires n <= ell_min and x, y in V.
Rational kernel_P_closed(int n, const MultiIndex& x, const MultiIndex& y,
                         const LatticeParams& p);
Rational kernel_P(int n, const MultiIndex& x, const MultiIndex& y,
                  const LatticeParams& p, bool closed);

/// Poisson kernel sum_{n<=M} P_n(x,y) r^n over the basis degrees.
Rational poisson_Phi(const Rational& r, const MultiIndex& x, const MultiIndex& y,
                     const HahnBasis& basis);

/// Coefficient map of the generating-function expansion: alpha (|alpha| = N)
/// to the expansion coefficient divided by N!/alpha!. Must reproduce
/// sH_nu(alpha) for nu in H.
std::map<std::vector<int>, Rational> genfun_md(const MultiIndex& nu,
                                               const LatticeParams& p);

}  // namespace hahn
