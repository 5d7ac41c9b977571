#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hahn/polynomial.hpp"

namespace hahn {

/// content * prod factors^multiplicity == the factored polynomial. Factors
/// are primitive with integer coefficients and positive leading coefficient
/// under graded-lex, sorted for deterministic output.
struct Factorization {
    Rational content = 0;
    std::vector<std::pair<PolyQ, int>> factors;
    PolyQ product() const;
};

/// Complete factorization into irreducibles over Q. Univariate input,
/// degree <= 12 (desk scale; see the CLI help).
Factorization univariate_factor(const PolyQ& p);

/// One proper factor of a bivariate polynomial (total degree <= 8), or
/// nullopt when irreducible. Exhaustive: specialization, univariate
/// factorization and (x-c)-adic lifting with subset recombination.
std::optional<PolyQ> bivariate_proper_factor(const PolyQ& p);

/// True iff p (nvars = 2, total degree <= 8) has no nontrivial factorization
/// over Q. Constants and zero are not irreducible.
bool bivariate_irreducible(const PolyQ& p);

}  // namespace hahn
