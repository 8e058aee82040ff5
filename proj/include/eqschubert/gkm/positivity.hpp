#pragma once

#include <optional>
#include <vector>

#include "eqschubert/symbolic/poly.hpp"
#include "eqschubert/weyl/root_datum.hpp"

namespace eqschubert {

/// Change of coordinates from t1..tn to a basis that starts with given
/// linearly independent characters and is completed by unit vectors.
class RootCoordinates {
 public:
  explicit RootCoordinates(const std::vector<LinearForm>& leading);

  int rank() const { return n_; }
  int leading() const { return r_; }
  /// Rational coordinates of λ in the basis.
  std::vector<Rational> coordinates(const LinearForm& lambda) const;
  /// p rewritten with variable j standing for the j-th basis character.
  PolyS rewrite(const PolyS& p) const;

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<std::vector<Rational>> inverse_;  // rows: coordinates of the unit vectors
};

/// p as a polynomial in the simple roots α_1..α_r (variable i = α_{i+1}),
/// or nullopt if p is not in the subring they generate.
std::optional<PolyS> in_simple_roots(const PolyS& p, const RootDatum& d);

/// Nonnegative integer combination of monomials in the simple roots.
bool is_graham_positive(const PolyS& p, const RootDatum& d);

/// ψ ∈ Z[x^{±α_i}] as a polynomial in y_i = x^{-α_i} - 1 (or x^{α_i} - 1 when
/// `negative` is false); nullopt if ψ involves other characters or negative
/// powers of the chosen generators.
std::optional<PolyS> in_agm_variables(const LaurentR& psi, const RootDatum& d, bool negative = true);

/// (-1)^{excess} ψ is a nonnegative combination of monomials in the y_i.
bool is_agm_positive(const LaurentR& psi, int excess, const RootDatum& d, bool negative = true);

}  // namespace eqschubert
