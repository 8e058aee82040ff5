#pragma once

#include <array>
#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eqschubert/symbolic/sparse_poly.hpp"

namespace eqschubert {

/// An integral character of the torus, sum_i c_i t_i. Roots are linear forms.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::span<const int> coeffs);
  LinearForm(std::initializer_list<int> coeffs)
      : LinearForm(std::span<const int>(coeffs.begin(), coeffs.size())) {}

  static LinearForm zero(int rank);
  static LinearForm unit(int rank, int i);
  /// t_j - t_i with 1-based indices, the type A root alpha_{ij}.
  static LinearForm alpha(int rank, int i, int j);

  int rank() const { return rank_; }
  int operator[](int i) const { return c_[i]; }
  std::span<const int> coeffs() const { return {c_.data(), static_cast<std::size_t>(rank_)}; }

  bool is_zero() const;
  /// Positive iff the last nonzero coordinate is positive.
  bool is_positive() const;
  int dot(const LinearForm& o) const;

  LinearForm operator-() const;
  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  LinearForm operator*(int k) const;

  PolyS to_poly() const;
  /// The character x^λ as a unit of R(T).
  LaurentR to_character() const;
  Monomial as_exponent() const;
  static LinearForm from_exponent(int rank, const Monomial& m);

  std::string to_string() const { return to_poly().to_string(); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;

 private:
  int rank_ = 0;
  std::array<int, kMaxVars> c_{};
};

/// q with q*alpha == p; throws NotDivisible otherwise.
PolyS exact_div_linear(const PolyS& p, const LinearForm& alpha);
std::optional<PolyS> try_div_linear(const PolyS& p, const LinearForm& alpha);

/// q with q*(1 - x^alpha) == psi; throws NotDivisible otherwise.
LaurentR exact_div_one_minus(const LaurentR& psi, const LinearForm& alpha);
std::optional<LaurentR> try_div_one_minus(const LaurentR& psi, const LinearForm& alpha);

/// 1 - x^alpha.
LaurentR one_minus_character(const LinearForm& alpha);

/// Replaces each x^λ by sum_{k<=d} λ^k/k! and keeps the degree <= d part.
PolyS truncate_to_cohomology(const LaurentR& psi, int degree);

/// Applies a signed permutation to the variable block [offset, offset+size):
/// t_{offset+i} -> ±t_{offset+|w(i)|}, with t_{-k} = -t_k (in S) and
/// x^{t_{-k}} = x^{-t_k} (in R(T)). `window` holds 1-based signed values.
PolyS signed_permute(const PolyS& p, std::span<const int> window, int offset = 0);
LaurentR signed_permute(const LaurentR& p, std::span<const int> window, int offset = 0);

/// Ring homomorphism S(rank) -> S(images rank) sending t_i to images[i].
PolyS substitute(const PolyS& p, std::span<const PolyS> images);

/// Rank-changing monomial substitution on R(T): x_i -> images[i] (units).
LaurentR substitute_characters(const LaurentR& p, std::span<const LinearForm> images);

}  // namespace eqschubert
