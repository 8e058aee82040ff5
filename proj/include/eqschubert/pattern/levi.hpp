#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "eqschubert/weyl/root_datum.hpp"

namespace eqschubert {

/// One irreducible factor of the subsystem Φ', matched to a standard datum.
struct LeviFactor {
  char type = 'A';
  int rank = 0;             // number of simple roots
  std::vector<int> simple;  // indices into LeviDatum::sub_simple_roots()
  std::vector<int> to_standard;  // simple[k] corresponds to standard simple root to_standard[k]
  DatumPtr standard;

  std::string label() const { return std::string(1, type) + std::to_string(rank); }
};

struct Coset {
  WeylElem rep;  // the minimal-length member ς
  std::vector<WeylElem> members;
};

/// x = w·ς with w ∈ W' and ς the minimal representative of W'x.
struct FlattenResult {
  std::vector<WeylElem> sub_element;  // w in the own notation of each factor
  WeylElem rep;
  WeylElem ambient_factor;  // w as an element of W
};

class LeviDatum;
using LeviPtr = std::shared_ptr<const LeviDatum>;

/// The Levi subsystem Φ' = {α : <α, η> = 0} cut out by a cocharacter η, its
/// Weyl group W' ⊂ W and the right cosets W'\W.
class LeviDatum {
 public:
  static LeviPtr from_cocharacter(DatumPtr ambient, std::vector<int> eta);

  const RootDatum& ambient() const { return *ambient_; }
  const DatumPtr& ambient_ptr() const { return ambient_; }
  std::span<const int> eta() const { return eta_; }

  const std::vector<LinearForm>& sub_positive_roots() const { return sub_->positive_roots(); }
  const std::vector<LinearForm>& sub_simple_roots() const { return sub_->simple_roots(); }
  /// W' as a reflection subgroup; its elements are ambient signed permutations.
  const RootDatum& sub() const { return *sub_; }
  const DatumPtr& sub_ptr() const { return sub_; }
  const std::vector<LeviFactor>& factors() const { return factors_; }
  /// "A1xA1", "A3", or "1" when W' is trivial.
  const std::string& type_label() const { return sub_->label(); }
  bool in_subsystem(const LinearForm& alpha) const;
  /// Δ' ⊂ Δ. Exactly then ℓ(wς) = ℓ'(w) + ℓ(ς) for every coset.
  bool is_standard() const { return standard_; }

  const std::vector<Coset>& cosets() const { return cosets_; }
  std::size_t num_cosets() const { return cosets_.size(); }
  /// Minimal representatives sorted by (length, window).
  std::vector<WeylElem> min_coset_reps() const;
  bool is_min_rep(const WeylElem& x) const;
  /// Throws RepNotMinimal naming the valid representatives.
  void require_min_rep(const WeylElem& x) const;
  std::size_t coset_index(const WeylElem& x) const;

  FlattenResult flatten(const WeylElem& x) const;
  /// w ∈ W' in the standard window notation of each factor.
  std::vector<WeylElem> own_windows(const WeylElem& w) const;
  /// Inverse of own_windows.
  WeylElem from_own_windows(std::span<const WeylElem> parts) const;

 private:
  LeviDatum() = default;

  DatumPtr ambient_;
  std::vector<int> eta_;
  DatumPtr sub_;
  std::vector<LeviFactor> factors_;
  std::vector<int> factor_of_simple_;  // sub simple index -> factor
  std::vector<int> standard_of_simple_;
  std::vector<Coset> cosets_;
  std::vector<std::size_t> coset_of_;  // ambient index -> coset
  bool standard_ = false;
};

/// Parses "1,1,-1,-1".
std::vector<int> parse_cocharacter(std::string_view text);

}  // namespace eqschubert
