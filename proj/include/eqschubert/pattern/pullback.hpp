#pragma once

#include <memory>

#include "eqschubert/gkm/cohomology.hpp"
#include "eqschubert/gkm/ktheory.hpp"
#include "eqschubert/pattern/levi.hpp"

namespace eqschubert {

enum class CheckMode { kChecked, kFast };

/// ι*_ς φ: the class w ↦ φ(w·ς) on W'. Throws RepNotMinimal.
GkmClassS pullback_localized(const LeviDatum& L, const GkmClassS& phi, const WeylElem& sigma);
GkmClassK pullback_localized(const LeviDatum& L, const GkmClassK& psi, const WeylElem& sigma);

/// Pullbacks of Schubert classes along ι_ς, expanded in the Schubert basis
/// of F' = G'/B'. Expansions are keyed by w ∈ W' as an ambient element.
class PatternPullback {
 public:
  explicit PatternPullback(LeviPtr levi);

  const LeviDatum& levi() const { return *levi_; }
  const SchubertCohomology& ambient_coh() const { return ambient_coh_; }
  const SchubertCohomology& sub_coh() const { return sub_coh_; }
  const KTheorySchubert& ambient_k() const { return ambient_k_; }
  const KTheorySchubert& sub_k() const { return sub_k_; }

  /// Checked mode runs two routes and throws CrossCheckFailure when they
  /// differ: localization against structure constants for a standard Levi,
  /// against the W' duality pairing otherwise. Fast mode runs only the
  /// localization route.
  SchubertExpansionS schubert_coh(const WeylElem& u, const WeylElem& sigma, CheckMode mode = CheckMode::kChecked) const;
  SchubertExpansionK schubert_K(const WeylElem& u, const WeylElem& sigma, CheckMode mode = CheckMode::kChecked) const;

  /// Keeps the terms c^{wς}_{u,ς} 𝔖_{wς} of 𝔖_u·𝔖_ς with w ∈ W'. Needs a
  /// standard Levi; throws NonStandardLevi otherwise.
  SchubertExpansionS coh_by_structure_constants(const WeylElem& u, const WeylElem& sigma) const;
  /// Expands ι*_ς i^*𝔖_u in the W' Schubert basis.
  SchubertExpansionS coh_by_localization(const WeylElem& u, const WeylElem& sigma) const;
  SchubertExpansionK k_by_structure_constants(const WeylElem& u, const WeylElem& sigma) const;
  SchubertExpansionK k_by_localization(const WeylElem& u, const WeylElem& sigma) const;
  /// Coefficients as pushforwards over F': ∫ ι*_ς𝔖_u·[X'_w] and χ(ι*_ς[O^u]·[I'_w]).
  SchubertExpansionS coh_by_duality(const WeylElem& u, const WeylElem& sigma) const;
  SchubertExpansionK k_by_duality(const WeylElem& u, const WeylElem& sigma) const;

 private:
  void require_standard() const;
  template <class Ring>
  SchubertExpansion<Ring> filter(const SchubertExpansion<Ring>& product, const WeylElem& sigma) const;

  LeviPtr levi_;
  SchubertCohomology ambient_coh_;
  SchubertCohomology sub_coh_;
  KTheorySchubert ambient_k_;
  KTheorySchubert sub_k_;
};

/// Human-readable form "c1*S[w1] + c2*S[w2]" with windows in ambient notation.
template <class Ring>
std::string expansion_to_string(const SchubertExpansion<Ring>& e, const char* basis = "S");

}  // namespace eqschubert
