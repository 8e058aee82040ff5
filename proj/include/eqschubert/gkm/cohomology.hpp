#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "eqschubert/gkm/gkm_class.hpp"

namespace eqschubert {

/// Localized Schubert classes of G/B in equivariant cohomology, with
/// per-element caches. All methods are safe to call from several threads.
class SchubertCohomology {
 public:
  explicit SchubertCohomology(DatumPtr datum, WordOrder order = WordOrder::kLexMin);

  const RootDatum& datum() const { return *datum_; }
  const DatumPtr& datum_ptr() const { return datum_; }

  /// i^*𝔖_v: the value at w sums, over reduced subwords of v inside the
  /// canonical word of w, the products of the roots β_j at the chosen letters.
  const GkmClassS& schubert(const WeylElem& v) const { return schubert(datum_->index_of(v)); }
  const GkmClassS& schubert(std::size_t v) const;

  /// Class of the opposite Schubert variety X_w = w0.X^{w0 w}.
  const GkmClassS& opposite(const WeylElem& w) const { return opposite(datum_->index_of(w)); }
  const GkmClassS& opposite(std::size_t w) const;

  /// Triangular elimination against the Schubert basis. Throws NotInSpan.
  SchubertExpansionS expand(const GkmClassS& phi) const;

  /// c^w_{u,v} by expanding the product 𝔖_u·𝔖_v.
  SchubertExpansionS structure_constants(const WeylElem& u, const WeylElem& v) const;
  /// c^w_{u,v} as the pushforward of 𝔖_u·𝔖_v·[X_w].
  SchubertExpansionS structure_constants_by_integration(const WeylElem& u, const WeylElem& v) const;

  /// Pushforward to a point by the localization formula, normalized so that
  /// the class of a point integrates to 1. Throws NonPolynomialResult.
  PolyS integrate(const GkmClassS& phi) const;

  /// 𝔖_x(x), the product of the inversion roots of x.
  PolyS diagonal(std::size_t x) const;

 private:
  struct Slot {
    std::once_flag once;
    std::optional<GkmClassS> value;
  };

  DatumPtr datum_;
  WordOrder order_;
  std::vector<int> first_letter_;  // first letter of the canonical word of each w
  std::unique_ptr<Slot[]> schubert_;
  std::unique_ptr<Slot[]> opposite_;
};

/// Free-standing form of SchubertCohomology::schubert for one-off use.
GkmClassS billey_localize(const DatumPtr& datum, const WeylElem& v, WordOrder order = WordOrder::kLexMin);

}  // namespace eqschubert
