#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "eqschubert/gkm/gkm_class.hpp"

namespace eqschubert {

/// D_i ψ(u) = (ψ(u) - x^{u.α_i} ψ(u s_i)) / (1 - x^{u.α_i}). Throws NotDivisible.
GkmClassK demazure_pointwise(const GkmClassK& psi, int i);

/// Localized structure sheaves [O_{X^v}] of the opposite Schubert varieties,
/// generated from the point class at w0 by Demazure operators.
class KTheorySchubert {
 public:
  explicit KTheorySchubert(DatumPtr datum);

  const RootDatum& datum() const { return *datum_; }
  const DatumPtr& datum_ptr() const { return datum_; }

  const GkmClassK& structure_sheaf(const WeylElem& v) const { return structure_sheaf(datum_->index_of(v)); }
  const GkmClassK& structure_sheaf(std::size_t v) const;

  /// [O_{X_w}] for the B-stable Schubert variety X_w = w0.X^{w0 w}.
  const GkmClassK& opposite(const WeylElem& w) const { return opposite(datum_->index_of(w)); }
  const GkmClassK& opposite(std::size_t w) const;

  /// [I_w] = Σ_{v<=w} (-1)^{ℓ(w)-ℓ(v)} [O_{X_v}], the boundary ideal sheaf of X_w.
  GkmClassK ideal_sheaf(const WeylElem& w) const;

  /// Throws NotInSpan.
  SchubertExpansionK expand(const GkmClassK& psi) const;
  SchubertExpansionK structure_constants(const WeylElem& u, const WeylElem& v) const;
  /// b^w_{u,v} as χ([O_{X^u}]·[O_{X^v}]·[I_w]).
  SchubertExpansionK structure_constants_by_integration(const WeylElem& u, const WeylElem& v) const;

  /// Euler characteristic by localization. Throws NonIntegralResult.
  LaurentR integrate(const GkmClassK& psi) const;

  /// Inversion roots β of x; [O_{X^x}](x) = ∏ (1 - x^{-β}).
  std::vector<LinearForm> diagonal_factors(std::size_t x) const;

 private:
  struct Slot {
    std::once_flag once;
    std::optional<GkmClassK> value;
  };

  DatumPtr datum_;
  std::unique_ptr<Slot[]> sheaf_;
  std::unique_ptr<Slot[]> opposite_;
  std::vector<LaurentR> weights_;  // (-1)^{ℓ(w)} x^{-μ_w}
};

}  // namespace eqschubert
