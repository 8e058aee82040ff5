#pragma once

#include <memory>
#include <mutex>
#include <optional>

#include "eqschubert/gkm/gkm_class.hpp"
#include "eqschubert/pattern/pullback.hpp"
#include "eqschubert/symbolic/parse.hpp"

namespace eqschubert {

/// Type A Borel presentation: classes as polynomials in t1..tn (indices
/// 0..n-1) and z1..zn (indices n..2n-1).
class BorelPresentation {
 public:
  /// Throws UnsupportedType unless the datum is of type A.
  explicit BorelPresentation(DatumPtr datum);

  int n() const { return n_; }
  const RootDatum& datum() const { return *datum_; }
  VarNames names() const { return VarNames::borel(n_); }

  /// Double Schubert polynomial, from ∏_{i+j<=n}(z_i - t_j) by divided
  /// differences in z.
  const PolyS& double_schubert(const WeylElem& w) const { return schubert_at(datum_->index_of(w)); }
  /// Double Grothendieck polynomial, from ∏_{i+j<=n}(1 - x^{t_j - z_i}) by
  /// isobaric divided differences in z.
  const LaurentR& double_grothendieck(const WeylElem& w) const { return grothendieck_at(datum_->index_of(w)); }

  /// Restriction to the fixed point w: z_i -> t_{w(i)}.
  PolyS eval(const PolyS& p, const WeylElem& w) const;
  LaurentR eval(const LaurentR& p, const WeylElem& w) const;

  GkmClassS localize(const PolyS& p) const;
  GkmClassK localize(const LaurentR& p) const;

 private:
  const PolyS& schubert_at(std::size_t w) const;
  const LaurentR& grothendieck_at(std::size_t w) const;
  void check_rank(int rank) const;

  struct SlotS {
    std::once_flag once;
    std::optional<PolyS> value;
  };
  struct SlotK {
    std::once_flag once;
    std::optional<LaurentR> value;
  };

  DatumPtr datum_;
  int n_ = 0;
  std::unique_ptr<SlotS[]> schubert_;
  std::unique_ptr<SlotK[]> grothendieck_;
};

/// ι*_ς on the Borel presentation: z_i -> z_{ς(i)}, t untouched.
PolyS pullback_borel(const PolyS& p, const WeylElem& sigma);
LaurentR pullback_borel(const LaurentR& p, const WeylElem& sigma);

/// Evaluates pullback_borel(p, ς) at the fixed points of W' and expands in
/// the W' Schubert basis.
SchubertExpansionS expand_pullback_via_borel(const PatternPullback& pb, const BorelPresentation& borel, const PolyS& p,
                                             const WeylElem& sigma);
SchubertExpansionK expand_pullback_via_borel(const PatternPullback& pb, const BorelPresentation& borel,
                                             const LaurentR& p, const WeylElem& sigma);

}  // namespace eqschubert
