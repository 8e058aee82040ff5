#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "eqschubert/symbolic/poly.hpp"
#include "eqschubert/weyl/root_datum.hpp"

namespace eqschubert {

/// A localized class: one value of `Ring` per fixed point w ∈ W, stored in
/// the datum's element order.
template <class Ring>
class GkmClass {
 public:
  using ring_type = Ring;

  GkmClass() = default;
  GkmClass(DatumPtr datum, std::vector<Ring> values) : datum_(std::move(datum)), values_(std::move(values)) {
    if (values_.size() != datum_->size()) throw InputError("a localized class needs one value per fixed point");
    for (const auto& v : values_)
      if (v.rank() != datum_->rank()) throw RankMismatch("localized value has the wrong torus rank");
  }

  static GkmClass constant(DatumPtr datum, const Ring& c) {
    std::vector<Ring> values(datum->size(), c);
    return GkmClass(std::move(datum), std::move(values));
  }
  static GkmClass zero(DatumPtr datum) {
    const int n = datum->rank();
    return constant(std::move(datum), Ring(n));
  }

  const RootDatum& datum() const { return *datum_; }
  const DatumPtr& datum_ptr() const { return datum_; }
  std::size_t size() const { return values_.size(); }

  const Ring& operator[](std::size_t idx) const { return values_[idx]; }
  Ring& operator[](std::size_t idx) { return values_[idx]; }
  const Ring& at(const WeylElem& w) const { return values_[datum_->index_of(w)]; }
  std::span<const Ring> values() const { return values_; }

  bool is_zero() const {
    for (const auto& v : values_)
      if (!v.is_zero()) return false;
    return true;
  }

  GkmClass& operator+=(const GkmClass& o) {
    require_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  GkmClass& operator-=(const GkmClass& o) {
    require_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  /// Pointwise product: the cup product of classes.
  GkmClass& operator*=(const GkmClass& o) {
    require_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= o.values_[i];
    return *this;
  }
  /// Multiplication by a scalar from the coefficient ring.
  GkmClass& operator*=(const Ring& c) {
    for (auto& v : values_) v *= c;
    return *this;
  }

  friend GkmClass operator+(GkmClass a, const GkmClass& b) { return a += b; }
  friend GkmClass operator-(GkmClass a, const GkmClass& b) { return a -= b; }
  friend GkmClass operator*(GkmClass a, const GkmClass& b) { return a *= b; }
  friend GkmClass operator*(GkmClass a, const Ring& c) { return a *= c; }
  friend GkmClass operator*(const Ring& c, GkmClass a) { return a *= c; }

  friend bool operator==(const GkmClass& a, const GkmClass& b) {
    return a.datum_ == b.datum_ && a.values_ == b.values_;
  }

 private:
  void require_same(const GkmClass& o) const {
    if (datum_ != o.datum_) throw InputError("localized classes live on different groups");
  }

  DatumPtr datum_;
  std::vector<Ring> values_;
};

using GkmClassS = GkmClass<PolyS>;
using GkmClassK = GkmClass<LaurentR>;

/// Coefficients of a class in a Schubert basis, in the datum's element order.
template <class Ring>
struct SchubertExpansion {
  DatumPtr datum;
  std::vector<std::pair<WeylElem, Ring>> terms;

  Ring coefficient(const WeylElem& w) const {
    for (const auto& [v, c] : terms)
      if (v == w) return c;
    return Ring(datum->rank());
  }
  bool operator==(const SchubertExpansion& o) const { return datum == o.datum && terms == o.terms; }
};

using SchubertExpansionS = SchubertExpansion<PolyS>;
using SchubertExpansionK = SchubertExpansion<LaurentR>;

/// The fixed point u and root α of a failed GKM condition.
struct GkmViolation {
  WeylElem u;
  LinearForm alpha;
};

/// φ(u) - φ(s_α u) ∈ ⟨α⟩ for all α > 0 and u.
std::optional<GkmViolation> check_gkm_coh(const GkmClassS& phi);
/// ψ(u) - ψ(s_α u) ∈ ⟨1 - x^α⟩ for all α > 0 and u.
std::optional<GkmViolation> check_gkm_K(const GkmClassK& psi);

}  // namespace eqschubert
