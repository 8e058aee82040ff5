#include "eqschubert/borel/borel.hpp"

#include "eqschubert/error.hpp"

namespace eqschubert {

namespace {

// Transposition z_i <-> z_{i+1} (0-based i) on the z block.
WeylElem z_swap(int n, int i) {
  std::vector<int> window(n);
  for (int k = 0; k < n; ++k) window[k] = k + 1;
  std::swap(window[i], window[i + 1]);
  return WeylElem(window);
}

LinearForm z_root(int n, int i) {
  // z_{i+1} - z_i in the 2n variables.
  return LinearForm::unit(2 * n, n + i + 1) - LinearForm::unit(2 * n, n + i);
}

}  // namespace

BorelPresentation::BorelPresentation(DatumPtr datum) : datum_(std::move(datum)) {
  if (datum_->family() != Family::A) throw UnsupportedType("the Borel presentation is implemented for type A only");
  n_ = datum_->rank();
  if (2 * n_ > kMaxVars) throw UnsupportedType("group too large for the Borel presentation");
  schubert_.reset(new SlotS[datum_->size()]);
  grothendieck_.reset(new SlotK[datum_->size()]);
}

void BorelPresentation::check_rank(int rank) const {
  if (rank != 2 * n_) throw RankMismatch("Borel representatives need 2n variables");
}

const PolyS& BorelPresentation::schubert_at(std::size_t w) const {
  SlotS& slot = schubert_[w];
  std::call_once(slot.once, [&] {
    const RootDatum& d = *datum_;
    const int r = 2 * n_;
    if (w == d.size() - 1) {
      PolyS top = PolyS::one(r);
      for (int i = 1; i <= n_; ++i)
        for (int j = 1; i + j <= n_; ++j) top *= PolyS::variable(r, n_ + i - 1) - PolyS::variable(r, j - 1);
      slot.value.emplace(std::move(top));
      return;
    }
    int i = 0;
    while (d.is_right_descent(w, i)) ++i;
    const PolyS& f = schubert_at(d.right_mult_simple(w, i));
    // ∂_i f = (f - s_i f) / (z_i - z_{i+1})
    PolyS diff = f - weyl_subst(f, z_swap(n_, i), n_);
    slot.value.emplace(exact_div_linear(diff, -z_root(n_, i)));
  });
  return *slot.value;
}

const LaurentR& BorelPresentation::grothendieck_at(std::size_t w) const {
  SlotK& slot = grothendieck_[w];
  std::call_once(slot.once, [&] {
    const RootDatum& d = *datum_;
    const int r = 2 * n_;
    if (w == d.size() - 1) {
      LaurentR top = LaurentR::one(r);
      for (int i = 1; i <= n_; ++i)
        for (int j = 1; i + j <= n_; ++j)
          top *= one_minus_character(LinearForm::unit(r, j - 1) - LinearForm::unit(r, n_ + i - 1));
      slot.value.emplace(std::move(top));
      return;
    }
    int i = 0;
    while (d.is_right_descent(w, i)) ++i;
    const LaurentR& f = grothendieck_at(d.right_mult_simple(w, i));
    // π_i f = (f - x^{z_{i+1} - z_i} s_i f) / (1 - x^{z_{i+1} - z_i})
    const LinearForm a = z_root(n_, i);
    LaurentR num = f - a.to_character() * weyl_subst(f, z_swap(n_, i), n_);
    slot.value.emplace(exact_div_one_minus(num, a));
  });
  return *slot.value;
}

PolyS BorelPresentation::eval(const PolyS& p, const WeylElem& w) const {
  check_rank(p.rank());
  datum_->require(w);
  std::vector<PolyS> images;
  for (int j = 0; j < n_; ++j) images.push_back(PolyS::variable(n_, j));
  for (int i = 1; i <= n_; ++i) images.push_back(PolyS::variable(n_, w(i) - 1));
  return substitute(p, images);
}

LaurentR BorelPresentation::eval(const LaurentR& p, const WeylElem& w) const {
  check_rank(p.rank());
  datum_->require(w);
  std::vector<LinearForm> images;
  for (int j = 0; j < n_; ++j) images.push_back(LinearForm::unit(n_, j));
  for (int i = 1; i <= n_; ++i) images.push_back(LinearForm::unit(n_, w(i) - 1));
  return substitute_characters(p, images);
}

GkmClassS BorelPresentation::localize(const PolyS& p) const {
  std::vector<PolyS> values;
  for (const auto& w : datum_->elements()) values.push_back(eval(p, w));
  return GkmClassS(datum_, std::move(values));
}

GkmClassK BorelPresentation::localize(const LaurentR& p) const {
  std::vector<LaurentR> values;
  for (const auto& w : datum_->elements()) values.push_back(eval(p, w));
  return GkmClassK(datum_, std::move(values));
}

PolyS pullback_borel(const PolyS& p, const WeylElem& sigma) {
  if (p.rank() != 2 * sigma.size()) throw RankMismatch("Borel representatives need 2n variables");
  if (sigma.negative_count() != 0) throw UnsupportedType("pullback_borel needs a permutation");
  return weyl_subst(p, sigma, sigma.size());
}

LaurentR pullback_borel(const LaurentR& p, const WeylElem& sigma) {
  if (p.rank() != 2 * sigma.size()) throw RankMismatch("Borel representatives need 2n variables");
  if (sigma.negative_count() != 0) throw UnsupportedType("pullback_borel needs a permutation");
  return weyl_subst(p, sigma, sigma.size());
}

namespace {

template <class Ring, class Expand>
auto expand_via_borel(const PatternPullback& pb, const BorelPresentation& borel, const Ring& p, const WeylElem& sigma,
                      Expand expand) {
  const LeviDatum& L = pb.levi();
  if (&L.ambient() != &borel.datum()) throw InputError("Borel presentation and Levi datum use different groups");
  L.require_min_rep(sigma);
  const Ring pulled = pullback_borel(p, sigma);
  std::vector<Ring> values;
  for (const auto& w : L.sub().elements()) values.push_back(borel.eval(pulled, w));
  return expand(GkmClass<Ring>(L.sub_ptr(), std::move(values)));
}

}  // namespace

SchubertExpansionS expand_pullback_via_borel(const PatternPullback& pb, const BorelPresentation& borel, const PolyS& p,
                                             const WeylElem& sigma) {
  return expand_via_borel(pb, borel, p, sigma, [&](const GkmClassS& c) { return pb.sub_coh().expand(c); });
}

SchubertExpansionK expand_pullback_via_borel(const PatternPullback& pb, const BorelPresentation& borel,
                                             const LaurentR& p, const WeylElem& sigma) {
  return expand_via_borel(pb, borel, p, sigma, [&](const GkmClassK& c) { return pb.sub_k().expand(c); });
}

}  // namespace eqschubert
