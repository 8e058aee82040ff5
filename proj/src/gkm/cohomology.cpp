#include "eqschubert/gkm/cohomology.hpp"

#include "eqschubert/error.hpp"

namespace eqschubert {

SchubertCohomology::SchubertCohomology(DatumPtr datum, WordOrder order)
    : datum_(std::move(datum)),
      order_(order),
      first_letter_(datum_->size(), -1),
      schubert_(new Slot[datum_->size()]),
      opposite_(new Slot[datum_->size()]) {
  const int r = datum_->num_simple();
  for (std::size_t w = 1; w < datum_->size(); ++w) {
    for (int k = 0; k < r; ++k) {
      int i = order_ == WordOrder::kLexMin ? k : r - 1 - k;
      if (datum_->is_left_descent(w, i)) {
        first_letter_[w] = i;
        break;
      }
    }
  }
}

// With b the first letter of the word of w and w' = s_b w, the word of w is b
// followed by the word of w'. Splitting the subwords on whether they use the
// first letter gives
//   𝔖_v(w) = s_b.𝔖_v(w') + [s_b v < v] α_b · s_b.𝔖_{s_b v}(w').
const GkmClassS& SchubertCohomology::schubert(std::size_t v) const {
  Slot& slot = schubert_[v];
  std::call_once(slot.once, [&] {
    const RootDatum& d = *datum_;
    const int n = d.rank();
    std::vector<PolyS> values(d.size(), PolyS(n));
    values[0] = v == 0 ? PolyS::one(n) : PolyS(n);
    for (std::size_t w = 1; w < d.size(); ++w) {
      const int b = first_letter_[w];
      const std::size_t wp = d.left_mult_simple(w, b);
      const WeylElem& s = d.simple_reflection(b);
      PolyS value = weyl_subst(values[wp], s);
      const std::size_t sv = d.left_mult_simple(v, b);
      if (d.length(sv) < d.length(v)) {
        const PolyS& lower = schubert(sv)[wp];
        if (!lower.is_zero()) value += d.simple_roots()[b].to_poly() * weyl_subst(lower, s);
      }
      values[w] = std::move(value);
    }
    slot.value.emplace(datum_, std::move(values));
  });
  return *slot.value;
}

const GkmClassS& SchubertCohomology::opposite(std::size_t w) const {
  Slot& slot = opposite_[w];
  std::call_once(slot.once, [&] {
    const RootDatum& d = *datum_;
    const WeylElem& w0 = d.longest_element();
    const GkmClassS& base = schubert(w0 * d.element(w));
    std::vector<PolyS> values;
    values.reserve(d.size());
    for (std::size_t x = 0; x < d.size(); ++x) values.push_back(weyl_subst(base.at(w0 * d.element(x)), w0));
    slot.value.emplace(datum_, std::move(values));
  });
  return *slot.value;
}

PolyS SchubertCohomology::diagonal(std::size_t x) const {
  PolyS p = PolyS::one(datum_->rank());
  for (const auto& beta : datum_->inversion_roots(datum_->element(x))) p *= beta.to_poly();
  return p;
}

SchubertExpansionS SchubertCohomology::expand(const GkmClassS& phi) const {
  const RootDatum& d = *datum_;
  if (&phi.datum() != &d) throw InputError("class belongs to a different group");
  std::vector<PolyS> residual(phi.values().begin(), phi.values().end());
  SchubertExpansionS out{datum_, {}};
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (residual[x].is_zero()) continue;
    PolyS c = residual[x];
    for (const auto& beta : d.inversion_roots(d.element(x))) {
      auto q = try_div_linear(c, beta);
      if (!q)
        throw NotInSpan("value at " + d.element(x).to_string() + " is not divisible by " + beta.to_string());
      c = std::move(*q);
    }
    const GkmClassS& s = schubert(x);
    for (std::size_t w = x; w < d.size(); ++w)
      if (!s[w].is_zero()) residual[w] -= c * s[w];
    out.terms.emplace_back(d.element(x), std::move(c));
  }
  return out;
}

SchubertExpansionS SchubertCohomology::structure_constants(const WeylElem& u, const WeylElem& v) const {
  return expand(schubert(u) * schubert(v));
}

SchubertExpansionS SchubertCohomology::structure_constants_by_integration(const WeylElem& u,
                                                                          const WeylElem& v) const {
  const RootDatum& d = *datum_;
  const GkmClassS product = schubert(u) * schubert(v);
  SchubertExpansionS out{datum_, {}};
  for (std::size_t w = 0; w < d.size(); ++w) {
    PolyS c = integrate(product * opposite(w));
    if (!c.is_zero()) out.terms.emplace_back(d.element(w), std::move(c));
  }
  return out;
}

// Σ_w φ(w)/∏_{α>0} w.α. Since ∏ w.α = (-1)^{ℓ(w)} ∏ α, the numerator is the
// signed sum, divided once by each positive root; the factor (-1)^N makes
// the point class at w0 integrate to 1.
PolyS SchubertCohomology::integrate(const GkmClassS& phi) const {
  const RootDatum& d = *datum_;
  PolyS num(d.rank());
  for (std::size_t w = 0; w < d.size(); ++w) {
    if (d.length(w) % 2 == 0)
      num += phi[w];
    else
      num -= phi[w];
  }
  for (const auto& alpha : d.positive_roots()) {
    auto q = try_div_linear(num, alpha);
    if (!q) throw NonPolynomialResult("localization sum is not divisible by " + alpha.to_string());
    num = std::move(*q);
  }
  if (d.positive_roots().size() % 2 != 0) num = -num;
  return num;
}

GkmClassS billey_localize(const DatumPtr& datum, const WeylElem& v, WordOrder order) {
  SchubertCohomology coh(datum, order);
  return coh.schubert(v);
}

}  // namespace eqschubert
