#include "eqschubert/gkm/ktheory.hpp"

#include "eqschubert/error.hpp"

namespace eqschubert {

GkmClassK demazure_pointwise(const GkmClassK& psi, int i) {
  const RootDatum& d = psi.datum();
  if (i < 0 || i >= d.num_simple()) throw InputError("simple index " + std::to_string(i) + " out of range");
  const LinearForm& alpha = d.simple_roots()[i];
  std::vector<LaurentR> values;
  values.reserve(d.size());
  for (std::size_t u = 0; u < d.size(); ++u) {
    const LinearForm a = d.element(u).act(alpha);
    LaurentR num = psi[u] - a.to_character() * psi[d.right_mult_simple(u, i)];
    values.push_back(exact_div_one_minus(num, a));
  }
  return GkmClassK(psi.datum_ptr(), std::move(values));
}

KTheorySchubert::KTheorySchubert(DatumPtr datum)
    : datum_(std::move(datum)), sheaf_(new Slot[datum_->size()]), opposite_(new Slot[datum_->size()]) {
  const RootDatum& d = *datum_;
  weights_.reserve(d.size());
  for (std::size_t w = 0; w < d.size(); ++w) {
    LinearForm mu = LinearForm::zero(d.rank());
    for (const auto& alpha : d.positive_roots()) {
      LinearForm image = d.element(w).act(alpha);
      if (!image.is_positive()) mu = mu + image;
    }
    LaurentR weight = (-mu).to_character();
    if (d.length(w) % 2 != 0) weight = -weight;
    weights_.push_back(std::move(weight));
  }
}

const GkmClassK& KTheorySchubert::structure_sheaf(std::size_t v) const {
  Slot& slot = sheaf_[v];
  std::call_once(slot.once, [&] {
    const RootDatum& d = *datum_;
    const std::size_t top = d.size() - 1;
    if (v == top) {
      LaurentR value = LaurentR::one(d.rank());
      for (const auto& alpha : d.positive_roots()) value *= one_minus_character(-alpha);
      GkmClassK cls = GkmClassK::zero(datum_);
      cls[top] = std::move(value);
      slot.value.emplace(std::move(cls));
      return;
    }
    int i = 0;
    while (d.is_right_descent(v, i)) ++i;
    slot.value.emplace(demazure_pointwise(structure_sheaf(d.right_mult_simple(v, i)), i));
  });
  return *slot.value;
}

const GkmClassK& KTheorySchubert::opposite(std::size_t w) const {
  Slot& slot = opposite_[w];
  std::call_once(slot.once, [&] {
    const RootDatum& d = *datum_;
    const WeylElem& w0 = d.longest_element();
    const GkmClassK& base = structure_sheaf(w0 * d.element(w));
    std::vector<LaurentR> values;
    values.reserve(d.size());
    for (std::size_t x = 0; x < d.size(); ++x) values.push_back(weyl_subst(base.at(w0 * d.element(x)), w0));
    slot.value.emplace(datum_, std::move(values));
  });
  return *slot.value;
}

GkmClassK KTheorySchubert::ideal_sheaf(const WeylElem& w) const {
  const RootDatum& d = *datum_;
  const std::size_t wi = d.index_of(w);
  GkmClassK out = GkmClassK::zero(datum_);
  for (std::size_t v = 0; v <= wi; ++v) {
    if (!d.bruhat_leq(v, wi)) continue;
    if ((d.length(wi) - d.length(v)) % 2 == 0)
      out += opposite(v);
    else
      out -= opposite(v);
  }
  return out;
}

std::vector<LinearForm> KTheorySchubert::diagonal_factors(std::size_t x) const {
  return datum_->inversion_roots(datum_->element(x));
}

SchubertExpansionK KTheorySchubert::expand(const GkmClassK& psi) const {
  const RootDatum& d = *datum_;
  if (&psi.datum() != &d) throw InputError("class belongs to a different group");
  std::vector<LaurentR> residual(psi.values().begin(), psi.values().end());
  SchubertExpansionK out{datum_, {}};
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (residual[x].is_zero()) continue;
    LaurentR c = residual[x];
    for (const auto& beta : diagonal_factors(x)) {
      auto q = try_div_one_minus(c, -beta);
      if (!q)
        throw NotInSpan("value at " + d.element(x).to_string() + " is not divisible by 1 - x^(" +
                        (-beta).to_string() + ")");
      c = std::move(*q);
    }
    const GkmClassK& s = structure_sheaf(x);
    for (std::size_t w = x; w < d.size(); ++w)
      if (!s[w].is_zero()) residual[w] -= c * s[w];
    out.terms.emplace_back(d.element(x), std::move(c));
  }
  return out;
}

SchubertExpansionK KTheorySchubert::structure_constants(const WeylElem& u, const WeylElem& v) const {
  return expand(structure_sheaf(u) * structure_sheaf(v));
}

SchubertExpansionK KTheorySchubert::structure_constants_by_integration(const WeylElem& u,
                                                                       const WeylElem& v) const {
  const RootDatum& d = *datum_;
  const GkmClassK product = structure_sheaf(u) * structure_sheaf(v);
  SchubertExpansionK out{datum_, {}};
  for (std::size_t w = 0; w < d.size(); ++w) {
    LaurentR c = integrate(product * ideal_sheaf(d.element(w)));
    if (!c.is_zero()) out.terms.emplace_back(d.element(w), std::move(c));
  }
  return out;
}

// Σ_w ψ(w)/∏_{α>0}(1 - x^{w.α}) = Σ_w (-1)^{ℓ(w)} x^{-μ_w} ψ(w) / ∏_{α>0}(1 - x^α),
// with μ_w the sum of the negative roots among the w.α.
LaurentR KTheorySchubert::integrate(const GkmClassK& psi) const {
  const RootDatum& d = *datum_;
  LaurentR num(d.rank());
  for (std::size_t w = 0; w < d.size(); ++w)
    if (!psi[w].is_zero()) num += weights_[w] * psi[w];
  for (const auto& alpha : d.positive_roots()) {
    auto q = try_div_one_minus(num, alpha);
    if (!q) throw NonIntegralResult("localization sum is not divisible by 1 - x^(" + alpha.to_string() + ")");
    num = std::move(*q);
  }
  return num;
}

}  // namespace eqschubert
