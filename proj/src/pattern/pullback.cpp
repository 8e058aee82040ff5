#include "eqschubert/pattern/pullback.hpp"

#include <algorithm>

#include "eqschubert/error.hpp"

namespace eqschubert {

namespace {

template <class Ring>
GkmClass<Ring> restrict_to_coset(const LeviDatum& L, const GkmClass<Ring>& phi, const WeylElem& sigma) {
  if (&phi.datum() != &L.ambient()) throw InputError("class does not live on the ambient group");
  L.require_min_rep(sigma);
  std::vector<Ring> values;
  values.reserve(L.sub().size());
  for (const auto& w : L.sub().elements()) values.push_back(phi.at(w * sigma));
  return GkmClass<Ring>(L.sub_ptr(), std::move(values));
}

template <class Ring>
void require_equal(const SchubertExpansion<Ring>& a, const SchubertExpansion<Ring>& b, const WeylElem& u,
                   const WeylElem& sigma) {
  if (a.terms == b.terms) return;
  throw CrossCheckFailure("pullback of " + u.to_string() + " along " + sigma.to_string() +
                          " differs between routes: " + expansion_to_string(a) + " vs " + expansion_to_string(b));
}

}  // namespace

GkmClassS pullback_localized(const LeviDatum& L, const GkmClassS& phi, const WeylElem& sigma) {
  return restrict_to_coset(L, phi, sigma);
}

GkmClassK pullback_localized(const LeviDatum& L, const GkmClassK& psi, const WeylElem& sigma) {
  return restrict_to_coset(L, psi, sigma);
}

PatternPullback::PatternPullback(LeviPtr levi)
    : levi_(std::move(levi)),
      ambient_coh_(levi_->ambient_ptr()),
      sub_coh_(levi_->sub_ptr()),
      ambient_k_(levi_->ambient_ptr()),
      sub_k_(levi_->sub_ptr()) {}

template <class Ring>
SchubertExpansion<Ring> PatternPullback::filter(const SchubertExpansion<Ring>& product, const WeylElem& sigma) const {
  const RootDatum& sub = levi_->sub();
  const WeylElem sigma_inv = sigma.inverse();
  std::vector<std::pair<std::size_t, Ring>> kept;
  for (const auto& [y, c] : product.terms) {
    WeylElem w = y * sigma_inv;
    if (auto idx = sub.find(w)) kept.emplace_back(*idx, c);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SchubertExpansion<Ring> out{levi_->sub_ptr(), {}};
  for (auto& [idx, c] : kept) out.terms.emplace_back(sub.element(idx), std::move(c));
  return out;
}

void PatternPullback::require_standard() const {
  if (!levi_->is_standard())
    throw NonStandardLevi("the structure-constant route needs the simple roots of the Levi (" + levi_->type_label() +
                          ") to be simple roots of " + levi_->ambient().label());
}

SchubertExpansionS PatternPullback::coh_by_structure_constants(const WeylElem& u, const WeylElem& sigma) const {
  require_standard();
  levi_->require_min_rep(sigma);
  return filter(ambient_coh_.structure_constants(u, sigma), sigma);
}

SchubertExpansionS PatternPullback::coh_by_localization(const WeylElem& u, const WeylElem& sigma) const {
  return sub_coh_.expand(pullback_localized(*levi_, ambient_coh_.schubert(u), sigma));
}

SchubertExpansionK PatternPullback::k_by_structure_constants(const WeylElem& u, const WeylElem& sigma) const {
  require_standard();
  levi_->require_min_rep(sigma);
  return filter(ambient_k_.structure_constants(u, sigma), sigma);
}

SchubertExpansionK PatternPullback::k_by_localization(const WeylElem& u, const WeylElem& sigma) const {
  return sub_k_.expand(pullback_localized(*levi_, ambient_k_.structure_sheaf(u), sigma));
}

SchubertExpansionS PatternPullback::coh_by_duality(const WeylElem& u, const WeylElem& sigma) const {
  const GkmClassS pulled = pullback_localized(*levi_, ambient_coh_.schubert(u), sigma);
  SchubertExpansionS out{levi_->sub_ptr(), {}};
  for (std::size_t w = 0; w < levi_->sub().size(); ++w) {
    PolyS c = sub_coh_.integrate(pulled * sub_coh_.opposite(w));
    if (!c.is_zero()) out.terms.emplace_back(levi_->sub().element(w), std::move(c));
  }
  return out;
}

SchubertExpansionK PatternPullback::k_by_duality(const WeylElem& u, const WeylElem& sigma) const {
  const GkmClassK pulled = pullback_localized(*levi_, ambient_k_.structure_sheaf(u), sigma);
  SchubertExpansionK out{levi_->sub_ptr(), {}};
  for (const auto& w : levi_->sub().elements()) {
    LaurentR c = sub_k_.integrate(pulled * sub_k_.ideal_sheaf(w));
    if (!c.is_zero()) out.terms.emplace_back(w, std::move(c));
  }
  return out;
}

SchubertExpansionS PatternPullback::schubert_coh(const WeylElem& u, const WeylElem& sigma, CheckMode mode) const {
  SchubertExpansionS local = coh_by_localization(u, sigma);
  if (mode == CheckMode::kChecked)
    require_equal(levi_->is_standard() ? coh_by_structure_constants(u, sigma) : coh_by_duality(u, sigma), local, u,
                  sigma);
  return local;
}

SchubertExpansionK PatternPullback::schubert_K(const WeylElem& u, const WeylElem& sigma, CheckMode mode) const {
  SchubertExpansionK local = k_by_localization(u, sigma);
  if (mode == CheckMode::kChecked)
    require_equal(levi_->is_standard() ? k_by_structure_constants(u, sigma) : k_by_duality(u, sigma), local, u, sigma);
  return local;
}

template <class Ring>
std::string expansion_to_string(const SchubertExpansion<Ring>& e, const char* basis) {
  if (e.terms.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : e.terms) {
    if (!out.empty()) out += " + ";
    std::string coeff = c.to_string();
    const std::string cls = std::string(basis) + "[" + w.to_string() + "]";
    if (coeff == "1") {
      out += cls;
    } else if (c.size() > 1) {
      out += "(" + coeff + ")*" + cls;
    } else {
      out += coeff + "*" + cls;
    }
  }
  return out;
}

template std::string expansion_to_string(const SchubertExpansionS&, const char*);
template std::string expansion_to_string(const SchubertExpansionK&, const char*);

}  // namespace eqschubert
