#include "eqschubert/gkm/gkm_class.hpp"

namespace eqschubert {

namespace {

template <class Ring, class Divides>
std::optional<GkmViolation> check_edges(const GkmClass<Ring>& phi, Divides divides) {
  const RootDatum& d = phi.datum();
  for (const auto& alpha : d.positive_roots()) {
    const WeylElem s = d.reflection(alpha);
    for (std::size_t u = 0; u < d.size(); ++u) {
      std::size_t su = d.index_of(s * d.element(u));
      if (su < u) continue;  // each edge once
      if (!divides(phi[u] - phi[su], alpha)) return GkmViolation{d.element(u), alpha};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<GkmViolation> check_gkm_coh(const GkmClassS& phi) {
  return check_edges(phi, [](const PolyS& diff, const LinearForm& a) { return try_div_linear(diff, a).has_value(); });
}

std::optional<GkmViolation> check_gkm_K(const GkmClassK& psi) {
  return check_edges(psi,
                     [](const LaurentR& diff, const LinearForm& a) { return try_div_one_minus(diff, a).has_value(); });
}

}  // namespace eqschubert
