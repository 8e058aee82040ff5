#include "eqschubert/io/json.hpp"

#include "eqschubert/error.hpp"
#include "eqschubert/symbolic/parse.hpp"

namespace eqschubert {

namespace {

template <class Poly>
Json terms_to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::array();
    for (int i = 0; i < p.rank(); ++i) exps.push_back(m[i]);
    terms.push_back(Json{{"exponents", exps}, {"coeff", c.get_str()}});
  }
  return Json{{"rank", p.rank()}, {"terms", terms}};
}

template <class Poly>
Poly terms_from_json(const Json& j) {
  using Coeff = typename Poly::coeff_type;
  try {
    const int rank = j.at("rank").get<int>();
    std::vector<typename Poly::Term> terms;
    for (const auto& t : j.at("terms")) {
      const auto& exps = t.at("exponents");
      if (static_cast<int>(exps.size()) != rank) throw ParseError("exponent vector has the wrong length");
      Monomial m{};
      for (int i = 0; i < rank; ++i) m[i] = static_cast<Exponent>(exps[i].get<int>());
      Coeff c;
      if (c.set_str(t.at("coeff").get<std::string>(), 10) != 0) throw ParseError("bad coefficient in JSON");
      if constexpr (!Poly::is_laurent) c.canonicalize();
      terms.emplace_back(m, c);
    }
    return Poly::from_terms(rank, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

void require_group(const Json& j, const DatumPtr& datum) {
  std::string label;
  try {
    label = j.at("group").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("missing group label: ") + e.what());
  }
  if (label != datum->label()) throw ParseError("JSON is for group " + label + ", expected " + datum->label());
}

VarNames ring_names(int rank, bool laurent) { return VarNames::torus_ring(rank, laurent ? 'x' : 't'); }

template <class Ring>
Json class_to_json(const GkmClass<Ring>& phi) {
  const RootDatum& d = phi.datum();
  Json values = Json::object();
  for (std::size_t w = 0; w < d.size(); ++w) values[d.element(w).to_string()] = phi[w].to_string();
  return Json{{"group", d.label()}, {"theory", Ring::is_laurent ? "K" : "coh"}, {"values", values}};
}

template <class Ring, class Parse>
GkmClass<Ring> class_from_json(const Json& j, const DatumPtr& datum, Parse parse) {
  require_group(j, datum);
  const VarNames names = ring_names(datum->rank(), Ring::is_laurent);
  std::vector<std::optional<Ring>> slots(datum->size());
  try {
    for (const auto& [key, value] : j.at("values").items()) {
      std::size_t idx = datum->index_of(WeylElem::parse(key));
      slots[idx] = parse(value.template get<std::string>(), names);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed class JSON: ") + e.what());
  }
  std::vector<Ring> values;
  for (std::size_t w = 0; w < slots.size(); ++w) {
    if (!slots[w]) throw ParseError("class JSON has no value at " + datum->element(w).to_string());
    values.push_back(std::move(*slots[w]));
  }
  return GkmClass<Ring>(datum, std::move(values));
}

template <class Ring>
Json exp_to_json(const SchubertExpansion<Ring>& e) {
  Json terms = Json::object();
  for (const auto& [w, c] : e.terms) terms[w.to_string()] = c.to_string();
  return Json{{"group", e.datum->label()}, {"terms", terms}};
}

template <class Ring, class Parse>
SchubertExpansion<Ring> exp_from_json(const Json& j, const DatumPtr& datum, Parse parse) {
  require_group(j, datum);
  const VarNames names = ring_names(datum->rank(), Ring::is_laurent);
  std::vector<std::pair<std::size_t, Ring>> found;
  try {
    for (const auto& [key, value] : j.at("terms").items())
      found.emplace_back(datum->index_of(WeylElem::parse(key)), parse(value.template get<std::string>(), names));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed expansion JSON: ") + e.what());
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SchubertExpansion<Ring> out{datum, {}};
  for (auto& [idx, c] : found)
    if (!c.is_zero()) out.terms.emplace_back(datum->element(idx), std::move(c));
  return out;
}

}  // namespace

Json poly_to_json(const PolyS& p) { return terms_to_json(p); }
Json poly_to_json(const LaurentR& p) { return terms_to_json(p); }
PolyS poly_from_json(const Json& j) { return terms_from_json<PolyS>(j); }
LaurentR laurent_from_json(const Json& j) { return terms_from_json<LaurentR>(j); }

Json gkm_to_json(const GkmClassS& phi) { return class_to_json(phi); }
Json gkm_to_json(const GkmClassK& psi) { return class_to_json(psi); }

GkmClassS gkm_from_json(const Json& j, const DatumPtr& datum) {
  return class_from_json<PolyS>(j, datum, [](const std::string& s, const VarNames& v) { return parse_poly(s, v); });
}

GkmClassK gkm_k_from_json(const Json& j, const DatumPtr& datum) {
  return class_from_json<LaurentR>(j, datum,
                                   [](const std::string& s, const VarNames& v) { return parse_laurent(s, v); });
}

Json expansion_to_json(const SchubertExpansionS& e) { return exp_to_json(e); }
Json expansion_to_json(const SchubertExpansionK& e) { return exp_to_json(e); }

SchubertExpansionS expansion_from_json(const Json& j, const DatumPtr& datum) {
  return exp_from_json<PolyS>(j, datum, [](const std::string& s, const VarNames& v) { return parse_poly(s, v); });
}

SchubertExpansionK expansion_k_from_json(const Json& j, const DatumPtr& datum) {
  return exp_from_json<LaurentR>(j, datum,
                                 [](const std::string& s, const VarNames& v) { return parse_laurent(s, v); });
}

}  // namespace eqschubert
