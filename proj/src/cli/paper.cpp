#include "eqschubert/cli/paper.hpp"

#include <algorithm>
#include <set>

#include "eqschubert/borel/borel.hpp"
#include "eqschubert/error.hpp"
#include "eqschubert/pattern/pullback.hpp"
#include "eqschubert/symbolic/parse.hpp"

namespace eqschubert::cli {

namespace {

constexpr const char* kFixtures = R"json({
  "version": 1,
  "fixtures": [
    {"id": "fig3.S2143", "group": "A3", "kind": "class", "rank": 4,
     "note": "the figure labels 1432 as a second 2341; its value there is 0",
     "expected": {
       "1234": "0", "2134": "0", "1324": "0", "1243": "0",
       "3124": "0", "2314": "0", "2143": "a12*a34", "1423": "0", "1342": "0",
       "4123": "a14*a34", "3214": "0", "3142": "a13*a24", "2413": "a12*a34", "2341": "a12*a14", "1432": "0",
       "4213": "a14*a34", "4132": "a14*a24", "3412": "a13*a24", "3241": "a13*a14", "2431": "a12*a14",
       "4312": "a14*a24", "4231": "a14^2", "3421": "a13*a14",
       "4321": "a14^2"}},

    {"id": "ex5.2.product.2143x1324", "group": "A3", "kind": "expansion", "rank": 4,
     "expected": {"2413": "1", "4123": "1", "3142": "1", "2341": "1"}},
    {"id": "ex5.2.product.2143x1342", "group": "A3", "kind": "expansion", "rank": 4,
     "expected": {"2341": "a14", "3142": "a24", "3241": "1"}},
    {"id": "ex5.2.product.2143x3412", "group": "A3", "kind": "expansion", "rank": 4,
     "expected": {"3412": "a13*a24", "3421": "a13", "4312": "a24", "4321": "1"}},

    {"id": "ex5.2.diamond.1342", "group": "A1xA1", "kind": "class", "rank": 4,
     "expected": {"1234": "0", "2134": "a12*a14", "1243": "0", "2143": "a12*a14"}},
    {"id": "ex5.2.diamond.3412", "group": "A1xA1", "kind": "class", "rank": 4,
     "expected": {"1234": "a13*a24", "2134": "a13*a14", "1243": "a14*a24", "2143": "a14^2"}},

    {"id": "ex5.2.pullback.1324.localization", "group": "A1xA1", "kind": "expansion", "rank": 4,
     "expected": {"2143": "1"}},
    {"id": "ex5.2.pullback.1324.schubert", "group": "A1xA1", "kind": "expansion", "rank": 4,
     "expected": {"2143": "1"}},
    {"id": "ex5.2.pullback.1324.borel", "group": "A1xA1", "kind": "expansion", "rank": 4,
     "expected": {"2143": "1"}},
    {"id": "ex5.2.pullback.1342.localization", "group": "A1xA1", "kind": "expansion", "rank": 4,
     "expected": {"2134": "a14"}},
    {"id": "ex5.2.pullback.1342.schubert", "group": "A1xA1", "kind": "expansion", "rank": 4,
     "expected": {"2134": "a14"}},
    {"id": "ex5.2.pullback.1342.borel", "group": "A1xA1", "kind": "expansion", "rank": 4,
     "note": "the Borel display names the class S_2134; the polynomial pulled back is S_2143",
     "expected": {"2134": "a14"}},
    {"id": "ex5.2.pullback.3412.localization", "group": "A1xA1", "kind": "expansion", "rank": 4,
     "note": "the displayed sum prints a12*a24 for the first coefficient; the diamond and the Borel computation give a13*a24",
     "expected": {"1234": "a13*a24", "2134": "a13", "1243": "a24", "2143": "1"}},
    {"id": "ex5.2.pullback.3412.schubert", "group": "A1xA1", "kind": "expansion", "rank": 4,
     "expected": {"1234": "a13*a24", "2134": "a13", "1243": "a24", "2143": "1"}},
    {"id": "ex5.2.pullback.3412.borel", "group": "A1xA1", "kind": "expansion", "rank": 4,
     "expected": {"1234": "a13*a24", "2134": "a13", "1243": "a24", "2143": "1"}},

    {"id": "ex5.2.borel.S2143", "group": "A3", "kind": "borel_poly", "rank": 4,
     "expected": "(z1-t1)*(z1+z2+z3-t1-t2-t3)"},

    {"id": "ex5.1.length.3,-1,4,2", "group": "C4", "kind": "integer", "rank": 4, "expected": 4},
    {"id": "ex5.1.length.-2,-3,4,1", "group": "C4", "kind": "integer", "rank": 4, "expected": 7},
    {"id": "ex5.1.length.-2,-1,3,4", "group": "C4", "kind": "integer", "rank": 4, "expected": 3},

    {"id": "ex5.1.product", "group": "C4", "kind": "expansion", "rank": 4,
     "expected": {
       "-3,-1,4,2": "2*(t1^2+t1*t3)", "-1,-3,4,2": "2*(t1+t3)", "-4,-1,3,2": "2*t1",
       "-3,-2,4,1": "2*(t1+t2+t3)", "3,-2,4,-1": "2*(t1+t2)", "-3,-2,4,-1": "1",
       "2,-3,4,-1": "2", "-4,-3,1,2": "2", "-2,-3,4,1": "2", "-1,-4,3,2": "2", "-4,-2,3,1": "2"}},
    {"id": "ex5.1.pullback.localization", "group": "A3", "kind": "expansion", "rank": 4,
     "expected": {
       "1342": "2*(t1^2+t1*t3)", "3142": "2*(t1+t3)", "1432": "2*t1", "2341": "2*(t1+t2+t3)",
       "3412": "2", "3241": "2", "4132": "2", "2431": "2"}},
    {"id": "ex5.1.pullback.schubert", "group": "A3", "kind": "expansion", "rank": 4,
     "expected": {
       "1342": "2*(t1^2+t1*t3)", "3142": "2*(t1+t3)", "1432": "2*t1", "2341": "2*(t1+t2+t3)",
       "3412": "2", "3241": "2", "4132": "2", "2431": "2"}},

    {"id": "ex3.3.min_reps", "group": "A3", "kind": "elements", "rank": 4,
     "expected": ["1234", "1324", "3124", "1342", "3142", "3412"]},
    {"id": "ex5.1.cosets.count", "group": "C4", "kind": "integer", "rank": 4, "expected": 16},
    {"id": "ex5.1.coset.{1,2}", "group": "C4", "kind": "element", "rank": 4, "expected": "-2,-1,3,4"},
    {"id": "ex5.1.coset.{2,4}", "group": "C4", "kind": "element", "rank": 4, "expected": "3,-2,4,-1"},
    {"id": "ex5.1.coset.{3}", "group": "C4", "kind": "element", "rank": 4, "expected": "2,3,-1,4"},
    {"id": "ex5.1.coset.{1,3,4}", "group": "C4", "kind": "element", "rank": 4, "expected": "-3,4,-2,-1"}
  ]
})json";

template <class Ring>
Json values_json(const GkmClass<Ring>& c) {
  Json out = Json::object();
  for (std::size_t w = 0; w < c.size(); ++w) out[c.datum().element(w).to_string()] = c[w].to_string();
  return out;
}

template <class Ring>
Json terms_json(const SchubertExpansion<Ring>& e) {
  Json out = Json::object();
  for (const auto& [w, c] : e.terms) out[w.to_string()] = c.to_string();
  return out;
}

std::string negative_positions(const WeylElem& w) {
  std::string s = "{";
  for (int i = 1; i <= w.size(); ++i)
    if (w(i) < 0) s += (s.size() > 1 ? "," : "") + std::to_string(i);
  return s + "}";
}

PolyS parse_value(const Json& v, const VarNames& names) {
  if (v.is_number_integer()) return PolyS::constant(names.rank(), Rational(v.get<long>()));
  if (!v.is_string()) throw ParseError("fixture value is neither a string nor an integer");
  return parse_poly(v.get<std::string>(), names);
}

std::string render(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, x] : v.items()) s += (s.empty() ? "" : ", ") + k + ": " + render(x);
    return "{" + s + "}";
  }
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ", ") + render(x);
    return "[" + s + "]";
  }
  return v.dump();
}

// Compares window-keyed maps of polynomials; missing keys count as 0.
std::string compare_maps(const Json& expected, const Json& computed, const VarNames& names) {
  if (!expected.is_object() || !computed.is_object()) return "expected a map of values";
  std::map<WeylElem, std::pair<Json, Json>> merged;
  for (const auto& [k, v] : expected.items()) merged[WeylElem::parse(k)].first = v;
  for (const auto& [k, v] : computed.items()) merged[WeylElem::parse(k)].second = v;
  for (const auto& [w, pair] : merged) {
    PolyS e = pair.first.is_null() ? PolyS(names.rank()) : parse_value(pair.first, names);
    PolyS c = pair.second.is_null() ? PolyS(names.rank()) : parse_value(pair.second, names);
    if (e != c)
      return "at " + w.to_string() + ": expected " + (pair.first.is_null() ? "0" : render(pair.first)) +
             ", computed " + (pair.second.is_null() ? "0" : render(pair.second));
  }
  return "";
}

std::string compare_one(const Fixture& f, const Json& computed) {
  const VarNames torus = VarNames::torus_ring(f.rank, 't');
  if (f.kind == "class" || f.kind == "expansion") return compare_maps(f.expected, computed, torus);
  if (f.kind == "poly" || f.kind == "borel_poly") {
    const VarNames names = f.kind == "poly" ? torus : VarNames::borel(f.rank);
    if (parse_value(f.expected, names) != parse_value(computed, names))
      return "expected " + render(f.expected) + ", computed " + render(computed);
    return "";
  }
  if (f.kind == "integer") {
    if (!f.expected.is_number_integer() || f.expected != computed)
      return "expected " + f.expected.dump() + ", computed " + computed.dump();
    return "";
  }
  if (f.kind == "element") {
    if (WeylElem::parse(f.expected.get<std::string>()) != WeylElem::parse(computed.get<std::string>()))
      return "expected " + render(f.expected) + ", computed " + render(computed);
    return "";
  }
  if (f.kind == "elements") {
    std::set<WeylElem> e;
    std::set<WeylElem> c;
    for (const auto& x : f.expected) e.insert(WeylElem::parse(x.get<std::string>()));
    for (const auto& x : computed) c.insert(WeylElem::parse(x.get<std::string>()));
    if (e != c) return "expected " + render(f.expected) + ", computed " + render(computed);
    return "";
  }
  return "unknown fixture kind '" + f.kind + "'";
}

}  // namespace

std::vector<Fixture> fixtures_from_json(const Json& j) {
  std::vector<Fixture> out;
  try {
    for (const auto& f : j.at("fixtures")) {
      Fixture x;
      x.id = f.at("id").get<std::string>();
      x.group = f.at("group").get<std::string>();
      x.kind = f.at("kind").get<std::string>();
      x.rank = f.at("rank").get<int>();
      x.expected = f.at("expected");
      if (f.contains("note")) x.note = f.at("note").get<std::string>();
      out.push_back(std::move(x));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed fixture file: ") + e.what());
  }
  return out;
}

Json fixtures_to_json(const std::vector<Fixture>& fixtures) {
  Json list = Json::array();
  for (const auto& f : fixtures) {
    Json x{{"id", f.id}, {"group", f.group}, {"kind", f.kind}, {"rank", f.rank}};
    if (!f.note.empty()) x["note"] = f.note;
    x["expected"] = f.expected;
    list.push_back(std::move(x));
  }
  return Json{{"version", 1}, {"fixtures", list}};
}

std::vector<Fixture> default_fixtures() { return fixtures_from_json(Json::parse(kFixtures)); }

std::map<std::string, Json> compute_paper_values() {
  std::map<std::string, Json> out;
  auto elem = [](const char* s) { return WeylElem::parse(s); };

  {
    DatumPtr A3 = RootDatum::parse("A3");
    auto L = LeviDatum::from_cocharacter(A3, {1, 1, -1, -1});
    PatternPullback pb(L);
    BorelPresentation borel(A3);
    const SchubertCohomology& coh = pb.ambient_coh();
    const WeylElem u = elem("2143");

    out["fig3.S2143"] = values_json(coh.schubert(u));
    for (const char* v : {"1324", "1342", "3412"})
      out[std::string("ex5.2.product.2143x") + v] = terms_json(coh.structure_constants(u, elem(v)));
    for (const char* s : {"1342", "3412"})
      out[std::string("ex5.2.diamond.") + s] = values_json(pullback_localized(*L, coh.schubert(u), elem(s)));
    for (const char* s : {"1324", "1342", "3412"}) {
      const std::string base = std::string("ex5.2.pullback.") + s;
      out[base + ".localization"] = terms_json(pb.coh_by_localization(u, elem(s)));
      out[base + ".schubert"] = terms_json(pb.coh_by_structure_constants(u, elem(s)));
      out[base + ".borel"] = terms_json(expand_pullback_via_borel(pb, borel, borel.double_schubert(u), elem(s)));
    }
    out["ex5.2.borel.S2143"] = borel.double_schubert(u).to_string(borel.names().namer());

    Json reps = Json::array();
    for (const auto& r : L->min_coset_reps()) reps.push_back(r.to_string());
    out["ex3.3.min_reps"] = reps;
  }

  {
    DatumPtr C4 = RootDatum::parse("C4");
    for (const char* w : {"3,-1,4,2", "-2,-3,4,1", "-2,-1,3,4"})
      out[std::string("ex5.1.length.") + w] = C4->length(elem(w));
    auto L = LeviDatum::from_cocharacter(C4, {1, 1, 1, 1});
    PatternPullback pb(L);
    const WeylElem u = elem("3,-1,4,2");
    const WeylElem sigma = elem("-2,-1,3,4");
    out["ex5.1.product"] = terms_json(pb.ambient_coh().structure_constants(u, sigma));
    out["ex5.1.pullback.localization"] = terms_json(pb.coh_by_localization(u, sigma));
    out["ex5.1.pullback.schubert"] = terms_json(pb.coh_by_structure_constants(u, sigma));
    out["ex5.1.cosets.count"] = L->num_cosets();
    for (const auto& r : L->min_coset_reps()) out["ex5.1.coset." + negative_positions(r)] = r.to_string();
  }
  return out;
}

std::vector<ComparisonRow> compare(const std::vector<Fixture>& fixtures, const std::map<std::string, Json>& computed) {
  std::vector<ComparisonRow> rows;
  for (const auto& f : fixtures) {
    ComparisonRow row;
    row.fixture = &f;
    auto it = computed.find(f.id);
    if (it == computed.end()) {
      row.detail = "no computed value for this fixture";
    } else {
      row.computed = it->second;
      try {
        row.detail = compare_one(f, it->second);
      } catch (const Error& e) {
        row.detail = e.what();
      } catch (const nlohmann::json::exception& e) {
        row.detail = e.what();
      }
      row.ok = row.detail.empty();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace eqschubert::cli
