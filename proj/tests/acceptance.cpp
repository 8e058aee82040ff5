// Acceptance gate: one PASS/FAIL line per criterion. All comparisons are exact.
#include <chrono>
#include <filesystem>
#include <fstream>
#include <algorithm>
#include <functional>
#include <map>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eqschubert/borel/borel.hpp"
#include "eqschubert/cli/commands.hpp"
#include "eqschubert/cli/paper.hpp"
#include "eqschubert/error.hpp"
#include "eqschubert/gkm/positivity.hpp"
#include "eqschubert/pattern/pullback.hpp"
#include "eqschubert/symbolic/parse.hpp"

using namespace eqschubert;

namespace {

// Exact arithmetic throughout: no numeric tolerance applies.
constexpr int kTolerance = 0;
constexpr double kC4SecondsLimit = 60.0;

WeylElem E(const char* s) { return WeylElem::parse(s); }
PolyS T(const std::string& s) { return parse_poly(s, VarNames::torus_ring(4, 't')); }

struct Check {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

using Terms = std::map<std::string, std::string>;

// Term-for-term comparison against a table written in aIJ shorthand.
Check same_terms(const SchubertExpansionS& e, const Terms& expected, const std::string& label) {
  Check c;
  c.expect(e.terms.size() == expected.size(), label + ": term count " + std::to_string(e.terms.size()));
  for (const auto& [w, coeff] : expected)
    c.expect(e.coefficient(E(w.c_str())) == T(coeff), label + ": coefficient of " + w);
  return c;
}

int cli_code(std::vector<std::string> args, std::string* out_text = nullptr) {
  args.insert(args.begin(), "eqschubert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

Json corrupt(const cli::Fixture& f) {
  Json e = f.expected;
  if (f.kind == "class" || f.kind == "expansion") {
    auto it = e.begin();
    it.value() = "(" + it.value().get<std::string>() + ") + 1";
  } else if (f.kind == "poly" || f.kind == "borel_poly") {
    e = "(" + e.get<std::string>() + ") + 1";
  } else if (f.kind == "integer") {
    e = e.get<int>() + 1;
  } else if (f.kind == "element") {
    e = WeylElem::identity(f.rank).to_string();
  } else {
    e.erase(e.begin());
  }
  return e;
}

const Terms kFig3 = {
    {"1234", "0"},       {"2134", "0"},       {"1324", "0"},       {"1243", "0"},       {"3124", "0"},
    {"2314", "0"},       {"2143", "a12*a34"}, {"1423", "0"},       {"1342", "0"},       {"4123", "a14*a34"},
    {"3214", "0"},       {"3142", "a13*a24"}, {"2413", "a12*a34"}, {"2341", "a12*a14"}, {"1432", "0"},
    {"4213", "a14*a34"}, {"4132", "a14*a24"}, {"3412", "a13*a24"}, {"3241", "a13*a14"}, {"2431", "a12*a14"},
    {"4312", "a14*a24"}, {"4231", "a14^2"},   {"3421", "a13*a14"}, {"4321", "a14^2"}};

Check criterion1() {
  auto A3 = RootDatum::parse("A3");
  GkmClassS s = billey_localize(A3, E("2143"));
  Check c;
  for (const auto& [w, v] : kFig3) c.expect(s.at(E(w.c_str())) == T(v), "value at " + w);
  return c;
}

Check criterion2() {
  SchubertCohomology coh(RootDatum::parse("A3"));
  const WeylElem u = E("2143");
  Check c = same_terms(coh.structure_constants(u, E("1324")),
                       {{"2413", "1"}, {"4123", "1"}, {"3142", "1"}, {"2341", "1"}}, "2143x1324");
  for (const Check& d : {same_terms(coh.structure_constants(u, E("1342")), {{"2341", "a14"}, {"3142", "a24"}, {"3241", "1"}},
                                    "2143x1342"),
                         same_terms(coh.structure_constants(u, E("3412")),
                                    {{"3412", "a13*a24"}, {"3421", "a13"}, {"4312", "a24"}, {"4321", "1"}}, "2143x3412")})
    c.expect(d.ok, d.detail);
  return c;
}

Check criterion3() {
  auto L = LeviDatum::from_cocharacter(RootDatum::parse("A3"), {1, 1, -1, -1});
  PatternPullback pb(L);
  BorelPresentation borel(L->ambient_ptr());
  const WeylElem u = E("2143");
  const std::vector<std::pair<const char*, Terms>> cases = {
      {"1324", {{"2143", "1"}}},
      {"1342", {{"2134", "a14"}}},
      {"3412", {{"1234", "a13*a24"}, {"2134", "a13"}, {"1243", "a24"}, {"2143", "1"}}}};
  Check c;
  for (const auto& [s, expected] : cases) {
    const WeylElem sigma = E(s);
    for (const Check& d : {same_terms(pb.coh_by_localization(u, sigma), expected, std::string("localization ") + s),
                           same_terms(pb.coh_by_structure_constants(u, sigma), expected, std::string("schubert ") + s),
                           same_terms(expand_pullback_via_borel(pb, borel, borel.double_schubert(u), sigma), expected,
                                      std::string("borel ") + s)})
      c.expect(d.ok, d.detail);
  }
  c.expect(pb.coh_by_localization(u, E("3412")).coefficient(E("1234")) != T("a12*a24"), "typo reproduced");
  return c;
}

Check criterion4(double* seconds) {
  const auto start = std::chrono::steady_clock::now();
  auto C4 = RootDatum::parse("C4");
  Check c;
  c.expect(C4->length(E("3,-1,4,2")) == 4, "length of 3,-1,4,2");
  c.expect(C4->length(E("-2,-3,4,1")) == 7, "length of -2,-3,4,1");
  c.expect(C4->length(E("-2,-1,3,4")) == 3, "length of -2,-1,3,4");
  auto L = LeviDatum::from_cocharacter(C4, {1, 1, 1, 1});
  PatternPullback pb(L);
  const WeylElem u = E("3,-1,4,2");
  const WeylElem sigma = E("-2,-1,3,4");
  Check product = same_terms(pb.ambient_coh().structure_constants(u, sigma),
                             {{"-3,-1,4,2", "2*(t1^2+t1*t3)"},
                              {"-1,-3,4,2", "2*(t1+t3)"},
                              {"-4,-1,3,2", "2*t1"},
                              {"-3,-2,4,1", "2*(t1+t2+t3)"},
                              {"3,-2,4,-1", "2*(t1+t2)"},
                              {"-3,-2,4,-1", "1"},
                              {"2,-3,4,-1", "2"},
                              {"-4,-3,1,2", "2"},
                              {"-2,-3,4,1", "2"},
                              {"-1,-4,3,2", "2"},
                              {"-4,-2,3,1", "2"}},
                             "C4 product");
  c.expect(product.ok, product.detail);
  const Terms pulled = {{"1342", "2*(t1^2+t1*t3)"}, {"3142", "2*(t1+t3)"}, {"1432", "2*t1"}, {"2341", "2*(t1+t2+t3)"},
                        {"3412", "2"},               {"3241", "2"},         {"4132", "2"},    {"2431", "2"}};
  for (const Check& d : {same_terms(pb.coh_by_localization(u, sigma), pulled, "C4 pullback by localization"),
                         same_terms(pb.coh_by_structure_constants(u, sigma), pulled,
                                    "C4 pullback by structure constants")})
    c.expect(d.ok, d.detail);
  *seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(*seconds < kC4SecondsLimit, "runtime " + std::to_string(*seconds) + " s");
  return c;
}

Check criterion5() {
  Check c;
  auto L = LeviDatum::from_cocharacter(RootDatum::parse("A3"), {1, 1, -1, -1});
  std::vector<std::string> reps;
  for (const auto& r : L->min_coset_reps()) reps.push_back(r.to_string());
  std::vector<std::string> expected{"1234", "1324", "3124", "1342", "3142", "3412"};
  std::sort(reps.begin(), reps.end());
  std::sort(expected.begin(), expected.end());
  c.expect(reps == expected, "A3/A1xA1 representatives");
  auto M = LeviDatum::from_cocharacter(RootDatum::parse("C4"), {1, 1, 1, 1});
  c.expect(M->num_cosets() == 16, "C4/A3 coset count");
  const std::vector<std::pair<std::vector<int>, const char*>> subsets = {
      {{1, 2}, "-2,-1,3,4"}, {{2, 4}, "3,-2,4,-1"}, {{3}, "2,3,-1,4"}, {{1, 3, 4}, "-3,4,-2,-1"}};
  for (const auto& [positions, rep] : subsets) {
    const WeylElem r = E(rep);
    c.expect(M->is_min_rep(r), std::string(rep) + " is not a minimal representative");
    std::vector<int> negative;
    for (int i = 1; i <= 4; ++i)
      if (r(i) < 0) negative.push_back(i);
    c.expect(negative == positions, std::string(rep) + " negative positions");
  }
  return c;
}

Check criterion6a() {
  Check c;
  for (const char* g : {"A3", "C2", "C3"}) {
    SchubertCohomology coh(RootDatum::parse(g));
    for (std::size_t v = 0; v < coh.datum().size(); ++v)
      c.expect(!check_gkm_coh(coh.schubert(v)).has_value(), std::string(g) + " cohomology class " +
                                                                coh.datum().element(v).to_string());
  }
  for (const char* g : {"A2", "A3", "C2"}) {
    KTheorySchubert k(RootDatum::parse(g));
    for (std::size_t v = 0; v < k.datum().size(); ++v)
      c.expect(!check_gkm_K(k.structure_sheaf(v)).has_value(), std::string(g) + " K class " +
                                                                    k.datum().element(v).to_string());
  }
  return c;
}

Check criterion6b() {
  Check c;
  for (const char* g : {"A3", "C2"}) {
    auto d = RootDatum::parse(g);
    SchubertCohomology coh(d);
    for (const auto& u : d->elements())
      for (const auto& v : d->elements())
        for (const auto& [w, coeff] : coh.structure_constants(u, v).terms)
          c.expect(is_graham_positive(coeff, *d), std::string(g) + " c^" + w.to_string() + "_{" + u.to_string() + "," +
                                                      v.to_string() + "} = " + coeff.to_string());
  }
  auto L = LeviDatum::from_cocharacter(RootDatum::parse("A3"), {1, 1, -1, -1});
  PatternPullback pb(L);
  for (const auto& u : L->ambient().elements())
    for (const auto& sigma : L->min_coset_reps())
      for (const auto& [w, coeff] : pb.schubert_coh(u, sigma, CheckMode::kFast).terms)
        c.expect(is_graham_positive(coeff, L->ambient()), "pullback coefficient " + coeff.to_string());
  return c;
}

Check criterion6c() {
  Check c;
  for (const char* g : {"A2", "A3", "C2"}) {
    auto d = RootDatum::parse(g);
    SchubertCohomology coh(d);
    KTheorySchubert k(d);
    for (std::size_t w = 0; w < d->size(); ++w) {
      const GkmClassK ideal = k.ideal_sheaf(d->element(w));
      for (std::size_t u = 0; u < d->size(); ++u) {
        const int delta = u == w ? 1 : 0;
        c.expect(coh.integrate(coh.schubert(u) * coh.opposite(w)) == PolyS::constant(d->rank(), delta),
                 std::string(g) + " cohomology pairing");
        c.expect(k.integrate(k.structure_sheaf(u) * ideal) == LaurentR::constant(d->rank(), delta),
                 std::string(g) + " K pairing");
      }
    }
  }
  return c;
}

Check criterion6d() {
  Check c;
  for (const char* g : {"A2", "A3"}) {
    auto d = RootDatum::parse(g);
    SchubertCohomology coh(d);
    KTheorySchubert k(d);
    for (const auto& u : d->elements())
      for (const auto& v : d->elements()) {
        c.expect(coh.structure_constants(u, v) == coh.structure_constants_by_integration(u, v),
                 std::string(g) + " cohomology " + u.to_string() + "," + v.to_string());
        c.expect(k.structure_constants(u, v) == k.structure_constants_by_integration(u, v),
                 std::string(g) + " K " + u.to_string() + "," + v.to_string());
      }
  }
  return c;
}

Check criterion6e() {
  Check c;
  auto L = LeviDatum::from_cocharacter(RootDatum::parse("A3"), {1, 1, -1, -1});
  PatternPullback pb(L);
  BorelPresentation borel(L->ambient_ptr());
  for (const auto& u : L->ambient().elements())
    for (const auto& sigma : L->min_coset_reps()) {
      const std::string at = u.to_string() + " at " + sigma.to_string();
      auto coh = pb.coh_by_localization(u, sigma);
      c.expect(coh == pb.coh_by_structure_constants(u, sigma), "cohomology schubert route " + at);
      c.expect(coh == expand_pullback_via_borel(pb, borel, borel.double_schubert(u), sigma),
               "cohomology borel route " + at);
      auto k = pb.k_by_localization(u, sigma);
      c.expect(k == pb.k_by_structure_constants(u, sigma), "K schubert route " + at);
      c.expect(k == expand_pullback_via_borel(pb, borel, borel.double_grothendieck(u), sigma), "K borel route " + at);
    }
  return c;
}

Check criterion6f() {
  Check c;
  auto D = [](const GkmClassK& x, int i) { return demazure_pointwise(x, i); };
  for (const char* g : {"A2", "C2"}) {
    auto d = RootDatum::parse(g);
    KTheorySchubert k(d);
    const LaurentR twist = LinearForm::unit(d->rank(), 0).to_character() + LaurentR::constant(d->rank(), 2);
    for (std::size_t v = 0; v < d->size(); ++v) {
      const GkmClassK psi = k.structure_sheaf(v) * twist;
      for (int i = 0; i < d->num_simple(); ++i)
        c.expect(D(D(psi, i), i) == D(psi, i), std::string(g) + " idempotence");
      if (d->family() == Family::A)
        c.expect(D(D(D(psi, 0), 1), 0) == D(D(D(psi, 1), 0), 1), std::string(g) + " braid");
      else
        c.expect(D(D(D(D(psi, 0), 1), 0), 1) == D(D(D(D(psi, 1), 0), 1), 0), std::string(g) + " braid");
    }
  }
  auto A3 = RootDatum::parse("A3");
  SchubertCohomology lexmin(A3, WordOrder::kLexMin);
  SchubertCohomology lexmax(A3, WordOrder::kLexMax);
  for (std::size_t v = 0; v < A3->size(); ++v)
    c.expect(lexmin.schubert(v) == lexmax.schubert(v), "reduced word dependence at " + A3->element(v).to_string());
  return c;
}

Check criterion6g() {
  Check c;
  for (const char* g : {"A2", "A3", "C2"}) {
    auto d = RootDatum::parse(g);
    SchubertCohomology coh(d);
    KTheorySchubert k(d);
    for (std::size_t v = 0; v < d->size(); ++v)
      for (std::size_t w = 0; w < d->size(); ++w)
        c.expect(truncate_to_cohomology(k.structure_sheaf(v)[w], d->length(v)) == coh.schubert(v)[w],
                 std::string(g) + " truncation of " + d->element(v).to_string());
  }
  return c;
}

Check criterion7() {
  Check c;
  std::string report;
  c.expect(cli_code({"reproduce-paper"}, &report) == cli::kExitOk, "reproduce-paper exit code");
  auto fixtures = cli::default_fixtures();
  for (const auto& f : fixtures)
    c.expect(report.find("PASS " + f.id + " ") != std::string::npos, "report lacks " + f.id);
  const auto path = std::filesystem::temp_directory_path() / "eqschubert_acceptance_fixtures.json";
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    auto broken = fixtures;
    broken[i].expected = corrupt(fixtures[i]);
    {
      std::ofstream out(path);
      out << cli::fixtures_to_json(broken).dump(2);
    }
    c.expect(cli_code({"reproduce-paper", "--fixtures", path.string()}) == cli::kExitMismatch,
             "corrupted " + fixtures[i].id + " not detected");
  }
  std::filesystem::remove(path);
  return c;
}

}  // namespace

int main() {
  static_assert(kTolerance == 0);
  int failures = 0;
  auto report = [&](const char* id, const char* what, const std::function<Check()>& run) {
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    std::cout << (c.ok ? "PASS " : "FAIL ") << id << " " << what;
    if (!c.ok) std::cout << " (" << c.detail << ")";
    std::cout << std::endl;
    failures += !c.ok;
  };
  double c4_seconds = 0;
  report("1", "localization of S_2143 on A3 at all 24 points", criterion1);
  report("2", "three A3 product expansions", criterion2);
  report("3", "A3/A1xA1 pullbacks by localization, structure constants and Borel", criterion3);
  report("4", "C4 lengths, 11-term product and 8-term pullback", [&] { return criterion4(&c4_seconds); });
  std::cout << "     C4 case took " << c4_seconds << " s (limit " << kC4SecondsLimit << " s)" << std::endl;
  report("5", "coset representatives for A3/A1xA1 and C4/A3", criterion5);
  report("6a", "GKM conditions (cohomology A3 C2 C3, K-theory A2 A3 C2)", criterion6a);
  report("6b", "Graham positivity of structure constants and pullbacks", criterion6b);
  report("6c", "duality pairings (A2 A3 C2)", criterion6c);
  report("6d", "structure constants by expansion and by pushforward (A2 A3)", criterion6d);
  report("6e", "commuting square for all 24 u and 6 sigma", criterion6e);
  report("6f", "Demazure idempotence and braid relations, reduced-word independence", criterion6f);
  report("6g", "K-theory classes truncate to cohomology classes", criterion6g);
  report("7", "reproduce-paper report and corruption detection", criterion7);
  return failures == 0 ? 0 : 1;
}
