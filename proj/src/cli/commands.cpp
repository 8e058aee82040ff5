#include "eqschubert/cli/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>

#include "eqschubert/borel/borel.hpp"
#include "eqschubert/cli/paper.hpp"
#include "eqschubert/error.hpp"
#include "eqschubert/io/json.hpp"
#include "eqschubert/pattern/pullback.hpp"
#include "eqschubert/pattern/skeleton.hpp"

namespace eqschubert::cli {

namespace {

struct Options {
  std::string group;
  std::string theory = "coh";
  std::string mode = "checked";
  std::string format = "text";
  std::string graph_format = "dot";
  std::string eta;
  std::string u;
  std::string v;
  std::string sigma;
  std::string x;
  std::string fixtures;
  std::string dump;
  bool check = false;
};

template <class Ring>
void print_class(std::ostream& out, const GkmClass<Ring>& c, const std::string& format) {
  if (format == "json") {
    out << gkm_to_json(c).dump(2) << "\n";
    return;
  }
  for (std::size_t w = 0; w < c.size(); ++w) out << c.datum().element(w).to_string() << ": " << c[w].to_string() << "\n";
}

template <class Ring>
void print_expansion(std::ostream& out, const SchubertExpansion<Ring>& e, const std::string& format) {
  if (format == "json") {
    out << expansion_to_json(e).dump(2) << "\n";
    return;
  }
  out << expansion_to_string(e, Ring::is_laurent ? "O" : "S") << "\n";
}

template <class Ring>
void require_same(const SchubertExpansion<Ring>& a, const SchubertExpansion<Ring>& b, const std::string& what) {
  if (a.terms != b.terms)
    throw CrossCheckFailure(what + " disagree: " + expansion_to_string(a) + " vs " + expansion_to_string(b));
}

LeviPtr make_levi(const DatumPtr& d, const std::string& eta) {
  if (eta.empty()) throw InputError("--eta is required");
  return LeviDatum::from_cocharacter(d, parse_cocharacter(eta));
}

int cmd_localize(const Options& o, std::ostream& out) {
  DatumPtr d = RootDatum::parse(o.group);
  const WeylElem v = WeylElem::parse(o.v);
  d->require(v);
  if (o.theory == "K") {
    KTheorySchubert k(d);
    const GkmClassK& c = k.structure_sheaf(v);
    print_class(out, c, o.format);
    if (o.check) {
      if (auto bad = check_gkm_K(c))
        throw CrossCheckFailure("GKM check failed at " + bad->u.to_string() + " along " + bad->alpha.to_string());
      if (o.format != "json") out << "GKM check: ok\n";
    }
  } else {
    SchubertCohomology coh(d);
    const GkmClassS& c = coh.schubert(v);
    print_class(out, c, o.format);
    if (o.check) {
      if (auto bad = check_gkm_coh(c))
        throw CrossCheckFailure("GKM check failed at " + bad->u.to_string() + " along " + bad->alpha.to_string());
      if (o.format != "json") out << "GKM check: ok\n";
    }
  }
  return kExitOk;
}

int cmd_mult(const Options& o, std::ostream& out) {
  DatumPtr d = RootDatum::parse(o.group);
  const WeylElem u = WeylElem::parse(o.u);
  const WeylElem v = WeylElem::parse(o.v);
  d->require(u);
  d->require(v);
  const bool checked = o.mode == "checked";
  if (o.theory == "K") {
    KTheorySchubert k(d);
    auto e = k.structure_constants(u, v);
    if (checked) require_same(e, k.structure_constants_by_integration(u, v), "expansion and pushforward routes");
    print_expansion(out, e, o.format);
  } else {
    SchubertCohomology coh(d);
    auto e = coh.structure_constants(u, v);
    if (checked) require_same(e, coh.structure_constants_by_integration(u, v), "expansion and pushforward routes");
    print_expansion(out, e, o.format);
  }
  return kExitOk;
}

int cmd_pattern(const Options& o, std::ostream& out) {
  DatumPtr d = RootDatum::parse(o.group);
  LeviPtr L = make_levi(d, o.eta);
  const WeylElem u = WeylElem::parse(o.u);
  const WeylElem sigma = WeylElem::parse(o.sigma);
  d->require(u);
  L->require_min_rep(sigma);
  PatternPullback pb(L);
  const CheckMode mode = o.mode == "checked" ? CheckMode::kChecked : CheckMode::kFast;
  const bool borel_route = mode == CheckMode::kChecked && d->family() == Family::A;
  if (o.theory == "K") {
    auto e = pb.schubert_K(u, sigma, mode);
    if (borel_route) {
      BorelPresentation borel(d);
      require_same(e, expand_pullback_via_borel(pb, borel, borel.double_grothendieck(u), sigma),
                   "localization and Borel routes");
    }
    print_expansion(out, e, o.format);
  } else {
    auto e = pb.schubert_coh(u, sigma, mode);
    if (borel_route) {
      BorelPresentation borel(d);
      require_same(e, expand_pullback_via_borel(pb, borel, borel.double_schubert(u), sigma),
                   "localization and Borel routes");
    }
    print_expansion(out, e, o.format);
  }
  return kExitOk;
}

int cmd_flatten(const Options& o, std::ostream& out) {
  DatumPtr d = RootDatum::parse(o.group);
  LeviPtr L = make_levi(d, o.eta);
  const WeylElem x = WeylElem::parse(o.x);
  d->require(x);
  FlattenResult f = L->flatten(x);
  if (o.format == "json") {
    Json own = Json::array();
    for (std::size_t i = 0; i < f.sub_element.size(); ++i)
      own.push_back(Json{{"factor", L->factors()[i].label()}, {"window", f.sub_element[i].to_string()}});
    Json j{{"group", d->label()},       {"levi", L->type_label()},
           {"x", x.to_string()},        {"rep", f.rep.to_string()},
           {"w", f.ambient_factor.to_string()}, {"sub_element", own}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << x.to_string() << " = " << f.ambient_factor.to_string() << " * " << f.rep.to_string() << "\n";
  out << "levi " << L->type_label() << ":";
  for (std::size_t i = 0; i < f.sub_element.size(); ++i)
    out << " " << L->factors()[i].label() << "[" << f.sub_element[i].to_string() << "]";
  out << "\n";
  return kExitOk;
}

int cmd_cosets(const Options& o, std::ostream& out) {
  DatumPtr d = RootDatum::parse(o.group);
  LeviPtr L = make_levi(d, o.eta);
  if (o.format == "json") {
    Json reps = Json::array();
    for (const auto& c : L->cosets())
      reps.push_back(Json{{"rep", c.rep.to_string()}, {"length", d->length(c.rep)}, {"size", c.members.size()}});
    out << Json{{"group", d->label()}, {"levi", L->type_label()}, {"cosets", reps}}.dump(2) << "\n";
    return kExitOk;
  }
  out << d->label() << " / " << L->type_label() << ": " << L->num_cosets() << " cosets\n";
  for (const auto& c : L->cosets()) out << c.rep.to_string() << "  (length " << d->length(c.rep) << ")\n";
  return kExitOk;
}

int cmd_skeleton(const Options& o, std::ostream& out) {
  DatumPtr d = RootDatum::parse(o.group);
  LeviPtr L = o.eta.empty() ? nullptr : make_levi(d, o.eta);
  Skeleton s = one_skeleton(d, L.get());
  if (o.graph_format == "dot") {
    out << skeleton_to_dot(s);
  } else if (o.graph_format == "json") {
    Json vertices = Json::array();
    for (std::size_t v = 0; v < d->size(); ++v) {
      Json x{{"id", d->element(v).to_string()}};
      if (L) x["component"] = s.component[v];
      vertices.push_back(std::move(x));
    }
    Json edges = Json::array();
    for (const auto& e : s.edges)
      edges.push_back(Json{{"source", d->element(e.a).to_string()},
                           {"target", d->element(e.b).to_string()},
                           {"root", e.root.to_string()},
                           {"levi", e.in_levi}});
    out << Json{{"group", d->label()}, {"vertices", vertices}, {"edges", edges}, {"components", s.num_components}}
               .dump(2)
        << "\n";
  } else {
    out << d->label() << ": " << d->size() << " vertices, " << s.edges.size() << " edges";
    if (L) out << ", " << s.num_components << " components";
    out << "\n";
  }
  return kExitOk;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
  std::vector<Fixture> fixtures;
  if (o.fixtures.empty()) {
    fixtures = default_fixtures();
  } else {
    std::ifstream in(o.fixtures);
    if (!in) throw InputError("cannot open fixture file " + o.fixtures);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("fixture file is not valid JSON: ") + e.what());
    }
    fixtures = fixtures_from_json(j);
  }
  if (!o.dump.empty()) {
    std::ofstream f(o.dump);
    if (!f) throw InputError("cannot write " + o.dump);
    f << fixtures_to_json(default_fixtures()).dump(2) << "\n";
  }

  const auto rows = compare(fixtures, compute_paper_values());
  std::size_t passed = 0;
  for (const auto& r : rows) passed += r.ok;
  if (o.format == "json") {
    Json list = Json::array();
    for (const auto& r : rows) {
      Json x{{"id", r.fixture->id}, {"group", r.fixture->group}, {"ok", r.ok}, {"computed", r.computed}};
      if (!r.ok) x["detail"] = r.detail;
      if (!r.fixture->note.empty()) x["note"] = r.fixture->note;
      list.push_back(std::move(x));
    }
    out << Json{{"passed", passed}, {"total", rows.size()}, {"fixtures", list}}.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      out << (r.ok ? "PASS " : "FAIL ") << r.fixture->id << " [" << r.fixture->group << "]\n";
      if (r.computed.is_object()) {
        for (const auto& [k, v] : r.computed.items()) out << "    " << k << ": " << v.get<std::string>() << "\n";
      } else if (r.computed.is_array()) {
        out << "    ";
        for (const auto& v : r.computed) out << v.get<std::string>() << " ";
        out << "\n";
      } else if (!r.computed.is_null()) {
        out << "    " << (r.computed.is_string() ? r.computed.get<std::string>() : r.computed.dump()) << "\n";
      }
      if (!r.fixture->note.empty()) out << "    note: " << r.fixture->note << "\n";
      if (!r.ok) out << "    mismatch: " << r.detail << "\n";
    }
    out << passed << "/" << rows.size() << " fixtures match\n";
  }
  return passed == rows.size() ? kExitOk : kExitMismatch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant Schubert calculus on flag manifolds by GKM localization"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto add_theory = [&](CLI::App* c) {
    c->add_option("--theory", o.theory, "coh or K")->check(CLI::IsMember({"coh", "K"}));
  };
  auto add_mode = [&](CLI::App* c) {
    c->add_option("--mode", o.mode, "checked or fast")->check(CLI::IsMember({"checked", "fast"}));
  };
  auto add_format = [&](CLI::App* c, std::vector<std::string> formats) {
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember(formats));
  };

  auto* localize = app.add_subcommand("localize", "localized Schubert class at every fixed point");
  localize->add_option("group", o.group, "e.g. A3, C4")->required();
  localize->add_option("v", o.v, "element in window notation")->required();
  add_theory(localize);
  add_format(localize, {"text", "json"});
  localize->add_flag("--check", o.check, "verify the GKM conditions");
  localize->callback([&] { action = [&] { return cmd_localize(o, out); }; });

  auto* mult = app.add_subcommand("mult", "structure constants of a product of Schubert classes");
  mult->add_option("group", o.group)->required();
  mult->add_option("u", o.u)->required();
  mult->add_option("v", o.v)->required();
  add_theory(mult);
  add_mode(mult);
  add_format(mult, {"text", "json"});
  mult->callback([&] { action = [&] { return cmd_mult(o, out); }; });

  auto* pattern = app.add_subcommand("pattern", "pullback of a Schubert class along a pattern map");
  pattern->add_option("group", o.group)->required();
  pattern->add_option("--eta", o.eta, "cocharacter, e.g. 1,1,-1,-1")->required();
  pattern->add_option("--u", o.u)->required();
  pattern->add_option("--sigma", o.sigma, "minimal coset representative")->required();
  add_theory(pattern);
  add_mode(pattern);
  add_format(pattern, {"text", "json"});
  pattern->callback([&] { action = [&] { return cmd_pattern(o, out); }; });

  auto* flatten = app.add_subcommand("flatten", "factor x = w * sigma with w in the Levi Weyl group");
  flatten->add_option("group", o.group)->required();
  flatten->add_option("x", o.x)->required();
  flatten->add_option("--eta", o.eta)->required();
  add_format(flatten, {"text", "json"});
  flatten->callback([&] { action = [&] { return cmd_flatten(o, out); }; });

  auto* cosets = app.add_subcommand("cosets", "minimal coset representatives");
  cosets->add_option("group", o.group)->required();
  cosets->add_option("--eta", o.eta)->required();
  add_format(cosets, {"text", "json"});
  cosets->callback([&] { action = [&] { return cmd_cosets(o, out); }; });

  auto* skeleton = app.add_subcommand("skeleton", "equivariant one-skeleton");
  skeleton->add_option("group", o.group)->required();
  skeleton->add_option("--eta", o.eta);
  skeleton->add_option("--format", o.graph_format, "dot, json or text")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  skeleton->callback([&] { action = [&] { return cmd_skeleton(o, out); }; });

  auto* reproduce = app.add_subcommand("reproduce-paper", "recompute the worked examples and compare with golden data");
  reproduce->add_option("--fixtures", o.fixtures, "JSON fixture file replacing the built-in data");
  reproduce->add_option("--dump-fixtures", o.dump, "write the built-in fixtures to a file");
  add_format(reproduce, {"text", "json"});
  reproduce->callback([&] { action = [&] { return cmd_reproduce(o, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CrossCheckFailure& e) {
    err << "cross-check failed: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace eqschubert::cli
