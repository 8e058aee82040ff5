#pragma once

#include <map>
#include <string>
#include <vector>

#include "eqschubert/io/json.hpp"

namespace eqschubert::cli {

/// One golden value from the worked examples. `kind` is one of
/// class | expansion | poly | borel_poly | integer | element | elements;
/// coefficients are written in t1..tn (plus z1..zn for borel_poly), with
/// aIJ standing for t_J - t_I.
struct Fixture {
  std::string id;
  std::string group;
  std::string kind;
  int rank = 0;
  Json expected;
  std::string note;
};

struct ComparisonRow {
  const Fixture* fixture = nullptr;
  Json computed;
  bool ok = false;
  std::string detail;
};

std::vector<Fixture> default_fixtures();
std::vector<Fixture> fixtures_from_json(const Json& j);
Json fixtures_to_json(const std::vector<Fixture>& fixtures);

/// Computes every value referenced by the default fixtures, keyed by id.
std::map<std::string, Json> compute_paper_values();

/// Semantic comparison: polynomials are compared after parsing, element
/// sets without regard to order, expansions with absent terms read as 0.
std::vector<ComparisonRow> compare(const std::vector<Fixture>& fixtures, const std::map<std::string, Json>& computed);

}  // namespace eqschubert::cli
