#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "eqschubert/symbolic/poly.hpp"

namespace eqschubert {

/// Variable naming for a polynomial ring: names[i] is the name of variable i.
struct VarNames {
  std::vector<std::string> names;
  /// Number of torus variables t1..tn (drives the a<i><j> shorthand).
  int torus = 0;

  /// t1..tn for S, or x1..xn for R(T).
  static VarNames torus_ring(int n, char prefix = 't');
  /// t1..tn followed by z1..zn, the Borel presentation variables.
  static VarNames borel(int n);

  int rank() const { return static_cast<int>(names.size()); }
  VarNamer namer() const;
};

/// Parses expressions built from +, -, *, ^, parentheses, integers,
/// fractions p/q, the ring's variable names, and the shorthand a<i><j> for
/// the root t_j - t_i (in S) or the character x^(t_j - t_i) (in R(T)).
/// Negative powers are accepted in R(T) for monomials only.
PolyS parse_poly(std::string_view text, const VarNames& vars);
LaurentR parse_laurent(std::string_view text, const VarNames& vars);

}  // namespace eqschubert
