#include "eqschubert/pattern/skeleton.hpp"

#include <sstream>

#include "eqschubert/error.hpp"

namespace eqschubert {

Skeleton one_skeleton(const DatumPtr& datum, const LeviDatum* levi) {
  if (levi && &levi->ambient() != datum.get()) throw InputError("Levi datum belongs to a different group");
  Skeleton s;
  s.datum = datum;
  const RootDatum& d = *datum;
  for (const auto& alpha : d.positive_roots()) {
    const WeylElem r = d.reflection(alpha);
    const bool in_levi = levi && levi->in_subsystem(alpha);
    for (std::size_t a = 0; a < d.size(); ++a) {
      std::size_t b = d.index_of(r * d.element(a));
      if (b > a) s.edges.push_back(SkeletonEdge{a, b, alpha, in_levi});
    }
  }
  s.component.assign(d.size(), -1);
  if (levi) {
    for (std::size_t v = 0; v < d.size(); ++v) s.component[v] = static_cast<int>(levi->coset_index(d.element(v)));
    s.num_components = levi->num_cosets();
  }
  return s;
}

std::string skeleton_to_dot(const Skeleton& s) {
  const RootDatum& d = *s.datum;
  auto node = [&](std::size_t v) { return "\"" + d.element(v).to_string() + "\""; };
  std::ostringstream out;
  out << "graph \"" << d.label() << "\" {\n";
  out << "  node [shape=plaintext];\n";
  if (s.num_components > 0) {
    for (std::size_t c = 0; c < s.num_components; ++c) {
      out << "  subgraph cluster_" << c << " {\n";
      out << "    style=rounded;\n";
      for (std::size_t v = 0; v < d.size(); ++v)
        if (s.component[v] == static_cast<int>(c)) out << "    " << node(v) << ";\n";
      out << "  }\n";
    }
  } else {
    for (std::size_t v = 0; v < d.size(); ++v) out << "  " << node(v) << ";\n";
  }
  for (const auto& e : s.edges) {
    out << "  " << node(e.a) << " -- " << node(e.b) << " [label=\"" << e.root.to_string() << "\"";
    if (e.in_levi) out << ", penwidth=2, color=blue";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace eqschubert
