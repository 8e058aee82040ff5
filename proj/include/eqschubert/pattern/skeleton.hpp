#pragma once

#include <string>
#include <vector>

#include "eqschubert/pattern/levi.hpp"

namespace eqschubert {

struct SkeletonEdge {
  std::size_t a = 0;  // vertex indices, a < b
  std::size_t b = 0;
  LinearForm root;     // positive root α with element(b) = s_α element(a)
  bool in_levi = false;
};

/// The moment graph of G/B: vertices W, edges {w, s_α w}. With a Levi, the
/// fixed locus of η shows up as the Φ' edges, one component per coset.
struct Skeleton {
  DatumPtr datum;
  std::vector<SkeletonEdge> edges;
  std::vector<int> component;  // coset of each vertex, or -1 without a Levi
  std::size_t num_components = 0;
};

Skeleton one_skeleton(const DatumPtr& datum, const LeviDatum* levi = nullptr);

std::string skeleton_to_dot(const Skeleton& s);

}  // namespace eqschubert
