#include <gtest/gtest.h>

#include "eqschubert/error.hpp"
#include "eqschubert/gkm/cohomology.hpp"
#include "eqschubert/gkm/ktheory.hpp"
#include "eqschubert/gkm/positivity.hpp"
#include "eqschubert/symbolic/parse.hpp"

using namespace eqschubert;

namespace {

LaurentR X(const char* s, int n) { return parse_laurent(s, VarNames::torus_ring(n, 'x')); }

class KSuites : public ::testing::TestWithParam<const char*> {};

}  // namespace

TEST(Demazure, ConstantClassIsFixed) {
  auto C2 = RootDatum::parse("C2");
  GkmClassK one = GkmClassK::constant(C2, LaurentR::one(2));
  for (int i = 0; i < C2->num_simple(); ++i) EXPECT_EQ(demazure_pointwise(one, i), one);
}

TEST(Demazure, ActsOnStructureSheaves) {
  for (const char* label : {"A2", "A3", "C2"}) {
    auto d = RootDatum::parse(label);
    KTheorySchubert k(d);
    for (std::size_t v = 0; v < d->size(); ++v)
      for (int i = 0; i < d->num_simple(); ++i) {
        std::size_t vs = d->right_mult_simple(v, i);
        std::size_t lower = d->length(vs) < d->length(v) ? vs : v;
        EXPECT_EQ(demazure_pointwise(k.structure_sheaf(v), i), k.structure_sheaf(lower))
            << label << " " << d->element(v).to_string() << " i=" << i;
      }
  }
}

TEST(Demazure, IdempotentAndBraid) {
  auto D = [](const GkmClassK& c, int i) { return demazure_pointwise(c, i); };
  for (const char* label : {"A2", "C2"}) {
    auto d = RootDatum::parse(label);
    KTheorySchubert k(d);
    const int n = d->rank();
    const LaurentR twist = n == 3 ? X("x1 + 2*x3^-1", 3) : X("x1^-1 + 3*x2", 2);
    std::vector<GkmClassK> inputs;
    for (std::size_t v = 0; v < d->size(); ++v) inputs.push_back(k.structure_sheaf(v) * twist);
    inputs.push_back(k.structure_sheaf(d->identity()) * twist + k.structure_sheaf(d->longest_element()));
    for (const auto& psi : inputs) {
      for (int i = 0; i < 2; ++i) EXPECT_EQ(D(D(psi, i), i), D(psi, i)) << label;
      if (d->family() == Family::A)
        EXPECT_EQ(D(D(D(psi, 0), 1), 0), D(D(D(psi, 1), 0), 1));
      else
        EXPECT_EQ(D(D(D(D(psi, 0), 1), 0), 1), D(D(D(D(psi, 1), 0), 1), 0));
    }
  }
}

TEST_P(KSuites, StructureSheafInvariants) {
  auto d = RootDatum::parse(GetParam());
  KTheorySchubert k(d);
  SchubertCohomology coh(d);
  for (std::size_t v = 0; v < d->size(); ++v) {
    const GkmClassK& s = k.structure_sheaf(v);
    EXPECT_FALSE(check_gkm_K(s).has_value()) << d->element(v).to_string();
    LaurentR diag = LaurentR::one(d->rank());
    for (const auto& b : k.diagonal_factors(v)) diag *= one_minus_character(-b);
    EXPECT_EQ(s[v], diag);
    for (std::size_t w = 0; w < d->size(); ++w) {
      if (!d->bruhat_leq(v, w)) EXPECT_TRUE(s[w].is_zero());
      // Lowest-degree part is the cohomology class.
      EXPECT_EQ(truncate_to_cohomology(s[w], d->length(v)), coh.schubert(v)[w])
          << d->element(v).to_string() << " at " << d->element(w).to_string();
    }
  }
}

TEST_P(KSuites, DualityWithIdealSheaves) {
  auto d = RootDatum::parse(GetParam());
  KTheorySchubert k(d);
  for (std::size_t w = 0; w < d->size(); ++w) {
    const GkmClassK ideal = k.ideal_sheaf(d->element(w));
    EXPECT_FALSE(check_gkm_K(ideal).has_value());
    for (std::size_t u = 0; u < d->size(); ++u)
      EXPECT_EQ(k.integrate(k.structure_sheaf(u) * ideal), LaurentR::constant(d->rank(), u == w ? 1 : 0))
          << d->element(u).to_string() << " " << d->element(w).to_string();
  }
}

TEST_P(KSuites, OppositeClassesAreSupportedBelow) {
  auto d = RootDatum::parse(GetParam());
  KTheorySchubert k(d);
  for (std::size_t w = 0; w < d->size(); ++w) {
    const GkmClassK& o = k.opposite(w);
    EXPECT_FALSE(check_gkm_K(o).has_value());
    for (std::size_t x = 0; x < d->size(); ++x)
      if (!d->bruhat_leq(x, w)) EXPECT_TRUE(o[x].is_zero());
  }
  EXPECT_EQ(k.integrate(k.structure_sheaf(d->identity())), LaurentR::one(d->rank()));
}

TEST_P(KSuites, StructureConstantsAlternateInSign) {
  auto d = RootDatum::parse(GetParam());
  KTheorySchubert k(d);
  int checked = 0;
  for (const auto& u : d->elements())
    for (const auto& v : d->elements()) {
      auto e = k.structure_constants(u, v);
      for (const auto& [w, c] : e.terms) {
        EXPECT_TRUE(d->bruhat_leq(u, w) && d->bruhat_leq(v, w));
        const int excess = d->length(w) - d->length(u) - d->length(v);
        EXPECT_TRUE(is_agm_positive(c, excess, *d))
            << u.to_string() << " " << v.to_string() << " " << w.to_string() << ": " << c.to_string();
        ++checked;
      }
    }
  EXPECT_GT(checked, 0);
}

INSTANTIATE_TEST_SUITE_P(Groups, KSuites, ::testing::Values("A2", "A3", "C2"));

TEST(KStructureConstants, TwoRoutesAgree) {
  for (const char* label : {"A2", "A3", "C2"}) {
    auto d = RootDatum::parse(label);
    KTheorySchubert k(d);
    for (const auto& u : d->elements())
      for (const auto& v : d->elements())
        EXPECT_EQ(k.structure_constants(u, v).terms, k.structure_constants_by_integration(u, v).terms)
            << label << " " << u.to_string() << " " << v.to_string();
  }
}

TEST(KStructureConstants, ProjectiveLine) {
  auto A1 = RootDatum::parse("A1");
  KTheorySchubert k(A1);
  const WeylElem s = WeylElem::parse("21");
  auto e = k.structure_constants(s, s);
  ASSERT_EQ(e.terms.size(), 1u);
  EXPECT_EQ(e.coefficient(s), X("1 - x1*x2^-1", 2));
  EXPECT_TRUE(is_agm_positive(e.coefficient(s), -1, *A1));
}

TEST(KGkm, RejectsNonClasses) {
  auto A1 = RootDatum::parse("A1");
  GkmClassK bad = GkmClassK::zero(A1);
  bad[1] = LaurentR::one(2);
  EXPECT_TRUE(check_gkm_K(bad).has_value());
  KTheorySchubert k(A1);
  EXPECT_THROW(k.integrate(bad), NonIntegralResult);
  GkmClassK not_in_span = GkmClassK::constant(A1, LaurentR::one(2));
  not_in_span[1] = X("x1", 2);
  EXPECT_THROW(k.expand(not_in_span), NotInSpan);
}
