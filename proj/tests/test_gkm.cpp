#include <gtest/gtest.h>

#include <random>

#include "eqschubert/error.hpp"
#include "eqschubert/gkm/cohomology.hpp"
#include "eqschubert/gkm/positivity.hpp"
#include "eqschubert/symbolic/parse.hpp"

using namespace eqschubert;

namespace {

PolyS T(const char* s, int n = 4) { return parse_poly(s, VarNames::torus_ring(n, 't')); }
WeylElem E(const char* s) { return WeylElem::parse(s); }

// Literal subword sum over every subset of positions of the word of w.
PolyS billey_by_subsets(const RootDatum& d, const WeylElem& v, const WeylElem& w, WordOrder order) {
  const ReducedWord word = d.reduced_word(w, order);
  const int N = static_cast<int>(word.size());
  std::vector<LinearForm> beta;
  WeylElem prefix = WeylElem::identity(d.rank());
  for (int b : word) {
    beta.push_back(prefix.act(d.simple_roots()[b]));
    prefix = prefix * d.simple_reflection(b);
  }
  PolyS sum(d.rank());
  const int target = d.length(v);
  for (unsigned mask = 0; mask < (1u << N); ++mask) {
    if (std::popcount(mask) != target) continue;
    WeylElem product = WeylElem::identity(d.rank());
    PolyS term = PolyS::one(d.rank());
    for (int j = 0; j < N; ++j) {
      if (!(mask & (1u << j))) continue;
      product = product * d.simple_reflection(word[j]);
      term *= beta[j].to_poly();
    }
    if (product == v) sum += term;
  }
  return sum;
}

class Suites : public ::testing::TestWithParam<const char*> {};

}  // namespace

TEST(Billey, Figure3Values) {
  auto A3 = RootDatum::parse("A3");
  SchubertCohomology coh(A3);
  const GkmClassS& s = coh.schubert(E("2143"));
  EXPECT_EQ(s.at(E("4321")), T("a14^2"));
  EXPECT_EQ(s.at(E("3214")), T("0"));
  EXPECT_EQ(s.at(E("2143")), T("a12*a34"));
  EXPECT_EQ(s.at(E("3412")), T("a13*a24"));
  EXPECT_EQ(s.at(E("4312")), T("a14*a24"));
  EXPECT_EQ(s.at(E("1432")), T("0"));
  // Closed form (t_{w1} - t1)(t4 - t_{w4}) at every w.
  for (const auto& w : A3->elements()) {
    PolyS expect = (PolyS::variable(4, w(1) - 1) - T("t1")) * (T("t4") - PolyS::variable(4, w(4) - 1));
    if (!A3->bruhat_leq(E("2143"), w)) expect = T("0");
    EXPECT_EQ(s.at(w), expect) << w.to_string();
  }
}

TEST(Billey, IdentityClassIsOne) {
  auto C3 = RootDatum::parse("C3");
  SchubertCohomology coh(C3);
  EXPECT_EQ(coh.schubert(C3->identity()), GkmClassS::constant(C3, PolyS::one(3)));
}

TEST(Billey, MatchesSubsetEnumeration) {
  for (const char* label : {"A3", "C3"}) {
    auto d = RootDatum::parse(label);
    SchubertCohomology coh(d);
    for (const auto& v : d->elements())
      for (const auto& w : d->elements())
        ASSERT_EQ(coh.schubert(v).at(w), billey_by_subsets(*d, v, w, WordOrder::kLexMin))
            << label << " v=" << v.to_string() << " w=" << w.to_string();
  }
}

TEST(Billey, IndependentOfReducedWord) {
  auto A3 = RootDatum::parse("A3");
  SchubertCohomology lexmin(A3, WordOrder::kLexMin);
  SchubertCohomology lexmax(A3, WordOrder::kLexMax);
  for (const auto& v : A3->elements()) {
    EXPECT_EQ(lexmin.schubert(v), lexmax.schubert(v)) << v.to_string();
    for (const auto& w : A3->elements())
      EXPECT_EQ(lexmin.schubert(v).at(w), billey_by_subsets(*A3, v, w, WordOrder::kLexMax));
  }
}

TEST_P(Suites, SchubertClassInvariants) {
  auto d = RootDatum::parse(GetParam());
  SchubertCohomology coh(d);
  for (std::size_t v = 0; v < d->size(); ++v) {
    const GkmClassS& s = coh.schubert(v);
    EXPECT_FALSE(check_gkm_coh(s).has_value()) << d->element(v).to_string();
    EXPECT_EQ(s[v], coh.diagonal(v));
    for (std::size_t w = 0; w < d->size(); ++w) {
      if (!d->bruhat_leq(v, w)) {
        EXPECT_TRUE(s[w].is_zero());
        continue;
      }
      EXPECT_TRUE(s[w].is_homogeneous());
      EXPECT_EQ(s[w].degree(), d->length(v));
      EXPECT_TRUE(is_graham_positive(s[w], *d)) << s[w].to_string();
    }
  }
}

TEST_P(Suites, DualityWithOppositeClasses) {
  auto d = RootDatum::parse(GetParam());
  SchubertCohomology coh(d);
  for (std::size_t u = 0; u < d->size(); ++u)
    for (std::size_t w = 0; w < d->size(); ++w)
      EXPECT_EQ(coh.integrate(coh.schubert(u) * coh.opposite(w)), PolyS::constant(d->rank(), u == w ? 1 : 0))
          << d->element(u).to_string() << " " << d->element(w).to_string();
}

TEST_P(Suites, StructureConstantLaws) {
  auto d = RootDatum::parse(GetParam());
  SchubertCohomology coh(d);
  for (const auto& u : d->elements()) {
    for (const auto& v : d->elements()) {
      auto e = coh.structure_constants(u, v);
      EXPECT_EQ(e.terms, coh.structure_constants(v, u).terms);
      for (const auto& [w, c] : e.terms) {
        EXPECT_TRUE(d->bruhat_leq(u, w) && d->bruhat_leq(v, w));
        EXPECT_TRUE(c.is_homogeneous());
        EXPECT_EQ(c.degree(), d->length(u) + d->length(v) - d->length(w));
        EXPECT_TRUE(is_graham_positive(c, *d)) << c.to_string();
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Groups, Suites, ::testing::Values("A2", "A3", "C2", "B2", "C3"));

TEST(Gkm, RejectsNonClasses) {
  auto A1 = RootDatum::parse("A1");
  GkmClassS bad = GkmClassS::zero(A1);
  bad[1] = PolyS::one(2);
  auto violation = check_gkm_coh(bad);
  ASSERT_TRUE(violation.has_value());
  EXPECT_EQ(violation->alpha, LinearForm::alpha(2, 1, 2));
  EXPECT_THROW(SchubertCohomology(A1).expand(bad), NotInSpan);
  EXPECT_THROW(SchubertCohomology(A1).integrate(bad), NonPolynomialResult);
  EXPECT_FALSE(check_gkm_coh(GkmClassS::constant(A1, T("t1^2 - 3", 2))).has_value());
}

TEST(Integrate, Calibration) {
  auto A1 = RootDatum::parse("A1");
  SchubertCohomology a1(A1);
  EXPECT_EQ(a1.integrate(a1.schubert(A1->identity())), PolyS(2));
  for (const char* label : {"A2", "A3", "C2", "C3"}) {
    auto d = RootDatum::parse(label);
    SchubertCohomology coh(d);
    EXPECT_EQ(coh.integrate(coh.schubert(d->longest_element())), PolyS::one(d->rank())) << label;
  }
}

TEST(Expand, ExamplesFromProducts) {
  auto A3 = RootDatum::parse("A3");
  SchubertCohomology coh(A3);
  auto e = coh.structure_constants(E("2143"), E("3412"));
  ASSERT_EQ(e.terms.size(), 4u);
  EXPECT_EQ(e.coefficient(E("3412")), T("a13*a24"));
  EXPECT_EQ(e.coefficient(E("3421")), T("a13"));
  EXPECT_EQ(e.coefficient(E("4312")), T("a24"));
  EXPECT_EQ(e.coefficient(E("4321")), T("1"));
  auto f = coh.structure_constants(E("2143"), E("1342"));
  ASSERT_EQ(f.terms.size(), 3u);
  EXPECT_EQ(f.coefficient(E("2341")), T("a14"));
  EXPECT_EQ(f.coefficient(E("3142")), T("a24"));
  EXPECT_EQ(f.coefficient(E("3241")), T("1"));
  auto g = coh.structure_constants(E("1234"), E("2143"));
  ASSERT_EQ(g.terms.size(), 1u);
  EXPECT_EQ(g.coefficient(E("2143")), T("1"));
}

TEST(Expand, RoundTripRandomCombination) {
  for (const char* label : {"A3", "C2"}) {
    auto d = RootDatum::parse(label);
    SchubertCohomology coh(d);
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> small(-3, 3);
    for (int trial = 0; trial < 5; ++trial) {
      GkmClassS sum = GkmClassS::zero(d);
      std::vector<std::pair<WeylElem, PolyS>> expected;
      for (std::size_t v = 0; v < d->size(); ++v) {
        if (small(rng) <= 0) continue;
        PolyS c = PolyS::constant(d->rank(), Rational(small(rng)) / 2) +
                  PolyS::variable(d->rank(), 0) * PolyS::constant(d->rank(), Rational(small(rng)));
        if (c.is_zero()) continue;
        sum += coh.schubert(v) * c;
        expected.emplace_back(d->element(v), c);
      }
      EXPECT_EQ(coh.expand(sum).terms, expected);
    }
  }
}

TEST(StructureConstants, TwoRoutesAgree) {
  for (const char* label : {"A2", "A3"}) {
    auto d = RootDatum::parse(label);
    SchubertCohomology coh(d);
    for (const auto& u : d->elements())
      for (const auto& v : d->elements())
        EXPECT_EQ(coh.structure_constants(u, v).terms, coh.structure_constants_by_integration(u, v).terms)
            << label << " " << u.to_string() << " " << v.to_string();
  }
}

TEST(StructureConstants, TypeC4Example) {
  auto C4 = RootDatum::parse("C4");
  SchubertCohomology coh(C4);
  auto e = coh.structure_constants(E("3,-1,4,2"), E("-2,-1,3,4"));
  EXPECT_EQ(e.terms.size(), 11u);
  EXPECT_EQ(e.coefficient(E("-3,-1,4,2")), T("2*(t1^2+t1*t3)"));
  EXPECT_EQ(e.coefficient(E("2,-3,4,-1")), T("2"));
  EXPECT_EQ(e.coefficient(E("-3,-2,4,-1")), T("1"));
}

TEST(Positivity, SimpleRootCoordinates) {
  auto A3 = RootDatum::parse("A3");
  EXPECT_TRUE(is_graham_positive(T("a14"), *A3));
  EXPECT_FALSE(is_graham_positive(T("a21"), *A3));
  EXPECT_FALSE(is_graham_positive(T("t1"), *A3));
  EXPECT_FALSE(is_graham_positive(T("1/2*a12"), *A3));
  auto q = in_simple_roots(T("a13"), *A3);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, T("t1 + t2"));
}
