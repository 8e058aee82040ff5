#include <gtest/gtest.h>

#include "eqschubert/borel/borel.hpp"
#include "eqschubert/error.hpp"

using namespace eqschubert;

namespace {

WeylElem E(const char* s) { return WeylElem::parse(s); }

}  // namespace

TEST(Borel, DoubleSchubertExamples) {
  BorelPresentation b(RootDatum::parse("A3"));
  const VarNames names = b.names();
  EXPECT_EQ(b.double_schubert(E("2143")), parse_poly("(z1-t1)*(z1+z2+z3-t1-t2-t3)", names));
  EXPECT_EQ(b.double_schubert(E("1234")), PolyS::one(8));
  EXPECT_EQ(b.double_schubert(E("2134")), parse_poly("z1 - t1", names));
  EXPECT_EQ(b.double_schubert(E("4321")),
            parse_poly("(z1-t1)*(z1-t2)*(z1-t3)*(z2-t1)*(z2-t2)*(z3-t1)", names));
}

TEST(Borel, LocalizationMatchesBilley) {
  for (const char* group : {"A2", "A3"}) {
    auto d = RootDatum::parse(group);
    BorelPresentation b(d);
    SchubertCohomology coh(d);
    KTheorySchubert k(d);
    for (const auto& w : d->elements()) {
      EXPECT_EQ(b.localize(b.double_schubert(w)), coh.schubert(w)) << w.to_string();
      EXPECT_EQ(b.localize(b.double_grothendieck(w)), k.structure_sheaf(w)) << w.to_string();
    }
  }
}

TEST(Borel, SymmetricDifferencesVanish) {
  auto d = RootDatum::parse("A3");
  BorelPresentation b(d);
  const VarNames names = b.names();
  for (const char* e : {"z1+z2+z3+z4-t1-t2-t3-t4", "z1*z2+z1*z3+z1*z4+z2*z3+z2*z4+z3*z4-t1*t2-t1*t3-t1*t4-t2*t3-t2*t4-t3*t4",
                        "z1*z2*z3*z4 - t1*t2*t3*t4"})
    EXPECT_TRUE(b.localize(parse_poly(e, names)).is_zero()) << e;
}

TEST(Borel, PullbackSubstitutesZ) {
  BorelPresentation b(RootDatum::parse("A3"));
  const VarNames names = b.names();
  const PolyS p = parse_poly("z1 - t1", names);
  const PolyS q = parse_poly("z2*z3 + t4", names);
  const WeylElem sigma = E("3412");
  EXPECT_EQ(pullback_borel(p, sigma), parse_poly("z3 - t1", names));
  EXPECT_EQ(pullback_borel(p * q, sigma), pullback_borel(p, sigma) * pullback_borel(q, sigma));
  EXPECT_EQ(pullback_borel(b.double_schubert(E("2143")), sigma),
            parse_poly("(z3-t1)*(z3+z4+z1-t1-t2-t3)", names));
  EXPECT_THROW(pullback_borel(PolyS::one(4), sigma), RankMismatch);
}

// Pulling back in the Borel presentation and localizing agrees with
// localizing and restricting to the translated fixed points.
TEST(Borel, CommutingSquare) {
  auto L = LeviDatum::from_cocharacter(RootDatum::parse("A3"), {1, 1, -1, -1});
  PatternPullback pb(L);
  BorelPresentation b(L->ambient_ptr());
  for (const auto& u : L->ambient().elements())
    for (const auto& sigma : L->min_coset_reps()) {
      EXPECT_EQ(expand_pullback_via_borel(pb, b, b.double_schubert(u), sigma).terms,
                pb.coh_by_localization(u, sigma).terms)
          << u.to_string() << " " << sigma.to_string();
      EXPECT_EQ(expand_pullback_via_borel(pb, b, b.double_grothendieck(u), sigma).terms,
                pb.k_by_localization(u, sigma).terms)
          << u.to_string() << " " << sigma.to_string();
    }
}

TEST(Borel, RejectsOtherTypes) {
  EXPECT_THROW(BorelPresentation(RootDatum::parse("C2")), UnsupportedType);
  BorelPresentation b(RootDatum::parse("A2"));
  EXPECT_THROW(b.eval(PolyS::one(3), E("213")), RankMismatch);
}
