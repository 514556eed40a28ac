#include <gtest/gtest.h>

#include <algorithm>

#include "dgolod/error.hpp"
#include "dgolod/groebner.hpp"
#include "dgolod/monomial_ideal.hpp"
#include "dgolod/random.hpp"

using namespace dgolod;

TEST(Buchberger, MonomialsAreTheirOwnBasis) {
  const PolyRing r = PolyRing::standard(2);
  const auto gb = buchberger(IdealGens(r, {r.var(0), r.var(1)}), TermOrder::Lex);
  ASSERT_EQ(gb.basis.size(), 2u);
  EXPECT_EQ(gb.basis[0], r.var(0));
  EXPECT_EQ(gb.basis[1], r.var(1));
}

TEST(Buchberger, TwistedCubic) {
  const PolyRing r = PolyRing::standard(3);
  const Polynomial x1 = r.var(0), x2 = r.var(1), x3 = r.var(2);
  const IdealGens ideal(r, {x1 * x1 - x2, x1 * x1 * x1 - x3});
  const std::vector<Polynomial> three{x1 * x1 - x2, x1 * x2 - x3, x2 * x2 - x1 * x3};

  const auto grevlex = buchberger(ideal, TermOrder::Grevlex);
  ASSERT_EQ(grevlex.basis.size(), 3u);
  for (const auto& e : three) {
    EXPECT_NE(std::find(grevlex.basis.begin(), grevlex.basis.end(), e), grevlex.basis.end())
        << to_string(e);
  }

  // In lex the leading term of x2^2 - x1*x3 is x1*x3, and x2^3 - x3^2 is needed as well.
  const auto lex = buchberger(ideal, TermOrder::Lex);
  ASSERT_EQ(lex.basis.size(), 4u);
  const std::vector<Polynomial> lex_monic{x1 * x1 - x2, x1 * x2 - x3, x1 * x3 - x2 * x2};
  for (const auto& e : lex_monic) {
    EXPECT_NE(std::find(lex.basis.begin(), lex.basis.end(), e), lex.basis.end()) << to_string(e);
  }
  const Polynomial extra = x2 * x2 * x2 - x3 * x3;
  EXPECT_NE(std::find(lex.basis.begin(), lex.basis.end(), extra), lex.basis.end());
  // Explicit certificate of membership: x2^3 - x3^2 = (x3 + x1*x2)(x1*x2 - x3) - x2^2 (x1^2 - x2).
  EXPECT_EQ((x3 + x1 * x2) * (x1 * x2 - x3) - x2 * x2 * (x1 * x1 - x2), extra);
  const auto three_gb = buchberger(IdealGens(r, three), TermOrder::Lex);
  EXPECT_TRUE(ideal_contains(three_gb, extra));
  for (const auto& g : lex.basis) EXPECT_TRUE(ideal_contains(grevlex, g));
  for (const auto& g : grevlex.basis) EXPECT_TRUE(ideal_contains(lex, g));
}

TEST(Buchberger, RejectsConstantTerm) {
  const PolyRing r = PolyRing::standard(1);
  EXPECT_THROW(buchberger(IdealGens(r, {r.var(0) * r.var(0) - r.one()})), PreconditionError);
}

TEST(Buchberger, BudgetIsEnforced) {
  const PolyRing r = PolyRing::standard(3);
  const Polynomial x1 = r.var(0), x2 = r.var(1), x3 = r.var(2);
  EXPECT_THROW(buchberger(IdealGens(r, {x1 * x1 - x2, x1 * x1 * x1 - x3}), TermOrder::Lex, 1),
               ResourceLimit);
}

TEST(NormalForm, Examples) {
  const PolyRing r = PolyRing::standard(2);
  const Polynomial x1 = r.var(0), x2 = r.var(1);
  const auto gb = buchberger(IdealGens(r, {x1 * x1 - x2}));
  EXPECT_EQ(normal_form(x1 * x1 * x1, gb), x1 * x2);
  EXPECT_EQ(normal_form(x1 * x1 - x2, gb), r.zero());
  EXPECT_EQ(normal_form(r.constant(7), gb), r.constant(7));
}

TEST(IdealSubset, Examples) {
  const PolyRing r = PolyRing::standard(2);
  const Polynomial x1 = r.var(0), x2 = r.var(1);
  EXPECT_TRUE(ideal_subset(IdealGens(r, {x1 * x2}), IdealGens(r, {x1})).holds);
  const auto no = ideal_subset(IdealGens(r, {x1}), IdealGens(r, {x1 * x2}));
  EXPECT_FALSE(no.holds);
  EXPECT_EQ(*no.witness, x1);
  EXPECT_TRUE(ideal_subset(IdealGens(r, {x2 * x2}), IdealGens(r, {x1 * x2, x2 * x2})).holds);
}

TEST(Groebner, IdealPropertySpotCheck) {
  RandomSource rs(3);
  const PolyRing r = PolyRing::standard(3, Field::prime(kDefaultPrime));
  for (int it = 0; it < 30; ++it) {
    std::vector<Polynomial> g;
    for (int k = 0; k < 3; ++k) g.push_back(rs.element_of_max_ideal(r, 3, 3));
    const IdealGens ideal(r, g);
    const auto gb = buchberger(ideal);
    for (int t = 0; t < 5; ++t) {
      const Polynomial f = rs.element_of_max_ideal(r, 3, 3);
      const Polynomial fm = f.times(rs.monomial(3, 0, 2), r.field().one());
      if (ideal_contains(gb, f)) {
        EXPECT_TRUE(ideal_contains(gb, fm));
      }
      EXPECT_TRUE(ideal_contains(gb, g[t % 3].times(rs.monomial(3, 0, 2), r.field().one())));
    }
  }
}

TEST(Groebner, IndependentOfGeneratorOrder) {
  RandomSource rs(4);
  const PolyRing r = PolyRing::standard(3);
  for (int it = 0; it < 20; ++it) {
    std::vector<Polynomial> g;
    for (int k = 0; k < 3; ++k) g.push_back(rs.element_of_max_ideal(r, 3, 3));
    const auto a = buchberger(IdealGens(r, g));
    std::shuffle(g.begin(), g.end(), rs.engine());
    const auto b = buchberger(IdealGens(r, g));
    EXPECT_EQ(a.basis, b.basis);
  }
}

TEST(Groebner, MonomialSubsetAgreesWithDivisibility) {
  RandomSource rs(8);
  const PolyRing r = PolyRing::standard(3);
  for (int it = 0; it < 100; ++it) {
    const MonomialIdeal a = rs.monomial_ideal(r, 4, 4), b = rs.monomial_ideal(r, 4, 4);
    const bool fast = ideal_subset(a.to_gens(), b.to_gens()).holds;
    EXPECT_EQ(fast, b.contains(a));
    EXPECT_EQ(fast, ideal_subset(a.to_gens(), buchberger(b.to_gens())).holds);
  }
}
