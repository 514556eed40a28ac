#include <gtest/gtest.h>

#include "dgolod/error.hpp"
#include "dgolod/golod.hpp"
#include "dgolod/parse.hpp"
#include "dgolod/poincare.hpp"
#include "dgolod/random.hpp"

using namespace dgolod;

namespace {

const PolyRing R1 = PolyRing::standard(1);
const PolyRing R2 = PolyRing::standard(2);
const PolyRing R3 = PolyRing::standard(3);

MonomialIdeal mi(const PolyRing& r, std::vector<Monomial> g) { return MonomialIdeal(r, std::move(g)); }

TruncatedSeries ts(int n, std::vector<long> c) { return TruncatedSeries(n, c); }

std::vector<long> as_longs(const TruncatedSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coeffs()) out.push_back(c.get_si());
  return out;
}

const TruncatedSeries kOneMinusT = ts(4, {1, -1});

}  // namespace

TEST(Series, Arithmetic) {
  EXPECT_EQ(as_longs(inverse(kOneMinusT)), (std::vector<long>{1, 1, 1, 1, 1}));
  EXPECT_EQ(as_longs(ts(2, {1, 1}) * ts(2, {1, -1})), (std::vector<long>{1, 0, -1}));
  EXPECT_THROW(inverse(ts(3, {2, 1})), PreconditionError);
  EXPECT_EQ(series_op(SeriesOp::Add, ts(2, {1, 2}), ts(3, {0, 1, 1})), ts(2, {1, 3, 1}));
  EXPECT_EQ(series_op(SeriesOp::Inv, kOneMinusT), inverse(kOneMinusT));
  EXPECT_EQ(inverse(inverse(ts(5, {-1, 3, 0, 2}))), ts(5, {-1, 3, 0, 2}));
  EXPECT_TRUE(coefficientwise_leq(ts(3, {1, 2}), ts(3, {1, 2, 0, 1})));
  EXPECT_FALSE(coefficientwise_leq(ts(3, {1, 3}), ts(3, {1, 2})));
}

TEST(Series, Printing) {
  EXPECT_EQ(to_string(ts(3, {1, 2, 4, 8})), "1 + 2t + 4t^2 + 8t^3 + O(t^4)");
  EXPECT_EQ(to_string(ts(2, {1, 0, -1})), "1 - t^2 + O(t^3)");
  EXPECT_EQ(to_string(TruncatedSeries(1)), "O(t^2)");
}

TEST(Series, SerreBound) {
  EXPECT_EQ(as_longs(serre_bound({1, 3, 2}, 2, 5)), (std::vector<long>{1, 2, 4, 8, 16, 32}));
  EXPECT_EQ(as_longs(serre_bound({1, 1}, 1, 4)), (std::vector<long>{1, 1, 1, 1, 1}));
  EXPECT_EQ(as_longs(serre_bound({1}, 3, 5)), (std::vector<long>{1, 3, 3, 1, 0, 0}));
}

TEST(Series, Sally) {
  EXPECT_EQ(as_longs(sally_series(3, 3, 3)), (std::vector<long>{1, 3, 9, 27}));
  EXPECT_EQ(as_longs(sally_series(3, 2, 4)), (std::vector<long>{1, 3, 8, 21, 55}));
  EXPECT_EQ(as_longs(sally_series(1, 1, 3)), (std::vector<long>{1, 1, 1, 1}));
}

TEST(Hilbert, Examples) {
  const MonomialIdeal sq = mi(R2, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}});
  EXPECT_EQ(as_longs(hilbert_series(sq, 4)), (std::vector<long>{1, 2, 0, 0, 0}));
  EXPECT_EQ(as_longs(hilbert_series(MonomialIdeal::zero(R3), 4)),
            (std::vector<long>{1, 3, 6, 10, 15}));
  const auto st = MonomialIdeal::from_gens(stretched_ideal(3, 3, true));
  EXPECT_EQ(as_longs(hilbert_series(st, 5)), (std::vector<long>{1, 3, 1, 1, 0, 0}));
}

TEST(PoincareK, Examples) {
  const MonomialIdeal sq = mi(R2, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}});
  const PoincareResult a = poincare_k(sq, 8, 8);
  EXPECT_EQ(as_longs(a.series), (std::vector<long>{1, 2, 4, 8, 16, 32, 64, 128, 256}));
  EXPECT_TRUE(a.artinian);
  EXPECT_EQ(as_longs(poincare_k(mi(R1, {Monomial{2}}), 5, 5).series),
            (std::vector<long>{1, 1, 1, 1, 1, 1}));
  const PoincareResult k = poincare_k(MonomialIdeal::maximal(R3), 3, 3);
  EXPECT_EQ(as_longs(k.series), (std::vector<long>{1, 0, 0, 0}));
  EXPECT_EQ(k.achieved, 3);
}

TEST(PoincareK, PolynomialRingIsKoszul) {
  const PoincareResult p = poincare_k(QuotientRing(MonomialIdeal::zero(R3)), 5, 5);
  EXPECT_EQ(as_longs(p.series), (std::vector<long>{1, 3, 3, 1, 0, 0}));
  ASSERT_TRUE(p.degree_bound.has_value());
}

TEST(PoincareK, HmaxAndBudget) {
  const MonomialIdeal sq = mi(R2, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}});
  const PoincareResult a = poincare_k(sq, 8, 3);
  EXPECT_EQ(a.achieved, 3);
  EXPECT_EQ(a.series.trunc(), 3);
  const PoincareResult b = poincare_k(QuotientRing(sq), 8, 8, std::nullopt, 10);
  EXPECT_FALSE(b.note.empty());
  EXPECT_LT(b.achieved, 8);
  EXPECT_EQ(as_longs(b.series), (std::vector<long>{1, 2, 4, 8}));
}

TEST(PoincareK, NonMonomialMatchesLeadingIdealCase) {
  // (x1^2 + x2^2) is a hypersurface: P = (1+t)/(1-t^2) in two variables.
  const IdealGens f(R2, {parse_polynomial("x1^2 + x2^2", R2)});
  const PoincareResult p = poincare_k(QuotientRing(f), 5, 5);
  EXPECT_EQ(as_longs(p.series), (std::vector<long>{1, 2, 2, 2, 2, 2}));
  const IdealGens inhomogeneous(R2, {parse_polynomial("x1^2 + x2^3", R2)});
  EXPECT_THROW(poincare_k(QuotientRing(inhomogeneous), 3, 3), Unsupported);
}

TEST(PoincareK, StretchedMatchesSally) {
  for (std::size_t n : {2u, 3u}) {
    for (int s : {2, 3}) {
      const auto st = MonomialIdeal::from_gens(stretched_ideal(n, s, true));
      const auto prof = ring_profile(st);
      EXPECT_EQ(prof.tau, n);
      EXPECT_EQ(poincare_k(st, 6, 6).series, sally_series(n, prof.tau, 6)) << st;
    }
  }
}

TEST(Golod, Equality) {
  const MonomialIdeal sq = mi(R2, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}});
  const GolodEquality g = golod_equality(sq, 8);
  EXPECT_TRUE(g.equal);
  EXPECT_TRUE(g.leq_everywhere);
  EXPECT_NE(g.summary.find("Golod-consistent to degree 8"), std::string::npos);
  const GolodEquality h = golod_equality(mi(R1, {Monomial{2}}), 8);
  EXPECT_TRUE(h.equal);
  for (int k = 2; k <= 3; ++k) {
    const GolodEquality p = golod_equality(mi_power(MonomialIdeal::maximal(R3), k), 6);
    EXPECT_TRUE(p.equal) << k;
  }
}

TEST(Golod, CompleteIntersectionIsNotGolod) {
  const MonomialIdeal ci = mi(R2, {Monomial{2, 0}, Monomial{0, 2}});
  const GolodEquality g = golod_equality(ci, 6);
  EXPECT_TRUE(g.leq_everywhere);
  EXPECT_FALSE(g.equal);
  EXPECT_EQ(as_longs(g.computed.series), (std::vector<long>{1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(g.equal_up_to, 2);
  EXPECT_LT(g.computed.series[3], g.serre[3]);
}

TEST(Golod, SerreInequalityRandom) {
  RandomSource rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const MonomialIdeal a = rng.monomial_ideal(rng.coin() ? R2 : R3, 3, 3);
    if (!a.is_proper()) continue;
    const GolodEquality g = golod_equality(a, 5);
    EXPECT_TRUE(g.leq_everywhere) << a;
    EXPECT_EQ(g.computed.series[0], 1);
    if (g.computed.achieved >= 1) {
      EXPECT_EQ(g.computed.series[1], static_cast<long>(QuotientRing(a).basis(1).size())) << a;
    }
  }
}

TEST(Profile, Examples) {
  const auto art = ring_profile(MonomialIdeal::from_gens(stretched_ideal(3, 3, true)));
  EXPECT_TRUE(art.artinian);
  EXPECT_EQ(art.tau, 3u);
  EXPECT_EQ(art.s, 3);
  EXPECT_TRUE(art.stretched);
  EXPECT_FALSE(art.degenerate);
  const auto open = ring_profile(MonomialIdeal::from_gens(stretched_ideal(3, 3, false)));
  EXPECT_FALSE(open.artinian);
  EXPECT_EQ(open.tau, 2u);
  EXPECT_TRUE(open.stretched);
  EXPECT_TRUE(open.tau_degree_bound.has_value());
  const auto hyp = ring_profile(mi(R1, {Monomial{2}}));
  EXPECT_EQ(hyp.tau, 1u);
  EXPECT_EQ(hyp.s, 1);
  EXPECT_TRUE(hyp.artinian);
  const auto sq = ring_profile(mi(R2, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}}));
  EXPECT_TRUE(sq.stretched);
  EXPECT_TRUE(sq.degenerate);
  EXPECT_EQ(sq.tau, 2u);
}

TEST(Profile, NonMonomialSocle) {
  // K[x1,x2]/(x1^2 - x2^2, x1*x2) has Hilbert series 1, 2, 1 and a one-dimensional socle.
  const IdealGens g(R2, {parse_polynomial("x1^2 - x2^2", R2), parse_polynomial("x1*x2", R2)});
  const QuotientRing r(g);
  const auto p = ring_profile(r);
  EXPECT_TRUE(p.artinian);
  EXPECT_EQ(p.tau, 1u);
  EXPECT_EQ(p.s, 2);
  EXPECT_EQ(as_longs(hilbert_series(r, 3)), (std::vector<long>{1, 2, 1, 0}));
}
