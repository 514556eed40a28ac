#include <gtest/gtest.h>

#include "dgolod/error.hpp"
#include "dgolod/koszul.hpp"
#include "dgolod/parse.hpp"
#include "dgolod/random.hpp"

using namespace dgolod;

namespace {

const PolyRing R2 = PolyRing::standard(2);
const PolyRing R3 = PolyRing::standard(3);

MonomialIdeal mi(const PolyRing& r, std::vector<Monomial> g) { return MonomialIdeal(r, std::move(g)); }

const MonomialIdeal kPath = mi(R3, {Monomial{1, 1, 0}, Monomial{0, 1, 1}});
const MonomialIdeal kTriangle = mi(R3, {Monomial{1, 1, 0}, Monomial{1, 0, 1}, Monomial{0, 1, 1}});
const MonomialIdeal kSquare = mi(R2, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}});

std::vector<std::size_t> trimmed(std::vector<std::size_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

KoszulElement random_element(RandomSource& rng, const PolyRing& ring, std::size_t degree) {
  KoszulElement z(ring, degree);
  const std::size_t n = ring.nvars();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != degree || !rng.coin()) continue;
    z.add(mask, rng.element_of_max_ideal(ring, 3, 3) + ring.constant(rng.uniform(-2, 2)));
  }
  return z;
}

}  // namespace

TEST(Boundary, Examples) {
  const KoszulElement z = R3.var(1) * koszul_monomial(R3, {0, 2});
  EXPECT_EQ(format_koszul(z), "x2 dx1dx3");
  const KoszulElement expect = R3.term(Monomial{1, 1, 0}) * koszul_monomial(R3, {2}) -
                               R3.term(Monomial{0, 1, 1}) * koszul_monomial(R3, {0});
  EXPECT_EQ(koszul_boundary(z), expect);
  EXPECT_EQ(format_koszul(koszul_boundary(z)), "-x2*x3 dx1 + x1*x2 dx3");
  KoszulElement x1(R3, 0);
  x1.add(0, R3.var(0));
  EXPECT_EQ(koszul_boundary(koszul_monomial(R3, {0})), x1);
  EXPECT_THROW(koszul_boundary(x1), PreconditionError);
}

TEST(Boundary, WedgeSignAndRepeats) {
  EXPECT_EQ(koszul_monomial(R3, {2, 0}), -koszul_monomial(R3, {0, 2}));
  EXPECT_TRUE(koszul_monomial(R3, {1, 1}).is_zero());
}

TEST(Boundary, SquaresToZero) {
  RandomSource rng(11);
  const PolyRing r4 = PolyRing::standard(4);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t deg = rng.uniform(2, 4);
    const KoszulElement z = random_element(rng, r4, deg);
    EXPECT_TRUE(koszul_boundary(koszul_boundary(z)).is_zero());
  }
}

TEST(Boundary, RelabelCommutes) {
  RandomSource rng(5);
  const PolyRing r4 = PolyRing::standard(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Permutation s = rng.permutation(4);
    const KoszulElement z = random_element(rng, r4, rng.uniform(1, 4));
    EXPECT_EQ(relabel(koszul_boundary(z), s.images()), koszul_boundary(relabel(z, s.images())));
    EXPECT_EQ(relabel(relabel(z, s.images()), s.inverse().images()), z);
  }
}

TEST(Cycles, Principal) {
  const FreeComplex c = minimal_resolution(mi(R2, {Monomial{1, 1}}));
  EXPECT_EQ(format_koszul(build_cycle(c, 1, 0)), "x2 dx1");
}

TEST(Cycles, DegreeOneIsGradientLike) {
  const FreeComplex c = minimal_resolution(kTriangle);
  for (std::size_t j = 0; j < c.ranks[1]; ++j) {
    const Polynomial f = c.diff(1).at(0, j);
    KoszulElement expect(R3, 1);
    for (std::size_t r = 0; r < 3; ++r) expect.add(1u << r, d_op(f, r));
    EXPECT_EQ(build_cycle(c, 1, j), expect);
  }
}

TEST(Cycles, PathTopCycle) {
  const FreeComplex c = minimal_resolution(kPath);
  const KoszulChain chain = build_chain(c, 2, 0);
  EXPECT_EQ(format_koszul(chain.cycle()), "x2 dx1dx3");
  EXPECT_EQ(format_cycle(chain), "z[2][1] = x2 dx1dx3");
  ASSERT_EQ(chain.components.size(), 3u);
  EXPECT_EQ(chain.components[0].size(), 1u);
  EXPECT_EQ(chain.components[1].size(), 2u);
}

TEST(Cycles, ChainLevelOne) {
  const FreeComplex c = minimal_resolution(kPath);
  const KoszulChain chain = build_chain(c, 1, 1);
  ASSERT_EQ(chain.components.size(), 2u);
  EXPECT_EQ(chain.components[0][1].at(0), R3.one());
  EXPECT_TRUE(chain.components[0][0].is_zero());
  EXPECT_EQ(koszul_boundary(chain.cycle()).at(0), c.diff(1).at(0, 1));
}

TEST(Cycles, TriangleIdentitiesHold) {
  const FreeComplex c = minimal_resolution(kTriangle);
  ASSERT_EQ(c.ranks, (std::vector<std::size_t>{1, 3, 2}));
  for (std::size_t j = 0; j < 2; ++j) EXPECT_NO_THROW(build_chain(c, 2, j));
}

TEST(Cycles, NonMinimalInputRejected) {
  const FreeComplex t = taylor_complex(kTriangle);
  EXPECT_NO_THROW(build_cycle(t, 2, 0));
  EXPECT_THROW(build_cycle(t, 3, 0), NonMinimalResolution);
  EXPECT_THROW(build_cycle(t, 4, 0), PreconditionError);
}

TEST(Cycles, RandomChainsAllPermutations) {
  RandomSource rng(2024);
  const PolyRing r4 = PolyRing::standard(4);
  for (int trial = 0; trial < 15; ++trial) {
    const MonomialIdeal a = rng.monomial_ideal(r4, 4, 3);
    const FreeComplex c = minimal_resolution(a);
    const Permutation s = rng.permutation(4);
    for (std::size_t i = 1; i <= c.length(); ++i) {
      for (std::size_t j = 0; j < c.ranks[i]; ++j) {
        EXPECT_NO_THROW(build_chain(c, i, j)) << a;
        EXPECT_NO_THROW(build_chain(c, i, j, s)) << a << " sigma " << s.to_string();
      }
    }
  }
}

TEST(Homology, Examples) {
  EXPECT_EQ(koszul_homology(kPath).dims, (std::vector<std::size_t>{1, 2, 1, 0}));
  EXPECT_EQ(koszul_homology(kSquare).dims, (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(koszul_homology(mi(R2, {Monomial{1, 1}})).dims, (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(koszul_homology(kTriangle).dims, (std::vector<std::size_t>{1, 3, 2, 0}));
}

TEST(Homology, ReportShape) {
  const HomologyReport h = koszul_homology(kPath);
  EXPECT_TRUE(h.multigraded);
  EXPECT_TRUE(h.bound_confirmed);
  EXPECT_EQ(h.degree_bound, 3);
  EXPECT_EQ(h.basis.size(), 4u);
  EXPECT_EQ(h.by_degree.at(2), (std::vector<std::size_t>{0, 2, 0, 0}));
  EXPECT_EQ(h.by_degree.at(3), (std::vector<std::size_t>{0, 0, 1, 0}));
  const QuotientRing r(kPath);
  for (const auto& cls : h.basis) {
    if (cls.i == 0) continue;
    EXPECT_TRUE(reduce(koszul_boundary(cls.cycle), r).is_zero());
  }
}

TEST(Homology, SmallBoundDetected) {
  const HomologyReport h = koszul_homology(kPath, 2);
  EXPECT_FALSE(h.bound_confirmed);
  EXPECT_EQ(h.dims, (std::vector<std::size_t>{1, 2, 0, 0}));
}

TEST(Homology, PolynomialRingIsAcyclic) {
  const HomologyReport h = koszul_homology(MonomialIdeal::zero(R3), 6);
  EXPECT_EQ(h.dims, (std::vector<std::size_t>{1, 0, 0, 0}));
  EXPECT_TRUE(h.bound_confirmed);
}

TEST(Homology, MatchesBettiNumbers) {
  RandomSource rng(77);
  const PolyRing r4 = PolyRing::standard(4);
  for (int trial = 0; trial < 25; ++trial) {
    const MonomialIdeal a = rng.monomial_ideal(rng.coin() ? r4 : R3, 4, 3);
    const HomologyReport h = koszul_homology(a);
    EXPECT_TRUE(h.bound_confirmed) << a;
    EXPECT_EQ(trimmed(h.dims), betti_numbers(a)) << a;
  }
}

TEST(Homology, HomogeneousNonMonomial) {
  const IdealGens f(R2, {parse_polynomial("x1^2 + x2^2", R2)});
  const HomologyReport h = koszul_homology(f);
  EXPECT_FALSE(h.multigraded);
  EXPECT_EQ(h.dims, (std::vector<std::size_t>{1, 1, 0}));
  const IdealGens twisted(R3, {parse_polynomial("x1*x2 - x3^2", R3),
                               parse_polynomial("x2*x3", R3)});
  // A complete intersection; the leading ideal only bounds it from above.
  const auto dims = koszul_homology(twisted).dims;
  const auto lead = koszul_homology(QuotientRing(twisted).leading_ideal()).dims;
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 2, 1, 0}));
  for (std::size_t i = 0; i < dims.size(); ++i) EXPECT_LE(dims[i], lead[i]);
  const IdealGens inhomogeneous(R2, {parse_polynomial("x1^2 + x2", R2)});
  EXPECT_THROW(koszul_homology(inhomogeneous), Unsupported);
}

TEST(Basis, Examples) {
  for (const auto& a : {kPath, kTriangle, kSquare}) {
    const BasisReport rep = verify_basis(a);
    EXPECT_TRUE(rep.passed()) << a << ": " << rep.failure;
  }
  const BasisReport path = verify_basis(kPath);
  EXPECT_EQ(path.cycles[1].size(), 2u);
  EXPECT_EQ(path.cycles[2].size(), 1u);
  EXPECT_EQ(verify_basis(kSquare).betti, (std::vector<std::size_t>{1, 3, 2}));
}

TEST(Basis, SuppliedComplex) {
  const IdealGens f(R2, {parse_polynomial("x1^2 + x2^2", R2)});
  const FreeComplex c = parse_complex("complex\nranks: 1 1\ndiff 1:\nx1^2 + x2^2\n", R2);
  const BasisReport rep = verify_basis(c, f);
  EXPECT_TRUE(rep.passed()) << rep.failure;
  ASSERT_EQ(rep.cycles[1].size(), 1u);
  EXPECT_EQ(format_koszul(rep.cycles[1][0]), "x1 dx1 + x2 dx2");
}

TEST(Basis, RandomInstances) {
  RandomSource rng(3);
  const PolyRing r4 = PolyRing::standard(4);
  for (int trial = 0; trial < 15; ++trial) {
    const MonomialIdeal a = rng.monomial_ideal(r4, 4, 3);
    const BasisReport rep = verify_basis(a);
    EXPECT_TRUE(rep.passed()) << a << ": " << rep.failure;
  }
}

TEST(ZeroMap, Examples) {
  const MonomialIdeal a = mi(R2, {Monomial{1, 1}, Monomial{0, 2}});
  const ZeroMapReport rep = verify_zero_map(a, Permutation::identity(2));
  EXPECT_TRUE(rep.passed()) << rep.failure;
  ASSERT_FALSE(rep.entries.empty());
  for (const auto& e : rep.entries) {
    EXPECT_TRUE(e.member);
    EXPECT_TRUE(mi(R2, {Monomial{0, 1}}).contains(e.coefficient));
  }
  const ZeroMapReport path = verify_zero_map(kPath, Permutation::identity(3));
  EXPECT_TRUE(path.passed());
  bool saw_top = false;
  for (const auto& e : path.entries) {
    if (e.i == 2) {
      saw_top = true;
      EXPECT_EQ(e.coefficient, R3.var(1));
    }
  }
  EXPECT_TRUE(saw_top);
}

TEST(ZeroMap, EveryPermutation) {
  RandomSource rng(9);
  for (int trial = 0; trial < 8; ++trial) {
    const MonomialIdeal a = rng.monomial_ideal(R3, 4, 3);
    for (const auto& s : Permutation::all(3)) {
      const ZeroMapReport rep = verify_zero_map(a, s);
      EXPECT_TRUE(rep.passed()) << a << " sigma " << s.to_string() << ": " << rep.failure;
    }
  }
}

TEST(ZeroMap, NonMonomialSuppliedComplex) {
  const IdealGens f(R2, {parse_polynomial("x1^2 + x1*x2", R2)});
  const FreeComplex c = parse_complex("complex\nranks: 1 1\ndiff 1:\nx1^2 + x1*x2\n", R2);
  for (const auto& s : Permutation::all(2)) {
    const ZeroMapReport rep = verify_zero_map(c, f, s);
    EXPECT_TRUE(rep.passed()) << rep.failure;
  }
}
