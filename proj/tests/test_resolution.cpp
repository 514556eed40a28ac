#include <gtest/gtest.h>

#include <algorithm>

#include "dgolod/error.hpp"
#include "dgolod/parse.hpp"
#include "dgolod/random.hpp"
#include "dgolod/resolution.hpp"

using namespace dgolod;

namespace {

const PolyRing R2 = PolyRing::standard(2);
const PolyRing R3 = PolyRing::standard(3);

MonomialIdeal mi(const PolyRing& r, std::vector<Monomial> g) { return MonomialIdeal(r, std::move(g)); }

const MonomialIdeal kPath = mi(R3, {Monomial{1, 1, 0}, Monomial{0, 1, 1}});
const MonomialIdeal kTriangle = mi(R3, {Monomial{1, 1, 0}, Monomial{1, 0, 1}, Monomial{0, 1, 1}});

}  // namespace

TEST(Taylor, PathIdeal) {
  const FreeComplex t = taylor_complex(kPath);
  EXPECT_EQ(t.ranks, (std::vector<std::size_t>{1, 2, 1}));
  // Generators are stored grevlex-descending: x1*x2 before x2*x3.
  EXPECT_EQ(t.diff(1).at(0, 0), R3.term(Monomial{1, 1, 0}));
  EXPECT_EQ(t.diff(1).at(0, 1), R3.term(Monomial{0, 1, 1}));
  EXPECT_EQ(t.diff(2).at(0, 0), R3.var(2));
  EXPECT_EQ(t.diff(2).at(1, 0), -R3.var(0));
  EXPECT_TRUE((t.diff(1) * t.diff(2)).is_zero());
  EXPECT_TRUE(minimality_report(t).minimal);
  EXPECT_EQ(minimalize(t).diffs, t.diffs);
}

TEST(Taylor, PrincipalAndTriangle) {
  const auto p = mi(R2, {Monomial{1, 1}});
  const FreeComplex t = taylor_complex(p);
  EXPECT_EQ(t.ranks, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(t.diff(1).at(0, 0), R2.term(Monomial{1, 1}));
  EXPECT_EQ(minimalize(t).ranks, t.ranks);

  const FreeComplex tt = taylor_complex(kTriangle);
  EXPECT_EQ(tt.ranks, (std::vector<std::size_t>{1, 3, 3, 1}));
  for (const auto& l : tt.labels[2]) EXPECT_EQ(l, (Monomial{1, 1, 1}));
  EXPECT_EQ(tt.labels[3][0], (Monomial{1, 1, 1}));
  EXPECT_FALSE(minimality_report(tt).minimal);
  const FreeComplex m = minimalize(tt);
  EXPECT_EQ(m.ranks, (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_TRUE(minimality_report(m).minimal);
  EXPECT_TRUE(validate_complex(m, kTriangle.to_gens()).passed());
}

TEST(Betti, Examples) {
  EXPECT_EQ(betti_numbers(kPath), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(betti_numbers(mi_power(MonomialIdeal::maximal(R2), 2)), (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(betti_numbers(mi(R2, {Monomial{2, 1}})), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(betti_numbers(MonomialIdeal::maximal(R3)), (std::vector<std::size_t>{1, 3, 3, 1}));
}

TEST(Validate, TaylorPassesAndCorruptionFails) {
  const FreeComplex t = taylor_complex(kTriangle);
  const auto ok = validate_complex(t, kTriangle.to_gens());
  EXPECT_TRUE(ok.passed()) << ok.failure;
  EXPECT_FALSE(ok.minimality.minimal);
  EXPECT_EQ(ok.exactness_scope, "multidegree");

  FreeComplex bad = t;
  bad.diffs[1].set(0, 0, -bad.diff(2).at(0, 0));
  const auto r = validate_complex(bad, kTriangle.to_gens());
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.delta_squared_zero);

  // Right differential shape, wrong ideal.
  const auto wrong = validate_complex(t, kPath.to_gens());
  EXPECT_FALSE(wrong.cokernel_ok);

  // A non-exact complex: drop the top of the path resolution.
  FreeComplex trunc = taylor_complex(kPath);
  trunc.ranks.pop_back();
  trunc.diffs.pop_back();
  trunc.labels.pop_back();
  trunc.degrees.pop_back();
  const auto ne = validate_complex(trunc, kPath.to_gens());
  EXPECT_TRUE(ne.delta_squared_zero);
  EXPECT_FALSE(ne.exact);
}

TEST(Validate, GradedFallbackAgrees) {
  FreeComplex t = minimal_resolution(kTriangle);
  t.labels.clear();
  const auto rep = validate_complex(t, kTriangle.to_gens());
  EXPECT_TRUE(rep.passed()) << rep.failure;
  EXPECT_EQ(rep.exactness_scope, "degree <= 3");
}

TEST(ComplexText, RoundTrip) {
  const FreeComplex t = taylor_complex(kTriangle);
  const std::string text = format_complex(t);
  const FreeComplex back = parse_complex(text, R3);
  EXPECT_EQ(back.ranks, t.ranks);
  EXPECT_EQ(back.diffs, t.diffs);
  EXPECT_EQ(back.labels, t.labels);
  EXPECT_EQ(back.degrees, t.degrees);
  EXPECT_EQ(format_complex(back), text);
  EXPECT_EQ(format_complex(taylor_complex(kPath)),
            "complex\nranks: 1 2 1\ndiff 1:\nx1*x2, x2*x3\ndiff 2:\nx3\n-x1\n");
}

TEST(ComplexText, Errors) {
  EXPECT_THROW(parse_complex("cmplx\n", R3), ParseError);
  EXPECT_THROW(parse_complex("complex\nranks: 1 2\ndiff 1:\nx1\n", R3), ParseError);
  try {
    parse_complex("complex\nranks: 1 1\ndiff 1:\nx1*y\n", R3);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 4u);
  }
}

TEST(Resolution, RandomInstancesValidate) {
  RandomSource rs(12);
  for (int it = 0; it < 40; ++it) {
    const PolyRing r = PolyRing::standard(rs.uniform(2, 4));
    const MonomialIdeal a = rs.monomial_ideal(r, 5, 4);
    const FreeComplex t = taylor_complex(a);
    const auto vt = validate_complex(t, a.to_gens());
    EXPECT_TRUE(vt.passed()) << a << ": " << vt.failure;
    const FreeComplex m = minimalize(t);
    const auto vm = validate_complex(m, a.to_gens());
    EXPECT_TRUE(vm.passed()) << a << ": " << vm.failure;
    EXPECT_TRUE(vm.minimality.minimal);
    EXPECT_TRUE(m.multigraded());
    // Homogeneous entries of the right degree.
    FreeComplex copy = m;
    infer_gradings(copy);
    EXPECT_EQ(copy.degrees, m.degrees);
    // Rank stability under generator shuffles.
    std::vector<Monomial> g = a.gens();
    std::shuffle(g.begin(), g.end(), rs.engine());
    EXPECT_EQ(minimalize(taylor_complex(a, g)).ranks, m.ranks);
  }
}
