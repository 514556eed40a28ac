#include <gtest/gtest.h>

#include "dgolod/error.hpp"
#include "dgolod/linalg.hpp"
#include "dgolod/polynomial.hpp"
#include "dgolod/random.hpp"

using namespace dgolod;

namespace {

Polynomial x(const PolyRing& r, std::size_t i) { return r.var(i); }

}  // namespace

TEST(Scalar, PrimeFieldArithmetic) {
  const Field f5 = Field::prime(5);
  EXPECT_EQ(f5.from_int(2) * f5.from_int(3), f5.one());
  EXPECT_EQ(f5.from_int(-1), f5.from_int(4));
  EXPECT_EQ(f5.from_int(3).inverse() * f5.from_int(3), f5.one());
  EXPECT_THROW(Field::prime(6), PreconditionError);
  EXPECT_THROW(f5.zero().inverse(), PreconditionError);
}

TEST(Scalar, Rationals) {
  const Field q = Field::rationals();
  const Scalar half = q.from_rational(mpq_class(1, 2));
  EXPECT_EQ(half + half, q.one());
  EXPECT_EQ(half.to_string(), "1/2");
  EXPECT_EQ(Field::parse("F7"), Field::prime(7));
  EXPECT_EQ(Field::parse("Q"), q);
}

TEST(Monomial, OrdersAndDivision) {
  const Monomial a{2, 0, 1}, b{1, 1, 1};
  EXPECT_GT(compare(TermOrder::Lex, a, b), 0);
  // Same degree: grevlex looks at the last variable, equal, then x2: a has less, so a is bigger.
  EXPECT_GT(compare(TermOrder::Grevlex, a, b), 0);
  EXPECT_LT(compare(TermOrder::Grevlex, Monomial{0, 0, 1}, Monomial{1, 1, 0}), 0);
  EXPECT_EQ(lcm(a, b), (Monomial{2, 1, 1}));
  EXPECT_EQ(gcd(a, b), (Monomial{1, 0, 1}));
  EXPECT_TRUE(gcd(a, b).divides(a));
  EXPECT_EQ(a.min_var(), 0u);
  EXPECT_EQ(b.max_var(), 2u);
  EXPECT_EQ(Monomial{}.min_var(), kMaxVars);
  EXPECT_EQ(monomials_of_degree(3, 2).size(), 6u);
  EXPECT_EQ(divisors_of(Monomial{2, 1}, 2).size(), 6u);
}

TEST(PolyArith, Examples) {
  const PolyRing r = PolyRing::standard(2);
  const Polynomial f = x(r, 0) + x(r, 1), g = x(r, 0) - x(r, 1);
  EXPECT_EQ(poly_arith(ArithOp::Mul, f, g), x(r, 0) * x(r, 0) - x(r, 1) * x(r, 1));
  EXPECT_EQ(poly_arith(ArithOp::Mul, f, r.one()), f);
  const PolyRing r5 = PolyRing::standard(1, Field::prime(5));
  EXPECT_EQ(poly_arith(ArithOp::Mul, r5.term(Monomial{1}, 2), r5.term(Monomial{1}, 3)),
            r5.term(Monomial{2}));
  EXPECT_THROW(poly_arith(ArithOp::Add, f, r5.one()), RingMismatch);
  EXPECT_EQ(poly_arith(ArithOp::Sub, f, f), r.zero());
}

TEST(PolyArith, Formatting) {
  const PolyRing r = PolyRing::standard(3);
  const Polynomial f = r.term(Monomial{2, 0, 1}) - r.term(Monomial{0, 1, 0}, 3) + r.constant(5);
  EXPECT_EQ(r.format(f), "x1^2*x3 - 3*x2 + 5");
  EXPECT_EQ(r.format(r.zero()), "0");
  EXPECT_EQ(r.header(), "ring Q[x1,x2,x3]");
}

TEST(ZeroPrefixSub, PaperExample) {
  const PolyRing r = PolyRing::standard(4);
  const Polynomial f = r.term(Monomial{2, 0, 1, 0}) + r.term(Monomial{1, 3, 0, 0}) +
                       r.term(Monomial{0, 2, 3, 0}) + r.term(Monomial{0, 0, 2, 1});
  EXPECT_EQ(zero_prefix_sub(f, 1), r.term(Monomial{0, 2, 3, 0}) + r.term(Monomial{0, 0, 2, 1}));
  EXPECT_EQ(zero_prefix_sub(f, 0), f);
  EXPECT_EQ(zero_prefix_sub(f, 4), r.zero());
}

TEST(ExactDivVar, Examples) {
  const PolyRing r = PolyRing::standard(3);
  EXPECT_EQ(exact_div_var(r.term(Monomial{1, 0, 1}) + r.term(Monomial{1, 1, 0}), 0),
            x(r, 2) + x(r, 1));
  EXPECT_EQ(exact_div_var(r.term(Monomial{0, 2, 0}), 1), x(r, 1));
  try {
    exact_div_var(r.term(Monomial{2, 0, 1}), 1);
    FAIL() << "expected NotDivisible";
  } catch (const NotDivisible& e) {
    EXPECT_EQ(e.witness(), "x1^2*x3");
  }
}

class RingAxioms : public ::testing::TestWithParam<Field> {};

TEST_P(RingAxioms, RandomTriples) {
  const PolyRing r = PolyRing::standard(4, GetParam());
  RandomSource rs(11);
  for (int it = 0; it < 200; ++it) {
    const Polynomial a = rs.element_of_max_ideal(r, 4, 3) + r.constant(rs.uniform(-2, 2));
    const Polynomial b = rs.element_of_max_ideal(r, 4, 3);
    const Polynomial c = rs.element_of_max_ideal(r, 4, 3);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) - b, a);
    for (std::size_t v = 0; v < 4; ++v) {
      const Polynomial z = zero_prefix_sub(a, v);
      for (const auto& t : z.terms()) {
        for (std::size_t j = 0; j < v; ++j) EXPECT_EQ(t.mono[j], 0);
      }
      EXPECT_EQ(exact_div_var(a * x(r, v), v), a);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, RingAxioms,
                         ::testing::Values(Field::rationals(), Field::prime(kDefaultPrime)));

TEST(Linalg, RankAndKernel) {
  const Field q = Field::rationals();
  // Columns (1,2), (2,4), (0,1): rank 2, kernel spanned by (2,-1,0).
  SparseMatrix m{q, 2, {}};
  m.cols.push_back(make_sparse({{0, q.from_int(1)}, {1, q.from_int(2)}}));
  m.cols.push_back(make_sparse({{0, q.from_int(2)}, {1, q.from_int(4)}}));
  m.cols.push_back(make_sparse({{1, q.from_int(1)}}));
  EXPECT_EQ(rank(m), 2u);
  const auto ker = kernel_basis(m);
  ASSERT_EQ(ker.size(), 1u);
  // M * k = 0
  SparseVector prod;
  for (const auto& [j, c] : ker[0]) prod = axpy(prod, c, m.cols[j]);
  EXPECT_TRUE(prod.empty());
}

TEST(Linalg, RandomRankNullity) {
  RandomSource rs(5);
  const Field f = Field::prime(kDefaultPrime);
  for (int it = 0; it < 50; ++it) {
    const std::size_t rows = rs.uniform(1, 6), cols = rs.uniform(1, 6);
    SparseMatrix m{f, rows, {}};
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<std::pair<std::size_t, Scalar>> e;
      for (std::size_t i = 0; i < rows; ++i) {
        if (rs.coin(0.4)) e.push_back({i, f.from_int(rs.uniform(-3, 3))});
      }
      m.cols.push_back(make_sparse(e));
    }
    const auto ker = kernel_basis(m);
    EXPECT_EQ(rank(m) + ker.size(), cols);
    for (const auto& k : ker) {
      SparseVector prod;
      for (const auto& [j, c] : k) prod = axpy(prod, c, m.cols[j]);
      EXPECT_TRUE(prod.empty());
    }
  }
}
