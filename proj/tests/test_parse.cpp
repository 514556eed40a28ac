#include <gtest/gtest.h>

#include "dgolod/error.hpp"
#include "dgolod/parse.hpp"
#include "dgolod/monomial_ideal.hpp"
#include "dgolod/random.hpp"

using namespace dgolod;

namespace {

ParseError parse_failure(const std::string& text) {
  try {
    parse_ideal_file(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error for: " << text;
  return ParseError("none", 0, 0);
}

}  // namespace

TEST(IdealFile, PaperIdeal) {
  const IdealFile f = parse_ideal_file("ring Q[x1,x2]\nx1*x2\nx2^2");
  EXPECT_TRUE(f.ring.field().is_rational());
  ASSERT_EQ(f.ideal.gens().size(), 2u);
  EXPECT_EQ(f.ideal.gens()[0], f.ring.term(Monomial{1, 1}));
  EXPECT_EQ(f.ideal.gens()[1], f.ring.term(Monomial{0, 2}));
  EXPECT_FALSE(f.perm);
  EXPECT_FALSE(f.order);
}

TEST(IdealFile, PrimeField) {
  const IdealFile f = parse_ideal_file("ring F5[x,y]\nx^2+3*y^2");
  EXPECT_EQ(f.ring.field().characteristic(), 5u);
  EXPECT_EQ(f.ring.names(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(f.ring.format(f.ideal.gens()[0]), "x^2 + 3*y^2");
  // 8 = 3 mod 5
  const IdealFile g = parse_ideal_file("ring F5[x,y]\n(x+y)^2 - 2*x*y + 2*y^2 - 5*x");
  EXPECT_EQ(g.ideal.gens()[0], f.ideal.gens()[0]);
}

TEST(IdealFile, Headers) {
  const IdealFile f = parse_ideal_file("# comment\nring Q[a,b,c]\norder lex\nperm 3,1,2\n\na*b  # tail\nc^3\n");
  ASSERT_TRUE(f.order);
  EXPECT_EQ(*f.order, TermOrder::Lex);
  ASSERT_TRUE(f.perm);
  EXPECT_EQ(f.perm->to_string(), "3,1,2");
  EXPECT_EQ(f.ideal.gens().size(), 2u);
  const IdealFile r = parse_ideal_file("ring Q[a,b,c]\nperm reverse\na");
  EXPECT_EQ(r.perm->to_string(), "3,2,1");
}

TEST(IdealFile, FieldOverride) {
  const IdealFile f = parse_ideal_file("ring Q[x]\n9*x^2", Field::prime(7));
  EXPECT_EQ(f.ring.field().characteristic(), 7u);
  EXPECT_EQ(f.ring.format(f.ideal.gens()[0]), "2*x^2");
  EXPECT_THROW(parse_ideal_file("ring Q[x]\n7*x^2", Field::prime(7)), ParseError);
}

TEST(IdealFile, ConstantTermError) {
  const ParseError e = parse_failure("ring Q[x]\nx+1");
  EXPECT_EQ(e.line(), 2u);
  EXPECT_NE(std::string(e.what()).find("constant term"), std::string::npos);
  EXPECT_NE(std::string(e.what()).find("x + 1"), std::string::npos);
}

TEST(IdealFile, SyntaxErrorsCarryPositions) {
  const ParseError a = parse_failure("ring Q[x1,x2]\nx1*x2, x2^2");
  EXPECT_EQ(a.line(), 2u);
  EXPECT_EQ(a.column(), 6u);

  const ParseError b = parse_failure("ring Q[x1,x2]\nx1*\n");
  EXPECT_EQ(b.line(), 2u);

  const ParseError c = parse_failure("ring Q[x1,x2]\nx1 x2");
  EXPECT_EQ(c.line(), 2u);

  const ParseError d = parse_failure("ring Q[x1,x2]\nx1*x3");
  EXPECT_EQ(d.line(), 2u);
  EXPECT_EQ(d.column(), 4u);
  EXPECT_NE(std::string(d.what()).find("x3"), std::string::npos);

  const ParseError e = parse_failure("ring R[x]\nx");
  EXPECT_EQ(e.line(), 1u);

  EXPECT_THROW(parse_ideal_file("ring Q[x]\n"), ParseError);

  const ParseError g = parse_failure("ring Q[x]\n(x+x^2");
  EXPECT_EQ(g.line(), 2u);

  const ParseError h = parse_failure("ring Q[x]\nx/0");
  EXPECT_EQ(h.line(), 2u);

  const ParseError i = parse_failure("ring Q[x]\nx^y");
  EXPECT_EQ(i.line(), 2u);
}

TEST(IdealFile, RationalCoefficientsRoundTrip) {
  const IdealFile f = parse_ideal_file("ring Q[x,y]\nx/2 - 3*y^2/4");
  const IdealFile g = parse_ideal_file(format_ideal_file(f));
  EXPECT_EQ(f.ideal.gens(), g.ideal.gens());
}

TEST(IdealFile, RoundTrip) {
  RandomSource rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const Field field = trial % 2 ? Field::prime(32003) : Field::rationals();
    const PolyRing r = PolyRing::standard(n, field);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) {
      const Polynomial p = rng.element_of_max_ideal(r, 4, 4);
      if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    const std::optional<Permutation> perm =
        trial % 3 == 0 ? std::optional<Permutation>(Permutation::reverse(n)) : std::nullopt;
    const std::optional<TermOrder> order =
        trial % 5 == 0 ? std::optional<TermOrder>(TermOrder::Lex) : std::nullopt;
    const IdealFile f{r, IdealGens(r, gens), order, perm};
    const std::string text = format_ideal_file(f);
    const IdealFile g = parse_ideal_file(text);
    EXPECT_TRUE(g.ring == f.ring) << text;
    EXPECT_EQ(g.ideal.gens(), f.ideal.gens()) << text;
    EXPECT_EQ(g.order, f.order) << text;
    EXPECT_EQ(g.perm.has_value(), f.perm.has_value()) << text;
    if (g.perm) EXPECT_EQ(g.perm->images(), f.perm->images());
    EXPECT_EQ(format_ideal_file(g), text);
  }
}
