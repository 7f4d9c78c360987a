#include <gtest/gtest.h>

#include "glidekit/error.hpp"
#include "glidekit/rational.hpp"
#include "glidekit/sparse_poly.hpp"
#include "oracles.hpp"

using namespace glidekit;

namespace {

SparsePoly poly(std::size_t n, std::initializer_list<std::pair<std::vector<int>, Rational>> terms) {
  SparsePoly f(n);
  for (const auto& [e, c] : terms) f.add_term(WeakComposition(e), c);
  return f;
}

}  // namespace

TEST(Rational, ParsesAndPrints) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-7")), "-7");
  EXPECT_EQ(to_string(parse_rational("+2/2")), "1");
  for (const char* bad : {"", "1/", "/2", "1/0", "1/-2", "a", "1.5", "--1"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
}

TEST(Rational, BinomialAndFactorial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(factorial(6), 720);
}

TEST(SparsePoly, DropsZerosAndCancels) {
  SparsePoly f(2);
  f.add_term(WeakComposition{1, 0}, 3);
  f.add_term(WeakComposition{1, 0}, -3);
  f.add_term(WeakComposition{0, 1}, 0);
  EXPECT_TRUE(f.is_zero());
  EXPECT_THROW(f.add_term(WeakComposition{1}, 1), Error);
}

TEST(SparsePoly, GradedLexIteration) {
  const auto f = poly(2, {{{0, 2}, 1}, {{1, 0}, 1}, {{0, 0}, 1}, {{1, 1}, 1}});
  std::vector<std::vector<int>> order;
  for (const auto& [w, c] : f.terms()) order.push_back(w.vec());
  EXPECT_EQ(order, (std::vector<std::vector<int>>{{0, 0}, {1, 0}, {0, 2}, {1, 1}}));
}

TEST(SparsePoly, MultiplicationMatchesOracle) {
  oracle::Generator gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    SparsePoly a(3);
    SparsePoly b(3);
    for (int t = 0; t < 4; ++t) {
      a.add_term(WeakComposition{gen.uniform(0, 2), gen.uniform(0, 2), gen.uniform(0, 2)}, Rational(gen.uniform(-3, 3), 2));
      b.add_term(WeakComposition{gen.uniform(0, 2), gen.uniform(0, 2), gen.uniform(0, 2)}, gen.uniform(-3, 3));
    }
    EXPECT_EQ(oracle::from_sparse(a * b), oracle::multiply(oracle::from_sparse(a), oracle::from_sparse(b)));
  }
}

TEST(SparsePoly, ReduceRestrictExtend) {
  const auto f = poly(3, {{{2, 0, 0}, 1}, {{1, 1, 0}, 2}, {{0, 0, 1}, 5}});
  EXPECT_EQ(f.reduce_exponents(1), poly(3, {{{1, 1, 0}, 2}, {{0, 0, 1}, 5}}));
  EXPECT_EQ(f.restrict_vars(2), poly(2, {{{2, 0}, 1}, {{1, 1}, 2}}));
  EXPECT_EQ(f.restrict_vars(2).extend_vars(3), poly(3, {{{2, 0, 0}, 1}, {{1, 1, 0}, 2}}));
}

TEST(SparsePoly, DegreesAndHomogeneousParts) {
  const auto f = poly(2, {{{0, 1}, 1}, {{2, 1}, -1}, {{1, 0}, 4}});
  EXPECT_EQ(f.degree(), 3);
  EXPECT_EQ(f.lowest_degree(), 1);
  EXPECT_EQ(f.homogeneous_part(1), poly(2, {{{0, 1}, 1}, {{1, 0}, 4}}));
  EXPECT_FALSE(SparsePoly(2).degree().has_value());
}

TEST(SparsePoly, PowAndPrinting) {
  const SparsePoly y = SparsePoly::variable(0, 1);
  const SparsePoly one_minus_y = SparsePoly::constant(1, 1) - y;
  EXPECT_EQ(one_minus_y.pow(2), poly(1, {{{0}, 1}, {{1}, -2}, {{2}, 1}}));
  EXPECT_EQ(to_string(poly(3, {{{1, 3, 0}, 1}, {{0, 0, 1}, Rational(-1, 2)}})), "-1/2*y3 + y1*y2^3");
  EXPECT_EQ(to_string(SparsePoly(2)), "0");
}
