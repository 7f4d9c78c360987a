#include <gtest/gtest.h>

#include "glidekit/error.hpp"
#include "glidekit/glides.hpp"
#include "glidekit/qsym.hpp"
#include "oracles.hpp"

using namespace glidekit;

namespace {

using Coords = std::map<Composition, Rational>;

WeakComposition str(const std::string& s) {
  std::vector<int> v;
  for (char c : s) v.push_back(c - '0');
  return WeakComposition(v);
}

}  // namespace

TEST(QSymElement, BoundDropsHighTerms) {
  QSymElement f(3);
  f.add_term(Composition({1, 3}), 1);
  f.add_term(Composition({2}), 5);
  f.add_term(Composition({2}), -5);
  EXPECT_TRUE(f.is_zero());
  f.add_term(Composition({1, 1}), Rational(1, 2));
  EXPECT_EQ(f.coefficient(Composition({1, 1})), Rational(1, 2));
  EXPECT_EQ(f.lowest_degree(), 2);
  const auto g = QSymElement::monomial(Composition({4})) + f;
  EXPECT_EQ(g.degree_bound(), 3);
  EXPECT_TRUE(g.coefficient(Composition({4})) == 0);
}

TEST(MToPolynomial, Examples) {
  SparsePoly f(3);
  for (const char* s : {"130", "103", "013"}) f.add_term(str(s), 1);
  EXPECT_EQ(m_to_polynomial(Composition({1, 3}), 3), f);
  EXPECT_EQ(m_to_polynomial(Composition(), 4), SparsePoly::constant(1, 4));
  EXPECT_EQ(m_to_polynomial(Composition({1, 1}), 2), SparsePoly::monomial(str("11")));
  EXPECT_TRUE(m_to_polynomial(Composition({1, 1, 1}), 2).is_zero());
}

TEST(MToPolynomial, MatchesSubsetOracle) {
  for (const auto& alpha : oracle::all_compositions(5)) {
    for (std::size_t n = 0; n <= 6; ++n) {
      EXPECT_EQ(oracle::from_sparse(m_to_polynomial(alpha, n)), oracle::monomial_qsym(alpha, n));
    }
  }
}

TEST(PolynomialToM, Examples) {
  EXPECT_EQ(polynomial_to_m(m_to_polynomial(Composition({1, 3}), 3), 3).coords(), (Coords{{Composition({1, 3}), 1}}));
  try {
    polynomial_to_m(SparsePoly::variable(0, 2), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotQuasisymmetric);
  }
  EXPECT_THROW(polynomial_to_m(SparsePoly(3), 2), Error);
  const auto g = polynomial_to_m(glide_polynomial(Composition({1, 3}), 4), 4);
  EXPECT_EQ(g.coords(), (Coords{{Composition({1, 3}), 1},
                                {Composition({1, 1, 3}), -1},
                                {Composition({1, 3, 3}), -1},
                                {Composition({1, 1, 1, 3}), 1},
                                {Composition({1, 1, 3, 3}), 1},
                                {Composition({1, 3, 3, 3}), 1}}));
}

TEST(PolynomialToM, RoundTrip) {
  oracle::Generator gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    QSymElement f;
    for (int t = 0; t < 3; ++t) f.add_term(gen.composition(5), Rational(gen.uniform(-4, 4), gen.uniform(1, 3)));
    const std::size_t n = 5;
    const auto poly = m_to_polynomial(f, n);
    EXPECT_TRUE(is_quasisymmetric(poly, n));
    EXPECT_EQ(m_to_polynomial(polynomial_to_m(poly, n), n), poly);
  }
}

TEST(OverlappingShuffle, Examples) {
  using Mult = std::map<Composition, Integer>;
  EXPECT_EQ(overlapping_shuffle(Composition({3}), Composition({1, 3})),
            (Mult{{Composition({3, 1, 3}), 1}, {Composition({1, 3, 3}), 2}, {Composition({4, 3}), 1}, {Composition({1, 6}), 1}}));
  EXPECT_EQ(overlapping_shuffle(Composition({2, 1}), Composition()), (Mult{{Composition({2, 1}), 1}}));
  EXPECT_EQ(overlapping_shuffle(Composition({1}), Composition({1})), (Mult{{Composition({1, 1}), 2}, {Composition({2}), 1}}));
}

TEST(OverlappingShuffle, MatchesSurjectionOracle) {
  const auto comps = oracle::all_compositions(4);
  for (const auto& a : comps) {
    for (const auto& b : comps) {
      EXPECT_EQ(overlapping_shuffle(a, b), oracle::shuffle_by_surjections(a, b)) << a << " * " << b;
    }
  }
}

TEST(MMultiply, Examples) {
  const auto p = m_multiply(QSymElement::monomial(Composition({3})), QSymElement::monomial(Composition({1, 3})));
  EXPECT_EQ(p.coords(), (Coords{{Composition({1, 6}), 1}, {Composition({4, 3}), 1}, {Composition({1, 3, 3}), 2}, {Composition({3, 1, 3}), 1}}));
  const auto f = QSymElement::monomial(Composition({2, 1}), Rational(3, 4));
  EXPECT_EQ(m_multiply(QSymElement::one(), f), f);
  const auto sq = m_multiply(QSymElement::monomial(Composition({1})), QSymElement::monomial(Composition({1})));
  EXPECT_EQ(sq.coords(), (Coords{{Composition({2}), 1}, {Composition({1, 1}), 2}}));
  EXPECT_EQ(oracle::from_sparse(m_to_polynomial(sq, 3)),
            oracle::multiply(oracle::monomial_qsym(Composition({1}), 3), oracle::monomial_qsym(Composition({1}), 3)));
}

TEST(MMultiply, MatchesPolynomialProduct) {
  const auto comps = oracle::all_compositions(6);
  for (const auto& a : comps) {
    for (const auto& b : comps) {
      if (a.size() + b.size() > 6) continue;
      const std::size_t n = a.length() + b.length() + 1;
      const auto prod = m_multiply(QSymElement::monomial(a), QSymElement::monomial(b));
      EXPECT_EQ(oracle::from_sparse(m_to_polynomial(prod, n)),
                oracle::multiply(oracle::monomial_qsym(a, n), oracle::monomial_qsym(b, n)));
    }
  }
}

TEST(MMultiply, CommutativeAndAssociative) {
  oracle::Generator gen(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = QSymElement::monomial(gen.composition(3), gen.uniform(1, 3));
    const auto b = QSymElement::monomial(gen.composition(3)) + QSymElement::monomial(gen.composition(2), -1);
    const auto c = QSymElement::monomial(gen.composition(3));
    EXPECT_EQ(m_multiply(a, b), m_multiply(b, a));
    EXPECT_EQ(m_multiply(m_multiply(a, b), c), m_multiply(a, m_multiply(b, c)));
  }
}

TEST(MMultiply, BoundIsTheSmaller) {
  const auto a = QSymElement::monomial(Composition({1}), 1, 3);
  const auto b = QSymElement::monomial(Composition({1, 1}), 1, 5);
  const auto p = m_multiply(a, b);
  EXPECT_EQ(p.degree_bound(), 3);
  EXPECT_EQ(p.coords(), (Coords{{Composition({1, 2}), 1}, {Composition({2, 1}), 1}, {Composition({1, 1, 1}), 3}}));
}

TEST(GlideInMBasis, MatchesGlidePolynomial) {
  for (const auto& alpha : oracle::all_compositions(4)) {
    const int D = 6;
    const auto g = glide_in_m_basis(alpha, D);
    EXPECT_EQ(g.degree_bound(), D);
    const auto from_poly = polynomial_to_m(glide_polynomial(alpha, D), D);
    EXPECT_EQ(g, from_poly.truncated(D)) << alpha;
  }
}

TEST(GlideExpand, Examples) {
  EXPECT_EQ(glide_expand(QSymElement::monomial(Composition({1})), 2), (Coords{{Composition({1}), 1}, {Composition({1, 1}), 1}}));
  const auto f = glide_in_m_basis(Composition({1, 3}), 4) + glide_in_m_basis(Composition({2}), 4);
  EXPECT_EQ(glide_expand(f, 4), (Coords{{Composition({2}), 1}, {Composition({1, 3}), 1}}));
  EXPECT_TRUE(glide_expand(QSymElement(), 5).empty());
}

TEST(GlideExpand, ResidualOfSingleBoxStartsInDegreeThree) {
  auto residual = QSymElement::monomial(Composition({1}), 1, 4) - glide_in_m_basis(Composition({1}), 4) -
                  glide_in_m_basis(Composition({1, 1}), 4);
  EXPECT_EQ(residual.lowest_degree(), 3);
}

TEST(GlideExpand, Triangular) {
  for (const auto& alpha : oracle::all_compositions(4)) {
    for (int D = alpha.size(); D <= 5; ++D) {
      EXPECT_EQ(glide_expand(glide_in_m_basis(alpha, D), D), (Coords{{alpha, 1}}));
      const auto from_poly = polynomial_to_m(glide_polynomial(alpha, static_cast<std::size_t>(D)), static_cast<std::size_t>(D));
      EXPECT_EQ(glide_expand(from_poly, D), (Coords{{alpha, 1}}));
    }
  }
}

TEST(GlideExpand, ReconstructsInput) {
  oracle::Generator gen(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int D = 5;
    QSymElement f(D);
    for (int t = 0; t < 3; ++t) f.add_term(gen.composition(4), gen.uniform(-3, 3));
    QSymElement rebuilt(D);
    for (const auto& [alpha, c] : glide_expand(f, D)) rebuilt += glide_in_m_basis(alpha, D) * c;
    EXPECT_EQ(rebuilt, f);
  }
}

TEST(GlideStructureConstants, SingleBoxSquared) {
  EXPECT_EQ(glide_structure_constants(Composition({1}), Composition({1}), 2),
            (Coords{{Composition({2}), 1}, {Composition({1, 1}), 2}}));
}

TEST(GlideStructureConstants, MatchesPolynomialRoute) {
  const auto comps = oracle::all_compositions(3);
  const int D = 4;
  for (const auto& a : comps) {
    for (const auto& b : comps) {
      const auto prod = glide_polynomial(a, D) * glide_polynomial(b, D);
      const auto f = polynomial_to_m(prod, D).truncated(D);
      EXPECT_EQ(glide_structure_constants(a, b, D), glide_expand(f, D)) << a << " * " << b;
    }
  }
}

TEST(GlideStructureConstants, StableInDegreeBoundAndUnital) {
  const auto comps = oracle::all_compositions(3);
  for (const auto& a : comps) {
    for (const auto& b : comps) {
      const auto lo = glide_structure_constants(a, b, 4);
      Coords hi;
      for (const auto& [g, c] : glide_structure_constants(a, b, 5)) {
        if (g.size() <= 4) hi[g] = c;
      }
      EXPECT_EQ(lo, hi);
    }
    EXPECT_EQ(glide_structure_constants(Composition(), a, 5), (Coords{{a, 1}}));
  }
}
