#include <gtest/gtest.h>

#include <functional>

#include "glidekit/error.hpp"
#include "glidekit/glides.hpp"
#include "glidekit/ktheory.hpp"
#include "glidekit/qsym.hpp"
#include "oracles.hpp"

using namespace glidekit;

namespace {

WeakComposition str(const std::string& s) {
  std::vector<int> v;
  for (char c : s) v.push_back(c - '0');
  return WeakComposition(v);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParse;
}

// Compositions with every part <= m and length <= n: the cells of the
// n-th filtration stage over P^m.
std::vector<Composition> cells(std::size_t n, int m) {
  std::vector<Composition> out;
  for (const auto& a : oracle::all_compositions(static_cast<int>(n) * m)) {
    if (a.length() <= n && (a.empty() || a.max_part() <= m)) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST(KRingElement, ReducesAndRejectsMismatch) {
  SparsePoly f(1);
  f.add_term(str("1"), 1);
  f.add_term(str("3"), 1);
  const KRingElement a(f, 2);
  EXPECT_EQ(a.poly(), SparsePoly::variable(0, 1));
  EXPECT_TRUE((a * a * a).poly().is_zero());
  EXPECT_EQ(code_of([&] { a + KRingElement(1, 3); }), ErrorCode::kLengthMismatch);
  EXPECT_EQ(code_of([&] { a * KRingElement(2, 2); }), ErrorCode::kLengthMismatch);
}

TEST(ProjectiveClass, Examples) {
  EXPECT_EQ(projective_structure_class(3, 3), KRingElement::one(1, 3));
  EXPECT_EQ(projective_structure_class(0, 1).poly(), SparsePoly::variable(0, 1));
  EXPECT_EQ(y_to_line_bundle(projective_structure_class(0, 2)), (std::vector<Rational>{1, -2, 1}));
  EXPECT_EQ(code_of([] { projective_structure_class(4, 3); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([] { projective_structure_class(-1, 3); }), ErrorCode::kOutOfRange);
}

TEST(ProjectiveClass, MatchesExactSequenceRecurrence) {
  for (int m = 0; m <= 7; ++m) {
    for (int r = 0; r <= m; ++r) {
      EXPECT_EQ(line_bundle_to_y(oracle::projective_class_line_bundles(r, m), m), projective_structure_class(r, m))
          << "r=" << r << " m=" << m;
    }
  }
}

TEST(LineBundles, Examples) {
  EXPECT_EQ(line_bundle_to_y({1}, 3), KRingElement::one(1, 3));
  SparsePoly one_minus_y = SparsePoly::constant(1, 1) - SparsePoly::variable(0, 1);
  EXPECT_EQ(line_bundle_to_y({0, 1}, 3).poly(), one_minus_y);
  EXPECT_EQ(code_of([] { line_bundle_to_y({1, 2, 3}, 1); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([] { y_to_line_bundle(KRingElement(2, 1)); }), ErrorCode::kLengthMismatch);
}

TEST(LineBundles, RoundTrip) {
  oracle::Generator gen(3);
  for (int m = 0; m <= 6; ++m) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> v(static_cast<std::size_t>(m + 1));
      for (auto& c : v) {
        c = Rational(gen.uniform(-5, 5), gen.uniform(1, 4));
        c.canonicalize();
      }
      EXPECT_EQ(y_to_line_bundle(line_bundle_to_y(v, m)), v);
    }
  }
}

TEST(ZLocus, Examples) {
  EXPECT_EQ(z_locus(Composition({1, 3}), 2, 3).components, (std::vector<std::vector<int>>{{2, 0}}));
  EXPECT_EQ(z_locus(Composition({1}), 2, 1).components, (std::vector<std::vector<int>>{{0, 1}, {1, 0}}));
  EXPECT_EQ(z_locus(Composition(), 3, 2).components, (std::vector<std::vector<int>>{{2, 2, 2}}));
  EXPECT_EQ(code_of([] { z_locus(Composition({1, 1}), 1, 2); }), ErrorCode::kTooFewSlots);
  EXPECT_EQ(code_of([] { z_locus(Composition({3}), 2, 2); }), ErrorCode::kOutOfRange);
}

TEST(KnutsonClass, Examples) {
  EXPECT_EQ(knutson_class(Composition({1, 3}), 4, 3).poly(), glide_polynomial(Composition({1, 3}), 4));
  SparsePoly expected(2);
  expected.add_term(str("10"), 1);
  expected.add_term(str("01"), 1);
  expected.add_term(str("11"), -1);
  EXPECT_EQ(knutson_class(Composition({1}), 2, 1).poly(), expected);
  for (int m = 1; m <= 4; ++m) {
    SparsePoly point(1);
    point.add_term(WeakComposition{m}, 1);
    EXPECT_EQ(knutson_class(Composition({m}), 1, m).poly(), point);
  }
  EXPECT_EQ(knutson_class(Composition(), 2, 2), KRingElement::one(2, 2));
}

TEST(KnutsonClass, EqualsTruncatedGlide) {
  for (const auto& alpha : oracle::all_compositions(5)) {
    for (std::size_t n = std::max<std::size_t>(alpha.length(), 1); n <= 5; ++n) {
      for (int m = alpha.empty() ? 0 : alpha.max_part(); m <= 4; ++m) {
        EXPECT_EQ(knutson_class(alpha, n, m), KRingElement(glide_polynomial(alpha, n), m))
            << alpha << " n=" << n << " m=" << m;
      }
    }
  }
}

TEST(KnutsonClass, CompatibleWithTruncation) {
  for (const auto& alpha : oracle::all_compositions(4)) {
    for (std::size_t n = std::max<std::size_t>(alpha.length(), 1); n <= 4; ++n) {
      for (int m = alpha.empty() ? 0 : alpha.max_part(); m <= 3; ++m) {
        const auto small = knutson_class(alpha, n, m);
        EXPECT_EQ(truncate_class(knutson_class(alpha, n + 1, m), n, m), small);
        EXPECT_EQ(truncate_class(knutson_class(alpha, n, m + 1), n, m), small);
        EXPECT_EQ(truncate_class(knutson_class(alpha, n + 1, m + 1), n, m), small);
      }
    }
  }
}

TEST(KnutsonClass, ClassesSpanTheQuasisymmetricPart) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      const auto cs = cells(n, m);
      std::map<WeakComposition, std::size_t> column;
      std::vector<SparsePoly> polys;
      for (const auto& a : cs) {
        polys.push_back(knutson_class(a, n, m).poly());
        for (const auto& [e, c] : polys.back().terms()) column.emplace(e, column.size());
      }
      std::vector<std::vector<Rational>> rows;
      for (const auto& f : polys) {
        std::vector<Rational> row(column.size());
        for (const auto& [e, c] : f.terms()) row[column.at(e)] = c;
        rows.push_back(row);
      }
      EXPECT_EQ(oracle::rank(rows), cs.size()) << "n=" << n << " m=" << m;
    }
  }
}

TEST(OneMinusExp, Coefficients) {
  EXPECT_EQ(one_minus_exp_series(4), (std::vector<Rational>{0, 1, Rational(-1, 2), Rational(1, 6), Rational(-1, 24)}));
  const auto s = one_minus_exp_series(12);
  for (int j = 1; j <= 12; ++j) {
    EXPECT_EQ(s[static_cast<std::size_t>(j)], Rational(j % 2 == 1 ? 1 : -1) / Rational(factorial(j)));
  }
}

TEST(ChernSubstitute, Examples) {
  SparsePoly expected(1);
  expected.add_term(str("1"), 1);
  expected.add_term(str("2"), Rational(-1, 2));
  expected.add_term(str("3"), Rational(1, 6));
  EXPECT_EQ(chern_substitute(KRingElement(SparsePoly::variable(0, 1), 3)), expected);
  EXPECT_EQ(chern_substitute(KRingElement::one(2, 3)), SparsePoly::constant(1, 2));
  EXPECT_EQ(chern_substitute(knutson_class(Composition({1}), 2, 1)), knutson_class(Composition({1}), 2, 1).poly());
}

TEST(ChernSubstitute, KnutsonClassesBecomeQuasisymmetric) {
  EXPECT_TRUE(is_quasisymmetric(chern_substitute(knutson_class(Composition({1, 3}), 4, 3)), 4));
  for (const auto& alpha : oracle::all_compositions(4)) {
    for (std::size_t n = std::max<std::size_t>(alpha.length(), 1); n <= 4; ++n) {
      const int m = alpha.empty() ? 1 : alpha.max_part();
      EXPECT_TRUE(is_quasisymmetric(chern_substitute(knutson_class(alpha, n, m)), n)) << alpha << " n=" << n;
    }
  }
}
