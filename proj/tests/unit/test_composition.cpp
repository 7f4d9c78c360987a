#include <gtest/gtest.h>

#include "glidekit/composition.hpp"
#include "glidekit/error.hpp"
#include "glidekit/poset.hpp"
#include "oracles.hpp"

using namespace glidekit;

TEST(Composition, RejectsNonPositiveParts) {
  EXPECT_THROW(Composition({1, 0}), Error);
  EXPECT_THROW(Composition({-2}), Error);
  try {
    Composition({0});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidComposition);
  }
}

TEST(Composition, EmptyIsValid) {
  Composition e;
  EXPECT_EQ(e.length(), 0u);
  EXPECT_EQ(e.size(), 0);
  EXPECT_EQ(to_string(e), "()");
}

TEST(Composition, CanonicalOrderIsSizeThenLengthThenLex) {
  EXPECT_LT(Composition({3}), Composition({1, 3}));
  EXPECT_LT(Composition({4}), Composition({1, 3}));
  EXPECT_LT(Composition({1, 3}), Composition({3, 1}));
  EXPECT_LT(Composition({2, 2}), Composition({1, 1, 2}));
}

TEST(WeakComposition, RejectsNegativeParts) { EXPECT_THROW(WeakComposition({0, -1}), Error); }

TEST(PositivePart, Examples) {
  EXPECT_EQ(positive_part(WeakComposition{2, 0, 4, 0, 0, 2}), Composition({2, 4, 2}));
  EXPECT_EQ(positive_part(WeakComposition{0, 0, 0}), Composition{});
  EXPECT_EQ(positive_part(WeakComposition{1, 3, 0, 0}), Composition({1, 3}));
}

TEST(PositivePart, InvertsEveryZeroInsertion) {
  for (const auto& alpha : oracle::all_compositions(5)) {
    for (std::size_t n = alpha.length(); n <= alpha.length() + 3; ++n) {
      for (const auto& w : atoms(alpha, n)) EXPECT_EQ(positive_part(w), alpha);
    }
  }
}

TEST(RunEncode, Examples) {
  EXPECT_EQ(run_encode(Composition({1, 3})), RunEncoding({{1, 1}, {3, 1}}));
  EXPECT_EQ(run_encode(Composition({1, 1})), RunEncoding({{1, 2}}));
  EXPECT_EQ(run_encode(Composition({2, 2, 5, 2})), RunEncoding({{2, 2}, {5, 1}, {2, 1}}));
}

TEST(RunEncode, RoundTripsAndSeparatesValues) {
  for (const auto& alpha : oracle::all_compositions(7)) {
    const RunEncoding runs = run_encode(alpha);
    EXPECT_EQ(runs.expand(), alpha);
    for (std::size_t i = 0; i + 1 < runs.size(); ++i) EXPECT_NE(runs[i].value, runs[i + 1].value);
  }
}

TEST(RunEncoding, RejectsEqualAdjacentValues) { EXPECT_THROW(RunEncoding({{2, 1}, {2, 1}}), Error); }

TEST(SortingData, Examples) {
  const auto d = sorting_data(Composition({2, 1, 3, 1}));
  EXPECT_EQ(d.omega, Permutation({2, 4, 1, 3}));
  EXPECT_EQ(d.beta, Composition({3, 1, 4, 2}));
  const auto id = sorting_data(Composition({1, 2, 3}));
  EXPECT_TRUE(id.omega.is_identity());
  EXPECT_EQ(id.beta, Composition({1, 2, 3}));
  const auto ties = sorting_data(Composition({1, 1}));
  EXPECT_EQ(ties.omega, Permutation({1, 2}));
  EXPECT_EQ(ties.beta, Composition({1, 2}));
}

TEST(SortingData, SortsStablyAndBetaIsAPermutation) {
  for (const auto& alpha : oracle::all_compositions(6)) {
    const auto d = sorting_data(alpha);
    const int N = static_cast<int>(alpha.length());
    for (int i = 1; i < N; ++i) {
      const int a = alpha[static_cast<std::size_t>(d.omega(i) - 1)];
      const int b = alpha[static_cast<std::size_t>(d.omega(i + 1) - 1)];
      EXPECT_LE(a, b);
      if (a == b) EXPECT_LT(d.omega(i), d.omega(i + 1));
    }
    std::vector<int> parts = d.beta.vec();
    std::sort(parts.begin(), parts.end());
    for (int i = 0; i < N; ++i) EXPECT_EQ(parts[static_cast<std::size_t>(i)], i + 1);
  }
}

TEST(Standardize, Examples) {
  const Composition alpha{2, 1, 3, 1};
  EXPECT_EQ(standardize(WeakComposition{0, 2, 1, 0, 3, 1}, sorting_data(alpha)), (WeakComposition{0, 3, 1, 0, 4, 2}));
  EXPECT_EQ(standardize(WeakComposition{1, 0, 3}, sorting_data(Composition({1, 3}))), (WeakComposition{1, 0, 2}));
  EXPECT_THROW(standardize(WeakComposition{1, 0, 0}, sorting_data(Composition({1, 3}))), Error);
  EXPECT_THROW(semistandardize(WeakComposition{1, 1, 1}, Composition({1, 3})), Error);
}

TEST(Standardize, MutuallyInverseOnAtomSets) {
  for (const auto& alpha : oracle::all_compositions(6)) {
    const auto data = sorting_data(alpha);
    for (std::size_t n = std::max<std::size_t>(alpha.length(), 1); n <= 7; ++n) {
      for (const auto& tau : atoms(alpha, n)) {
        EXPECT_EQ(semistandardize(standardize(tau, data), alpha), tau);
      }
      for (const auto& tau : atoms(data.beta, n)) {
        EXPECT_EQ(standardize(semistandardize(tau, alpha), data), tau);
      }
    }
  }
}

TEST(Permutation, ValidatesAndInverts) {
  EXPECT_THROW(Permutation({1, 1}), Error);
  EXPECT_THROW(Permutation({0, 1}), Error);
  const Permutation w({2, 4, 1, 3});
  const Permutation inv = w.inverse();
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(inv(w(i)), i);
  EXPECT_EQ(w.inversions(), 3u);
}

TEST(Compositions, CountsArePowersOfTwo) {
  for (int s = 1; s <= 8; ++s) EXPECT_EQ(compositions_of(s).size(), std::size_t{1} << (s - 1));
  EXPECT_EQ(compositions_of(0).size(), 1u);
  const auto all = compositions_up_to(4);
  EXPECT_EQ(all.size(), 16u);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}
