#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace glidekit {

/// A finite sequence of strictly positive integers. The empty composition
/// is a valid value and indexes the unit.
///
/// Ordering is the canonical one used for all deterministic output: by size
/// |alpha|, then by length, then lexicographically.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int max_part() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A fixed-length sequence of nonnegative integers. Doubles as an exponent
/// vector and as an element of the string posets. Ordered lexicographically.
class WeakComposition {
 public:
  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> parts);
  WeakComposition(std::initializer_list<int> parts);
  /// All-zero string of length n.
  static WeakComposition zeros(std::size_t n);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const;
  int operator[](std::size_t i) const { return parts_[i]; }
  std::size_t nonzero_count() const;

  friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
  friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;

 private:
  std::vector<int> parts_;
};

/// Orders exponent vectors by total degree, then lexicographically.
struct GradedLexLess {
  bool operator()(const WeakComposition& a, const WeakComposition& b) const;
};

/// Componentwise a <= b. Throws kLengthMismatch on unequal lengths.
bool componentwise_leq(const WeakComposition& a, const WeakComposition& b);

struct Run {
  int value = 0;
  int multiplicity = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

/// Maximal runs of equal adjacent parts; adjacent runs have distinct values.
class RunEncoding {
 public:
  RunEncoding() = default;
  explicit RunEncoding(std::vector<Run> runs);

  std::span<const Run> runs() const { return runs_; }
  std::size_t size() const { return runs_.size(); }
  const Run& operator[](std::size_t i) const { return runs_[i]; }
  Composition expand() const;

  friend bool operator==(const RunEncoding&, const RunEncoding&) = default;

 private:
  std::vector<Run> runs_;
};

/// A permutation of {1..N} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(std::size_t n);

  std::span<const int> one_line() const { return one_line_; }
  std::size_t size() const { return one_line_.size(); }
  /// w(i) for 1-based i.
  int operator()(int i) const { return one_line_[static_cast<std::size_t>(i - 1)]; }
  Permutation inverse() const;
  bool is_identity() const;
  std::size_t inversions() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> one_line_;
};

/// omega is the shortest permutation sorting alpha (stable on ties) and
/// beta_i = omega^{-1}(i).
struct SortingData {
  Permutation omega;
  Composition beta;
};

WeakComposition zero_pad(const Composition& alpha, std::size_t leading_zeros);

Composition positive_part(const WeakComposition& w);

RunEncoding run_encode(const Composition& alpha);

SortingData sorting_data(const Composition& alpha);

/// Rewrites the i-th nonzero entry of tau as beta_i. Throws kWrongAtomShape
/// unless tau has exactly length(beta) nonzero entries.
WeakComposition standardize(const WeakComposition& tau, const SortingData& data);

/// Rewrites the i-th nonzero entry of tau as alpha_i.
WeakComposition semistandardize(const WeakComposition& tau, const Composition& alpha);

/// All compositions of the integer `total`, in canonical order.
std::vector<Composition> compositions_of(int total);

/// All compositions with size <= max_size (including the empty one).
std::vector<Composition> compositions_up_to(int max_size);

std::string to_string(const Composition& alpha);
std::string to_string(const WeakComposition& w);
std::ostream& operator<<(std::ostream& os, const Composition& alpha);
std::ostream& operator<<(std::ostream& os, const WeakComposition& w);

}  // namespace glidekit
