#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "glidekit/composition.hpp"
#include "glidekit/graded_ring.hpp"
#include "glidekit/rational.hpp"
#include "glidekit/sparse_poly.hpp"

namespace glidekit {

/// Weakly decreasing nonnegative parts of a fixed length k. Trailing zeros
/// are significant: (1,0) and (1,0,0) are different values.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);
  static Partition zero(std::size_t k);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const;
  bool is_zero() const;
  int operator[](std::size_t i) const { return parts_[i]; }
  /// lambda_i <= other_i for every i; false on a length mismatch.
  bool contained_in(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// "2,1,0", the form used for labels and CLI flags.
std::string partition_label(const Partition& lambda);
/// Parses "2,1,0"; throws kParse or kInvalidPartition.
Partition parse_partition(std::string_view text);
std::string to_string(const Partition& lambda);

/// All partitions of length k with |lambda| <= max_size, ordered by size
/// then reverse lexicographically.
std::vector<Partition> partitions_up_to(std::size_t k, int max_size);

class SkewShape {
 public:
  /// Throws kLengthMismatch or kInvalidPartition when inner is not inside outer.
  SkewShape(Partition outer, Partition inner);
  static SkewShape straight(Partition outer);

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  std::size_t rows() const { return outer_.length(); }
  int row_length(std::size_t r) const { return outer_[r] - inner_[r]; }
  int cell_count() const { return outer_.size() - inner_.size(); }
  /// Column c is in row r when inner_r <= c < outer_r.
  bool has_cell(std::size_t r, int c) const { return c >= inner_[r] && c < outer_[r]; }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// A semistandard filling of a skew shape. rows[r] lists the entries of row r
/// left to right.
class Tableau {
 public:
  /// Throws kSizeMismatch when row lengths disagree with the shape and
  /// kNotSemistandard when rows decrease or columns fail to increase.
  Tableau(SkewShape shape, std::vector<std::vector<int>> rows);

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int at(std::size_t r, int c) const { return rows_[r][static_cast<std::size_t>(c - shape_.inner()[r])]; }

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

/// Number of i's in position i-1, up to the largest entry.
WeakComposition content(const Tableau& t);
/// Rows right to left, then top to bottom.
std::vector<int> reading_word(const Tableau& t);
/// Every prefix has at least as many i as i+1.
bool is_ballot(std::span<const int> word);
bool is_ballot(const Tableau& t);

/// Every semistandard tableau of the shape with the given content, ordered
/// lexicographically by reading word. Throws kSizeMismatch when the content
/// size differs from the cell count.
std::vector<Tableau> ssyt_enumerate(const SkewShape& shape, const WeakComposition& content);

/// Number of ballot tableaux of shape nu/lambda and content mu. Zero when
/// lambda is not inside nu or the sizes do not add up. Throws kLengthMismatch
/// on unequal lengths. Results are cached; the cache is thread safe.
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Sum over semistandard tableaux of shape lambda with entries <= k of the
/// content monomial.
SparsePoly schur_polynomial(const Partition& lambda, std::size_t k);

/// k-Grassmannian permutations (no descent except possibly at k) and their
/// partitions (w(k)-k, ..., w(1)-1). Throws kNotGrassmannian.
Partition grassmannian_to_partition(const Permutation& w, std::size_t k);
/// Inverse in S_n. Throws kOutOfRange when lambda_1 > n - k.
Permutation partition_to_grassmannian(const Partition& lambda, std::size_t n);

/// A sequence of nonzero partitions sharing one length k.
class PartitionTuple {
 public:
  PartitionTuple() = default;
  /// Throws kInvalidPartition on a zero entry and kLengthMismatch when the
  /// lengths differ.
  explicit PartitionTuple(std::vector<Partition> parts);

  const std::vector<Partition>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  const Partition& operator[](std::size_t i) const { return parts_[i]; }
  std::vector<std::string> labels() const;

  friend bool operator==(const PartitionTuple&, const PartitionTuple&) = default;

 private:
  std::vector<Partition> parts_;
};

/// Parses "1,0,0;2,1,0"; the empty string is the empty tuple.
PartitionTuple parse_partition_tuple(std::string_view text);
std::string to_string(const PartitionTuple& t);

/// Sum over order-preserving injections iota, j into [|nu|] of the product of
/// lr_coefficient(lambda_{iota^-1(i)}, mu_{j^-1(i)}, nu_i), with the zero
/// partition standing in for slots outside an image. jobs > 1 splits the
/// iota range over threads; the sum does not depend on jobs. Throws
/// kLengthMismatch when some partition does not have length k.
Integer buk_structure_constant(const PartitionTuple& lambda, const PartitionTuple& mu,
                               const PartitionTuple& nu, std::size_t k, unsigned jobs = 1);

/// The cohomology of BU(k) in the Schur basis, truncated above |lambda| = cap.
/// Labels are partition_label strings of degree 2|lambda|; the zero
/// partition is the unit.
GradedRingData schur_ring_data(std::size_t k, int cap = 8);

}  // namespace glidekit
