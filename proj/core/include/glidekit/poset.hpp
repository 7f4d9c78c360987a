#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "glidekit/composition.hpp"
#include "glidekit/rational.hpp"

namespace glidekit {

/// The adjoined minimum of the bottom-augmented poset. It is not a string.
struct Bottom {
  friend bool operator==(Bottom, Bottom) { return true; }
};

using MeetResult = std::variant<WeakComposition, Bottom>;

/// The string poset generated by all zero paddings of `alpha` to length n,
/// closed under componentwise maximum and ordered componentwise.
///
/// Elements are stored in lexicographic order. Lexicographic order refines
/// the componentwise order, so element indices are already a linear
/// extension. The order relation is evaluated on demand rather than
/// materialized; construction cost grows with |P|^2 * n and the library
/// targets n <= 10, |alpha| <= 6.
class GlidePoset {
 public:
  static GlidePoset build(const Composition& alpha, std::size_t n);

  const Composition& alpha() const { return alpha_; }
  std::size_t n() const { return n_; }
  std::size_t size() const { return elements_.size(); }

  std::span<const WeakComposition> elements() const { return elements_; }
  const WeakComposition& element(std::size_t i) const { return elements_[i]; }
  /// Indices of the minimal elements (the zero paddings of alpha).
  std::span<const std::size_t> atom_indices() const { return atoms_; }

  std::optional<std::size_t> index_of(const WeakComposition& w) const;
  bool contains(const WeakComposition& w) const { return index_of(w).has_value(); }
  bool leq(std::size_t i, std::size_t j) const;

  /// Hasse diagram edges (i, j) with element(i) covered by element(j).
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  GlidePoset(Composition alpha, std::size_t n, std::vector<WeakComposition> elements);

  Composition alpha_;
  std::size_t n_ = 0;
  std::vector<WeakComposition> elements_;
  std::vector<std::size_t> atoms_;
};

/// Möbius values in the convention sum_{q <= p} mu(q) = 1, aligned with
/// GlidePoset::elements().
class MobiusTable {
 public:
  explicit MobiusTable(std::vector<Integer> values) : values_(std::move(values)) {}

  std::span<const Integer> values() const { return values_; }
  const Integer& operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  /// Value at a string; throws kNotInPoset when absent.
  const Integer& at(const GlidePoset& poset, const WeakComposition& w) const;

 private:
  std::vector<Integer> values_;
};

/// The C(n, l(alpha)) zero paddings of alpha, lexicographically sorted.
/// Throws kTooFewSlots when n < l(alpha).
std::vector<WeakComposition> atoms(const Composition& alpha, std::size_t n);

inline GlidePoset build_poset(const Composition& alpha, std::size_t n) {
  return GlidePoset::build(alpha, n);
}

/// Componentwise maximum; throws kLengthMismatch.
WeakComposition join(const WeakComposition& p, const WeakComposition& q);

/// Greatest common lower bound inside the poset, or Bottom when p and q have
/// no lower bound there. Throws kNotInPoset when p or q is not an element.
MeetResult meet(const GlidePoset& poset, const WeakComposition& p, const WeakComposition& q);

/// Bottom-up recurrence over the linear extension.
MobiusTable mobius(const GlidePoset& poset);

/// The traditional Möbius function mu(0hat, p) of the bottom-augmented poset,
/// computed with the interval recurrence. Satisfies mu_traditional = -mu.
std::vector<Integer> traditional_mobius(const GlidePoset& poset);

/// Largest number of atoms below an element the crosscut oracle accepts.
inline constexpr std::size_t kCrosscutAtomLimit = 20;

/// Rota crosscut evaluation -sum_{R subset atoms, join R = sigma} (-1)^{|R|}.
/// Exponential in the number of atoms below sigma; throws kTooLarge past
/// kCrosscutAtomLimit and kNotInPoset when sigma is absent.
Integer mobius_crosscut(const GlidePoset& poset, const WeakComposition& sigma);

/// Crosscut values for every element from a single subset enumeration.
/// Requires |atoms| <= kCrosscutAtomLimit.
std::vector<Integer> mobius_crosscut_all(const GlidePoset& poset);

/// Checks that every pair of the bottom-augmented poset has a meet and a
/// join. Cubic in |P|; intended for small posets.
bool is_lattice_with_bottom(const GlidePoset& poset);

}  // namespace glidekit
