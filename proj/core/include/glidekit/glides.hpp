#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "glidekit/composition.hpp"
#include "glidekit/rational.hpp"
#include "glidekit/sparse_poly.hpp"

namespace glidekit {

/// A string over the alphabet {0, 1, 2, ...} plus barred copies of the
/// positive letters. A barred p is stored as -p; 0 is never barred.
class BarredString {
 public:
  BarredString() = default;
  explicit BarredString(std::vector<int> entries);
  static BarredString unbarred(const WeakComposition& w);

  std::span<const int> entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  std::size_t barred_count() const;
  /// Forgets all bars.
  WeakComposition projection() const;

  friend bool operator==(const BarredString&, const BarredString&) = default;
  friend auto operator<=>(const BarredString&, const BarredString&) = default;

 private:
  std::vector<int> entries_;
};

std::string to_string(const BarredString& s);

enum class GlideMethod { kPoset, kBarred, kClosed };

std::string_view glide_method_name(GlideMethod method);
/// "poset" | "barred" | "closed"; throws kParse otherwise.
GlideMethod parse_glide_method(std::string_view name);

/// Strings whose nonzero entries read a_1^{l_1} ... a_k^{l_k} with
/// l_i >= N_i, where (a_i, N_i) are the runs of alpha. Enumerated directly
/// from that block description; sorted lexicographically.
std::vector<WeakComposition> enumerate_C(const Composition& alpha, std::size_t n);

/// Closure of the zero paddings of alpha under the moves
/// 0p -> p0 and 0p -> p pbar (p unbarred positive).
std::set<BarredString> enumerate_C_tilde(const Composition& alpha, std::size_t n);

/// Block lengths (l_1, ..., l_k) of sigma relative to the runs of alpha, or
/// nullopt when sigma has no such block decomposition.
std::optional<std::vector<int>> block_lengths(const WeakComposition& sigma,
                                              const Composition& alpha);

/// Signed count of barred preimages of sigma; 0 when sigma is outside C.
Integer mu_prime(const WeakComposition& sigma, const Composition& alpha, std::size_t n);

/// (-1)^{sum l_i - N} prod C(l_i - 1, N_i - 1). Throws kNotInC when sigma has
/// no block decomposition.
Integer mu_closed(const WeakComposition& sigma, const Composition& alpha);

/// The quasisymmetric monomial glide of alpha in y_1..y_n. All three methods
/// return the same polynomial; kClosed is the fast path.
SparsePoly glide_polynomial(const Composition& alpha, std::size_t n,
                            GlideMethod method = GlideMethod::kClosed);

/// Monomial glide of a weak composition: closure of {a} under the same
/// moves, weighted by (-1)^{barred}.
SparsePoly monomial_glide_weak(const WeakComposition& a);

/// sum_{j=N}^{l} (-1)^{j-N} C(j-1, N-1) C(l, j) == 1, evaluated exactly.
/// Throws kOutOfRange unless 1 <= N <= l.
bool check_binomial_identity(int N, int l);

}  // namespace glidekit
