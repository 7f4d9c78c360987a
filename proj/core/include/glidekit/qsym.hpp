#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "glidekit/composition.hpp"
#include "glidekit/rational.hpp"
#include "glidekit/sparse_poly.hpp"

namespace glidekit {

/// A quasisymmetric power series in the monomial basis, sum c_alpha M_alpha,
/// known up to an optional degree bound. Terms of degree above the bound are
/// dropped on insertion. The empty composition keys the constant term.
class QSymElement {
 public:
  using Coords = std::map<Composition, Rational>;

  explicit QSymElement(std::optional<int> degree_bound = std::nullopt) : bound_(degree_bound) {}
  static QSymElement monomial(const Composition& alpha, const Rational& c = 1,
                              std::optional<int> degree_bound = std::nullopt);
  static QSymElement one(std::optional<int> degree_bound = std::nullopt);

  const Coords& coords() const& { return coords_; }
  Coords coords() && { return std::move(coords_); }
  std::optional<int> degree_bound() const { return bound_; }
  bool is_zero() const { return coords_.empty(); }
  Rational coefficient(const Composition& alpha) const;
  bool within_bound(int degree) const { return !bound_ || degree <= *bound_; }

  void add_term(const Composition& alpha, const Rational& c);
  /// Same coordinates with a tighter bound (the smaller of the two).
  QSymElement truncated(int degree_bound) const;
  std::optional<int> lowest_degree() const;
  QSymElement homogeneous_part(int d) const;

  QSymElement& operator+=(const QSymElement& other);
  QSymElement& operator-=(const QSymElement& other);
  QSymElement& operator*=(const Rational& c);
  friend QSymElement operator+(QSymElement a, const QSymElement& b) { return a += b; }
  friend QSymElement operator-(QSymElement a, const QSymElement& b) { return a -= b; }
  friend QSymElement operator*(QSymElement a, const Rational& c) { return a *= c; }
  friend bool operator==(const QSymElement&, const QSymElement&) = default;

 private:
  Coords coords_;
  std::optional<int> bound_;
};

std::string to_string(const QSymElement& f);

/// M_alpha in x_1..x_n: the sum over strictly increasing index tuples. Zero
/// when n < l(alpha).
SparsePoly m_to_polynomial(const Composition& alpha, std::size_t n);
SparsePoly m_to_polynomial(const QSymElement& f, std::size_t n);

/// True when, for every composition gamma in the support, all C(n, l(gamma))
/// placements of gamma occur with one common coefficient.
bool is_quasisymmetric(const SparsePoly& f, std::size_t n);

/// Reads M-coordinates off the initial-segment monomials. Throws
/// kNotQuasisymmetric when is_quasisymmetric fails, kLengthMismatch when f
/// does not live in n variables.
QSymElement polynomial_to_m(const SparsePoly& f, std::size_t n);

/// Formal sum over surjective merges of alpha and beta that are strictly
/// order preserving on each side; colliding parts are added.
std::map<Composition, Integer> overlapping_shuffle(const Composition& alpha, const Composition& beta);

/// Bilinear extension of the overlapping shuffle. The result is bounded by
/// the smaller of the two input bounds.
QSymElement m_multiply(const QSymElement& f, const QSymElement& g);

/// The monomial glide of alpha in the M basis, all terms of degree <= D.
QSymElement glide_in_m_basis(const Composition& alpha, int D);

/// Coordinates c_alpha with f = sum c_alpha glide_alpha modulo degree > D.
/// When f carries a smaller bound than D, that bound is used instead.
std::map<Composition, Rational> glide_expand(const QSymElement& f, int D);

/// glide_expand of glide_alpha * glide_beta, product taken in the M basis.
std::map<Composition, Rational> glide_structure_constants(const Composition& alpha,
                                                          const Composition& beta, int D);

}  // namespace glidekit
