#pragma once

#include <cstddef>
#include <vector>

#include "glidekit/composition.hpp"
#include "glidekit/rational.hpp"
#include "glidekit/sparse_poly.hpp"

namespace glidekit {

/// An element of Q[y_1..y_n] / (y_i^{m+1}). Exponents above m are dropped on
/// construction and after every product.
class KRingElement {
 public:
  KRingElement(std::size_t n, int m);
  KRingElement(SparsePoly poly, int m);
  static KRingElement one(std::size_t n, int m);

  std::size_t n() const { return poly_.num_vars(); }
  int m() const { return m_; }
  const SparsePoly& poly() const { return poly_; }

  KRingElement& operator+=(const KRingElement& other);
  KRingElement& operator-=(const KRingElement& other);
  KRingElement& operator*=(const KRingElement& other);
  KRingElement& operator*=(const Rational& c);
  friend KRingElement operator+(KRingElement a, const KRingElement& b) { return a += b; }
  friend KRingElement operator-(KRingElement a, const KRingElement& b) { return a -= b; }
  friend KRingElement operator*(KRingElement a, const KRingElement& b) { return a *= b; }
  friend KRingElement operator*(KRingElement a, const Rational& c) { return a *= c; }
  friend bool operator==(const KRingElement&, const KRingElement&) = default;

 private:
  void check_compatible(const KRingElement& other) const;
  SparsePoly poly_;
  int m_ = 0;
};

/// Class of the structure sheaf of P^r inside P^m: y^{m-r}. Throws
/// kOutOfRange unless 0 <= r <= m.
KRingElement projective_structure_class(int r, int m);

/// sum_i c_i [O(-i)] in the y presentation of K(P^m), via [O(-1)] = 1 - y.
/// Throws kOutOfRange when more than m+1 coefficients are given.
KRingElement line_bundle_to_y(const std::vector<Rational>& coeffs, int m);
/// Inverse of line_bundle_to_y; returns m+1 coefficients. Throws
/// kLengthMismatch unless f has one variable.
std::vector<Rational> y_to_line_bundle(const KRingElement& f);

/// A union of products of projective subspaces P^{r_1} x ... x P^{r_n}.
struct SchubertUnion {
  Composition alpha;
  std::size_t n = 0;
  int m = 0;
  /// One r-tuple per order-preserving injection [l(alpha)] -> [n], sorted.
  std::vector<std::vector<int>> components;
};

/// Components r_i = m - alpha_j at i = iota(j) and r_i = m elsewhere.
/// Throws kTooFewSlots when n < l(alpha), kOutOfRange when m < max alpha.
SchubertUnion z_locus(const Composition& alpha, std::size_t n, int m);

/// Structure-sheaf class of z_locus(alpha, n, m) by Knutson's Möbius
/// formula over the intersections of its components.
KRingElement knutson_class(const Composition& alpha, std::size_t n, int m);

/// Sends y_i to 0 for i > n and reduces modulo y_i^{m+1}.
KRingElement truncate_class(const KRingElement& f, std::size_t n, int m);

/// Coefficients of 1 - e^{-x} through x^m; index j holds (-1)^{j+1}/j!.
std::vector<Rational> one_minus_exp_series(int m);

/// f(1 - e^{-x_1}, ..., 1 - e^{-x_n}) modulo (x_i^{m+1}) with m = f.m().
SparsePoly chern_substitute(const KRingElement& f);

}  // namespace glidekit
