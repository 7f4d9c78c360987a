#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "glidekit/composition.hpp"
#include "glidekit/rational.hpp"

namespace glidekit {

/// Finitely supported map from exponent vectors of a fixed length to exact
/// rational coefficients. Zero coefficients are never stored, and terms are
/// kept in graded-lex order so iteration and serialization are canonical.
class SparsePoly {
 public:
  using Terms = std::map<WeakComposition, Rational, GradedLexLess>;

  explicit SparsePoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static SparsePoly constant(const Rational& c, std::size_t num_vars);
  static SparsePoly monomial(const WeakComposition& exponents, const Rational& c = 1);
  /// The single variable y_i (0-based) among num_vars.
  static SparsePoly variable(std::size_t i, std::size_t num_vars);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const& { return terms_; }
  Terms terms() && { return std::move(terms_); }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const WeakComposition& exponents) const;
  /// Adds c * y^exponents, dropping the term if it cancels.
  void add_term(const WeakComposition& exponents, const Rational& c);

  /// Largest and smallest total degree present; nullopt for the zero poly.
  std::optional<int> degree() const;
  std::optional<int> lowest_degree() const;
  SparsePoly homogeneous_part(int d) const;
  /// Terms with every exponent <= bound (reduction mod y_i^{bound+1}).
  SparsePoly reduce_exponents(int bound) const;
  /// Sets y_i = 0 for every i >= n and drops those variables.
  SparsePoly restrict_vars(std::size_t n) const;
  /// Appends zero exponents so the poly lives in more variables.
  SparsePoly extend_vars(std::size_t n) const;

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const Rational& c);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly pow(unsigned e) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  void check_vars(const WeakComposition& exponents) const;

  std::size_t num_vars_ = 0;
  Terms terms_;
};

/// Human-readable form, e.g. "y1*y2^3 - 1/2*y3".
std::string to_string(const SparsePoly& f, const std::string& var = "y");
std::ostream& operator<<(std::ostream& os, const SparsePoly& f);

}  // namespace glidekit
