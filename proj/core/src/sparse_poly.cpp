#include "glidekit/sparse_poly.hpp"

#include <sstream>

#include "glidekit/error.hpp"

namespace glidekit {

SparsePoly SparsePoly::constant(const Rational& c, std::size_t num_vars) {
  SparsePoly f(num_vars);
  f.add_term(WeakComposition::zeros(num_vars), c);
  return f;
}

SparsePoly SparsePoly::monomial(const WeakComposition& exponents, const Rational& c) {
  SparsePoly f(exponents.length());
  f.add_term(exponents, c);
  return f;
}

SparsePoly SparsePoly::variable(std::size_t i, std::size_t num_vars) {
  if (i >= num_vars) throw Error(ErrorCode::kOutOfRange, "variable index out of range");
  std::vector<int> e(num_vars, 0);
  e[i] = 1;
  return monomial(WeakComposition(std::move(e)));
}

void SparsePoly::check_vars(const WeakComposition& exponents) const {
  if (exponents.length() != num_vars_) {
    throw Error(ErrorCode::kLengthMismatch,
                "exponent vector " + to_string(exponents) + " does not have " +
                    std::to_string(num_vars_) + " entries");
  }
}

Rational SparsePoly::coefficient(const WeakComposition& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const WeakComposition& exponents, const Rational& c) {
  check_vars(exponents);
  Rational v = c;
  v.canonicalize();
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> SparsePoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.size();
}

std::optional<int> SparsePoly::lowest_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.size();
}

SparsePoly SparsePoly::homogeneous_part(int d) const {
  SparsePoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    if (e.size() == d) out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

SparsePoly SparsePoly::reduce_exponents(int bound) const {
  SparsePoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    bool keep = true;
    for (int p : e.parts()) keep = keep && p <= bound;
    if (keep) out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

SparsePoly SparsePoly::restrict_vars(std::size_t n) const {
  if (n >= num_vars_) return extend_vars(n);
  SparsePoly out(n);
  for (const auto& [e, c] : terms_) {
    bool vanishes = false;
    for (std::size_t i = n; i < num_vars_; ++i) vanishes = vanishes || e[i] != 0;
    if (vanishes) continue;
    out.add_term(WeakComposition(std::vector<int>(e.vec().begin(), e.vec().begin() + static_cast<long>(n))), c);
  }
  return out;
}

SparsePoly SparsePoly::extend_vars(std::size_t n) const {
  if (n < num_vars_) throw Error(ErrorCode::kLengthMismatch, "extend_vars cannot shrink");
  SparsePoly out(n);
  for (const auto& [e, c] : terms_) {
    std::vector<int> parts = e.vec();
    parts.resize(n, 0);
    out.add_term(WeakComposition(std::move(parts)), c);
  }
  return out;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  if (other.num_vars_ != num_vars_) throw Error(ErrorCode::kLengthMismatch, "variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  if (other.num_vars_ != num_vars_) throw Error(ErrorCode::kLengthMismatch, "variable count mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (a.num_vars_ != b.num_vars_) throw Error(ErrorCode::kLengthMismatch, "variable count mismatch");
  SparsePoly out(a.num_vars_);
  std::vector<int> sum(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      out.add_term(WeakComposition(sum), ca * cb);
    }
  }
  return out;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly out = constant(1, num_vars_);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::string to_string(const SparsePoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Rational mag = c;
    if (c < 0) {
      os << (first ? "-" : " - ");
      mag = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    const bool is_const = e.size() == 0;
    if (mag != 1 || is_const) {
      os << mag.get_str();
      if (!is_const) os << '*';
    }
    bool first_var = true;
    for (std::size_t i = 0; i < e.length(); ++i) {
      if (e[i] == 0) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << var << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SparsePoly& f) { return os << to_string(f); }

}  // namespace glidekit
