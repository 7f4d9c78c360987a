#include "glidekit/rational.hpp"

#include <cctype>

#include "glidekit/error.hpp"

namespace glidekit {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  const Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::kParse, "zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(n), d);
  q.canonicalize();
  return q;
}

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return out;
}

}  // namespace glidekit
