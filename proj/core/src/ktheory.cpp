#include "glidekit/ktheory.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "glidekit/error.hpp"

namespace glidekit {

KRingElement::KRingElement(std::size_t n, int m) : poly_(n), m_(m) {
  if (m < 0) throw Error(ErrorCode::kOutOfRange, "truncation degree must be nonnegative");
}

KRingElement::KRingElement(SparsePoly poly, int m) : poly_(poly.reduce_exponents(m)), m_(m) {
  if (m < 0) throw Error(ErrorCode::kOutOfRange, "truncation degree must be nonnegative");
}

KRingElement KRingElement::one(std::size_t n, int m) { return KRingElement(SparsePoly::constant(1, n), m); }

void KRingElement::check_compatible(const KRingElement& other) const {
  if (n() != other.n() || m_ != other.m_) {
    throw Error(ErrorCode::kLengthMismatch, "K-ring elements live in different truncations");
  }
}

KRingElement& KRingElement::operator+=(const KRingElement& other) {
  check_compatible(other);
  poly_ += other.poly_;
  return *this;
}

KRingElement& KRingElement::operator-=(const KRingElement& other) {
  check_compatible(other);
  poly_ -= other.poly_;
  return *this;
}

KRingElement& KRingElement::operator*=(const KRingElement& other) {
  check_compatible(other);
  poly_ = (poly_ * other.poly_).reduce_exponents(m_);
  return *this;
}

KRingElement& KRingElement::operator*=(const Rational& c) {
  poly_ *= c;
  return *this;
}

KRingElement projective_structure_class(int r, int m) {
  if (r < 0 || r > m) {
    throw Error(ErrorCode::kOutOfRange, "need 0 <= r <= m, got r = " + std::to_string(r) + ", m = " + std::to_string(m));
  }
  return KRingElement(SparsePoly::monomial(WeakComposition{m - r}), m);
}

KRingElement line_bundle_to_y(const std::vector<Rational>& coeffs, int m) {
  if (m < 0 || coeffs.size() > static_cast<std::size_t>(m) + 1) {
    throw Error(ErrorCode::kOutOfRange, "line bundle index exceeds m = " + std::to_string(m));
  }
  const KRingElement one_minus_y(SparsePoly::constant(1, 1) - SparsePoly::variable(0, 1), m);
  KRingElement power = KRingElement::one(1, m);
  KRingElement out(1, m);
  for (const Rational& c : coeffs) {
    out += power * c;
    power *= one_minus_y;
  }
  return out;
}

std::vector<Rational> y_to_line_bundle(const KRingElement& f) {
  if (f.n() != 1) throw Error(ErrorCode::kLengthMismatch, "line bundle basis needs a single variable");
  const int m = f.m();
  // y^j = (1 - [O(-1)])^j = sum_i (-1)^i C(j, i) [O(-i)].
  std::vector<Rational> out(static_cast<std::size_t>(m) + 1, Rational(0));
  for (const auto& [w, c] : f.poly().terms()) {
    const int j = w[0];
    for (int i = 0; i <= j; ++i) {
      const Rational term = c * Rational(binomial(j, i));
      out[static_cast<std::size_t>(i)] += i % 2 == 0 ? term : Rational(-term);
    }
  }
  return out;
}

SchubertUnion z_locus(const Composition& alpha, std::size_t n, int m) {
  if (n < alpha.length()) {
    throw Error(ErrorCode::kTooFewSlots, "n = " + std::to_string(n) + " is smaller than the length of " + to_string(alpha));
  }
  if (!alpha.empty() && alpha.max_part() > m) {
    throw Error(ErrorCode::kOutOfRange, "m = " + std::to_string(m) + " is below the largest part of " + to_string(alpha));
  }
  SchubertUnion z{alpha, n, m, {}};
  std::vector<int> r(n, m);
  std::function<void(std::size_t, std::size_t)> place = [&](std::size_t j, std::size_t start) {
    if (j == alpha.length()) {
      z.components.push_back(r);
      return;
    }
    for (std::size_t i = start; i + (alpha.length() - j) <= n; ++i) {
      r[i] = m - alpha[j];
      place(j + 1, i + 1);
      r[i] = m;
    }
  };
  place(0, 0);
  std::sort(z.components.begin(), z.components.end());
  return z;
}

KRingElement knutson_class(const Composition& alpha, std::size_t n, int m) {
  const SchubertUnion z = z_locus(alpha, n, m);

  // Every intersection of components: closure under componentwise minimum.
  std::set<std::vector<int>> closure(z.components.begin(), z.components.end());
  std::vector<std::vector<int>> frontier(z.components.begin(), z.components.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& f : frontier) {
      for (const auto& c : z.components) {
        std::vector<int> meet(n);
        for (std::size_t i = 0; i < n; ++i) meet[i] = std::min(f[i], c[i]);
        if (closure.insert(meet).second) next.push_back(std::move(meet));
      }
    }
    frontier = std::move(next);
  }

  // Containment W <= W' is componentwise r <= r'. Walking in decreasing lex
  // order visits every W' > W before W.
  const std::vector<std::vector<int>> elems(closure.rbegin(), closure.rend());
  std::vector<Integer> mu(elems.size());
  for (std::size_t a = 0; a < elems.size(); ++a) {
    Integer above = 0;
    for (std::size_t b = 0; b < a; ++b) {
      bool contains = true;
      for (std::size_t i = 0; i < n && contains; ++i) contains = elems[a][i] <= elems[b][i];
      if (contains) above += mu[b];
    }
    mu[a] = 1 - above;
  }

  KRingElement out(n, m);
  for (std::size_t a = 0; a < elems.size(); ++a) {
    if (mu[a] == 0) continue;
    // Product of the pulled-back classes of P^{r_i} in each factor.
    KRingElement cls = KRingElement::one(n, m);
    for (std::size_t i = 0; i < n; ++i) {
      const SparsePoly y = projective_structure_class(elems[a][i], m).poly();
      std::vector<int> exps(n, 0);
      exps[i] = y.terms().begin()->first[0];
      cls *= KRingElement(SparsePoly::monomial(WeakComposition(exps)), m);
    }
    out += cls * Rational(mu[a]);
  }
  return out;
}

KRingElement truncate_class(const KRingElement& f, std::size_t n, int m) {
  if (n > f.n() || m > f.m()) {
    throw Error(ErrorCode::kOutOfRange, "truncation must not enlarge n or m");
  }
  return KRingElement(f.poly().restrict_vars(n), m);
}

std::vector<Rational> one_minus_exp_series(int m) {
  if (m < 0) throw Error(ErrorCode::kOutOfRange, "series order must be nonnegative");
  std::vector<Rational> s(static_cast<std::size_t>(m) + 1, Rational(0));
  for (int j = 1; j <= m; ++j) {
    Rational c(Integer(1), factorial(j));
    s[static_cast<std::size_t>(j)] = j % 2 == 1 ? c : Rational(-c);
  }
  return s;
}

SparsePoly chern_substitute(const KRingElement& f) {
  const int m = f.m();
  const std::size_t n = f.n();
  const std::vector<Rational> s = one_minus_exp_series(m);
  const auto deg = static_cast<std::size_t>(m);

  // powers[e] holds the coefficients of s(x)^e through x^m.
  std::vector<std::vector<Rational>> powers{std::vector<Rational>(deg + 1, Rational(0))};
  powers[0][0] = 1;
  for (int e = 1; e <= m; ++e) {
    const auto& prev = powers.back();
    std::vector<Rational> next(deg + 1, Rational(0));
    for (std::size_t a = 0; a <= deg; ++a) {
      if (prev[a] == 0) continue;
      for (std::size_t b = 1; a + b <= deg; ++b) next[a + b] += prev[a] * s[b];
    }
    powers.push_back(std::move(next));
  }

  SparsePoly out(n);
  std::vector<int> exps(n, 0);
  for (const auto& [w, c] : f.poly().terms()) {
    std::vector<const std::vector<Rational>*> factors;
    for (std::size_t i = 0; i < n; ++i) factors.push_back(&powers[static_cast<std::size_t>(w[i])]);
    std::function<void(std::size_t, const Rational&)> expand = [&](std::size_t i, const Rational& weight) {
      if (i == n) {
        out.add_term(WeakComposition(exps), weight);
        return;
      }
      for (std::size_t a = 0; a <= deg; ++a) {
        const Rational& coeff = (*factors[i])[a];
        if (coeff == 0) continue;
        exps[i] = static_cast<int>(a);
        expand(i + 1, weight * coeff);
      }
      exps[i] = 0;
    };
    expand(0, c);
  }
  return out;
}

}  // namespace glidekit
