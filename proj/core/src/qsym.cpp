#include "glidekit/qsym.hpp"

#include <algorithm>
#include <sstream>

#include "glidekit/error.hpp"
#include "glidekit/glides.hpp"
#include "glidekit/poset.hpp"

namespace glidekit {

QSymElement QSymElement::monomial(const Composition& alpha, const Rational& c,
                                  std::optional<int> degree_bound) {
  QSymElement out(degree_bound);
  out.add_term(alpha, c);
  return out;
}

QSymElement QSymElement::one(std::optional<int> degree_bound) {
  return monomial(Composition{}, 1, degree_bound);
}

Rational QSymElement::coefficient(const Composition& alpha) const {
  auto it = coords_.find(alpha);
  return it == coords_.end() ? Rational(0) : it->second;
}

void QSymElement::add_term(const Composition& alpha, const Rational& c) {
  Rational v = c;
  v.canonicalize();
  if (v == 0 || !within_bound(alpha.size())) return;
  auto [it, inserted] = coords_.try_emplace(alpha, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) coords_.erase(it);
  }
}

QSymElement QSymElement::truncated(int degree_bound) const {
  QSymElement out(bound_ ? std::min(*bound_, degree_bound) : degree_bound);
  for (const auto& [alpha, c] : coords_) out.add_term(alpha, c);
  return out;
}

std::optional<int> QSymElement::lowest_degree() const {
  std::optional<int> low;
  for (const auto& [alpha, c] : coords_) {
    if (!low || alpha.size() < *low) low = alpha.size();
  }
  return low;
}

QSymElement QSymElement::homogeneous_part(int d) const {
  QSymElement out(bound_);
  for (const auto& [alpha, c] : coords_) {
    if (alpha.size() == d) out.coords_.emplace(alpha, c);
  }
  return out;
}

QSymElement& QSymElement::operator+=(const QSymElement& other) {
  if (other.bound_ && (!bound_ || *other.bound_ < *bound_)) *this = truncated(*other.bound_);
  for (const auto& [alpha, c] : other.coords_) add_term(alpha, c);
  return *this;
}

QSymElement& QSymElement::operator-=(const QSymElement& other) {
  if (other.bound_ && (!bound_ || *other.bound_ < *bound_)) *this = truncated(*other.bound_);
  for (const auto& [alpha, c] : other.coords_) add_term(alpha, -c);
  return *this;
}

QSymElement& QSymElement::operator*=(const Rational& c) {
  if (c == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& [alpha, v] : coords_) v *= c;
  return *this;
}

std::string to_string(const QSymElement& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : f.coords()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    first = false;
    const Rational a = abs(c);
    if (a != 1) os << to_string(a) << '*';
    os << 'M' << to_string(alpha);
  }
  return os.str();
}

SparsePoly m_to_polynomial(const Composition& alpha, std::size_t n) {
  SparsePoly out(n);
  if (n < alpha.length()) return out;
  for (const auto& w : atoms(alpha, n)) out.add_term(w, 1);
  return out;
}

SparsePoly m_to_polynomial(const QSymElement& f, std::size_t n) {
  SparsePoly out(n);
  for (const auto& [alpha, c] : f.coords()) {
    if (alpha.length() > n) continue;
    for (const auto& w : atoms(alpha, n)) out.add_term(w, c);
  }
  return out;
}

namespace {

struct Placements {
  Rational coefficient;
  bool consistent = true;
  Integer count = 0;
};

std::map<Composition, Placements> group_by_positive_part(const SparsePoly& f) {
  std::map<Composition, Placements> groups;
  for (const auto& [w, c] : f.terms()) {
    auto [it, inserted] = groups.try_emplace(positive_part(w), Placements{c, true, 0});
    if (!inserted && it->second.coefficient != c) it->second.consistent = false;
    it->second.count += 1;
  }
  return groups;
}

bool groups_are_quasisymmetric(const std::map<Composition, Placements>& groups, std::size_t n) {
  return std::all_of(groups.begin(), groups.end(), [n](const auto& entry) {
    const auto& [gamma, p] = entry;
    return p.consistent && p.count == binomial(static_cast<long>(n), static_cast<long>(gamma.length()));
  });
}

}  // namespace

bool is_quasisymmetric(const SparsePoly& f, std::size_t n) {
  if (f.num_vars() != n) return false;
  return groups_are_quasisymmetric(group_by_positive_part(f), n);
}

QSymElement polynomial_to_m(const SparsePoly& f, std::size_t n) {
  if (f.num_vars() != n) {
    throw Error(ErrorCode::kLengthMismatch, "polynomial has " + std::to_string(f.num_vars()) +
                                                " variables, expected " + std::to_string(n));
  }
  const auto groups = group_by_positive_part(f);
  for (const auto& [gamma, p] : groups) {
    if (!p.consistent || p.count != binomial(static_cast<long>(n), static_cast<long>(gamma.length()))) {
      throw Error(ErrorCode::kNotQuasisymmetric,
                  "placements of " + to_string(gamma) + " do not share one coefficient");
    }
  }
  QSymElement out;
  for (const auto& [gamma, p] : groups) out.add_term(gamma, p.coefficient);
  return out;
}

namespace {

void shuffle_rec(std::span<const int> a, std::span<const int> b, std::vector<int>& prefix,
                 std::map<Composition, Integer>& out) {
  if (a.empty() && b.empty()) {
    out[Composition(prefix)] += 1;
    return;
  }
  if (!a.empty()) {
    prefix.push_back(a.front());
    shuffle_rec(a.subspan(1), b, prefix, out);
    prefix.pop_back();
  }
  if (!b.empty()) {
    prefix.push_back(b.front());
    shuffle_rec(a, b.subspan(1), prefix, out);
    prefix.pop_back();
  }
  if (!a.empty() && !b.empty()) {
    prefix.push_back(a.front() + b.front());
    shuffle_rec(a.subspan(1), b.subspan(1), prefix, out);
    prefix.pop_back();
  }
}

std::optional<int> min_bound(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Calls emit(gamma, coefficient) for every gamma = a_1^{l_1}...a_k^{l_k} of
// size <= D with l_i >= N_i.
template <typename Emit>
void for_each_glide_term(const RunEncoding& runs, std::size_t run, int budget, std::vector<int>& word,
                         Integer excess_sign_product, long excess, Emit& emit) {
  if (run == runs.size()) {
    emit(Composition(word), excess % 2 == 0 ? excess_sign_product : Integer(-excess_sign_product));
    return;
  }
  int rest = 0;
  for (std::size_t r = run + 1; r < runs.size(); ++r) rest += runs[r].value * runs[r].multiplicity;
  const auto [value, mult] = runs[run];
  for (int l = mult; l * value + rest <= budget; ++l) {
    word.insert(word.end(), static_cast<std::size_t>(l), value);
    for_each_glide_term(runs, run + 1, budget - l * value, word,
                        excess_sign_product * binomial(l - 1, mult - 1), excess + (l - mult), emit);
    word.resize(word.size() - static_cast<std::size_t>(l));
  }
}

}  // namespace

std::map<Composition, Integer> overlapping_shuffle(const Composition& alpha, const Composition& beta) {
  std::map<Composition, Integer> out;
  std::vector<int> prefix;
  shuffle_rec(alpha.parts(), beta.parts(), prefix, out);
  return out;
}

QSymElement m_multiply(const QSymElement& f, const QSymElement& g) {
  QSymElement out(min_bound(f.degree_bound(), g.degree_bound()));
  for (const auto& [alpha, a] : f.coords()) {
    for (const auto& [beta, b] : g.coords()) {
      if (!out.within_bound(alpha.size() + beta.size())) continue;
      const Rational ab = a * b;
      for (const auto& [gamma, mult] : overlapping_shuffle(alpha, beta)) {
        out.add_term(gamma, ab * Rational(mult));
      }
    }
  }
  return out;
}

QSymElement glide_in_m_basis(const Composition& alpha, int D) {
  QSymElement out(D);
  if (alpha.size() > D) return out;
  const RunEncoding runs = run_encode(alpha);
  std::vector<int> word;
  auto emit = [&](const Composition& gamma, const Integer& c) { out.add_term(gamma, Rational(c)); };
  for_each_glide_term(runs, 0, D, word, Integer(1), 0, emit);
  return out;
}

std::map<Composition, Rational> glide_expand(const QSymElement& f, int D) {
  QSymElement residual = f.truncated(D);
  const int bound = *residual.degree_bound();
  std::map<Composition, Rational> coords;
  while (auto low = residual.lowest_degree()) {
    const QSymElement lowest = residual.homogeneous_part(*low);
    for (const auto& [gamma, c] : lowest.coords()) {
      coords[gamma] += c;
      residual -= glide_in_m_basis(gamma, bound) * c;
    }
  }
  std::erase_if(coords, [](const auto& entry) { return entry.second == 0; });
  return coords;
}

std::map<Composition, Rational> glide_structure_constants(const Composition& alpha,
                                                          const Composition& beta, int D) {
  return glide_expand(m_multiply(glide_in_m_basis(alpha, D), glide_in_m_basis(beta, D)), D);
}

}  // namespace glidekit
