#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace oracle {

Poly from_sparse(const SparsePoly& f) {
  Poly out;
  for (const auto& [w, c] : f.terms()) out[w.vec()] = c;
  return out;
}

namespace {

void put(Poly& p, const std::vector<int>& e, const Rational& c) {
  Rational& slot = p[e];
  slot += c;
  if (slot == 0) p.erase(e);
}

}  // namespace

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      put(out, e, ca * cb);
    }
  }
  return out;
}

Poly add(const Poly& a, const Poly& b, const Rational& scale) {
  Poly out = a;
  for (const auto& [e, c] : b) put(out, e, c * scale);
  return out;
}

Poly monomial_qsym(const Composition& alpha, std::size_t n) {
  Poly out;
  const std::size_t k = alpha.length();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    std::vector<int> e(n, 0);
    std::size_t j = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) e[i] = alpha[j++];
    }
    put(out, e, 1);
  }
  return out;
}

namespace {

std::vector<std::vector<int>> increasing_maps(std::size_t len, int k) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != len) continue;
    std::vector<int> img;
    for (int i = 0; i < k; ++i) {
      if (mask & (1u << i)) img.push_back(i);
    }
    out.push_back(img);
  }
  return out;
}

}  // namespace

std::map<Composition, Integer> shuffle_by_surjections(const Composition& alpha, const Composition& beta) {
  std::map<Composition, Integer> out;
  const std::size_t m = alpha.length();
  const std::size_t n = beta.length();
  for (int k = static_cast<int>(std::max(m, n)); k <= static_cast<int>(m + n); ++k) {
    for (const auto& ta : increasing_maps(m, k)) {
      for (const auto& tb : increasing_maps(n, k)) {
        std::vector<int> gamma(static_cast<std::size_t>(k), 0);
        std::vector<bool> hit(static_cast<std::size_t>(k), false);
        for (std::size_t j = 0; j < m; ++j) {
          gamma[static_cast<std::size_t>(ta[j])] += alpha[j];
          hit[static_cast<std::size_t>(ta[j])] = true;
        }
        for (std::size_t j = 0; j < n; ++j) {
          gamma[static_cast<std::size_t>(tb[j])] += beta[j];
          hit[static_cast<std::size_t>(tb[j])] = true;
        }
        if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) out[Composition(gamma)] += 1;
      }
    }
  }
  return out;
}

std::set<WeakComposition> c_by_moves(const Composition& alpha, std::size_t n) {
  std::set<WeakComposition> seen;
  std::deque<std::vector<int>> queue;
  // Seed with the zero paddings, generated by moving the zeros of 0^{n-N} alpha.
  std::vector<int> start(n - alpha.length(), 0);
  start.insert(start.end(), alpha.vec().begin(), alpha.vec().end());
  queue.push_back(start);
  seen.insert(WeakComposition(start));
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] != 0 || s[i + 1] <= 0) continue;
      auto swapped = s;
      std::swap(swapped[i], swapped[i + 1]);
      auto doubled = s;
      doubled[i] = s[i + 1];
      for (auto& t : {swapped, doubled}) {
        if (seen.insert(WeakComposition(t)).second) queue.push_back(t);
      }
    }
  }
  return seen;
}

std::vector<Rational> projective_class_line_bundles(int r, int m) {
  std::vector<Rational> cls(static_cast<std::size_t>(m) + 1, Rational(0));
  cls[0] = 1;
  for (int d = m; d > r; --d) {
    // Twisting by O(-1) shifts every index up by one.
    std::vector<Rational> next = cls;
    for (std::size_t i = 0; i + 1 < cls.size(); ++i) next[i + 1] -= cls[i];
    cls = std::move(next);
  }
  return cls;
}

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

Poly one_minus_product(std::size_t n) {
  Poly prod{{std::vector<int>(n, 0), Rational(1)}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> yi(n, 0);
    yi[i] = 1;
    prod = multiply(prod, Poly{{std::vector<int>(n, 0), Rational(1)}, {yi, Rational(-1)}});
  }
  return add(Poly{{std::vector<int>(n, 0), Rational(1)}}, prod, -1);
}

namespace {

Poly complete_homogeneous(int d, std::size_t k) {
  Poly out;
  if (d < 0) return out;
  std::vector<int> e(k, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == k) {
      e[i] = left;
      put(out, e, 1);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[i] = v;
      self(self, i + 1, left - v);
    }
  };
  if (k == 0) {
    if (d == 0) out[{}] = 1;
    return out;
  }
  rec(rec, 0, d);
  return out;
}

}  // namespace

Poly schur_jacobi_trudi(const Partition& lambda, std::size_t k) {
  const std::size_t l = lambda.length();
  std::vector<std::size_t> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  Poly det;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < l; ++a) {
      for (std::size_t b = a + 1; b < l; ++b) inversions += perm[a] > perm[b];
    }
    Poly term{{std::vector<int>(k, 0), Rational(inversions % 2 == 0 ? 1 : -1)}};
    for (std::size_t i = 0; i < l && !term.empty(); ++i) {
      const int d = lambda[i] - static_cast<int>(i) + static_cast<int>(perm[i]);
      term = multiply(term, complete_homogeneous(d, k));
    }
    det = add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::map<Partition, Integer> schur_expand(Poly f, std::size_t k) {
  std::map<Partition, Integer> out;
  while (!f.empty()) {
    // The lex-largest exponent of a symmetric polynomial is a partition and
    // is the leading monomial of exactly one Schur polynomial.
    const auto& [lead, c] = *f.rbegin();
    const Partition lambda(lead);
    const Rational coeff = c;
    out[lambda] = coeff.get_num();
    f = add(f, schur_jacobi_trudi(lambda, k), -coeff);
  }
  return out;
}

std::vector<Composition> all_compositions(int max_size) {
  std::vector<Composition> out{Composition{}};
  for (int s = 1; s <= max_size; ++s) {
    for (std::uint32_t cuts = 0; cuts < (1u << (s - 1)); ++cuts) {
      std::vector<int> parts;
      int run = 1;
      for (int i = 0; i < s - 1; ++i) {
        if (cuts & (1u << i)) {
          parts.push_back(run);
          run = 1;
        } else {
          ++run;
        }
      }
      parts.push_back(run);
      out.emplace_back(parts);
    }
  }
  return out;
}

Composition Generator::composition(int max_size) {
  const int size = uniform(0, max_size);
  std::vector<int> parts;
  int left = size;
  while (left > 0) {
    const int p = uniform(1, left);
    parts.push_back(p);
    left -= p;
  }
  return Composition(parts);
}

Partition Generator::partition(std::size_t k, int max_size) {
  while (true) {
    const int size = uniform(1, max_size);
    std::vector<int> parts(k, 0);
    int left = size;
    for (std::size_t i = 0; i < k && left > 0; ++i) {
      const int cap = i == 0 ? left : std::min(left, parts[i - 1]);
      parts[i] = i + 1 == k ? cap : uniform(0, cap);
      left -= parts[i];
    }
    if (left == 0 && parts[0] > 0) {
      std::sort(parts.rbegin(), parts.rend());
      return Partition(parts);
    }
  }
}

}  // namespace oracle
