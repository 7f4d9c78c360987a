#include "glidekit/poset.hpp"

#include <algorithm>
#include <set>

#include "glidekit/error.hpp"

namespace glidekit {

namespace {

void require_slots(const Composition& alpha, std::size_t n) {
  if (n < alpha.length()) {
    throw Error(ErrorCode::kTooFewSlots, "n = " + std::to_string(n) + " is smaller than the length of " +
                                             to_string(alpha));
  }
}

// Places alpha at every increasing choice of positions, recursing on the
// next part to place.
void place_parts(const Composition& alpha, std::size_t part, std::size_t from,
                 std::vector<int>& buf, std::vector<WeakComposition>& out) {
  if (part == alpha.length()) {
    out.emplace_back(buf);
    return;
  }
  const std::size_t remaining = alpha.length() - part;
  for (std::size_t pos = from; pos + remaining <= buf.size(); ++pos) {
    buf[pos] = alpha[part];
    place_parts(alpha, part + 1, pos + 1, buf, out);
    buf[pos] = 0;
  }
}

}  // namespace

std::vector<WeakComposition> atoms(const Composition& alpha, std::size_t n) {
  require_slots(alpha, n);
  std::vector<WeakComposition> out;
  std::vector<int> buf(n, 0);
  place_parts(alpha, 0, 0, buf, out);
  std::sort(out.begin(), out.end());
  return out;
}

WeakComposition join(const WeakComposition& p, const WeakComposition& q) {
  if (p.length() != q.length()) {
    throw Error(ErrorCode::kLengthMismatch, "cannot join " + to_string(p) + " and " + to_string(q));
  }
  std::vector<int> out(p.length());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(p[i], q[i]);
  return WeakComposition(std::move(out));
}

GlidePoset::GlidePoset(Composition alpha, std::size_t n, std::vector<WeakComposition> elements)
    : alpha_(std::move(alpha)), n_(n), elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (positive_part(elements_[i]) == alpha_) atoms_.push_back(i);
  }
}

GlidePoset GlidePoset::build(const Composition& alpha, std::size_t n) {
  const std::vector<WeakComposition> base = atoms(alpha, n);
  std::set<WeakComposition> closure(base.begin(), base.end());
  // Every element is a join of atoms, so joining the frontier with atoms
  // reaches the same fixed point as closing under all pairwise joins.
  std::vector<WeakComposition> frontier = base;
  while (!frontier.empty()) {
    std::vector<WeakComposition> next;
    for (const auto& p : frontier) {
      for (const auto& a : base) {
        WeakComposition j = join(p, a);
        if (closure.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return GlidePoset(alpha, n, std::vector<WeakComposition>(closure.begin(), closure.end()));
}

std::optional<std::size_t> GlidePoset::index_of(const WeakComposition& w) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), w);
  if (it == elements_.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool GlidePoset::leq(std::size_t i, std::size_t j) const {
  return i == j || (i < j && componentwise_leq(elements_[i], elements_[j]));
}

std::vector<std::pair<std::size_t, std::size_t>> GlidePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::vector<std::size_t> above;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    above.clear();
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      if (leq(i, j)) above.push_back(j);
    }
    for (std::size_t a = 0; a < above.size(); ++a) {
      const std::size_t j = above[a];
      bool covered = true;
      for (std::size_t b = 0; b < a && covered; ++b) covered = !leq(above[b], j);
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

const Integer& MobiusTable::at(const GlidePoset& poset, const WeakComposition& w) const {
  auto idx = poset.index_of(w);
  if (!idx) throw Error(ErrorCode::kNotInPoset, to_string(w) + " is not an element of the poset");
  return values_[*idx];
}

MeetResult meet(const GlidePoset& poset, const WeakComposition& p, const WeakComposition& q) {
  auto ip = poset.index_of(p);
  auto iq = poset.index_of(q);
  if (!ip || !iq) {
    throw Error(ErrorCode::kNotInPoset, "meet arguments must be poset elements");
  }
  std::optional<WeakComposition> lower;
  for (std::size_t r = 0; r < poset.size(); ++r) {
    if (poset.leq(r, *ip) && poset.leq(r, *iq)) {
      lower = lower ? join(*lower, poset.element(r)) : poset.element(r);
    }
  }
  if (!lower) return Bottom{};
  return *lower;
}

MobiusTable mobius(const GlidePoset& poset) {
  std::vector<Integer> mu(poset.size());
  for (std::size_t p = 0; p < poset.size(); ++p) {
    Integer below = 0;
    for (std::size_t q = 0; q < p; ++q) {
      if (poset.leq(q, p)) below += mu[q];
    }
    mu[p] = 1 - below;
  }
  return MobiusTable(std::move(mu));
}

std::vector<Integer> traditional_mobius(const GlidePoset& poset) {
  // mu(0hat, 0hat) = 1 and sum_{0hat <= q <= p} mu(0hat, q) = 0 for p > 0hat.
  std::vector<Integer> mu(poset.size());
  for (std::size_t p = 0; p < poset.size(); ++p) {
    Integer interval = 1;
    for (std::size_t q = 0; q < p; ++q) {
      if (poset.leq(q, p)) interval += mu[q];
    }
    mu[p] = -interval;
  }
  return mu;
}

namespace {

// Index of join(element(e), element(pool[k])) for every element e below
// `below` (all elements when absent) and pool position k.
std::vector<std::vector<std::size_t>> atom_join_table(const GlidePoset& poset,
                                                      const std::vector<std::size_t>& pool,
                                                      std::optional<std::size_t> below) {
  std::vector<std::vector<std::size_t>> table(poset.size());
  for (std::size_t e = 0; e < poset.size(); ++e) {
    if (below && !poset.leq(e, *below)) continue;
    table[e].resize(pool.size());
    for (std::size_t k = 0; k < pool.size(); ++k) {
      table[e][k] = *poset.index_of(join(poset.element(e), poset.element(pool[k])));
    }
  }
  return table;
}

// Calls visit(index of join R, |R| odd) for every nonempty subset R of the
// pool, extending joins one atom at a time.
template <typename Visit>
void for_each_subset_join(const std::vector<std::vector<std::size_t>>& table, std::size_t from,
                          std::size_t acc, bool odd, Visit& visit) {
  for (std::size_t k = from; k < table[acc].size(); ++k) {
    const std::size_t j = table[acc][k];
    visit(j, !odd);
    for_each_subset_join(table, k + 1, j, !odd, visit);
  }
}

std::vector<std::size_t> checked_pool(const GlidePoset& poset, std::optional<std::size_t> below) {
  std::vector<std::size_t> pool;
  for (std::size_t a : poset.atom_indices()) {
    if (!below || poset.leq(a, *below)) pool.push_back(a);
  }
  if (pool.size() > kCrosscutAtomLimit) {
    throw Error(ErrorCode::kTooLarge, "crosscut oracle limited to " +
                                          std::to_string(kCrosscutAtomLimit) + " atoms");
  }
  return pool;
}

// Signed subset counts indexed by element, seeded with each single atom.
std::vector<long> crosscut_counts(const GlidePoset& poset, std::optional<std::size_t> below) {
  const auto pool = checked_pool(poset, below);
  const auto table = atom_join_table(poset, pool, below);
  std::vector<long> counts(poset.size(), 0);
  auto visit = [&](std::size_t j, bool odd) { counts[j] += odd ? -1 : 1; };
  for (std::size_t k = 0; k < pool.size(); ++k) {
    counts[pool[k]] -= 1;
    for_each_subset_join(table, k + 1, pool[k], true, visit);
  }
  return counts;
}

}  // namespace

Integer mobius_crosscut(const GlidePoset& poset, const WeakComposition& sigma) {
  const auto index = poset.index_of(sigma);
  if (!index) throw Error(ErrorCode::kNotInPoset, to_string(sigma) + " is not an element of the poset");
  return Integer(-crosscut_counts(poset, *index)[*index]);
}

std::vector<Integer> mobius_crosscut_all(const GlidePoset& poset) {
  const auto counts = crosscut_counts(poset, std::nullopt);
  std::vector<Integer> out;
  out.reserve(poset.size());
  for (long c : counts) out.emplace_back(-c);
  return out;
}

bool is_lattice_with_bottom(const GlidePoset& poset) {
  const std::size_t size = poset.size();
  std::vector<std::size_t> bounds;
  for (std::size_t p = 0; p < size; ++p) {
    for (std::size_t q = p + 1; q < size; ++q) {
      // Join: the set of upper bounds must have a least element. Only the
      // lexicographically first upper bound can be least.
      bounds.clear();
      for (std::size_t s = 0; s < size; ++s) {
        if (poset.leq(p, s) && poset.leq(q, s)) bounds.push_back(s);
      }
      if (bounds.empty()) return false;
      for (std::size_t s : bounds) {
        if (!poset.leq(bounds.front(), s)) return false;
      }
      // Meet: no lower bound means the meet is 0hat; otherwise the
      // lexicographically last lower bound must dominate the others.
      bounds.clear();
      for (std::size_t r = 0; r < size; ++r) {
        if (poset.leq(r, p) && poset.leq(r, q)) bounds.push_back(r);
      }
      for (std::size_t r : bounds) {
        if (!poset.leq(r, bounds.back())) return false;
      }
    }
  }
  return true;
}

}  // namespace glidekit
