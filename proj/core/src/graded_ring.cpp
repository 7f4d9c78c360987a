#include "glidekit/graded_ring.hpp"

#include <algorithm>

#include "glidekit/error.hpp"

namespace glidekit {

namespace {

[[noreturn]] void invalid(const std::string& message) { throw Error(ErrorCode::kInvalidRing, message); }

template <typename Map, typename Key>
void add_to_map(Map& m, const Key& key, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

}  // namespace

GradedRingData GradedRingData::create(std::vector<RingLabel> basis, std::string unit, Constants constants,
                                      LabelCombination counit) {
  GradedRingData ring;
  ring.unit_ = std::move(unit);
  for (auto& label : basis) {
    if (!ring.degrees_.emplace(label.name, label.degree).second) invalid("duplicate label '" + label.name + "'");
    if (label.name == ring.unit_) {
      if (label.degree != 0) invalid("unit '" + label.name + "' must have degree 0");
      continue;
    }
    if (label.degree <= 0) invalid("label '" + label.name + "' must have positive degree");
    ring.labels_.push_back(std::move(label));
  }
  if (!ring.degrees_.contains(ring.unit_)) invalid("unit '" + ring.unit_ + "' is not a basis label");
  std::sort(ring.labels_.begin(), ring.labels_.end(), [](const RingLabel& a, const RingLabel& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.name < b.name;
  });

  for (auto& [key, combo] : constants) {
    const auto& [a, b] = key;
    if (!ring.has_label(a) || !ring.has_label(b)) invalid("product of unknown labels '" + a + "', '" + b + "'");
    std::erase_if(combo, [](const auto& entry) { return entry.second == 0; });
    for (const auto& [c, coeff] : combo) {
      if (!ring.has_label(c)) invalid("product yields unknown label '" + c + "'");
      if (ring.degree(c) != ring.degree(a) + ring.degree(b)) {
        invalid("product '" + a + "' * '" + b + "' does not respect the grading");
      }
    }
    if (a == ring.unit_ || b == ring.unit_) {
      const std::string& other = a == ring.unit_ ? b : a;
      if (combo != LabelCombination{{other, Rational(1)}}) invalid("unit does not act as identity on '" + other + "'");
    }
  }
  ring.constants_ = std::move(constants);

  for (const auto& [label, value] : counit) {
    if (!ring.has_label(label)) invalid("counit on unknown label '" + label + "'");
    if (value != (label == ring.unit_ ? 1 : 0)) invalid("counit must send the unit to 1 and positive degrees to 0");
  }
  return ring;
}

int GradedRingData::degree(const std::string& name) const {
  auto it = degrees_.find(name);
  if (it == degrees_.end()) throw Error(ErrorCode::kUnknownLabel, "unknown label '" + name + "'");
  return it->second;
}

Rational GradedRingData::counit(const std::string& name) const {
  return degree(name) == 0 ? Rational(1) : Rational(0);
}

LabelCombination GradedRingData::product(const std::string& a, const std::string& b) const {
  degree(a);
  degree(b);
  if (a == unit_) return {{b, Rational(1)}};
  if (b == unit_) return {{a, Rational(1)}};
  auto it = constants_.find({a, b});
  return it == constants_.end() ? LabelCombination{} : it->second;
}

GradedRingData cp_infinity_ring(int max_power) {
  if (max_power < 0) throw Error(ErrorCode::kOutOfRange, "max_power must be nonnegative");
  std::vector<RingLabel> basis;
  for (int a = 0; a <= max_power; ++a) basis.push_back({std::to_string(a), 2 * a});
  GradedRingData::Constants constants;
  for (int a = 1; a <= max_power; ++a) {
    for (int b = 1; a + b <= max_power; ++b) {
      constants[{std::to_string(a), std::to_string(b)}] = {{std::to_string(a + b), Rational(1)}};
    }
  }
  return GradedRingData::create(std::move(basis), "0", std::move(constants));
}

namespace {

void check_tuple(const LabelTuple& t, const GradedRingData& ring) {
  for (const auto& label : t) {
    ring.degree(label);
    if (label == ring.unit()) {
      throw Error(ErrorCode::kUnknownLabel, "the unit '" + label + "' cannot appear in a label tuple");
    }
  }
}

// Every increasing sequence of k slots in [0, n).
std::vector<std::vector<std::size_t>> increasing_slots(std::size_t k, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t s = start; s + (k - cur.size()) <= n; ++s) {
      cur.push_back(s);
      self(self, s + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Slotwise product of two pure tensors, accumulated into out with weight c.
void multiply_pure(const LabelTuple& a, const LabelTuple& b, const Rational& c, const GradedRingData& ring,
                   TensorElement& out) {
  std::vector<LabelCombination> factors;
  factors.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    factors.push_back(ring.product(a[i], b[i]));
    if (factors.back().empty()) return;
  }
  LabelTuple cur(a.size());
  auto rec = [&](auto&& self, std::size_t i, const Rational& weight) -> void {
    if (i == factors.size()) {
      add_to_map(out, cur, weight);
      return;
    }
    for (const auto& [label, coeff] : factors[i]) {
      cur[i] = label;
      self(self, i + 1, weight * coeff);
    }
  };
  rec(rec, 0, c);
}

}  // namespace

TensorElement m_tensor(const LabelTuple& theta, const GradedRingData& ring, std::size_t n) {
  check_tuple(theta, ring);
  if (theta.size() > n) {
    throw Error(ErrorCode::kTupleTooLong, "tuple of length " + std::to_string(theta.size()) +
                                              " does not fit in " + std::to_string(n) + " slots");
  }
  TensorElement out;
  for (const auto& slots : increasing_slots(theta.size(), n)) {
    LabelTuple t(n, ring.unit());
    for (std::size_t j = 0; j < slots.size(); ++j) t[slots[j]] = theta[j];
    out.emplace(std::move(t), Rational(1));
  }
  return out;
}

TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b, const GradedRingData& ring) {
  TensorElement out;
  for (const auto& [ta, ca] : a) {
    for (const auto& [tb, cb] : b) {
      if (ta.size() != tb.size()) throw Error(ErrorCode::kLengthMismatch, "tensor lengths differ");
      multiply_pure(ta, tb, ca * cb, ring, out);
    }
  }
  return out;
}

TensorElement counit_project(const TensorElement& t, const GradedRingData& ring) {
  TensorElement out;
  for (const auto& [tuple, c] : t) {
    if (tuple.empty()) throw Error(ErrorCode::kLengthMismatch, "cannot project a zero-slot tensor");
    const Rational eta = ring.counit(tuple.back());
    if (eta == 0) continue;
    add_to_map(out, LabelTuple(tuple.begin(), tuple.end() - 1), c * eta);
  }
  return out;
}

std::map<LabelTuple, Rational> qsym_r_product(const LabelTuple& theta, const LabelTuple& kappa,
                                              const GradedRingData& ring, std::size_t n) {
  check_tuple(theta, ring);
  check_tuple(kappa, ring);
  if (theta.size() + kappa.size() > n) {
    throw Error(ErrorCode::kTupleTooLong, "need n >= " + std::to_string(theta.size() + kappa.size()));
  }
  // Only pairs of placements whose occupied slots form an initial segment can
  // produce an initial-segment tensor, so the others are skipped.
  const auto theta_slots = increasing_slots(theta.size(), n);
  const auto kappa_slots = increasing_slots(kappa.size(), n);
  TensorElement product;
  for (const auto& si : theta_slots) {
    for (const auto& sj : kappa_slots) {
      std::vector<bool> used(n, false);
      for (auto s : si) used[s] = true;
      for (auto s : sj) used[s] = true;
      const auto k = static_cast<std::size_t>(std::count(used.begin(), used.end(), true));
      if (!std::all_of(used.begin(), used.begin() + static_cast<std::ptrdiff_t>(k), [](bool u) { return u; })) continue;
      LabelTuple a(k, ring.unit());
      LabelTuple b(k, ring.unit());
      for (std::size_t j = 0; j < si.size(); ++j) a[si[j]] = theta[j];
      for (std::size_t j = 0; j < sj.size(); ++j) b[sj[j]] = kappa[j];
      multiply_pure(a, b, Rational(1), ring, product);
    }
  }
  return product;
}

std::map<LabelTuple, Rational> qsym_r_product_direct(const LabelTuple& theta, const LabelTuple& kappa,
                                                     const GradedRingData& ring) {
  check_tuple(theta, ring);
  check_tuple(kappa, ring);
  std::map<LabelTuple, Rational> out;
  LabelTuple prefix;
  auto rec = [&](auto&& self, std::size_t i, std::size_t j, const Rational& weight) -> void {
    if (i == theta.size() && j == kappa.size()) {
      add_to_map(out, prefix, weight);
      return;
    }
    if (i < theta.size()) {
      prefix.push_back(theta[i]);
      self(self, i + 1, j, weight);
      prefix.pop_back();
    }
    if (j < kappa.size()) {
      prefix.push_back(kappa[j]);
      self(self, i, j + 1, weight);
      prefix.pop_back();
    }
    if (i < theta.size() && j < kappa.size()) {
      for (const auto& [label, c] : ring.product(theta[i], kappa[j])) {
        prefix.push_back(label);
        self(self, i + 1, j + 1, weight * c);
        prefix.pop_back();
      }
    }
  };
  rec(rec, 0, 0, Rational(1));
  return out;
}

}  // namespace glidekit
