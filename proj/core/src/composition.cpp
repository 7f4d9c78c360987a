#include "glidekit/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "glidekit/error.hpp"

namespace glidekit {

namespace {

std::string join_parts(std::span<const int> parts) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) {
      throw Error(ErrorCode::kInvalidComposition,
                  "composition parts must be positive: " + join_parts(parts_));
    }
    size_ += p;
  }
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

int Composition::max_part() const {
  return parts_.empty() ? 0 : *std::max_element(parts_.begin(), parts_.end());
}

std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
  return a.parts_ <=> b.parts_;
}

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) {
      throw Error(ErrorCode::kInvalidComposition,
                  "weak composition parts must be nonnegative: " + join_parts(parts_));
    }
  }
}

WeakComposition::WeakComposition(std::initializer_list<int> parts)
    : WeakComposition(std::vector<int>(parts)) {}

WeakComposition WeakComposition::zeros(std::size_t n) {
  return WeakComposition(std::vector<int>(n, 0));
}

int WeakComposition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::size_t WeakComposition::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(parts_.begin(), parts_.end(), [](int p) { return p != 0; }));
}

bool GradedLexLess::operator()(const WeakComposition& a, const WeakComposition& b) const {
  const int da = a.size();
  const int db = b.size();
  if (da != db) return da < db;
  return a < b;
}

bool componentwise_leq(const WeakComposition& a, const WeakComposition& b) {
  if (a.length() != b.length()) {
    throw Error(ErrorCode::kLengthMismatch,
                "cannot compare " + to_string(a) + " with " + to_string(b));
  }
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

RunEncoding::RunEncoding(std::vector<Run> runs) : runs_(std::move(runs)) {
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    if (runs_[i].value < 1 || runs_[i].multiplicity < 1) {
      throw Error(ErrorCode::kInvalidComposition, "run values and multiplicities must be positive");
    }
    if (i > 0 && runs_[i].value == runs_[i - 1].value) {
      throw Error(ErrorCode::kInvalidComposition, "adjacent runs must have distinct values");
    }
  }
}

Composition RunEncoding::expand() const {
  std::vector<int> parts;
  for (const Run& r : runs_) parts.insert(parts.end(), static_cast<std::size_t>(r.multiplicity), r.value);
  return Composition(std::move(parts));
}

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<bool> seen(one_line_.size() + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > static_cast<int>(one_line_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::kOutOfRange, "not a permutation in one-line notation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(one_line_.size());
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    inv[static_cast<std::size_t>(one_line_[i] - 1)] = static_cast<int>(i + 1);
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    if (one_line_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

std::size_t Permutation::inversions() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < one_line_.size(); ++i) {
    for (std::size_t j = i + 1; j < one_line_.size(); ++j) {
      if (one_line_[i] > one_line_[j]) ++count;
    }
  }
  return count;
}

WeakComposition zero_pad(const Composition& alpha, std::size_t leading_zeros) {
  std::vector<int> parts(leading_zeros, 0);
  parts.insert(parts.end(), alpha.vec().begin(), alpha.vec().end());
  return WeakComposition(std::move(parts));
}

Composition positive_part(const WeakComposition& w) {
  std::vector<int> parts;
  for (int p : w.parts()) {
    if (p != 0) parts.push_back(p);
  }
  return Composition(std::move(parts));
}

RunEncoding run_encode(const Composition& alpha) {
  std::vector<Run> runs;
  for (int p : alpha.parts()) {
    if (!runs.empty() && runs.back().value == p) {
      ++runs.back().multiplicity;
    } else {
      runs.push_back({p, 1});
    }
  }
  return RunEncoding(std::move(runs));
}

SortingData sorting_data(const Composition& alpha) {
  std::vector<int> omega(alpha.length());
  std::iota(omega.begin(), omega.end(), 1);
  // stable_sort keeps equal parts in increasing index order
  std::stable_sort(omega.begin(), omega.end(),
                   [&](int i, int j) { return alpha[static_cast<std::size_t>(i - 1)] < alpha[static_cast<std::size_t>(j - 1)]; });
  Permutation w(std::move(omega));
  const Permutation inv = w.inverse();
  return SortingData{w, Composition(std::vector<int>(inv.one_line().begin(), inv.one_line().end()))};
}

namespace {

WeakComposition rewrite_nonzero(const WeakComposition& tau, const Composition& values,
                                const char* what) {
  if (tau.nonzero_count() != values.length()) {
    throw Error(ErrorCode::kWrongAtomShape,
                std::string(what) + ": " + to_string(tau) + " must have exactly " +
                    std::to_string(values.length()) + " nonzero entries");
  }
  std::vector<int> out = tau.vec();
  std::size_t next = 0;
  for (int& p : out) {
    if (p != 0) p = values[next++];
  }
  return WeakComposition(std::move(out));
}

}  // namespace

WeakComposition standardize(const WeakComposition& tau, const SortingData& data) {
  return rewrite_nonzero(tau, data.beta, "standardize");
}

WeakComposition semistandardize(const WeakComposition& tau, const Composition& alpha) {
  return rewrite_nonzero(tau, alpha, "semistandardize");
}

std::vector<Composition> compositions_of(int total) {
  std::vector<Composition> out;
  if (total < 0) return out;
  if (total == 0) {
    out.emplace_back();
    return out;
  }
  // bit i of mask set means a cut after position i+1
  const unsigned cuts = static_cast<unsigned>(total - 1);
  for (unsigned long mask = 0; mask < (1UL << cuts); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (unsigned i = 0; i < cuts; ++i) {
      if (mask & (1UL << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> compositions_up_to(int max_size) {
  std::vector<Composition> out;
  for (int s = 0; s <= max_size; ++s) {
    auto level = compositions_of(s);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::string to_string(const Composition& alpha) { return join_parts(alpha.parts()); }
std::string to_string(const WeakComposition& w) { return join_parts(w.parts()); }
std::ostream& operator<<(std::ostream& os, const Composition& alpha) { return os << to_string(alpha); }
std::ostream& operator<<(std::ostream& os, const WeakComposition& w) { return os << to_string(w); }

}  // namespace glidekit
