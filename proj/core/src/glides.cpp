#include "glidekit/glides.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "glidekit/error.hpp"
#include "glidekit/poset.hpp"

namespace glidekit {

BarredString::BarredString(std::vector<int> entries) : entries_(std::move(entries)) {}

BarredString BarredString::unbarred(const WeakComposition& w) { return BarredString(w.vec()); }

std::size_t BarredString::barred_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](int e) { return e < 0; }));
}

WeakComposition BarredString::projection() const {
  std::vector<int> out(entries_.size());
  std::transform(entries_.begin(), entries_.end(), out.begin(), [](int e) { return e < 0 ? -e : e; });
  return WeakComposition(std::move(out));
}

std::string to_string(const BarredString& s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (i) os << ',';
    const int e = s.entries()[i];
    if (e < 0) {
      os << -e << '~';
    } else {
      os << e;
    }
  }
  os << ')';
  return os.str();
}

std::string_view glide_method_name(GlideMethod method) {
  switch (method) {
    case GlideMethod::kPoset: return "poset";
    case GlideMethod::kBarred: return "barred";
    case GlideMethod::kClosed: return "closed";
  }
  return "closed";
}

GlideMethod parse_glide_method(std::string_view name) {
  if (name == "poset") return GlideMethod::kPoset;
  if (name == "barred") return GlideMethod::kBarred;
  if (name == "closed") return GlideMethod::kClosed;
  throw Error(ErrorCode::kParse, "unknown glide method '" + std::string(name) + "'");
}

namespace {

void require_slots(const Composition& alpha, std::size_t n) {
  if (n < alpha.length()) {
    throw Error(ErrorCode::kTooFewSlots, "n = " + std::to_string(n) + " is smaller than the length of " +
                                             to_string(alpha));
  }
}

// Calls emit(word) for every word a_1^{l_1}...a_k^{l_k} with l_i >= N_i and
// total length <= max_len, passing the chosen block lengths.
template <typename Emit>
void for_each_block_word(const RunEncoding& runs, std::size_t run, std::size_t max_len,
                         std::vector<int>& word, std::vector<int>& lengths, Emit& emit) {
  if (run == runs.size()) {
    emit(word, lengths);
    return;
  }
  std::size_t min_rest = 0;
  for (std::size_t r = run + 1; r < runs.size(); ++r) min_rest += static_cast<std::size_t>(runs[r].multiplicity);
  const auto [value, mult] = runs[run];
  for (std::size_t l = static_cast<std::size_t>(mult); word.size() + l + min_rest <= max_len; ++l) {
    word.insert(word.end(), l, value);
    lengths.push_back(static_cast<int>(l));
    for_each_block_word(runs, run + 1, max_len, word, lengths, emit);
    lengths.pop_back();
    word.resize(word.size() - l);
  }
}

Integer closed_value(const RunEncoding& runs, std::span<const int> lengths) {
  long excess = 0;
  Integer product = 1;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    excess += lengths[i] - runs[i].multiplicity;
    product *= binomial(lengths[i] - 1, runs[i].multiplicity - 1);
  }
  return excess % 2 == 0 ? product : Integer(-product);
}

template <typename Move>
std::set<BarredString> move_closure(std::vector<BarredString> seeds, Move&& apply_moves) {
  std::set<BarredString> seen(seeds.begin(), seeds.end());
  std::deque<BarredString> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    BarredString s = std::move(queue.front());
    queue.pop_front();
    apply_moves(s, [&](BarredString t) {
      if (seen.insert(t).second) queue.push_back(std::move(t));
    });
  }
  return seen;
}

// 0p -> p0 and 0p -> p pbar for every unbarred positive p.
template <typename Out>
void barred_moves(const BarredString& s, Out&& out) {
  const auto e = s.entries();
  for (std::size_t i = 0; i + 1 < e.size(); ++i) {
    if (e[i] != 0 || e[i + 1] <= 0) continue;
    std::vector<int> swapped(e.begin(), e.end());
    std::swap(swapped[i], swapped[i + 1]);
    out(BarredString(std::move(swapped)));
    std::vector<int> barred(e.begin(), e.end());
    barred[i] = e[i + 1];
    barred[i + 1] = -e[i + 1];
    out(BarredString(std::move(barred)));
  }
}

}  // namespace

std::vector<WeakComposition> enumerate_C(const Composition& alpha, std::size_t n) {
  require_slots(alpha, n);
  const RunEncoding runs = run_encode(alpha);
  std::vector<WeakComposition> out;
  std::vector<int> word;
  std::vector<int> lengths;
  auto emit = [&](const std::vector<int>& w, const std::vector<int>&) {
    auto placed = atoms(Composition(w), n);
    out.insert(out.end(), placed.begin(), placed.end());
  };
  for_each_block_word(runs, 0, n, word, lengths, emit);
  std::sort(out.begin(), out.end());
  return out;
}

std::set<BarredString> enumerate_C_tilde(const Composition& alpha, std::size_t n) {
  std::vector<BarredString> seeds;
  for (const auto& a : atoms(alpha, n)) seeds.push_back(BarredString::unbarred(a));
  return move_closure(std::move(seeds), [](const BarredString& s, auto&& out) { barred_moves(s, out); });
}

std::optional<std::vector<int>> block_lengths(const WeakComposition& sigma, const Composition& alpha) {
  const RunEncoding runs = run_encode(alpha);
  const Composition word = positive_part(sigma);
  std::vector<int> lengths;
  std::size_t pos = 0;
  for (const Run& r : runs.runs()) {
    int l = 0;
    while (pos < word.length() && word[pos] == r.value) {
      ++l;
      ++pos;
    }
    if (l < r.multiplicity) return std::nullopt;
    lengths.push_back(l);
  }
  if (pos != word.length()) return std::nullopt;
  return lengths;
}

Integer mu_prime(const WeakComposition& sigma, const Composition& alpha, std::size_t n) {
  if (sigma.length() != n) {
    throw Error(ErrorCode::kLengthMismatch, to_string(sigma) + " does not have length " + std::to_string(n));
  }
  Integer total = 0;
  for (const BarredString& s : enumerate_C_tilde(alpha, n)) {
    if (s.projection() == sigma) total += s.barred_count() % 2 == 0 ? 1 : -1;
  }
  return total;
}

Integer mu_closed(const WeakComposition& sigma, const Composition& alpha) {
  auto lengths = block_lengths(sigma, alpha);
  if (!lengths) {
    throw Error(ErrorCode::kNotInC, to_string(sigma) + " has no block decomposition for " + to_string(alpha));
  }
  return closed_value(run_encode(alpha), *lengths);
}

SparsePoly glide_polynomial(const Composition& alpha, std::size_t n, GlideMethod method) {
  require_slots(alpha, n);
  SparsePoly out(n);
  switch (method) {
    case GlideMethod::kPoset: {
      const GlidePoset poset = build_poset(alpha, n);
      const MobiusTable mu = mobius(poset);
      for (std::size_t i = 0; i < poset.size(); ++i) {
        out.add_term(poset.element(i), Rational(mu[i]));
      }
      break;
    }
    case GlideMethod::kBarred: {
      for (const BarredString& s : enumerate_C_tilde(alpha, n)) {
        out.add_term(s.projection(), s.barred_count() % 2 == 0 ? 1 : -1);
      }
      break;
    }
    case GlideMethod::kClosed: {
      const RunEncoding runs = run_encode(alpha);
      std::vector<int> word;
      std::vector<int> lengths;
      auto emit = [&](const std::vector<int>& w, const std::vector<int>& ls) {
        const Rational c(closed_value(runs, ls));
        for (const auto& sigma : atoms(Composition(w), n)) out.add_term(sigma, c);
      };
      for_each_block_word(runs, 0, n, word, lengths, emit);
      break;
    }
  }
  return out;
}

SparsePoly monomial_glide_weak(const WeakComposition& a) {
  auto closure = move_closure({BarredString::unbarred(a)},
                              [](const BarredString& s, auto&& out) { barred_moves(s, out); });
  SparsePoly out(a.length());
  for (const BarredString& s : closure) {
    out.add_term(s.projection(), s.barred_count() % 2 == 0 ? 1 : -1);
  }
  return out;
}

bool check_binomial_identity(int N, int l) {
  if (N < 1 || N > l) {
    throw Error(ErrorCode::kOutOfRange, "binomial identity requires 1 <= N <= l");
  }
  Integer sum = 0;
  for (int j = N; j <= l; ++j) {
    const Integer term = binomial(j - 1, N - 1) * binomial(l, j);
    sum += (j - N) % 2 == 0 ? term : Integer(-term);
  }
  return sum == 1;
}

}  // namespace glidekit
