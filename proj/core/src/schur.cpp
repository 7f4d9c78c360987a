#include "glidekit/schur.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "glidekit/error.hpp"

namespace glidekit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      std::ostringstream os;
      os << "parts must be nonnegative and weakly decreasing: (";
      for (std::size_t j = 0; j < parts_.size(); ++j) os << (j ? "," : "") << parts_[j];
      os << ')';
      throw Error(ErrorCode::kInvalidPartition, os.str());
    }
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::zero(std::size_t k) { return Partition(std::vector<int>(k, 0)); }

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 0; });
}

bool Partition::contained_in(const Partition& other) const {
  if (length() != other.length()) return false;
  for (std::size_t i = 0; i < length(); ++i) {
    if (parts_[i] > other.parts_[i]) return false;
  }
  return true;
}

std::string partition_label(const Partition& lambda) {
  std::string out;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambda[i]);
  }
  return out;
}

std::string to_string(const Partition& lambda) { return "(" + partition_label(lambda) + ")"; }

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition(parts);
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw Error(ErrorCode::kParse, "malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(std::size_t k, int remaining, int cap, std::vector<int>& cur, std::vector<Partition>& out) {
  if (cur.size() == k) {
    if (remaining == 0) out.emplace_back(cur);
    return;
  }
  for (int p = std::min(cap, remaining); p >= 0; --p) {
    cur.push_back(p);
    partitions_rec(k, remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of_size(std::size_t k, int size) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(k, size, size, cur, out);
  return out;
}

}  // namespace

std::vector<Partition> partitions_up_to(std::size_t k, int max_size) {
  std::vector<Partition> out;
  for (int s = 0; s <= max_size; ++s) {
    auto part = partitions_of_size(k, s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (outer_.length() != inner_.length()) {
    throw Error(ErrorCode::kLengthMismatch, to_string(inner_) + " and " + to_string(outer_) + " differ in length");
  }
  if (!inner_.contained_in(outer_)) {
    throw Error(ErrorCode::kInvalidPartition, to_string(inner_) + " is not contained in " + to_string(outer_));
  }
}

SkewShape SkewShape::straight(Partition outer) {
  Partition inner = Partition::zero(outer.length());
  return SkewShape(std::move(outer), std::move(inner));
}

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows) : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (rows_.size() != shape_.rows()) throw Error(ErrorCode::kSizeMismatch, "row count differs from the shape");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (static_cast<int>(rows_[r].size()) != shape_.row_length(r)) {
      throw Error(ErrorCode::kSizeMismatch, "row " + std::to_string(r + 1) + " has the wrong length");
    }
    for (std::size_t j = 0; j < rows_[r].size(); ++j) {
      if (rows_[r][j] < 1) throw Error(ErrorCode::kNotSemistandard, "entries must be positive");
      if (j > 0 && rows_[r][j] < rows_[r][j - 1]) {
        throw Error(ErrorCode::kNotSemistandard, "row " + std::to_string(r + 1) + " decreases");
      }
      const int c = shape_.inner()[r] + static_cast<int>(j);
      if (r > 0 && shape_.has_cell(r - 1, c) && at(r - 1, c) >= rows_[r][j]) {
        throw Error(ErrorCode::kNotSemistandard, "column " + std::to_string(c + 1) + " does not increase");
      }
    }
  }
}

WeakComposition content(const Tableau& t) {
  std::vector<int> counts;
  for (const auto& row : t.rows()) {
    for (int v : row) {
      if (static_cast<std::size_t>(v) > counts.size()) counts.resize(static_cast<std::size_t>(v), 0);
      ++counts[static_cast<std::size_t>(v - 1)];
    }
  }
  return WeakComposition(std::move(counts));
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> word;
  for (const auto& row : t.rows()) word.insert(word.end(), row.rbegin(), row.rend());
  return word;
}

bool is_ballot(std::span<const int> word) {
  std::vector<int> counts;
  for (int v : word) {
    if (v < 1) return false;
    if (static_cast<std::size_t>(v) > counts.size()) counts.resize(static_cast<std::size_t>(v), 0);
    ++counts[static_cast<std::size_t>(v - 1)];
    if (v > 1 && counts[static_cast<std::size_t>(v - 1)] > counts[static_cast<std::size_t>(v - 2)]) return false;
  }
  return true;
}

bool is_ballot(const Tableau& t) { return is_ballot(reading_word(t)); }

namespace {

// Fills the cells of a skew shape in reading order, trying values in
// increasing order so that completed fillings come out sorted by reading
// word. budget (when non-empty) caps how often each value may be used.
class Filler {
 public:
  Filler(const SkewShape& shape, int max_value, std::vector<int> budget, bool ballot)
      : shape_(shape), max_value_(max_value), budget_(std::move(budget)), ballot_(ballot),
        counts_(static_cast<std::size_t>(max_value) + 1, 0) {
    for (std::size_t r = 0; r < shape.rows(); ++r) {
      grid_.emplace_back(static_cast<std::size_t>(shape.row_length(r)), 0);
      for (int c = shape.outer()[r] - 1; c >= shape.inner()[r]; --c) cells_.emplace_back(r, c);
    }
  }

  template <typename Visit>
  void run(Visit&& visit) {
    fill(0, visit);
  }

  const std::vector<std::vector<int>>& grid() const { return grid_; }

 private:
  int& cell(std::size_t r, int c) { return grid_[r][static_cast<std::size_t>(c - shape_.inner()[r])]; }

  template <typename Visit>
  void fill(std::size_t idx, Visit& visit) {
    if (idx == cells_.size()) {
      visit(grid_);
      return;
    }
    const auto [r, c] = cells_[idx];
    int hi = max_value_;
    if (shape_.has_cell(r, c + 1)) hi = std::min(hi, cell(r, c + 1));
    int lo = 1;
    if (r > 0 && shape_.has_cell(r - 1, c)) lo = cell(r - 1, c) + 1;
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (!budget_.empty() && counts_[vi] >= budget_[vi - 1]) continue;
      if (ballot_ && v > 1 && counts_[vi] + 1 > counts_[vi - 1]) continue;
      ++counts_[vi];
      cell(r, c) = v;
      fill(idx + 1, visit);
      --counts_[vi];
    }
    cell(r, c) = 0;
  }

  const SkewShape& shape_;
  int max_value_;
  std::vector<int> budget_;
  bool ballot_;
  std::vector<int> counts_;
  std::vector<std::vector<int>> grid_;
  std::vector<std::pair<std::size_t, int>> cells_;
};

void check_content_size(const SkewShape& shape, const WeakComposition& content) {
  if (content.size() != shape.cell_count()) {
    throw Error(ErrorCode::kSizeMismatch, "content " + to_string(content) + " does not fill " +
                                              std::to_string(shape.cell_count()) + " cells");
  }
}

}  // namespace

std::vector<Tableau> ssyt_enumerate(const SkewShape& shape, const WeakComposition& content) {
  check_content_size(shape, content);
  std::vector<Tableau> out;
  Filler filler(shape, static_cast<int>(content.length()), content.vec(), false);
  filler.run([&](const std::vector<std::vector<int>>& grid) { out.emplace_back(shape, grid); });
  return out;
}

namespace {

using LrKey = std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>;

std::mutex lr_mutex;
std::map<LrKey, Integer>& lr_cache() {
  static std::map<LrKey, Integer> cache;
  return cache;
}

Integer lr_uncached(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (!lambda.contained_in(nu) || lambda.size() + mu.size() != nu.size()) return 0;
  const SkewShape shape(nu, lambda);
  Filler filler(shape, static_cast<int>(mu.length()), mu.vec(), true);
  long count = 0;
  filler.run([&](const std::vector<std::vector<int>>&) { ++count; });
  return count;
}

}  // namespace

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.length() != mu.length() || mu.length() != nu.length()) {
    throw Error(ErrorCode::kLengthMismatch, "partitions " + to_string(lambda) + ", " + to_string(mu) + ", " +
                                                to_string(nu) + " differ in length");
  }
  LrKey key{lambda.vec(), mu.vec(), nu.vec()};
  {
    std::lock_guard lock(lr_mutex);
    auto it = lr_cache().find(key);
    if (it != lr_cache().end()) return it->second;
  }
  Integer value = lr_uncached(lambda, mu, nu);
  std::lock_guard lock(lr_mutex);
  lr_cache().emplace(std::move(key), value);
  return value;
}

SparsePoly schur_polynomial(const Partition& lambda, std::size_t k) {
  const SkewShape shape = SkewShape::straight(lambda);
  SparsePoly out(k);
  Filler filler(shape, static_cast<int>(k), {}, false);
  filler.run([&](const std::vector<std::vector<int>>& grid) {
    std::vector<int> exps(k, 0);
    for (const auto& row : grid) {
      for (int v : row) ++exps[static_cast<std::size_t>(v - 1)];
    }
    out.add_term(WeakComposition(std::move(exps)), 1);
  });
  return out;
}

Partition grassmannian_to_partition(const Permutation& w, std::size_t k) {
  const std::size_t n = w.size();
  if (k > n) throw Error(ErrorCode::kNotGrassmannian, "k exceeds the size of the permutation");
  for (std::size_t i = 1; i < n; ++i) {
    const int a = w(static_cast<int>(i));
    const int b = w(static_cast<int>(i + 1));
    if (a > b && i != k) {
      throw Error(ErrorCode::kNotGrassmannian, "descent at position " + std::to_string(i) + " but k = " + std::to_string(k));
    }
  }
  std::vector<int> parts;
  for (std::size_t j = k; j >= 1; --j) parts.push_back(w(static_cast<int>(j)) - static_cast<int>(j));
  return Partition(std::move(parts));
}

Permutation partition_to_grassmannian(const Partition& lambda, std::size_t n) {
  const std::size_t k = lambda.length();
  if (k > n || (k > 0 && lambda[0] > static_cast<int>(n - k))) {
    throw Error(ErrorCode::kOutOfRange, to_string(lambda) + " does not fit in a " + std::to_string(k) + " x " +
                                            std::to_string(n >= k ? n - k : 0) + " box");
  }
  std::vector<int> one_line;
  std::vector<bool> used(n + 1, false);
  for (std::size_t i = 1; i <= k; ++i) {
    const int v = lambda[k - i] + static_cast<int>(i);
    one_line.push_back(v);
    used[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t v = 1; v <= n; ++v) {
    if (!used[v]) one_line.push_back(static_cast<int>(v));
  }
  return Permutation(std::move(one_line));
}

PartitionTuple::PartitionTuple(std::vector<Partition> parts) : parts_(std::move(parts)) {
  for (const auto& p : parts_) {
    if (p.is_zero()) throw Error(ErrorCode::kInvalidPartition, "tuples may not contain the zero partition");
    if (p.length() != parts_.front().length()) {
      throw Error(ErrorCode::kLengthMismatch, "partitions in a tuple must share one length");
    }
  }
}

std::vector<std::string> PartitionTuple::labels() const {
  std::vector<std::string> out;
  for (const auto& p : parts_) out.push_back(partition_label(p));
  return out;
}

PartitionTuple parse_partition_tuple(std::string_view text) {
  std::vector<Partition> parts;
  if (text.empty()) return PartitionTuple();
  std::size_t pos = 0;
  while (true) {
    const std::size_t semi = text.find(';', pos);
    parts.push_back(parse_partition(text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos)));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return PartitionTuple(std::move(parts));
}

std::string to_string(const PartitionTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ',';
    out += to_string(t[i]);
  }
  return out + ")";
}

namespace {

std::vector<std::vector<std::size_t>> injections(std::size_t len, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (std::size_t s = start; s + (len - cur.size()) <= n; ++s) {
      cur.push_back(s);
      self(self, s + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

Integer buk_structure_constant(const PartitionTuple& lambda, const PartitionTuple& mu, const PartitionTuple& nu,
                               std::size_t k, unsigned jobs) {
  for (const auto* t : {&lambda, &mu, &nu}) {
    for (const auto& p : t->parts()) {
      if (p.length() != k) throw Error(ErrorCode::kLengthMismatch, to_string(p) + " does not have length " + std::to_string(k));
    }
  }
  const std::size_t n = nu.size();
  if (lambda.size() > n || mu.size() > n) return 0;
  const auto iotas = injections(lambda.size(), n);
  const auto jotas = injections(mu.size(), n);
  const Partition zero = Partition::zero(k);

  auto term = [&](const std::vector<std::size_t>& iota, const std::vector<std::size_t>& jota) {
    std::vector<const Partition*> at_lambda(n, &zero);
    std::vector<const Partition*> at_mu(n, &zero);
    for (std::size_t a = 0; a < iota.size(); ++a) at_lambda[iota[a]] = &lambda[a];
    for (std::size_t b = 0; b < jota.size(); ++b) at_mu[jota[b]] = &mu[b];
    Integer product = 1;
    for (std::size_t i = 0; i < n && product != 0; ++i) product *= lr_coefficient(*at_lambda[i], *at_mu[i], nu[i]);
    return product;
  };
  auto range_sum = [&](std::size_t begin, std::size_t end) {
    Integer sum = 0;
    for (std::size_t a = begin; a < end; ++a) {
      for (const auto& jota : jotas) sum += term(iotas[a], jota);
    }
    return sum;
  };

  const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), iotas.size());
  if (workers <= 1) return range_sum(0, iotas.size());
  std::vector<Integer> partial(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (iotas.size() + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(iotas.size(), w * chunk);
    const std::size_t end = std::min(iotas.size(), begin + chunk);
    threads.emplace_back([&, w, begin, end] { partial[w] = range_sum(begin, end); });
  }
  for (auto& t : threads) t.join();
  Integer total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

GradedRingData schur_ring_data(std::size_t k, int cap) {
  if (cap < 0) throw Error(ErrorCode::kOutOfRange, "degree cap must be nonnegative");
  const auto all = partitions_up_to(k, cap);
  std::vector<RingLabel> basis;
  for (const auto& p : all) basis.push_back({partition_label(p), 2 * p.size()});
  GradedRingData::Constants constants;
  for (const auto& a : all) {
    if (a.is_zero()) continue;
    for (const auto& b : all) {
      if (b.is_zero() || a.size() + b.size() > cap) continue;
      LabelCombination combo;
      for (const auto& c : partitions_of_size(k, a.size() + b.size())) {
        Integer v = lr_coefficient(a, b, c);
        if (v != 0) combo.emplace(partition_label(c), Rational(v));
      }
      if (!combo.empty()) constants.emplace(std::pair{partition_label(a), partition_label(b)}, std::move(combo));
    }
  }
  return GradedRingData::create(std::move(basis), partition_label(Partition::zero(k)), std::move(constants));
}

}  // namespace glidekit
