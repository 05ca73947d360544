#pragma once

/**
 * @file core.hpp
 * @brief Shared vocabulary: indices, dense operation tables, index sets,
 * law reports and the error types every structure throws.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trusslab {

/// Carrier elements are the indices 0..n-1.
using Index = std::size_t;

/// Sorted, duplicate-free list of carrier indices.
using IndexSet = std::vector<Index>;

/// Map between carriers, stored as the image of each index.
using IndexMap = std::vector<Index>;

/// Dense row-major table of indices (n x n for binary operations, n x m for
/// actions).
class Table {
public:
  Table() = default;

  Table(std::size_t rows, std::size_t cols, Index fill = 0)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Table(std::size_t rows, std::size_t cols, std::vector<Index> data)
    : rows_(rows), cols_(cols), data_(std::move(data))
  {
    if (data_.size() != rows_ * cols_)
      throw std::invalid_argument("table data has wrong size");
  }

  template <typename F>
  static Table generate(std::size_t rows, std::size_t cols, F &&f)
  {
    Table t(rows, cols);
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c)
        t(r, c) = static_cast<Index>(f(r, c));
    return t;
  }

  static Table from_rows(std::vector<std::vector<Index>> const &rows)
  {
    std::size_t const cols = rows.empty() ? 0 : rows.front().size();
    Table t(rows.size(), cols);
    for (Index r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols)
        throw std::invalid_argument("ragged table rows");
      for (Index c = 0; c < cols; ++c)
        t(r, c) = rows[r][c];
    }
    return t;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Index operator()(Index r, Index c) const { return data_[r * cols_ + c]; }
  Index &operator()(Index r, Index c) { return data_[r * cols_ + c]; }

  std::vector<Index> const &data() const { return data_; }

  std::vector<std::vector<Index>> to_rows() const
  {
    std::vector<std::vector<Index>> out(rows_);
    for (Index r = 0; r < rows_; ++r)
      out[r].assign(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                    data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    return out;
  }

  /// True iff every entry is below `bound`.
  bool entries_below(std::size_t bound) const
  {
    return std::all_of(data_.begin(), data_.end(),
                       [bound](Index v) { return v < bound; });
  }

  bool operator==(Table const &) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Index> data_;
};

inline IndexSet normalized(IndexSet s)
{
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline IndexSet full_set(std::size_t n)
{
  IndexSet s(n);
  for (Index i = 0; i < n; ++i)
    s[i] = i;
  return s;
}

/// Characteristic vector of `s` over a carrier of size `n`.
inline std::vector<char> membership(IndexSet const &s, std::size_t n)
{
  std::vector<char> m(n, 0);
  for (Index i : s) {
    if (i >= n)
      throw std::out_of_range("index set member out of range");
    m[i] = 1;
  }
  return m;
}

inline bool contains(IndexSet const &s, Index i)
{
  return std::binary_search(s.begin(), s.end(), i);
}

inline IndexSet image(IndexMap const &f, IndexSet const &s)
{
  IndexSet out;
  out.reserve(s.size());
  for (Index i : s)
    out.push_back(f[i]);
  return normalized(std::move(out));
}

inline bool is_bijection(IndexMap const &f, std::size_t codomain)
{
  if (f.size() != codomain)
    return false;
  std::vector<char> hit(codomain, 0);
  for (Index v : f) {
    if (v >= codomain || hit[v])
      return false;
    hit[v] = 1;
  }
  return true;
}

inline IndexMap inverse_map(IndexMap const &f)
{
  IndexMap inv(f.size());
  for (Index i = 0; i < f.size(); ++i)
    inv[f[i]] = i;
  return inv;
}

inline std::string format_set(IndexSet const &s,
                              std::vector<std::string> const *labels = nullptr)
{
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i)
      os << ',';
    if (labels && s[i] < labels->size())
      os << (*labels)[s[i]];
    else
      os << s[i];
  }
  os << '}';
  return os.str();
}

inline std::vector<std::string> index_labels(std::size_t n)
{
  std::vector<std::string> labels(n);
  for (Index i = 0; i < n; ++i)
    labels[i] = std::to_string(i);
  return labels;
}

enum class LawStatus { pass, fail, skipped };

/// Outcome of checking one law; `witness` holds the first counterexample.
struct LawResult {
  std::string law;
  LawStatus status = LawStatus::pass;
  std::vector<Index> witness;
  std::string note;

  bool failed() const { return status == LawStatus::fail; }

  std::string describe() const
  {
    std::ostringstream os;
    os << law << ": "
       << (status == LawStatus::pass   ? "pass"
           : status == LawStatus::fail ? "FAIL"
                                       : "skipped");
    if (!witness.empty()) {
      os << " at (";
      for (std::size_t i = 0; i < witness.size(); ++i)
        os << (i ? "," : "") << witness[i];
      os << ')';
    }
    if (!note.empty())
      os << " [" << note << ']';
    return os.str();
  }
};

inline LawResult law_pass(std::string law, std::string note = {})
{
  return {std::move(law), LawStatus::pass, {}, std::move(note)};
}

inline LawResult law_fail(std::string law, std::vector<Index> witness,
                          std::string note = {})
{
  return {std::move(law), LawStatus::fail, std::move(witness), std::move(note)};
}

inline LawResult law_skipped(std::string law, std::string note)
{
  return {std::move(law), LawStatus::skipped, {}, std::move(note)};
}

struct LawReport {
  std::vector<LawResult> laws;

  bool ok() const
  {
    return std::none_of(laws.begin(), laws.end(),
                        [](LawResult const &l) { return l.failed(); });
  }

  LawResult const *first_failure() const
  {
    for (auto const &l : laws)
      if (l.failed())
        return &l;
    return nullptr;
  }

  LawResult const *find(std::string const &law) const
  {
    for (auto const &l : laws)
      if (l.law == law)
        return &l;
    return nullptr;
  }

  void add(LawResult r) { laws.push_back(std::move(r)); }

  void append(LawReport const &other, std::string const &prefix = {})
  {
    for (auto l : other.laws) {
      l.law = prefix + l.law;
      laws.push_back(std::move(l));
    }
  }

  std::string describe() const
  {
    std::ostringstream os;
    for (auto const &l : laws)
      os << l.describe() << '\n';
    return os.str();
  }
};

/// A structure violated one of its defining laws.
class LawViolation : public std::runtime_error {
public:
  explicit LawViolation(LawResult result)
    : std::runtime_error(result.describe()), result_(std::move(result)) {}

  LawResult const &result() const { return result_; }

private:
  LawResult result_;
};

/// A cross-check that must always hold failed; indicates a library bug.
class InvariantBroken : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline void throw_if_failed(LawReport const &report)
{
  if (auto const *f = report.first_failure())
    throw LawViolation(*f);
}

/// SplitMix64; fixed output for a fixed seed on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next()
  {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, bound).
  Index below(std::size_t bound) { return static_cast<Index>(next() % bound); }

  /// Value in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi)
  {
    auto const span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

private:
  std::uint64_t state_;
};

/// Exhaustive up to `exhaustive_limit` elements, `samples` random tuples
/// above it.
struct CheckPolicy {
  std::size_t exhaustive_limit = 16;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
};

} // namespace trusslab
