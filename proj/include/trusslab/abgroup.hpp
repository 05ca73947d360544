#pragma once

/**
 * @file abgroup.hpp
 * @brief Finite abelian groups stored as addition tables.
 */

#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace trusslab {

class AbGroup {
public:
  /// Trivial group.
  AbGroup() : AbGroup(Table(1, 1, 0), 0) {}

  /// Validates the table and throws LawViolation on the first broken law.
  AbGroup(Table add, Index zero, std::vector<std::string> labels = {})
    : add_(std::move(add)), zero_(zero), labels_(std::move(labels))
  {
    throw_if_failed(validate(add_, zero_));
    neg_.assign(order(), 0);
    for (Index a = 0; a < order(); ++a)
      for (Index b = 0; b < order(); ++b)
        if (add_(a, b) == zero_) {
          neg_[a] = b;
          break;
        }
    if (labels_.empty())
      labels_ = index_labels(order());
    if (labels_.size() != order())
      throw std::invalid_argument("label count does not match group order");
  }

  static LawReport validate(Table const &add, Index zero)
  {
    LawReport report;
    std::size_t const n = add.rows();
    if (n == 0 || add.cols() != n) {
      report.add(law_fail("shape", {}, "addition table must be non-empty and square"));
      return report;
    }
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        if (add(a, b) >= n) {
          report.add(law_fail("closure", {a, b}));
          return report;
        }
    report.add(law_pass("closure"));
    if (zero >= n) {
      report.add(law_fail("identity", {zero}, "zero out of range"));
      return report;
    }

    auto identity = [&]() -> LawResult {
      for (Index a = 0; a < n; ++a)
        if (add(zero, a) != a || add(a, zero) != a)
          return law_fail("identity", {a});
      return law_pass("identity");
    }();
    report.add(identity);

    auto inverse = [&]() -> LawResult {
      for (Index a = 0; a < n; ++a) {
        bool found = false;
        for (Index b = 0; b < n && !found; ++b)
          found = add(a, b) == zero;
        if (!found)
          return law_fail("inverse", {a});
      }
      return law_pass("inverse");
    }();
    report.add(inverse);

    auto commutativity = [&]() -> LawResult {
      for (Index a = 0; a < n; ++a)
        for (Index b = a + 1; b < n; ++b)
          if (add(a, b) != add(b, a))
            return law_fail("commutativity", {a, b});
      return law_pass("commutativity");
    }();
    report.add(commutativity);

    auto associativity = [&]() -> LawResult {
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
          Index const ab = add(a, b);
          for (Index c = 0; c < n; ++c)
            if (add(ab, c) != add(a, add(b, c)))
              return law_fail("associativity", {a, b, c});
        }
      return law_pass("associativity");
    }();
    report.add(associativity);
    return report;
  }

  static AbGroup cyclic(std::size_t n)
  {
    if (n == 0)
      throw std::invalid_argument("cyclic group of order 0");
    return AbGroup(Table::generate(n, n, [n](Index a, Index b) { return (a + b) % n; }), 0);
  }

  /// Pairs (a, b) encoded as a * |h| + b.
  static AbGroup product(AbGroup const &g, AbGroup const &h)
  {
    std::size_t const m = h.order();
    auto add = Table::generate(g.order() * m, g.order() * m, [&](Index x, Index y) {
      return g.add(x / m, y / m) * m + h.add(x % m, y % m);
    });
    std::vector<std::string> labels;
    for (Index a = 0; a < g.order(); ++a)
      for (Index b = 0; b < m; ++b)
        labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
    return AbGroup(std::move(add), g.zero() * m + h.zero(), std::move(labels));
  }

  std::size_t order() const { return add_.rows(); }
  Index zero() const { return zero_; }
  Index add(Index a, Index b) const { return add_(a, b); }
  Index neg(Index a) const { return neg_[a]; }
  Index sub(Index a, Index b) const { return add_(a, neg_[b]); }

  /// j-fold sum of x (j may be zero).
  Index multiple(std::size_t j, Index x) const
  {
    Index acc = zero_;
    for (std::size_t i = 0; i < j; ++i)
      acc = add_(acc, x);
    return acc;
  }

  Table const &table() const { return add_; }
  std::vector<std::string> const &labels() const { return labels_; }
  std::string const &label(Index i) const { return labels_[i]; }

  AbGroup with_labels(std::vector<std::string> labels) const
  {
    AbGroup g = *this;
    if (labels.size() != order())
      throw std::invalid_argument("label count does not match group order");
    g.labels_ = std::move(labels);
    return g;
  }

  /// Equality of operation tables; labels are metadata.
  friend bool operator==(AbGroup const &a, AbGroup const &b)
  {
    return a.zero_ == b.zero_ && a.add_ == b.add_;
  }

private:
  Table add_;
  Index zero_ = 0;
  std::vector<Index> neg_;
  std::vector<std::string> labels_;
};

} // namespace trusslab
