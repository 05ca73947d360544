#pragma once

/**
 * @file heap.hpp
 * @brief Abelian heaps, their retracts and translations, sub-heaps, the
 * sub-heap relation and quotient heaps.
 *
 * A heap is stored as one of its retracts together with the basepoint that
 * serves as that retract's zero. The bracket [a,b,c] = a - b + c evaluated in
 * any retract is the same function, so the heap axioms hold by construction.
 * Raw ternary tables enter only through validate_ternary_table().
 */

#include <string>
#include <utility>
#include <vector>

#include "abgroup.hpp"
#include "core.hpp"

namespace trusslab {

class Heap {
public:
  /// The empty heap.
  static Heap empty()
  {
    Heap h;
    h.empty_ = true;
    return h;
  }

  /// Singleton heap.
  Heap() = default;

  explicit Heap(AbGroup retract) : retract_(std::move(retract)) {}

  std::size_t order() const { return empty_ ? 0 : retract_.order(); }
  bool is_empty() const { return empty_; }

  Index basepoint() const
  {
    require_element("basepoint");
    return retract_.zero();
  }

  /// The stored retract (at basepoint()).
  AbGroup const &group() const { return retract_; }

  Index bracket(Index a, Index b, Index c) const
  {
    return retract_.add(retract_.sub(a, b), c);
  }

  std::vector<std::string> const &labels() const { return retract_.labels(); }
  std::string const &label(Index i) const { return retract_.label(i); }

  Heap with_labels(std::vector<std::string> labels) const
  {
    return Heap(retract_.with_labels(std::move(labels)));
  }

  void require_element(char const *what) const
  {
    if (empty_)
      throw std::invalid_argument(std::string(what) + ": the empty heap has no elements");
  }

  /// Same carrier and same bracket; basepoint and labels are representation.
  friend bool operator==(Heap const &a, Heap const &b)
  {
    if (a.empty_ || b.empty_)
      return a.empty_ == b.empty_;
    if (a.order() != b.order())
      return false;
    for (Index x = 0; x < a.order(); ++x)
      for (Index y = 0; y < a.order(); ++y)
        if (a.bracket(x, 0, y) != b.bracket(x, 0, y))
          return false;
    return true;
  }

private:
  AbGroup retract_;
  bool empty_ = false;
};

inline Heap heap_from_group(AbGroup g) { return Heap(std::move(g)); }

/// Retract at e: a + b := [a, e, b] with zero e.
inline AbGroup retract(Heap const &h, Index e)
{
  h.require_element("retract");
  if (e >= h.order())
    throw std::out_of_range("retract basepoint out of range");
  std::size_t const n = h.order();
  return AbGroup(Table::generate(n, n, [&](Index a, Index b) { return h.bracket(a, e, b); }),
                 e, h.labels());
}

/// a -> [a, e, e2]; an isomorphism from the e-retract to the e2-retract.
inline IndexMap translate(Heap const &h, Index e, Index e2)
{
  h.require_element("translate");
  if (e >= h.order() || e2 >= h.order())
    throw std::out_of_range("translate endpoint out of range");
  IndexMap f(h.order());
  for (Index a = 0; a < h.order(); ++a)
    f[a] = h.bracket(a, e, e2);
  return f;
}

/**
 * Checks that `f` is a heap morphism from `from` to `to`.
 *
 * With a0 the basepoint of `from`, f preserves the bracket iff
 * f([x,a0,y]) = [f(x),f(a0),f(y)] for all x,y: that condition makes f a group
 * homomorphism between the a0- and f(a0)-retracts, and those preserve
 * x - y + z. A failure witness (x,a0,y) is a counterexample to the full law.
 */
template <typename F>
LawResult check_affine(Heap const &from, Heap const &to, F const &f,
                       std::string const &law = "heap-morphism")
{
  if (from.is_empty())
    return law_pass(law);
  Index const a0 = from.basepoint();
  Index const b0 = f(a0);
  for (Index x = 0; x < from.order(); ++x) {
    Index const fx = f(x);
    for (Index y = 0; y < from.order(); ++y)
      if (f(from.bracket(x, a0, y)) != to.bracket(fx, b0, f(y)))
        return law_fail(law, {x, a0, y});
  }
  return law_pass(law);
}

inline LawResult check_affine_map(Heap const &from, Heap const &to, IndexMap const &f,
                                  std::string const &law = "heap-morphism")
{
  if (f.size() != from.order())
    return law_fail(law, {}, "map has wrong domain size");
  return check_affine(from, to, [&](Index x) { return f[x]; }, law);
}

/// Closure of `s` under the bracket; the witness is a triple leaving `s`.
inline LawResult check_subheap(Heap const &h, IndexSet const &s)
{
  auto const in = membership(s, h.order());
  if (s.empty())
    return law_pass("sub-heap", "empty");
  // s is a sub-heap iff s - p0 is a subgroup of the p0-retract; the full
  // triple scan is cheap at the sizes used here and yields a direct witness.
  for (Index a : s)
    for (Index b : s)
      for (Index c : s)
        if (!in[h.bracket(a, b, c)])
          return law_fail("sub-heap", {a, b, c});
  return law_pass("sub-heap");
}

inline bool is_subheap(Heap const &h, IndexSet const &s)
{
  return !check_subheap(h, s).failed();
}

/**
 * Classes of x ~ y <=> [x,y,p] in s for some p in s, ordered by least member.
 *
 * For a sub-heap s with p0 in s, the class of x is {[x,p0,p] : p in s}.
 */
inline std::vector<IndexSet> subheap_relation_classes(Heap const &h, IndexSet const &s)
{
  h.require_element("subheap_relation_classes");
  if (s.empty())
    throw std::invalid_argument("quotient by empty sub-heap undefined");
  if (auto r = check_subheap(h, s); r.failed())
    throw LawViolation(r);
  std::size_t const n = h.order();
  Index const p0 = s.front();
  std::vector<char> seen(n, 0);
  std::vector<IndexSet> classes;
  for (Index x = 0; x < n; ++x) {
    if (seen[x])
      continue;
    IndexSet cls;
    for (Index p : s)
      cls.push_back(h.bracket(x, p0, p));
    cls = normalized(std::move(cls));
    for (Index y : cls)
      seen[y] = 1;
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// Class index of each carrier element.
inline IndexMap class_map(std::vector<IndexSet> const &classes, std::size_t n)
{
  IndexMap proj(n, 0);
  for (Index c = 0; c < classes.size(); ++c)
    for (Index x : classes[c])
      proj[x] = c;
  return proj;
}

inline std::vector<std::string> class_labels(std::vector<IndexSet> const &classes,
                                             std::vector<std::string> const &labels)
{
  std::vector<std::string> out;
  out.reserve(classes.size());
  for (auto const &c : classes)
    out.push_back(format_set(c, &labels));
  return out;
}

struct HeapQuotient {
  Heap heap;
  IndexMap projection;
  std::vector<IndexSet> classes;
};

inline HeapQuotient quotient_heap(Heap const &h, IndexSet const &s)
{
  auto classes = subheap_relation_classes(h, s);
  auto proj = class_map(classes, h.order());
  std::size_t const q = classes.size();
  Index const base = h.basepoint();
  Table add(q, q);
  for (Index i = 0; i < q; ++i)
    for (Index j = 0; j < q; ++j)
      add(i, j) = proj[h.bracket(classes[i].front(), base, classes[j].front())];
  Heap quotient(AbGroup(std::move(add), proj[base], class_labels(classes, h.labels())));
  if (check_affine_map(h, quotient, proj).failed())
    throw InvariantBroken("sub-heap projection is not a heap morphism");
  return {std::move(quotient), std::move(proj), std::move(classes)};
}

/// Cartesian product heap; (a, b) is encoded as a * |h2| + b.
inline Heap product_heap(Heap const &h1, Heap const &h2)
{
  h1.require_element("product_heap");
  h2.require_element("product_heap");
  return Heap(AbGroup::product(h1.group(), h2.group()));
}

/**
 * Validates a raw ternary table t[(a*n + b)*n + c] against the abelian heap
 * axioms and rebuilds the heap from its 0-retract.
 *
 * Mal'cev and commutativity are checked exhaustively; associativity needs
 * n^5 evaluations, so above policy.exhaustive_limit it is sampled. The
 * rebuilt bracket is then compared with the table entry by entry.
 */
inline LawReport check_ternary_table(std::size_t n, std::vector<Index> const &t,
                                     CheckPolicy const &policy = {})
{
  LawReport report;
  if (t.size() != n * n * n) {
    report.add(law_fail("shape", {}, "ternary table must have n^3 entries"));
    return report;
  }
  for (Index i = 0; i < t.size(); ++i)
    if (t[i] >= n) {
      report.add(law_fail("range", {i / (n * n), (i / n) % n, i % n}));
      return report;
    }
  report.add(law_pass("range"));
  auto at = [&](Index a, Index b, Index c) { return t[(a * n + b) * n + c]; };

  report.add([&]() -> LawResult {
    for (Index b = 0; b < n; ++b)
      for (Index a = 0; a < n; ++a)
        if (at(b, b, a) != a || at(a, b, b) != a)
          return law_fail("mal'cev", {b, b, a});
    return law_pass("mal'cev");
  }());

  report.add([&]() -> LawResult {
    auto assoc = [&](Index a, Index b, Index c, Index d, Index e) {
      return at(at(a, b, c), d, e) == at(a, b, at(c, d, e));
    };
    if (n <= policy.exhaustive_limit) {
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          for (Index c = 0; c < n; ++c)
            for (Index d = 0; d < n; ++d)
              for (Index e = 0; e < n; ++e)
                if (!assoc(a, b, c, d, e))
                  return law_fail("associativity", {a, b, c, d, e});
      return law_pass("associativity");
    }
    Rng rng(policy.seed);
    for (std::size_t s = 0; s < policy.samples; ++s) {
      Index a = rng.below(n), b = rng.below(n), c = rng.below(n), d = rng.below(n),
            e = rng.below(n);
      if (!assoc(a, b, c, d, e))
        return law_fail("associativity", {a, b, c, d, e});
    }
    return law_pass("associativity", "sampled " + std::to_string(policy.samples) +
                                         " tuples, seed " + std::to_string(policy.seed));
  }());

  report.add([&]() -> LawResult {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = a + 1; c < n; ++c)
          if (at(a, b, c) != at(c, b, a))
            return law_fail("commutativity", {a, b, c});
    return law_pass("commutativity");
  }());
  if (!report.ok() || n == 0)
    return report;

  auto retract_report =
    AbGroup::validate(Table::generate(n, n, [&](Index a, Index b) { return at(a, 0, b); }), 0);
  if (auto const *f = retract_report.first_failure()) {
    report.add(law_fail("retract", f->witness, "0-retract fails " + f->law));
    return report;
  }
  AbGroup g(Table::generate(n, n, [&](Index a, Index b) { return at(a, 0, b); }), 0);
  report.add([&]() -> LawResult {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c)
          if (at(a, b, c) != g.add(g.sub(a, b), c))
            return law_fail("retract-consistency", {a, b, c});
    return law_pass("retract-consistency");
  }());
  return report;
}

inline Heap validate_ternary_table(std::size_t n, std::vector<Index> const &t,
                                   CheckPolicy const &policy = {})
{
  auto report = check_ternary_table(n, t, policy);
  throw_if_failed(report);
  if (n == 0)
    return Heap::empty();
  return Heap(AbGroup(Table::generate(n, n, [&](Index a, Index b) { return t[(a * n) * n + b]; }),
                      0));
}

/// The n^3 bracket table of a heap, in validate_ternary_table() layout.
inline std::vector<Index> ternary_table(Heap const &h)
{
  std::size_t const n = h.order();
  std::vector<Index> t(n * n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        t[(a * n + b) * n + c] = h.bracket(a, b, c);
  return t;
}

} // namespace trusslab
