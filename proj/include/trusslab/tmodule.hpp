#pragma once

/**
 * @file tmodule.hpp
 * @brief Left modules over trusses: induced actions and submodules,
 * congruences, submodule shifts, quotient modules and absorbers.
 *
 * Right modules are left modules over opposite_truss().
 */

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "heap.hpp"
#include "truss.hpp"

namespace trusslab {

class TModule {
public:
  /// Shape check only; see validate_module().
  TModule(Truss truss, Heap heap, Table action)
    : truss_(std::move(truss)), heap_(std::move(heap)), action_(std::move(action))
  {
    heap_.require_element("module");
    if (action_.rows() != truss_.order() || action_.cols() != heap_.order())
      throw std::invalid_argument("action table must be |T| x |M|");
    if (!action_.entries_below(heap_.order()))
      throw std::invalid_argument("action table entry out of range");
  }

  Truss const &truss() const { return truss_; }
  Heap const &heap() const { return heap_; }
  Table const &table() const { return action_; }
  std::size_t order() const { return heap_.order(); }
  Index act(Index t, Index x) const { return action_(t, x); }
  Index bracket(Index a, Index b, Index c) const { return heap_.bracket(a, b, c); }

  /// Truss has an identity acting trivially.
  bool is_unital() const
  {
    if (!truss_.identity())
      return false;
    for (Index x = 0; x < order(); ++x)
      if (act(*truss_.identity(), x) != x)
        return false;
    return true;
  }

  friend bool operator==(TModule const &a, TModule const &b)
  {
    return a.truss_ == b.truss_ && a.heap_ == b.heap_ && a.action_ == b.action_;
  }

private:
  Truss truss_;
  Heap heap_;
  Table action_;
};

/// Action associativity and distributivity over both brackets. For a left
/// truss the distributivity over the truss bracket is not required.
inline LawReport validate_module(TModule const &m)
{
  LawReport report;
  auto const &t = m.truss();
  std::size_t const n = t.order();

  report.add([&]() -> LawResult {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index x = 0; x < m.order(); ++x)
          if (m.act(a, m.act(b, x)) != m.act(t.mul(a, b), x))
            return law_fail("action-associativity", {a, b, x});
    return law_pass("action-associativity");
  }());

  if (t.is_left()) {
    report.add(law_skipped("truss-bracket-distributivity", "left truss"));
  } else {
    report.add([&]() -> LawResult {
      for (Index x = 0; x < m.order(); ++x) {
        auto r = check_affine(t.heap(), m.heap(), [&](Index a) { return m.act(a, x); });
        if (r.failed())
          return law_fail("truss-bracket-distributivity",
                          {r.witness[0], r.witness[1], r.witness[2], x});
      }
      return law_pass("truss-bracket-distributivity");
    }());
  }

  report.add([&]() -> LawResult {
    for (Index a = 0; a < n; ++a) {
      auto r = check_affine(m.heap(), m.heap(), [&](Index x) { return m.act(a, x); });
      if (r.failed())
        return law_fail("module-bracket-distributivity",
                        {a, r.witness[0], r.witness[1], r.witness[2]});
    }
    return law_pass("module-bracket-distributivity");
  }());
  return report;
}

inline TModule make_module(Truss truss, Heap heap, Table action)
{
  TModule m(std::move(truss), std::move(heap), std::move(action));
  throw_if_failed(validate_module(m));
  return m;
}

/// T acting on itself by left multiplication.
inline TModule regular_module(Truss const &t)
{
  return TModule(t, t.heap(), t.table());
}

/// t . m = m for every t.
inline TModule trivial_module(Truss const &t, Heap const &h)
{
  return TModule(t, h, Table::generate(t.order(), h.order(), [](Index, Index x) { return x; }));
}

/// t . m = c for every t and m.
inline TModule constant_module(Truss const &t, Heap const &h, Index c)
{
  if (c >= h.order())
    throw std::out_of_range("constant_module: value out of range");
  return TModule(t, h, Table::generate(t.order(), h.order(), [c](Index, Index) { return c; }));
}

/// M x N with componentwise action; (x, y) encoded as x * |N| + y.
inline TModule product_module(TModule const &a, TModule const &b)
{
  if (!(a.truss() == b.truss()))
    throw std::invalid_argument("product_module: modules over different trusses");
  std::size_t const m = b.order();
  return TModule(a.truss(), product_heap(a.heap(), b.heap()),
                 Table::generate(a.truss().order(), a.order() * m, [&](Index t, Index x) {
                   return a.act(t, x / m) * m + b.act(t, x % m);
                 }));
}

/// t ._e x = [t.x, t.e, e].
inline Index induced_action(TModule const &m, Index t, Index e, Index x)
{
  return m.bracket(m.act(t, x), m.act(t, e), e);
}

/// (M, ._e), a module with absorber e.
inline TModule induced_module(TModule const &m, Index e)
{
  if (e >= m.order())
    throw std::out_of_range("induced_module: e out of range");
  return TModule(m.truss(), m.heap(),
                 Table::generate(m.truss().order(), m.order(),
                                 [&](Index t, Index x) { return induced_action(m, t, e, x); }));
}

/// Sub-heap closed under every induced action t ._e e' with e, e' in s.
inline LawReport check_induced_submodule(TModule const &m, IndexSet const &s)
{
  LawReport report;
  if (s.empty())
    throw std::invalid_argument("is_induced_submodule: empty subset");
  auto sub = check_subheap(m.heap(), s);
  report.add(sub);
  if (sub.failed())
    return report;
  auto const in = membership(s, m.order());
  report.add([&]() -> LawResult {
    for (Index t = 0; t < m.truss().order(); ++t)
      for (Index e : s)
        for (Index x : s)
          if (!in[induced_action(m, t, e, x)])
            return law_fail("induced-action-closure", {t, e, x});
    return law_pass("induced-action-closure");
  }());
  return report;
}

inline bool is_induced_submodule(TModule const &m, IndexSet const &s)
{
  return check_induced_submodule(m, s).ok();
}

/// Sub-heap closed under the action itself.
inline bool is_submodule(TModule const &m, IndexSet const &s)
{
  if (!is_subheap(m.heap(), s))
    return false;
  auto const in = membership(s, m.order());
  for (Index t = 0; t < m.truss().order(); ++t)
    for (Index x : s)
      if (!in[m.act(t, x)])
        return false;
  return true;
}

/// A partition as block ids (restricted growth string) plus block count.
struct Partition {
  std::vector<Index> block;
  std::size_t count = 0;

  std::vector<IndexSet> classes() const
  {
    std::vector<IndexSet> out(count);
    for (Index x = 0; x < block.size(); ++x)
      out[block[x]].push_back(x);
    return out;
  }

  bool operator==(Partition const &) const = default;

  static Partition from_classes(std::vector<IndexSet> const &classes, std::size_t n)
  {
    // renumber blocks by first appearance so equal partitions compare equal
    Partition p{std::vector<Index>(n, n), 0};
    auto const raw = class_map(classes, n);
    std::map<Index, Index> renumber;
    for (Index x = 0; x < n; ++x) {
      auto [it, fresh] = renumber.emplace(raw[x], p.count);
      if (fresh)
        ++p.count;
      p.block[x] = it->second;
    }
    return p;
  }
};

/// Compatible with the bracket and with every t . -.
inline bool is_module_congruence(TModule const &m, Partition const &p)
{
  std::size_t const k = m.order();
  auto const &b = p.block;
  for (Index x = 0; x < k; ++x)
    for (Index y = x + 1; y < k; ++y) {
      if (b[x] != b[y])
        continue;
      for (Index t = 0; t < m.truss().order(); ++t)
        if (b[m.act(t, x)] != b[m.act(t, y)])
          return false;
      // one argument varied at a time suffices; the bracket is commutative
      // in its outer arguments
      for (Index u = 0; u < k; ++u)
        for (Index v = 0; v < k; ++v)
          if (b[m.bracket(x, u, v)] != b[m.bracket(y, u, v)] ||
              b[m.bracket(u, x, v)] != b[m.bracket(u, y, v)])
            return false;
    }
  return true;
}

inline constexpr std::size_t congruence_order_limit = 8;

/// Enumerates set partitions of 0..n-1 as restricted growth strings.
template <typename Visit>
void for_each_partition(std::size_t n, Visit &&visit)
{
  if (n == 0)
    return;
  Partition p{std::vector<Index>(n, 0), 1};
  auto rec = [&](auto &&self, Index i, std::size_t used) -> void {
    if (i == n) {
      p.count = used;
      visit(static_cast<Partition const &>(p));
      return;
    }
    for (Index blk = 0; blk <= used && blk < n; ++blk) {
      p.block[i] = blk;
      self(self, i + 1, blk == used ? used + 1 : used);
    }
  };
  p.block[0] = 0;
  rec(rec, 1, 1);
}

/// All module congruences of a module of order at most 8.
inline std::vector<Partition> congruences(TModule const &m)
{
  if (m.order() > congruence_order_limit)
    throw std::invalid_argument("congruences: module order " + std::to_string(m.order()) +
                                " exceeds 8; test candidate classes with is_induced_submodule");
  std::vector<Partition> out;
  for_each_partition(m.order(), [&](Partition const &p) {
    if (is_module_congruence(m, p))
      out.push_back(p);
  });
  return out;
}

/// Every induced submodule, by enumeration of all non-empty subsets.
inline std::vector<IndexSet> induced_submodules(TModule const &m)
{
  if (m.order() > 16)
    throw std::invalid_argument("induced_submodules: order too large for subset enumeration");
  std::vector<IndexSet> out;
  for (std::uint32_t mask = 1; mask < (1u << m.order()); ++mask) {
    IndexSet s;
    for (Index x = 0; x < m.order(); ++x)
      if (mask & (1u << x))
        s.push_back(x);
    if (is_induced_submodule(m, s))
      out.push_back(std::move(s));
  }
  return out;
}

struct CongruenceCorrespondence {
  std::size_t congruence_count = 0;
  std::size_t induced_count = 0;
  std::size_t distinct_classes = 0;
  bool classes_are_induced = true;     // class of a congruence => induced submodule
  bool induced_are_classes = true;     // induced submodule => class of its own relation
  bool projections_match = true;       // sub-heap relation of N is an enumerated congruence
  bool sets_equal = true;              // {classes} == {induced submodules}
  std::vector<std::string> failures;

  bool ok() const
  {
    return classes_are_induced && induced_are_classes && projections_match && sets_equal;
  }
};

/**
 * Cross-checks the correspondence between congruence classes and induced
 * submodules: partitions are enumerated independently of subsets.
 */
inline CongruenceCorrespondence thm_cong_check(TModule const &m)
{
  CongruenceCorrespondence r;
  auto const congs = congruences(m);
  r.congruence_count = congs.size();
  std::map<IndexSet, bool> class_set;
  for (auto const &p : congs)
    for (auto &c : p.classes()) {
      if (!is_induced_submodule(m, c)) {
        r.classes_are_induced = false;
        r.failures.push_back("class " + format_set(c) + " is not an induced submodule");
      }
      class_set.emplace(std::move(c), true);
    }
  r.distinct_classes = class_set.size();

  auto const induced = induced_submodules(m);
  r.induced_count = induced.size();
  for (auto const &s : induced) {
    auto const classes = subheap_relation_classes(m.heap(), s);
    if (std::find(classes.begin(), classes.end(), s) == classes.end()) {
      r.induced_are_classes = false;
      r.failures.push_back(format_set(s) + " is not a class of its sub-heap relation");
    }
    auto const rel = Partition::from_classes(classes, m.order());
    if (std::find(congs.begin(), congs.end(), rel) == congs.end()) {
      r.projections_match = false;
      r.failures.push_back("sub-heap relation of " + format_set(s) + " is not a congruence");
    }
    if (!class_set.count(s)) {
      r.sets_equal = false;
      r.failures.push_back(format_set(s) + " is induced but no congruence class");
    }
  }
  if (class_set.size() != induced.size()) {
    r.sets_equal = false;
    r.failures.push_back("class count " + std::to_string(class_set.size()) +
                         " != induced submodule count " + std::to_string(induced.size()));
  }
  return r;
}

/// {[n, e, x] : n in s}, the image of s under the translation e -> x.
inline IndexSet shift_submodule(TModule const &m, IndexSet const &s, Index e, Index x)
{
  if (!contains(s, e))
    throw std::invalid_argument("shift_submodule: anchor e is not in the submodule");
  if (x >= m.order())
    throw std::out_of_range("shift_submodule: target out of range");
  IndexSet out;
  for (Index n : s)
    out.push_back(m.bracket(n, e, x));
  return normalized(std::move(out));
}

struct ModuleQuotient {
  TModule module;
  IndexMap projection;
  std::vector<IndexSet> classes;
};

/// M/N for an induced submodule N; the action on classes is checked
/// against every representative.
inline ModuleQuotient quotient_module(TModule const &m, IndexSet const &s)
{
  if (auto r = check_induced_submodule(m, s); !r.ok())
    throw std::invalid_argument("quotient_module: not an induced submodule (" +
                                r.first_failure()->describe() + ")");
  auto hq = quotient_heap(m.heap(), s);
  auto const &proj = hq.projection;
  std::size_t const n = m.truss().order();
  auto action = Table::generate(n, hq.classes.size(), [&](Index t, Index c) {
    return proj[m.act(t, hq.classes[c].front())];
  });
  for (Index t = 0; t < n; ++t)
    for (Index x = 0; x < m.order(); ++x)
      if (proj[m.act(t, x)] != action(t, proj[x]))
        throw InvariantBroken("quotient action depends on representatives");
  TModule q(m.truss(), std::move(hq.heap), std::move(action));
  return {std::move(q), hq.projection, std::move(hq.classes)};
}

/// All e with t . e = e for every t.
inline IndexSet absorbers(TModule const &m)
{
  IndexSet out;
  for (Index e = 0; e < m.order(); ++e) {
    bool ok = true;
    for (Index t = 0; t < m.truss().order() && ok; ++t)
      ok = m.act(t, e) == e;
    if (ok)
      out.push_back(e);
  }
  return out;
}

/// Checks that f: a -> b is a heap morphism commuting with the actions of
/// the same truss.
inline LawReport check_module_morphism(TModule const &a, TModule const &b, IndexMap const &f)
{
  LawReport report;
  report.add(check_affine_map(a.heap(), b.heap(), f));
  report.add([&]() -> LawResult {
    for (Index t = 0; t < a.truss().order(); ++t)
      for (Index x = 0; x < a.order(); ++x)
        if (f[a.act(t, x)] != b.act(t, f[x]))
          return law_fail("action-preserving", {t, x});
    return law_pass("action-preserving");
  }());
  return report;
}

} // namespace trusslab
