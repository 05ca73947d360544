#pragma once

/**
 * @file truss.hpp
 * @brief Trusses (two-sided and left), paragons, ideals, normal paragons,
 * quotient trusses, units, and the units-as-paragon analysis.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abgroup.hpp"
#include "core.hpp"
#include "group.hpp"
#include "heap.hpp"

namespace trusslab {

enum class Sidedness { two_sided, left };

inline std::string to_string(Sidedness s)
{
  return s == Sidedness::two_sided ? "two-sided" : "left";
}

inline Sidedness sidedness_from_string(std::string const &s)
{
  if (s == "two-sided")
    return Sidedness::two_sided;
  if (s == "left")
    return Sidedness::left;
  throw std::invalid_argument("unknown sidedness: " + s);
}

/**
 * A heap with a multiplication table. Construction checks only the shape;
 * the truss laws are checked by validate_truss() (make_truss() does both).
 * Identity and absorber are found by scanning the table.
 */
class Truss {
public:
  Truss() : Truss(Heap(), Table(1, 1, 0)) {}

  Truss(Heap heap, Table mul, Sidedness sided = Sidedness::two_sided)
    : heap_(std::move(heap)), mul_(std::move(mul)), sided_(sided)
  {
    heap_.require_element("truss");
    std::size_t const n = heap_.order();
    if (mul_.rows() != n || mul_.cols() != n)
      throw std::invalid_argument("multiplication table does not match heap order");
    if (!mul_.entries_below(n))
      throw std::invalid_argument("multiplication table entry out of range");
    for (Index e = 0; e < n && !identity_; ++e) {
      bool ok = true;
      for (Index a = 0; a < n && ok; ++a)
        ok = mul_(e, a) == a && mul_(a, e) == a;
      if (ok)
        identity_ = e;
    }
    for (Index z = 0; z < n; ++z) {
      bool ok = true;
      for (Index a = 0; a < n && ok; ++a)
        ok = mul_(z, a) == z && mul_(a, z) == z;
      if (ok) {
        if (!absorber_)
          absorber_ = z;
        ++absorber_count_;
      }
    }
  }

  std::size_t order() const { return heap_.order(); }
  Heap const &heap() const { return heap_; }
  Index bracket(Index a, Index b, Index c) const { return heap_.bracket(a, b, c); }
  Index mul(Index a, Index b) const { return mul_(a, b); }
  Table const &table() const { return mul_; }
  Sidedness sided() const { return sided_; }
  bool is_left() const { return sided_ == Sidedness::left; }
  std::optional<Index> identity() const { return identity_; }
  std::optional<Index> absorber() const { return absorber_; }
  std::size_t absorber_count() const { return absorber_count_; }
  std::vector<std::string> const &labels() const { return heap_.labels(); }
  std::string const &label(Index i) const { return heap_.label(i); }

  bool is_commutative() const
  {
    for (Index a = 0; a < order(); ++a)
      for (Index b = a + 1; b < order(); ++b)
        if (mul_(a, b) != mul_(b, a))
          return false;
    return true;
  }

  Truss with_labels(std::vector<std::string> labels) const
  {
    return Truss(heap_.with_labels(std::move(labels)), mul_, sided_);
  }

  friend bool operator==(Truss const &a, Truss const &b)
  {
    return a.sided_ == b.sided_ && a.mul_ == b.mul_ && a.heap_ == b.heap_;
  }

private:
  Heap heap_;
  Table mul_;
  Sidedness sided_ = Sidedness::two_sided;
  std::optional<Index> identity_;
  std::optional<Index> absorber_;
  std::size_t absorber_count_ = 0;
};

/// Associativity, left distributivity, and right distributivity unless the
/// truss is flagged left. The heap axioms hold by construction of Heap.
inline LawReport validate_truss(Truss const &t)
{
  LawReport report;
  std::size_t const n = t.order();
  report.add(law_pass("heap", "abelian heap by construction"));

  report.add([&]() -> LawResult {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        Index const ab = t.mul(a, b);
        for (Index c = 0; c < n; ++c)
          if (t.mul(ab, c) != t.mul(a, t.mul(b, c)))
            return law_fail("associativity", {a, b, c});
      }
    return law_pass("associativity");
  }());

  report.add([&]() -> LawResult {
    for (Index a = 0; a < n; ++a) {
      auto r = check_affine(t.heap(), t.heap(), [&](Index x) { return t.mul(a, x); });
      if (r.failed())
        return law_fail("left-distributivity", {a, r.witness[0], r.witness[1], r.witness[2]});
    }
    return law_pass("left-distributivity");
  }());

  if (t.is_left()) {
    report.add(law_skipped("right-distributivity", "left truss"));
  } else {
    report.add([&]() -> LawResult {
      for (Index a = 0; a < n; ++a) {
        auto r = check_affine(t.heap(), t.heap(), [&](Index x) { return t.mul(x, a); });
        if (r.failed())
          return law_fail("right-distributivity", {r.witness[0], r.witness[1], r.witness[2], a});
      }
      return law_pass("right-distributivity");
    }());
  }

  if (t.absorber_count() > 1)
    report.add(law_fail("absorber-uniqueness", {}, std::to_string(t.absorber_count()) +
                                                       " absorbers"));
  return report;
}

inline Truss make_truss(Heap heap, Table mul, Sidedness sided = Sidedness::two_sided)
{
  Truss t(std::move(heap), std::move(mul), sided);
  throw_if_failed(validate_truss(t));
  return t;
}

/// Associative ring laws for (add, mul): associativity and distributivity of
/// the multiplication over the addition on both sides.
inline LawReport validate_ring(AbGroup const &add, Table const &mul)
{
  LawReport report;
  std::size_t const n = add.order();
  if (mul.rows() != n || mul.cols() != n || !mul.entries_below(n)) {
    report.add(law_fail("shape", {}, "multiplication table does not match the group"));
    return report;
  }
  report.add([&]() -> LawResult {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            return law_fail("associativity", {a, b, c});
    return law_pass("associativity");
  }());
  report.add([&]() -> LawResult {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c)
          if (mul(a, add.add(b, c)) != add.add(mul(a, b), mul(a, c)))
            return law_fail("left-distributivity", {a, b, c});
    return law_pass("left-distributivity");
  }());
  report.add([&]() -> LawResult {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c)
          if (mul(add.add(b, c), a) != add.add(mul(b, a), mul(c, a)))
            return law_fail("right-distributivity", {b, c, a});
    return law_pass("right-distributivity");
  }());
  return report;
}

/// T(R): the ring's addition replaced by a - b + c. The ring zero is the
/// absorber.
inline Truss truss_from_ring(AbGroup const &add, Table const &mul)
{
  throw_if_failed(validate_ring(add, mul));
  Truss t(heap_from_group(add), mul);
  if (t.absorber() != add.zero())
    throw InvariantBroken("ring zero is not the truss absorber");
  return t;
}

/// Same heap, multiplication reversed. Only defined for two-sided trusses.
inline Truss opposite_truss(Truss const &t)
{
  if (t.is_left())
    throw std::invalid_argument("opposite of a left truss is a right truss");
  return Truss(t.heap(), Table::generate(t.order(), t.order(),
                                         [&](Index a, Index b) { return t.mul(b, a); }));
}

inline Index lambda_q(Truss const &t, Index x, Index p, Index q)
{
  return t.bracket(t.mul(x, p), t.mul(x, q), q);
}

inline Index rho_q(Truss const &t, Index p, Index x, Index q)
{
  return t.bracket(t.mul(p, x), t.mul(q, x), q);
}

inline bool is_subtruss(Truss const &t, IndexSet const &s)
{
  if (!is_subheap(t.heap(), s))
    return false;
  auto const in = membership(s, t.order());
  for (Index a : s)
    for (Index b : s)
      if (!in[t.mul(a, b)])
        return false;
  return true;
}

enum class ParagonKind { none, left, right, two_sided, ideal };

inline std::string to_string(ParagonKind k)
{
  switch (k) {
  case ParagonKind::none: return "none";
  case ParagonKind::left: return "left";
  case ParagonKind::right: return "right";
  case ParagonKind::two_sided: return "two-sided";
  case ParagonKind::ideal: return "ideal";
  }
  return "?";
}

inline bool is_two_sided(ParagonKind k)
{
  return k == ParagonKind::two_sided || k == ParagonKind::ideal;
}

inline bool is_left_closed(ParagonKind k)
{
  return k == ParagonKind::left || is_two_sided(k);
}

struct Paragon {
  IndexSet members;
  Index witness = 0;
  ParagonKind kind = ParagonKind::two_sided;
};

/// Classification of a subset with the per-condition results behind it.
struct ParagonCheck {
  ParagonKind kind = ParagonKind::none;
  Index witness = 0;
  LawReport closure; // sub-heap, lambda-closure, rho-closure, ideal

  std::optional<Paragon> paragon(IndexSet members) const
  {
    if (kind == ParagonKind::none)
      return std::nullopt;
    return Paragon{std::move(members), witness, kind};
  }
};

/**
 * Strongest classification of `s`: ideal, two-sided, left, right or none.
 * Lambda/rho closure is tested for every q in s and must agree across all of
 * them (InvariantBroken otherwise). Left trusses are only tested for
 * lambda-closure.
 */
inline ParagonCheck is_paragon(Truss const &t, IndexSet const &s)
{
  if (s.empty())
    throw std::invalid_argument("is_paragon: empty subset");
  ParagonCheck out;
  out.witness = s.front();
  auto sub = check_subheap(t.heap(), s);
  out.closure.add(sub);
  if (sub.failed())
    return out;

  auto const in = membership(s, t.order());
  auto closed = [&](std::string const &law, auto value) {
    std::optional<LawResult> verdict;
    for (Index q : s) {
      LawResult r = law_pass(law);
      for (Index x = 0; x < t.order() && !r.failed(); ++x)
        for (Index p : s)
          if (!in[value(x, p, q)]) {
            r = law_fail(law, {x, p, q});
            break;
          }
      if (verdict && verdict->failed() != r.failed())
        throw InvariantBroken(law + " depends on the choice of q");
      if (!verdict)
        verdict = r;
    }
    return *verdict;
  };

  auto lambda = closed("lambda-closure", [&](Index x, Index p, Index q) { return lambda_q(t, x, p, q); });
  out.closure.add(lambda);
  bool right = false;
  if (t.is_left()) {
    out.closure.add(law_skipped("rho-closure", "left truss"));
  } else {
    auto rho = closed("rho-closure", [&](Index x, Index p, Index q) { return rho_q(t, p, x, q); });
    out.closure.add(rho);
    right = !rho.failed();
  }
  bool const left = !lambda.failed();

  auto ideal = [&]() -> LawResult {
    for (Index x = 0; x < t.order(); ++x)
      for (Index p : s) {
        if (!in[t.mul(x, p)])
          return law_fail("ideal", {x, p});
        if (!in[t.mul(p, x)])
          return law_fail("ideal", {p, x});
      }
    return law_pass("ideal");
  }();
  out.closure.add(ideal);

  if (!ideal.failed())
    out.kind = ParagonKind::ideal;
  else if (left && right)
    out.kind = ParagonKind::two_sided;
  else if (left)
    out.kind = ParagonKind::left;
  else if (right)
    out.kind = ParagonKind::right;
  return out;
}

/// tP = Pt as sets for every t.
inline bool is_normal_paragon(Truss const &t, IndexSet const &p)
{
  for (Index x = 0; x < t.order(); ++x) {
    IndexSet lhs, rhs;
    for (Index a : p) {
      lhs.push_back(t.mul(x, a));
      rhs.push_back(t.mul(a, x));
    }
    if (normalized(lhs) != normalized(rhs))
      return false;
  }
  return true;
}

inline bool is_normal_paragon(Truss const &t, Paragon const &p)
{
  return is_normal_paragon(t, p.members);
}

/// Homomorphism check for a map between trusses.
inline LawReport check_truss_morphism(Truss const &a, Truss const &b, IndexMap const &f)
{
  LawReport report;
  if (f.size() != a.order() || !std::all_of(f.begin(), f.end(), [&](Index v) { return v < b.order(); })) {
    report.add(law_fail("shape", {}, "map does not go from the first truss to the second"));
    return report;
  }
  report.add(check_affine_map(a.heap(), b.heap(), f));
  report.add([&]() -> LawResult {
    for (Index x = 0; x < a.order(); ++x)
      for (Index y = 0; y < a.order(); ++y)
        if (f[a.mul(x, y)] != b.mul(f[x], f[y]))
          return law_fail("multiplicative", {x, y});
    return law_pass("multiplicative");
  }());
  return report;
}

inline bool is_truss_isomorphism(Truss const &a, Truss const &b, IndexMap const &f)
{
  return a.order() == b.order() && is_bijection(f, b.order()) && check_truss_morphism(a, b, f).ok();
}

/**
 * Searches for a truss isomorphism a -> b.
 *
 * Any heap isomorphism is a translation composed with a group isomorphism
 * of retracts, so the search fixes the image of one anchor element (the
 * identity or absorber when present) and enumerates retract isomorphisms.
 */
inline std::optional<IndexMap> find_truss_isomorphism(Truss const &a, Truss const &b,
                                                      std::size_t node_limit = default_node_limit)
{
  std::size_t const n = a.order();
  if (n != b.order() || a.identity().has_value() != b.identity().has_value() ||
      a.absorber().has_value() != b.absorber().has_value() ||
      a.is_commutative() != b.is_commutative())
    return std::nullopt;
  auto idempotents = [](Truss const &t) {
    std::size_t k = 0;
    for (Index x = 0; x < t.order(); ++x)
      k += t.mul(x, x) == x ? 1 : 0;
    return k;
  };
  if (idempotents(a) != idempotents(b))
    return std::nullopt;

  Index anchor = 0;
  IndexSet targets;
  if (a.identity()) {
    anchor = *a.identity();
    targets = {*b.identity()};
  } else if (a.absorber()) {
    anchor = *a.absorber();
    targets = {*b.absorber()};
  } else {
    bool const idem = a.mul(anchor, anchor) == anchor;
    for (Index c = 0; c < n; ++c)
      if ((b.mul(c, c) == c) == idem)
        targets.push_back(c);
  }

  auto const ga = to_group(retract(a.heap(), anchor));
  std::optional<IndexMap> found;
  for (Index c : targets) {
    auto const gb = to_group(retract(b.heap(), c));
    for_each_isomorphism(
      ga, gb,
      [&](IndexMap const &f) {
        for (Index x = 0; x < n; ++x)
          for (Index y = 0; y < n; ++y)
            if (f[a.mul(x, y)] != b.mul(f[x], f[y]))
              return false;
        found = f;
        return true;
      },
      node_limit);
    if (found)
      break;
  }
  return found;
}

struct TrussQuotient {
  Truss truss;
  IndexMap projection;
  std::vector<IndexSet> classes;
};

/// T/P for a two-sided paragon P; class multiplication is checked against
/// every pair of representatives.
inline TrussQuotient quotient_truss(Truss const &t, IndexSet const &p)
{
  if (t.is_left())
    throw std::invalid_argument("quotient_truss: left trusses have no two-sided quotient");
  auto const check = is_paragon(t, p);
  if (!is_two_sided(check.kind))
    throw std::invalid_argument("quotient_truss: subset is not a two-sided paragon (" +
                                to_string(check.kind) + ")");
  auto hq = quotient_heap(t.heap(), p);
  std::size_t const q = hq.classes.size();
  auto const &proj = hq.projection;
  Table mul(q, q);
  for (Index i = 0; i < q; ++i)
    for (Index j = 0; j < q; ++j)
      mul(i, j) = proj[t.mul(hq.classes[i].front(), hq.classes[j].front())];
  for (Index x = 0; x < t.order(); ++x)
    for (Index y = 0; y < t.order(); ++y)
      if (proj[t.mul(x, y)] != mul(proj[x], proj[y]))
        throw InvariantBroken("class multiplication depends on representatives");
  Truss quotient(std::move(hq.heap), std::move(mul));
  if (t.identity() && quotient.identity() != proj[*t.identity()])
    throw InvariantBroken("identity class is not the quotient identity");
  if (t.absorber() && quotient.absorber() != proj[*t.absorber()])
    throw InvariantBroken("absorber class is not the quotient absorber");
  return {std::move(quotient), hq.projection, std::move(hq.classes)};
}

inline TrussQuotient quotient_truss(Truss const &t, Paragon const &p)
{
  return quotient_truss(t, p.members);
}

inline IndexSet units(Truss const &t)
{
  if (!t.identity())
    throw std::invalid_argument("units: truss has no identity");
  Index const one = *t.identity();
  IndexSet u;
  for (Index a = 0; a < t.order(); ++a)
    for (Index b = 0; b < t.order(); ++b)
      if (t.mul(a, b) == one && t.mul(b, a) == one) {
        u.push_back(a);
        break;
      }
  return u;
}

/// The two-element truss T(Z_2), used as the comparison target below.
inline Truss two_element_ring_truss()
{
  return truss_from_ring(AbGroup::cyclic(2), Table::from_rows({{0, 0}, {0, 1}}));
}

struct UnitsParagonReport {
  std::size_t unit_count = 0;
  bool is_subheap = false;
  bool is_paragon = false;
  std::optional<std::size_t> quotient_order;
  bool quotient_is_z2 = false;
  /// every r has r or 1 - r a unit
  bool thm_z2_holds = false;
  /// class of 1 added to itself is the absorber class (only when paragon)
  std::optional<bool> char2_holds;
  /// a - b is never a unit for units a, b (only when paragon)
  std::optional<bool> difference_law_holds;

  /// 1 + 1 is not a unit
  bool two_is_nonunit = false;

  /// (paragon with quotient T(Z_2)) <=> thm_z2_holds; fails for Z_p, p odd
  bool equivalence_holds() const { return (is_paragon && quotient_is_z2) == thm_z2_holds; }
  /// the same with 1 + 1 a non-unit added to the right-hand side
  bool corrected_equivalence_holds() const
  {
    return (is_paragon && quotient_is_z2) == (thm_z2_holds && two_is_nonunit);
  }
};

/// Evaluates the units of a ring-type unital truss as a candidate paragon.
inline UnitsParagonReport units_paragon_report(Truss const &t)
{
  if (!t.identity() || !t.absorber())
    throw std::invalid_argument("units_paragon_report: needs a unital ring-type truss");
  Index const one = *t.identity(), zero = *t.absorber();
  UnitsParagonReport r;
  auto const u = units(t);
  auto const in = membership(u, t.order());
  r.unit_count = u.size();
  r.is_subheap = is_subheap(t.heap(), u);
  r.is_paragon = is_two_sided(is_paragon(t, u).kind);

  r.thm_z2_holds = true;
  for (Index x = 0; x < t.order() && r.thm_z2_holds; ++x)
    r.thm_z2_holds = in[x] || in[t.bracket(one, x, zero)];
  r.two_is_nonunit = !in[t.bracket(one, zero, one)];

  if (r.is_paragon) {
    auto q = quotient_truss(t, u);
    r.quotient_order = q.classes.size();
    r.quotient_is_z2 = find_truss_isomorphism(q.truss, two_element_ring_truss()).has_value();
    Index const c1 = q.projection[one], c0 = q.projection[zero];
    r.char2_holds = q.truss.bracket(c1, c0, c1) == c0;
    bool diff = true;
    for (Index a : u)
      for (Index b : u)
        if (in[t.bracket(a, b, zero)])
          diff = false;
    r.difference_law_holds = diff;
  }
  return r;
}

/// j-fold sums j*u (in the absorber retract) are units exactly for odd j,
/// for every unit u and 1 <= j <= |T|.
inline LawResult odd_multiple_check(Truss const &t)
{
  if (!t.absorber())
    throw std::invalid_argument("odd_multiple_check: needs a ring-type truss");
  auto const u = units(t);
  if (!is_two_sided(is_paragon(t, u).kind))
    throw std::invalid_argument("odd_multiple_check: units do not form a paragon");
  auto const in = membership(u, t.order());
  auto const g = retract(t.heap(), *t.absorber());
  for (Index x : u) {
    Index acc = g.zero();
    for (std::size_t j = 1; j <= t.order(); ++j) {
      acc = g.add(acc, x);
      if (static_cast<bool>(in[acc]) != (j % 2 == 1))
        return law_fail("odd-multiples", {x, j});
    }
  }
  return law_pass("odd-multiples");
}

} // namespace trusslab
