#pragma once

/**
 * @file brace.hpp
 * @brief Braces on a shared carrier, the bridges to and from trusses, brace
 * ideals, the socle, and the ideal / normal-paragon correspondence.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abgroup.hpp"
#include "core.hpp"
#include "group.hpp"
#include "heap.hpp"
#include "truss.hpp"

namespace trusslab {

class Brace {
public:
  /// Validates both brace laws (only the left one for left braces) and that
  /// the additive zero is the multiplicative identity.
  Brace(AbGroup add, FiniteGroup mul, Sidedness sided = Sidedness::two_sided)
    : add_(std::move(add)), mul_(std::move(mul)), sided_(sided)
  {
    throw_if_failed(validate(add_, mul_, sided_));
  }

  static LawReport validate(AbGroup const &add, FiniteGroup const &mul, Sidedness sided)
  {
    LawReport report;
    std::size_t const n = add.order();
    if (mul.order() != n) {
      report.add(law_fail("shape", {}, "additive and multiplicative orders differ"));
      return report;
    }
    report.add(add.zero() == mul.identity()
                 ? law_pass("shared-neutral")
                 : law_fail("shared-neutral", {add.zero(), mul.identity()}));
    // a(b + c) = ab - a + ac
    report.add([&]() -> LawResult {
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          for (Index c = 0; c < n; ++c)
            if (mul.mul(a, add.add(b, c)) != add.add(add.sub(mul.mul(a, b), a), mul.mul(a, c)))
              return law_fail("left-brace-law", {a, b, c});
      return law_pass("left-brace-law");
    }());
    if (sided == Sidedness::left) {
      report.add(law_skipped("right-brace-law", "left brace"));
      return report;
    }
    // (b + c)a = ba - a + ca
    report.add([&]() -> LawResult {
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b)
          for (Index c = 0; c < n; ++c)
            if (mul.mul(add.add(b, c), a) != add.add(add.sub(mul.mul(b, a), a), mul.mul(c, a)))
              return law_fail("right-brace-law", {b, c, a});
      return law_pass("right-brace-law");
    }());
    return report;
  }

  std::size_t order() const { return add_.order(); }
  AbGroup const &additive() const { return add_; }
  FiniteGroup const &multiplicative() const { return mul_; }
  Sidedness sided() const { return sided_; }
  Index zero() const { return add_.zero(); }
  Index add(Index a, Index b) const { return add_.add(a, b); }
  Index sub(Index a, Index b) const { return add_.sub(a, b); }
  Index mul(Index a, Index b) const { return mul_.mul(a, b); }
  std::vector<std::string> const &labels() const { return add_.labels(); }

  friend bool operator==(Brace const &a, Brace const &b)
  {
    return a.sided_ == b.sided_ && a.add_ == b.add_ && a.mul_ == b.mul_;
  }

private:
  AbGroup add_;
  FiniteGroup mul_;
  Sidedness sided_;
};

/// For a truss whose multiplication is a group: a + b := [a, 1, b].
inline Brace brace_from_truss(Truss const &t)
{
  if (!t.identity())
    throw std::invalid_argument("brace_from_truss: truss has no identity");
  auto const u = units(t);
  if (u.size() != t.order()) {
    IndexSet non;
    auto const in = membership(u, t.order());
    for (Index x = 0; x < t.order(); ++x)
      if (!in[x])
        non.push_back(x);
    throw std::invalid_argument("brace_from_truss: non-invertible elements " +
                                format_set(non, &t.labels()));
  }
  return Brace(retract(t.heap(), *t.identity()), FiniteGroup(t.table(), t.labels()), t.sided());
}

/// T(B): [a, b, c] := a - b + c.
inline Truss truss_from_brace(Brace const &b)
{
  return Truss(heap_from_group(b.additive()), b.multiplicative().table(), b.sided());
}

/// {a : ab = a + b for all b}.
inline IndexSet socle(Brace const &b)
{
  IndexSet s;
  for (Index a = 0; a < b.order(); ++a) {
    bool ok = true;
    for (Index x = 0; x < b.order() && ok; ++x)
      ok = b.mul(a, x) == b.add(a, x);
    if (ok)
      s.push_back(a);
  }
  return s;
}

/// Normal subgroup of (B, .) with bs - b in S for all b in B, s in S.
inline bool is_brace_ideal(Brace const &b, IndexSet const &s)
{
  if (s.empty())
    throw std::invalid_argument("is_brace_ideal: empty subset");
  if (!is_normal_subgroup(b.multiplicative(), s))
    return false;
  auto const in = membership(s, b.order());
  for (Index x = 0; x < b.order(); ++x)
    for (Index a : s)
      if (!in[b.sub(b.mul(x, a), x)])
        return false;
  return true;
}

/// All brace ideals, found among the normal subgroups of (B, .).
inline std::vector<IndexSet> brace_ideals(Brace const &b)
{
  std::vector<IndexSet> out;
  for (auto &h : all_subgroups(b.multiplicative()))
    if (is_brace_ideal(b, h))
      out.push_back(std::move(h));
  return out;
}

/// c + S for each c, deduplicated, ordered by least member.
inline std::vector<IndexSet> additive_cosets(Brace const &b, IndexSet const &s)
{
  std::vector<IndexSet> out;
  std::vector<char> seen(b.order(), 0);
  for (Index c = 0; c < b.order(); ++c) {
    if (seen[c])
      continue;
    IndexSet coset;
    for (Index a : s)
      coset.push_back(b.add(c, a));
    coset = normalized(std::move(coset));
    for (Index x : coset)
      seen[x] = 1;
    out.push_back(std::move(coset));
  }
  return out;
}

struct SocleReport {
  IndexSet socle;
  bool is_ideal = false;
  bool cosets_are_paragons = false;
};

inline SocleReport verify_socle(Brace const &b)
{
  SocleReport r;
  r.socle = socle(b);
  r.is_ideal = is_brace_ideal(b, r.socle);
  auto const t = truss_from_brace(b);
  r.cosets_are_paragons = true;
  for (auto const &c : additive_cosets(b, r.socle)) {
    auto const kind = is_paragon(t, c).kind;
    if (!(t.is_left() ? is_left_closed(kind) : is_two_sided(kind)))
      r.cosets_are_paragons = false;
  }
  return r;
}

struct NormalParagonReport {
  bool is_ideal = false;
  bool normal_paragon = false;
  bool contains_identity = false;
  bool in_some_quotient = false; // S = c + I for some brace ideal I

  /// ideal <=> normal paragon containing the identity
  bool ideal_equivalence_holds() const { return is_ideal == (normal_paragon && contains_identity); }
  /// element of some B/I <=> normal paragon
  bool quotient_equivalence_holds() const { return in_some_quotient == normal_paragon; }
};

/// Evaluates both sides of both equivalences for `s`; `ideals` must list
/// every brace ideal of `b` (see brace_ideals()).
inline NormalParagonReport ideal_iff_normal_paragon(Brace const &b, IndexSet const &s,
                                                    std::vector<IndexSet> const &ideals)
{
  if (b.sided() != Sidedness::two_sided)
    throw std::invalid_argument("ideal_iff_normal_paragon: needs a two-sided brace");
  if (s.empty())
    throw std::invalid_argument("ideal_iff_normal_paragon: empty subset");
  NormalParagonReport r;
  r.is_ideal = is_brace_ideal(b, s);
  auto const t = truss_from_brace(b);
  r.normal_paragon = is_two_sided(is_paragon(t, s).kind) && is_normal_paragon(t, s);
  r.contains_identity = contains(s, b.zero());
  for (auto const &ideal : ideals) {
    if (ideal.size() != s.size())
      continue;
    IndexSet coset;
    for (Index a : ideal)
      coset.push_back(b.add(s.front(), a));
    if (normalized(std::move(coset)) == s) {
      r.in_some_quotient = true;
      break;
    }
  }
  return r;
}

inline NormalParagonReport ideal_iff_normal_paragon(Brace const &b, IndexSet const &s)
{
  return ideal_iff_normal_paragon(b, s, brace_ideals(b));
}

/// U(T) with a + b := [a, 1, b], reindexed by position in units(t).
inline Brace units_brace(Truss const &t)
{
  auto const u = units(t);
  if (auto r = check_subheap(t.heap(), u); r.failed())
    throw LawViolation(law_fail("units-sub-heap", r.witness, "units are not a sub-heap"));
  Index const one = *t.identity();
  IndexMap pos(t.order(), 0);
  for (Index i = 0; i < u.size(); ++i)
    pos[u[i]] = i;
  std::vector<std::string> labels;
  for (Index x : u)
    labels.push_back(t.label(x));
  std::size_t const k = u.size();
  AbGroup add(Table::generate(k, k, [&](Index i, Index j) { return pos[t.bracket(u[i], one, u[j])]; }),
              pos[one], labels);
  FiniteGroup mul(Table::generate(k, k, [&](Index i, Index j) { return pos[t.mul(u[i], u[j])]; }),
                  labels);
  return Brace(std::move(add), std::move(mul), t.sided());
}

} // namespace trusslab
