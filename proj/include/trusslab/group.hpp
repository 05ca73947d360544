#pragma once

/**
 * @file group.hpp
 * @brief Finite (possibly nonabelian) groups given by Cayley tables:
 * invariants, abelian decomposition, isomorphism search and the handful of
 * named groups needed to recognise unit groups and retracts.
 */

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abgroup.hpp"
#include "core.hpp"

namespace trusslab {

class FiniteGroup {
public:
  FiniteGroup() : FiniteGroup(Table(1, 1, 0)) {}

  explicit FiniteGroup(Table mul, std::vector<std::string> labels = {})
    : mul_(std::move(mul)), labels_(std::move(labels))
  {
    throw_if_failed(validate(mul_));
    std::size_t const n = order();
    for (Index e = 0; e < n; ++e) {
      bool ok = true;
      for (Index a = 0; a < n && ok; ++a)
        ok = mul_(e, a) == a && mul_(a, e) == a;
      if (ok) {
        id_ = e;
        break;
      }
    }
    inv_.assign(n, 0);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        if (mul_(a, b) == id_) {
          inv_[a] = b;
          break;
        }
    if (labels_.empty())
      labels_ = index_labels(n);
    if (labels_.size() != n)
      throw std::invalid_argument("label count does not match group order");
  }

  static LawReport validate(Table const &mul)
  {
    LawReport report;
    std::size_t const n = mul.rows();
    if (n == 0 || mul.cols() != n) {
      report.add(law_fail("shape", {}, "multiplication table must be non-empty and square"));
      return report;
    }
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        if (mul(a, b) >= n) {
          report.add(law_fail("closure", {a, b}));
          return report;
        }
    report.add(law_pass("closure"));

    report.add([&]() -> LawResult {
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
          Index const ab = mul(a, b);
          for (Index c = 0; c < n; ++c)
            if (mul(ab, c) != mul(a, mul(b, c)))
              return law_fail("associativity", {a, b, c});
        }
      return law_pass("associativity");
    }());

    std::optional<Index> id;
    for (Index e = 0; e < n && !id; ++e) {
      bool ok = true;
      for (Index a = 0; a < n && ok; ++a)
        ok = mul(e, a) == a && mul(a, e) == a;
      if (ok)
        id = e;
    }
    if (!id) {
      report.add(law_fail("identity", {}, "no two-sided identity"));
      return report;
    }
    report.add(law_pass("identity"));

    report.add([&]() -> LawResult {
      for (Index a = 0; a < n; ++a) {
        bool found = false;
        for (Index b = 0; b < n && !found; ++b)
          found = mul(a, b) == *id && mul(b, a) == *id;
        if (!found)
          return law_fail("inverse", {a});
      }
      return law_pass("inverse");
    }());
    return report;
  }

  std::size_t order() const { return mul_.rows(); }
  Index identity() const { return id_; }
  Index mul(Index a, Index b) const { return mul_(a, b); }
  Index inv(Index a) const { return inv_[a]; }
  Table const &table() const { return mul_; }
  std::vector<std::string> const &labels() const { return labels_; }
  std::string const &label(Index i) const { return labels_[i]; }

  bool is_abelian() const
  {
    for (Index a = 0; a < order(); ++a)
      for (Index b = a + 1; b < order(); ++b)
        if (mul_(a, b) != mul_(b, a))
          return false;
    return true;
  }

  std::size_t element_order(Index a) const
  {
    std::size_t k = 1;
    for (Index x = a; x != id_; x = mul_(x, a))
      ++k;
    return k;
  }

  Index power(Index a, std::size_t k) const
  {
    Index x = id_;
    for (std::size_t i = 0; i < k; ++i)
      x = mul_(x, a);
    return x;
  }

  friend bool operator==(FiniteGroup const &a, FiniteGroup const &b)
  {
    return a.mul_ == b.mul_;
  }

private:
  Table mul_;
  Index id_ = 0;
  std::vector<Index> inv_;
  std::vector<std::string> labels_;
};

inline FiniteGroup to_group(AbGroup const &g)
{
  return FiniteGroup(g.table(), g.labels());
}

inline IndexSet generated_subgroup(FiniteGroup const &g, IndexSet const &gens)
{
  std::vector<char> in(g.order(), 0);
  IndexSet members{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (Index s : gens) {
      Index const x = g.mul(members[i], s);
      if (!in[x]) {
        in[x] = 1;
        members.push_back(x);
      }
    }
  return normalized(std::move(members));
}

inline bool is_subgroup(FiniteGroup const &g, IndexSet const &s)
{
  if (s.empty())
    return false;
  auto const in = membership(s, g.order());
  for (Index a : s)
    for (Index b : s)
      if (!in[g.mul(a, g.inv(b))])
        return false;
  return true;
}

inline bool is_normal_subgroup(FiniteGroup const &g, IndexSet const &s)
{
  if (!is_subgroup(g, s))
    return false;
  auto const in = membership(s, g.order());
  for (Index x = 0; x < g.order(); ++x)
    for (Index a : s)
      if (!in[g.mul(g.mul(x, a), g.inv(x))])
        return false;
  return true;
}

inline IndexSet center(FiniteGroup const &g)
{
  IndexSet z;
  for (Index a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Index b = 0; b < g.order() && central; ++b)
      central = g.mul(a, b) == g.mul(b, a);
    if (central)
      z.push_back(a);
  }
  return z;
}

inline IndexSet derived_subgroup(FiniteGroup const &g)
{
  IndexSet comms;
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b)
      comms.push_back(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  return generated_subgroup(g, normalized(std::move(comms)));
}

struct GroupQuotient {
  FiniteGroup group;
  IndexMap projection;
};

/// G/N for a normal subgroup N; cosets indexed by their least member.
inline GroupQuotient quotient_group(FiniteGroup const &g, IndexSet const &normal)
{
  if (!is_normal_subgroup(g, normal))
    throw std::invalid_argument("quotient_group: subset is not a normal subgroup");
  std::size_t const n = g.order();
  IndexMap proj(n, n);
  std::vector<Index> reps;
  for (Index x = 0; x < n; ++x) {
    if (proj[x] != n)
      continue;
    for (Index a : normal)
      proj[g.mul(x, a)] = reps.size();
    reps.push_back(x);
  }
  std::size_t const q = reps.size();
  auto mul = Table::generate(q, q, [&](Index i, Index j) { return proj[g.mul(reps[i], reps[j])]; });
  return {FiniteGroup(std::move(mul)), std::move(proj)};
}

/// All subgroups, each as a sorted index set, in order of discovery.
inline std::vector<IndexSet> all_subgroups(FiniteGroup const &g)
{
  std::vector<IndexSet> subgroups{IndexSet{g.identity()}};
  std::map<IndexSet, bool> seen{{subgroups.front(), true}};
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    IndexSet const h = subgroups[i];
    for (Index x = 0; x < g.order(); ++x) {
      if (contains(h, x))
        continue;
      IndexSet gens = h;
      gens.push_back(x);
      auto k = generated_subgroup(g, gens);
      if (seen.emplace(k, true).second)
        subgroups.push_back(std::move(k));
    }
  }
  return subgroups;
}

namespace detail {

inline std::vector<std::size_t> prime_factors(std::size_t n)
{
  std::vector<std::size_t> ps;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  if (n > 1)
    ps.push_back(n);
  return ps;
}

} // namespace detail

/**
 * Invariant factors d1 | d2 | ... | dr with product |G| (empty for the
 * trivial group).
 *
 * For each prime p the p-primary partition is read off the counts
 * |G[p^i]| = #{x : x^(p^i) = 1}: the number of cyclic factors of order at
 * least p^i equals log_p(|G[p^i]| / |G[p^(i-1)]|).
 */
inline std::vector<std::size_t> abelian_invariants(FiniteGroup const &g)
{
  if (!g.is_abelian())
    throw std::invalid_argument("abelian_invariants: group is not abelian");
  std::size_t const n = g.order();
  std::vector<std::size_t> orders(n);
  for (Index a = 0; a < n; ++a)
    orders[a] = g.element_order(a);

  // per prime, the p-power parts of the factors, largest first
  std::vector<std::vector<std::size_t>> parts_by_prime;
  for (std::size_t p : detail::prime_factors(n)) {
    std::vector<std::size_t> ranks; // ranks[i-1] = #factors of order >= p^i
    std::size_t prev = 1;
    for (std::size_t pk = p;; pk *= p) {
      std::size_t count = 0;
      for (auto o : orders)
        count += (pk % o == 0) ? 1 : 0;
      std::size_t ratio = count / prev, r = 0;
      while (ratio > 1) {
        ratio /= p;
        ++r;
      }
      if (r == 0)
        break;
      ranks.push_back(r);
      prev = count;
    }
    std::vector<std::size_t> parts;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      std::size_t const exactly = ranks[i] - (i + 1 < ranks.size() ? ranks[i + 1] : 0);
      std::size_t pe = 1;
      for (std::size_t k = 0; k <= i; ++k)
        pe *= p;
      for (std::size_t k = 0; k < exactly; ++k)
        parts.push_back(pe);
    }
    std::sort(parts.rbegin(), parts.rend());
    parts_by_prime.push_back(std::move(parts));
  }

  std::size_t r = 0;
  for (auto const &parts : parts_by_prime)
    r = std::max(r, parts.size());
  std::vector<std::size_t> factors(r, 1);
  for (auto const &parts : parts_by_prime)
    for (std::size_t i = 0; i < parts.size(); ++i)
      factors[i] *= parts[i];
  std::reverse(factors.begin(), factors.end());
  return factors;
}

inline std::vector<std::size_t> abelian_invariants(AbGroup const &g)
{
  return abelian_invariants(to_group(g));
}

struct GroupFingerprint {
  std::size_t order = 0;
  std::map<std::size_t, std::size_t> order_profile; // element order -> count
  std::size_t center_size = 0;
  std::size_t derived_order = 0;
  std::vector<std::size_t> abelianization;

  bool operator==(GroupFingerprint const &) const = default;
};

inline GroupFingerprint fingerprint(FiniteGroup const &g)
{
  GroupFingerprint fp;
  fp.order = g.order();
  for (Index a = 0; a < g.order(); ++a)
    ++fp.order_profile[g.element_order(a)];
  fp.center_size = center(g).size();
  auto const derived = derived_subgroup(g);
  fp.derived_order = derived.size();
  fp.abelianization = abelian_invariants(quotient_group(g, derived).group);
  return fp;
}

/// Generators picked greedily by descending element order.
inline IndexSet greedy_generators(FiniteGroup const &g)
{
  std::vector<Index> elems(g.order());
  std::iota(elems.begin(), elems.end(), Index{0});
  std::stable_sort(elems.begin(), elems.end(), [&](Index a, Index b) {
    return g.element_order(a) > g.element_order(b);
  });
  IndexSet gens, span{g.identity()};
  for (Index x : elems) {
    if (contains(span, x))
      continue;
    gens.push_back(x);
    span = generated_subgroup(g, gens);
    if (span.size() == g.order())
      break;
  }
  return gens;
}

class SearchLimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_node_limit = 1000000;

/**
 * Calls `visit(map)` for every isomorphism g -> h until it returns true.
 * Returns true iff some visit returned true.
 *
 * Backtracks over images of greedy generators. After each choice, the map is
 * extended over the generated subgroup along a spanning tree and checked on
 * every (element, generator) pair, which makes it a homomorphism there.
 */
template <typename Visit>
bool for_each_isomorphism(FiniteGroup const &g, FiniteGroup const &h, Visit &&visit,
                          std::size_t node_limit = default_node_limit)
{
  std::size_t const n = g.order();
  if (n != h.order())
    return false;
  auto const gens = greedy_generators(g);
  std::size_t const r = gens.size();

  // spanning tree of <g_1..g_j>: (element, parent, generator) in BFS order
  struct Step {
    Index x, parent, gen;
  };
  std::vector<std::vector<Step>> trees(r + 1);
  for (std::size_t j = 1; j <= r; ++j) {
    std::vector<char> seen(n, 0);
    seen[g.identity()] = 1;
    std::vector<Index> queue{g.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (std::size_t k = 0; k < j; ++k) {
        Index const x = g.mul(queue[i], gens[k]);
        if (!seen[x]) {
          seen[x] = 1;
          queue.push_back(x);
          trees[j].push_back({x, queue[i], k});
        }
      }
  }

  std::vector<std::size_t> h_orders(n);
  for (Index a = 0; a < n; ++a)
    h_orders[a] = h.element_order(a);
  std::vector<Index> images(r);
  std::size_t nodes = 0;
  IndexMap f(n);

  auto extend = [&](std::size_t j) -> bool {
    std::fill(f.begin(), f.end(), n);
    f[g.identity()] = h.identity();
    std::vector<char> used(n, 0);
    used[h.identity()] = 1;
    for (auto const &s : trees[j]) {
      Index const y = h.mul(f[s.parent], images[s.gen]);
      if (used[y])
        return false;
      used[y] = 1;
      f[s.x] = y;
    }
    for (Index x = 0; x < n; ++x) {
      if (f[x] == n)
        continue;
      for (std::size_t k = 0; k < j; ++k)
        if (f[g.mul(x, gens[k])] != h.mul(f[x], images[k]))
          return false;
    }
    return true;
  };

  auto recurse = [&](auto &&self, std::size_t j) -> bool {
    if (++nodes > node_limit)
      throw SearchLimitExceeded("isomorphism search exceeded node limit");
    if (j == r)
      return visit(static_cast<IndexMap const &>(f));
    std::size_t const want = g.element_order(gens[j]);
    for (Index c = 0; c < n; ++c) {
      if (h_orders[c] != want)
        continue;
      images[j] = c;
      if (extend(j + 1) && self(self, j + 1))
        return true;
    }
    return false;
  };

  if (r == 0) {
    f.assign(n, h.identity());
    return visit(static_cast<IndexMap const &>(f));
  }
  return recurse(recurse, 0);
}

inline std::optional<IndexMap> is_isomorphic(FiniteGroup const &g, FiniteGroup const &h,
                                             std::size_t node_limit = default_node_limit)
{
  if (g.order() != h.order() || fingerprint(g) != fingerprint(h))
    return std::nullopt;
  std::optional<IndexMap> found;
  for_each_isomorphism(
    g, h,
    [&](IndexMap const &f) {
      found = f;
      return true;
    },
    node_limit);
  return found;
}

inline bool is_group_isomorphism(FiniteGroup const &g, FiniteGroup const &h, IndexMap const &f)
{
  if (!is_bijection(f, h.order()) || f.size() != g.order())
    return false;
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b)
      if (f[g.mul(a, b)] != h.mul(f[a], f[b]))
        return false;
  return true;
}

/// Pairs (a, b) encoded as a * |h| + b.
inline FiniteGroup direct_product(FiniteGroup const &g, FiniteGroup const &h)
{
  std::size_t const m = h.order();
  auto mul = Table::generate(g.order() * m, g.order() * m, [&](Index x, Index y) {
    return g.mul(x / m, y / m) * m + h.mul(x % m, y % m);
  });
  std::vector<std::string> labels;
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < m; ++b)
      labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  return FiniteGroup(std::move(mul), std::move(labels));
}

inline FiniteGroup cyclic_group(std::size_t n)
{
  if (n == 0)
    throw std::invalid_argument("cyclic group of order 0");
  std::vector<std::string> labels{"1"};
  for (Index i = 1; i < n; ++i)
    labels.push_back(i == 1 ? "g" : "g^" + std::to_string(i));
  return FiniteGroup(Table::generate(n, n, [n](Index a, Index b) { return (a + b) % n; }),
                     std::move(labels));
}

/// Dihedral group of the given order 2k: r^i s^j stored at j*k + i.
inline FiniteGroup dihedral_group(std::size_t order)
{
  if (order < 2 || order % 2)
    throw std::invalid_argument("dihedral group needs an even order >= 2");
  std::size_t const k = order / 2;
  auto mul = Table::generate(order, order, [k](Index x, Index y) {
    Index const i = x % k, a = x / k, j = y % k, b = y / k;
    Index const rot = a ? (i + k - j) % k : (i + j) % k;
    return ((a + b) % 2) * k + rot;
  });
  std::vector<std::string> labels;
  for (Index a = 0; a < 2; ++a)
    for (Index i = 0; i < k; ++i) {
      std::string rot = i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
      std::string s = rot + (a ? "s" : "");
      labels.push_back(s.empty() ? "1" : s);
    }
  return FiniteGroup(std::move(mul), std::move(labels));
}

/// Quaternion group {±1, ±i, ±j, ±k}.
inline FiniteGroup quaternion_group()
{
  // unit u in {1,i,j,k} with sign: index = 2*u + (negative ? 1 : 0)
  static constexpr int unit_mul[4][4][2] = {
    // {unit, sign}; sign 1 means negated
    {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
    {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
    {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
    {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  auto mul = Table::generate(8, 8, [](Index x, Index y) {
    auto const &p = unit_mul[x / 2][y / 2];
    Index const sign = (x % 2 + y % 2 + static_cast<Index>(p[1])) % 2;
    return static_cast<Index>(p[0]) * 2 + sign;
  });
  return FiniteGroup(std::move(mul), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

inline FiniteGroup abelian_group(std::vector<std::size_t> const &invariants)
{
  FiniteGroup g;
  for (auto d : invariants)
    g = g.order() == 1 ? cyclic_group(d) : direct_product(g, cyclic_group(d));
  return g;
}

/**
 * Named groups: "cyclic" {n}, "dihedral" {order}, "quaternion" {},
 * "abelian" {d1, d2, ...}, "D8xC2" {}.
 */
inline FiniteGroup named_group(std::string const &name, std::vector<std::size_t> const &params = {})
{
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw std::invalid_argument("named_group " + name + ": expected " + std::to_string(k) +
                                  " parameter(s)");
  };
  if (name == "cyclic") {
    need(1);
    return cyclic_group(params[0]);
  }
  if (name == "dihedral") {
    need(1);
    return dihedral_group(params[0]);
  }
  if (name == "quaternion") {
    need(0);
    return quaternion_group();
  }
  if (name == "abelian" || name == "direct-product")
    return abelian_group(params);
  if (name == "D8xC2") {
    need(0);
    return direct_product(dihedral_group(8), cyclic_group(2));
  }
  throw std::invalid_argument("unknown group name: " + name);
}

inline std::string abelian_name(std::vector<std::size_t> const &invariants)
{
  if (invariants.empty())
    return "C1";
  std::string s;
  for (std::size_t i = 0; i < invariants.size(); ++i)
    s += (i ? "xC" : "C") + std::to_string(invariants[i]);
  return s;
}

struct Identification {
  GroupFingerprint fingerprint;
  std::optional<std::string> named_match;
};

/// Matches against abelian groups (by invariants) and the nonabelian names
/// above of the same order.
inline Identification identify(FiniteGroup const &g)
{
  Identification id{fingerprint(g), std::nullopt};
  if (g.is_abelian()) {
    id.named_match = abelian_name(abelian_invariants(g));
    return id;
  }
  std::vector<std::pair<std::string, FiniteGroup>> candidates;
  std::size_t const n = g.order();
  if (n >= 6 && n % 2 == 0)
    candidates.emplace_back("D" + std::to_string(n), dihedral_group(n));
  if (n == 8)
    candidates.emplace_back("Q8", quaternion_group());
  if (n == 16) {
    candidates.emplace_back("D8xC2", named_group("D8xC2"));
    candidates.emplace_back("Q8xC2", direct_product(quaternion_group(), cyclic_group(2)));
  }
  for (auto const &[name, h] : candidates)
    if (is_isomorphic(g, h)) {
      id.named_match = name;
      break;
    }
  return id;
}

/// The subgroup `s` as a group on 0..|s|-1 (position in `s`).
inline FiniteGroup subgroup_as_group(FiniteGroup const &g, IndexSet const &s)
{
  if (!is_subgroup(g, s))
    throw std::invalid_argument("subgroup_as_group: not a subgroup");
  IndexMap pos(g.order(), 0);
  for (Index i = 0; i < s.size(); ++i)
    pos[s[i]] = i;
  std::vector<std::string> labels;
  for (Index x : s)
    labels.push_back(g.label(x));
  return FiniteGroup(
    Table::generate(s.size(), s.size(), [&](Index i, Index j) { return pos[g.mul(s[i], s[j])]; }),
    std::move(labels));
}

} // namespace trusslab
