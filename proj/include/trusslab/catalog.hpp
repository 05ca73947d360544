#pragma once

/**
 * @file catalog.hpp
 * @brief Constructors for the concrete families: modular rings, the trusses
 * Z^(a)/NZ, group rings, truncated polynomial rings over Z/2^k, endomorphism
 * extensions, plus bounded-range probes of the integer examples.
 *
 * Group-ring and polynomial carriers are coefficient vectors in
 * lexicographic order, most significant coefficient first.
 */

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "abgroup.hpp"
#include "brace.hpp"
#include "core.hpp"
#include "extension.hpp"
#include "group.hpp"
#include "heap.hpp"
#include "tmodule.hpp"
#include "truss.hpp"

namespace trusslab {

using BigInt = boost::multiprecision::cpp_int;

/// Associative ring given by its additive group and multiplication table.
struct Ring {
  AbGroup add;
  Table mul;
  std::optional<Index> one;

  bool unital() const { return one.has_value(); }
  std::size_t order() const { return add.order(); }
  Index zero() const { return add.zero(); }
  Index plus(Index a, Index b) const { return add.add(a, b); }
  Index minus(Index a, Index b) const { return add.sub(a, b); }
  Index times(Index a, Index b) const { return mul(a, b); }
  std::vector<std::string> const &labels() const { return add.labels(); }
};

/// Validates the ring laws and locates the identity.
inline Ring make_ring(AbGroup add, Table mul)
{
  throw_if_failed(validate_ring(add, mul));
  Ring r{std::move(add), std::move(mul), std::nullopt};
  for (Index e = 0; e < r.order() && !r.one; ++e) {
    bool ok = true;
    for (Index a = 0; a < r.order() && ok; ++a)
      ok = r.mul(e, a) == a && r.mul(a, e) == a;
    if (ok)
      r.one = e;
  }
  return r;
}

inline Truss ring_truss(Ring const &r)
{
  return truss_from_ring(r.add, r.mul);
}

inline Ring zn_ring(std::size_t n)
{
  if (n == 0)
    throw std::invalid_argument("zn_ring: n must be positive");
  return make_ring(AbGroup::cyclic(n), Table::generate(n, n, [n](Index a, Index b) {
                     return (a * b) % n;
                   }));
}

inline Truss zn_truss(std::size_t n) { return ring_truss(zn_ring(n)); }

/// Ring on Z_2 with every product zero.
inline Ring zero_ring_z2()
{
  return make_ring(AbGroup::cyclic(2), Table(2, 2, 0));
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t n)
{
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

/**
 * Z^(a)/NZ: addition mod N and m.n = amn + m + n mod N.
 *
 * Before the table is built, the paragon property of NZ in Z^(a) and the
 * independence of the product from representatives are sampled on integers
 * in [-1000, 1000] (policy.samples draws, policy.seed).
 */
inline Truss za_truss(std::int64_t a, std::int64_t N, CheckPolicy const &policy = {})
{
  if (a < 1 || N < 1)
    throw std::invalid_argument("za_truss: needs a >= 1 and N >= 1");
  auto prod = [a](std::int64_t m, std::int64_t n) { return a * m * n + m + n; };
  Rng rng(policy.seed);
  for (std::size_t s = 0; s < policy.samples; ++s) {
    std::int64_t const m = rng.between(-1000, 1000), k = rng.between(-1000, 1000);
    // m ._0 (kN) = [m.(kN), m.0, 0] = (amk + k)N
    std::int64_t const induced = prod(m, k * N) - prod(m, 0) + 0;
    if (induced != (a * m * k + k) * N || floor_mod(induced, N) != 0)
      throw InvariantBroken("NZ is not closed under the induced action at m=" + std::to_string(m));
    std::int64_t const n = rng.between(-1000, 1000), i = rng.between(-20, 20), j = rng.between(-20, 20);
    if (floor_mod(prod(m + i * N, n + j * N), N) != floor_mod(prod(m, n), N))
      throw InvariantBroken("Z^(a)/NZ product depends on representatives");
  }
  auto const n = static_cast<std::size_t>(N);
  auto mul = Table::generate(n, n, [&](Index x, Index y) {
    return static_cast<Index>(floor_mod(prod(static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)), N));
  });
  auto t = make_truss(heap_from_group(AbGroup::cyclic(n)), std::move(mul));
  if (t.identity() != Index{0})
    throw InvariantBroken("0 is not the identity of Z^(a)/NZ");
  return t;
}

/// m^{.k} in Z^(a) by the closed form ((am + 1)^k - 1) / a.
inline BigInt za_power(std::int64_t a, std::int64_t m, unsigned k)
{
  if (a < 1)
    throw std::invalid_argument("za_power: a must be positive");
  BigInt const base = BigInt(a) * m + 1;
  BigInt const num = boost::multiprecision::pow(base, k) - 1;
  if (num % a != 0)
    throw InvariantBroken("closed form is not integral");
  return num / a;
}

/// m^{.k} by k - 1 products amn + m + n; the empty product is 0.
inline BigInt za_power_iterated(std::int64_t a, std::int64_t m, unsigned k)
{
  BigInt acc = 0;
  BigInt const bm = m;
  for (unsigned i = 0; i < k; ++i)
    acc = BigInt(a) * acc * bm + acc + bm;
  return acc;
}

struct OrderCongruenceRow {
  unsigned k = 0;
  bool congruence_holds = false; // m^{.2^k} = 0 mod 2^(k+1) for |m| <= range
  std::size_t order_of_one = 0;  // multiplicative order of 1 mod 2^(k+1)
  bool maximal_order = false;    // order_of_one == 2^k
};

inline std::vector<OrderCongruenceRow> order_congruence_check(unsigned kmax, std::int64_t range = 20)
{
  if (kmax > 10)
    throw std::invalid_argument("order_congruence_check: kmax must be at most 10");
  std::vector<OrderCongruenceRow> rows;
  for (unsigned k = 1; k <= kmax; ++k) {
    OrderCongruenceRow row;
    row.k = k;
    std::int64_t const mod = std::int64_t{1} << (k + 1);
    row.congruence_holds = true;
    for (std::int64_t m = -range; m <= range; ++m)
      if (za_power(2, m, 1u << k) % mod != 0)
        row.congruence_holds = false;
    // identity is 0; iterate x -> x.1 = 2x + x + 1 mod 2^(k+1)
    std::int64_t x = 1;
    row.order_of_one = 1;
    while (x != 0) {
      x = floor_mod(2 * x + x + 1, mod);
      ++row.order_of_one;
    }
    row.maximal_order = row.order_of_one == (std::size_t{1} << k);
    rows.push_back(row);
  }
  return rows;
}

/// Coefficient vector of an index in base q with `len` digits, most
/// significant first.
inline std::vector<Index> digits(Index i, std::size_t q, std::size_t len)
{
  std::vector<Index> d(len);
  for (std::size_t p = len; p-- > 0;) {
    d[p] = i % q;
    i /= q;
  }
  return d;
}

inline Index undigits(std::vector<Index> const &d, std::size_t q)
{
  Index i = 0;
  for (Index c : d)
    i = i * q + c;
  return i;
}

inline std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t bound,
                                 char const *what)
{
  std::size_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    v *= base;
    if (v > bound)
      throw std::invalid_argument(std::string(what) + ": carrier larger than " +
                                  std::to_string(bound));
  }
  return v;
}

struct GroupRing {
  Ring ring;
  Ring coefficients;
  FiniteGroup group;
  IndexMap augmentation; // sum of coefficients, as an index of `coefficients`

  /// A_r, the augmentation fibre over r.
  IndexSet fiber(Index r) const
  {
    IndexSet s;
    for (Index x = 0; x < augmentation.size(); ++x)
      if (augmentation[x] == r)
        s.push_back(x);
    return s;
  }
};

/// RG with convolution product; requires |R|^|G| <= 256.
inline GroupRing group_ring(Ring const &r, FiniteGroup const &g)
{
  std::size_t const q = r.order(), k = g.order();
  std::size_t const n = checked_power(q, k, 256, "group_ring");
  auto coeffs = [&](Index i) { return digits(i, q, k); };
  auto add = Table::generate(n, n, [&](Index x, Index y) {
    auto a = coeffs(x), b = coeffs(y);
    for (Index i = 0; i < k; ++i)
      a[i] = r.plus(a[i], b[i]);
    return undigits(a, q);
  });
  auto mul = Table::generate(n, n, [&](Index x, Index y) {
    auto const a = coeffs(x), b = coeffs(y);
    std::vector<Index> c(k, r.zero());
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < k; ++j)
        c[g.mul(i, j)] = r.plus(c[g.mul(i, j)], r.times(a[i], b[j]));
    return undigits(c, q);
  });
  std::vector<std::string> labels;
  for (Index x = 0; x < n; ++x) {
    auto const c = coeffs(x);
    std::string s;
    for (Index i = 0; i < k; ++i) {
      if (c[i] == r.zero())
        continue;
      std::string term;
      if (i == g.identity())
        term = r.add.label(c[i]);
      else if (r.one && c[i] == *r.one)
        term = g.label(i);
      else
        term = r.add.label(c[i]) + g.label(i);
      s += (s.empty() ? "" : "+") + term;
    }
    labels.push_back(s.empty() ? r.add.label(r.zero()) : s);
  }
  IndexMap aug(n);
  for (Index x = 0; x < n; ++x) {
    Index sum = r.zero();
    for (Index c : coeffs(x))
      sum = r.plus(sum, c);
    aug[x] = sum;
  }
  auto ring = make_ring(AbGroup(std::move(add), undigits(std::vector<Index>(k, r.zero()), q),
                                std::move(labels)),
                        std::move(mul));
  return {std::move(ring), r, g, std::move(aug)};
}

struct AugmentationFiber {
  Index r = 0;
  bool is_paragon = false;
  bool is_subtruss = false;
  bool r_idempotent = false;
  bool quotient_iso_base = false; // via class -> augmentation of representative
};

struct GroupRingReport {
  bool augmentation_is_ring_map = false;
  bool fibers_equal_size = false;
  std::vector<AugmentationFiber> fibers;

  bool ok() const
  {
    if (!augmentation_is_ring_map || !fibers_equal_size)
      return false;
    for (auto const &f : fibers)
      if (!f.is_paragon || f.is_subtruss != f.r_idempotent || !f.quotient_iso_base)
        return false;
    return true;
  }
};

inline GroupRingReport verify_group_ring(GroupRing const &gr)
{
  GroupRingReport rep;
  auto const &R = gr.coefficients;
  auto const &RG = gr.ring;
  auto const &eps = gr.augmentation;
  bool ring_map = true;
  for (Index x = 0; x < RG.order() && ring_map; ++x)
    for (Index y = 0; y < RG.order() && ring_map; ++y)
      ring_map = eps[RG.plus(x, y)] == R.plus(eps[x], eps[y]) &&
                 eps[RG.times(x, y)] == R.times(eps[x], eps[y]);
  if (RG.one && R.one)
    ring_map = ring_map && eps[*RG.one] == *R.one;
  rep.augmentation_is_ring_map = ring_map;

  auto const t = ring_truss(RG);
  auto const base = ring_truss(R);
  std::size_t const expected = RG.order() / R.order();
  rep.fibers_equal_size = true;
  for (Index r = 0; r < R.order(); ++r) {
    AugmentationFiber f;
    f.r = r;
    auto const a = gr.fiber(r);
    rep.fibers_equal_size = rep.fibers_equal_size && a.size() == expected;
    f.is_paragon = is_two_sided(is_paragon(t, a).kind);
    f.is_subtruss = is_subtruss(t, a);
    f.r_idempotent = R.times(r, r) == r;
    if (f.is_paragon) {
      auto q = quotient_truss(t, a);
      IndexMap phi(q.classes.size());
      for (Index c = 0; c < phi.size(); ++c)
        phi[c] = eps[q.classes[c].front()];
      f.quotient_iso_base = is_truss_isomorphism(q.truss, base, phi);
    }
    rep.fibers.push_back(f);
  }
  return rep;
}

struct TruncPoly {
  Ring ring;
  std::size_t k = 0;        // coefficients in Z/2^k
  std::size_t length = 0;   // n: x^n = 0
  std::size_t modulus = 0;  // 2^k

  std::vector<Index> coefficients(Index p) const { return digits(p, modulus, length); }
  Index from_coefficients(std::vector<Index> const &c) const { return undigits(c, modulus); }
  Index constant(Index c) const
  {
    std::vector<Index> v(length, 0);
    v[0] = c % modulus;
    return from_coefficients(v);
  }
};

/// Z_{2^k}[x]/(x^n); requires 2^(kn) <= 256.
inline TruncPoly trunc_poly_ring(std::size_t k, std::size_t n)
{
  if (k < 1 || n < 1)
    throw std::invalid_argument("trunc_poly: needs k >= 1 and n >= 1");
  std::size_t const q = checked_power(2, k, 256, "trunc_poly");
  std::size_t const size = checked_power(q, n, 256, "trunc_poly");
  auto add = Table::generate(size, size, [&](Index x, Index y) {
    auto a = digits(x, q, n), b = digits(y, q, n);
    for (Index i = 0; i < n; ++i)
      a[i] = (a[i] + b[i]) % q;
    return undigits(a, q);
  });
  auto mul = Table::generate(size, size, [&](Index x, Index y) {
    auto const a = digits(x, q, n), b = digits(y, q, n);
    std::vector<Index> c(n, 0);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; i + j < n; ++j)
        c[i + j] = (c[i + j] + a[i] * b[j]) % q;
    return undigits(c, q);
  });
  std::vector<std::string> labels;
  for (Index x = 0; x < size; ++x) {
    auto const c = digits(x, q, n);
    std::string s;
    for (Index i = 0; i < n; ++i) {
      if (c[i] == 0)
        continue;
      std::string mono = i == 0 ? "" : i == 1 ? "x" : "x^" + std::to_string(i);
      std::string coef = (c[i] == 1 && i > 0) ? "" : std::to_string(c[i]);
      s += (s.empty() ? "" : "+") + coef + mono;
    }
    labels.push_back(s.empty() ? "0" : s);
  }
  auto ring = make_ring(AbGroup(std::move(add), 0, std::move(labels)), std::move(mul));
  return {std::move(ring), k, n, q};
}

inline Truss trunc_poly_truss(std::size_t k, std::size_t n)
{
  return ring_truss(trunc_poly_ring(k, n).ring);
}

namespace detail {

inline Index inverse_mod(Index a, std::size_t q)
{
  for (Index b = 1; b < q; ++b)
    if ((a * b) % q == 1)
      return b;
  if (q == 1)
    return 0;
  throw std::invalid_argument("no inverse modulo " + std::to_string(q));
}

} // namespace detail

/**
 * alpha^-1 - alpha^-2 (q + q^2 + ... + q^(n-1)) for p = alpha + q with q
 * nilpotent. This is the inverse in characteristic 2 and whenever n <= 2;
 * over Z/4 with n >= 3 it is not (see trunc_poly_inverse()).
 */
inline Index closed_form_inverse(TruncPoly const &tp, Index p)
{
  auto const &R = tp.ring;
  Index const alpha = tp.coefficients(p)[0];
  Index const ainv = detail::inverse_mod(alpha, tp.modulus);
  Index const q = R.minus(p, tp.constant(alpha));
  Index sum = R.zero(), power = q;
  for (std::size_t j = 1; j < tp.length; ++j) {
    sum = R.plus(sum, power);
    power = R.times(power, q);
  }
  return R.minus(tp.constant(ainv), R.times(tp.constant(ainv * ainv), sum));
}

/// alpha^-1 * sum_{j<n} (-alpha^-1 q)^j, the geometric series inverse.
inline Index trunc_poly_inverse(TruncPoly const &tp, Index p)
{
  auto const &R = tp.ring;
  Index const alpha = tp.coefficients(p)[0];
  Index const ainv = tp.constant(detail::inverse_mod(alpha, tp.modulus));
  Index const q = R.minus(p, tp.constant(alpha));
  Index const step = R.minus(R.zero(), R.times(ainv, q));
  Index sum = R.zero(), power = *R.one;
  for (std::size_t j = 0; j < tp.length; ++j) {
    sum = R.plus(sum, power);
    power = R.times(power, step);
  }
  return R.times(ainv, sum);
}

struct EndTruss {
  Ring end_ring;                      // End(G) under pointwise sum and composition
  std::vector<IndexMap> endomorphisms; // lexicographic by image vector
  TModule evaluation;                 // f . g = f(g)
  ExtTruss extension;                 // T(End G)[G; 0]
  bool matches_end_mult = false;      // (f,g)(f',g') = (f f', g + f(g'))
};

namespace detail {

inline std::vector<IndexMap> endomorphisms(AbGroup const &g)
{
  std::size_t const n = g.order();
  std::vector<IndexMap> out;
  auto additive = [&](IndexMap const &f) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        if (f[g.add(a, b)] != g.add(f[a], f[b]))
          return false;
    return true;
  };
  if (n <= 6) {
    IndexMap f(n, 0);
    for (;;) {
      if (additive(f))
        out.push_back(f);
      std::size_t i = n;
      while (i > 0 && f[i - 1] == n - 1)
        f[--i] = 0;
      if (i == 0)
        break;
      ++f[i - 1];
    }
    return out;
  }
  // a homomorphism is fixed by the images of a generating set
  auto const grp = to_group(g);
  auto const gens = greedy_generators(grp);
  std::vector<Index> images(gens.size(), 0);
  for (;;) {
    IndexMap f(n, n);
    f[g.zero()] = g.zero();
    std::vector<Index> queue{g.zero()};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Index const x = g.add(queue[i], gens[k]);
        if (f[x] == n) {
          f[x] = g.add(f[queue[i]], images[k]);
          queue.push_back(x);
        }
      }
    if (additive(f))
      out.push_back(f);
    std::size_t i = images.size();
    while (i > 0 && images[i - 1] == n - 1)
      images[--i] = 0;
    if (i == 0)
      break;
    ++images[i - 1];
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

/// T(End G) extended by G (evaluation action) at 0; requires
/// |End G| * |G| <= 256.
inline EndTruss end_truss(AbGroup const &g)
{
  auto ends = detail::endomorphisms(g);
  std::size_t const k = ends.size(), n = g.order();
  if (k * n > 256)
    throw std::invalid_argument("end_truss: |End(G)| * |G| exceeds 256");
  std::map<IndexMap, Index> index;
  for (Index i = 0; i < k; ++i)
    index[ends[i]] = i;
  auto add = Table::generate(k, k, [&](Index a, Index b) {
    IndexMap f(n);
    for (Index x = 0; x < n; ++x)
      f[x] = g.add(ends[a][x], ends[b][x]);
    return index.at(f);
  });
  auto mul = Table::generate(k, k, [&](Index a, Index b) {
    IndexMap f(n);
    for (Index x = 0; x < n; ++x)
      f[x] = ends[a][ends[b][x]];
    return index.at(f);
  });
  std::vector<std::string> labels;
  for (auto const &f : ends) {
    std::string s = "[";
    for (Index x = 0; x < n; ++x)
      s += (x ? "," : "") + g.label(f[x]);
    labels.push_back(s + "]");
  }
  IndexMap zero_map(n, g.zero());
  auto ring = make_ring(AbGroup(std::move(add), index.at(zero_map), std::move(labels)), std::move(mul));
  auto t = ring_truss(ring);
  auto eval = make_module(t, heap_from_group(g),
                          Table::generate(k, n, [&](Index f, Index x) { return ends[f][x]; }));
  auto ext = extend(t, eval, g.zero());
  bool matches = true;
  for (Index i = 0; i < ext.truss.order() && matches; ++i)
    for (Index j = 0; j < ext.truss.order() && matches; ++j) {
      Index const f = ext.first(i), x = ext.second(i), f2 = ext.first(j), x2 = ext.second(j);
      matches = ext.truss.mul(i, j) == ext.pair(ring.mul(f, f2), g.add(x, ends[f][x2]));
    }
  return {std::move(ring), std::move(ends), std::move(eval), std::move(ext), matches};
}

struct IntegerProbeReport {
  std::int64_t n = 0, m = 0, residue = 0;
  std::size_t samples = 0;
  bool translate_is_residue_class = true; // kn + m == residue mod n
  bool subheap = true;
  bool lambda_closed = true;
  bool rho_closed = true;
  bool ideal_observed = true;      // x.p in P on every probe
  bool ideal_expected = false;     // residue == 0
  bool residue_map_multiplicative = true;
  bool residue_map_bracket = true;
  bool classes_are_residues = true; // x ~_P y <=> x = y mod n

  bool ok() const
  {
    return translate_is_residue_class && subheap && lambda_closed && rho_closed &&
           ideal_observed == ideal_expected && residue_map_multiplicative &&
           residue_map_bracket && classes_are_residues;
  }
};

/**
 * Probes (nZ)_0^m = {kn + m} inside T(Z) on integers drawn from
 * [-range, range]: sub-heap and lambda/rho closure, the ideal property
 * (expected exactly when n | m), and the residue map onto T(Z/nZ).
 */
inline IntegerProbeReport integer_paragon_probe(std::int64_t n, std::int64_t m, std::int64_t range,
                                                std::size_t samples = 10000, std::uint64_t seed = 0)
{
  if (n < 1 || range < 1)
    throw std::invalid_argument("integer_paragon_probe: needs n >= 1 and range >= 1");
  IntegerProbeReport r;
  r.n = n;
  r.m = m;
  r.samples = samples;
  r.residue = floor_mod(m, n);
  r.ideal_expected = r.residue == 0;
  auto in_p = [&](std::int64_t z) { return floor_mod(z, n) == r.residue; };
  auto res = [&](std::int64_t z) { return floor_mod(z, n); };
  Rng rng(seed ^ (static_cast<std::uint64_t>(n) << 32) ^ static_cast<std::uint64_t>(m));
  std::int64_t const kmax = std::max<std::int64_t>(1, range / n);
  auto draw_p = [&] { return rng.between(-kmax, kmax) * n + r.residue; };

  // 0 lies outside P unless P = nZ, so x = 0 always decides the ideal test
  if (!in_p(0 * draw_p()))
    r.ideal_observed = false;
  for (std::size_t s = 0; s < samples; ++s) {
    std::int64_t const k = rng.between(-kmax, kmax);
    if (!in_p(k * n + m))
      r.translate_is_residue_class = false;
    std::int64_t const x = rng.between(-range, range), y = rng.between(-range, range),
                       z = rng.between(-range, range);
    std::int64_t const p = draw_p(), p2 = draw_p(), q = draw_p();
    if (!in_p(p - p2 + q))
      r.subheap = false;
    if (!in_p(x * p - x * q + q))
      r.lambda_closed = false;
    if (!in_p(p * x - q * x + q))
      r.rho_closed = false;
    if (!in_p(x * p) || !in_p(p * x))
      r.ideal_observed = false;
    if (res(x * y) != res(res(x) * res(y)))
      r.residue_map_multiplicative = false;
    if (res(x - y + z) != res(res(x) - res(y) + res(z)))
      r.residue_map_bracket = false;
    if (in_p(x - y + q) != (res(x) == res(y)))
      r.classes_are_residues = false;
  }
  return r;
}

/// Z_n with a . b = a + (-1)^a b (n even): a left brace that is not
/// two-sided for n = 6.
inline Brace sign_twisted_left_brace(std::size_t n)
{
  if (n < 2 || n % 2)
    throw std::invalid_argument("sign_twisted_left_brace: n must be even");
  FiniteGroup mul(Table::generate(n, n, [n](Index a, Index b) {
    return a % 2 == 0 ? (a + b) % n : (a + n - b) % n;
  }));
  return Brace(AbGroup::cyclic(n), std::move(mul), Sidedness::left);
}

} // namespace trusslab
