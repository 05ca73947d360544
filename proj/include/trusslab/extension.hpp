#pragma once

/**
 * @file extension.hpp
 * @brief The extension truss T[M;e] of a truss by a left module, its
 * isomorphisms between anchors, the module structure of M over it, its
 * fibre paragons, base sub-truss, split sequence and unit group.
 *
 * Carrier pairs (t, x) are stored at index t * |M| + x.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "heap.hpp"
#include "tmodule.hpp"
#include "truss.hpp"

namespace trusslab {

struct ExtTruss {
  Truss base;
  TModule module;
  Index anchor = 0;
  Truss truss;

  std::size_t module_order() const { return module.order(); }
  Index pair(Index t, Index x) const { return t * module.order() + x; }
  Index first(Index i) const { return i / module.order(); }
  Index second(Index i) const { return i % module.order(); }
};

/// (t,x)(t',x') = (tt', [x, t.e, t.x']).
inline Table extension_product(Truss const &base, TModule const &module, Index e)
{
  std::size_t const m = module.order();
  std::size_t const n = base.order() * m;
  return Table::generate(n, n, [&](Index i, Index j) {
    Index const t = i / m, x = i % m, t2 = j / m, x2 = j % m;
    return base.mul(t, t2) * m + module.bracket(x, module.act(t, e), module.act(t, x2));
  });
}

/**
 * Builds T[M;e] and validates it as a truss (left truss when the base is
 * left). The module must act on `base` and satisfy the module laws.
 */
inline ExtTruss extend(Truss const &base, TModule const &module, Index e)
{
  if (!(module.truss() == base))
    throw std::invalid_argument("extend: module is not over the base truss");
  if (e >= module.order())
    throw std::out_of_range("extend: anchor out of range");
  throw_if_failed(validate_module(module));
  Truss t(product_heap(base.heap(), module.heap()), extension_product(base, module, e),
          base.sided());
  if (auto r = validate_truss(t); !r.ok())
    throw InvariantBroken("extension fails truss law: " + r.first_failure()->describe());
  return {base, module, e, std::move(t)};
}

/// (t, x) -> (t, [x, e, e2]), checked to be a truss isomorphism
/// T[M;e] -> T[M;e2].
inline IndexMap theta_iso(ExtTruss const &ext, Index e2)
{
  auto const target = extend(ext.base, ext.module, e2);
  IndexMap f(ext.truss.order());
  for (Index i = 0; i < f.size(); ++i)
    f[i] = ext.pair(ext.first(i), ext.module.bracket(ext.second(i), ext.anchor, e2));
  if (!is_truss_isomorphism(ext.truss, target.truss, f))
    throw InvariantBroken("theta is not a truss isomorphism");
  return f;
}

/// (t, x) . x' = [x, t.e, t.x'].
inline Index ext_action(ExtTruss const &ext, Index tx, Index x2)
{
  Index const t = ext.first(tx), x = ext.second(tx);
  return ext.module.bracket(x, ext.module.act(t, ext.anchor), ext.module.act(t, x2));
}

/// M as a left module over T[M;e].
inline TModule ext_module(ExtTruss const &ext)
{
  TModule m(ext.truss, ext.module.heap(),
            Table::generate(ext.truss.order(), ext.module.order(),
                            [&](Index i, Index x) { return ext_action(ext, i, x); }));
  if (auto r = validate_module(m); !r.ok())
    throw InvariantBroken("M is not a module over the extension: " + r.first_failure()->describe());
  return m;
}

struct FiberParagon {
  Paragon paragon;
  bool is_ideal = false;
  bool base_point_is_absorber = false;
  /// class -> first coordinate; present for two-sided extensions
  std::optional<IndexMap> quotient_map;
  bool quotient_iso_base = false;

  bool ideal_iff_absorber() const { return is_ideal == base_point_is_absorber; }
};

/// M_a = {a} x M: a paragon with T[M;e]/M_a isomorphic to T.
inline FiberParagon fiber_paragon(ExtTruss const &ext, Index a)
{
  if (a >= ext.base.order())
    throw std::out_of_range("fiber_paragon: base element out of range");
  IndexSet members;
  for (Index x = 0; x < ext.module_order(); ++x)
    members.push_back(ext.pair(a, x));
  auto const check = is_paragon(ext.truss, members);
  bool const expected = ext.truss.is_left() ? is_left_closed(check.kind) : is_two_sided(check.kind);
  if (!expected)
    throw InvariantBroken("fibre {a} x M is not a paragon (" + to_string(check.kind) + ")");

  FiberParagon out;
  out.paragon = *check.paragon(members);
  out.is_ideal = check.kind == ParagonKind::ideal;
  out.base_point_is_absorber = true;
  for (Index t = 0; t < ext.base.order() && out.base_point_is_absorber; ++t)
    out.base_point_is_absorber = ext.base.mul(t, a) == a && ext.base.mul(a, t) == a;

  if (!ext.truss.is_left()) {
    auto q = quotient_truss(ext.truss, members);
    IndexMap f(q.classes.size());
    for (Index c = 0; c < f.size(); ++c)
      f[c] = ext.first(q.classes[c].front());
    out.quotient_iso_base = is_truss_isomorphism(q.truss, ext.base, f);
    out.quotient_map = std::move(f);
  }
  return out;
}

struct BaseSubtruss {
  IndexSet members;
  ParagonKind kind = ParagonKind::none;
  bool is_subtruss = false;
  /// class -> second coordinate
  IndexMap quotient_map;
  bool quotient_iso_module = false;
};

/**
 * T_e = T x {e}: a sub-truss and left paragon. The quotient of the regular
 * left module of T[M;e] by T_e is compared with M (with the extension
 * action) through class -> second coordinate.
 */
inline BaseSubtruss base_subtruss(ExtTruss const &ext)
{
  BaseSubtruss out;
  for (Index t = 0; t < ext.base.order(); ++t)
    out.members.push_back(ext.pair(t, ext.anchor));
  out.kind = is_paragon(ext.truss, out.members).kind;
  out.is_subtruss = is_subtruss(ext.truss, out.members);

  auto const q = quotient_module(regular_module(ext.truss), out.members);
  auto const target = ext_module(ext);
  out.quotient_map.resize(q.classes.size());
  for (Index c = 0; c < q.classes.size(); ++c)
    out.quotient_map[c] = ext.second(q.classes[c].front());
  out.quotient_iso_module = is_bijection(out.quotient_map, target.order()) &&
                            check_module_morphism(q.module, target, out.quotient_map).ok();
  return out;
}

/**
 * The sequence M -> T[M;e] <-> T with iota_a(x) = (a, x), j(t) = (t, e) and
 * pi(t, x) = t: iota_a is a heap embedding, j a truss monomorphism split by
 * the epimorphism pi, and the kernel relation of pi is the sub-heap relation
 * of the image of iota_a.
 */
inline LawReport split_sequence_check(ExtTruss const &ext, Index a)
{
  LawReport report;
  std::size_t const n = ext.base.order(), m = ext.module_order();
  if (a >= n)
    throw std::out_of_range("split_sequence_check: base element out of range");

  IndexMap iota(m), j(n), pi(n * m);
  for (Index x = 0; x < m; ++x)
    iota[x] = ext.pair(a, x);
  for (Index t = 0; t < n; ++t)
    j[t] = ext.pair(t, ext.anchor);
  for (Index i = 0; i < n * m; ++i)
    pi[i] = ext.first(i);

  auto injective = [](IndexMap const &f) { return normalized(f).size() == f.size(); };

  auto iota_r = check_affine_map(ext.module.heap(), ext.truss.heap(), iota, "iota-heap-embedding");
  if (!iota_r.failed() && !injective(iota))
    iota_r = law_fail("iota-heap-embedding", {}, "not injective");
  report.add(iota_r);

  auto j_r = check_truss_morphism(ext.base, ext.truss, j);
  report.add(j_r.ok() && injective(j) ? law_pass("j-truss-monomorphism")
                                      : law_fail("j-truss-monomorphism", {}, j_r.describe()));

  auto pi_r = check_truss_morphism(ext.truss, ext.base, pi);
  report.add(pi_r.ok() && normalized(pi).size() == n
               ? law_pass("pi-truss-epimorphism")
               : law_fail("pi-truss-epimorphism", {}, pi_r.describe()));

  report.add([&]() -> LawResult {
    for (Index t = 0; t < n; ++t)
      if (pi[j[t]] != t)
        return law_fail("pi-after-j-identity", {t});
    return law_pass("pi-after-j-identity");
  }());

  report.add([&]() -> LawResult {
    auto const classes = subheap_relation_classes(ext.truss.heap(), normalized(iota));
    auto const rel = class_map(classes, n * m);
    for (Index x = 0; x < n * m; ++x)
      for (Index y = 0; y < n * m; ++y)
        if ((rel[x] == rel[y]) != (pi[x] == pi[y]))
          return law_fail("kernel-relation", {x, y});
    return law_pass("kernel-relation");
  }());
  return report;
}

struct RingTypeCheck {
  bool ext_ring_type = false;
  bool module_trivial = false;
  bool base_ring_type = false;

  /// T[M;e] ring-type <=> M = {e} and T ring-type
  bool holds() const { return ext_ring_type == (module_trivial && base_ring_type); }
};

inline RingTypeCheck ring_type_check(ExtTruss const &ext)
{
  return {ext.truss.absorber().has_value(), ext.module_order() == 1,
          ext.base.absorber().has_value()};
}

/// T[M;e] unital <=> T unital and M unital, with identity (1, e).
inline bool ext_unitality_check(ExtTruss const &ext)
{
  bool const expected = ext.base.identity().has_value() && ext.module.is_unital();
  if (ext.truss.identity().has_value() != expected)
    return false;
  return !expected || *ext.truss.identity() == ext.pair(*ext.base.identity(), ext.anchor);
}

struct ExtUnits {
  IndexSet units;
  bool product_law = false;      // units == U(T) x M
  bool inverse_formula = false;  // (u^-1, [e, u^-1.m, u^-1.e]) inverts (u, m)
};

inline ExtUnits ext_units(ExtTruss const &ext)
{
  if (!ext.base.identity() || !ext.module.is_unital())
    throw std::invalid_argument("ext_units: base and module must be unital");
  if (!ext_unitality_check(ext))
    throw InvariantBroken("extension unitality does not match base and module");
  ExtUnits out;
  out.units = units(ext.truss);
  auto const base_units = units(ext.base);
  IndexSet expected;
  for (Index u : base_units)
    for (Index x = 0; x < ext.module_order(); ++x)
      expected.push_back(ext.pair(u, x));
  out.product_law = normalized(expected) == out.units;

  Index const one = *ext.truss.identity(), base_one = *ext.base.identity();
  Index const e = ext.anchor;
  out.inverse_formula = true;
  for (Index u : base_units) {
    Index uinv = u;
    for (Index v : base_units)
      if (ext.base.mul(u, v) == base_one && ext.base.mul(v, u) == base_one)
        uinv = v;
    for (Index x = 0; x < ext.module_order(); ++x) {
      Index const y = ext.module.bracket(e, ext.module.act(uinv, x), ext.module.act(uinv, e));
      Index const a = ext.pair(u, x), b = ext.pair(uinv, y);
      if (ext.truss.mul(a, b) != one || ext.truss.mul(b, a) != one)
        out.inverse_formula = false;
    }
  }
  return out;
}

/**
 * Extends T[M;e] once more by M (with the extension action) and searches for
 * an isomorphism with T[M x M; (e, e)].
 */
inline std::optional<IndexMap> iterated_extension_isomorphism(ExtTruss const &ext)
{
  auto const twice = extend(ext.truss, ext_module(ext), ext.anchor);
  auto const pm = product_module(ext.module, ext.module);
  auto const direct = extend(ext.base, pm, ext.anchor * ext.module_order() + ext.anchor);
  return find_truss_isomorphism(twice.truss, direct.truss);
}

} // namespace trusslab
