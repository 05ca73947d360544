#pragma once

/**
 * @file cli.hpp
 * @brief Reports and the commands behind trussctl.
 *
 * Every command returns a Report: the echoed command line, the seed, the
 * structures it built and a list of claims. A run succeeds iff no claim
 * failed. Report output never includes timing, so it is byte-identical for
 * the same inputs and seed.
 */

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "brace.hpp"
#include "catalog.hpp"
#include "core.hpp"
#include "extension.hpp"
#include "group.hpp"
#include "io.hpp"
#include "tmodule.hpp"
#include "truss.hpp"

namespace trusslab {

struct Options {
  std::uint64_t seed = 0;
  std::size_t samples = 10000;

  CheckPolicy policy() const
  {
    CheckPolicy p;
    p.samples = samples;
    p.seed = seed;
    return p;
  }
};

struct Claim {
  std::string name;
  LawStatus status = LawStatus::pass;
  std::vector<Index> witness;
  std::string detail;
};

struct Report {
  std::string command;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<std::pair<std::string, std::string>> summaries;
  Json structures = Json::object();
  std::vector<std::string> lines; // extra rows for table output
  std::vector<Claim> claims;
  double elapsed_ms = 0; // not part of the report output

  void summary(std::string key, std::string text) { summaries.emplace_back(std::move(key), std::move(text)); }

  void claim(std::string name, bool pass, std::string detail = {}, std::vector<Index> witness = {})
  {
    claims.push_back({std::move(name), pass ? LawStatus::pass : LawStatus::fail, std::move(witness),
                      std::move(detail)});
  }

  void law(LawResult const &r, std::string const &prefix = {})
  {
    claims.push_back({prefix + r.law, r.status, r.witness, r.note});
  }

  void laws(LawReport const &r, std::string const &prefix = {})
  {
    for (auto const &l : r.laws)
      law(l, prefix);
  }

  bool ok() const
  {
    for (auto const &c : claims)
      if (c.status == LawStatus::fail)
        return false;
    return true;
  }

  std::size_t failed_count() const
  {
    std::size_t k = 0;
    for (auto const &c : claims)
      k += c.status == LawStatus::fail;
    return k;
  }

  Json failures() const
  {
    Json out = Json::array();
    for (auto const &c : claims)
      if (c.status == LawStatus::fail)
        out.push_back(claim_json(c));
    return out;
  }

  static Json claim_json(Claim const &c)
  {
    Json j;
    j["claim"] = c.name;
    j["status"] = c.status == LawStatus::pass ? "pass" : c.status == LawStatus::fail ? "fail" : "skipped";
    if (!c.witness.empty())
      j["witness"] = c.witness;
    if (!c.detail.empty())
      j["detail"] = c.detail;
    return j;
  }

  Json to_json() const
  {
    Json j;
    j["command"] = command;
    j["seed"] = seed;
    j["samples"] = samples;
    Json s = Json::object();
    for (auto const &[k, v] : summaries)
      s[k] = v;
    j["summaries"] = s;
    j["structures"] = structures;
    Json cs = Json::array();
    for (auto const &c : claims)
      cs.push_back(claim_json(c));
    j["claims"] = cs;
    j["ok"] = ok();
    j["failures"] = failures();
    return j;
  }

  std::string to_table() const
  {
    std::ostringstream os;
    os << "command: " << command << '\n' << "seed: " << seed << "  samples: " << samples << '\n';
    for (auto const &[k, v] : summaries)
      os << k << ": " << v << '\n';
    for (auto const &l : lines)
      os << l << '\n';
    for (auto const &c : claims) {
      os << (c.status == LawStatus::pass ? "PASS " : c.status == LawStatus::fail ? "FAIL " : "SKIP ")
         << c.name;
      if (!c.witness.empty()) {
        os << "  witness (";
        for (std::size_t i = 0; i < c.witness.size(); ++i)
          os << (i ? "," : "") << c.witness[i];
        os << ')';
      }
      if (!c.detail.empty())
        os << "  [" << c.detail << ']';
      os << '\n';
    }
    os << "result: " << (ok() ? "pass" : "FAIL") << " (" << claims.size() << " claims, "
       << failed_count() << " failed)\n";
    if (!ok())
      os << "failures: " << failures().dump() << '\n';
    return os.str();
  }
};

namespace cli_detail {

inline std::string join(std::vector<std::size_t> const &v, char const *sep = ",")
{
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

inline std::string describe(Truss const &t)
{
  std::string s = "order " + std::to_string(t.order()) + ", " + to_string(t.sided());
  s += t.identity() ? ", identity " + t.label(*t.identity()) : ", no identity";
  s += t.absorber() ? ", absorber " + t.label(*t.absorber()) : ", no absorber";
  return s;
}

inline bool brace_type(Truss const &t)
{
  return t.identity() && units(t).size() == t.order();
}

/// Validates the heap of a truss object law by law; nullopt if it failed.
inline std::optional<Truss> checked_truss(Json const &j, Report &rep, std::string const &prefix)
{
  auto const raw = raw_abgroup_from_json(io_detail::field(j, "heap", "truss"), "truss.heap");
  auto const heap_laws = AbGroup::validate(raw.add, raw.zero);
  if (!heap_laws.ok()) {
    rep.laws(heap_laws, prefix + "heap.");
    return std::nullopt;
  }
  auto t = truss_from_json(j);
  rep.laws(validate_truss(t), prefix);
  for (char const *key : {"identity", "absorber"})
    if (auto stated = stated_element(j, key)) {
      auto const actual = std::string(key) == "identity" ? t.identity() : t.absorber();
      rep.claim(prefix + "stated-" + key, actual == stated,
                actual ? "table gives " + std::to_string(*actual) : "table has none");
    }
  return t;
}

inline Truss require_truss(Json const &j)
{
  auto t = truss_from_json(j);
  throw_if_failed(validate_truss(t));
  return t;
}

inline void add_identification(Report &rep, std::string const &key, FiniteGroup const &g)
{
  auto const id = identify(g);
  rep.structures[key] = to_json(id);
  rep.summary(key, "order " + std::to_string(g.order()) + ", " +
                       (id.named_match ? *id.named_match : std::string("no named match")));
}

} // namespace cli_detail

/// Resolves "a,b,c": each token is a label of `labels` if it is one,
/// otherwise a decimal index below `n`.
inline IndexSet parse_subset(std::string const &text, std::size_t n,
                             std::vector<std::string> const &labels)
{
  IndexSet s;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto const b = tok.find_first_not_of(' '), e = tok.find_last_not_of(' ');
    if (b == std::string::npos)
      throw std::invalid_argument("empty subset element in \"" + text + "\"");
    tok = tok.substr(b, e - b + 1);
    auto it = std::find(labels.begin(), labels.end(), tok);
    if (it != labels.end()) {
      s.push_back(static_cast<Index>(it - labels.begin()));
      continue;
    }
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("unknown element \"" + tok + "\"");
    Index const i = std::stoul(tok);
    if (i >= n)
      throw std::invalid_argument("index " + tok + " out of range");
    s.push_back(i);
  }
  return normalized(std::move(s));
}

/// Law-by-law validation of an abgroup, heap, group, truss, tmodule or
/// brace object.
inline Report cmd_validate(Json const &j, Options const &opt = {})
{
  Report rep;
  rep.seed = opt.seed;
  rep.samples = opt.samples;
  auto const kind = io_detail::kind(j, "input");
  rep.summary("kind", kind);
  if (kind == "abgroup" || kind == "heap") {
    auto const raw = raw_abgroup_from_json(j);
    rep.laws(AbGroup::validate(raw.add, raw.zero));
    rep.summary(kind, "order " + std::to_string(raw.add.rows()));
  } else if (kind == "group") {
    auto const mul = raw_group_from_json(j);
    auto const laws = FiniteGroup::validate(mul);
    rep.laws(laws);
    if (laws.ok())
      cli_detail::add_identification(rep, "identification", group_from_json(j));
  } else if (kind == "truss") {
    if (auto t = cli_detail::checked_truss(j, rep, ""))
      rep.summary("truss", cli_detail::describe(*t));
  } else if (kind == "tmodule") {
    auto const t = cli_detail::checked_truss(io_detail::field(j, "truss", "tmodule"), rep, "truss.");
    if (t) {
      auto const raw = raw_abgroup_from_json(io_detail::field(j, "heap", "tmodule"), "tmodule.heap");
      auto const heap_laws = AbGroup::validate(raw.add, raw.zero);
      if (!heap_laws.ok()) {
        rep.laws(heap_laws, "heap.");
      } else {
        auto const m = tmodule_from_json(j);
        rep.laws(validate_module(m));
        rep.summary("module", "order " + std::to_string(m.order()) + " over a truss of order " +
                                  std::to_string(t->order()) + (m.is_unital() ? ", unital" : ", not unital"));
      }
    }
  } else if (kind == "brace") {
    auto raw = raw_brace_from_json(j);
    auto const add_laws = AbGroup::validate(raw.add.add, raw.add.zero);
    auto const mul_laws = FiniteGroup::validate(raw.mul);
    rep.laws(add_laws, "additive.");
    rep.laws(mul_laws, "multiplicative.");
    if (add_laws.ok() && mul_laws.ok()) {
      AbGroup add(raw.add.add, raw.add.zero);
      FiniteGroup mul(raw.mul);
      rep.laws(Brace::validate(add, mul, raw.sided));
      rep.summary("brace", "order " + std::to_string(add.order()) + ", " + to_string(raw.sided));
    }
  } else {
    throw std::invalid_argument("validate: unsupported kind " + kind);
  }
  return rep;
}

/// Units of T(Z_n) as a paragon for n = 2..n_max.
inline Report cmd_scan_units(std::size_t n_max, Options const &opt = {})
{
  if (n_max < 2 || n_max > 64)
    throw std::invalid_argument("scan-units: n_max must lie in 2..64");
  Report rep;
  rep.seed = opt.seed;
  rep.samples = opt.samples;
  Json rows = Json::array();
  rep.lines.push_back("   n  units  paragon  quotient  r|1-r");
  for (std::size_t n = 2; n <= n_max; ++n) {
    auto const r = units_paragon_report(zn_truss(n));
    bool const pow2 = (n & (n - 1)) == 0;
    rows.push_back({{"n", n},
                    {"units", r.unit_count},
                    {"paragon", r.is_paragon},
                    {"quotient_order", r.quotient_order ? Json(*r.quotient_order) : Json(nullptr)},
                    {"quotient_is_z2", r.quotient_is_z2},
                    {"unit_or_complement", r.thm_z2_holds}});
    std::ostringstream os;
    os.width(4);
    os << n;
    os << "  ";
    os.width(5);
    os << r.unit_count << "  " << (r.is_paragon ? "yes    " : "no     ") << "  ";
    os.width(8);
    os << (r.quotient_order ? std::to_string(*r.quotient_order) : "-") << "  "
       << (r.thm_z2_holds ? "yes" : "no");
    rep.lines.push_back(os.str());
    rep.claim("n=" + std::to_string(n) + ": units paragon iff n is a power of 2",
              r.is_paragon == pow2);
  }
  rep.structures["scan"] = rows;
  return rep;
}

/// T[M;e] with every clause check; `module` null means the regular module.
inline Report cmd_extend(Json const &base_json, Json const *module_json, Index e, Options const &opt = {})
{
  Report rep;
  rep.seed = opt.seed;
  rep.samples = opt.samples;
  auto const base = cli_detail::require_truss(base_json);
  auto const module = module_json ? tmodule_from_json(*module_json) : regular_module(base);
  if (!(module.truss() == base))
    throw std::invalid_argument("extend: module is not over the given base truss");
  if (e >= module.order())
    throw std::invalid_argument("extend: anchor out of range");
  auto const ext = extend(base, module, e);
  rep.summary("base", cli_detail::describe(base));
  rep.summary("module", "order " + std::to_string(module.order()) +
                            (module.is_unital() ? ", unital" : ", not unital"));
  rep.summary("extension", cli_detail::describe(ext.truss));
  rep.claim("extension is a " + std::string(ext.truss.is_left() ? "left " : "") + "truss", true);

  for (Index e2 = 0; e2 < module.order(); ++e2) {
    bool ok = true;
    std::string detail;
    try {
      theta_iso(ext, e2);
    } catch (InvariantBroken const &err) {
      ok = false;
      detail = err.what();
    }
    rep.claim("theta " + std::to_string(e) + "->" + std::to_string(e2) + " is an isomorphism", ok,
              detail);
  }
  for (Index a = 0; a < base.order(); ++a) {
    std::string const tag = "fibre a=" + std::to_string(a) + ": ";
    auto const f = fiber_paragon(ext, a);
    rep.claim(tag + "paragon", true, to_string(f.paragon.kind));
    rep.claim(tag + "ideal iff a is an absorber", f.ideal_iff_absorber());
    if (f.quotient_map)
      rep.claim(tag + "quotient isomorphic to base", f.quotient_iso_base);
    rep.laws(split_sequence_check(ext, a), "split a=" + std::to_string(a) + ": ");
  }
  auto const bs = base_subtruss(ext);
  rep.claim("base copy is a sub-truss", bs.is_subtruss);
  rep.claim("base copy is a left paragon", is_left_closed(bs.kind), to_string(bs.kind));
  rep.claim("regular quotient by base copy isomorphic to module", bs.quotient_iso_module);
  auto const rt = ring_type_check(ext);
  rep.claim("ring-type iff trivial module over ring-type base", rt.holds());
  rep.claim("unital iff base and module unital", ext_unitality_check(ext));
  if (base.identity() && module.is_unital()) {
    auto const u = ext_units(ext);
    rep.claim("units are U(T) x M", u.product_law);
    rep.claim("unit inverse formula", u.inverse_formula);
  }
  rep.structures["extension"] = to_json(ext);
  if (!ext.truss.is_left() && cli_detail::brace_type(ext.truss)) {
    auto const b = brace_from_truss(ext.truss);
    rep.structures["brace"] = to_json(b);
    cli_detail::add_identification(rep, "unit_group", b.multiplicative());
    auto const inv = abelian_invariants(b.additive());
    rep.structures["additive_invariants"] = inv;
    rep.summary("additive_invariants", "[" + cli_detail::join(inv) + "] (" + abelian_name(inv) + ")");
  }
  return rep;
}

/// T/P for a subset P given as indices or labels.
inline Report cmd_quotient(Json const &truss_json, std::string const &subset, Options const &opt = {})
{
  Report rep;
  rep.seed = opt.seed;
  rep.samples = opt.samples;
  auto const t = cli_detail::require_truss(truss_json);
  auto const p = parse_subset(subset, t.order(), t.labels());
  if (p.empty())
    throw std::invalid_argument("quotient: empty subset");
  rep.summary("truss", cli_detail::describe(t));
  rep.summary("subset", format_set(p, &t.labels()));
  auto const check = is_paragon(t, p);
  rep.summary("kind", to_string(check.kind));
  rep.claim("subset is a two-sided paragon", is_two_sided(check.kind), to_string(check.kind));
  if (!is_two_sided(check.kind) || t.is_left())
    return rep;
  auto const q = quotient_truss(t, p);
  auto const morph = check_truss_morphism(t, q.truss, q.projection);
  rep.claim("projection is a truss epimorphism", morph.ok(), morph.ok() ? "" : morph.describe());
  Json classes = Json::array();
  for (auto const &c : q.classes)
    classes.push_back(c);
  rep.structures["quotient"] = to_json(q.truss);
  rep.structures["classes"] = classes;
  rep.summary("quotient", cli_detail::describe(q.truss));
  Json match = nullptr;
  std::size_t const k = q.truss.order();
  if (find_truss_isomorphism(q.truss, zn_truss(k)))
    match = "T(Z_" + std::to_string(k) + ")";
  else if (k == 2 && find_truss_isomorphism(q.truss, ring_truss(zero_ring_z2())))
    match = "T(Z_2 with zero product)";
  rep.structures["named_match"] = match;
  rep.summary("named_match", match.is_null() ? "none" : match.get<std::string>());
  return rep;
}

/// Brace of a brace object or of a brace-type truss: socle, ideals and the
/// ideal / normal-paragon equivalences on ideals and their cosets.
inline Report cmd_brace(Json const &j, Options const &opt = {})
{
  Report rep;
  rep.seed = opt.seed;
  rep.samples = opt.samples;
  auto const kind = io_detail::kind(j, "input");
  Brace const b = kind == "truss" ? brace_from_truss(cli_detail::require_truss(j)) : brace_from_json(j);
  rep.laws(Brace::validate(b.additive(), b.multiplicative(), b.sided()));
  rep.summary("brace", "order " + std::to_string(b.order()) + ", " + to_string(b.sided()));
  auto const soc = verify_socle(b);
  rep.summary("socle", format_set(soc.socle, &b.labels()));
  rep.claim("socle is a brace ideal", soc.is_ideal);
  rep.claim("socle cosets are paragons", soc.cosets_are_paragons);
  auto const ideals = brace_ideals(b);
  Json ideals_json = Json::array();
  for (auto const &i : ideals)
    ideals_json.push_back(i);
  rep.summary("ideals", std::to_string(ideals.size()));
  if (b.sided() == Sidedness::two_sided) {
    for (auto const &ideal : ideals) {
      auto const r = ideal_iff_normal_paragon(b, ideal, ideals);
      rep.claim("ideal " + format_set(ideal, &b.labels()) + " is a normal paragon containing 0",
                r.is_ideal && r.ideal_equivalence_holds());
      for (auto const &c : additive_cosets(b, ideal)) {
        auto const rc = ideal_iff_normal_paragon(b, c, ideals);
        if (!rc.quotient_equivalence_holds() || !rc.normal_paragon)
          rep.claim("coset " + format_set(c, &b.labels()) + " is a normal paragon", false);
      }
    }
  }
  rep.structures["brace"] = to_json(b);
  rep.structures["socle"] = soc.socle;
  rep.structures["ideals"] = ideals_json;
  cli_detail::add_identification(rep, "multiplicative_group", b.multiplicative());
  auto const inv = abelian_invariants(b.additive());
  rep.structures["additive_invariants"] = inv;
  rep.summary("additive_invariants", "[" + cli_detail::join(inv) + "]");
  return rep;
}

/// Identification of a group, of the multiplicative group of a brace, or
/// of the unit group of a unital truss.
inline Report cmd_identify(Json const &j, Options const &opt = {})
{
  Report rep;
  rep.seed = opt.seed;
  rep.samples = opt.samples;
  auto const kind = io_detail::kind(j, "input");
  FiniteGroup g;
  if (kind == "group") {
    auto const laws = FiniteGroup::validate(raw_group_from_json(j));
    rep.laws(laws, "group.");
    if (!laws.ok())
      return rep;
    g = group_from_json(j);
  } else if (kind == "brace") {
    g = brace_from_json(j).multiplicative();
  } else if (kind == "truss") {
    auto const t = cli_detail::require_truss(j);
    if (!t.identity())
      throw std::invalid_argument("identify: truss has no identity");
    g = units_brace(t).multiplicative();
  } else {
    throw std::invalid_argument("identify: unsupported kind " + kind);
  }
  cli_detail::add_identification(rep, "identification", g);
  if (g.is_abelian())
    rep.structures["abelian_invariants"] = abelian_invariants(g);
  return rep;
}

namespace cli_detail {

inline std::vector<std::size_t> numbers(std::vector<std::string> const &params, std::size_t from,
                                        char const *what)
{
  std::vector<std::size_t> out;
  for (std::size_t i = from; i < params.size(); ++i) {
    auto const &p = params[i];
    if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument(std::string(what) + ": expected a number, got \"" + p + "\"");
    out.push_back(std::stoul(p));
  }
  return out;
}

inline void expect_count(std::vector<std::size_t> const &v, std::size_t k, char const *usage)
{
  if (v.size() != k)
    throw std::invalid_argument(std::string("usage: catalog ") + usage);
}

inline AbGroup abelian_abgroup(std::vector<std::size_t> const &invariants)
{
  AbGroup g;
  for (auto d : invariants)
    g = g.order() == 1 ? AbGroup::cyclic(d) : AbGroup::product(g, AbGroup::cyclic(d));
  return g;
}

} // namespace cli_detail

/**
 * Catalog families:
 *   zn <n> | za <a> <N> | group-ring <m> <group> [params] |
 *   trunc-poly <k> <n> | end <d1> [d2 ...]
 */
inline Report cmd_catalog(std::string const &family, std::vector<std::string> const &params,
                          Options const &opt = {})
{
  using namespace cli_detail;
  Report rep;
  rep.seed = opt.seed;
  rep.samples = opt.samples;
  rep.summary("family", family);
  if (family == "zn") {
    auto const v = numbers(params, 0, "zn");
    expect_count(v, 1, "zn <n>");
    auto const t = zn_truss(v[0]);
    rep.laws(validate_truss(t));
    rep.summary("truss", describe(t));
    if (v[0] >= 2) {
      auto const r = units_paragon_report(t);
      bool const pow2 = (v[0] & (v[0] - 1)) == 0;
      rep.claim("units paragon iff n is a power of 2", r.is_paragon == pow2);
      rep.summary("units", std::to_string(r.unit_count) + (r.is_paragon ? ", paragon" : ", not a paragon") +
                             (r.thm_z2_holds ? ", r or 1-r always a unit" : ""));
    }
    rep.structures["truss"] = to_json(t);
  } else if (family == "za") {
    auto const v = numbers(params, 0, "za");
    expect_count(v, 2, "za <a> <N>");
    auto const t = za_truss(static_cast<std::int64_t>(v[0]), static_cast<std::int64_t>(v[1]), opt.policy());
    rep.claim("NZ is an induced submodule, product well defined (sampled)", true);
    rep.laws(validate_truss(t));
    rep.summary("truss", describe(t));
    if (brace_type(t)) {
      auto const b = brace_from_truss(t);
      add_identification(rep, "multiplicative_group", b.multiplicative());
      rep.structures["multiplicative_invariants"] = abelian_invariants(b.multiplicative());
      if (t.order() > 1)
        rep.summary("order_of_1", std::to_string(b.multiplicative().element_order(1)));
    }
    rep.structures["truss"] = to_json(t);
  } else if (family == "group-ring") {
    if (params.size() < 2)
      throw std::invalid_argument("usage: catalog group-ring <m> <group> [params]");
    auto const m = numbers({params[0]}, 0, "group-ring");
    auto const g = named_group(params[1], numbers(params, 2, "group-ring"));
    auto const gr = group_ring(zn_ring(m[0]), g);
    auto const t = ring_truss(gr.ring);
    rep.summary("truss", describe(t));
    auto const r = verify_group_ring(gr);
    rep.claim("augmentation is a surjective ring map with equal fibres",
              r.augmentation_is_ring_map && r.fibers_equal_size);
    for (auto const &f : r.fibers) {
      std::string const tag = "A_" + gr.coefficients.add.label(f.r) + ": ";
      rep.claim(tag + "paragon", f.is_paragon);
      rep.claim(tag + "sub-truss iff r idempotent", f.is_subtruss == f.r_idempotent,
                f.is_subtruss ? "sub-truss" : "not a sub-truss");
      rep.claim(tag + "quotient isomorphic to T(R)", f.quotient_iso_base);
    }
    rep.structures["truss"] = to_json(t);
  } else if (family == "trunc-poly") {
    auto const v = numbers(params, 0, "trunc-poly");
    expect_count(v, 2, "trunc-poly <k> <n>");
    auto const tp = trunc_poly_ring(v[0], v[1]);
    auto const t = ring_truss(tp.ring);
    rep.summary("truss", describe(t));
    auto const u = units(t);
    std::vector<Index> literal_bad, series_bad;
    for (Index p : u) {
      if (tp.ring.times(closed_form_inverse(tp, p), p) != *tp.ring.one)
        literal_bad.push_back(p);
      if (tp.ring.times(trunc_poly_inverse(tp, p), p) != *tp.ring.one)
        series_bad.push_back(p);
    }
    auto first = [](std::vector<Index> const &bad) {
      return bad.empty() ? std::vector<Index>{} : std::vector<Index>{bad.front()};
    };
    rep.claim("geometric series inverts every unit", series_bad.empty(), "", first(series_bad));
    rep.claim("alpha^-1 - alpha^-2(q + ... + q^(n-1)) inverts every unit", literal_bad.empty(),
              literal_bad.empty() ? ""
                                  : std::to_string(literal_bad.size()) + " of " + std::to_string(u.size()) +
                                        " units fail, first " + t.label(literal_bad.front()),
              first(literal_bad));
    auto const r = units_paragon_report(t);
    rep.claim("paragon with quotient T(Z_2) iff r or 1-r is a unit", r.equivalence_holds());
    rep.structures["truss"] = to_json(t);
  } else if (family == "end") {
    auto const v = numbers(params, 0, "end");
    if (v.empty())
      throw std::invalid_argument("usage: catalog end <d1> [d2 ...]");
    auto const et = end_truss(abelian_abgroup(v));
    rep.summary("endomorphisms", std::to_string(et.endomorphisms.size()));
    rep.summary("extension", describe(et.extension.truss));
    rep.claim("product is (ff', g + f(g'))", et.matches_end_mult);
    rep.claim("unital iff base and module unital", ext_unitality_check(et.extension));
    rep.structures["extension"] = to_json(et.extension);
  } else {
    throw std::invalid_argument("unknown catalog family: " + family +
                                " (zn, za, group-ring, trunc-poly, end)");
  }
  return rep;
}

} // namespace trusslab
