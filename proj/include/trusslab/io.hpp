#pragma once

/**
 * @file io.hpp
 * @brief JSON interchange for groups, heaps, trusses, modules, braces,
 * extensions and identification reports.
 *
 * Readers check shape and ranges only; law checking is left to the
 * validators so that a broken table can still be reported law by law.
 */

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "abgroup.hpp"
#include "brace.hpp"
#include "core.hpp"
#include "extension.hpp"
#include "group.hpp"
#include "heap.hpp"
#include "tmodule.hpp"
#include "truss.hpp"

namespace trusslab {

using Json = nlohmann::ordered_json;

/// Malformed JSON text; `offset` is the byte at which parsing stopped.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string const &what, std::size_t offset)
    : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

inline Json parse_json(std::string const &text, std::string const &source = "input")
{
  try {
    return Json::parse(text);
  } catch (nlohmann::json::parse_error const &e) {
    std::ostringstream os;
    os << source << ": parse error at byte " << e.byte << ": " << e.what();
    throw ParseError(os.str(), e.byte);
  }
}

inline Json load_json_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

namespace io_detail {

[[noreturn]] inline void fail(std::string const &where, std::string const &what)
{
  throw std::invalid_argument(where + ": " + what);
}

inline Json const &field(Json const &j, char const *key, std::string const &where)
{
  if (!j.is_object())
    fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

inline Index index_value(Json const &j, std::string const &where)
{
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    fail(where, "expected a non-negative integer");
  return j.get<Index>();
}

inline Table table(Json const &j, std::size_t rows, std::size_t cols, std::size_t bound,
                   std::string const &where)
{
  if (!j.is_array() || j.size() != rows)
    fail(where, "expected " + std::to_string(rows) + " rows");
  std::vector<Index> data;
  data.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto const &row = j[r];
    if (!row.is_array() || row.size() != cols)
      fail(where, "row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) {
      Index v = index_value(row[c], where);
      if (v >= bound)
        fail(where, "entry (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
      data.push_back(v);
    }
  }
  return Table(rows, cols, std::move(data));
}

inline std::size_t order(Json const &j, std::string const &where)
{
  std::size_t n = index_value(field(j, "order", where), where + ".order");
  if (n == 0)
    fail(where, "order must be positive");
  return n;
}

inline std::vector<std::string> labels(Json const &j, std::size_t n, std::string const &where)
{
  auto it = j.find("labels");
  if (it == j.end())
    return {};
  if (!it->is_array() || it->size() != n)
    fail(where, "labels must list " + std::to_string(n) + " strings");
  std::vector<std::string> out;
  for (auto const &l : *it) {
    if (!l.is_string())
      fail(where, "labels must be strings");
    out.push_back(l.get<std::string>());
  }
  return out;
}

inline std::string kind(Json const &j, std::string const &where)
{
  auto const &k = field(j, "kind", where);
  if (!k.is_string())
    fail(where, "\"kind\" must be a string");
  return k.get<std::string>();
}

inline Json table_json(Table const &t) { return t.to_rows(); }

} // namespace io_detail

/// Unvalidated additive data of an "abgroup" or "heap" object.
struct RawGroup {
  Table add;
  Index zero = 0;
  std::vector<std::string> labels;
};

inline RawGroup raw_abgroup_from_json(Json const &j, std::string const &where = "abgroup")
{
  auto const k = io_detail::kind(j, where);
  if (k != "abgroup" && k != "heap")
    io_detail::fail(where, "expected kind abgroup or heap, got " + k);
  std::size_t const n = io_detail::order(j, where);
  RawGroup g;
  g.add = io_detail::table(io_detail::field(j, "add", where), n, n, n, where + ".add");
  g.zero = io_detail::index_value(io_detail::field(j, "zero", where), where + ".zero");
  if (g.zero >= n)
    io_detail::fail(where, "zero out of range");
  g.labels = io_detail::labels(j, n, where);
  return g;
}

inline AbGroup abgroup_from_json(Json const &j, std::string const &where = "abgroup")
{
  auto g = raw_abgroup_from_json(j, where);
  return AbGroup(std::move(g.add), g.zero, std::move(g.labels));
}

inline Heap heap_from_json(Json const &j, std::string const &where = "heap")
{
  return Heap(abgroup_from_json(j, where));
}

inline Json to_json(AbGroup const &g, char const *kind = "abgroup")
{
  Json j;
  j["kind"] = kind;
  j["order"] = g.order();
  j["add"] = io_detail::table_json(g.table());
  j["zero"] = g.zero();
  j["labels"] = g.labels();
  return j;
}

inline Json to_json(Heap const &h)
{
  h.require_element("heap output");
  return to_json(h.group(), "heap");
}

/// A "truss" object, shape-checked only. Stated identity and absorber are
/// ignored here; see stated_element().
inline Truss truss_from_json(Json const &j, std::string const &where = "truss")
{
  auto const k = io_detail::kind(j, where);
  if (k != "truss")
    io_detail::fail(where, "expected kind truss, got " + k);
  std::size_t const n = io_detail::order(j, where);
  auto heap = heap_from_json(io_detail::field(j, "heap", where), where + ".heap");
  if (heap.order() != n)
    io_detail::fail(where, "heap order differs from truss order");
  auto mul = io_detail::table(io_detail::field(j, "mul", where), n, n, n, where + ".mul");
  Sidedness sided = Sidedness::two_sided;
  if (auto it = j.find("sided"); it != j.end()) {
    if (!it->is_string())
      io_detail::fail(where, "\"sided\" must be a string");
    sided = sidedness_from_string(it->get<std::string>());
  }
  return Truss(std::move(heap), std::move(mul), sided);
}

/// Identity or absorber stated in a "truss" object, if any.
inline std::optional<Index> stated_element(Json const &j, char const *key)
{
  auto it = j.find(key);
  if (it == j.end() || it->is_null())
    return std::nullopt;
  return io_detail::index_value(*it, std::string("truss.") + key);
}

inline Json to_json(Truss const &t)
{
  Json j;
  j["kind"] = "truss";
  j["order"] = t.order();
  j["heap"] = to_json(t.heap());
  j["mul"] = io_detail::table_json(t.table());
  j["sided"] = to_string(t.sided());
  if (t.identity())
    j["identity"] = *t.identity();
  if (t.absorber())
    j["absorber"] = *t.absorber();
  return j;
}

inline TModule tmodule_from_json(Json const &j, std::string const &where = "tmodule")
{
  auto const k = io_detail::kind(j, where);
  if (k != "tmodule")
    io_detail::fail(where, "expected kind tmodule, got " + k);
  auto t = truss_from_json(io_detail::field(j, "truss", where), where + ".truss");
  auto h = heap_from_json(io_detail::field(j, "heap", where), where + ".heap");
  auto act = io_detail::table(io_detail::field(j, "action", where), t.order(), h.order(), h.order(),
                              where + ".action");
  return TModule(std::move(t), std::move(h), std::move(act));
}

inline Json to_json(TModule const &m)
{
  Json j;
  j["kind"] = "tmodule";
  j["truss"] = to_json(m.truss());
  j["heap"] = to_json(m.heap());
  j["action"] = io_detail::table_json(m.table());
  return j;
}

struct RawBrace {
  RawGroup add;
  Table mul;
  Sidedness sided = Sidedness::two_sided;
};

inline RawBrace raw_brace_from_json(Json const &j, std::string const &where = "brace")
{
  auto const k = io_detail::kind(j, where);
  if (k != "brace")
    io_detail::fail(where, "expected kind brace, got " + k);
  std::size_t const n = io_detail::order(j, where);
  RawBrace b;
  b.add.add = io_detail::table(io_detail::field(j, "add", where), n, n, n, where + ".add");
  b.add.zero = 0;
  if (auto it = j.find("zero"); it != j.end())
    b.add.zero = io_detail::index_value(*it, where + ".zero");
  else
    for (Index z = 0; z < n; ++z) {
      bool ok = true;
      for (Index a = 0; a < n && ok; ++a)
        ok = b.add.add(z, a) == a;
      if (ok) {
        b.add.zero = z;
        break;
      }
    }
  if (b.add.zero >= n)
    io_detail::fail(where, "zero out of range");
  b.add.labels = io_detail::labels(j, n, where);
  b.mul = io_detail::table(io_detail::field(j, "mul", where), n, n, n, where + ".mul");
  if (auto it = j.find("sided"); it != j.end())
    b.sided = sidedness_from_string(it->get<std::string>());
  return b;
}

inline Brace brace_from_json(Json const &j, std::string const &where = "brace")
{
  auto b = raw_brace_from_json(j, where);
  auto labels = b.add.labels;
  return Brace(AbGroup(std::move(b.add.add), b.add.zero, std::move(b.add.labels)),
               FiniteGroup(std::move(b.mul), std::move(labels)), b.sided);
}

inline Json to_json(Brace const &b)
{
  Json j;
  j["kind"] = "brace";
  j["order"] = b.order();
  j["add"] = io_detail::table_json(b.additive().table());
  j["mul"] = io_detail::table_json(b.multiplicative().table());
  j["sided"] = to_string(b.sided());
  j["zero"] = b.zero();
  j["labels"] = b.labels();
  return j;
}

inline Table raw_group_from_json(Json const &j, std::string const &where = "group")
{
  auto const k = io_detail::kind(j, where);
  if (k != "group")
    io_detail::fail(where, "expected kind group, got " + k);
  std::size_t const n = io_detail::order(j, where);
  return io_detail::table(io_detail::field(j, "mul", where), n, n, n, where + ".mul");
}

inline FiniteGroup group_from_json(Json const &j, std::string const &where = "group")
{
  std::size_t const n = io_detail::order(j, where);
  return FiniteGroup(raw_group_from_json(j, where), io_detail::labels(j, n, where));
}

inline Json to_json(FiniteGroup const &g)
{
  Json j;
  j["kind"] = "group";
  j["order"] = g.order();
  j["mul"] = io_detail::table_json(g.table());
  j["labels"] = g.labels();
  return j;
}

inline Json to_json(ExtTruss const &e)
{
  Json j = to_json(e.truss);
  j["extension"] = {{"base", to_json(e.base)},
                    {"module", to_json(e.module)},
                    {"anchor", e.anchor},
                    {"pairing", "row-major"}};
  return j;
}

inline Json to_json(GroupFingerprint const &fp)
{
  Json profile = Json::object();
  for (auto const &[ord, count] : fp.order_profile)
    profile[std::to_string(ord)] = count;
  return {{"order", fp.order},
          {"order_profile", profile},
          {"center_size", fp.center_size},
          {"derived_order", fp.derived_order},
          {"abelianization", fp.abelianization}};
}

inline Json to_json(Identification const &id)
{
  Json j;
  j["fingerprint"] = to_json(id.fingerprint);
  j["named_match"] = id.named_match ? Json(*id.named_match) : Json(nullptr);
  return j;
}

inline Json to_json(LawResult const &r)
{
  Json j;
  j["law"] = r.law;
  j["status"] = r.status == LawStatus::pass ? "pass" : r.status == LawStatus::fail ? "fail" : "skipped";
  if (!r.witness.empty())
    j["witness"] = r.witness;
  if (!r.note.empty())
    j["note"] = r.note;
  return j;
}

} // namespace trusslab
