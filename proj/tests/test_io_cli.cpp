#include <gtest/gtest.h>

#include "trusslab/cli.hpp"

using namespace trusslab;

namespace {

Json z4_json() { return to_json(zn_truss(4)); }

Claim const *find_claim(Report const &r, std::string const &name)
{
  for (auto const &c : r.claims)
    if (c.name == name)
      return &c;
  return nullptr;
}

TEST(Io, TrussRoundTrip)
{
  auto t = za_truss(2, 8);
  auto back = truss_from_json(to_json(t));
  EXPECT_EQ(back, t);
  EXPECT_EQ(back.labels(), t.labels());
}

TEST(Io, ModuleBraceGroupRoundTrip)
{
  auto m = regular_module(zn_truss(3));
  EXPECT_EQ(tmodule_from_json(to_json(m)), m);
  auto b = brace_from_truss(za_truss(2, 4));
  EXPECT_EQ(brace_from_json(to_json(b)), b);
  auto g = named_group("D8xC2");
  EXPECT_EQ(group_from_json(to_json(g)).table(), g.table());
}

TEST(Io, ParseErrorCarriesOffset)
{
  try {
    parse_json("{\"kind\": \"truss\", \"order\": }");
    FAIL();
  } catch (ParseError const &e) {
    EXPECT_EQ(e.offset(), 28u);
  }
}

TEST(Io, SchemaErrors)
{
  auto j = z4_json();
  j["mul"][1] = Json::array({1, 2});
  EXPECT_THROW(truss_from_json(j), std::invalid_argument);
  auto k = z4_json();
  k["mul"][0][0] = 9;
  EXPECT_THROW(truss_from_json(k), std::invalid_argument);
  auto s = z4_json();
  s["sided"] = "sideways";
  EXPECT_THROW(truss_from_json(s), std::invalid_argument);
  EXPECT_THROW(truss_from_json(Json{{"kind", "heap"}}), std::invalid_argument);
}

TEST(Io, ExtensionJson)
{
  auto t = zn_truss(2);
  auto j = to_json(extend(t, regular_module(t), 1));
  EXPECT_EQ(j["kind"], "truss");
  EXPECT_EQ(j["extension"]["anchor"], 1);
  EXPECT_EQ(j["extension"]["pairing"], "row-major");
}

TEST(Cli, ValidateZ4Passes)
{
  auto r = cmd_validate(z4_json());
  EXPECT_TRUE(r.ok());
}

TEST(Cli, ValidateCorruptedEntryFails)
{
  auto j = z4_json();
  j["mul"][2][3] = 1;
  auto r = cmd_validate(j);
  EXPECT_FALSE(r.ok());
  ASSERT_FALSE(r.failures().empty());
  EXPECT_TRUE(r.failures()[0].contains("witness"));
}

TEST(Cli, ValidateLeftTrussNotesSkip)
{
  auto b = sign_twisted_left_brace(6);
  Truss t(heap_from_group(b.additive()), b.multiplicative().table(), Sidedness::left);
  auto r = cmd_validate(to_json(t));
  EXPECT_TRUE(r.ok());
  auto const *c = find_claim(r, "right-distributivity");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, LawStatus::skipped);
}

TEST(Cli, ValidateBrokenHeapReportsHeapLaws)
{
  auto j = z4_json();
  j["heap"]["add"][1][1] = 3;
  auto r = cmd_validate(j);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failures()[0]["claim"].get<std::string>().rfind("heap.", 0), 0u);
}

TEST(Cli, ScanUnits)
{
  auto r = cmd_scan_units(16);
  EXPECT_TRUE(r.ok());
  std::vector<std::size_t> paragons;
  for (auto const &row : r.structures["scan"])
    if (row["paragon"].get<bool>())
      paragons.push_back(row["n"].get<std::size_t>());
  EXPECT_EQ(paragons, (std::vector<std::size_t>{2, 4, 8, 16}));
  EXPECT_THROW(cmd_scan_units(65), std::invalid_argument);
}

TEST(Cli, ExtendBraceExample)
{
  auto base = to_json(za_truss(2, 4));
  auto r = cmd_extend(base, nullptr, 0);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.structures["unit_group"]["named_match"], "D8xC2");
  EXPECT_EQ(r.structures["additive_invariants"], Json::array({4, 4}));
}

TEST(Cli, ExtendWithModuleFile)
{
  auto t = zn_truss(2);
  auto m = to_json(trivial_module(t, heap_from_group(AbGroup::cyclic(3))));
  auto r = cmd_extend(to_json(t), &m, 2);
  EXPECT_TRUE(r.ok()) << r.to_table();
  EXPECT_THROW(cmd_extend(to_json(zn_truss(3)), &m, 0), std::invalid_argument);
}

TEST(Cli, QuotientByLabelsAndIndices)
{
  auto r = cmd_quotient(z4_json(), "1,3");
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.structures["named_match"], "T(Z_2)");
  auto all = cmd_quotient(z4_json(), "0,1,2,3");
  EXPECT_EQ(all.structures["quotient"]["order"], 1);
  auto gr = group_ring(zn_ring(2), cyclic_group(2));
  auto q = cmd_quotient(to_json(ring_truss(gr.ring)), "g,1");
  EXPECT_TRUE(q.ok());
  EXPECT_EQ(q.structures["named_match"], "T(Z_2)");
  auto bad = cmd_quotient(z4_json(), "1,2");
  EXPECT_FALSE(bad.ok());
  EXPECT_THROW(cmd_quotient(z4_json(), "1,x"), std::invalid_argument);
}

TEST(Cli, BraceAndIdentify)
{
  auto r = cmd_brace(to_json(za_truss(2, 4)));
  EXPECT_TRUE(r.ok()) << r.to_table();
  EXPECT_EQ(r.structures["socle"], Json::array({0, 2}));
  auto id = cmd_identify(to_json(named_group("D8xC2")));
  EXPECT_EQ(id.structures["identification"]["named_match"], "D8xC2");
}

TEST(Cli, CatalogFamilies)
{
  EXPECT_TRUE(cmd_catalog("zn", {"8"}).ok());
  EXPECT_TRUE(cmd_catalog("za", {"2", "8"}).ok());
  EXPECT_TRUE(cmd_catalog("group-ring", {"3", "cyclic", "2"}).ok());
  EXPECT_TRUE(cmd_catalog("trunc-poly", {"1", "4"}).ok());
  EXPECT_FALSE(cmd_catalog("trunc-poly", {"2", "3"}).ok());
  EXPECT_TRUE(cmd_catalog("end", {"4"}).ok());
  EXPECT_THROW(cmd_catalog("nope", {}), std::invalid_argument);
  EXPECT_THROW(cmd_catalog("zn", {"x"}), std::invalid_argument);
}

TEST(Cli, ReportsAreDeterministic)
{
  Options o;
  o.seed = 42;
  o.samples = 300;
  auto a = cmd_catalog("za", {"3", "9"}, o).to_json().dump();
  auto b = cmd_catalog("za", {"3", "9"}, o).to_json().dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(cmd_scan_units(32).to_table(), cmd_scan_units(32).to_table());
}

} // namespace
