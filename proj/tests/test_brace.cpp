#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trusslab/brace.hpp"
#include "trusslab/catalog.hpp"
#include "trusslab/extension.hpp"

using namespace trusslab;

namespace {

Brace za4() { return brace_from_truss(za_truss(2, 4)); }

Truss brace_example_truss()
{
  auto t = za_truss(2, 4);
  return extend(t, regular_module(t), 0).truss;
}

TEST(Brace, FromZa4)
{
  auto b = za4();
  EXPECT_EQ(b.order(), 4u);
  EXPECT_EQ(b.zero(), 0u);
  EXPECT_EQ(abelian_invariants(b.additive()), (std::vector<std::size_t>{4}));
  EXPECT_EQ(abelian_invariants(b.multiplicative()), (std::vector<std::size_t>{2, 2}));
}

TEST(Brace, SocleOfZa4)
{
  auto b = za4();
  EXPECT_EQ(socle(b), (IndexSet{0, 2}));
  auto r = verify_socle(b);
  EXPECT_TRUE(r.is_ideal);
  EXPECT_TRUE(r.cosets_are_paragons);
}

TEST(Brace, SocleByBruteForce)
{
  auto b = brace_from_truss(brace_example_truss());
  IndexSet expect;
  for (Index a = 0; a < b.order(); ++a) {
    bool ok = true;
    for (Index x = 0; x < b.order(); ++x)
      ok = ok && b.mul(a, x) == b.add(a, x);
    if (ok)
      expect.push_back(a);
  }
  EXPECT_EQ(socle(b), expect);
  EXPECT_TRUE(verify_socle(b).is_ideal);
}

TEST(Brace, NonBraceTypeTrussListsNonUnits)
{
  try {
    brace_from_truss(zn_truss(4));
    FAIL() << "expected an exception";
  } catch (std::invalid_argument const &e) {
    EXPECT_NE(std::string(e.what()).find("{0,2}"), std::string::npos) << e.what();
  }
}

TEST(Brace, TrivialBrace)
{
  Brace b(AbGroup::cyclic(5), cyclic_group(5));
  EXPECT_EQ(socle(b).size(), 5u);
  EXPECT_EQ(brace_ideals(b).size(), 2u);
}

TEST(Brace, RoundTripThroughTruss)
{
  auto b = za4();
  auto t = truss_from_brace(b);
  EXPECT_TRUE(validate_truss(t).ok());
  auto b2 = brace_from_truss(t);
  EXPECT_EQ(b2.additive().table(), b.additive().table());
  EXPECT_EQ(b2.multiplicative().table(), b.multiplicative().table());
}

TEST(Brace, LeftOnlyExample)
{
  auto b = sign_twisted_left_brace(6);
  EXPECT_EQ(b.sided(), Sidedness::left);
  EXPECT_THROW(Brace(b.additive(), b.multiplicative(), Sidedness::two_sided), LawViolation);
  EXPECT_THROW(sign_twisted_left_brace(5), std::invalid_argument);
}

TEST(Brace, IdealEquivalencesExhaustiveOnOrder4)
{
  auto b = za4();
  auto ideals = brace_ideals(b);
  auto t = truss_from_brace(b);
  for (unsigned mask = 1; mask < 16u; ++mask) {
    IndexSet s;
    for (Index x = 0; x < 4; ++x)
      if (mask >> x & 1u)
        s.push_back(x);
    auto r = ideal_iff_normal_paragon(b, s, ideals);
    EXPECT_TRUE(r.ideal_equivalence_holds()) << format_set(s);
    EXPECT_TRUE(r.quotient_equivalence_holds()) << format_set(s);
    // ideal by definition, independently of brace_ideals
    bool normal = is_normal_subgroup(b.multiplicative(), s);
    bool closed = true;
    for (Index x = 0; x < 4; ++x)
      for (Index a : s)
        closed = closed && contains(s, b.sub(b.mul(x, a), x));
    EXPECT_EQ(r.is_ideal, normal && closed);
  }
}

TEST(Brace, UnitsOfZ8FormBrace)
{
  auto b = units_brace(zn_truss(8));
  EXPECT_EQ(b.order(), 4u);
  EXPECT_EQ(b.labels(), (std::vector<std::string>{"1", "3", "5", "7"}));
}

TEST(Brace, UnitsOfZ6AreNotSubheap)
{
  EXPECT_THROW(units_brace(zn_truss(6)), LawViolation);
}

TEST(Brace, EmptySubsetRejected)
{
  EXPECT_THROW(is_brace_ideal(za4(), {}), std::invalid_argument);
}

} // namespace
