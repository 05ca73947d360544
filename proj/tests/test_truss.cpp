#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trusslab/catalog.hpp"
#include "trusslab/truss.hpp"

using namespace trusslab;

namespace {

oracle::T to_oracle(Truss const &t)
{
  auto g = retract(t.heap(), 0);
  oracle::T o;
  o.add = oracle::table(static_cast<int>(t.order()), [&](int a, int b) { return static_cast<int>(g.add(a, b)); });
  o.mul = oracle::table(static_cast<int>(t.order()), [&](int a, int b) { return static_cast<int>(t.mul(a, b)); });
  o.zero = 0;
  return o;
}

oracle::Set ints(IndexSet const &s) { return {s.begin(), s.end()}; }

TEST(Truss, Z4Basics)
{
  auto t = zn_truss(4);
  EXPECT_EQ(t.identity(), Index{1});
  EXPECT_EQ(t.absorber(), Index{0});
  EXPECT_TRUE(validate_truss(t).ok());
  EXPECT_TRUE(t.is_commutative());
}

TEST(Truss, LambdaExample)
{
  // lambda^1(2, 3) = [2*3, 2*1, 1] = 6 - 2 + 1 = 1 mod 4
  EXPECT_EQ(lambda_q(zn_truss(4), 2, 3, 1), 1u);
}

TEST(Truss, CorruptedEntryFailsWithWitness)
{
  auto t = zn_truss(4);
  auto mul = t.table();
  mul(2, 3) = 1;
  Truss bad(t.heap(), mul);
  auto r = validate_truss(bad);
  ASSERT_FALSE(r.ok());
  auto const *f = r.first_failure();
  ASSERT_FALSE(f->witness.empty());
  EXPECT_THROW(make_truss(t.heap(), mul), LawViolation);
}

TEST(Truss, LeftTrussSkipsRightDistributivity)
{
  auto b = sign_twisted_left_brace(6);
  Truss t(heap_from_group(b.additive()), b.multiplicative().table(), Sidedness::left);
  auto r = validate_truss(t);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.find("right-distributivity")->status, LawStatus::skipped);
  Truss two(t.heap(), t.table(), Sidedness::two_sided);
  EXPECT_FALSE(validate_truss(two).ok());
}

TEST(Truss, TwoAbsorbersRejected)
{
  // constant multiplication to 0 and to 1 cannot both hold; but a table with
  // x*y = x on Z_2 has no absorber, x*y = 0 has one
  Truss a(heap_from_group(AbGroup::cyclic(2)), Table(2, 2, 0));
  EXPECT_EQ(a.absorber_count(), 1u);
  Truss proj(heap_from_group(AbGroup::cyclic(2)), Table::generate(2, 2, [](Index x, Index) { return x; }));
  EXPECT_FALSE(proj.absorber().has_value());
  EXPECT_TRUE(validate_truss(proj).ok());
}

TEST(Truss, NonRingTrussHasNoAbsorber)
{
  auto t = za_truss(2, 4);
  EXPECT_FALSE(t.absorber().has_value());
  EXPECT_EQ(t.identity(), Index{0});
}

TEST(Paragon, EmptySubsetThrows)
{
  EXPECT_THROW(is_paragon(zn_truss(4), {}), std::invalid_argument);
}

TEST(Paragon, Z4UnitsAndIdeal)
{
  auto t = zn_truss(4);
  EXPECT_EQ(is_paragon(t, {1, 3}).kind, ParagonKind::two_sided);
  EXPECT_EQ(is_paragon(t, {0, 2}).kind, ParagonKind::ideal);
  EXPECT_EQ(is_paragon(t, {1, 2}).kind, ParagonKind::none);
}

TEST(Paragon, AgreesWithOracleOnAllSubsetsOfSmallTrusses)
{
  std::vector<Truss> ts = {zn_truss(4), zn_truss(6), za_truss(2, 4), za_truss(1, 6),
                           ring_truss(group_ring(zn_ring(2), cyclic_group(2)).ring)};
  for (auto const &t : ts) {
    auto const o = to_oracle(t);
    for (unsigned mask = 1; mask < (1u << t.order()); ++mask) {
      IndexSet s;
      for (Index x = 0; x < t.order(); ++x)
        if (mask >> x & 1u)
          s.push_back(x);
      auto kind = is_paragon(t, s).kind;
      auto expect = oracle::paragon_kind(o, ints(s));
      ASSERT_EQ(static_cast<int>(kind), static_cast<int>(expect)) << format_set(s);
    }
  }
}

TEST(Paragon, NormalParagonsInCommutativeTruss)
{
  auto t = zn_truss(6);
  EXPECT_TRUE(is_normal_paragon(t, IndexSet{0, 3}));
}

TEST(Quotient, Z4ByUnitsIsZ2)
{
  auto t = zn_truss(4);
  auto q = quotient_truss(t, IndexSet{1, 3});
  EXPECT_EQ(q.truss.order(), 2u);
  EXPECT_TRUE(find_truss_isomorphism(q.truss, zn_truss(2)).has_value());
  EXPECT_TRUE(check_truss_morphism(t, q.truss, q.projection).ok());
}

TEST(Quotient, ByWholeTrussIsTrivial)
{
  auto q = quotient_truss(zn_truss(5), full_set(5));
  EXPECT_EQ(q.truss.order(), 1u);
}

TEST(Quotient, RejectsNonParagonAndLeftTruss)
{
  EXPECT_THROW(quotient_truss(zn_truss(6), IndexSet{1, 5}), std::invalid_argument);
  auto b = sign_twisted_left_brace(4);
  Truss t(heap_from_group(b.additive()), b.multiplicative().table(), Sidedness::left);
  EXPECT_THROW(quotient_truss(t, full_set(4)), std::invalid_argument);
}

TEST(Quotient, MatchesOracleQuotient)
{
  auto t = zn_truss(8);
  IndexSet p{1, 3, 5, 7};
  auto q = quotient_truss(t, p);
  auto oq = oracle::quotient(to_oracle(t), ints(p));
  EXPECT_EQ(static_cast<int>(q.truss.order()), oq.t.n());
  EXPECT_TRUE(oracle::truss_isomorphic(to_oracle(q.truss), oq.t));
}

TEST(Isomorphism, FindsRelabelledZ6)
{
  auto t = zn_truss(6);
  IndexMap p = {3, 5, 0, 1, 4, 2};
  auto inv = inverse_map(p);
  auto add = Table::generate(6, 6, [&](Index a, Index b) { return p[(inv[a] + inv[b]) % 6]; });
  auto mul = Table::generate(6, 6, [&](Index a, Index b) { return p[(inv[a] * inv[b]) % 6]; });
  Truss u(heap_from_group(AbGroup(add, p[0])), mul);
  auto f = find_truss_isomorphism(t, u);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(is_truss_isomorphism(t, u, *f));
  // mn + m + n = (m + 1)(n + 1) - 1, so x -> x + 1 works
  EXPECT_TRUE(find_truss_isomorphism(t, za_truss(1, 6)).has_value());
  EXPECT_EQ(find_truss_isomorphism(t, za_truss(2, 6)).has_value(),
            oracle::truss_isomorphic(to_oracle(t), to_oracle(za_truss(2, 6))));
}

TEST(Isomorphism, AgreesWithOracleOnOrder4)
{
  std::vector<Truss> ts = {zn_truss(4), za_truss(2, 4), za_truss(1, 4),
                           ring_truss(group_ring(zn_ring(2), cyclic_group(2)).ring),
                           trunc_poly_truss(1, 2)};
  for (auto const &a : ts)
    for (auto const &b : ts)
      EXPECT_EQ(find_truss_isomorphism(a, b).has_value(),
                oracle::truss_isomorphic(to_oracle(a), to_oracle(b)));
}

TEST(Opposite, RejectsLeft)
{
  auto b = sign_twisted_left_brace(6);
  Truss t(heap_from_group(b.additive()), b.multiplicative().table(), Sidedness::left);
  EXPECT_THROW(opposite_truss(t), std::invalid_argument);
  EXPECT_EQ(opposite_truss(zn_truss(3)), zn_truss(3));
}

TEST(Units, Z4Report)
{
  auto r = units_paragon_report(zn_truss(4));
  EXPECT_EQ(r.unit_count, 2u);
  EXPECT_TRUE(r.is_paragon);
  EXPECT_TRUE(r.quotient_is_z2);
  EXPECT_TRUE(r.thm_z2_holds);
  EXPECT_EQ(r.char2_holds, true);
  EXPECT_TRUE(r.equivalence_holds());
}

TEST(Units, Z6Report)
{
  auto r = units_paragon_report(zn_truss(6));
  EXPECT_FALSE(r.is_paragon);
  EXPECT_FALSE(r.thm_z2_holds);
  EXPECT_FALSE(r.quotient_order.has_value());
}

TEST(Units, OddPrimeBreaksTheStatedEquivalence)
{
  // Z_3: every r has r or 1 - r a unit, yet [1, 2, 1] = 0 is not a unit
  auto r = units_paragon_report(zn_truss(3));
  EXPECT_TRUE(r.thm_z2_holds);
  EXPECT_FALSE(r.is_subheap);
  EXPECT_FALSE(r.equivalence_holds());
  EXPECT_TRUE(r.corrected_equivalence_holds());
}

TEST(Units, PowerOfTwoLawAgainstOracle)
{
  for (int n = 2; n <= 40; ++n) {
    auto t = zn_truss(n);
    EXPECT_EQ(ints(units(t)), oracle::zn_units(n));
    bool const oracle_paragon = oracle::paragon_kind(oracle::zn(n), oracle::zn_units(n)) != oracle::none;
    EXPECT_EQ(units_paragon_report(t).is_paragon, oracle_paragon) << n;
    EXPECT_EQ(oracle_paragon, (n & (n - 1)) == 0) << n;
  }
}

TEST(Units, OddMultiples)
{
  EXPECT_FALSE(odd_multiple_check(zn_truss(8)).failed());
  EXPECT_THROW(odd_multiple_check(zn_truss(6)), std::invalid_argument);
}

TEST(Units, RequiresUnitalRingType)
{
  EXPECT_THROW(units_paragon_report(za_truss(2, 4)), std::invalid_argument);
}

} // namespace
