#include <gtest/gtest.h>

#include "oracles.hpp"
#include "trusslab/group.hpp"

using namespace trusslab;

namespace {

oracle::Tab tab(FiniteGroup const &g)
{
  oracle::Tab t(g.order(), std::vector<int>(g.order()));
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b)
      t[a][b] = static_cast<int>(g.mul(a, b));
  return t;
}

std::vector<int> ints(std::vector<std::size_t> const &v) { return {v.begin(), v.end()}; }

TEST(FiniteGroup, RejectsNonAssociative)
{
  // a loop that is not a group
  std::vector<std::vector<Index>> rows = {
    {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_FALSE(FiniteGroup::validate(Table::from_rows(rows)).ok());
  EXPECT_THROW(FiniteGroup(Table::from_rows(rows)), LawViolation);
}

TEST(FiniteGroup, DihedralBasics)
{
  auto d8 = dihedral_group(8);
  EXPECT_FALSE(d8.is_abelian());
  EXPECT_EQ(center(d8).size(), 2u);
  EXPECT_EQ(derived_subgroup(d8).size(), 2u);
  EXPECT_EQ(oracle::group_isomorphic(tab(d8), oracle::dihedral(8)), true);
}

TEST(FiniteGroup, QuaternionIsNotDihedral)
{
  auto q = quaternion_group();
  EXPECT_FALSE(is_isomorphic(q, dihedral_group(8)).has_value());
  EXPECT_FALSE(oracle::group_isomorphic(tab(q), oracle::dihedral(8)));
  EXPECT_EQ(fingerprint(q).order_profile.at(4), 6u);
}

TEST(AbelianInvariants, TrivialGroupIsEmpty)
{
  EXPECT_TRUE(abelian_invariants(cyclic_group(1)).empty());
  EXPECT_EQ(abelian_name({}), "C1");
}

TEST(AbelianInvariants, MatchOracle)
{
  std::vector<std::vector<std::size_t>> cases = {{12}, {2, 6}, {2, 2, 2}, {4, 4}, {2, 4}, {3, 3}, {2, 8}};
  for (auto const &c : cases) {
    auto g = abelian_group(c);
    auto inv = abelian_invariants(g);
    EXPECT_EQ(ints(inv), oracle::abelian_invariants(tab(g)));
  }
}

TEST(AbelianInvariants, CoprimeFactorsMerge)
{
  EXPECT_EQ(abelian_invariants(direct_product(cyclic_group(2), cyclic_group(3))),
            (std::vector<std::size_t>{6}));
  EXPECT_EQ(abelian_invariants(abelian_group({2, 2, 3})), (std::vector<std::size_t>{2, 6}));
}

TEST(Isomorphism, AgreesWithBruteForceOnOrder8)
{
  std::vector<FiniteGroup> gs = {cyclic_group(8), abelian_group({2, 4}), abelian_group({2, 2, 2}),
                                 dihedral_group(8), quaternion_group()};
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = 0; j < gs.size(); ++j) {
      auto f = is_isomorphic(gs[i], gs[j]);
      EXPECT_EQ(f.has_value(), oracle::group_isomorphic(tab(gs[i]), tab(gs[j]))) << i << "," << j;
      if (f) {
        EXPECT_TRUE(is_group_isomorphism(gs[i], gs[j], *f));
      }
    }
}

TEST(Isomorphism, RelabelledD8xC2)
{
  auto g = named_group("D8xC2");
  // conjugate the table by a fixed permutation
  std::vector<Index> p(16);
  for (Index i = 0; i < 16; ++i)
    p[i] = (i * 5 + 3) % 16;
  auto inv = inverse_map(p);
  auto h = FiniteGroup(Table::generate(16, 16, [&](Index a, Index b) { return p[g.mul(inv[a], inv[b])]; }));
  auto f = is_isomorphic(h, g);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(is_group_isomorphism(h, g, *f));
  EXPECT_EQ(identify(h).named_match, "D8xC2");
}

TEST(Isomorphism, NodeLimitThrows)
{
  auto g = abelian_group({2, 2, 2, 2});
  EXPECT_THROW(for_each_isomorphism(g, g, [](IndexMap const &) { return false; }, 10),
               SearchLimitExceeded);
}

TEST(Isomorphism, CountsAutomorphismsOfC2xC2)
{
  auto g = abelian_group({2, 2});
  std::size_t count = 0;
  for_each_isomorphism(g, g, [&](IndexMap const &) {
    ++count;
    return false;
  });
  EXPECT_EQ(count, 6u);
}

TEST(Fingerprint, D8xC2Profile)
{
  auto fp = fingerprint(named_group("D8xC2"));
  EXPECT_EQ(fp.order, 16u);
  EXPECT_EQ(fp.order_profile, (std::map<std::size_t, std::size_t>{{1, 1}, {2, 11}, {4, 4}}));
  EXPECT_EQ(fp.center_size, 4u);
  auto prof = oracle::order_profile(tab(named_group("D8xC2")));
  EXPECT_EQ(prof, (std::map<int, int>{{1, 1}, {2, 11}, {4, 4}}));
}

TEST(Identify, NamesAbelianAndDihedral)
{
  EXPECT_EQ(identify(abelian_group({4, 4})).named_match, "C4xC4");
  EXPECT_EQ(identify(dihedral_group(6)).named_match, "D6");
  EXPECT_EQ(identify(quaternion_group()).named_match, "Q8");
  EXPECT_EQ(identify(direct_product(quaternion_group(), cyclic_group(2))).named_match, "Q8xC2");
}

TEST(Subgroups, CountsForSmallGroups)
{
  EXPECT_EQ(all_subgroups(cyclic_group(12)).size(), 6u);
  EXPECT_EQ(all_subgroups(dihedral_group(8)).size(), 10u);
  EXPECT_EQ(all_subgroups(abelian_group({2, 2})).size(), 5u);
}

TEST(Subgroups, QuotientOfC6ByC3)
{
  auto g = cyclic_group(6);
  auto q = quotient_group(g, generated_subgroup(g, {2}));
  EXPECT_EQ(q.group.order(), 2u);
  EXPECT_THROW(quotient_group(dihedral_group(6), {0, 3}), std::invalid_argument);
}

TEST(NamedGroup, RejectsUnknownAndBadArity)
{
  EXPECT_THROW(named_group("monster"), std::invalid_argument);
  EXPECT_THROW(named_group("cyclic"), std::invalid_argument);
}

} // namespace
