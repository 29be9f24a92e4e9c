#include "cliquerich/clubs.hpp"

#include <gtest/gtest.h>

#include "cliquerich/fixtures.hpp"
#include "test_support.hpp"

using namespace cliquerich;

// --- rich club -------------------------------------------------------------

TEST(RichClub, Fig1Golden) {
  auto report = rich_club(fixtures::fig1_G(), 4);
  EXPECT_EQ(report.members, (std::vector<int>{1, 3, 5}));
  ASSERT_TRUE(report.coefficient.has_value());
  EXPECT_DOUBLE_EQ(*report.coefficient, 0.0);

  auto prime = rich_club(fixtures::fig1_Gprime(), 4);
  EXPECT_EQ(prime.members, (std::vector<int>{1, 3, 5}));
  ASSERT_TRUE(prime.coefficient.has_value());
  EXPECT_NEAR(*prime.coefficient, 1.0 / 3.0, 1e-12);

  auto doubleprime = rich_club(fixtures::fig1_Gdoubleprime(), 4);
  ASSERT_TRUE(doubleprime.coefficient.has_value());
  EXPECT_DOUBLE_EQ(*doubleprime.coefficient, 1.0);
}

TEST(RichClub, EmptyAndTinyClubsAreUndefinedNotZero) {
  Graph g = Graph::complete(4);
  auto none = rich_club(g, 10);
  EXPECT_TRUE(none.members.empty());
  EXPECT_FALSE(none.coefficient.has_value());

  Graph star = Graph::from_edge_list("0 1\n0 2\n0 3");
  auto single = rich_club(star, 2); // only the center passes
  EXPECT_EQ(single.members, (std::vector<int>{0}));
  EXPECT_FALSE(single.coefficient.has_value());
}

TEST(RichClub, CompleteGraphsAreAlwaysFullyDense) {
  for (int n : {3, 5, 8})
    for (int j = 0; j < n - 1; ++j) {
      auto report = rich_club(Graph::complete(n), j);
      ASSERT_TRUE(report.coefficient.has_value());
      EXPECT_DOUBLE_EQ(*report.coefficient, 1.0);
    }
}

TEST(RichClub, MembershipMonotoneInThreshold) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = testsupport::random_graph(seed, 14, 0.4);
    std::vector<int> previous;
    for (int j = 0; j <= 13; ++j) {
      auto members = rich_club(g, j).members;
      if (j > 0)
        EXPECT_TRUE(std::includes(previous.begin(), previous.end(),
                                  members.begin(), members.end()));
      previous = members;
    }
  }
}

// --- super rich club ---------------------------------------------------------

TEST(SuperRichClub, Fig2Golden) {
  Graph g = fixtures::fig2();
  auto table = exact_census(g, 3);
  auto report = super_rich_club(g, 3, 2, table);
  EXPECT_EQ(report.members, (std::vector<int>{1, 2, 3, 4, 6, 7, 8, 9}));
  ASSERT_TRUE(report.coefficient.has_value());
  EXPECT_DOUBLE_EQ(*report.coefficient, 12.0 / 28.0);
  // club edges carry the triangle participation as weight
  for (const auto& e : report.member_edges) EXPECT_GT(e.weight, 0.0);
  EXPECT_EQ(report.member_edges.size(), 12u);
}

TEST(SuperRichClub, KTwoCoincidesWithRichClub) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = testsupport::random_graph(seed, 12, 0.4);
    auto table = exact_census(g, 2);
    for (int j = 0; j <= 11; ++j) {
      auto rc = rich_club(g, j);
      auto sc = super_rich_club(g, 2, j, table);
      EXPECT_EQ(rc.members, sc.members);
      EXPECT_EQ(rc.coefficient.has_value(), sc.coefficient.has_value());
      if (rc.coefficient)
        EXPECT_DOUBLE_EQ(*rc.coefficient, *sc.coefficient);
    }
  }
}

TEST(SuperRichClub, EmptyClubUndefined) {
  Graph g = Graph::complete(4);
  auto table = exact_census(g, 3);
  auto report = super_rich_club(g, 3, 1000, table);
  EXPECT_TRUE(report.members.empty());
  EXPECT_FALSE(report.coefficient.has_value());
}

TEST(SuperRichClub, RejectsForeignTable) {
  Graph g = Graph::complete(5);
  Graph other = Graph::complete(6);
  auto table = exact_census(other, 3);
  EXPECT_THROW(super_rich_club(g, 3, 1, table), Error);
  auto own = exact_census(g, 3);
  EXPECT_THROW(super_rich_club(g, 4, 1, own), Error); // k mismatch
}

TEST(SuperRichClub, AcceptsPseudoTables) {
  Graph g = fixtures::fig6_top();
  auto table = pseudo_census(g, 5, 200.0);
  auto report = super_rich_club(g, 5, 0, table);
  EXPECT_EQ(report.members.size(), 5u); // all five participate in the one pseudo-K5
}

// --- weighted participation coefficient ------------------------------------

TEST(WeightedParticipation, WholeGraphIsOne) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = testsupport::random_weighted_graph(seed, 10, 0.5);
    if (g.edge_count() == 0) continue;
    std::vector<int> all(g.order());
    for (int v = 0; v < g.order(); ++v) all[v] = v;
    auto c = weighted_participation_coefficient(g, all, 0.0);
    ASSERT_TRUE(c.has_value());
    EXPECT_DOUBLE_EQ(*c, 1.0);
  }
}

TEST(WeightedParticipation, EmptyMembersYieldZero) {
  Graph g = fixtures::fig6_top();
  auto c = weighted_participation_coefficient(g, std::vector<int>{}, 0.0);
  ASSERT_TRUE(c.has_value());
  EXPECT_DOUBLE_EQ(*c, 0.0);
}

TEST(WeightedParticipation, Fig6TopSubset) {
  Graph g = fixtures::fig6_top();
  auto c = weighted_participation_coefficient(g, std::vector<int>{0, 3, 4}, 0.0);
  ASSERT_TRUE(c.has_value());
  EXPECT_DOUBLE_EQ(*c, (1000.0 + 300.0 + 225.0) / 2245.0);
}

TEST(WeightedParticipation, UndefinedWhenCutoffEatsEverything) {
  Graph g = fixtures::fig6_top();
  std::vector<int> members{0, 3};
  EXPECT_FALSE(weighted_participation_coefficient(g, members, 1e6).has_value());
  EXPECT_THROW(weighted_participation_coefficient(g, std::vector<int>{9}, 0.0), Error);
}

TEST(WeightedParticipation, ScaleInvariantWhenCutoffScalesAlong) {
  Graph g = fixtures::fig6_bottom();
  std::vector<int> members{1, 2, 3};
  auto base = weighted_participation_coefficient(g, members, 50.0);
  std::vector<WeightedEdge> scaled;
  for (auto e : g.edges()) scaled.push_back({e.u, e.v, e.weight * 7.0});
  Graph g7(g.order(), std::move(scaled));
  auto seven = weighted_participation_coefficient(g7, members, 350.0);
  ASSERT_TRUE(base && seven);
  EXPECT_NEAR(*base, *seven, 1e-12);
}

// --- edge club ---------------------------------------------------------------

TEST(EdgeClub, CompleteGraphCoefficientIsOne) {
  Graph g = Graph::complete(4);
  auto table = exact_census(g, 3);
  auto report = edge_club(g, 3, 1, table);
  EXPECT_EQ(report.member_edges.size(), 6u);
  ASSERT_TRUE(report.coefficient.has_value());
  EXPECT_DOUBLE_EQ(*report.coefficient, 1.0);
}

TEST(EdgeClub, Fig3Golden) {
  Graph g = fixtures::fig3();
  auto table = exact_census(g, 3);
  auto report = edge_club(g, 3, 2, table);
  ASSERT_EQ(report.member_edges.size(), 2u);
  EXPECT_EQ(report.members, (std::vector<int>{0, 1, 2, 4})); // u1,u2,u3,u5
  ASSERT_TRUE(report.coefficient.has_value());
  // 6 selected participations over 3 * (8 triangles), oracle-checked total
  EXPECT_DOUBLE_EQ(*report.coefficient,
                   6.0 / (3.0 * static_cast<double>(
                                    brute_force_census(g, 3, CensusMode::exact).total)));
}

TEST(EdgeClub, UndefinedWithoutAnyClique) {
  Graph path = Graph::from_edge_list("0 1\n1 2");
  auto table = exact_census(path, 3);
  auto report = edge_club(path, 3, 0, table);
  EXPECT_TRUE(report.member_edges.empty());
  EXPECT_FALSE(report.coefficient.has_value());
}

TEST(EdgeClub, RequiresExactTable) {
  Graph g = Graph::complete(5);
  auto pseudo = pseudo_census(g, 3, 0.5);
  EXPECT_THROW(edge_club(g, 3, 1, pseudo), Error);
}

TEST(EdgeClub, CoefficientNeverExceedsOne) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    Graph g = testsupport::random_graph(seed, 12, 0.5);
    auto table = exact_census(g, 3);
    if (table.total == 0) continue;
    for (int j : {0, 1, 2, 5}) {
      auto report = edge_club(g, 3, j, table);
      ASSERT_TRUE(report.coefficient.has_value());
      EXPECT_LE(*report.coefficient, 1.0);
      EXPECT_GE(*report.coefficient, 0.0);
    }
  }
}

TEST(EdgeClub, ClubGraphKeepsAllVertices) {
  Graph g = fixtures::fig3();
  auto table = exact_census(g, 3);
  auto report = edge_club(g, 3, 2, table);
  auto club = club_graph(report);
  EXPECT_EQ(club.graph.order(), g.order());
  EXPECT_EQ(club.graph.edge_count(), 2u);
  EXPECT_DOUBLE_EQ(club.graph.weight(0, 1), 3.0);
}

// --- membership scaling invariance ------------------------------------------

TEST(Clubs, MembershipInvariantUnderUniformWeightScaling) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    Graph g = testsupport::random_weighted_graph(seed, 11, 0.5);
    std::vector<WeightedEdge> scaled;
    for (auto e : g.edges()) scaled.push_back({e.u, e.v, e.weight * 3.5});
    Graph gs(g.order(), std::move(scaled));
    auto ta = exact_census(g, 3);
    auto tb = exact_census(gs, 3);
    for (int j : {0, 1, 3}) {
      EXPECT_EQ(rich_club(g, j).members, rich_club(gs, j).members);
      EXPECT_EQ(super_rich_club(g, 3, j, ta).members,
                super_rich_club(gs, 3, j, tb).members);
      EXPECT_EQ(edge_club(g, 3, j, ta).members, edge_club(gs, 3, j, tb).members);
    }
  }
}

// --- threshold selection -----------------------------------------------------

TEST(SelectThreshold, StrictlyDecreasingScores) {
  std::vector<std::uint64_t> scores{5, 4, 3, 2, 1};
  EXPECT_EQ(select_threshold_for_size(scores, 2), 3);
  EXPECT_EQ(select_threshold_for_size(scores, 0), 5);
  EXPECT_EQ(select_threshold_for_size(scores, 5), 0);
}

TEST(SelectThreshold, TieBlocksNeverSplit) {
  // fig2 participation profile: eight 3s, rest zero
  Graph g = fixtures::fig2();
  auto table = exact_census(g, 3);
  std::int64_t j = select_threshold_for_size(table.vertex_counts, 6);
  EXPECT_EQ(j, 2);
  std::size_t size = 0;
  for (auto s : table.vertex_counts)
    if (static_cast<std::int64_t>(s) > j) ++size;
  EXPECT_EQ(size, 8u);
}

TEST(SelectThreshold, AllEqualScoresPickTheSmallerClub) {
  std::vector<std::uint64_t> scores(10, 7);
  std::int64_t j = select_threshold_for_size(scores, 5);
  EXPECT_EQ(j, 7); // club is empty, not everything
  std::size_t size = 0;
  for (auto s : scores)
    if (static_cast<std::int64_t>(s) > j) ++size;
  EXPECT_EQ(size, 0u);
}

TEST(SelectThreshold, GapScoresReturnLargestAdmittingThreshold) {
  std::vector<std::uint64_t> scores{5, 2};
  EXPECT_EQ(select_threshold_for_size(scores, 1), 4);
}
