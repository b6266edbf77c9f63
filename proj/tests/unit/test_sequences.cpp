#include "oracles.hpp"
#include "support.hpp"

#include "monoseq/errors.hpp"
#include "monoseq/sequences.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace monoseq;
using test::angle_sweep_oracle;
using test::brute_force_orders;
using test::distinct_in_order;

namespace {

PathSet set_of(std::initializer_list<std::vector<int>> paths) {
  std::vector<PathPerm> ps;
  for (const auto& p : paths) ps.emplace_back(p);
  return PathSet(std::move(ps));
}

}  // namespace

TEST(Adjust, Examples) {
  const auto a = adjust(set_of({{1, 2, 3}, {3, 2, 1}}), 1, 2);
  EXPECT_EQ(a.paths, set_of({{1, 2, 3}, {1, 2, 3}}));
  EXPECT_EQ(a.flipped, (std::vector<bool>{false, true}));
  const auto b = adjust(set_of({{1, 2, 3}}), 1, 3);
  EXPECT_EQ(b.paths, set_of({{1, 2, 3}}));
  const auto c = adjust(set_of({{2, 1, 4, 3, 5, 6}}), 5, 6);
  EXPECT_EQ(c.paths, set_of({{2, 1, 4, 3, 5, 6}}));
  EXPECT_EQ(c.flipped, std::vector<bool>{false});
}

TEST(Adjust, InvalidAnchor) {
  const auto ps = set_of({{1, 2, 3}});
  EXPECT_THROW((void)adjust(ps, 1, 1), std::invalid_argument);
  EXPECT_THROW((void)adjust(ps, 0, 1), std::invalid_argument);
  EXPECT_THROW((void)adjust(ps, 1, 4), std::invalid_argument);
}

TEST(Adjust, Idempotent) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    std::vector<PathPerm> paths;
    for (int i = 0; i < 5; ++i) paths.push_back(test::random_path(6, rng));
    const auto once = adjust(PathSet(paths), 2, 5);
    const auto twice = adjust(once.paths, 2, 5);
    EXPECT_EQ(twice.paths, once.paths);
    EXPECT_EQ(twice.flipped, std::vector<bool>(5, false));
    for (const auto& p : once.paths.paths()) EXPECT_TRUE(p.precedes(2, 5));
  }
}

TEST(CommonAnchor, FindsFirstPair) {
  const auto ps = set_of({{2, 1, 3}, {2, 3, 1}});
  const auto a = common_anchor(ps.paths());
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(*a, std::make_pair(2, 1));
  EXPECT_FALSE(common_anchor(set_of({{1, 2}, {2, 1}}).paths()).has_value());
}

TEST(IsAllowableSequence, Examples) {
  EXPECT_FALSE(is_allowable_sequence(set_of({{1, 2, 3}, {2, 1, 3}, {1, 2, 3}}).paths()));
  EXPECT_TRUE(is_allowable_sequence(set_of({{1, 2, 3}, {1, 2, 3}, {2, 1, 3}}).paths()));
  // The reverse pattern is equally forbidden.
  EXPECT_FALSE(is_allowable_sequence(set_of({{2, 1, 3}, {1, 2, 3}, {2, 1, 3}}).paths()));
}

TEST(IsAllowableSequence, CircularSnapshots) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 50; ++t) {
    const auto cs = circular_sequence(random_general_position(7, 100, rng));
    EXPECT_TRUE(is_allowable_sequence(cs.snapshots));
  }
}

TEST(AllowableOrder, ThreePathExample) {
  const auto aps = adjust(set_of({{1, 2, 3}, {2, 1, 3}, {1, 3, 2}}), 1, 3);
  const auto seq = allowable_order(aps);
  ASSERT_TRUE(seq.has_value());
  const std::vector<PathPerm> want{PathPerm({1, 3, 2}), PathPerm({1, 2, 3}), PathPerm({2, 1, 3})};
  std::vector<PathPerm> rev(want.rbegin(), want.rend());
  EXPECT_TRUE(seq->paths == want || seq->paths == rev);
  EXPECT_EQ(brute_force_orders(aps.paths.paths()), (std::set<std::vector<PathPerm>>{want, rev}));
}

TEST(AllowableOrder, NoneExample) {
  const auto aps = adjust(set_of({{1, 2, 3, 4, 5, 6}, {2, 1, 4, 3, 5, 6}, {2, 1, 3, 4, 6, 5}}), 1, 3);
  EXPECT_FALSE(allowable_order(aps).has_value());
  EXPECT_TRUE(brute_force_orders(aps.paths.paths()).empty());
}

TEST(AllowableOrder, IdenticalPaths) {
  const auto ps = set_of({{3, 1, 2}, {3, 1, 2}, {3, 1, 2}});
  const auto seq = allowable_order(ps.paths());
  ASSERT_TRUE(seq.has_value());
  EXPECT_EQ(seq->source, (std::vector<int>{0, 1, 2}));
}

TEST(AllowableOrder, DuplicatesStayAdjacent) {
  const auto ps = set_of({{1, 2, 3}, {2, 1, 3}, {1, 3, 2}, {1, 2, 3}, {1, 3, 2}});
  const auto seq = allowable_order(ps.paths());
  ASSERT_TRUE(seq.has_value());
  EXPECT_TRUE(is_allowable_sequence(seq->paths));
  EXPECT_EQ(distinct_in_order(seq->paths).size(), 3U);
  for (std::size_t t = 0; t < seq->paths.size(); ++t) {
    EXPECT_EQ(seq->paths[t], ps[static_cast<std::size_t>(seq->source[t])]);
  }
}

// Paths drawn from a random sweep are allowable by construction, random paths
// mostly are not; both kinds are checked against brute force.
TEST(AllowableOrder, AgreesWithBruteForce) {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> kd(1, 6);
  std::uniform_int_distribution<int> nd(3, 8);
  int found = 0;
  for (int t = 0; t < 400; ++t) {
    const int k = kd(rng);
    const int n = nd(rng);
    std::vector<PathPerm> paths;
    if (t % 2 == 0) {
      const auto w = random_wiring(n, rng);
      std::vector<int> order = w.start();
      std::vector<std::vector<int>> snaps{order};
      for (const auto& [a, b] : w.crossings) {
        std::iter_swap(std::find(order.begin(), order.end(), a), std::find(order.begin(), order.end(), b));
        snaps.push_back(order);
      }
      std::uniform_int_distribution<std::size_t> pick(0, snaps.size() - 1);
      for (int i = 0; i < k; ++i) paths.emplace_back(snaps[pick(rng)]);
    } else {
      for (int i = 0; i < k; ++i) paths.push_back(test::random_path(n, rng));
    }
    const auto aps = adjust(PathSet(paths), 1, 2);
    const auto seq = allowable_order(aps);
    const auto valid = brute_force_orders(aps.paths.paths());
    ASSERT_EQ(seq.has_value(), !valid.empty()) << "t = " << t;
    if (!seq) continue;
    ++found;
    const auto got = distinct_in_order(seq->paths);
    std::set<std::vector<PathPerm>> expected{got, std::vector<PathPerm>(got.rbegin(), got.rend())};
    EXPECT_EQ(valid, expected);
  }
  EXPECT_GT(found, 150);
}

TEST(CircularSequence, TriangleExample) {
  const PointSet pts({{Rat(0), Rat(0)}, {Rat(2), Rat(1)}, {Rat(1), Rat(3)}});
  const auto cs = circular_sequence(pts);
  const std::vector<PathPerm> want{PathPerm({1, 3, 2}), PathPerm({1, 2, 3}), PathPerm({2, 1, 3}), PathPerm({2, 3, 1})};
  EXPECT_EQ(cs.snapshots, want);
  EXPECT_EQ(cs.initial, PathPerm({1, 3, 2}));
  EXPECT_TRUE(contains_permutation(cs, PathPerm({2, 3, 1})));
  EXPECT_TRUE(contains_permutation(cs, PathPerm({1, 3, 2})));
  EXPECT_TRUE(contains_permutation(cs, PathPerm({3, 1, 2})));  // reverse of 213
  const PointSet quad({{Rat(0), Rat(0)}, {Rat(3), Rat(1)}, {Rat(1), Rat(4)}, {Rat(5), Rat(6)}});
  EXPECT_FALSE(contains_permutation(circular_sequence(quad), PathPerm({1, 2, 4, 3})));
}

TEST(CircularSequence, CollinearRejected) {
  const PointSet pts({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}, {Rat(5), Rat(0)}});
  try {
    (void)circular_sequence(pts);
    FAIL() << "expected DegeneratePosition";
  } catch (const DegeneratePosition& e) {
    ASSERT_EQ(e.collinear_triples().size(), 1U);
    EXPECT_EQ(e.collinear_triples().front(), (std::vector<int>{1, 2, 3}));
  }
}

TEST(CircularSequence, ParallelAndVerticalRejected) {
  const PointSet parallel({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(3), Rat(0)}, {Rat(4), Rat(1)}});
  EXPECT_THROW((void)circular_sequence(parallel), DegeneratePosition);
  const PointSet vertical({{Rat(0), Rat(0)}, {Rat(0), Rat(1)}, {Rat(3), Rat(7)}});
  try {
    (void)circular_sequence(vertical);
    FAIL() << "expected DegeneratePosition";
  } catch (const DegeneratePosition& e) {
    EXPECT_EQ(e.vertical_pairs(), (std::vector<std::pair<int, int>>{{1, 2}}));
  }
}

TEST(CircularSequence, PerturbationHandlesDegenerateSets) {
  const PointSet grid({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}});
  const auto cs = circular_sequence(grid, true);
  EXPECT_EQ(cs.swaps.size(), 10U);
  EXPECT_EQ(cs.snapshots.back(), cs.initial.reversed());
  EXPECT_TRUE(is_allowable_sequence(cs.snapshots));
}

TEST(CircularSequence, LawsAndOracle) {
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<int> nd(3, 9);
  for (int t = 0; t < 100; ++t) {
    const int n = nd(rng);
    const PointSet pts = random_general_position(n, 60, rng);
    const auto cs = circular_sequence(pts);
    ASSERT_EQ(cs.swaps.size(), static_cast<std::size_t>(n * (n - 1) / 2));
    std::set<std::pair<int, int>> pairs;
    for (const auto& s : cs.swaps) pairs.insert({s.a, s.b});
    EXPECT_EQ(pairs.size(), cs.swaps.size());
    EXPECT_EQ(cs.snapshots.back(), cs.initial.reversed());
    EXPECT_EQ(cs.snapshots, angle_sweep_oracle(pts));
  }
}

// Every pair (i, j) of every point set yields an allowable adjusted set.
TEST(AllowableOrder, ExtractedPathSetsAreAllowable) {
  std::mt19937_64 rng(35);
  for (int t = 0; t < 20; ++t) {
    const PointSet pts = random_general_position(6, 60, rng);
    std::vector<PathPerm> paths;
    for (int i = 0; i < 4; ++i) {
      for (;;) {
        try {
          paths.push_back(projection_order(pts, test::random_direction(rng)));
          break;
        } catch (const ProjectionTie&) {
        }
      }
    }
    const PathSet ps(paths);
    for (int i = 1; i <= 6; ++i) {
      for (int j = 1; j <= 6; ++j) {
        if (i != j) EXPECT_TRUE(allowable_order(adjust(ps, i, j)).has_value());
      }
    }
  }
}
