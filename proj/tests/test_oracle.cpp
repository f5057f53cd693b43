#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "support.hpp"
#include "zz/catalog.hpp"
#include "zz/error.hpp"
#include "zz/kekule.hpp"
#include "zz/oracle.hpp"
#include "zz/order_poly.hpp"

namespace zz {
namespace {

using test::poly;
using test::strip;

TEST(PerfectMatchings, Counts) {
  EXPECT_EQ(enumerate_perfect_matchings(build_graph(strip("WN 1"))).size(), 2U);
  EXPECT_EQ(enumerate_perfect_matchings(build_graph(strip("WRN 2"))).size(), 6U);
  EXPECT_EQ(enumerate_perfect_matchings(build_graph(strip("WWRNN 3"))).size(), 175U);
  EXPECT_TRUE(enumerate_perfect_matchings(build_graph(strip("WNNWWN 4"))).empty());
}

TEST(PerfectMatchings, ArePerfectAndDistinct) {
  const BenzenoidGraph g = build_graph(strip("WWRNN 2"));
  const auto ms = enumerate_perfect_matchings(g);
  std::set<Matching> distinct(ms.begin(), ms.end());
  EXPECT_EQ(distinct.size(), ms.size());
  EXPECT_TRUE(std::is_sorted(ms.begin(), ms.end()));
  for (const Matching& m : ms) {
    std::vector<int> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int e : m) {
      ++seen[static_cast<std::size_t>(g.edges()[static_cast<std::size_t>(e)].u)];
      ++seen[static_cast<std::size_t>(g.edges()[static_cast<std::size_t>(e)].v)];
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

TEST(PerfectMatchings, VertexGuard) {
  const BenzenoidGraph g = build_graph(strip("WRN 2"));
  EXPECT_THROW(enumerate_perfect_matchings(g, 10), GuardExceeded);
  EXPECT_THROW(enumerate_clar_covers(g, 10), GuardExceeded);
}

TEST(ProperSextets, Benzene) {
  const BenzenoidGraph g = build_graph(strip("WN 1"));
  std::multiset<int> counts;
  for (const Matching& m : enumerate_perfect_matchings(g)) counts.insert(count_proper_sextets(g, m));
  EXPECT_EQ(counts, (std::multiset<int>{0, 1}));
  EXPECT_EQ(sextet_histogram(g), (std::vector<BigInt>{1, 1}));
  EXPECT_EQ(zz_from_matchings(g), poly({2, 1}));
}

TEST(ProperSextets, Parallelogram) {
  const BenzenoidGraph g = build_graph(strip("WRN 2"));
  EXPECT_EQ(sextet_histogram(g), (std::vector<BigInt>{1, 4, 1}));
}

TEST(ClarCovers, Examples) {
  const auto covers = enumerate_clar_covers(build_graph(strip("WRN 2")));
  EXPECT_EQ(covers.size(), 13U);
  EXPECT_EQ(zz_from_covers(covers), poly({6, 6, 1}));
  EXPECT_EQ(enumerate_clar_covers(build_graph(strip("WN 1"))).size(), 3U);
  EXPECT_TRUE(enumerate_clar_covers(build_graph(strip("WNNWWN 4"))).empty());
  EXPECT_TRUE(zz_from_covers({}).is_zero());
}

TEST(ClarCovers, AromaticRingsAreDisjoint) {
  const BenzenoidGraph g = build_graph(strip("WWRNN 2"));
  for (const auto& c : enumerate_clar_covers(g)) {
    std::set<int> used;
    for (int h : c.aromatic) {
      for (int v : g.hexagons()[static_cast<std::size_t>(h)].vertices) EXPECT_TRUE(used.insert(v).second);
    }
    EXPECT_EQ(used.size() + 2 * c.matching.size(), static_cast<std::size_t>(g.vertex_count()));
  }
}

TEST(TripleAgreement, SmallStrips) {
  EXPECT_EQ(zz_from_covers(enumerate_clar_covers(build_graph(strip("WWRNN 3")))), zz_polynomial(strip("WWRNN 3")));
  for (const StripSpec& spec : kekulean_strips(3, 4)) {
    const BenzenoidGraph g = build_graph(spec);
    const Polynomial engine = zz_polynomial(spec);
    EXPECT_EQ(zz_from_covers(enumerate_clar_covers(g)), engine) << format_strip(spec);
    EXPECT_EQ(zz_from_matchings(g), engine) << format_strip(spec);
  }
}

TEST(ExtractKi, InjectiveOnMatchings) {
  for (const char* text : {"WRN 2", "WWRNN 3", "WLRN 3"}) {
    const BenzenoidGraph g = build_graph(strip(text));
    const auto ms = enumerate_perfect_matchings(g);
    std::set<KekuleAssignment> kis;
    for (const Matching& m : ms) kis.insert(extract_ki(g, m));
    EXPECT_EQ(kis.size(), ms.size()) << text;
  }
}

// A matching's standard proper-sextet count equals |A_K| of the structure
// carrying the same double interface bonds.
TEST(ProperSextets, MatchBijectionPerStructure) {
  for (const StripSpec& spec : kekulean_strips(4, 3)) {
    const BenzenoidGraph g = build_graph(spec);
    std::map<KekuleAssignment, int> sextets;
    for (const Matching& m : enumerate_perfect_matchings(g)) sextets[extract_ki(g, m)] = count_proper_sextets(g, m);
    for_each_kekule(spec, [&](const KekuleRecord& r) {
      auto it = sextets.find(r.assignment);
      ASSERT_NE(it, sextets.end());
      EXPECT_EQ(it->second, std::popcount(r.map.members)) << format_strip(spec);
    });
  }
}

// The mirrored pattern also yields the right histogram (mirror images of a
// strip share their ZZ polynomial), but it attaches the sextets to the
// wrong structures, which the per-structure comparison exposes.
TEST(ProperSextets, MirroredPatternMisplacesSextets) {
  const StripSpec spec = strip("WRN 2");
  const BenzenoidGraph g = build_graph(spec);
  EXPECT_EQ(sextet_histogram(g, SextetOrientation::mirrored), sextet_histogram(g));
  int mismatched = 0;
  std::map<KekuleAssignment, int> sizes;
  for_each_kekule(spec, [&](const KekuleRecord& r) { sizes[r.assignment] = std::popcount(r.map.members); });
  for (const Matching& m : enumerate_perfect_matchings(g)) {
    mismatched += count_proper_sextets(g, m, SextetOrientation::mirrored) != sizes.at(extract_ki(g, m));
  }
  EXPECT_GT(mismatched, 0);
}

}  // namespace
}  // namespace zz
