#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "zz/catalog.hpp"
#include "zz/error.hpp"
#include "zz/extensions.hpp"

namespace zz {
namespace {

using test::strip;

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(LinearExtensions, SixElementExample) {
  const DibPoset p = build_poset(strip("WWRNN 3"));
  const auto words = linear_extensions(p, natural_labeling(p));
  EXPECT_EQ(words, (std::vector<Word>{{1, 2, 3, 4, 5, 6}, {1, 2, 3, 5, 4, 6}, {1, 3, 2, 4, 5, 6},
                                      {1, 3, 2, 5, 4, 6}, {1, 3, 4, 2, 5, 6}}));
}

TEST(LinearExtensions, SmallPosets) {
  const DibPoset chain = make_chain(2);
  EXPECT_EQ(linear_extensions(chain, natural_labeling(chain)), (std::vector<Word>{{1, 2}}));
  const DibPoset anti = make_antichain(2);
  EXPECT_EQ(linear_extensions(anti, natural_labeling(anti)), (std::vector<Word>{{1, 2}, {2, 1}}));
  const DibPoset empty = make_chain(0);
  EXPECT_EQ(linear_extensions(empty, natural_labeling(empty)), (std::vector<Word>{{}}));
}

TEST(LinearExtensions, ChainAndAntichainCounts) {
  long factorial = 1;
  for (int p = 1; p <= 6; ++p) {
    factorial *= p;
    const DibPoset a = make_antichain(p);
    EXPECT_EQ(static_cast<long>(linear_extensions(a, natural_labeling(a)).size()), factorial);
    const DibPoset c = make_chain(p);
    EXPECT_EQ(linear_extensions(c, natural_labeling(c)).size(), 1U);
  }
}

TEST(LinearExtensions, RespectOrder) {
  for (const auto& seq : shape_sequences(5)) {
    const StripSpec spec{seq, min_length(seq)};
    if (interface_profile(spec).min_order() < 0) continue;
    const DibPoset p = build_poset(spec);
    const NaturalLabeling lab = natural_labeling(p);
    const auto words = linear_extensions(p, lab);
    EXPECT_TRUE(std::is_sorted(words.begin(), words.end()));
    for (const Word& w : words) EXPECT_TRUE(is_linear_extension(w, p, lab));
  }
}

TEST(LinearExtensions, RejectsNonNaturalLabeling) {
  const DibPoset p = make_chain(2);
  NaturalLabeling bad{{2, 1}, {1, 0}};
  EXPECT_THROW(linear_extensions(p, bad), InvalidArgument);
}

TEST(DescentStats, Examples) {
  EXPECT_EQ(descent_stats({1, 2, 3, 5, 4, 6}).positions, (std::vector<int>{4}));
  EXPECT_EQ(descent_stats({1, 2}).count, 0);
  const DescentStats d = descent_stats({1, 3, 2, 5, 4, 6});
  EXPECT_EQ(d.positions, (std::vector<int>{2, 4}));
  EXPECT_EQ(d.count, 2);
  EXPECT_EQ(descent_stats({}).count, 0);
}

TEST(FixedLabels, SixElementMultisets) {
  const DibPoset p = build_poset(strip("WWRNN 3"));
  const NaturalLabeling lab = natural_labeling(p);
  std::vector<int> des, fix;
  for (const auto& r : extension_records(p, lab)) {
    des.push_back(r.des());
    fix.push_back(r.fix());
  }
  EXPECT_EQ(sorted(des), (std::vector<int>{0, 1, 1, 1, 2}));
  EXPECT_EQ(sorted(fix), (std::vector<int>{0, 2, 2, 2, 4}));
}

TEST(FixedLabels, ChainHasNone) {
  const DibPoset p = make_chain(2);
  EXPECT_EQ(fixed_labels({1, 2}, p, natural_labeling(p)).count, 0);
}

// Labeling 1=s21, 2=s11, 3=s31, 4=s22, 5=s41, 6=s32.
TEST(FixedLabels, AlternativeLabeling) {
  const DibPoset p = build_poset(strip("WWRNN 3"));
  std::vector<int> label_of(6);
  label_of[static_cast<std::size_t>(p.index_of({2, 1}))] = 1;
  label_of[static_cast<std::size_t>(p.index_of({1, 1}))] = 2;
  label_of[static_cast<std::size_t>(p.index_of({3, 1}))] = 3;
  label_of[static_cast<std::size_t>(p.index_of({2, 2}))] = 4;
  label_of[static_cast<std::size_t>(p.index_of({4, 1}))] = 5;
  label_of[static_cast<std::size_t>(p.index_of({3, 2}))] = 6;
  const NaturalLabeling lab = labeling_from_labels(p, label_of);
  // 4 follows the larger 5 but must also follow 2 at position 4, so it is
  // not fixed; 5 and 2 sit around the descent at position 3.
  const FixedLabels f = fixed_labels({1, 3, 5, 2, 4, 6}, p, lab);
  EXPECT_EQ(f.labels, (std::vector<int>{2, 5}));
}

TEST(FixedLabels, AdjacentToDescentAlwaysFixed) {
  const DibPoset p = make_fence(6);
  const NaturalLabeling lab = natural_labeling(p);
  for (const auto& r : extension_records(p, lab)) {
    for (int i : r.descents.positions) {
      const auto& fixed = r.fixed.labels;
      EXPECT_TRUE(std::binary_search(fixed.begin(), fixed.end(), r.word[static_cast<std::size_t>(i - 1)]));
      EXPECT_TRUE(std::binary_search(fixed.begin(), fixed.end(), r.word[static_cast<std::size_t>(i)]));
    }
  }
}

TEST(FixedLabels, RejectsNonExtension) {
  const DibPoset p = make_chain(2);
  EXPECT_THROW(fixed_labels({2, 1}, p, natural_labeling(p)), InvalidArgument);
}

// (des, fix) multisets do not depend on the natural labeling.
TEST(ExtensionStats, LabelingInvariance) {
  std::mt19937_64 rng(2024);
  std::vector<DibPoset> posets = {make_fence(5), make_fence(6), make_antichain(4)};
  for (const auto& seq : shape_sequences(5)) {
    const StripSpec spec{seq, min_length(seq)};
    if (interface_profile(spec).min_order() >= 0) posets.push_back(build_poset(spec));
  }
  for (const DibPoset& p : posets) {
    auto stats = [&](const NaturalLabeling& lab) {
      std::vector<std::pair<int, int>> s;
      for (const auto& r : extension_records(p, lab)) s.emplace_back(r.des(), r.fix());
      std::sort(s.begin(), s.end());
      return s;
    };
    const auto base = stats(natural_labeling(p));
    for (int i = 0; i < 5; ++i) EXPECT_EQ(stats(random_natural_labeling(p, rng)), base);
  }
}

}  // namespace
}  // namespace zz
