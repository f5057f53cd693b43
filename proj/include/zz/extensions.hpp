#pragma once

// Linear extensions of a naturally labelled poset and their descent and
// fixed-label statistics.

#include <vector>

#include "zz/poset.hpp"

namespace zz {

// A linear extension written as the sequence of labels w_1 .. w_p.
using Word = std::vector<int>;

struct DescentStats {
  std::vector<int> positions;  // 1-based i with w_i > w_{i+1}
  int count = 0;
};

struct FixedLabels {
  std::vector<int> labels;  // ascending
  int count = 0;
};

struct LinearExtensionRecord {
  Word word;
  DescentStats descents;
  FixedLabels fixed;

  int des() const { return descents.count; }
  int fix() const { return fixed.count; }
};

// Every linear extension, lexicographically ordered. The empty poset has
// exactly one (empty) extension.
std::vector<Word> linear_extensions(const DibPoset& poset, const NaturalLabeling& labeling);

// Calls fn(word) for each extension in lexicographic order without storing
// them.
template <typename Fn>
void for_each_linear_extension(const DibPoset& poset, const NaturalLabeling& labeling, Fn&& fn);

DescentStats descent_stats(const Word& w);

// Label w_i is fixed if i-1 or i is a descent, or if the last preceding
// larger label sits after every label that must precede w_i. Throws
// InvalidArgument when w is not a linear extension.
FixedLabels fixed_labels(const Word& w, const DibPoset& poset, const NaturalLabeling& labeling);

bool is_linear_extension(const Word& w, const DibPoset& poset, const NaturalLabeling& labeling);

std::vector<LinearExtensionRecord> extension_records(const DibPoset& poset,
                                                     const NaturalLabeling& labeling);

// ---------------------------------------------------------------------------

template <typename Fn>
void for_each_linear_extension(const DibPoset& poset, const NaturalLabeling& labeling, Fn&& fn) {
  const int p = poset.size();
  Word word;
  word.reserve(static_cast<std::size_t>(p));
  Mask placed = 0;
  // Depth-first over currently minimal elements, smallest label first.
  auto recurse = [&](auto& self) -> void {
    if (static_cast<int>(word.size()) == p) {
      fn(static_cast<const Word&>(word));
      return;
    }
    for (int label = 1; label <= p; ++label) {
      const int e = labeling.element(label);
      if ((placed >> e) & 1U) continue;
      if ((poset.below(e) & ~placed) != 0) continue;
      placed |= Mask{1} << e;
      word.push_back(label);
      self(self);
      word.pop_back();
      placed &= ~(Mask{1} << e);
    }
  };
  recurse(recurse);
}

}  // namespace zz
