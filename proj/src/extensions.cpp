#include "zz/extensions.hpp"

#include <algorithm>

#include "zz/error.hpp"

namespace zz {

std::vector<Word> linear_extensions(const DibPoset& poset, const NaturalLabeling& labeling) {
  if (!is_natural_labeling(poset, labeling)) throw InvalidArgument("labeling is not natural");
  std::vector<Word> out;
  for_each_linear_extension(poset, labeling, [&](const Word& w) { out.push_back(w); });
  return out;
}

DescentStats descent_stats(const Word& w) {
  DescentStats d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) d.positions.push_back(static_cast<int>(i) + 1);
  }
  d.count = static_cast<int>(d.positions.size());
  return d;
}

bool is_linear_extension(const Word& w, const DibPoset& poset, const NaturalLabeling& labeling) {
  const int p = poset.size();
  if (static_cast<int>(w.size()) != p) return false;
  std::vector<int> pos(static_cast<std::size_t>(p) + 1, 0);
  for (int i = 0; i < p; ++i) {
    const int l = w[static_cast<std::size_t>(i)];
    if (l < 1 || l > p || pos[static_cast<std::size_t>(l)] != 0) return false;
    pos[static_cast<std::size_t>(l)] = i + 1;
  }
  for (auto [a, b] : poset.covers()) {
    if (pos[static_cast<std::size_t>(labeling.label(a))] > pos[static_cast<std::size_t>(labeling.label(b))]) return false;
  }
  return true;
}

FixedLabels fixed_labels(const Word& w, const DibPoset& poset, const NaturalLabeling& labeling) {
  if (!is_linear_extension(w, poset, labeling)) {
    throw InvalidArgument("word is not a linear extension of the poset");
  }
  const int p = poset.size();
  std::vector<bool> descent(static_cast<std::size_t>(p) + 1, false);
  for (int i : descent_stats(w).positions) descent[static_cast<std::size_t>(i)] = true;

  FixedLabels out;
  for (int i = 1; i <= p; ++i) {
    const int wi = w[static_cast<std::size_t>(i - 1)];
    bool fixed = descent[static_cast<std::size_t>(i)] || (i >= 2 && descent[static_cast<std::size_t>(i - 1)]);
    if (!fixed) {
      int max_larger = 0;  // max L(w_i)
      int max_required = 0;  // max J(w_i), 0 when J is empty
      const int ei = labeling.element(wi);
      for (int l = 1; l <= p; ++l) {
        const int wl = w[static_cast<std::size_t>(l - 1)];
        if (l < i && wl > wi) max_larger = l;
        if (poset.less(labeling.element(wl), ei)) max_required = std::max(max_required, l);
      }
      fixed = max_larger != 0 && max_larger > max_required;
    }
    if (fixed) out.labels.push_back(wi);
  }
  std::sort(out.labels.begin(), out.labels.end());
  out.count = static_cast<int>(out.labels.size());
  return out;
}

std::vector<LinearExtensionRecord> extension_records(const DibPoset& poset,
                                                     const NaturalLabeling& labeling) {
  std::vector<LinearExtensionRecord> out;
  for (Word& w : linear_extensions(poset, labeling)) {
    LinearExtensionRecord r;
    r.descents = descent_stats(w);
    r.fixed = fixed_labels(w, poset, labeling);
    r.word = std::move(w);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace zz
