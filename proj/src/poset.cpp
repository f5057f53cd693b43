#include "zz/poset.hpp"

#include <algorithm>
#include <memory>
#include <bit>
#include <sstream>
#include <tuple>

#include "zz/error.hpp"

namespace zz {

namespace {

Mask bit(int i) { return Mask{1} << i; }

}  // namespace

DibPoset::DibPoset(std::vector<Dib> elements, const std::vector<std::pair<int, int>>& relations)
    : elements_(std::move(elements)) {
  const int p = size();
  if (p > kMaxPosetSize) {
    throw GuardExceeded("posets are limited to " + std::to_string(kMaxPosetSize) + " elements");
  }
  below_.assign(static_cast<std::size_t>(p), 0);
  for (auto [a, b] : relations) {
    if (a < 0 || b < 0 || a >= p || b >= p) throw InvalidArgument("relation index out of range");
    if (a == b) throw InvalidArgument("self relation");
    below_[static_cast<std::size_t>(b)] |= bit(a);
  }
  // Transitive closure by fixed point; p is small.
  for (bool changed = true; changed;) {
    changed = false;
    for (int b = 0; b < p; ++b) {
      Mask m = below_[static_cast<std::size_t>(b)];
      Mask grown = m;
      for (Mask rest = m; rest != 0; rest &= rest - 1) {
        grown |= below_[static_cast<std::size_t>(std::countr_zero(rest))];
      }
      if (grown != m) {
        below_[static_cast<std::size_t>(b)] = grown;
        changed = true;
      }
    }
  }
  for (int i = 0; i < p; ++i) {
    if (less(i, i)) throw InvalidArgument("relations contain a cycle");
  }
  above_.assign(static_cast<std::size_t>(p), 0);
  for (int b = 0; b < p; ++b) {
    for (Mask rest = below_[static_cast<std::size_t>(b)]; rest != 0; rest &= rest - 1) {
      above_[static_cast<std::size_t>(std::countr_zero(rest))] |= bit(b);
    }
  }
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < p; ++b) {
      if (!less(a, b)) continue;
      // a is covered by b unless something sits strictly between them.
      if ((above_[static_cast<std::size_t>(a)] & below_[static_cast<std::size_t>(b)]) == 0) {
        covers_.emplace_back(a, b);
      }
    }
  }
}

int DibPoset::index_of(const Dib& d) const {
  auto it = std::find(elements_.begin(), elements_.end(), d);
  return it == elements_.end() ? -1 : static_cast<int>(it - elements_.begin());
}

Mask DibPoset::full_mask() const {
  return size() == 64 ? ~Mask{0} : bit(size()) - 1;
}

DibPoset DibPoset::induced(Mask members) const {
  std::vector<int> list;
  for (Mask rest = members & full_mask(); rest != 0; rest &= rest - 1) {
    list.push_back(std::countr_zero(rest));
  }
  return induced(list);
}

DibPoset DibPoset::induced(std::span<const int> members) const {
  std::vector<int> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Dib> elems;
  for (int i : sorted) elems.push_back(element(i));
  std::vector<std::pair<int, int>> rel;
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = 0; b < sorted.size(); ++b) {
      if (less(sorted[a], sorted[b])) rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return DibPoset(std::move(elems), rel);
}

DibPoset build_poset(const StripSpec& spec) {
  require_valid(spec);
  const InterfaceProfile profile = interface_profile(spec);
  const int m = profile.tiers();
  for (int k = 1; k <= m; ++k) {
    if (profile.order(k) < 0) {
      throw NotKekulean("non-Kekulean strip: ord(i_" + std::to_string(k) +
                        ") = " + std::to_string(profile.order(k)));
    }
  }

  std::vector<Dib> elements;
  for (int k = 1; k <= m; ++k) {
    for (int j = 1; j <= profile.order(k); ++j) elements.push_back({k, j});
  }
  auto idx = [&](int k, int j) {
    return static_cast<int>(std::find(elements.begin(), elements.end(), Dib{k, j}) - elements.begin());
  };

  std::vector<std::pair<int, int>> rel;
  for (const FragmentInfo& f : fragments(spec)) {
    if (f.index < 2 || f.index > m) continue;  // f_1 and f_{m+1} touch one interface only
    // The interface holding the first bond leads; the other trails.
    const int lead = f.first_bond_interface;
    const int trail = lead == f.upper_interface ? f.lower_interface : f.upper_interface;
    const int lead_order = profile.order(lead);
    const int trail_order = profile.order(trail);
    for (int j = 1; j <= lead_order; ++j) {
      if (j <= trail_order) rel.emplace_back(idx(lead, j), idx(trail, j));
      if (j + 1 <= lead_order && j <= trail_order) rel.emplace_back(idx(trail, j), idx(lead, j + 1));
    }
  }
  DibPoset poset(std::move(elements), rel);
  if (poset.covers().size() != rel.size()) {
    throw Error("internal: DIB relations are not all covers");
  }
  return poset;
}

DibPoset make_chain(int p) {
  std::vector<Dib> e;
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < p; ++i) {
    e.push_back({i + 1, 1});
    if (i > 0) rel.emplace_back(i - 1, i);
  }
  return DibPoset(std::move(e), rel);
}

DibPoset make_antichain(int p) {
  std::vector<Dib> e;
  for (int i = 0; i < p; ++i) e.push_back({i + 1, 1});
  return DibPoset(std::move(e), {});
}

DibPoset make_fence(int p) {
  std::vector<Dib> e;
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < p; ++i) {
    e.push_back({i + 1, 1});
    if (i == 0) continue;
    // 0-based: even indices are minima.
    if (i % 2 == 1) {
      rel.emplace_back(i - 1, i);
    } else {
      rel.emplace_back(i, i - 1);
    }
  }
  return DibPoset(std::move(e), rel);
}

SubposetRange::SubposetRange(const DibPoset& poset)
    : poset_(std::make_shared<const DibPoset>(poset)), count_(std::uint64_t{1} << poset.size()) {}

SubposetRange induced_subposets(const DibPoset& poset) {
  if (poset.size() >= 63) throw GuardExceeded("too many elements to enumerate subposets");
  return SubposetRange(poset);
}

namespace {

template <typename Pick>
NaturalLabeling peel(const DibPoset& poset, Pick pick) {
  const int p = poset.size();
  NaturalLabeling lab;
  lab.label_of.assign(static_cast<std::size_t>(p), 0);
  Mask removed = 0;
  for (int label = 1; label <= p; ++label) {
    std::vector<int> minimal;
    for (int i = 0; i < p; ++i) {
      if ((removed >> i) & 1U) continue;
      if ((poset.below(i) & ~removed) == 0) minimal.push_back(i);
    }
    const int chosen = pick(minimal);
    removed |= bit(chosen);
    lab.label_of[static_cast<std::size_t>(chosen)] = label;
    lab.element_of.push_back(chosen);
  }
  return lab;
}

}  // namespace

NaturalLabeling natural_labeling(const DibPoset& poset) {
  return peel(poset, [&](const std::vector<int>& minimal) {
    return *std::min_element(minimal.begin(), minimal.end(), [&](int a, int b) {
      const Dib& x = poset.element(a);
      const Dib& y = poset.element(b);
      return std::tie(x.j, x.k) < std::tie(y.j, y.k);
    });
  });
}

NaturalLabeling random_natural_labeling(const DibPoset& poset, std::mt19937_64& rng) {
  return peel(poset, [&](const std::vector<int>& minimal) {
    std::uniform_int_distribution<std::size_t> dist(0, minimal.size() - 1);
    return minimal[dist(rng)];
  });
}

bool is_natural_labeling(const DibPoset& poset, const NaturalLabeling& labeling) {
  const int p = poset.size();
  if (labeling.size() != p || static_cast<int>(labeling.element_of.size()) != p) return false;
  std::vector<bool> seen(static_cast<std::size_t>(p) + 1, false);
  for (int i = 0; i < p; ++i) {
    const int l = labeling.label(i);
    if (l < 1 || l > p || seen[static_cast<std::size_t>(l)]) return false;
    seen[static_cast<std::size_t>(l)] = true;
    if (labeling.element(l) != i) return false;
  }
  for (auto [a, b] : poset.covers()) {
    if (labeling.label(a) >= labeling.label(b)) return false;
  }
  return true;
}

NaturalLabeling labeling_from_labels(const DibPoset& poset, std::vector<int> label_of) {
  NaturalLabeling lab;
  lab.label_of = std::move(label_of);
  lab.element_of.assign(lab.label_of.size(), -1);
  for (std::size_t i = 0; i < lab.label_of.size(); ++i) {
    const int l = lab.label_of[i];
    if (l >= 1 && static_cast<std::size_t>(l) <= lab.element_of.size()) {
      lab.element_of[static_cast<std::size_t>(l - 1)] = static_cast<int>(i);
    }
  }
  if (!is_natural_labeling(poset, lab)) throw InvalidArgument("not a natural labeling");
  return lab;
}

std::string dib_name(const Dib& d) {
  return "s_{" + std::to_string(d.k) + "," + std::to_string(d.j) + "}";
}

std::string to_dot(const DibPoset& poset, const std::string& graph_name) {
  std::ostringstream os;
  os << "digraph " << graph_name << " {\n  rankdir=BT;\n";
  for (int i = 0; i < poset.size(); ++i) {
    const Dib& d = poset.element(i);
    os << "  n" << i << " [label=\"s" << d.k << "," << d.j << "\"];\n";
  }
  for (auto [a, b] : poset.covers()) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace zz
