#include "zz/kekule.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <utility>

#include "zz/error.hpp"

namespace zz {

std::vector<int> member_indices(Mask members) {
  std::vector<int> out;
  for (Mask rest = members; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
  return out;
}

void check_order_map(const DibPoset& poset, const OrderMap& om, int n) {
  if ((om.members & ~poset.full_mask()) != 0) throw InvalidArgument("order map names unknown DIBs");
  const std::vector<int> idx = member_indices(om.members);
  if (idx.size() != om.values.size()) throw InvalidArgument("order map needs one value per member");
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const int va = om.values[a];
    if (va < 1 || va > n) {
      throw InvalidArgument("value " + std::to_string(va) + " of " + dib_name(poset.element(idx[a])) +
                            " outside [1, " + std::to_string(n) + "]");
    }
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (poset.less(idx[a], idx[b]) && va >= om.values[b]) {
        throw InvalidArgument("map is not strictly order-preserving on " + dib_name(poset.element(idx[a])) +
                              " < " + dib_name(poset.element(idx[b])));
      }
    }
  }
}

KekuleAssignment kekule_from_map(const StripSpec& spec, const DibPoset& poset, const OrderMap& om) {
  check_order_map(poset, om, spec.n);
  const int p = poset.size();
  std::vector<int> value(static_cast<std::size_t>(p), -1);
  const std::vector<int> idx = member_indices(om.members);
  for (std::size_t a = 0; a < idx.size(); ++a) value[static_cast<std::size_t>(idx[a])] = om.values[a];

  const InterfaceProfile profile = interface_profile(spec);
  KekuleAssignment ka;
  ka.positions.resize(static_cast<std::size_t>(profile.tiers()));
  for (int i = 0; i < p; ++i) {
    int offset = value[static_cast<std::size_t>(i)];
    if (offset < 0) {
      // Outside A: the largest value among members of A below it, or 0.
      offset = 0;
      for (Mask rest = poset.below(i) & om.members; rest != 0; rest &= rest - 1) {
        offset = std::max(offset, value[static_cast<std::size_t>(std::countr_zero(rest))]);
      }
    }
    const Dib& d = poset.element(i);
    auto& row = ka.positions[static_cast<std::size_t>(d.k - 1)];
    if (static_cast<int>(row.size()) < d.j) row.resize(static_cast<std::size_t>(d.j), 0);
    row[static_cast<std::size_t>(d.j - 1)] = offset + d.j;
  }
  return ka;
}

KekuleAssignment kekule_from_map(const StripSpec& spec, const OrderMap& om) {
  return kekule_from_map(spec, build_poset(spec), om);
}

void check_alternation(const StripSpec& spec, const KekuleAssignment& ka) {
  const InterfaceProfile profile = interface_profile(spec);
  const int m = profile.tiers();
  if (static_cast<int>(ka.positions.size()) != m) throw InvalidArgument("assignment needs one row per interface");
  for (int k = 1; k <= m; ++k) {
    const auto& row = ka.positions[static_cast<std::size_t>(k - 1)];
    if (static_cast<int>(row.size()) != std::max(profile.order(k), 0)) {
      throw InvalidArgument("interface i_" + std::to_string(k) + " must hold " +
                            std::to_string(profile.order(k)) + " double bonds");
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 1 || row[j] > profile.size(k)) {
        throw InvalidArgument("position " + std::to_string(row[j]) + " outside i_" + std::to_string(k));
      }
      if (j > 0 && row[j] <= row[j - 1]) {
        throw InvalidArgument("positions in i_" + std::to_string(k) + " must increase");
      }
    }
  }

  const std::vector<int> offsets = tier_offsets(spec);
  for (const FragmentInfo& f : fragments(spec)) {
    if (f.index < 2 || f.index > m) continue;
    std::vector<std::pair<int, int>> bonds;  // (x, interface)
    for (int k : {f.upper_interface, f.lower_interface}) {
      for (int pos : ka.positions[static_cast<std::size_t>(k - 1)]) {
        bonds.emplace_back(offsets[static_cast<std::size_t>(k - 1)] + 2 * (pos - 1), k);
      }
    }
    std::sort(bonds.begin(), bonds.end());
    const int trail = f.first_bond_interface == f.upper_interface ? f.lower_interface : f.upper_interface;
    for (std::size_t i = 0; i < bonds.size(); ++i) {
      const int expected = i % 2 == 0 ? f.first_bond_interface : trail;
      if (bonds[i].second != expected) {
        throw InvalidArgument("double interface bonds do not alternate in fragment f_" +
                              std::to_string(f.index));
      }
    }
  }
}

OrderMap map_from_kekule(const StripSpec& spec, const DibPoset& poset, const KekuleAssignment& ka) {
  check_alternation(spec, ka);
  const int p = poset.size();
  std::vector<int> offset(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) offset[static_cast<std::size_t>(i)] = ka.position(poset.element(i)) - poset.element(i).j;

  OrderMap om;
  for (int i = 0; i < p; ++i) {
    int floor = 0;
    for (Mask rest = poset.below(i); rest != 0; rest &= rest - 1) {
      floor = std::max(floor, offset[static_cast<std::size_t>(std::countr_zero(rest))]);
    }
    if (offset[static_cast<std::size_t>(i)] > floor) {
      om.members |= Mask{1} << i;
      om.values.push_back(offset[static_cast<std::size_t>(i)]);
    }
  }
  return om;
}

OrderMap map_from_kekule(const StripSpec& spec, const KekuleAssignment& ka) {
  return map_from_kekule(spec, build_poset(spec), ka);
}

namespace {

// Strict maps on the members of A in lexicographic value order.
template <typename Fn>
void for_each_strict_map(const DibPoset& poset, Mask members, int n, Fn&& fn) {
  const std::vector<int> idx = member_indices(members);
  const std::size_t size = idx.size();
  std::vector<int> values(size, 0);
  auto recurse = [&](auto& self, std::size_t a) -> void {
    if (a == size) {
      fn(static_cast<const std::vector<int>&>(values));
      return;
    }
    int lo = 1;
    int hi = n;
    for (std::size_t b = 0; b < a; ++b) {
      if (poset.less(idx[b], idx[a])) lo = std::max(lo, values[b] + 1);
      if (poset.less(idx[a], idx[b])) hi = std::min(hi, values[b] - 1);
    }
    for (int v = lo; v <= hi; ++v) {
      values[a] = v;
      self(self, a + 1);
    }
  };
  recurse(recurse, 0);
}

}  // namespace

void for_each_kekule(const StripSpec& spec, const std::function<void(const KekuleRecord&)>& fn) {
  require_valid(spec);
  if (interface_profile(spec).min_order() < 0) return;
  const DibPoset poset = build_poset(spec);
  for (auto it = induced_subposets(poset).begin(), end = induced_subposets(poset).end(); it != end; ++it) {
    const Mask members = it.mask();
    for_each_strict_map(poset, members, spec.n, [&](const std::vector<int>& values) {
      KekuleRecord rec;
      rec.map.members = members;
      rec.map.values = values;
      rec.assignment = kekule_from_map(spec, poset, rec.map);
      fn(rec);
    });
  }
}

std::vector<KekuleRecord> enumerate_kekule(const StripSpec& spec) {
  std::vector<KekuleRecord> out;
  for_each_kekule(spec, [&](const KekuleRecord& r) { out.push_back(r); });
  return out;
}

Word attributed_extension(const DibPoset& poset, const OrderMap& om) {
  const DibPoset sub = poset.induced(om.members);
  const NaturalLabeling lab = natural_labeling(sub);
  std::vector<int> order(static_cast<std::size_t>(sub.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int va = om.values[static_cast<std::size_t>(a)];
    const int vb = om.values[static_cast<std::size_t>(b)];
    if (va != vb) return va < vb;
    return lab.label(a) > lab.label(b);
  });
  Word w;
  for (int i : order) w.push_back(lab.label(i));
  return w;
}

int ClarCoverRecord::order() const { return std::popcount(aromatic); }

void for_each_clar_cover(const StripSpec& spec, const std::function<void(const ClarCoverRecord&)>& fn) {
  require_valid(spec);
  if (interface_profile(spec).min_order() < 0) return;
  const DibPoset poset = build_poset(spec);
  for_each_kekule(spec, [&](const KekuleRecord& k) {
    ClarCoverRecord rec;
    rec.base = k.assignment;
    rec.map = k.map;
    rec.extension = attributed_extension(poset, k.map);
    // Every subset of the proper sextets, ascending as masks over A.
    for (Mask sub = 0;; sub = (sub - k.map.members) & k.map.members) {
      rec.aromatic = sub;
      fn(rec);
      if (sub == k.map.members) break;
    }
  });
}

std::vector<ClarCoverRecord> generate_clar_covers(const StripSpec& spec) {
  std::vector<ClarCoverRecord> out;
  for_each_clar_cover(spec, [&](const ClarCoverRecord& r) { out.push_back(r); });
  return out;
}

}  // namespace zz
