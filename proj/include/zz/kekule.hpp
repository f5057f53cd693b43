#pragma once

// Kekule structures of a strip as pairs (A, mu): A an induced subposet of
// the DIB poset and mu a strictly order-preserving map A -> [n]. Each
// structure is stored only through the positions of its double interface
// bonds; those determine every other bond.

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "zz/extensions.hpp"
#include "zz/poset.hpp"
#include "zz/strip.hpp"

namespace zz {

// Positions of the double bonds of every interface. positions[k-1][j-1]
// is the position p in [1, |i_k|] of s_{k,j}, meaning the double bond is
// the p-th vertical bond of i_k from the left.
struct KekuleAssignment {
  std::vector<std::vector<int>> positions;

  int position(const Dib& d) const {
    return positions.at(static_cast<std::size_t>(d.k - 1)).at(static_cast<std::size_t>(d.j - 1));
  }

  friend auto operator<=>(const KekuleAssignment&, const KekuleAssignment&) = default;
};

struct OrderMap {
  Mask members = 0;         // A, over poset element indices
  std::vector<int> values;  // mu, one entry per member in ascending index order

  friend bool operator==(const OrderMap&, const OrderMap&) = default;
};

// Indices of the members of A, ascending.
std::vector<int> member_indices(Mask members);

// Throws InvalidArgument unless om is a strictly order-preserving map
// A -> [n] on the poset.
void check_order_map(const DibPoset& poset, const OrderMap& om, int n);

// The unique structure whose proper-sextet DIBs are A with offsets mu.
KekuleAssignment kekule_from_map(const StripSpec& spec, const DibPoset& poset, const OrderMap& om);
KekuleAssignment kekule_from_map(const StripSpec& spec, const OrderMap& om);

// Throws InvalidArgument when the positions are out of range or the double
// interface bonds of some fragment do not alternate between its two
// interfaces starting from the interface of its first bond.
void check_alternation(const StripSpec& spec, const KekuleAssignment& ka);

// Inverse of kekule_from_map. A_K collects the DIBs whose offset
// pos - j exceeds that of every DIB below them.
OrderMap map_from_kekule(const StripSpec& spec, const DibPoset& poset, const KekuleAssignment& ka);
OrderMap map_from_kekule(const StripSpec& spec, const KekuleAssignment& ka);

struct KekuleRecord {
  OrderMap map;
  KekuleAssignment assignment;
};

// Calls fn(record) for every Kekule structure: subsets A by ascending mask,
// then maps mu in lexicographic order. Nothing is emitted for
// non-Kekulean strips.
void for_each_kekule(const StripSpec& spec, const std::function<void(const KekuleRecord&)>& fn);
std::vector<KekuleRecord> enumerate_kekule(const StripSpec& spec);

// The linear extension of the induced poset A (canonical labeling) that a
// strict map is attributed to: members sorted by value, ties by label
// descending. Exactly C(n + des(v), |A|) maps land on each extension v.
Word attributed_extension(const DibPoset& poset, const OrderMap& om);

struct ClarCoverRecord {
  KekuleAssignment base;
  OrderMap map;
  Mask aromatic = 0;  // subset of map.members promoted to aromatic rings
  Word extension;     // attributed_extension of map

  int order() const;
};

// For each Kekule structure, all 2^|A| choices of aromatic rings among its
// proper sextets, in ascending mask order.
void for_each_clar_cover(const StripSpec& spec, const std::function<void(const ClarCoverRecord&)>& fn);
std::vector<ClarCoverRecord> generate_clar_covers(const StripSpec& spec);

}  // namespace zz
