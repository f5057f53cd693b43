#pragma once

// The poset S of double interface bonds (DIBs) of a Kekulean regular strip.
//
// Element s_{k,j} stands for the j-th double bond (from the left) of
// interface i_k, for j in [1, ord(i_k)]. Two DIBs of adjacent interfaces
// are related when the lower one is the next double interface bond to the
// right of the other inside their common fragment.

#include <compare>
#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zz/strip.hpp"

namespace zz {

struct Dib {
  int k = 0;  // interface index
  int j = 0;  // rank among the double bonds of i_k
  friend auto operator<=>(const Dib&, const Dib&) = default;
};

using Mask = std::uint64_t;
inline constexpr int kMaxPosetSize = 64;

class DibPoset {
 public:
  DibPoset() = default;

  // `relations` are (lower, upper) element index pairs generating the order.
  // The stored cover set is their transitive reduction. Throws
  // InvalidArgument on cycles, self loops or out-of-range indices.
  DibPoset(std::vector<Dib> elements, const std::vector<std::pair<int, int>>& relations);

  int size() const { return static_cast<int>(elements_.size()); }
  bool empty() const { return elements_.empty(); }
  const std::vector<Dib>& elements() const { return elements_; }
  const Dib& element(int i) const { return elements_.at(static_cast<std::size_t>(i)); }
  int index_of(const Dib& d) const;  // -1 when absent

  // Hasse diagram edges (lower, upper), sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  // Strict order: a <_S b.
  bool less(int a, int b) const { return (below_[static_cast<std::size_t>(b)] >> a) & 1U; }
  bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

  // Elements strictly below / above i as bitmasks over element indices.
  Mask below(int i) const { return below_.at(static_cast<std::size_t>(i)); }
  Mask above(int i) const { return above_.at(static_cast<std::size_t>(i)); }

  Mask full_mask() const;

  // Induced subposet on the selected elements; element order is kept.
  DibPoset induced(Mask members) const;
  DibPoset induced(std::span<const int> members) const;

  friend bool operator==(const DibPoset& a, const DibPoset& b) {
    return a.elements_ == b.elements_ && a.covers_ == b.covers_;
  }

 private:
  std::vector<Dib> elements_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<Mask> below_;
  std::vector<Mask> above_;
};

// Builds S for a valid Kekulean strip. Throws InvalidStrip or NotKekulean.
DibPoset build_poset(const StripSpec& spec);

// Synthetic posets used for testing the polynomial machinery.
DibPoset make_chain(int p);
DibPoset make_antichain(int p);
// Zig-zag fence a_1 < a_2 > a_3 < a_4 ...
DibPoset make_fence(int p);

// Lazily materialises every induced subposet in ascending bitmask order.
class SubposetRange {
 public:
  class iterator {
   public:
    using value_type = DibPoset;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::shared_ptr<const DibPoset> poset, std::uint64_t mask) : poset_(std::move(poset)), mask_(mask) {}

    DibPoset operator*() const { return poset_->induced(mask_); }
    Mask mask() const { return mask_; }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      iterator tmp = *this;
      ++mask_;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    std::shared_ptr<const DibPoset> poset_;
    std::uint64_t mask_ = 0;
  };

  explicit SubposetRange(const DibPoset& poset);
  iterator begin() const { return iterator(poset_, 0); }
  iterator end() const { return iterator(poset_, count_); }
  std::uint64_t size() const { return count_; }

 private:
  // Shared with the iterators, so temporaries of either stay valid.
  std::shared_ptr<const DibPoset> poset_;
  std::uint64_t count_;
};

// Throws GuardExceeded when the poset has 63 or more elements.
SubposetRange induced_subposets(const DibPoset& poset);

// An order-preserving bijection elements -> [1, p].
struct NaturalLabeling {
  std::vector<int> label_of;    // element index -> label
  std::vector<int> element_of;  // label - 1 -> element index

  int label(int element) const { return label_of.at(static_cast<std::size_t>(element)); }
  int element(int label) const { return element_of.at(static_cast<std::size_t>(label - 1)); }
  int size() const { return static_cast<int>(label_of.size()); }
};

// Canonical labeling: repeatedly remove the minimal element with the
// lexicographically smallest (j, k).
NaturalLabeling natural_labeling(const DibPoset& poset);

// Uniformly picks among the minimal elements at every removal step.
NaturalLabeling random_natural_labeling(const DibPoset& poset, std::mt19937_64& rng);

// Builds a labeling from label_of, checking it is a natural labeling.
NaturalLabeling labeling_from_labels(const DibPoset& poset, std::vector<int> label_of);

bool is_natural_labeling(const DibPoset& poset, const NaturalLabeling& labeling);

std::string dib_name(const Dib& d);  // "s_{k,j}"

// Graphviz rendering of the Hasse diagram, edges drawn from lower to upper.
std::string to_dot(const DibPoset& poset, const std::string& graph_name = "dib_poset");

}  // namespace zz
