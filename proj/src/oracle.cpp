#include "zz/oracle.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "zz/error.hpp"

namespace zz {

void check_vertex_guard(const BenzenoidGraph& g, int max_vertices) {
  if (g.vertex_count() > max_vertices) {
    throw GuardExceeded("graph has " + std::to_string(g.vertex_count()) + " vertices, oracle limit is " +
                        std::to_string(max_vertices));
  }
}

namespace {

// Enumerates perfect matchings of the vertices not marked in `covered`.
class MatchingSearch {
 public:
  MatchingSearch(const BenzenoidGraph& g, std::vector<char> covered,
                 const std::function<void(const Matching&)>& fn)
      : g_(g), covered_(std::move(covered)), fn_(fn) {}

  void run() { recurse(0); }

 private:
  void recurse(int from) {
    int v = from;
    while (v < g_.vertex_count() && covered_[static_cast<std::size_t>(v)]) ++v;
    if (v == g_.vertex_count()) {
      Matching sorted = chosen_;
      std::sort(sorted.begin(), sorted.end());
      fn_(sorted);
      return;
    }
    covered_[static_cast<std::size_t>(v)] = 1;
    for (int e : g_.incident(v)) {
      const int w = g_.other_end(e, v);
      if (covered_[static_cast<std::size_t>(w)]) continue;
      covered_[static_cast<std::size_t>(w)] = 1;
      chosen_.push_back(e);
      recurse(v + 1);
      chosen_.pop_back();
      covered_[static_cast<std::size_t>(w)] = 0;
    }
    covered_[static_cast<std::size_t>(v)] = 0;
  }

  const BenzenoidGraph& g_;
  std::vector<char> covered_;
  const std::function<void(const Matching&)>& fn_;
  Matching chosen_;
};

}  // namespace

void for_each_perfect_matching(const BenzenoidGraph& g, const std::function<void(const Matching&)>& fn,
                               int max_vertices) {
  check_vertex_guard(g, max_vertices);
  MatchingSearch(g, std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0), fn).run();
}

std::vector<Matching> enumerate_perfect_matchings(const BenzenoidGraph& g, int max_vertices) {
  std::vector<Matching> out;
  for_each_perfect_matching(g, [&](const Matching& m) { out.push_back(m); }, max_vertices);
  return out;
}

int count_proper_sextets(const BenzenoidGraph& g, const Matching& m, SextetOrientation orientation) {
  std::vector<char> in(static_cast<std::size_t>(g.edge_count()), 0);
  for (int e : m) in[static_cast<std::size_t>(e)] = 1;
  const std::array<HexBond, 3> pattern =
      orientation == SextetOrientation::standard
          ? std::array<HexBond, 3>{kRightVertical, kUpperLeft, kLowerLeft}
          : std::array<HexBond, 3>{kLeftVertical, kUpperRight, kLowerRight};
  int count = 0;
  for (const Hexagon& h : g.hexagons()) {
    bool proper = true;
    for (HexBond b : pattern) proper = proper && in[static_cast<std::size_t>(h.edges[b])];
    if (proper) ++count;
  }
  return count;
}

std::vector<ExplicitClarCover> enumerate_clar_covers(const BenzenoidGraph& g, int max_vertices) {
  check_vertex_guard(g, max_vertices);
  const auto& hexes = g.hexagons();
  const int h = static_cast<int>(hexes.size());
  std::vector<ExplicitClarCover> out;
  std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> aromatic;

  // Include/exclude each hexagon in index order; a hexagon may join only if
  // it shares no vertex with those already chosen.
  auto recurse = [&](auto& self, int next) -> void {
    if (next == h) {
      MatchingSearch(g, covered, [&](const Matching& m) { out.push_back({aromatic, m}); }).run();
      return;
    }
    const Hexagon& hex = hexes[static_cast<std::size_t>(next)];
    const bool free = std::none_of(hex.vertices.begin(), hex.vertices.end(),
                                   [&](int v) { return covered[static_cast<std::size_t>(v)] != 0; });
    self(self, next + 1);
    if (!free) return;
    for (int v : hex.vertices) covered[static_cast<std::size_t>(v)] = 1;
    aromatic.push_back(next);
    self(self, next + 1);
    aromatic.pop_back();
    for (int v : hex.vertices) covered[static_cast<std::size_t>(v)] = 0;
  };
  recurse(recurse, 0);
  return out;
}

Polynomial zz_from_covers(const std::vector<ExplicitClarCover>& covers) {
  Polynomial p;
  for (const auto& c : covers) p.add_term(1, c.order());
  return p;
}

std::vector<BigInt> sextet_histogram(const BenzenoidGraph& g, SextetOrientation orientation,
                                     int max_vertices) {
  std::vector<BigInt> a;
  for_each_perfect_matching(
      g,
      [&](const Matching& m) {
        const auto k = static_cast<std::size_t>(count_proper_sextets(g, m, orientation));
        if (a.size() <= k) a.resize(k + 1, 0);
        a[k] += 1;
      },
      max_vertices);
  return a;
}

Polynomial zz_from_matchings(const BenzenoidGraph& g, SextetOrientation orientation, int max_vertices) {
  const std::vector<BigInt> a = sextet_histogram(g, orientation, max_vertices);
  return Polynomial(a).shift_by_one();
}

KekuleAssignment extract_ki(const BenzenoidGraph& g, const Matching& m) {
  std::vector<char> in(static_cast<std::size_t>(g.edge_count()), 0);
  for (int e : m) in[static_cast<std::size_t>(e)] = 1;
  KekuleAssignment ka;
  ka.positions.resize(static_cast<std::size_t>(g.tiers()));
  for (int k = 1; k <= g.tiers(); ++k) {
    const auto& edges = g.interface_edges(k);
    for (std::size_t p = 0; p < edges.size(); ++p) {
      if (in[static_cast<std::size_t>(edges[p])]) ka.positions[static_cast<std::size_t>(k - 1)].push_back(static_cast<int>(p) + 1);
    }
  }
  return ka;
}

}  // namespace zz
