#pragma once

// Brute-force ground truth on the explicit strip graph: perfect matchings,
// proper sextets and Clar covers enumerated straight from their
// definitions.

#include <functional>
#include <vector>

#include "zz/kekule.hpp"
#include "zz/polynomial.hpp"
#include "zz/strip.hpp"

namespace zz {

inline constexpr int kDefaultMaxVertices = 120;

// Edge ids of a perfect matching, ascending.
using Matching = std::vector<int>;

// Which three matched bonds make a hexagon a proper sextet.
enum class SextetOrientation {
  standard,  // right vertical, upper-left and lower-left slants
  mirrored,  // left vertical, upper-right and lower-right slants
};

struct ExplicitClarCover {
  std::vector<int> aromatic;  // hexagon indices into graph.hexagons(), ascending
  Matching matching;          // perfect matching of the remaining vertices

  int order() const { return static_cast<int>(aromatic.size()); }
};

// Throws GuardExceeded when the graph has more than max_vertices vertices.
void check_vertex_guard(const BenzenoidGraph& g, int max_vertices);

// Branches on the edges of the lowest-id uncovered vertex, so matchings
// come out in lexicographic order of their edge lists.
void for_each_perfect_matching(const BenzenoidGraph& g, const std::function<void(const Matching&)>& fn,
                               int max_vertices = kDefaultMaxVertices);
std::vector<Matching> enumerate_perfect_matchings(const BenzenoidGraph& g,
                                                  int max_vertices = kDefaultMaxVertices);

int count_proper_sextets(const BenzenoidGraph& g, const Matching& m,
                         SextetOrientation orientation = SextetOrientation::standard);

// Every vertex-disjoint hexagon set together with every perfect matching of
// what is left.
std::vector<ExplicitClarCover> enumerate_clar_covers(const BenzenoidGraph& g,
                                                     int max_vertices = kDefaultMaxVertices);

// c_k histogram of cover orders as a polynomial.
Polynomial zz_from_covers(const std::vector<ExplicitClarCover>& covers);

// a(B, k): matchings with exactly k proper sextets.
std::vector<BigInt> sextet_histogram(const BenzenoidGraph& g,
                                     SextetOrientation orientation = SextetOrientation::standard,
                                     int max_vertices = kDefaultMaxVertices);

// sum_k a(B, k) (1 + x)^k.
Polynomial zz_from_matchings(const BenzenoidGraph& g,
                             SextetOrientation orientation = SextetOrientation::standard,
                             int max_vertices = kDefaultMaxVertices);

// Double vertical bonds of every interface, left to right.
KekuleAssignment extract_ki(const BenzenoidGraph& g, const Matching& m);

}  // namespace zz
