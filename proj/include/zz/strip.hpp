#pragma once

// Geometry of regular m-tier benzenoid strips.
//
// A strip with m tiers is cut by horizontal partition lines into m+1
// fragments f_1..f_{m+1}. Interface i_k is the set of vertical bonds of
// tier k; fragment f_k sits between interfaces i_{k-1} (upper) and i_k
// (lower). The shape of every fragment plus the length n of the top tier
// fixes the whole strip.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace zz {

enum class Shape : char { W = 'W', N = 'N', R = 'R', L = 'L' };

char to_char(Shape s);
Shape shape_from_char(char c);  // throws ParseError

struct StripSpec {
  std::vector<Shape> shapes;  // f_1..f_{m+1}
  int n = 1;

  int tiers() const { return static_cast<int>(shapes.size()) - 1; }
  std::string shape_string() const;

  friend bool operator==(const StripSpec&, const StripSpec&) = default;
};

// Named parallelogram constructor: [W, R x (tiers-1), N].
StripSpec make_parallelogram(int tiers, int n);

// Accepts "M <tiers> <n>" or "<shape-letters> <n>", whitespace separated.
StripSpec parse_strip(std::string_view text);

// Inverse of parse_strip for shape-sequence input, e.g. "WWRNN 3".
std::string format_strip(const StripSpec& spec);

// Per-interface sizes and orders. Entry k-1 describes interface i_k.
struct InterfaceProfile {
  int n = 0;
  std::vector<int> sizes;   // |i_k|, number of vertical bonds
  std::vector<int> orders;  // ord(i_k) = |i_k| - n

  int tiers() const { return static_cast<int>(sizes.size()); }
  int size(int k) const { return sizes.at(static_cast<std::size_t>(k - 1)); }
  int order(int k) const { return orders.at(static_cast<std::size_t>(k - 1)); }
  int min_order() const;
  int total_order() const;  // sum of positive orders, i.e. the DIB count
};

InterfaceProfile interface_profile(const StripSpec& spec);

struct FragmentInfo {
  int index = 0;  // kappa in [1, m+1]
  Shape shape = Shape::W;
  int upper_interface = 0;  // kappa - 1; 0 denotes the empty interface i_0
  int lower_interface = 0;  // kappa; m+1 denotes the empty interface
  int first_bond_interface = 0;
  int last_bond_interface = 0;
};

std::vector<FragmentInfo> fragments(const StripSpec& spec);

struct ValidationReport {
  bool has_tiers = false;       // at least one tier
  bool length_positive = false;  // n >= 1
  bool first_is_w = false;
  bool last_is_n = false;
  bool last_order_one = false;  // ord(i_m) == 1
  bool tiers_nonempty = false;  // |i_k| >= 2 for every k
  bool is_kekulean = false;     // min_k ord(i_k) >= 0
  std::vector<std::string> problems;

  bool valid() const {
    return has_tiers && length_positive && first_is_w && last_is_n &&
           last_order_one && tiers_nonempty;
  }
};

ValidationReport validate(const StripSpec& spec);

// Throws InvalidStrip listing the problems when the spec is not valid.
void require_valid(const StripSpec& spec);

// Left offset of every tier in half-hexagon units; entry k-1 is tier k.
std::vector<int> tier_offsets(const StripSpec& spec);

enum class EdgeKind { interface, spine };

// Lattice point. x advances by one per half hexagon; y grows downwards.
// Tier k owns vertical bonds from (x, 2k) to (x, 2k+1).
struct LatticePoint {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct GraphEdge {
  int u = 0;  // u < v
  int v = 0;
  EdgeKind kind = EdgeKind::spine;
  int interface = 0;  // k for interface bonds, 0 otherwise
  int position = 0;   // p in [1, |i_k|] for interface bonds, 0 otherwise
};

// Roles of the six bonds of a hexagon with vertical left/right sides.
enum HexBond : int {
  kLeftVertical = 0,
  kUpperLeft = 1,  // top corner to upper-left corner
  kUpperRight = 2,
  kRightVertical = 3,
  kLowerRight = 4,
  kLowerLeft = 5,  // bottom corner to lower-left corner
};

struct Hexagon {
  int tier = 0;
  int index = 0;  // 1-based, left to right within the tier
  // Cycle order: upper-left corner, top, upper-right, lower-right, bottom,
  // lower-left.
  std::array<int, 6> vertices{};
  // Indexed by HexBond.
  std::array<int, 6> edges{};
};

class BenzenoidGraph {
 public:
  BenzenoidGraph() = default;
  BenzenoidGraph(int tiers, int n, std::vector<LatticePoint> points,
                 std::vector<GraphEdge> edges, std::vector<Hexagon> hexagons);

  int tiers() const { return tiers_; }
  int length() const { return n_; }
  int vertex_count() const { return static_cast<int>(points_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<LatticePoint>& points() const { return points_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::vector<Hexagon>& hexagons() const { return hexagons_; }

  // Incident edge ids of a vertex, ascending.
  const std::vector<int>& incident(int vertex) const { return incident_.at(static_cast<std::size_t>(vertex)); }
  int other_end(int edge, int vertex) const;

  // Edge ids of interface i_k, left to right.
  const std::vector<int>& interface_edges(int k) const { return interfaces_.at(static_cast<std::size_t>(k - 1)); }
  int interface_edge(int k, int position) const;

 private:
  int tiers_ = 0;
  int n_ = 0;
  std::vector<LatticePoint> points_;
  std::vector<GraphEdge> edges_;
  std::vector<Hexagon> hexagons_;
  std::vector<std::vector<int>> incident_;
  std::vector<std::vector<int>> interfaces_;
};

// Realises the strip on the hexagonal lattice. Throws InvalidStrip.
BenzenoidGraph build_graph(const StripSpec& spec);

// Reads the fragment shapes back from a built graph by locating the first
// and last interface bond of every fragment.
StripSpec derive_spec(const BenzenoidGraph& graph);

}  // namespace zz
