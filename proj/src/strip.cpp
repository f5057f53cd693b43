#include "zz/strip.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "zz/error.hpp"

namespace zz {

namespace {

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view token, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("expected integer for " + std::string(what) + ", got '" +
                     std::string(token) + "'");
  }
  return value;
}

// Change of |i_k| (and of the tier offset) caused by fragment f_k, k >= 2.
int size_step(Shape s) {
  switch (s) {
    case Shape::W: return +1;
    case Shape::N: return -1;
    case Shape::R:
    case Shape::L: return 0;
  }
  return 0;
}

int offset_step(Shape s) {
  switch (s) {
    case Shape::W:
    case Shape::L: return -1;
    case Shape::N:
    case Shape::R: return +1;
  }
  return 0;
}

}  // namespace

char to_char(Shape s) { return static_cast<char>(s); }

Shape shape_from_char(char c) {
  switch (c) {
    case 'W': return Shape::W;
    case 'N': return Shape::N;
    case 'R': return Shape::R;
    case 'L': return Shape::L;
    default:
      throw ParseError(std::string("unknown shape letter '") + c + "'");
  }
}

std::string StripSpec::shape_string() const {
  std::string s;
  s.reserve(shapes.size());
  for (Shape sh : shapes) s.push_back(to_char(sh));
  return s;
}

StripSpec make_parallelogram(int tiers, int n) {
  if (tiers < 1) throw ParseError("parallelogram needs at least one tier");
  if (n < 1) throw ParseError("strip length n must be >= 1");
  StripSpec spec;
  spec.shapes.push_back(Shape::W);
  for (int i = 1; i < tiers; ++i) spec.shapes.push_back(Shape::R);
  spec.shapes.push_back(Shape::N);
  spec.n = n;
  return spec;
}

StripSpec parse_strip(std::string_view text) {
  auto tokens = split_ws(text);
  if (tokens.empty()) throw ParseError("empty strip description");
  if (tokens[0] == "M") {
    if (tokens.size() != 3) throw ParseError("expected 'M <tiers> <n>'");
    int tiers = parse_int(tokens[1], "tiers");
    int n = parse_int(tokens[2], "n");
    return make_parallelogram(tiers, n);
  }
  if (tokens.size() != 2) throw ParseError("expected '<shape-letters> <n>'");
  StripSpec spec;
  for (char c : tokens[0]) spec.shapes.push_back(shape_from_char(c));
  if (spec.shapes.size() < 2) {
    throw ParseError("a strip needs at least two fragment shapes");
  }
  spec.n = parse_int(tokens[1], "n");
  if (spec.n < 1) throw ParseError("strip length n must be >= 1");
  return spec;
}

std::string format_strip(const StripSpec& spec) {
  return spec.shape_string() + " " + std::to_string(spec.n);
}

int InterfaceProfile::min_order() const {
  return orders.empty() ? 0 : *std::min_element(orders.begin(), orders.end());
}

int InterfaceProfile::total_order() const {
  int total = 0;
  for (int o : orders) total += std::max(o, 0);
  return total;
}

InterfaceProfile interface_profile(const StripSpec& spec) {
  InterfaceProfile profile;
  profile.n = spec.n;
  const int m = spec.tiers();
  if (m < 1) return profile;
  int size = spec.n + 1;
  for (int k = 1; k <= m; ++k) {
    if (k >= 2) size += size_step(spec.shapes[static_cast<std::size_t>(k - 1)]);
    profile.sizes.push_back(size);
    profile.orders.push_back(size - spec.n);
  }
  return profile;
}

std::vector<FragmentInfo> fragments(const StripSpec& spec) {
  std::vector<FragmentInfo> out;
  const int count = static_cast<int>(spec.shapes.size());
  for (int kappa = 1; kappa <= count; ++kappa) {
    FragmentInfo f;
    f.index = kappa;
    f.shape = spec.shapes[static_cast<std::size_t>(kappa - 1)];
    f.upper_interface = kappa - 1;
    f.lower_interface = kappa;
    const bool first_lower = f.shape == Shape::W || f.shape == Shape::L;
    const bool last_lower = f.shape == Shape::W || f.shape == Shape::R;
    f.first_bond_interface = first_lower ? f.lower_interface : f.upper_interface;
    f.last_bond_interface = last_lower ? f.lower_interface : f.upper_interface;
    out.push_back(f);
  }
  return out;
}

ValidationReport validate(const StripSpec& spec) {
  ValidationReport r;
  r.has_tiers = spec.tiers() >= 1;
  r.length_positive = spec.n >= 1;
  if (!r.has_tiers) r.problems.push_back("strip needs at least one tier (two shapes)");
  if (!r.length_positive) r.problems.push_back("strip length n must be >= 1");
  if (spec.shapes.empty()) return r;

  r.first_is_w = spec.shapes.front() == Shape::W;
  r.last_is_n = spec.shapes.back() == Shape::N;
  if (!r.first_is_w) r.problems.push_back("first fragment must have shape W");
  if (!r.last_is_n) r.problems.push_back("last fragment must have shape N");
  if (!r.has_tiers) return r;

  const InterfaceProfile profile = interface_profile(spec);
  const int m = profile.tiers();
  r.last_order_one = profile.order(m) == 1;
  if (!r.last_order_one) {
    r.problems.push_back("ord(i_" + std::to_string(m) + ") = " +
                         std::to_string(profile.order(m)) +
                         ", bottom tier length differs from n");
  }
  r.tiers_nonempty = true;
  for (int k = 1; k <= m; ++k) {
    if (profile.size(k) < 2) {
      r.tiers_nonempty = false;
      r.problems.push_back("tier " + std::to_string(k) + " has no hexagon (|i_" +
                           std::to_string(k) + "| = " + std::to_string(profile.size(k)) + ")");
    }
  }
  r.is_kekulean = profile.min_order() >= 0;
  return r;
}

void require_valid(const StripSpec& spec) {
  ValidationReport r = validate(spec);
  if (r.valid()) return;
  std::string msg = "invalid strip '" + format_strip(spec) + "'";
  for (const auto& p : r.problems) msg += "; " + p;
  throw InvalidStrip(msg);
}

std::vector<int> tier_offsets(const StripSpec& spec) {
  std::vector<int> x;
  int offset = 0;
  for (int k = 1; k <= spec.tiers(); ++k) {
    if (k >= 2) offset += offset_step(spec.shapes[static_cast<std::size_t>(k - 1)]);
    x.push_back(offset);
  }
  return x;
}

BenzenoidGraph::BenzenoidGraph(int tiers, int n, std::vector<LatticePoint> points,
                               std::vector<GraphEdge> edges, std::vector<Hexagon> hexagons)
    : tiers_(tiers),
      n_(n),
      points_(std::move(points)),
      edges_(std::move(edges)),
      hexagons_(std::move(hexagons)),
      incident_(points_.size()),
      interfaces_(static_cast<std::size_t>(tiers)) {
  for (int e = 0; e < edge_count(); ++e) {
    const GraphEdge& ge = edges_[static_cast<std::size_t>(e)];
    incident_[static_cast<std::size_t>(ge.u)].push_back(e);
    incident_[static_cast<std::size_t>(ge.v)].push_back(e);
    if (ge.kind == EdgeKind::interface) {
      auto& list = interfaces_[static_cast<std::size_t>(ge.interface - 1)];
      if (list.size() < static_cast<std::size_t>(ge.position)) {
        list.resize(static_cast<std::size_t>(ge.position), -1);
      }
      list[static_cast<std::size_t>(ge.position - 1)] = e;
    }
  }
}

int BenzenoidGraph::other_end(int edge, int vertex) const {
  const GraphEdge& e = edges_.at(static_cast<std::size_t>(edge));
  return e.u == vertex ? e.v : e.u;
}

int BenzenoidGraph::interface_edge(int k, int position) const {
  return interface_edges(k).at(static_cast<std::size_t>(position - 1));
}

BenzenoidGraph build_graph(const StripSpec& spec) {
  require_valid(spec);
  const InterfaceProfile profile = interface_profile(spec);
  const std::vector<int> offsets = tier_offsets(spec);
  const int m = spec.tiers();

  struct RawHex {
    int tier, index;
    std::array<LatticePoint, 6> corners;
  };
  std::vector<RawHex> raw;
  std::set<LatticePoint> point_set;
  for (int k = 1; k <= m; ++k) {
    const int hexes = profile.size(k) - 1;
    for (int h = 0; h < hexes; ++h) {
      const int x = offsets[static_cast<std::size_t>(k - 1)] + 2 * h;
      const int top = 2 * k;
      RawHex rh{k, h + 1,
                {LatticePoint{x, top}, LatticePoint{x + 1, top - 1}, LatticePoint{x + 2, top},
                 LatticePoint{x + 2, top + 1}, LatticePoint{x + 1, top + 2},
                 LatticePoint{x, top + 1}}};
      for (const auto& c : rh.corners) point_set.insert(c);
      raw.push_back(rh);
    }
  }

  // Vertex ids follow (y, x) order: top to bottom, then left to right.
  std::vector<LatticePoint> points(point_set.begin(), point_set.end());
  std::sort(points.begin(), points.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  std::map<LatticePoint, int> id_of;
  for (int i = 0; i < static_cast<int>(points.size()); ++i) id_of[points[static_cast<std::size_t>(i)]] = i;

  std::map<std::pair<int, int>, int> edge_id;
  std::vector<GraphEdge> edges;
  auto add_edge = [&](int a, int b) {
    auto key = std::minmax(a, b);
    auto it = edge_id.find(key);
    if (it != edge_id.end()) return it->second;
    // Vertical bonds join points with equal x.
    GraphEdge e{key.first, key.second, EdgeKind::spine, 0, 0};
    const LatticePoint& pa = points[static_cast<std::size_t>(key.first)];
    const LatticePoint& pb = points[static_cast<std::size_t>(key.second)];
    if (pa.x == pb.x) {
      e.kind = EdgeKind::interface;
      e.interface = std::min(pa.y, pb.y) / 2;
      e.position = (pa.x - offsets[static_cast<std::size_t>(e.interface - 1)]) / 2 + 1;
    }
    const int id = static_cast<int>(edges.size());
    edges.push_back(e);
    edge_id.emplace(key, id);
    return id;
  };

  // Hexagon corners in cycle order: upper-left, top, upper-right,
  // lower-right, bottom, lower-left.
  std::vector<Hexagon> hexagons;
  for (const RawHex& rh : raw) {
    Hexagon hex;
    hex.tier = rh.tier;
    hex.index = rh.index;
    for (int i = 0; i < 6; ++i) hex.vertices[static_cast<std::size_t>(i)] = id_of.at(rh.corners[static_cast<std::size_t>(i)]);
    const auto& v = hex.vertices;
    hex.edges[kUpperLeft] = add_edge(v[0], v[1]);
    hex.edges[kUpperRight] = add_edge(v[1], v[2]);
    hex.edges[kRightVertical] = add_edge(v[2], v[3]);
    hex.edges[kLowerRight] = add_edge(v[3], v[4]);
    hex.edges[kLowerLeft] = add_edge(v[4], v[5]);
    hex.edges[kLeftVertical] = add_edge(v[5], v[0]);
    hexagons.push_back(hex);
  }

  // Renumber edges in (u, v) order so ids do not depend on hexagon order.
  std::vector<int> order(edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& ea = edges[static_cast<std::size_t>(a)];
    const auto& eb = edges[static_cast<std::size_t>(b)];
    return std::tie(ea.u, ea.v) < std::tie(eb.u, eb.v);
  });
  std::vector<int> new_id(edges.size());
  std::vector<GraphEdge> sorted_edges;
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_id[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    sorted_edges.push_back(edges[static_cast<std::size_t>(order[i])]);
  }
  for (Hexagon& hex : hexagons) {
    for (int& e : hex.edges) e = new_id[static_cast<std::size_t>(e)];
  }

  return BenzenoidGraph(m, spec.n, std::move(points), std::move(sorted_edges), std::move(hexagons));
}

StripSpec derive_spec(const BenzenoidGraph& graph) {
  const int m = graph.tiers();
  auto bond_x = [&](int edge) {
    return graph.points()[static_cast<std::size_t>(graph.edges()[static_cast<std::size_t>(edge)].u)].x;
  };
  StripSpec spec;
  spec.n = static_cast<int>(graph.interface_edges(1).size()) - 1;
  for (int kappa = 1; kappa <= m + 1; ++kappa) {
    // (x, interface) of every interface bond touching fragment f_kappa.
    std::vector<std::pair<int, int>> bonds;
    for (int k : {kappa - 1, kappa}) {
      if (k < 1 || k > m) continue;
      for (int e : graph.interface_edges(k)) bonds.emplace_back(bond_x(e), k);
    }
    std::sort(bonds.begin(), bonds.end());
    const bool first_lower = bonds.front().second == kappa;
    const bool last_lower = bonds.back().second == kappa;
    Shape s = first_lower ? (last_lower ? Shape::W : Shape::L)
                          : (last_lower ? Shape::R : Shape::N);
    spec.shapes.push_back(s);
  }
  return spec;
}

}  // namespace zz
