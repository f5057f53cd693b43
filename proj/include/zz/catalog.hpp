#pragma once

// Batch enumeration of regular strips up to a given number of tiers.

#include <optional>
#include <vector>

#include "zz/order_poly.hpp"
#include "zz/strip.hpp"

namespace zz {

// Shape sequences with 1..max_tiers tiers that start with W, end with N and
// return to ord(i_m) = 1. Sorted by tier count, then by shape rank
// W < R < L < N.
std::vector<std::vector<Shape>> shape_sequences(int max_tiers);

// Smallest n for which every tier holds a hexagon.
int min_length(const std::vector<Shape>& shapes);

// Images under left-right mirroring (R <-> L), 180 degree rotation
// (reverse, W <-> N) and their composition. The original comes first.
std::vector<std::vector<Shape>> symmetry_images(const std::vector<Shape>& shapes);

// The smallest image by shape rank.
std::vector<Shape> canonical_shapes(const std::vector<Shape>& shapes);

bool shape_rank_less(const std::vector<Shape>& a, const std::vector<Shape>& b);

struct CatalogEntry {
  StripSpec spec;  // n = min_length(shapes)
  std::vector<int> orders;
  bool kekulean = false;
  std::optional<ClosedForm> form;  // only for Kekulean strips
};

// Closed forms of every sequence, one worker per hardware thread unless
// `workers` says otherwise. With dedup only canonical representatives are
// kept. Output order matches shape_sequences.
std::vector<CatalogEntry> build_catalog(int max_tiers, bool dedup, unsigned workers = 0);

// Every valid Kekulean (shapes, n) with 1..max_tiers tiers and n in
// [1, max_n], no symmetry reduction.
std::vector<StripSpec> kekulean_strips(int max_tiers, int max_n);

}  // namespace zz
