#include "zz/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace zz {

namespace {

int rank(Shape s) {
  switch (s) {
    case Shape::W: return 0;
    case Shape::R: return 1;
    case Shape::L: return 2;
    case Shape::N: return 3;
  }
  return 4;
}

// Interface orders do not depend on n.
std::vector<int> orders_of(const std::vector<Shape>& shapes) {
  return interface_profile(StripSpec{shapes, 1}).orders;
}

}  // namespace

bool shape_rank_less(const std::vector<Shape>& a, const std::vector<Shape>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](Shape x, Shape y) { return rank(x) < rank(y); });
}

std::vector<std::vector<Shape>> shape_sequences(int max_tiers) {
  static constexpr Shape kAll[] = {Shape::W, Shape::R, Shape::L, Shape::N};
  std::vector<std::vector<Shape>> out;
  for (int m = 1; m <= max_tiers; ++m) {
    // Interior fragments f_2..f_m, counted in base 4 by shape rank.
    const int interior = m - 1;
    long total = 1;
    for (int i = 0; i < interior; ++i) total *= 4;
    for (long code = 0; code < total; ++code) {
      std::vector<Shape> shapes{Shape::W};
      long c = code;
      std::vector<Shape> mid(static_cast<std::size_t>(interior));
      for (int i = interior - 1; i >= 0; --i) {
        mid[static_cast<std::size_t>(i)] = kAll[c % 4];
        c /= 4;
      }
      shapes.insert(shapes.end(), mid.begin(), mid.end());
      shapes.push_back(Shape::N);
      if (orders_of(shapes).back() == 1) out.push_back(std::move(shapes));
    }
  }
  return out;
}

int min_length(const std::vector<Shape>& shapes) {
  int n = 1;
  for (int ord : orders_of(shapes)) n = std::max(n, 2 - ord);
  return n;
}

std::vector<std::vector<Shape>> symmetry_images(const std::vector<Shape>& shapes) {
  auto mirror = [](std::vector<Shape> s) {
    for (Shape& x : s) {
      if (x == Shape::R) x = Shape::L;
      else if (x == Shape::L) x = Shape::R;
    }
    return s;
  };
  auto rotate = [](std::vector<Shape> s) {
    std::reverse(s.begin(), s.end());
    for (Shape& x : s) {
      if (x == Shape::W) x = Shape::N;
      else if (x == Shape::N) x = Shape::W;
    }
    return s;
  };
  return {shapes, mirror(shapes), rotate(shapes), mirror(rotate(shapes))};
}

std::vector<Shape> canonical_shapes(const std::vector<Shape>& shapes) {
  auto images = symmetry_images(shapes);
  return *std::min_element(images.begin(), images.end(), shape_rank_less);
}

std::vector<CatalogEntry> build_catalog(int max_tiers, bool dedup, unsigned workers) {
  std::vector<CatalogEntry> entries;
  for (auto& shapes : shape_sequences(max_tiers)) {
    if (dedup && canonical_shapes(shapes) != shapes) continue;
    CatalogEntry e;
    e.spec.n = min_length(shapes);
    e.spec.shapes = std::move(shapes);
    e.orders = orders_of(e.spec.shapes);
    e.kekulean = *std::min_element(e.orders.begin(), e.orders.end()) >= 0;
    entries.push_back(std::move(e));
  }

  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(entries.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < entries.size(); i = next++) {
        if (entries[i].kekulean) entries[i].form = closed_form(entries[i].spec);
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 1; id < workers; ++id) pool.emplace_back(work, id);
  work(0);
  for (auto& t : pool) t.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return entries;
}

std::vector<StripSpec> kekulean_strips(int max_tiers, int max_n) {
  std::vector<StripSpec> out;
  for (const auto& shapes : shape_sequences(max_tiers)) {
    const auto orders = orders_of(shapes);
    if (*std::min_element(orders.begin(), orders.end()) < 0) continue;
    for (int n = min_length(shapes); n <= max_n; ++n) out.push_back(StripSpec{shapes, n});
  }
  return out;
}

}  // namespace zz
