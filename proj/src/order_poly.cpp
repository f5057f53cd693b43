#include "zz/order_poly.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>

#include "zz/error.hpp"

namespace zz {

int subset_guard() {
  if (const char* env = std::getenv("ZZ_GUARD_P")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v < 63) return static_cast<int>(v);
  }
  return kDefaultSubsetGuard;
}

BigInt strict_order_poly(const DibPoset& poset, int n) {
  if (n < 0) return 0;
  const int p = poset.size();
  const NaturalLabeling lab = natural_labeling(poset);
  BigInt total = 0;
  for_each_linear_extension(poset, lab, [&](const Word& w) {
    total += binomial(n + descent_stats(w).count, p);
  });
  return total;
}

std::vector<std::vector<int>> brute_force_strict_maps(const DibPoset& poset, int n,
                                                      long long max_assignments) {
  const int p = poset.size();
  long long space = 1;
  for (int i = 0; i < p && n > 0; ++i) {
    space *= n;
    if (space > max_assignments) {
      throw GuardExceeded("brute force over " + std::to_string(n) + "^" + std::to_string(p) +
                          " assignments exceeds the guard");
    }
  }
  std::vector<std::vector<int>> out;
  if (p == 0) {
    out.emplace_back();
    return out;
  }
  if (n < 1) return out;
  std::vector<int> values(static_cast<std::size_t>(p), 1);
  for (;;) {
    bool ok = true;
    for (auto [a, b] : poset.covers()) {
      if (values[static_cast<std::size_t>(a)] >= values[static_cast<std::size_t>(b)]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(values);
    // Odometer with the last element changing fastest.
    int i = p - 1;
    while (i >= 0 && values[static_cast<std::size_t>(i)] == n) values[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++values[static_cast<std::size_t>(i)];
  }
  return out;
}

Polynomial extended_poly_subposet_sum(const DibPoset& poset, int n) {
  const int p = poset.size();
  const int guard = subset_guard();
  if (p > guard) {
    throw GuardExceeded("subset enumeration needs p <= " + std::to_string(guard) + ", got p = " +
                        std::to_string(p) + " (set ZZ_GUARD_P to raise)");
  }
  const std::size_t count = std::size_t{1} << p;

  // Maximal elements of every subset: the candidates for the top value.
  std::vector<Mask> maximal(count, 0);
  for (std::size_t s = 0; s < count; ++s) {
    const Mask set = s;
    for (Mask rest = set; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      if ((poset.above(i) & set) == 0) maximal[s] |= Mask{1} << i;
    }
  }

  // maps[s] = strict maps from the subset s into [t]. A map into [t] puts
  // some set of maximal elements at t and the rest into [t-1].
  std::vector<BigInt> maps(count, 0);
  maps[0] = 1;
  std::vector<BigInt> next(count);
  for (int t = 1; t <= n; ++t) {
    for (std::size_t s = 0; s < count; ++s) {
      BigInt acc = 0;
      const Mask top = maximal[s];
      for (Mask u = top;; u = (u - 1) & top) {
        acc += maps[s & ~u];
        if (u == 0) break;
      }
      next[s] = std::move(acc);
    }
    std::swap(maps, next);
  }

  std::vector<BigInt> coeffs(static_cast<std::size_t>(p) + 1, 0);
  for (std::size_t s = 0; s < count; ++s) coeffs[static_cast<std::size_t>(std::popcount(s))] += maps[s];
  return Polynomial(std::move(coeffs));
}

namespace {

Polynomial extension_sum(int p, int n, const std::vector<ClosedFormGroup>& groups) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(p) + 1, 0);
  for (const ClosedFormGroup& g : groups) {
    for (int k = g.fix; k <= p; ++k) {
      coeffs[static_cast<std::size_t>(k)] += g.mult * binomial(p - g.fix, k - g.fix) * binomial(n + g.des, k);
    }
  }
  return Polynomial(std::move(coeffs));
}

std::vector<ClosedFormGroup> group_extensions(const DibPoset& poset, const NaturalLabeling& labeling) {
  if (!is_natural_labeling(poset, labeling)) throw InvalidArgument("labeling is not natural");
  std::map<std::pair<int, int>, BigInt> tally;
  for_each_linear_extension(poset, labeling, [&](const Word& w) {
    tally[{descent_stats(w).count, fixed_labels(w, poset, labeling).count}] += 1;
  });
  std::vector<ClosedFormGroup> groups;
  for (auto& [key, mult] : tally) groups.push_back({key.first, key.second, mult});
  return groups;
}

}  // namespace

Polynomial extended_poly_extension_formula(const DibPoset& poset, const NaturalLabeling& labeling,
                                           int n) {
  return extension_sum(poset.size(), n, group_extensions(poset, labeling));
}

Polynomial zz_polynomial(const StripSpec& spec) {
  require_valid(spec);
  if (interface_profile(spec).min_order() < 0) return {};
  return closed_form(spec).evaluate(spec.n);
}

std::vector<BigInt> a_coefficients(const StripSpec& spec) {
  const DibPoset poset = build_poset(spec);
  const Polynomial e = extended_poly_extension_formula(poset, natural_labeling(poset), spec.n);
  std::vector<BigInt> a(e.coeffs());
  return a;
}

BigInt ClosedForm::extension_count() const {
  BigInt total = 0;
  for (const auto& g : groups) total += g.mult;
  return total;
}

Polynomial ClosedForm::extended(int n) const { return extension_sum(p, n, groups); }

Polynomial ClosedForm::evaluate(int n) const { return extended(n).shift_by_one(); }

namespace {

std::string offset(const std::string& base, int d) {
  if (d == 0) return base;
  return base + (d > 0 ? "+" : "-") + std::to_string(d > 0 ? d : -d);
}

}  // namespace

std::string ClosedForm::to_text() const {
  std::string terms;
  for (const auto& g : groups) {
    if (!terms.empty()) terms += " + ";
    if (g.mult != 1) terms += g.mult.get_str() + " ";
    terms += "C(" + std::to_string(p - g.fix) + "," + offset("k", -g.fix) + ") C(" + offset("n", g.des) + ",k)";
  }
  return "sum_{k=0}^{" + std::to_string(p) + "} [" + terms + "] (1+x)^k";
}

std::string ClosedForm::to_latex() const {
  std::string terms;
  for (const auto& g : groups) {
    if (!terms.empty()) terms += " + ";
    if (g.mult != 1) terms += g.mult.get_str();
    terms += "\\binom{" + std::to_string(p - g.fix) + "}{" + offset("k", -g.fix) + "}\\binom{" +
             offset("n", g.des) + "}{k}";
  }
  return "\\sum_{k=0}^{" + std::to_string(p) + "} \\left[" + terms + "\\right] (1+x)^k";
}

ClosedForm closed_form(const DibPoset& poset, const NaturalLabeling& labeling) {
  return ClosedForm{poset.size(), group_extensions(poset, labeling)};
}

ClosedForm closed_form(const StripSpec& spec) {
  const DibPoset poset = build_poset(spec);
  return closed_form(poset, natural_labeling(poset));
}

}  // namespace zz
