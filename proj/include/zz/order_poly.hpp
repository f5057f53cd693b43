#pragma once

// Strict order polynomials and extended strict order polynomials of DIB
// posets, and the Zhang-Zhang polynomial obtained from them.

#include <string>
#include <vector>

#include "zz/extensions.hpp"
#include "zz/polynomial.hpp"
#include "zz/poset.hpp"
#include "zz/strip.hpp"

namespace zz {

inline constexpr int kDefaultSubsetGuard = 20;

// Largest poset size accepted by the subset-sum path. ZZ_GUARD_P overrides
// the default.
int subset_guard();

// Number of strictly order-preserving maps poset -> [n], summed over the
// linear extensions as C(n + des(w), p). Uses the canonical labeling.
BigInt strict_order_poly(const DibPoset& poset, int n);

// Every strictly order-preserving map, as values indexed like the poset's
// elements, in lexicographic order. Throws GuardExceeded when n^p exceeds
// max_assignments.
std::vector<std::vector<int>> brute_force_strict_maps(const DibPoset& poset, int n,
                                                      long long max_assignments = 4'000'000);

// sum over induced subposets Q of (strict maps Q -> [n]) z^|Q|, computed by
// a dynamic programme over element subsets that never looks at linear
// extensions. Throws GuardExceeded when p > subset_guard().
Polynomial extended_poly_subposet_sum(const DibPoset& poset, int n);

// sum_k sum_w C(p - fix(w), k - fix(w)) C(n + des(w), k) z^k.
Polynomial extended_poly_extension_formula(const DibPoset& poset, const NaturalLabeling& labeling,
                                           int n);

// ZZ(x) = E(n, 1 + x). The zero polynomial for non-Kekulean strips.
// Throws InvalidStrip.
Polynomial zz_polynomial(const StripSpec& spec);

// a(S, k): Kekule structures with exactly k proper sextets, i.e. the
// coefficients of E(n, z) in z. Throws InvalidStrip or NotKekulean.
std::vector<BigInt> a_coefficients(const StripSpec& spec);

struct ClosedFormGroup {
  int des = 0;
  int fix = 0;
  BigInt mult = 0;

  friend bool operator==(const ClosedFormGroup&, const ClosedFormGroup&) = default;
};

// sum_k sum_groups mult C(p - fix, k - fix) C(n + des, k) (1 + x)^k with n
// left symbolic. Groups are sorted by (des, fix).
struct ClosedForm {
  int p = 0;
  std::vector<ClosedFormGroup> groups;

  BigInt extension_count() const;
  // E(n, z) as a polynomial in z.
  Polynomial extended(int n) const;
  // ZZ(x) at a concrete n.
  Polynomial evaluate(int n) const;

  std::string to_text() const;
  std::string to_latex() const;

  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

ClosedForm closed_form(const DibPoset& poset, const NaturalLabeling& labeling);
// Throws InvalidStrip or NotKekulean.
ClosedForm closed_form(const StripSpec& spec);

}  // namespace zz
