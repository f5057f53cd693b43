#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "reference_values.hpp"
#include "support.hpp"
#include "zz/catalog.hpp"
#include "zz/error.hpp"
#include "zz/order_poly.hpp"

namespace zz {
namespace {

using test::poly;
using test::strip;

TEST(Binomial, Convention) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(60, 30).get_str(), "118264581564861424");
}

TEST(Polynomial, Arithmetic) {
  const Polynomial a = poly({1, 1});
  EXPECT_EQ(a * a, poly({1, 2, 1}));
  EXPECT_EQ(a + poly({-1, -1}), Polynomial());
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_EQ(poly({6, 6, 1}).evaluate(1), 13);
  EXPECT_EQ(Polynomial::one_plus_x_pow(3), poly({1, 3, 3, 1}));
  EXPECT_EQ(poly({1, 4, 1}).shift_by_one(), poly({6, 6, 1}));
  EXPECT_EQ(poly({6, 6, 1}).shift_by_minus_one(), poly({1, 4, 1}));
}

TEST(Polynomial, ToString) {
  EXPECT_EQ(poly({6, 6, 1}).to_string(), "x^2 + 6x + 6");
  EXPECT_EQ(Polynomial().to_string(), "0");
  EXPECT_EQ(poly({0, 1}).to_string(), "x");
  EXPECT_EQ(poly({-2, 0, -1}).to_string("z"), "-z^2 - 2");
  EXPECT_EQ(poly({1}).to_string(), "1");
}

TEST(StrictOrderPoly, SmallCases) {
  EXPECT_EQ(strict_order_poly(make_chain(0), 5), 1);
  EXPECT_EQ(strict_order_poly(make_chain(0), 0), 1);
  EXPECT_EQ(strict_order_poly(make_chain(1), 0), 0);
  EXPECT_EQ(strict_order_poly(make_chain(1), 7), 7);
  EXPECT_EQ(strict_order_poly(make_chain(2), 2), 1);
}

TEST(BruteForceStrictMaps, SmallCases) {
  EXPECT_EQ(brute_force_strict_maps(make_chain(2), 3),
            (std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(brute_force_strict_maps(make_antichain(2), 2).size(), 4U);
  EXPECT_EQ(brute_force_strict_maps(make_chain(1), 1).size(), 1U);
  EXPECT_THROW(brute_force_strict_maps(make_antichain(10), 10, 1000), GuardExceeded);
}

// Every induced subposet of every Kekulean strip up to four tiers.
TEST(StrictOrderPoly, MatchesBruteForce) {
  for (const auto& seq : shape_sequences(4)) {
    const StripSpec spec{seq, min_length(seq)};
    if (interface_profile(spec).min_order() < 0) continue;
    const DibPoset p = build_poset(spec);
    for (const DibPoset& q : induced_subposets(p)) {
      for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(strict_order_poly(q, n), static_cast<long>(brute_force_strict_maps(q, n).size()))
            << spec.shape_string() << " n=" << n;
      }
    }
  }
}

TEST(ExtendedPoly, SubsetSumExamples) {
  EXPECT_EQ(extended_poly_subposet_sum(make_chain(2), 2), poly({1, 4, 1}));
  EXPECT_EQ(extended_poly_subposet_sum(make_chain(0), 3), poly({1}));
  EXPECT_EQ(extended_poly_subposet_sum(make_antichain(2), 1), poly({1, 2, 1}));
}

TEST(ExtendedPoly, ExtensionFormulaExamples) {
  const DibPoset chain = make_chain(2);
  for (int n = 1; n <= 6; ++n) {
    std::vector<BigInt> c;
    for (int k = 0; k <= 2; ++k) c.push_back(binomial(2, k) * binomial(n, k));
    EXPECT_EQ(extended_poly_extension_formula(chain, natural_labeling(chain), n), Polynomial(c));
  }
  const DibPoset p = build_poset(strip("WWRNN 3"));
  for (int n = 1; n <= 6; ++n) {
    std::vector<BigInt> c;
    for (int k = 0; k <= 6; ++k) {
      c.push_back(binomial(6, k) * binomial(n, k) + 3 * binomial(4, k - 2) * binomial(n + 1, k) +
                  binomial(2, k - 4) * binomial(n + 2, k));
    }
    EXPECT_EQ(extended_poly_extension_formula(p, natural_labeling(p), n), Polynomial(c));
  }
  const DibPoset empty = make_chain(0);
  EXPECT_EQ(extended_poly_extension_formula(empty, natural_labeling(empty), 4), poly({1}));
}

TEST(ExtendedPoly, SubsetSumGuard) {
  EXPECT_THROW(extended_poly_subposet_sum(make_antichain(kDefaultSubsetGuard + 1), 1), GuardExceeded);
  ::setenv("ZZ_GUARD_P", "3", 1);
  EXPECT_EQ(subset_guard(), 3);
  EXPECT_THROW(extended_poly_subposet_sum(make_chain(4), 1), GuardExceeded);
  ::setenv("ZZ_GUARD_P", "junk", 1);
  EXPECT_EQ(subset_guard(), kDefaultSubsetGuard);
  ::unsetenv("ZZ_GUARD_P");
}

TEST(ExtendedPoly, BothRoutesAgreeOnFences) {
  std::mt19937_64 rng(11);
  for (int p = 0; p <= 6; ++p) {
    for (const DibPoset& poset : {make_chain(p), make_antichain(p), make_fence(p)}) {
      for (int n = 1; n <= 6; ++n) {
        const Polynomial subset = extended_poly_subposet_sum(poset, n);
        EXPECT_EQ(extended_poly_extension_formula(poset, natural_labeling(poset), n), subset);
        EXPECT_EQ(extended_poly_extension_formula(poset, random_natural_labeling(poset, rng), n), subset);
      }
    }
  }
}

TEST(ZzPolynomial, Examples) {
  EXPECT_EQ(zz_polynomial(strip("WRN 2")), poly({6, 6, 1}));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(zz_polynomial(StripSpec{strip("WRN 1").shapes, n}), test::parallelogram_zz(n));
  EXPECT_TRUE(zz_polynomial(strip("WNNWWN 4")).is_zero());
  EXPECT_EQ(zz_polynomial(strip("WN 1")), poly({2, 1}));
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(zz_polynomial(StripSpec{strip("WN 1").shapes, n}), poly({n + 1, n}));
  EXPECT_THROW(zz_polynomial(strip("RWN 2")), InvalidStrip);
}

TEST(ZzPolynomial, FrozenSixElementValues) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<BigInt> c;
    for (long v : test::kO32Coefficients[static_cast<std::size_t>(n - 1)]) c.emplace_back(v);
    EXPECT_EQ(zz_polynomial(StripSpec{strip("WWRNN 1").shapes, n}), Polynomial(c)) << "n=" << n;
  }
}

TEST(ACoefficients, Examples) {
  EXPECT_EQ(a_coefficients(strip("WRN 2")), (std::vector<BigInt>{1, 4, 1}));
  EXPECT_EQ(a_coefficients(strip("WN 5")), (std::vector<BigInt>{1, 5}));
  std::vector<BigInt> expected;
  for (long v : test::kO32SextetCounts) expected.emplace_back(v);
  EXPECT_EQ(a_coefficients(strip("WWRNN 3")), expected);
  EXPECT_THROW(a_coefficients(strip("WNNWWN 4")), NotKekulean);
}

TEST(ACoefficients, ExpandToZz) {
  for (const StripSpec& spec : kekulean_strips(4, 4)) {
    const auto a = a_coefficients(spec);
    EXPECT_EQ(a.front(), 1);
    EXPECT_EQ(Polynomial(a).shift_by_one(), zz_polynomial(spec)) << format_strip(spec);
  }
}

TEST(ClosedForm, Groups) {
  const ClosedForm m = closed_form(strip("WRN 2"));
  EXPECT_EQ(m.p, 2);
  EXPECT_EQ(m.groups, (std::vector<ClosedFormGroup>{{0, 0, 1}}));

  const ClosedForm o = closed_form(strip("WWRNN 3"));
  EXPECT_EQ(o.p, 6);
  EXPECT_EQ(o.groups, (std::vector<ClosedFormGroup>{{0, 0, 1}, {1, 2, 3}, {2, 4, 1}}));
  EXPECT_EQ(o.extension_count(), 5);

  const ClosedForm chain = closed_form(strip("WN 2"));
  EXPECT_EQ(chain.p, 1);
  EXPECT_EQ(chain.evaluate(4), poly({5, 4}));
}

TEST(ClosedForm, Rendering) {
  const ClosedForm o = closed_form(strip("WWRNN 3"));
  EXPECT_EQ(o.to_text(), "sum_{k=0}^{6} [C(6,k) C(n,k) + 3 C(4,k-2) C(n+1,k) + C(2,k-4) C(n+2,k)] (1+x)^k");
  EXPECT_EQ(o.to_latex(),
            "\\sum_{k=0}^{6} \\left[\\binom{6}{k}\\binom{n}{k} + 3\\binom{4}{k-2}\\binom{n+1}{k} + "
            "\\binom{2}{k-4}\\binom{n+2}{k}\\right] (1+x)^k");
}

TEST(ClosedForm, EvaluatesToZz) {
  for (const auto& seq : shape_sequences(5)) {
    const StripSpec base{seq, min_length(seq)};
    if (interface_profile(base).min_order() < 0) continue;
    const ClosedForm form = closed_form(base);
    for (int n = base.n; n <= 8; ++n) {
      EXPECT_EQ(form.evaluate(n), zz_polynomial(StripSpec{seq, n})) << base.shape_string() << " n=" << n;
    }
  }
}

TEST(ClosedForm, NonKekulean) { EXPECT_THROW(closed_form(strip("WNNWWN 4")), NotKekulean); }

}  // namespace
}  // namespace zz
