#pragma once

#include <initializer_list>
#include <vector>

#include "zz/polynomial.hpp"
#include "zz/strip.hpp"

namespace zz::test {

inline Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  for (long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

inline StripSpec strip(const char* text) { return parse_strip(text); }

// sum_k C(2,k) C(n,k) (1+x)^k
inline Polynomial parallelogram_zz(int n) {
  Polynomial out;
  for (int k = 0; k <= 2; ++k) {
    out += Polynomial::constant(binomial(2, k) * binomial(n, k)) * Polynomial::one_plus_x_pow(k);
  }
  return out;
}

// sum_k (C(6,k)C(n,k) + 3C(4,k-2)C(n+1,k) + C(2,k-4)C(n+2,k)) (1+x)^k
inline Polynomial o32_zz(int n) {
  Polynomial out;
  for (int k = 0; k <= 6; ++k) {
    const BigInt c = binomial(6, k) * binomial(n, k) + 3 * binomial(4, k - 2) * binomial(n + 1, k) +
                     binomial(2, k - 4) * binomial(n + 2, k);
    out += Polynomial::constant(c) * Polynomial::one_plus_x_pow(k);
  }
  return out;
}

}  // namespace zz::test
