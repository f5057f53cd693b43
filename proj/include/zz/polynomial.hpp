#pragma once

// Dense univariate polynomials with arbitrary-precision integer
// coefficients.

#include <gmpxx.h>

#include <string>
#include <vector>

namespace zz {

using BigInt = mpz_class;

// C(a, b), zero whenever b < 0, a < 0 or b > a.
BigInt binomial(long a, long b);

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);
  static Polynomial constant(const BigInt& c);
  static Polynomial monomial(const BigInt& c, int degree);
  // (1 + x)^k
  static Polynomial one_plus_x_pow(int k);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int k) const;

  void add_term(const BigInt& c, int degree);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

  BigInt evaluate(const BigInt& x) const;

  // p(z) -> p(1 + x).
  Polynomial shift_by_one() const;
  // p(x) -> p(x - 1); inverse of shift_by_one.
  Polynomial shift_by_minus_one() const;

  // "x^2 + 6x + 6"; "0" for the zero polynomial.
  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace zz
