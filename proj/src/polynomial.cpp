#include "zz/polynomial.hpp"

#include <algorithm>

namespace zz {

BigInt binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const BigInt& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const BigInt& c, int degree) {
  Polynomial p;
  p.add_term(c, degree);
  return p;
}

Polynomial Polynomial::one_plus_x_pow(int k) {
  std::vector<BigInt> c;
  for (int i = 0; i <= k; ++i) c.push_back(binomial(k, i));
  return Polynomial(std::move(c));
}

BigInt Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

void Polynomial::add_term(const BigInt& c, int degree) {
  if (c == 0) return;
  if (static_cast<int>(coeffs_.size()) <= degree) coeffs_.resize(static_cast<std::size_t>(degree) + 1);
  coeffs_[static_cast<std::size_t>(degree)] += c;
  trim();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

BigInt Polynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::shift_by_one() const {
  Polynomial out;
  for (int k = 0; k <= degree(); ++k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    for (int i = 0; i <= k; ++i) out.add_term(c * binomial(k, i), i);
  }
  return out;
}

Polynomial Polynomial::shift_by_minus_one() const {
  Polynomial out;
  for (int k = 0; k <= degree(); ++k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    for (int i = 0; i <= k; ++i) {
      BigInt term = c * binomial(k, i);
      if ((k - i) % 2 == 1) term = -term;
      out.add_term(term, i);
    }
  }
  return out;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    BigInt c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = abs(c);
    const bool unit = c == 1 && k > 0;
    if (!unit) out += c.get_str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace zz
