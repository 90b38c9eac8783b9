#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/bigint.hpp"

namespace schubert {

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
///
/// Used for point counts g_U(q), h_U(q), n(q) and for the bound tables built
/// from them. Coefficients are stored lowest degree first with no trailing
/// zeros, so the zero polynomial has an empty coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);

  static Poly monomial(int exponent, BigInt coeff = 1);
  static Poly constant(BigInt value);

  /// Sum 1 + q + ... + q^(terms-1); zero when terms <= 0.
  static Poly geometric(int terms);

  /// Parses the printed form, e.g. "q^4+2q^3+2q^2+q+1" or "q^9+q^8-q^6".
  static Poly parse(std::string_view text);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  const BigInt& coeff(int exponent) const;

  /// True for c*q^e with c == 1.
  bool is_monic_monomial() const;
  bool has_nonnegative_coeffs() const;

  BigInt evaluate(const BigInt& q) const;
  BigInt at_one() const;

  /// q^delta * p(1/q). Throws std::domain_error when degree() > delta.
  Poly reflect(int delta) const;

  /// Descending-degree text with explicit coefficients ("2q^4+q+1"); "0" for zero.
  std::string to_string() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(Poly lhs, const Poly& rhs) { return lhs *= rhs; }
  friend Poly operator-(Poly p);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

/// Lexicographic order of point-count polynomials: higher degree wins, then the
/// larger coefficient at the highest degree where the two differ.
std::strong_ordering lex_compare(const Poly& a, const Poly& b);

}  // namespace schubert
