#include "schubert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "schubert/errors.hpp"

namespace schubert {

BigInt ipow(const BigInt& base, int exponent) {
  if (exponent < 0) throw InvalidArgument("negative exponent");
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

BigInt binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt result = 1;
  for (int i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

BigInt gaussian_binomial(int n, int r, const BigInt& q) {
  if (r < 0 || n < 0 || r > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < r; ++i) {
    num *= ipow(q, n - i) - 1;
    den *= ipow(q, i + 1) - 1;
  }
  return num / den;
}

Poly::Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int exponent, BigInt coeff) {
  if (exponent < 0) throw InvalidArgument("negative exponent in monomial");
  std::vector<BigInt> c(static_cast<std::size_t>(exponent) + 1);
  c.back() = std::move(coeff);
  return Poly(std::move(c));
}

Poly Poly::constant(BigInt value) { return Poly({std::move(value)}); }

Poly Poly::geometric(int terms) {
  if (terms <= 0) return {};
  return Poly(std::vector<BigInt>(static_cast<std::size_t>(terms), BigInt(1)));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& Poly::coeff(int exponent) const {
  static const BigInt zero = 0;
  if (exponent < 0 || exponent > degree()) return zero;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

bool Poly::is_monic_monomial() const {
  if (is_zero() || coeffs_.back() != 1) return false;
  return std::all_of(coeffs_.begin(), coeffs_.end() - 1, [](const BigInt& c) { return c == 0; });
}

bool Poly::has_nonnegative_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

BigInt Poly::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

BigInt Poly::at_one() const {
  BigInt acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

Poly Poly::reflect(int delta) const {
  if (degree() > delta) throw std::domain_error("reflect: degree exceeds delta");
  if (is_zero()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(delta) + 1);
  for (int e = 0; e <= degree(); ++e) out[static_cast<std::size_t>(delta - e)] = coeffs_[static_cast<std::size_t>(e)];
  return Poly(std::move(out));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = degree(); e >= 0; --e) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += 'q';
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

Poly Poly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InvalidArgument("empty polynomial text");

  Poly result;
  std::size_t i = 0;
  auto fail = [&] { throw InvalidArgument("cannot parse polynomial: " + std::string(text)); };
  auto read_int = [&](BigInt& out) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) return false;
    out = BigInt(s.substr(start, i - start));
    return true;
  };

  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      fail();
    }
    BigInt coeff = 1;
    const bool has_coeff = read_int(coeff);
    int exponent = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        BigInt e;
        if (!read_int(e)) fail();
        exponent = static_cast<int>(e);
      }
    } else if (!has_coeff) {
      fail();
    }
    result += Poly::monomial(exponent, sign * coeff);
  }
  return result;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly operator-(Poly p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

std::strong_ordering lex_compare(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int e = a.degree(); e >= 0; --e) {
    const BigInt& ca = a.coeff(e);
    const BigInt& cb = b.coeff(e);
    if (ca < cb) return std::strong_ordering::less;
    if (ca > cb) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace schubert
