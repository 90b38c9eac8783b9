#include "schubert/field.hpp"

#include <utility>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Fixed moduli for the extension fields; anything else falls back to the
// first irreducible polynomial in enumeration order.
std::vector<int> known_modulus(int q) {
  switch (q) {
    case 4: return {1, 1, 1};      // x^2+x+1
    case 8: return {1, 1, 0, 1};   // x^3+x+1
    case 9: return {1, 0, 1};      // x^2+1
    default: return {};
  }
}

// Degree <= 3 polynomials are irreducible iff they have no root.
bool irreducible(const std::vector<int>& poly, int p) {
  for (int x = 0; x < p; ++x) {
    long long v = 0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = (v * x + *it) % p;
    if (v == 0) return false;
  }
  return true;
}

}  // namespace

Field::Field(int q) : q_(q) {
  if (q < 2 || q > 256) throw InvalidArgument("field size must be in 2..256, got " + std::to_string(q));
  p_ = 0;
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) {
      p_ = d;
      break;
    }
  e_ = 0;
  for (int v = q; v > 1; v /= p_) {
    if (v % p_ != 0) throw InvalidArgument(std::to_string(q) + " is not a prime power");
    ++e_;
  }
  if (!is_prime(p_)) throw InvalidArgument(std::to_string(q) + " is not a prime power");
  if (e_ > 3) throw InvalidArgument("extension degree above 3 is not supported (q = " + std::to_string(q) + ")");

  if (e_ == 1) {
    modulus_ = {0, 1};
  } else {
    modulus_ = known_modulus(q);
    if (modulus_.empty()) {
      for (int code = 0; code < q; ++code) {
        std::vector<int> cand(static_cast<std::size_t>(e_) + 1, 0);
        int c = code;
        for (int i = 0; i < e_; ++i, c /= p_) cand[static_cast<std::size_t>(i)] = c % p_;
        cand.back() = 1;
        if (irreducible(cand, p_)) {
          modulus_ = cand;
          break;
        }
      }
    }
    if (!irreducible(modulus_, p_)) throw InvalidArgument("modulus for GF(" + std::to_string(q) + ") is reducible");
  }

  auto digits = [&](int a) {
    std::vector<int> d(static_cast<std::size_t>(e_));
    for (int i = 0; i < e_; ++i, a /= p_) d[static_cast<std::size_t>(i)] = a % p_;
    return d;
  };
  auto pack = [&](const std::vector<int>& d) {
    int v = 0;
    for (int i = e_ - 1; i >= 0; --i) v = v * p_ + d[static_cast<std::size_t>(i)];
    return v;
  };

  const auto n = static_cast<std::size_t>(q);
  add_.assign(n * n, 0);
  mul_.assign(n * n, 0);
  neg_.assign(n, 0);
  inv_.assign(n, 0);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a);
    std::vector<int> dn(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[static_cast<std::size_t>(a)] = static_cast<Fq>(pack(dn));
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b);
      std::vector<int> s(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) s[i] = (da[i] + db[i]) % p_;
      add_[idx(static_cast<Fq>(a), static_cast<Fq>(b))] = static_cast<Fq>(pack(s));

      std::vector<int> prod(static_cast<std::size_t>(2 * e_ - 1), 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j)
          prod[static_cast<std::size_t>(i + j)] =
              (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
      for (int deg = 2 * e_ - 2; deg >= e_; --deg) {
        const int c = prod[static_cast<std::size_t>(deg)];
        if (c == 0) continue;
        for (int i = 0; i <= e_; ++i) {
          auto& t = prod[static_cast<std::size_t>(deg - e_ + i)];
          t = ((t - c * modulus_[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
        }
      }
      prod.resize(static_cast<std::size_t>(e_));
      mul_[idx(static_cast<Fq>(a), static_cast<Fq>(b))] = static_cast<Fq>(pack(prod));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[idx(static_cast<Fq>(a), static_cast<Fq>(b))] == 1) inv_[static_cast<std::size_t>(a)] = static_cast<Fq>(b);
}

std::string Field::modulus_string() const {
  std::string out;
  for (int i = e_; i >= 0; --i) {
    const int c = modulus_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += 'x';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

Fq Field::inv(Fq a) const {
  if (a == 0) throw DivisionByZero();
  return inv_[a];
}

FqMatrix row_reduce(const Field& f, FqMatrix mat) {
  int pivot_row = 0;
  for (int c = 0; c < mat.cols() && pivot_row < mat.rows(); ++c) {
    int r = pivot_row;
    while (r < mat.rows() && mat.at(r, c) == 0) ++r;
    if (r == mat.rows()) continue;
    if (r != pivot_row)
      for (int j = 0; j < mat.cols(); ++j) std::swap(mat.at(r, j), mat.at(pivot_row, j));
    const Fq s = f.inv(mat.at(pivot_row, c));
    for (int j = c; j < mat.cols(); ++j) mat.at(pivot_row, j) = f.mul(mat.at(pivot_row, j), s);
    for (int i = 0; i < mat.rows(); ++i) {
      if (i == pivot_row || mat.at(i, c) == 0) continue;
      const Fq factor = mat.at(i, c);
      for (int j = c; j < mat.cols(); ++j) mat.at(i, j) = f.sub(mat.at(i, j), f.mul(factor, mat.at(pivot_row, j)));
    }
    ++pivot_row;
  }
  return mat;
}

int rank(const Field& f, const FqMatrix& mat) {
  const FqMatrix red = row_reduce(f, mat);
  int r = 0;
  for (int i = 0; i < red.rows(); ++i) {
    bool nonzero = false;
    for (int j = 0; j < red.cols() && !nonzero; ++j) nonzero = red.at(i, j) != 0;
    r += nonzero;
  }
  return r;
}

Fq determinant(const Field& f, FqMatrix mat) {
  if (mat.rows() != mat.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const int n = mat.rows();
  Fq det = 1;
  for (int c = 0; c < n; ++c) {
    int r = c;
    while (r < n && mat.at(r, c) == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      for (int j = 0; j < n; ++j) std::swap(mat.at(r, j), mat.at(c, j));
      det = f.neg(det);
    }
    const Fq pivot = mat.at(c, c);
    det = f.mul(det, pivot);
    const Fq s = f.inv(pivot);
    for (int i = c + 1; i < n; ++i) {
      if (mat.at(i, c) == 0) continue;
      const Fq factor = f.mul(mat.at(i, c), s);
      for (int j = c; j < n; ++j) mat.at(i, j) = f.sub(mat.at(i, j), f.mul(factor, mat.at(c, j)));
    }
  }
  return det;
}

}  // namespace schubert
