#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace schubert {

using Fq = std::uint8_t;

/// GF(q) for q = p^e with p prime, e <= 3, q <= 256. Elements are the integers
/// 0..q-1, read as base-p digit vectors (lowest digit = constant term) modulo a
/// fixed irreducible polynomial. All operations are table lookups.
class Field {
 public:
  explicit Field(int q);

  int q() const noexcept { return q_; }
  int p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  /// Monic modulus, lowest coefficient first, length e+1.
  const std::vector<int>& modulus() const noexcept { return modulus_; }
  /// e.g. "x^2+x+1"; "x" for prime fields.
  std::string modulus_string() const;

  Fq add(Fq a, Fq b) const { return add_[idx(a, b)]; }
  Fq sub(Fq a, Fq b) const { return add_[idx(a, neg_[b])]; }
  Fq mul(Fq a, Fq b) const { return mul_[idx(a, b)]; }
  Fq neg(Fq a) const { return neg_[a]; }
  /// Throws DivisionByZero for 0.
  Fq inv(Fq a) const;

 private:
  std::size_t idx(Fq a, Fq b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + b; }

  int q_;
  int p_;
  int e_;
  std::vector<int> modulus_;
  std::vector<Fq> add_;
  std::vector<Fq> mul_;
  std::vector<Fq> neg_;
  std::vector<Fq> inv_;
};

/// Dense row-major matrix over a Field.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Fq& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Fq at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const std::vector<Fq>& data() const noexcept { return data_; }

  friend bool operator==(const FqMatrix&, const FqMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Fq> data_;
};

/// Reduced row echelon form (pivots scaled to 1, zero rows last).
FqMatrix row_reduce(const Field& f, FqMatrix mat);
int rank(const Field& f, const FqMatrix& mat);
/// Determinant of a square matrix.
Fq determinant(const Field& f, FqMatrix mat);

}  // namespace schubert
