#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "schubert/bigint.hpp"

namespace schubert {

/// Parameters of the Grassmannian G(l,m) of l-dimensional subspaces of an
/// m-dimensional space.
class GrassParams {
 public:
  GrassParams(int l, int m);

  int l() const noexcept { return l_; }
  int m() const noexcept { return m_; }
  /// Dimension of the Grassmannian, l(m-l).
  int delta() const noexcept { return l_ * (m_ - l_); }
  /// Number of Plücker coordinates, binomial(m,l).
  BigInt k() const;
  /// Same as k() but as a machine integer; throws TooLarge past 2^31.
  std::size_t grid_size() const;
  /// l(l+1)/2, subtracted from coordinate sums to get cell dimensions.
  int base_weight() const noexcept { return l_ * (l_ + 1) / 2; }

  friend bool operator==(const GrassParams&, const GrassParams&) = default;

 private:
  int l_;
  int m_;
};

/// Strictly increasing l-tuple (a_1 < ... < a_l). Comparison operators are
/// lexicographic; the grid partial order is dominated_by().
class GridPoint {
 public:
  GridPoint() = default;
  explicit GridPoint(std::vector<int> coords) : coords_(std::move(coords)) {}
  GridPoint(std::initializer_list<int> coords) : coords_(coords) {}

  const std::vector<int>& coords() const noexcept { return coords_; }
  int size() const noexcept { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  int sum() const;

  /// "(1,5)" style.
  std::string to_string() const;

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;

 private:
  std::vector<int> coords_;
};

/// Componentwise a <= b.
bool dominated_by(const GridPoint& a, const GridPoint& b);
bool in_grid(const GrassParams& params, const GridPoint& p);
/// Throws InvalidArgument unless in_grid.
void require_in_grid(const GrassParams& params, const GridPoint& p);

/// Dimension of the Schubert cell C_alpha, sum(a_i) - l(l+1)/2.
int cell_dimension(const GridPoint& p);

/// Coordinatewise minimum; the ideal of the result is the intersection of the two ideals.
GridPoint meet(const GridPoint& a, const GridPoint& b);

/// Every grid point in lexicographic order.
std::vector<GridPoint> full_grid(const GrassParams& params);

/// Position of p in full_grid(params).
std::size_t grid_rank(const GrassParams& params, const GridPoint& p);

/// (c_1..c_l) with c_1 + ... + c_l <= m - l.
struct PartitionTuple {
  std::vector<int> c;

  /// N(P) = c_1 + 2c_2 + ... + l c_l.
  int weight() const;
  friend bool operator==(const PartitionTuple&, const PartitionTuple&) = default;
};

PartitionTuple grid_to_partition(const GridPoint& p);
GridPoint partition_to_grid(const GrassParams& params, const PartitionTuple& c);

}  // namespace schubert
