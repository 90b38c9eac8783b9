#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "schubert/grid.hpp"
#include "schubert/poly.hpp"

namespace schubert {

/// Default cap on the number of grid points for exhaustive ideal enumeration.
inline constexpr std::size_t kDefaultEnumerationGuard = 28;

/// A union of Schubert cycles for one fixed flag, stored as the antichain of
/// maximal grid points in lexicographic order. The empty antichain is the empty union.
class SchubertUnion {
 public:
  /// Reduces `cycles` to its maximal elements; duplicates and dominated points are dropped.
  SchubertUnion(GrassParams params, std::vector<GridPoint> cycles = {});

  static SchubertUnion cycle(const GrassParams& params, GridPoint alpha);
  static SchubertUnion full(const GrassParams& params);
  static SchubertUnion empty(const GrassParams& params) { return SchubertUnion(params); }

  const GrassParams& params() const noexcept { return params_; }
  const std::vector<GridPoint>& maxima() const noexcept { return maxima_; }
  bool is_empty() const noexcept { return maxima_.empty(); }
  bool contains(const GridPoint& p) const;

  /// "(1,5) ∪ (2,3)", or "∅".
  std::string to_string() const;

  friend bool operator==(const SchubertUnion& a, const SchubertUnion& b) {
    return a.params_ == b.params_ && a.maxima_ == b.maxima_;
  }
  friend std::strong_ordering operator<=>(const SchubertUnion& a, const SchubertUnion& b) {
    if (auto c = a.params_.l() <=> b.params_.l(); c != 0) return c;
    if (auto c = a.params_.m() <=> b.params_.m(); c != 0) return c;
    return a.maxima_ <=> b.maxima_;
  }

 private:
  GrassParams params_;
  std::vector<GridPoint> maxima_;
};

/// G_U in lexicographic order.
std::vector<GridPoint> ideal_of(const SchubertUnion& u);
/// H_U = grid minus G_U, in lexicographic order.
std::vector<GridPoint> complement_of(const SchubertUnion& u);

/// Union whose ideal is exactly `points`; throws NotDownwardClosed otherwise.
SchubertUnion canonicalize(const GrassParams& params, const std::vector<GridPoint>& points);

SchubertUnion union_of(const SchubertUnion& a, const SchubertUnion& b);
SchubertUnion intersection_of(const SchubertUnion& a, const SchubertUnion& b);

/// |G_U|.
std::size_t spanning_dimension(const SchubertUnion& u);

/// g_U(q).
Poly point_count_poly(const SchubertUnion& u);
Poly point_count_poly(const std::vector<GridPoint>& points);

/// n(q) for G(l,m).
Poly grassmannian_point_count(const GrassParams& params);

/// h_U(q) = n(q) - g_U(q).
Poly complement_point_count(const SchubertUnion& u);

/// Largest cell dimension among the maxima; -1 for the empty union.
int krull_dimension(const SchubertUnion& u);

/// Calls `visit` once for every downward-closed subset of the grid, empty set
/// and full grid included. Throws TooLarge when the grid exceeds `guard` points.
void for_each_ideal(const GrassParams& params, const std::function<void(const SchubertUnion&)>& visit,
                    std::size_t guard = kDefaultEnumerationGuard);

/// Same, restricted to the downward-closed subsets of G_U.
void for_each_subunion(const SchubertUnion& u, const std::function<void(const SchubertUnion&)>& visit,
                       std::size_t guard = kDefaultEnumerationGuard);

std::vector<SchubertUnion> enumerate_ideals(const GrassParams& params, std::size_t guard = kDefaultEnumerationGuard);

}  // namespace schubert
