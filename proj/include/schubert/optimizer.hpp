#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "schubert/schubert_union.hpp"

namespace schubert {

enum class Side { Left, Right };
enum class Direction { L, R, LR };

std::string to_string(Direction d);

struct Candidate {
  SchubertUnion u;
  Poly poly;
  Side side;
};

/// Whole columns from the left, then the bottom of the next column. l = 2.
SchubertUnion left_candidate(const GrassParams& params, std::size_t K);
/// Whole rows from the bottom, then the left part of the next row. l = 2.
SchubertUnion right_candidate(const GrassParams& params, std::size_t K);

struct BestUnion {
  Candidate left;
  Candidate right;
  Direction direction;

  /// The winner; the left candidate on a tie.
  const Candidate& best() const { return direction == Direction::R ? right : left; }
};

BestUnion best_union(const GrassParams& params, std::size_t K);

struct BoundRow {
  std::size_t r;  // codimension
  std::size_t K;  // spanning dimension k - r
  Poly J;
  Poly D;
  Poly E;  // zero for r = 0
  std::optional<Direction> direction;  // l = 2 only
  SchubertUnion witness;
};

struct BoundTable {
  GrassParams params;
  Poly n;
  std::vector<BoundRow> rows;  // r = 0..k
};

/// J_r = lex-max g_U over unions of span <= k - r, D_r = n - J_r, E_r = D_r - D_{r-1}.
/// l = 2 goes through best_union; other l enumerate every ideal (guarded).
BoundTable bound_table(const GrassParams& params, std::size_t guard = kDefaultEnumerationGuard);

/// Lex-max g_U over all unions of each exact span 0..k, by exhaustive enumeration.
std::vector<Poly> exhaustive_max_by_span(const GrassParams& params, std::size_t guard = kDefaultEnumerationGuard);

/// Cells in the ideal of the cycle (x,y): xy - x(x+1)/2.
long long cycle_size(int x, int y);

/// Smallest span reaching Krull dimension d; nullopt (infinite) for d > 2m-4. l = 2.
std::optional<long long> krull_C(const GrassParams& params, int d);
long long krull_c1(const GrassParams& params, int d);
long long krull_c2(int d);

/// Largest d with C(d) <= K; -1 for K = 0.
int krull_dK(const GrassParams& params, std::size_t K);

/// c(a,b) < C(a+b-2).
bool admissible(const GrassParams& params, const GridPoint& p);

enum class Regime { LeftForced, RightForced, Undetermined };
std::string to_string(Regime r);

struct ThresholdRow {
  std::size_t K;
  int dK;
  Regime regime;
  Direction direction;
  bool consistent;
};

/// Per K: the regime predicted from d(K) against 1.2m-1 and 1.2m-5, next to the
/// computed direction. A forced side contradicts only the opposite strict side.
std::vector<ThresholdRow> threshold_report(const GrassParams& params);

}  // namespace schubert
