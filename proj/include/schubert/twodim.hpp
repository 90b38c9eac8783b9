#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schubert/schubert_union.hpp"

namespace schubert {

/// Column counts of an l=2 union, as a subset of {1..m-1}. Elements are kept
/// in increasing order.
struct MSet {
  int m = 0;
  std::vector<int> elements;

  std::string to_string() const;  // "{2,3,6}"
  friend bool operator==(const MSet&, const MSet&) = default;
};

/// Corner sequence a_1 < ... < a_s < b_s < ... < b_1 of an l=2 union
/// S_(a_1,b_1) ∪ ... ∪ S_(a_s,b_s). `b` is stored as b_1..b_s (decreasing).
struct SigmaSeq {
  std::vector<int> a;
  std::vector<int> b;

  int s() const noexcept { return static_cast<int>(a.size()); }
  std::string to_string() const;  // "1<3<5<7"
  friend bool operator==(const SigmaSeq&, const SigmaSeq&) = default;
};

MSet union_to_mset(const SchubertUnion& u);
SchubertUnion mset_to_union(const MSet& mset);

SigmaSeq union_to_sigma(const SchubertUnion& u);
SchubertUnion sigma_to_union(int m, const SigmaSeq& sigma);

/// Column counts read off the corners: union over i of {b_i - a_i, ..., b_i - a_{i-1} - 1}, a_0 = 0.
MSet sigma_to_mset(int m, const SigmaSeq& sigma);

/// Corner sequence of the dual union; nullopt when the dual is empty (σ of the full grid).
std::optional<SigmaSeq> dual_sigma(int m, const SigmaSeq& sigma);

/// {1..m-1} minus the set: the column counts of the dual union.
MSet mset_complement_is_dual(const MSet& mset);

/// S_(a,b) ∪ S_(c,d) has both cycles maximal.
bool is_proper_pair(const GridPoint& ab, const GridPoint& cd);

}  // namespace schubert
