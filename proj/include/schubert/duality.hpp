#pragma once

#include <cstddef>

#include "schubert/schubert_union.hpp"

namespace schubert {

/// Order-reversing involution (a_1..a_l) -> (m+1-a_l, ..., m+1-a_1).
GridPoint rev(const GrassParams& params, const GridPoint& p);

/// U* = the union whose ideal is rev(H_U).
SchubertUnion dual_union(const SchubertUnion& u);

/// Same union as dual_union(), built cycle by cycle: one candidate cycle for
/// every assignment of the maxima to the l coordinate slots (l^s candidates).
SchubertUnion dual_union_explicit(const SchubertUnion& u);

/// q^delta * h_U(1/q).
Poly dual_point_count(const SchubertUnion& u);

struct DualityReport {
  SchubertUnion primal;
  SchubertUnion dual;
  std::size_t span_primal;
  std::size_t span_dual;
};

DualityReport duality_report(const SchubertUnion& u);

}  // namespace schubert
