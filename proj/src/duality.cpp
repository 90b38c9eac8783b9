#include "schubert/duality.hpp"

#include <algorithm>
#include <stdexcept>

#include "schubert/errors.hpp"

namespace schubert {

GridPoint rev(const GrassParams& params, const GridPoint& p) {
  require_in_grid(params, p);
  const int l = params.l();
  std::vector<int> out(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) out[static_cast<std::size_t>(i)] = params.m() + 1 - p[l - 1 - i];
  return GridPoint(std::move(out));
}

SchubertUnion dual_union(const SchubertUnion& u) {
  std::vector<GridPoint> image;
  for (const auto& p : complement_of(u)) image.push_back(rev(u.params(), p));
  return canonicalize(u.params(), image);
}

SchubertUnion dual_union_explicit(const SchubertUnion& u) {
  const GrassParams& params = u.params();
  const int l = params.l();
  const int m = params.m();
  const auto& maxima = u.maxima();
  const std::size_t s = maxima.size();

  // A point avoids every G_{alpha_i} iff for each i some coordinate exceeds
  // alpha_i's. Fix which coordinate (slot) does it for each i; after rev the
  // slot-t condition becomes an upper bound on coordinate l+1-t of the dual point.
  std::vector<int> slot(s, 0);
  std::vector<GridPoint> cycles;
  while (true) {
    std::vector<int> bound(static_cast<std::size_t>(l), m);
    for (std::size_t i = 0; i < s; ++i) {
      const int t = slot[i];  // 0-based slot of the dual coordinate
      bound[static_cast<std::size_t>(t)] = std::min(bound[static_cast<std::size_t>(t)], m - maxima[i][l - 1 - t]);
    }
    std::vector<int> f(static_cast<std::size_t>(l));
    f[static_cast<std::size_t>(l - 1)] = bound[static_cast<std::size_t>(l - 1)];
    for (int t = l - 2; t >= 0; --t)
      f[static_cast<std::size_t>(t)] = std::min(f[static_cast<std::size_t>(t + 1)] - 1, bound[static_cast<std::size_t>(t)]);
    bool valid = true;
    for (int t = 0; t < l; ++t) valid = valid && f[static_cast<std::size_t>(t)] >= t + 1;
    if (valid) cycles.emplace_back(std::move(f));

    std::size_t i = 0;
    while (i < s && ++slot[i] == l) slot[i++] = 0;
    if (i == s) break;
  }
  return SchubertUnion(params, std::move(cycles));
}

Poly dual_point_count(const SchubertUnion& u) {
  const Poly h = complement_point_count(u);
  try {
    return h.reflect(u.params().delta());
  } catch (const std::domain_error&) {
    throw ReciprocityViolation("h_U has degree " + std::to_string(h.degree()) + " above " +
                               std::to_string(u.params().delta()));
  }
}

DualityReport duality_report(const SchubertUnion& u) {
  SchubertUnion d = dual_union(u);
  const std::size_t sd = spanning_dimension(d);
  return DualityReport{u, std::move(d), spanning_dimension(u), sd};
}

}  // namespace schubert
