#include "schubert/optimizer.hpp"

#include <algorithm>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

void require_two(const GrassParams& params) {
  if (params.l() != 2) throw NotTwoDim();
}

void require_span(const GrassParams& params, std::size_t K) {
  if (BigInt(K) > params.k())
    throw InvalidArgument("spanning dimension " + std::to_string(K) + " exceeds k = " + params.k().str());
}

}  // namespace

std::string to_string(Direction d) {
  switch (d) {
    case Direction::L: return "L";
    case Direction::R: return "R";
    case Direction::LR: return "LR";
  }
  return "?";
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::LeftForced: return "left-forced";
    case Regime::RightForced: return "right-forced";
    case Regime::Undetermined: return "undetermined";
  }
  return "?";
}

SchubertUnion left_candidate(const GrassParams& params, std::size_t K) {
  require_two(params);
  require_span(params, K);
  const int m = params.m();
  std::vector<GridPoint> cycles;
  int t = 0;  // full columns
  std::size_t used = 0;
  while (t < m - 1 && used + static_cast<std::size_t>(m - 1 - t) <= K) {
    used += static_cast<std::size_t>(m - 1 - t);
    ++t;
  }
  const int r = static_cast<int>(K - used);
  if (t > 0) cycles.push_back(GridPoint{t, m});
  if (r > 0) cycles.push_back(GridPoint{t + 1, t + 1 + r});
  return SchubertUnion(params, std::move(cycles));
}

SchubertUnion right_candidate(const GrassParams& params, std::size_t K) {
  require_two(params);
  require_span(params, K);
  const int m = params.m();
  std::vector<GridPoint> cycles;
  int t = 1;  // rows 2..t are full
  std::size_t used = 0;
  while (t < m && used + static_cast<std::size_t>(t) <= K) {
    used += static_cast<std::size_t>(t);
    ++t;
  }
  const int r = static_cast<int>(K - used);
  if (t >= 2) cycles.push_back(GridPoint{t - 1, t});
  if (r > 0) cycles.push_back(GridPoint{r, t + 1});
  return SchubertUnion(params, std::move(cycles));
}

BestUnion best_union(const GrassParams& params, std::size_t K) {
  SchubertUnion l = left_candidate(params, K);
  SchubertUnion r = right_candidate(params, K);
  Poly gl = point_count_poly(l);
  Poly gr = point_count_poly(r);
  const auto cmp = lex_compare(gl, gr);
  const Direction d = cmp == 0 ? Direction::LR : (cmp > 0 ? Direction::L : Direction::R);
  return BestUnion{Candidate{std::move(l), std::move(gl), Side::Left}, Candidate{std::move(r), std::move(gr), Side::Right}, d};
}

std::vector<Poly> exhaustive_max_by_span(const GrassParams& params, std::size_t guard) {
  std::vector<std::optional<Poly>> best(params.grid_size() + 1);
  for_each_ideal(
      params,
      [&](const SchubertUnion& u) {
        Poly g = point_count_poly(u);
        auto& slot = best[static_cast<std::size_t>(g.at_one())];
        if (!slot || lex_compare(g, *slot) > 0) slot = std::move(g);
      },
      guard);
  std::vector<Poly> out;
  for (auto& p : best) out.push_back(p.value_or(Poly{}));
  return out;
}

BoundTable bound_table(const GrassParams& params, std::size_t guard) {
  const std::size_t k = params.grid_size();
  BoundTable table{params, grassmannian_point_count(params), {}};

  std::vector<Poly> J(k + 1);
  std::vector<std::optional<Direction>> dir(k + 1);
  std::vector<SchubertUnion> witness(k + 1, SchubertUnion::empty(params));
  if (params.l() == 2) {
    for (std::size_t K = 0; K <= k; ++K) {
      BestUnion b = best_union(params, K);
      J[K] = b.best().poly;
      dir[K] = b.direction;
      witness[K] = b.best().u;
    }
  } else {
    std::vector<std::optional<Poly>> best(k + 1);
    for_each_ideal(
        params,
        [&](const SchubertUnion& u) {
          Poly g = point_count_poly(u);
          const auto K = static_cast<std::size_t>(g.at_one());
          if (!best[K] || lex_compare(g, *best[K]) > 0) {
            best[K] = std::move(g);
            witness[K] = u;
          }
        },
        guard);
    for (std::size_t K = 0; K <= k; ++K) J[K] = best[K].value_or(Poly{});
  }

  for (std::size_t r = 0; r <= k; ++r) {
    const std::size_t K = k - r;
    BoundRow row{r, K, J[K], table.n - J[K], Poly{}, dir[K], witness[K]};
    if (r > 0) row.E = J[K + 1] - J[K];
    table.rows.push_back(std::move(row));
  }
  return table;
}

long long cycle_size(int x, int y) {
  return static_cast<long long>(x) * y - static_cast<long long>(x) * (x + 1) / 2;
}

long long krull_c1(const GrassParams& params, int d) {
  const long long m = params.m();
  const long long t = d - m + 3;
  return t * m - t * (t + 1) / 2;
}

long long krull_c2(int d) {
  const long long x = d;
  if (d % 2 == 0) return (x + 2) * (x + 4) / 8;
  return (x * x + 8 * x + 7) / 8;
}

std::optional<long long> krull_C(const GrassParams& params, int d) {
  require_two(params);
  const int m = params.m();
  if (d < -1) throw InvalidArgument("Krull dimension below -1");
  if (d == -1) return 0;
  if (d > 2 * m - 4) return std::nullopt;
  if (d <= m - 2) return d + 1;
  return std::min(krull_c1(params, d), krull_c2(d));
}

int krull_dK(const GrassParams& params, std::size_t K) {
  require_two(params);
  require_span(params, K);
  int best = -1;
  for (int d = 0; d <= 2 * params.m() - 4; ++d) {
    const auto c = krull_C(params, d);
    if (c && *c <= static_cast<long long>(K)) best = d;
  }
  return best;
}

bool admissible(const GrassParams& params, const GridPoint& p) {
  require_two(params);
  require_in_grid(params, p);
  const auto c = krull_C(params, p[0] + p[1] - 2);
  return !c || cycle_size(p[0], p[1]) < *c;
}

std::vector<ThresholdRow> threshold_report(const GrassParams& params) {
  require_two(params);
  const int m = params.m();
  std::vector<ThresholdRow> out;
  const std::size_t k = params.grid_size();
  for (std::size_t K = 0; K <= k; ++K) {
    const int d = krull_dK(params, K);
    // d > 1.2m - 1 and d <= 1.2m - 5, scaled by 5 to stay in integers.
    Regime regime = Regime::Undetermined;
    if (5 * d > 6 * m - 5) {
      regime = Regime::RightForced;
    } else if (5 * d <= 6 * m - 25) {
      regime = Regime::LeftForced;
    }
    const Direction dir = best_union(params, K).direction;
    const bool ok = !(regime == Regime::RightForced && dir == Direction::L) &&
                    !(regime == Regime::LeftForced && dir == Direction::R);
    out.push_back(ThresholdRow{K, d, regime, dir, ok});
  }
  return out;
}

}  // namespace schubert
