#include <doctest.h>

#include <map>

#include "schubert/optimizer.hpp"

using namespace schubert;

namespace {

// Lex-max g_U over all ideals of span <= K, for each K.
std::vector<Poly> brute_max_upto(const GrassParams& p) {
  const std::size_t k = p.grid_size();
  std::vector<Poly> best(k + 1);
  std::vector<bool> seen(k + 1, false);
  for (const auto& u : enumerate_ideals(p, 36)) {
    const std::size_t s = ideal_of(u).size();
    const Poly g = point_count_poly(u);
    if (!seen[s] || lex_compare(g, best[s]) > 0) best[s] = g;
    seen[s] = true;
  }
  for (std::size_t K = 1; K <= k; ++K)
    if (lex_compare(best[K - 1], best[K]) > 0) best[K] = best[K - 1];
  return best;
}

}  // namespace

TEST_CASE("candidates on G(2,7)") {
  const GrassParams p(2, 7);
  CHECK(left_candidate(p, 0).is_empty());
  CHECK(left_candidate(p, 8) == SchubertUnion(p, {GridPoint{1, 7}, GridPoint{2, 4}}));
  CHECK(right_candidate(p, 8) == SchubertUnion(p, {GridPoint{3, 4}, GridPoint{2, 5}}));
  CHECK(left_candidate(p, 21) == SchubertUnion::full(p));
  CHECK(right_candidate(p, 21) == SchubertUnion::full(p));
  for (std::size_t K = 0; K <= 21; ++K) {
    CHECK(spanning_dimension(left_candidate(p, K)) == K);
    CHECK(spanning_dimension(right_candidate(p, K)) == K);
    CHECK(left_candidate(p, K).maxima().size() <= 2);
    CHECK(right_candidate(p, K).maxima().size() <= 2);
  }
}

TEST_CASE("best union matches exhaustion") {
  for (int m = 3; m <= 8; ++m) {
    const GrassParams p(2, m);
    const auto brute = brute_max_upto(p);
    const auto exact = exhaustive_max_by_span(p);
    for (std::size_t K = 0; K <= p.grid_size(); ++K) {
      CHECK(best_union(p, K).best().poly == brute[K]);
      CHECK(exact[K] == brute[K]);
    }
  }
}

TEST_CASE("bound table identities") {
  for (const auto& p : {GrassParams(2, 6), GrassParams(3, 6), GrassParams(2, 9)}) {
    const BoundTable t = bound_table(p);
    CHECK(t.n == grassmannian_point_count(p));
    REQUIRE(t.rows.size() == p.grid_size() + 1);
    Poly sum;
    for (const auto& row : t.rows) {
      CHECK(row.J + row.D == t.n);
      CHECK(row.K + row.r == p.grid_size());
      CHECK(point_count_poly(row.witness) == row.J);
      CHECK(spanning_dimension(row.witness) <= row.K);
      sum += row.E;
    }
    CHECK(sum == t.n);
    CHECK(t.rows[1].E == Poly::monomial(p.delta()));
  }
  CHECK(bound_table(GrassParams(3, 6)).rows[0].direction == std::nullopt);
}

TEST_CASE("Krull dimension per span against exhaustion") {
  for (int m = 3; m <= 8; ++m) {
    const GrassParams p(2, m);
    std::map<std::size_t, int> best;
    for (const auto& u : enumerate_ideals(p)) {
      auto& b = best.try_emplace(spanning_dimension(u), -1).first->second;
      b = std::max(b, krull_dimension(u));
    }
    int running = -1;
    for (std::size_t K = 0; K <= p.grid_size(); ++K) {
      running = std::max(running, best[K]);
      CHECK(krull_dK(p, K) == running);
    }
  }
}

TEST_CASE("Krull formulas") {
  const GrassParams p(2, 7);
  CHECK(krull_C(p, -1) == 0);
  CHECK(krull_C(p, 3) == 4);
  CHECK(krull_C(p, 5) == 6);
  CHECK(krull_C(p, 10) == 21);
  CHECK_FALSE(krull_C(p, 11).has_value());
  CHECK(cycle_size(2, 5) == 7);
  CHECK(cycle_size(6, 7) == 21);
  // Expanded closed form of c1.
  for (int m = 4; m <= 12; ++m) {
    const GrassParams gp(2, m);
    for (int d = m - 2; d <= 2 * m - 4; ++d)
      CHECK(2 * krull_c1(gp, d) == 4 * d * m - 3 * m * m - d * d + 13 * m - 7 * d - 12);
  }
  CHECK(krull_c2(6) == 10);
  CHECK(krull_c2(7) == 14);
}

TEST_CASE("threshold report never contradicts the computed direction") {
  for (int m : {5, 7, 9, 10, 12, 16, 20, 30}) {
    for (const auto& row : threshold_report(GrassParams(2, m))) CHECK(row.consistent);
  }
}
