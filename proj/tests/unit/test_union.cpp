#include <doctest.h>

#include <set>

#include "schubert/bigint.hpp"
#include "schubert/errors.hpp"
#include "schubert/schubert_union.hpp"

using namespace schubert;

namespace {

// Order ideals by filtering all 2^k subsets of the grid.
std::size_t subset_filter_ideal_count(const GrassParams& p) {
  const auto grid = full_grid(p);
  const std::size_t k = grid.size();
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < k && closed; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = 0; j < k; ++j)
        if (!(mask >> j & 1u) && dominated_by(grid[j], grid[i])) {
          closed = false;
          break;
        }
    }
    count += closed;
  }
  return count;
}

}  // namespace

TEST_CASE("union reduces to maxima and canonical form") {
  const GrassParams p(2, 5);
  const SchubertUnion u(p, {GridPoint{1, 3}, GridPoint{2, 3}, GridPoint{1, 5}, GridPoint{1, 2}});
  CHECK(u.maxima() == std::vector<GridPoint>{GridPoint{1, 5}, GridPoint{2, 3}});
  CHECK(u.to_string() == "(1,5) ∪ (2,3)");
  CHECK(SchubertUnion::empty(p).to_string() == "∅");
  CHECK(SchubertUnion::full(p).maxima() == std::vector<GridPoint>{GridPoint{4, 5}});
  CHECK(u.contains(GridPoint{1, 4}));
  CHECK_FALSE(u.contains(GridPoint{2, 4}));
  CHECK_THROWS_AS(SchubertUnion(p, {GridPoint{3, 3}}), InvalidArgument);
}

TEST_CASE("canonicalize requires a downward closed set") {
  const GrassParams p(2, 4);
  CHECK(canonicalize(p, {GridPoint{1, 2}, GridPoint{1, 3}}) == SchubertUnion::cycle(p, GridPoint{1, 3}));
  CHECK_THROWS_AS(canonicalize(p, {GridPoint{1, 3}}), NotDownwardClosed);
  const auto u = SchubertUnion(p, {GridPoint{1, 4}, GridPoint{2, 3}});
  CHECK(canonicalize(p, ideal_of(u)) == u);
}

TEST_CASE("union and intersection") {
  const GrassParams p(2, 5);
  const auto a = SchubertUnion::cycle(p, GridPoint{1, 5});
  const auto b = SchubertUnion::cycle(p, GridPoint{2, 4});
  CHECK(union_of(a, b).maxima() == std::vector<GridPoint>{GridPoint{1, 5}, GridPoint{2, 4}});
  CHECK(intersection_of(a, b) == SchubertUnion::cycle(p, GridPoint{1, 4}));
}

TEST_CASE("ideal counts against a subset filter") {
  for (int m = 3; m <= 7; ++m) {
    const GrassParams p(2, m);
    CHECK(enumerate_ideals(p).size() == (std::size_t{1} << (m - 1)));
    CHECK(enumerate_ideals(p).size() == subset_filter_ideal_count(p));
  }
  const GrassParams p36(3, 6);
  const auto ideals = enumerate_ideals(p36);
  CHECK(ideals.size() == 66);
  CHECK(subset_filter_ideal_count(p36) == 66);
  CHECK(std::set<SchubertUnion>(ideals.begin(), ideals.end()).size() == ideals.size());
}

TEST_CASE("enumeration guard") {
  CHECK_THROWS_AS(enumerate_ideals(GrassParams(2, 9)), TooLarge);
  CHECK(enumerate_ideals(GrassParams(2, 9), 36).size() == 256);
}

TEST_CASE("point counts") {
  const GrassParams p(2, 5);
  CHECK(point_count_poly(SchubertUnion::cycle(p, GridPoint{2, 5})) == Poly::parse("q^4+2q^3+2q^2+q+1"));
  CHECK(point_count_poly(SchubertUnion::empty(p)).is_zero());
  CHECK(krull_dimension(SchubertUnion::empty(p)) == -1);
  CHECK(krull_dimension(SchubertUnion(p, {GridPoint{1, 5}, GridPoint{2, 3}})) == 3);
  for (int l = 1; l <= 3; ++l)
    for (int m = l + 1; m <= 7; ++m) {
      const GrassParams gp(l, m);
      const Poly n = grassmannian_point_count(gp);
      for (int q : {2, 3, 5}) CHECK(n.evaluate(q) == gaussian_binomial(m, l, q));
    }
  for (const auto& u : enumerate_ideals(GrassParams(3, 6))) {
    const Poly g = point_count_poly(u);
    CHECK(g.at_one() == spanning_dimension(u));
    CHECK(g + complement_point_count(u) == grassmannian_point_count(u.params()));
    CHECK(g.degree() == krull_dimension(u));
  }
}
