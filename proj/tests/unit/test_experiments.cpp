#include <doctest.h>

#include <algorithm>

#include "schubert/experiments.hpp"

using namespace schubert;

TEST_CASE("Delta reciprocity") {
  for (int m : {3, 4, 5}) CHECK(delta_reciprocity(GrassParams(2, m)).verdict == Verdict::Affirmative);
  const auto open = delta_reciprocity(GrassParams(2, 7));
  CHECK(open.verdict == Verdict::Unknown);
  CHECK_FALSE(open.unknown.empty());
  CHECK(open.failures.empty());
}

TEST_CASE("E reciprocity") {
  for (int m = 3; m <= 9; ++m) CHECK(e_reciprocity(GrassParams(2, m)).verdict == Verdict::Affirmative);
  CHECK(e_reciprocity(GrassParams(3, 6)).verdict == Verdict::Affirmative);
  const auto r10 = e_reciprocity(GrassParams(2, 10));
  CHECK(r10.verdict == Verdict::Negative);
  CHECK(r10.failures == std::vector<std::size_t>{22, 23, 24});
}

TEST_CASE("dual maximality") {
  for (int m = 3; m <= 8; ++m) {
    const auto res = dual_maximality(GrassParams(2, m));
    CHECK(res.verdict == Verdict::Affirmative);
    CHECK(res.exhaustive);
  }
  CHECK(dual_maximality(GrassParams(3, 6)).verdict == Verdict::Affirmative);
  const auto r10 = dual_maximality(GrassParams(2, 10));
  CHECK(r10.verdict == Verdict::Negative);
  REQUIRE_FALSE(r10.failing.empty());
  CHECK(r10.failing.front() == 22);
}

TEST_CASE("section duals report on C(2,4)") {
  const Field f(2);
  const auto rows = section_duals(GrassParams(2, 4), f, 1000);
  CHECK(rows.size() == 5);
  for (const auto& row : rows) {
    CHECK(row.maximizers > 0);
    CHECK(row.span_dims.size() == row.maximizers);
    CHECK(row.dual_counts.size() == row.maximizers);
  }
}
