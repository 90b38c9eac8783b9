#include <doctest.h>

#include "schubert/errors.hpp"
#include "schubert/report.hpp"
#include "schubert/serialize.hpp"

using namespace schubert;

TEST_CASE("JSON round trips") {
  const GrassParams p(2, 7);
  const SchubertUnion u(p, {GridPoint{1, 7}, GridPoint{3, 5}});
  const auto j = to_json(u);
  CHECK(j.dump() == R"({"l":2,"m":7,"maxima":[[1,7],[3,5]]})");
  CHECK(union_from_json(j) == u);
  const Poly big = Poly::monomial(2, ipow(10, 30)) + Poly::constant(-3);
  CHECK(poly_from_json(to_json(big)) == big);
  CHECK(to_json(Poly::parse("2q+1")).dump() == "[1,2]");
  CHECK_THROWS_AS(union_from_json(nlohmann::json::parse(R"({"l":2})")), InvalidArgument);
}

TEST_CASE("maxima parsing") {
  const GrassParams p(2, 7);
  CHECK(parse_maxima(p, "1,7;3,5") == SchubertUnion(p, {GridPoint{1, 7}, GridPoint{3, 5}}));
  CHECK(parse_maxima(p, "(1,7); (3,5)") == SchubertUnion(p, {GridPoint{1, 7}, GridPoint{3, 5}}));
  CHECK(parse_maxima(p, "empty").is_empty());
  CHECK(parse_maxima(p, "").is_empty());
  CHECK_THROWS_AS(parse_maxima(p, "1,x"), InvalidArgument);
  CHECK_THROWS_AS(parse_maxima(p, "5,5"), InvalidArgument);
  CHECK_THROWS_AS(parse_maxima(p, "1,2,3"), InvalidArgument);
}

TEST_CASE("table rendering") {
  Table t;
  t.title = "T";
  t.headers = {"a", "b"};
  t.rows = {{"1", "x,y"}, {"2", "z"}};
  t.json = nlohmann::json::array({1, 2});
  CHECK(render(t, Format::Markdown) == "T\n\n| a | b |\n|---|---|\n| 1 | x,y |\n| 2 | z |\n");
  CHECK(render(t, Format::Csv) == "a,b\n1,\"x,y\"\n2,z\n");
  CHECK(nlohmann::json::parse(render(t, Format::Json))["data"] == t.json);
  t.horizontal = true;
  CHECK(render(t, Format::Markdown) == "T\n\n| a | 1 | 2 |\n|---|---|---|\n| b | x,y | z |\n");
  CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
}

TEST_CASE("enumerate rows") {
  const auto rows = enumerate_rows(GrassParams(2, 5));
  CHECK(rows.size() == 16);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].span <= rows[i].span);
  std::size_t not_max = 0;
  for (const auto& r : rows) not_max += !r.maximal;
  CHECK(not_max == 2);
  // Deterministic output.
  CHECK(render(enumerate_table(GrassParams(2, 6)), Format::Csv) ==
        render(enumerate_table(GrassParams(2, 6)), Format::Csv));
}

TEST_CASE("directions need l = 2") {
  CHECK_THROWS_AS(directions_table(GrassParams(3, 6)), NotTwoDim);
  const Table t = directions_table(GrassParams(2, 5));
  CHECK(t.rows.size() == 11);
  CHECK(t.horizontal);
}

TEST_CASE("experiment tables") {
  const Table q8 = experiment_table("Q8", GrassParams(2, 10), 2, kDefaultOracleBudget);
  CHECK(q8.rows.at(0).at(3) == "negative (witness K=22)");
  CHECK(experiment_table("Q8", GrassParams(2, 8), 2, kDefaultOracleBudget).rows.at(0).at(3) == "affirmative");
  CHECK_THROWS_AS(experiment_table("Q5", GrassParams(2, 8), 2, kDefaultOracleBudget), InvalidArgument);
}
