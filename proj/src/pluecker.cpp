#include "schubert/pluecker.hpp"

#include <algorithm>
#include <ostream>

#include <json.hpp>

#include "schubert/errors.hpp"

namespace schubert {

int free_entries_in_row(const GridPoint& alpha, int i) { return alpha[i] - (i + 1); }

FqMatrix reduced_form(const GrassParams& params, const CellPoint& point) {
  const GridPoint& a = point.alpha;
  require_in_grid(params, a);
  const int l = params.l();
  FqMatrix mat(l, params.m());
  std::size_t next = 0;
  for (int i = 0; i < l; ++i) {
    mat.at(i, a[i] - 1) = 1;
    for (int col = 1; col < a[i]; ++col) {
      const bool earlier_pivot = std::any_of(a.coords().begin(), a.coords().begin() + i, [&](int p) { return p == col; });
      if (earlier_pivot) continue;
      if (next >= point.free_entries.size()) throw InvalidArgument("too few free entries for cell " + a.to_string());
      mat.at(i, col - 1) = point.free_entries[next++];
    }
  }
  if (next != point.free_entries.size()) throw InvalidArgument("too many free entries for cell " + a.to_string());
  return mat;
}

namespace {

std::vector<Fq> minors(const GrassParams& params, const Field& field, const FqMatrix& form,
                       const std::vector<GridPoint>& coords) {
  const int l = params.l();
  std::vector<Fq> out;
  out.reserve(coords.size());
  FqMatrix sub(l, l);
  for (const auto& beta : coords) {
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) sub.at(i, j) = form.at(i, beta[j] - 1);
    out.push_back(determinant(field, sub));
  }
  return out;
}

void check_guard(const SchubertUnion& u, const Field& field, std::size_t guard) {
  const BigInt count = point_count_poly(u).evaluate(field.q());
  if (count > guard)
    throw TooLarge("union has " + count.str() + " points over GF(" + std::to_string(field.q()) + "), guard is " +
                   std::to_string(guard));
}

void for_each_cell_point(const Field& field, const std::vector<GridPoint>& cells,
                         const std::function<void(const CellPoint&)>& visit) {
  for (const auto& alpha : cells) {
    CellPoint pt{alpha, std::vector<Fq>(static_cast<std::size_t>(cell_dimension(alpha)), 0)};
    while (true) {
      visit(pt);
      int i = static_cast<int>(pt.free_entries.size()) - 1;
      while (i >= 0 && pt.free_entries[static_cast<std::size_t>(i)] == field.q() - 1) pt.free_entries[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++pt.free_entries[static_cast<std::size_t>(i)];
    }
  }
}

}  // namespace

std::vector<Fq> pluecker_vector(const GrassParams& params, const Field& field, const CellPoint& point) {
  return minors(params, field, reduced_form(params, point), full_grid(params));
}

void enumerate_points(const SchubertUnion& u, const Field& field,
                      const std::function<void(const CellPoint&, const std::vector<Fq>&)>& visit, std::size_t guard) {
  check_guard(u, field, guard);
  const GrassParams& params = u.params();
  const auto grid = full_grid(params);
  for_each_cell_point(field, ideal_of(u), [&](const CellPoint& pt) {
    visit(pt, minors(params, field, reduced_form(params, pt), grid));
  });
}

GeneratorMatrix generator_matrix(const SchubertUnion& u, const Field& field, std::size_t guard) {
  check_guard(u, field, guard);
  const GrassParams& params = u.params();
  GeneratorMatrix g{field.q(), u, ideal_of(u), {}, {}};
  const auto n = static_cast<int>(point_count_poly(u).evaluate(field.q()));
  g.matrix = FqMatrix(static_cast<int>(g.coordinates.size()), n);
  int col = 0;
  for_each_cell_point(field, g.coordinates, [&](const CellPoint& pt) {
    const auto v = minors(params, field, reduced_form(params, pt), g.coordinates);
    for (std::size_t r = 0; r < v.size(); ++r) g.matrix.at(static_cast<int>(r), col) = v[r];
    g.cells.push_back(pt.alpha);
    ++col;
  });
  return g;
}

void write_text(std::ostream& os, const GeneratorMatrix& g) {
  for (int c = 0; c < g.n(); ++c) {
    for (int r = 0; r < g.rows(); ++r) {
      if (r) os << ' ';
      os << static_cast<int>(g.matrix.at(r, c));
    }
    os << '\n';
  }
}

void write_binary(std::ostream& os, const GeneratorMatrix& g) {
  nlohmann::json maxima = nlohmann::json::array();
  for (const auto& p : g.u.maxima()) maxima.push_back(p.coords());
  const nlohmann::json header = {{"q", g.q},          {"l", g.u.params().l()}, {"m", g.u.params().m()},
                                 {"rows", g.rows()},  {"n", g.n()},            {"union", maxima}};
  os << header.dump() << '\n';
  os.write(reinterpret_cast<const char*>(g.matrix.data().data()), static_cast<std::streamsize>(g.matrix.data().size()));
}

}  // namespace schubert
