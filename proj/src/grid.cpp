#include "schubert/grid.hpp"

#include <algorithm>
#include <numeric>

#include "schubert/errors.hpp"

namespace schubert {

GrassParams::GrassParams(int l, int m) : l_(l), m_(m) {
  if (l < 1 || m <= l)
    throw InvalidArgument("need 1 <= l < m, got l=" + std::to_string(l) + ", m=" + std::to_string(m));
}

BigInt GrassParams::k() const { return binomial(m_, l_); }

std::size_t GrassParams::grid_size() const {
  const BigInt n = k();
  if (n > BigInt(1) << 31) throw TooLarge("grid of G(" + std::to_string(l_) + "," + std::to_string(m_) + ") is too large");
  return static_cast<std::size_t>(n);
}

int GridPoint::sum() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

std::string GridPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

bool dominated_by(const GridPoint& a, const GridPoint& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool in_grid(const GrassParams& params, const GridPoint& p) {
  if (p.size() != params.l()) return false;
  int prev = 0;
  for (int a : p.coords()) {
    if (a <= prev) return false;
    prev = a;
  }
  return prev <= params.m();
}

void require_in_grid(const GrassParams& params, const GridPoint& p) {
  if (!in_grid(params, p))
    throw InvalidArgument(p.to_string() + " is not a point of the grid for G(" + std::to_string(params.l()) + "," +
                          std::to_string(params.m()) + ")");
}

int cell_dimension(const GridPoint& p) { return p.sum() - p.size() * (p.size() + 1) / 2; }

GridPoint meet(const GridPoint& a, const GridPoint& b) {
  if (a.size() != b.size()) throw InvalidArgument("meet of points of different length");
  std::vector<int> c(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) c[static_cast<std::size_t>(i)] = std::min(a[i], b[i]);
  return GridPoint(std::move(c));
}

std::vector<GridPoint> full_grid(const GrassParams& params) {
  const int l = params.l();
  const int m = params.m();
  std::vector<GridPoint> out;
  out.reserve(params.grid_size());
  std::vector<int> cur(static_cast<std::size_t>(l));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(cur);
    int i = l - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - (l - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < l; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::size_t grid_rank(const GrassParams& params, const GridPoint& p) {
  require_in_grid(params, p);
  const int l = params.l();
  const int m = params.m();
  // Count tuples that are lexicographically smaller.
  BigInt rank = 0;
  int prev = 0;
  for (int i = 0; i < l; ++i) {
    for (int v = prev + 1; v < p[i]; ++v) rank += binomial(m - v, l - 1 - i);
    prev = p[i];
  }
  return static_cast<std::size_t>(rank);
}

int PartitionTuple::weight() const {
  int n = 0;
  for (std::size_t j = 0; j < c.size(); ++j) n += static_cast<int>(j + 1) * c[j];
  return n;
}

PartitionTuple grid_to_partition(const GridPoint& p) {
  const int l = p.size();
  PartitionTuple out{std::vector<int>(static_cast<std::size_t>(l))};
  int prev_s = 0;
  for (int i = 1; i <= l; ++i) {
    const int s = p[i - 1] - i;
    out.c[static_cast<std::size_t>(l - i)] = s - prev_s;
    prev_s = s;
  }
  return out;
}

GridPoint partition_to_grid(const GrassParams& params, const PartitionTuple& c) {
  const int l = params.l();
  if (static_cast<int>(c.c.size()) != l) throw InvalidArgument("partition tuple has wrong length");
  int total = 0;
  for (int v : c.c) {
    if (v < 0) throw InvalidArgument("partition tuple has a negative entry");
    total += v;
  }
  if (total > params.m() - l) throw InvalidArgument("partition tuple does not fit in the box");
  std::vector<int> x(static_cast<std::size_t>(l));
  int s = 0;
  for (int i = 1; i <= l; ++i) {
    s += c.c[static_cast<std::size_t>(l - i)];
    x[static_cast<std::size_t>(i - 1)] = s + i;
  }
  return GridPoint(std::move(x));
}

}  // namespace schubert
