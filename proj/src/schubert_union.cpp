#include "schubert/schubert_union.hpp"

#include <algorithm>
#include <set>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

std::vector<GridPoint> reduce_to_maxima(std::vector<GridPoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::vector<GridPoint> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j)
      dominated = i != j && dominated_by(points[i], points[j]);
    if (!dominated) out.push_back(points[i]);
  }
  return out;
}

// Points covered by p in the grid order: lower one coordinate by one.
std::vector<GridPoint> lower_covers(const GridPoint& p) {
  std::vector<GridPoint> out;
  std::vector<int> c = p.coords();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int floor = i == 0 ? 0 : c[i - 1];
    if (c[i] - 1 > floor) {
      --c[i];
      out.emplace_back(c);
      ++c[i];
    }
  }
  return out;
}

}  // namespace

SchubertUnion::SchubertUnion(GrassParams params, std::vector<GridPoint> cycles) : params_(params) {
  for (const auto& p : cycles) require_in_grid(params_, p);
  maxima_ = reduce_to_maxima(std::move(cycles));
}

SchubertUnion SchubertUnion::cycle(const GrassParams& params, GridPoint alpha) {
  return SchubertUnion(params, {std::move(alpha)});
}

SchubertUnion SchubertUnion::full(const GrassParams& params) {
  std::vector<int> top(static_cast<std::size_t>(params.l()));
  for (int i = 0; i < params.l(); ++i) top[static_cast<std::size_t>(i)] = params.m() - params.l() + 1 + i;
  return cycle(params, GridPoint(std::move(top)));
}

bool SchubertUnion::contains(const GridPoint& p) const {
  return std::any_of(maxima_.begin(), maxima_.end(), [&](const GridPoint& a) { return dominated_by(p, a); });
}

std::string SchubertUnion::to_string() const {
  if (maxima_.empty()) return "∅";
  std::string out;
  for (std::size_t i = 0; i < maxima_.size(); ++i) {
    if (i) out += " ∪ ";
    out += maxima_[i].to_string();
  }
  return out;
}

std::vector<GridPoint> ideal_of(const SchubertUnion& u) {
  std::vector<GridPoint> out;
  if (u.is_empty()) return out;
  for (auto& p : full_grid(u.params()))
    if (u.contains(p)) out.push_back(std::move(p));
  return out;
}

std::vector<GridPoint> complement_of(const SchubertUnion& u) {
  std::vector<GridPoint> out;
  for (auto& p : full_grid(u.params()))
    if (!u.contains(p)) out.push_back(std::move(p));
  return out;
}

SchubertUnion canonicalize(const GrassParams& params, const std::vector<GridPoint>& points) {
  const std::set<GridPoint> members(points.begin(), points.end());
  for (const auto& p : members) {
    require_in_grid(params, p);
    for (const auto& below : lower_covers(p))
      if (!members.count(below))
        throw NotDownwardClosed(p.to_string() + " is present but " + below.to_string() + " is not");
  }
  return SchubertUnion(params, std::vector<GridPoint>(members.begin(), members.end()));
}

SchubertUnion union_of(const SchubertUnion& a, const SchubertUnion& b) {
  if (!(a.params() == b.params())) throw InvalidArgument("unions live in different Grassmannians");
  std::vector<GridPoint> all = a.maxima();
  all.insert(all.end(), b.maxima().begin(), b.maxima().end());
  return SchubertUnion(a.params(), std::move(all));
}

SchubertUnion intersection_of(const SchubertUnion& a, const SchubertUnion& b) {
  if (!(a.params() == b.params())) throw InvalidArgument("unions live in different Grassmannians");
  std::vector<GridPoint> all;
  for (const auto& x : a.maxima())
    for (const auto& y : b.maxima()) all.push_back(meet(x, y));
  return SchubertUnion(a.params(), std::move(all));
}

std::size_t spanning_dimension(const SchubertUnion& u) { return ideal_of(u).size(); }

Poly point_count_poly(const std::vector<GridPoint>& points) {
  std::vector<BigInt> c;
  for (const auto& p : points) {
    const auto e = static_cast<std::size_t>(cell_dimension(p));
    if (c.size() <= e) c.resize(e + 1);
    c[e] += 1;
  }
  return Poly(std::move(c));
}

Poly point_count_poly(const SchubertUnion& u) { return point_count_poly(ideal_of(u)); }

Poly grassmannian_point_count(const GrassParams& params) { return point_count_poly(full_grid(params)); }

Poly complement_point_count(const SchubertUnion& u) { return point_count_poly(complement_of(u)); }

int krull_dimension(const SchubertUnion& u) {
  int d = -1;
  for (const auto& a : u.maxima()) d = std::max(d, cell_dimension(a));
  return d;
}

void for_each_subunion(const SchubertUnion& u, const std::function<void(const SchubertUnion&)>& visit,
                       std::size_t guard) {
  const GrassParams& params = u.params();
  // Lexicographic order is a linear extension of the grid order, so deciding
  // points in that order only ever needs the lower covers already decided.
  const std::vector<GridPoint> points = ideal_of(u);
  const std::size_t n = points.size();
  if (n > guard)
    throw TooLarge("ideal has " + std::to_string(n) + " points, enumeration guard is " + std::to_string(guard));

  std::vector<std::vector<std::size_t>> covers(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& c : lower_covers(points[i]))
      covers[i].push_back(static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), c) - points.begin()));

  std::vector<char> in(n, 0);
  std::vector<GridPoint> chosen;
  std::function<void(std::size_t)> step = [&](std::size_t i) {
    if (i == n) {
      visit(SchubertUnion(params, chosen));
      return;
    }
    step(i + 1);
    const bool allowed = std::all_of(covers[i].begin(), covers[i].end(), [&](std::size_t j) { return in[j] != 0; });
    if (!allowed) return;
    in[i] = 1;
    chosen.push_back(points[i]);
    step(i + 1);
    chosen.pop_back();
    in[i] = 0;
  };
  step(0);
}

void for_each_ideal(const GrassParams& params, const std::function<void(const SchubertUnion&)>& visit,
                    std::size_t guard) {
  const BigInt k = params.k();
  if (k > guard)
    throw TooLarge("grid has " + k.str() + " points, enumeration guard is " + std::to_string(guard));
  for_each_subunion(SchubertUnion::full(params), visit, guard);
}

std::vector<SchubertUnion> enumerate_ideals(const GrassParams& params, std::size_t guard) {
  std::vector<SchubertUnion> out;
  for_each_ideal(params, [&](const SchubertUnion& u) { out.push_back(u); }, guard);
  return out;
}

}  // namespace schubert
