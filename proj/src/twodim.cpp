#include "schubert/twodim.hpp"

#include <algorithm>

#include "schubert/errors.hpp"

namespace schubert {

namespace {

void require_two(const GrassParams& params) {
  if (params.l() != 2) throw NotTwoDim();
}

void validate(const MSet& mset) {
  if (mset.m < 3) throw InvalidArgument("MSet needs m >= 3");
  int prev = 0;
  for (int e : mset.elements) {
    if (e <= prev || e >= mset.m) throw InvalidArgument("MSet elements must be distinct and in 1..m-1");
    prev = e;
  }
}

void validate(int m, const SigmaSeq& sigma) {
  if (sigma.a.empty() || sigma.a.size() != sigma.b.size()) throw InvalidArgument("sigma sequence needs s >= 1 corners");
  std::vector<int> seq = sigma.a;
  seq.insert(seq.end(), sigma.b.rbegin(), sigma.b.rend());
  int prev = 0;
  for (int v : seq) {
    if (v <= prev) throw InvalidArgument("sigma sequence is not strictly increasing: " + sigma.to_string());
    prev = v;
  }
  if (prev > m) throw InvalidArgument("sigma sequence exceeds m");
}

std::string join(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

std::string MSet::to_string() const { return "{" + join(elements, ',') + "}"; }

std::string SigmaSeq::to_string() const {
  std::vector<int> seq = a;
  seq.insert(seq.end(), b.rbegin(), b.rend());
  return join(seq, '<');
}

MSet union_to_mset(const SchubertUnion& u) {
  require_two(u.params());
  const int m = u.params().m();
  std::vector<int> counts(static_cast<std::size_t>(m + 1), 0);
  for (const auto& p : ideal_of(u)) ++counts[static_cast<std::size_t>(p[0])];
  MSet out{m, {}};
  for (int c : counts)
    if (c > 0) out.elements.push_back(c);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

SchubertUnion mset_to_union(const MSet& mset) {
  validate(mset);
  const GrassParams params(2, mset.m);
  std::vector<GridPoint> cycles;
  int column = 1;
  for (auto it = mset.elements.rbegin(); it != mset.elements.rend(); ++it, ++column)
    cycles.push_back(GridPoint{column, column + *it});
  return SchubertUnion(params, std::move(cycles));
}

SigmaSeq union_to_sigma(const SchubertUnion& u) {
  require_two(u.params());
  if (u.is_empty()) throw EmptyUnion();
  SigmaSeq out;
  for (const auto& p : u.maxima()) {
    out.a.push_back(p[0]);
    out.b.push_back(p[1]);
  }
  return out;
}

SchubertUnion sigma_to_union(int m, const SigmaSeq& sigma) {
  validate(m, sigma);
  std::vector<GridPoint> cycles;
  for (int i = 0; i < sigma.s(); ++i)
    cycles.push_back(GridPoint{sigma.a[static_cast<std::size_t>(i)], sigma.b[static_cast<std::size_t>(i)]});
  return SchubertUnion(GrassParams(2, m), std::move(cycles));
}

MSet sigma_to_mset(int m, const SigmaSeq& sigma) {
  validate(m, sigma);
  MSet out{m, {}};
  int prev_a = 0;
  for (int i = 0; i < sigma.s(); ++i) {
    const int a = sigma.a[static_cast<std::size_t>(i)];
    const int b = sigma.b[static_cast<std::size_t>(i)];
    for (int v = b - a; v <= b - prev_a - 1; ++v) out.elements.push_back(v);
    prev_a = a;
  }
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

std::optional<SigmaSeq> dual_sigma(int m, const SigmaSeq& sigma) {
  validate(m, sigma);
  const int s = sigma.s();
  const auto& a = sigma.a;
  const auto& b = sigma.b;
  std::vector<std::pair<int, int>> pairs;
  pairs.emplace_back(m - b[0], m);
  for (int i = 1; i < s; ++i)
    pairs.emplace_back(m - b[static_cast<std::size_t>(i)], m - a[static_cast<std::size_t>(i - 1)]);
  pairs.emplace_back(m - a[static_cast<std::size_t>(s - 1)] - 1, m - a[static_cast<std::size_t>(s - 1)]);

  const bool drop_outer = b[0] == m;
  const bool drop_inner = b[static_cast<std::size_t>(s - 1)] == a[static_cast<std::size_t>(s - 1)] + 1;
  SigmaSeq out;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (i == 0 && drop_outer) continue;
    if (i + 1 == pairs.size() && drop_inner) continue;
    out.a.push_back(pairs[i].first);
    out.b.push_back(pairs[i].second);
  }
  if (out.a.empty()) return std::nullopt;
  return out;
}

MSet mset_complement_is_dual(const MSet& mset) {
  validate(mset);
  MSet out{mset.m, {}};
  for (int v = 1; v < mset.m; ++v)
    if (!std::binary_search(mset.elements.begin(), mset.elements.end(), v)) out.elements.push_back(v);
  return out;
}

bool is_proper_pair(const GridPoint& ab, const GridPoint& cd) {
  if (ab.size() != 2 || cd.size() != 2) throw NotTwoDim();
  const int a = ab[0], b = ab[1], c = cd[0], d = cd[1];
  return (a < c && c < d && d < b) || (c < a && a < b && b < d);
}

}  // namespace schubert
