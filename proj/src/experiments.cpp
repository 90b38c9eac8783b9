#include "schubert/experiments.hpp"

#include <algorithm>
#include <map>

#include "schubert/duality.hpp"
#include "schubert/errors.hpp"

namespace schubert {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Affirmative: return "affirmative";
    case Verdict::Negative: return "negative";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

namespace {

ReciprocityResult reciprocity(const std::vector<std::optional<Poly>>& seq, int delta) {
  // seq is indexed 1..k; seq[0] unused.
  ReciprocityResult out;
  const std::size_t k = seq.size() - 1;
  for (std::size_t r = 1; r <= k; ++r) {
    const auto& a = seq[r];
    const auto& b = seq[k + 1 - r];
    if (!a || !b) {
      out.unknown.push_back(r);
      continue;
    }
    bool ok = b->degree() <= delta && b->degree() >= -1;
    if (ok) ok = *a == b->reflect(delta);
    if (!ok) out.failures.push_back(r);
  }
  if (!out.failures.empty()) {
    out.verdict = Verdict::Negative;
  } else if (out.unknown.empty()) {
    out.verdict = Verdict::Affirmative;
  }
  return out;
}

}  // namespace

ReciprocityResult delta_reciprocity(const GrassParams& params) {
  return reciprocity(delta_table(params), params.delta());
}

ReciprocityResult e_reciprocity(const GrassParams& params, std::size_t guard) {
  const BoundTable t = bound_table(params, guard);
  std::vector<std::optional<Poly>> seq(t.rows.size());
  for (std::size_t r = 1; r < t.rows.size(); ++r) seq[r] = t.rows[r].E;
  return reciprocity(seq, params.delta());
}

DualMaximalityResult dual_maximality(const GrassParams& params, std::size_t guard) {
  DualMaximalityResult out;
  const std::size_t k = params.grid_size();
  std::vector<Poly> J;
  std::vector<std::vector<SchubertUnion>> maximizers(k + 1);

  if (params.k() <= guard) {
    out.exhaustive = true;
    J = exhaustive_max_by_span(params, guard);
    for_each_ideal(
        params,
        [&](const SchubertUnion& u) {
          const Poly g = point_count_poly(u);
          const auto K = static_cast<std::size_t>(g.at_one());
          if (g == J[K]) maximizers[K].push_back(u);
        },
        guard);
  } else {
    if (params.l() != 2) throw TooLarge("grid exceeds the enumeration guard and l != 2");
    J.resize(k + 1);
    for (std::size_t K = 0; K <= k; ++K) {
      BestUnion b = best_union(params, K);
      J[K] = b.best().poly;
      if (b.left.poly == J[K]) maximizers[K].push_back(b.left.u);
      if (b.right.poly == J[K] && !(b.right.u == b.left.u)) maximizers[K].push_back(b.right.u);
    }
  }

  for (std::size_t K = 0; K <= k; ++K) {
    const bool bad = std::any_of(maximizers[K].begin(), maximizers[K].end(),
                                 [&](const SchubertUnion& u) { return !(point_count_poly(dual_union(u)) == J[k - K]); });
    if (bad) out.failing.push_back(K);
  }
  out.verdict = out.failing.empty() ? Verdict::Affirmative : Verdict::Negative;
  return out;
}

std::vector<SectionDualRow> section_duals(const GrassParams& params, const Field& field, std::size_t cap,
                                          const BigInt& budget) {
  const GeneratorMatrix g = generator_matrix(SchubertUnion::full(params), field);
  const int k = g.rows();
  const int n = g.n();

  std::map<std::size_t, long long> H;
  auto H_of = [&](std::size_t r) {
    auto it = H.find(r);
    if (it == H.end()) it = H.emplace(r, oracle_dr(g, field, r, budget).H).first;
    return it->second;
  };

  std::vector<SectionDualRow> out;
  for (std::size_t r = 1; r < static_cast<std::size_t>(k); ++r) {
    const MaxSections ms = oracle_max_sections(g, field, r, cap, budget);
    H[r] = ms.result.H;
    SectionDualRow row;
    row.r = r;
    row.H = ms.result.H;
    row.maximizers = ms.sections.size();
    row.truncated = ms.truncated;
    for (const auto& mask : ms.sections) {
      std::vector<int> cols;
      for (int c = 0; c < n; ++c)
        if ((mask[static_cast<std::size_t>(c) / 64] >> (c % 64)) & 1u) cols.push_back(c);
      FqMatrix span(static_cast<int>(cols.size()), k);
      for (std::size_t i = 0; i < cols.size(); ++i)
        for (int j = 0; j < k; ++j) span.at(static_cast<int>(i), j) = g.matrix.at(j, cols[i]);
      const int dim = rank(field, span);

      // D(M): points whose vector pairs to zero with every point of M.
      long long dual = 0;
      for (int c = 0; c < n; ++c) {
        bool orth = true;
        for (std::size_t i = 0; i < cols.size() && orth; ++i) {
          Fq s = 0;
          for (int j = 0; j < k; ++j) s = field.add(s, field.mul(g.matrix.at(j, c), g.matrix.at(j, cols[i])));
          orth = s == 0;
        }
        dual += orth;
      }
      row.span_dims.push_back(dim);
      row.dual_counts.push_back(dual);
      row.H_dual.push_back(dim == 0 ? n : H_of(static_cast<std::size_t>(dim)));
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace schubert
