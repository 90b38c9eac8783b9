#include "schubert/weights.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "schubert/errors.hpp"
#include "schubert/twodim.hpp"

namespace schubert {

std::string to_string(WeightSource s) {
  switch (s) {
    case WeightSource::NoginFormula: return "nogin";
    case WeightSource::TopFormula: return "top";
    case WeightSource::D5Formula: return "d5";
    case WeightSource::SchubertBound: return "schubert-bound";
    case WeightSource::Griesmer: return "griesmer";
    case WeightSource::Oracle: return "oracle";
  }
  return "?";
}

namespace {

int formula_range(const GrassParams& params) { return std::max(params.l(), params.m() - params.l()) + 1; }

}  // namespace

WeightList nogin_weights(const GrassParams& params) {
  const int delta = params.delta();
  const auto k = static_cast<std::size_t>(params.grid_size());
  WeightList out;
  Poly d;
  for (int r = 1; r <= formula_range(params) && static_cast<std::size_t>(r) <= k && delta - r + 1 >= 0; ++r) {
    d += Poly::monomial(delta - r + 1);
    out.emplace_back(static_cast<std::size_t>(r), d);
  }
  return out;
}

WeightList top_weights(const GrassParams& params) {
  const auto k = params.grid_size();
  const Poly n = grassmannian_point_count(params);
  WeightList out;
  for (int a = 0; a <= formula_range(params) && static_cast<std::size_t>(a) < k; ++a)
    out.emplace_back(k - static_cast<std::size_t>(a), n - Poly::geometric(a));
  return out;
}

Poly d5_c25() { return grassmannian_point_count(GrassParams(2, 5)) - Poly::parse("q^3+2q^2+q+1"); }

std::vector<std::optional<Poly>> known_weights(const GrassParams& params) {
  const auto k = params.grid_size();
  std::vector<std::optional<Poly>> d(k + 1);
  d[0] = Poly{};
  for (auto& [r, p] : nogin_weights(params)) d[r] = p;
  for (auto& [r, p] : top_weights(params)) d[r] = p;
  if (params == GrassParams(2, 5)) d[5] = d5_c25();
  return d;
}

std::vector<std::optional<Poly>> delta_table(const GrassParams& params) {
  const auto d = known_weights(params);
  std::vector<std::optional<Poly>> out(d.size());
  for (std::size_t r = 1; r < d.size(); ++r)
    if (d[r] && d[r - 1]) out[r] = *d[r] - *d[r - 1];
  return out;
}

BigInt griesmer_bound(const BigInt& d1, int q, std::size_t r) {
  BigInt sum = 0;
  BigInt pw = 1;
  for (std::size_t i = 0; i < r; ++i) {
    sum += (d1 + pw - 1) / pw;
    pw *= q;
  }
  return sum;
}

namespace {

std::size_t popcount(const ColumnMask& m) {
  std::size_t c = 0;
  for (auto w : m) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

// Masks of columns annihilated by a functional, optionally memoized over all q^k functionals.
class Annihilators {
 public:
  Annihilators(const GeneratorMatrix& g, const Field& f) : g_(g), f_(f), words_((static_cast<std::size_t>(g.n()) + 63) / 64) {
    const BigInt total = ipow(f.q(), g.rows());
    if (total <= (1u << 20) && total * words_ * 8 <= BigInt(256) << 20) {
      const auto count = static_cast<std::size_t>(total);
      table_.resize(count * words_);
      std::vector<Fq> v(static_cast<std::size_t>(g.rows()), 0);
      for (std::size_t code = 0; code < count; ++code) {
        std::size_t c = code;
        for (auto& x : v) {
          x = static_cast<Fq>(c % static_cast<std::size_t>(f.q()));
          c /= static_cast<std::size_t>(f.q());
        }
        compute(v, table_.data() + code * words_);
      }
    }
  }

  std::size_t words() const { return words_; }

  void get(const std::vector<Fq>& v, std::uint64_t* out) const {
    if (table_.empty()) {
      compute(v, out);
      return;
    }
    std::size_t code = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) code = code * static_cast<std::size_t>(f_.q()) + *it;
    std::copy_n(table_.data() + code * words_, words_, out);
  }

 private:
  void compute(const std::vector<Fq>& v, std::uint64_t* out) const {
    std::fill_n(out, words_, 0);
    for (int c = 0; c < g_.n(); ++c) {
      Fq s = 0;
      for (int r = 0; r < g_.rows(); ++r)
        if (v[static_cast<std::size_t>(r)]) s = f_.add(s, f_.mul(v[static_cast<std::size_t>(r)], g_.matrix.at(r, c)));
      if (s == 0) out[c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }

  const GeneratorMatrix& g_;
  const Field& f_;
  std::size_t words_;
  std::vector<std::uint64_t> table_;
};

// Depth-first sweep over r-dimensional subspaces of F_q^k in reduced echelon
// form, intersecting annihilator masks row by row. Subtrees whose mask is
// already no larger than the best (or smaller, when collecting ties) are cut.
class Sweep {
 public:
  Sweep(const GeneratorMatrix& g, const Field& f, std::size_t r, bool collect, std::size_t cap)
      : g_(g), f_(f), ann_(g, f), r_(r), k_(g.rows()), collect_(collect), cap_(cap),
        masks_(r + 1, ColumnMask(ann_.words(), 0)), row_mask_(ann_.words()) {
    for (int c = 0; c < g.n(); ++c) masks_[0][static_cast<std::size_t>(c) / 64] |= std::uint64_t{1} << (c % 64);
  }

  MaxSections run() {
    out_.result.r = r_;
    out_.result.n = g_.n();
    choose_pivots(0);
    out_.result.H = best_;
    out_.result.d = g_.n() - best_;
    return std::move(out_);
  }

 private:
  bool beats(long long count) const { return collect_ ? count >= best_ : count > best_; }

  void choose_pivots(int from) {
    if (pivots_.size() == r_) {
      rows(0);
      return;
    }
    for (int c = from; c + static_cast<int>(r_ - pivots_.size()) <= k_; ++c) {
      pivots_.push_back(c);
      choose_pivots(c + 1);
      pivots_.pop_back();
    }
  }

  void rows(std::size_t i) {
    const auto here = static_cast<long long>(popcount(masks_[i]));
    if (!beats(here)) return;
    if (i == r_) {
      if (here > best_) {
        best_ = here;
        out_.sections.clear();
        out_.truncated = false;
      }
      if (collect_) {
        if (out_.sections.size() < cap_) {
          out_.sections.push_back(masks_[i]);
        } else {
          out_.truncated = true;
        }
      }
      return;
    }
    const int p = pivots_[i];
    std::vector<int> free;
    for (int c = p + 1; c < k_; ++c)
      if (std::find(pivots_.begin(), pivots_.end(), c) == pivots_.end()) free.push_back(c);
    std::vector<int> vals(free.size(), 0);
    std::vector<Fq> v(static_cast<std::size_t>(k_), 0);
    while (true) {
      std::fill(v.begin(), v.end(), 0);
      v[static_cast<std::size_t>(p)] = 1;
      for (std::size_t t = 0; t < free.size(); ++t) v[static_cast<std::size_t>(free[t])] = static_cast<Fq>(vals[t]);
      ann_.get(v, row_mask_.data());
      for (std::size_t w = 0; w < row_mask_.size(); ++w) masks_[i + 1][w] = masks_[i][w] & row_mask_[w];
      rows(i + 1);
      int j = static_cast<int>(vals.size()) - 1;
      while (j >= 0 && ++vals[static_cast<std::size_t>(j)] == f_.q()) vals[static_cast<std::size_t>(j--)] = 0;
      if (j < 0) break;
    }
  }

  const GeneratorMatrix& g_;
  const Field& f_;
  Annihilators ann_;
  std::size_t r_;
  int k_;
  bool collect_;
  std::size_t cap_;
  long long best_ = -1;
  std::vector<int> pivots_;
  std::vector<ColumnMask> masks_;
  ColumnMask row_mask_;
  MaxSections out_;
};

MaxSections sweep(const GeneratorMatrix& g, const Field& f, std::size_t r, bool collect, std::size_t cap,
                  const BigInt& budget) {
  if (r > static_cast<std::size_t>(g.rows()))
    throw InvalidArgument("r = " + std::to_string(r) + " exceeds code dimension " + std::to_string(g.rows()));
  const BigInt count = gaussian_binomial(g.rows(), static_cast<int>(r), f.q());
  if (count > budget) throw BudgetExceeded(count, budget);
  MaxSections out = Sweep(g, f, r, collect, cap).run();
  out.result.subspaces = count;
  return out;
}

}  // namespace

OracleResult oracle_dr(const GeneratorMatrix& g, const Field& field, std::size_t r, const BigInt& budget) {
  return sweep(g, field, r, false, 0, budget).result;
}

OracleResult oracle_dr(const GrassParams& params, const Field& field, std::size_t r, const BigInt& budget) {
  return oracle_dr(generator_matrix(SchubertUnion::full(params), field), field, r, budget);
}

MaxSections oracle_max_sections(const GeneratorMatrix& g, const Field& field, std::size_t r, std::size_t cap,
                                const BigInt& budget) {
  return sweep(g, field, r, true, cap, budget);
}

long long brute_force_min_distance(const GeneratorMatrix& g, const Field& field) {
  if (g.rows() == 0) throw InvalidArgument("code of dimension 0 has no nonzero codeword");
  const BigInt total = ipow(field.q(), g.rows());
  if (total > (1u << 24)) throw TooLarge("message space of size " + total.str() + " is too large to sweep");
  std::vector<Fq> msg(static_cast<std::size_t>(g.rows()), 0);
  long long best = g.n();
  while (true) {
    int j = g.rows() - 1;
    while (j >= 0 && ++msg[static_cast<std::size_t>(j)] == field.q()) msg[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
    long long weight = 0;
    for (int c = 0; c < g.n(); ++c) {
      Fq s = 0;
      for (int r = 0; r < g.rows(); ++r)
        if (msg[static_cast<std::size_t>(r)]) s = field.add(s, field.mul(msg[static_cast<std::size_t>(r)], g.matrix.at(r, c)));
      weight += s != 0;
    }
    best = std::min(best, weight);
  }
  return best;
}

std::vector<Poly> max_subunion_by_span(const SchubertUnion& u, std::size_t guard) {
  std::vector<std::optional<Poly>> best(spanning_dimension(u) + 1);
  for_each_subunion(
      u,
      [&](const SchubertUnion& sub) {
        Poly g = point_count_poly(sub);
        auto& slot = best[static_cast<std::size_t>(g.at_one())];
        if (!slot || lex_compare(g, *slot) > 0) slot = std::move(g);
      },
      guard);
  std::vector<Poly> out;
  for (auto& p : best) out.push_back(p.value_or(Poly{}));
  return out;
}

UnionCodeParams union_code_params(const SchubertUnion& u, int q) {
  if (u.params().l() != 2) throw NotTwoDim();
  if (u.is_empty()) throw EmptyUnion();
  UnionCodeParams out{u, q, {}, {}, 0, {}, 0, {}, {}, {}};
  const Poly g = point_count_poly(u);
  out.n = g.evaluate(q);
  out.k = spanning_dimension(u);

  const SigmaSeq sigma = union_to_sigma(u);
  out.delta_min = krull_dimension(u);
  for (const auto& a : u.maxima()) out.delta_min = std::min(out.delta_min, cell_dimension(a));
  out.d1 = ipow(q, out.delta_min);

  // (a-j, b) can be peeled off one at a time as long as no cycle with a larger
  // second coordinate reaches column a-j, i.e. down to a_(i-1) + 1.
  int prev_a = 0;
  for (int i = 0; i < sigma.s(); ++i) {
    const int a = sigma.a[static_cast<std::size_t>(i)];
    const int b = sigma.b[static_cast<std::size_t>(i)];
    if (a + b - 3 == out.delta_min) out.run = std::max(out.run, static_cast<std::size_t>(a - prev_a));
    prev_a = a;
  }
  Poly d;
  for (std::size_t r = 1; r <= out.run; ++r) {
    d += Poly::monomial(out.delta_min - static_cast<int>(r) + 1);
    out.low.emplace_back(r, d);
  }

  const int b_max = sigma.b.front();
  for (int a = 0; a <= b_max - 1 && static_cast<std::size_t>(a) < out.k; ++a)
    out.top.emplace_back(out.k - static_cast<std::size_t>(a), g - Poly::geometric(a));

  const auto M = max_subunion_by_span(u);
  for (std::size_t r = 0; r <= out.k; ++r) out.relative.emplace_back(r, g - M[out.k - r]);
  return out;
}

}  // namespace schubert
