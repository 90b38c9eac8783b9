#include "schubert/report.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include "schubert/duality.hpp"
#include "schubert/errors.hpp"
#include "schubert/serialize.hpp"

namespace schubert {

using nlohmann::json;

Format parse_format(std::string_view name) {
  if (name == "markdown" || name == "md") return Format::Markdown;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw InvalidArgument("unknown format: " + std::string(name));
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + c + " |";
  return out + "\n";
}

std::string md_rule(std::size_t n) {
  std::string out = "|";
  for (std::size_t i = 0; i < n; ++i) out += "---|";
  return out + "\n";
}

std::string mset_string(const std::optional<MSet>& m) {
  if (!m) return "";
  if (m->elements.empty()) return "∅";
  return m->to_string();
}

std::string str(const BigInt& v) { return v.str(); }

json big(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}


}  // namespace

std::string render(const Table& t, Format f) {
  std::ostringstream os;
  switch (f) {
    case Format::Json:
      os << json{{"title", t.title}, {"data", t.json}}.dump(2) << '\n';
      break;
    case Format::Csv:
      for (std::size_t i = 0; i < t.headers.size(); ++i) os << (i ? "," : "") << csv_field(t.headers[i]);
      os << '\n';
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
        os << '\n';
      }
      break;
    case Format::Markdown:
      if (!t.title.empty()) os << t.title << "\n\n";
      if (t.horizontal) {
        for (std::size_t h = 0; h < t.headers.size(); ++h) {
          std::vector<std::string> line{t.headers[h]};
          for (const auto& row : t.rows) line.push_back(row[h]);
          os << md_row(line);
          if (h == 0) os << md_rule(line.size());
        }
      } else {
        os << md_row(t.headers) << md_rule(t.headers.size());
        for (const auto& row : t.rows) os << md_row(row);
      }
      break;
  }
  return os.str();
}

std::vector<EnumerateRow> enumerate_rows(const GrassParams& params, std::size_t guard) {
  std::vector<EnumerateRow> rows;
  for_each_ideal(
      params,
      [&](const SchubertUnion& u) {
        std::optional<MSet> m;
        if (params.l() == 2) m = union_to_mset(u);
        Poly g = point_count_poly(u);
        const auto span = static_cast<std::size_t>(g.at_one());
        rows.push_back(EnumerateRow{u, span, krull_dimension(u), std::move(m), std::move(g), false});
      },
      guard);
  std::stable_sort(rows.begin(), rows.end(), [](const EnumerateRow& a, const EnumerateRow& b) {
    if (a.span != b.span) return a.span < b.span;
    const auto c = lex_compare(a.g, b.g);
    if (c != 0) return c < 0;
    return a.u < b.u;
  });
  std::map<std::size_t, Poly> best;
  for (const auto& r : rows) {
    auto it = best.find(r.span);
    if (it == best.end() || lex_compare(r.g, it->second) > 0) best[r.span] = r.g;
  }
  for (auto& r : rows) r.maximal = r.g == best[r.span];
  return rows;
}

Table enumerate_table(const GrassParams& params, std::size_t guard) {
  Table t;
  t.title = "G(" + std::to_string(params.l()) + "," + std::to_string(params.m()) + ")";
  t.headers = {"U", "Span", "Krull"};
  if (params.l() == 2) t.headers.push_back("M_U");
  t.headers.insert(t.headers.end(), {"Points", "Maximal"});
  t.json = json::array();
  for (const auto& r : enumerate_rows(params, guard)) {
    std::vector<std::string> row{r.u.to_string(), std::to_string(r.span), std::to_string(r.krull)};
    if (r.mset) row.push_back(mset_string(r.mset));
    row.push_back(r.g.to_string());
    row.push_back(r.maximal ? "Yes" : "No");
    t.rows.push_back(std::move(row));
    json j{{"union", to_json(r.u)}, {"span", r.span}, {"krull", r.krull}, {"points", to_json(r.g)}, {"maximal", r.maximal}};
    if (r.mset) j["m_u"] = r.mset->elements;
    t.json.push_back(std::move(j));
  }
  return t;
}

Table dual_table(const SchubertUnion& u) {
  const DualityReport rep = duality_report(u);
  const bool explicit_agrees = dual_union_explicit(u) == rep.dual;
  Table t;
  t.title = "Dual of " + u.to_string();
  t.headers = {"U", "Span", "Dual", "Dual span", "g_U", "g_U*", "Explicit formula agrees"};
  const Poly gd = point_count_poly(rep.dual);
  t.rows.push_back({u.to_string(), std::to_string(rep.span_primal), rep.dual.to_string(), std::to_string(rep.span_dual),
                    point_count_poly(u).to_string(), gd.to_string(), explicit_agrees ? "yes" : "no"});
  t.json = {{"union", to_json(u)},         {"span", rep.span_primal}, {"dual", to_json(rep.dual)},
            {"dual_span", rep.span_dual},   {"dual_points", to_json(gd)}, {"explicit_agrees", explicit_agrees}};
  return t;
}

Table dual_pairs_table(const GrassParams& params, std::size_t guard) {
  Table t;
  t.title = "Dual pairs for G(" + std::to_string(params.l()) + "," + std::to_string(params.m()) + ")";
  t.headers = {"U", "Span", "Dual", "Maximal"};
  t.json = json::array();
  for (const auto& r : enumerate_rows(params, guard)) {
    if (2 * r.span > params.grid_size()) continue;
    const SchubertUnion d = dual_union(r.u);
    t.rows.push_back({r.u.to_string(), std::to_string(r.span), d.to_string(), r.maximal ? "Yes" : "No"});
    t.json.push_back({{"union", to_json(r.u)}, {"span", r.span}, {"dual", to_json(d)}, {"maximal", r.maximal}});
  }
  return t;
}

Table bounds_table(const GrassParams& params, std::size_t guard) {
  const BoundTable bt = bound_table(params, guard);
  Table t;
  t.title = "C(" + std::to_string(params.l()) + "," + std::to_string(params.m()) + ")";
  t.headers = {"r", "K", "J_r", "D_r", "E_r"};
  if (params.l() == 2) t.headers.push_back("Direction");
  t.headers.push_back("Witness");
  t.json = json::array();
  for (const auto& row : bt.rows) {
    std::vector<std::string> cells{std::to_string(row.r), std::to_string(row.K), row.J.to_string(), row.D.to_string(),
                                   row.r ? row.E.to_string() : ""};
    if (row.direction) cells.push_back(to_string(*row.direction));
    cells.push_back(row.witness.to_string());
    t.rows.push_back(std::move(cells));
    json j{{"r", row.r}, {"K", row.K}, {"J", to_json(row.J)}, {"D", to_json(row.D)}, {"E", to_json(row.E)},
           {"witness", to_json(row.witness)}};
    if (row.direction) j["direction"] = to_string(*row.direction);
    t.json.push_back(std::move(j));
  }
  return t;
}

Table directions_table(const GrassParams& params) {
  if (params.l() != 2) throw NotTwoDim();
  const std::size_t k = params.grid_size();
  Table t;
  t.title = "C(2," + std::to_string(params.m()) + ")";
  t.headers = {"Codim", "Direction"};
  t.horizontal = true;
  t.json = json::array();
  for (std::size_t r = 0; r <= k; ++r) {
    const Direction d = best_union(params, k - r).direction;
    t.rows.push_back({std::to_string(r), to_string(d)});
    t.json.push_back({{"codim", r}, {"direction", to_string(d)}});
  }
  return t;
}

Table krull_table(const GrassParams& params) {
  Table t;
  t.title = "Krull dimension by span, G(2," + std::to_string(params.m()) + ")";
  t.headers = {"K", "d(K)", "C(d(K))", "Regime", "Direction", "Consistent"};
  t.json = json::array();
  for (const auto& row : threshold_report(params)) {
    const auto c = krull_C(params, row.dK);
    t.rows.push_back({std::to_string(row.K), std::to_string(row.dK), c ? std::to_string(*c) : "inf",
                      to_string(row.regime), to_string(row.direction), row.consistent ? "yes" : "no"});
    t.json.push_back({{"K", row.K},
                      {"d", row.dK},
                      {"C", c ? json(*c) : json(nullptr)},
                      {"regime", to_string(row.regime)},
                      {"direction", to_string(row.direction)},
                      {"consistent", row.consistent}});
  }
  return t;
}

Table encode_table(const SchubertUnion& u) {
  if (u.params().l() != 2) throw NotTwoDim();
  const int m = u.params().m();
  const MSet mu = union_to_mset(u);
  const SchubertUnion d = dual_union(u);
  Table t;
  t.title = "Encodings of " + u.to_string();
  t.headers = {"U", "M_U", "sigma_U", "U*", "M_U*", "sigma_U*"};
  const std::string sig = u.is_empty() ? "" : union_to_sigma(u).to_string();
  const std::string dsig = d.is_empty() ? "" : union_to_sigma(d).to_string();
  t.rows.push_back({u.to_string(), mset_string(mu), sig, d.to_string(), mset_string(mset_complement_is_dual(mu)), dsig});
  t.json = {{"union", to_json(u)}, {"m_u", mu.elements}, {"dual", to_json(d)},
            {"dual_m_u", mset_complement_is_dual(mu).elements}};
  if (!u.is_empty()) {
    const SigmaSeq s = union_to_sigma(u);
    t.json["sigma"] = {{"a", s.a}, {"b", s.b}};
    const auto ds = dual_sigma(m, s);
    t.json["dual_sigma"] = ds ? json{{"a", ds->a}, {"b", ds->b}} : json(nullptr);
  }
  return t;
}

namespace {

struct OracleCell {
  std::string text;
  json value;
};

template <class F>
OracleCell try_oracle(F&& run) {
  try {
    const long long d = run();
    return {std::to_string(d), d};
  } catch (const BudgetExceeded& e) {
    return {"over budget (" + e.required().str() + ")", nullptr};
  } catch (const TooLarge&) {
    return {"too large", nullptr};
  }
}

}  // namespace

Table weights_table(const GrassParams& params, int q, std::size_t r_lo, std::size_t r_hi, const BigInt& budget,
                    std::size_t guard) {
  const Field field(q);
  const std::size_t k = params.grid_size();
  r_hi = std::min(r_hi, k);
  if (r_lo < 1) r_lo = 1;
  const auto known = known_weights(params);
  const BigInt d1 = ipow(q, params.delta());

  std::optional<BoundTable> bt;
  try {
    bt = bound_table(params, guard);
  } catch (const TooLarge&) {
  }
  std::optional<GeneratorMatrix> gm;
  if (budget > 0) {
    try {
      gm = generator_matrix(SchubertUnion::full(params), field);
    } catch (const TooLarge&) {
    }
  }

  Table t;
  t.title = "Weights of C(" + std::to_string(params.l()) + "," + std::to_string(params.m()) + ") over GF(" +
            std::to_string(q) + ")";
  t.headers = {"r", "d_r formula", "d_r", "Source", "Griesmer", "D_r", "Oracle"};
  t.json = json::array();
  const auto nogin = nogin_weights(params);
  const auto top = top_weights(params);
  for (std::size_t r = r_lo; r <= r_hi; ++r) {
    std::string source;
    if (known[r]) {
      if (std::any_of(nogin.begin(), nogin.end(), [&](const auto& w) { return w.first == r; })) {
        source = to_string(WeightSource::NoginFormula);
      } else if (std::any_of(top.begin(), top.end(), [&](const auto& w) { return w.first == r; })) {
        source = to_string(WeightSource::TopFormula);
      } else {
        source = to_string(WeightSource::D5Formula);
      }
    }
    const BigInt lower = griesmer_bound(d1, q, r);
    std::optional<BigInt> upper;
    if (bt) upper = bt->rows[r].D.evaluate(q);
    OracleCell oc{"off", nullptr};
    if (gm) oc = try_oracle([&] { return oracle_dr(*gm, field, r, budget).d; });
    else if (budget > 0) oc = {"too large", nullptr};

    std::string value = known[r] ? str(known[r]->evaluate(q)) : "[" + str(lower) + ", " + (upper ? str(*upper) : "?") + "]";
    t.rows.push_back({std::to_string(r), known[r] ? known[r]->to_string() : "", value, source, str(lower),
                      upper ? str(*upper) : "", oc.text});
    json j{{"r", r}, {"griesmer", big(lower)}, {"oracle", oc.value}};
    if (known[r]) {
      j["formula"] = to_json(*known[r]);
      j["value"] = big(known[r]->evaluate(q));
      j["source"] = source;
    } else {
      j["interval"] = {big(lower), upper ? big(*upper) : json(nullptr)};
    }
    if (upper) j["schubert_bound"] = big(*upper);
    t.json.push_back(std::move(j));
  }
  return t;
}

Table union_weights_table(const SchubertUnion& u, int q, const BigInt& budget) {
  const Field field(q);
  const UnionCodeParams cp = union_code_params(u, q);
  std::optional<GeneratorMatrix> gm;
  if (budget > 0) gm = generator_matrix(u, field);

  std::map<std::size_t, std::pair<Poly, WeightSource>> formula;
  for (const auto& [r, p] : cp.low) formula.emplace(r, std::make_pair(p, WeightSource::NoginFormula));
  for (const auto& [r, p] : cp.top) formula.emplace(r, std::make_pair(p, WeightSource::TopFormula));

  Table t;
  t.title = "Weights of C_U for U = " + u.to_string() + " over GF(" + std::to_string(q) + "), n = " + str(cp.n) +
            ", k = " + std::to_string(cp.k) + ", d_1 = " + str(cp.d1);
  t.headers = {"r", "d_r formula", "Source", "Griesmer", "Relative bound", "Oracle"};
  t.json = json::array();
  for (std::size_t r = 1; r <= cp.k; ++r) {
    const auto it = formula.find(r);
    const BigInt lower = griesmer_bound(cp.d1, q, r);
    const BigInt upper = cp.relative[r].second.evaluate(q);
    OracleCell oc{"off", nullptr};
    if (gm) oc = try_oracle([&] { return oracle_dr(*gm, field, r, budget).d; });
    t.rows.push_back({std::to_string(r), it != formula.end() ? it->second.first.to_string() : "",
                      it != formula.end() ? to_string(it->second.second) : "", str(lower), str(upper), oc.text});
    json j{{"r", r}, {"griesmer", big(lower)}, {"relative_bound", big(upper)}, {"oracle", oc.value}};
    if (it != formula.end()) {
      j["formula"] = to_json(it->second.first);
      j["value"] = big(it->second.first.evaluate(q));
      j["source"] = to_string(it->second.second);
    }
    t.json.push_back(std::move(j));
  }
  return t;
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::string params_label(const GrassParams& p) { return "(" + std::to_string(p.l()) + "," + std::to_string(p.m()) + ")"; }

}  // namespace

Table experiment_table(std::string_view name, const GrassParams& params, int q, const BigInt& budget,
                       std::size_t guard) {
  Table t;
  if (name == "Q3" || name == "Q9") {
    const ReciprocityResult res = name == "Q3" ? delta_reciprocity(params) : e_reciprocity(params, guard);
    t.title = std::string(name) + " " + params_label(params) + ": " + to_string(res.verdict);
    t.headers = {"Question", "l", "m", "Answer", "Failing r", "Unknown r"};
    t.rows.push_back({std::string(name), std::to_string(params.l()), std::to_string(params.m()), to_string(res.verdict),
                      join(res.failures), join(res.unknown)});
    t.json = {{"question", name}, {"l", params.l()},          {"m", params.m()},
              {"answer", to_string(res.verdict)}, {"failures", res.failures}, {"unknown", res.unknown}};
    return t;
  }
  if (name == "Q8") {
    const DualMaximalityResult res = dual_maximality(params, guard);
    std::string answer = to_string(res.verdict);
    if (!res.failing.empty()) answer += " (witness K=" + std::to_string(res.failing.front()) + ")";
    t.title = "Q8 " + params_label(params) + ": " + answer;
    t.headers = {"Question", "l", "m", "Answer", "Failing K", "Exhaustive"};
    t.rows.push_back({"Q8", std::to_string(params.l()), std::to_string(params.m()), answer, join(res.failing),
                      res.exhaustive ? "yes" : "no"});
    t.json = {{"question", "Q8"},
              {"l", params.l()},
              {"m", params.m()},
              {"answer", to_string(res.verdict)},
              {"failing", res.failing},
              {"exhaustive", res.exhaustive}};
    if (!res.failing.empty()) t.json["witness"] = res.failing.front();
    return t;
  }
  if (name == "Q4") {
    const Field field(q);
    t.title = "Q4 " + params_label(params) + " over GF(" + std::to_string(q) + "): reported, not asserted";
    t.headers = {"r", "H_r", "Maximal sections", "dim L(M)", "#D(M)", "H at that codim", "Matches"};
    t.json = json::array();
    for (const auto& row : section_duals(params, field, 10000, budget)) {
      std::map<std::tuple<int, long long, long long>, std::size_t> groups;
      for (std::size_t i = 0; i < row.maximizers; ++i) ++groups[{row.span_dims[i], row.dual_counts[i], row.H_dual[i]}];
      for (const auto& [key, count] : groups) {
        const auto& [dim, dual, hd] = key;
        t.rows.push_back({std::to_string(row.r), std::to_string(row.H),
                          std::to_string(count) + (row.truncated ? "+" : ""), std::to_string(dim),
                          std::to_string(dual), std::to_string(hd), dual == hd ? "yes" : "no"});
        t.json.push_back({{"r", row.r},
                          {"H", row.H},
                          {"sections", count},
                          {"truncated", row.truncated},
                          {"span_dim", dim},
                          {"dual_count", dual},
                          {"H_at_dual_codim", hd}});
      }
    }
    return t;
  }
  throw InvalidArgument("unknown experiment: " + std::string(name) + " (expected Q3, Q4, Q8 or Q9)");
}

}  // namespace schubert
