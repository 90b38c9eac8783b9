#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "schubert/experiments.hpp"
#include "schubert/twodim.hpp"

namespace schubert {

enum class Format { Markdown, Csv, Json };
Format parse_format(std::string_view name);

/// A rendered-on-demand table. `json` carries the same content with typed
/// values. Horizontal tables print one row per column header in markdown.
struct Table {
  std::string title;
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
  nlohmann::json json;
  bool horizontal = false;
};

std::string render(const Table& t, Format f);

struct EnumerateRow {
  SchubertUnion u;
  std::size_t span;
  int krull;
  std::optional<MSet> mset;  // l = 2
  Poly g;
  bool maximal;  // lex-max g_U among unions of the same span
};

/// Every union, sorted by span then g_U (lexicographic).
std::vector<EnumerateRow> enumerate_rows(const GrassParams& params, std::size_t guard = kDefaultEnumerationGuard);

Table enumerate_table(const GrassParams& params, std::size_t guard = kDefaultEnumerationGuard);
Table dual_table(const SchubertUnion& u);
Table dual_pairs_table(const GrassParams& params, std::size_t guard = kDefaultEnumerationGuard);
Table bounds_table(const GrassParams& params, std::size_t guard = kDefaultEnumerationGuard);
Table directions_table(const GrassParams& params);
Table krull_table(const GrassParams& params);
Table encode_table(const SchubertUnion& u);

/// Weight hierarchy of C(l,m) over GF(q) for r in [r_lo, r_hi]. Oracle runs
/// are attempted when `budget` > 0 and skipped when they would exceed it.
Table weights_table(const GrassParams& params, int q, std::size_t r_lo, std::size_t r_hi, const BigInt& budget,
                    std::size_t guard = kDefaultEnumerationGuard);

/// Same for the code C_U of an l = 2 union.
Table union_weights_table(const SchubertUnion& u, int q, const BigInt& budget);

/// "Q3", "Q4", "Q8" or "Q9".
Table experiment_table(std::string_view name, const GrassParams& params, int q, const BigInt& budget,
                       std::size_t guard = kDefaultEnumerationGuard);

}  // namespace schubert
