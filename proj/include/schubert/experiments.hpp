#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "schubert/optimizer.hpp"
#include "schubert/weights.hpp"

namespace schubert {

enum class Verdict { Affirmative, Negative, Unknown };
std::string to_string(Verdict v);

struct ReciprocityResult {
  Verdict verdict = Verdict::Unknown;
  std::vector<std::size_t> failures;  // r where the identity breaks
  std::vector<std::size_t> unknown;   // r where a side is not known
};

/// Delta_r(q) = q^delta Delta_{k+1-r}(1/q) over the closed-form weights.
ReciprocityResult delta_reciprocity(const GrassParams& params);

/// E_r(q) = q^delta E_{k+1-r}(1/q) over the Schubert-union bounds.
ReciprocityResult e_reciprocity(const GrassParams& params, std::size_t guard = kDefaultEnumerationGuard);

struct DualMaximalityResult {
  Verdict verdict = Verdict::Unknown;
  bool exhaustive = false;           // all maximizers checked, not only the candidates
  std::vector<std::size_t> failing;  // spans K with a maximizer whose dual is not maximal
};

/// Whether every union of maximal g_U for span K has a dual of maximal g_U for span k-K.
DualMaximalityResult dual_maximality(const GrassParams& params, std::size_t guard = kDefaultEnumerationGuard);

struct SectionDualRow {
  std::size_t r = 0;
  long long H = 0;                 // H_r
  std::size_t maximizers = 0;      // maximal sections found (capped)
  bool truncated = false;
  std::vector<int> span_dims;      // dim L(M) per maximizer
  std::vector<long long> dual_counts;  // |D(M)| per maximizer
  std::vector<long long> H_dual;   // H_{k - dim L(M)} per maximizer
};

/// For each r, the maximal codimension-r sections M of C(l,m) and the sizes
/// of their geometric duals D(M). Reports only.
std::vector<SectionDualRow> section_duals(const GrassParams& params, const Field& field, std::size_t cap,
                                          const BigInt& budget = kDefaultOracleBudget);

}  // namespace schubert
