#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubert/pluecker.hpp"
#include "schubert/poly.hpp"
#include "schubert/schubert_union.hpp"

namespace schubert {

inline const BigInt kDefaultOracleBudget = 20'000'000;

enum class WeightSource { NoginFormula, TopFormula, D5Formula, SchubertBound, Griesmer, Oracle };
std::string to_string(WeightSource s);

/// (r, d_r) pairs.
using WeightList = std::vector<std::pair<std::size_t, Poly>>;

/// d_r = q^delta + ... + q^(delta-r+1) for r = 1..max(l,m-l)+1.
WeightList nogin_weights(const GrassParams& params);

/// d_k = n and d_(k-a) = n - (1 + ... + q^(a-1)) for a = 1..max(l,m-l)+1.
WeightList top_weights(const GrassParams& params);

/// d_5 of C(2,5): n - (q^3+2q^2+q+1).
Poly d5_c25();

/// d_r for r = 1..k where a closed formula applies; nullopt elsewhere.
std::vector<std::optional<Poly>> known_weights(const GrassParams& params);

/// Delta_r = d_r - d_(r-1) where both neighbours are known.
std::vector<std::optional<Poly>> delta_table(const GrassParams& params);

/// Sum_{i<r} ceil(d1 / q^i).
BigInt griesmer_bound(const BigInt& d1, int q, std::size_t r);

/// Column bitset of a generator matrix.
using ColumnMask = std::vector<std::uint64_t>;

struct OracleResult {
  std::size_t r = 0;
  long long n = 0;
  long long H = 0;  // most columns inside one codimension-r subspace
  long long d = 0;  // n - H
  BigInt subspaces;  // r-dimensional subspaces of the dual, the search space size
};

/// Brute-force d_r of the code generated by g: sweeps every r-dimensional
/// space of functionals in reduced echelon form. Throws BudgetExceeded when
/// the number of such spaces exceeds `budget`.
OracleResult oracle_dr(const GeneratorMatrix& g, const Field& field, std::size_t r,
                       const BigInt& budget = kDefaultOracleBudget);

/// Grassmann code C(l,m) over `field`.
OracleResult oracle_dr(const GrassParams& params, const Field& field, std::size_t r,
                       const BigInt& budget = kDefaultOracleBudget);

/// Every column set cut out by a codimension-r section of maximal size, up to `cap` of them.
struct MaxSections {
  OracleResult result;
  std::vector<ColumnMask> sections;
  bool truncated = false;
};
MaxSections oracle_max_sections(const GeneratorMatrix& g, const Field& field, std::size_t r, std::size_t cap,
                                const BigInt& budget = kDefaultOracleBudget);

/// Smallest weight of a nonzero codeword, by sweeping all q^rows messages.
long long brute_force_min_distance(const GeneratorMatrix& g, const Field& field);

struct UnionCodeParams {
  SchubertUnion u;
  int q = 0;
  BigInt n;              // g_U(q)
  std::size_t k = 0;     // |G_U|
  int delta_min = 0;     // smallest Krull dimension among the maxima
  BigInt d1;             // q^delta_min
  std::size_t run = 0;   // length of the peelable run ending at a minimal cycle
  WeightList low;        // d_r, r = 1..run
  WeightList top;        // d_(k-a), a = 0..b-1 with b the largest second coordinate
  WeightList relative;   // upper bounds g_U - M_r, r = 0..k
};

/// Parameters of the code C_U for an l = 2 union.
UnionCodeParams union_code_params(const SchubertUnion& u, int q);

/// Lex-max g over sub-unions of u of each span 0..|G_U|.
std::vector<Poly> max_subunion_by_span(const SchubertUnion& u, std::size_t guard = kDefaultEnumerationGuard);

}  // namespace schubert
