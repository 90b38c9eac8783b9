#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "schubert/field.hpp"
#include "schubert/schubert_union.hpp"

namespace schubert {

inline constexpr std::size_t kDefaultPointGuard = 10'000'000;

/// A point of the cell C_alpha: the free entries of its reduced lower-left
/// triangular basis, row by row, left to right.
struct CellPoint {
  GridPoint alpha;
  std::vector<Fq> free_entries;
};

/// Number of free entries in row i (0-based) of the reduced form: a_i - (i+1).
int free_entries_in_row(const GridPoint& alpha, int i);

/// The l x m reduced form: row i ends in a 1 at column a_i, is zero to its
/// right and zero in the pivot columns of earlier rows.
FqMatrix reduced_form(const GrassParams& params, const CellPoint& point);

/// Maximal minors of the reduced form, indexed by full_grid(params).
std::vector<Fq> pluecker_vector(const GrassParams& params, const Field& field, const CellPoint& point);

/// Visits every F_q-point of the union: cells in lexicographic order, free
/// entries in odometer order (last entry fastest). Throws TooLarge when the
/// point count g_U(q) exceeds `guard`.
void enumerate_points(const SchubertUnion& u, const Field& field,
                      const std::function<void(const CellPoint&, const std::vector<Fq>&)>& visit,
                      std::size_t guard = kDefaultPointGuard);

/// Columns are Plücker vectors of the points, restricted to the coordinates in G_U.
struct GeneratorMatrix {
  int q = 0;
  SchubertUnion u;
  std::vector<GridPoint> coordinates;  // row labels
  std::vector<GridPoint> cells;        // cell of each column
  FqMatrix matrix;                     // rows x n

  int rows() const noexcept { return matrix.rows(); }
  int n() const noexcept { return matrix.cols(); }
};

GeneratorMatrix generator_matrix(const SchubertUnion& u, const Field& field, std::size_t guard = kDefaultPointGuard);

/// One column per line, entries as space-separated integers.
void write_text(std::ostream& os, const GeneratorMatrix& g);

/// One JSON header line {"q","l","m","rows","n","union"} followed by rows*n
/// bytes, row-major, one byte per entry.
void write_binary(std::ostream& os, const GeneratorMatrix& g);

}  // namespace schubert
