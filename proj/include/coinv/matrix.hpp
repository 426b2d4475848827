#ifndef COINV_MATRIX_HPP
#define COINV_MATRIX_HPP

#include <utility>
#include <vector>

#include "coinv/rational.hpp"

namespace coinv {

// One sparse row over the integers: (column, value) pairs sorted by column,
// no zero values stored.
using SparseIntRow = std::vector<std::pair<int, Integer>>;

// Divides a row by the gcd of its entries and makes the leading entry
// positive.  No-op on the empty row.
void normalize_content(SparseIntRow& row);

// alpha*a + beta*b with merged sorted supports.
SparseIntRow row_combine(const SparseIntRow& a, const Integer& alpha,
                         const SparseIntRow& b, const Integer& beta);

// Incremental fraction-free row echelon form.  Rows are reduced against the
// current basis by cross-multiplication (never by rational division) and then
// content-normalized, which keeps entries as small integers.  Rows are kept
// sorted by pivot column.
class SparseEchelon {
 public:
  explicit SparseEchelon(int cols) : cols_(cols) {}

  // Returns true when the row was independent and extended the basis.
  bool add_row(SparseIntRow row);

  // Reduces `row` in place against the current basis without inserting it.
  void reduce(SparseIntRow& row) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  std::vector<int> pivots() const;
  const std::vector<SparseIntRow>& rows() const { return rows_; }

  // Eliminates every pivot column from the rows above it, giving the
  // (integer-scaled) reduced echelon form.
  void back_eliminate();

 private:
  int cols_;
  std::vector<SparseIntRow> rows_;  // sorted by leading column
};

// Dense matrix of rationals with exact rank / reduced echelon / null space.
// All elimination is delegated to SparseEchelon after clearing denominators.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_n_; }
  int cols() const { return cols_n_; }
  Rational& at(int r, int c);
  const Rational& at(int r, int c) const;

  int rank() const;

  // Reduced row echelon form: pivot entries 1, pivots cleared elsewhere,
  // zero rows dropped.
  RationalMatrix rref() const;

  // Exact basis of the right null space, itself in reduced echelon form with
  // leading coefficient 1, ordered by leading column.
  std::vector<std::vector<Rational>> null_space() const;

 private:
  SparseEchelon to_echelon() const;

  int rows_n_, cols_n_;
  std::vector<Rational> data_;
};

// Shared helper: reduced-echelon rational rows (leading coefficient 1) from a
// list of sparse integer rows.
std::vector<std::vector<Rational>> reduced_rational_rows(const std::vector<SparseIntRow>& rows,
                                                         int cols);

}  // namespace coinv

#endif
