#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "koszulkit/rational.hpp"

namespace kzk {

// Sparse vector: (index, value) pairs sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<int, Rational>>;

// Scales v so its first nonzero entry is 1. No-op on the empty vector.
void normalize_leading_one(SparseVec& v);

// Immutable-after-canonicalize sparse matrix over the rationals.
// Entries are kept row-major sorted with duplicates merged and zeros dropped;
// every query function requires canonical form, so results never depend on
// the order entries were inserted.
struct SparseMatrix {
  struct Entry {
    int r;
    int c;
    Rational v;
  };

  int rows = 0;
  int cols = 0;
  std::vector<Entry> entries;

  SparseMatrix() = default;
  SparseMatrix(int rows_, int cols_) : rows(rows_), cols(cols_) {}

  // Accumulates v at (r, c). Call canonicalize() before queries.
  void add(int r, int c, Rational v);
  void canonicalize();
  bool is_canonical() const { return canonical_; }

  std::size_t nnz() const { return entries.size(); }
  SparseMatrix transposed() const;
  // Column c of the matrix as a sparse vector over row indices.
  SparseVec column(int c) const;
  // All columns at once (single pass over the entries).
  std::vector<SparseVec> columns() const;

 private:
  bool canonical_ = true;
};

// Exact rank. Fraction-free elimination on denominator-cleared integer rows,
// sparsest-column pivoting, connected components eliminated independently.
long rank(const SparseMatrix& m);

// Basis of the right kernel {x : Mx = 0}, read off the leftmost-pivot reduced
// row echelon form (one vector per free column, in ascending free-column
// order), each vector scaled so its first nonzero entry is 1.
std::vector<SparseVec> kernel_basis(const SparseMatrix& m);

// Pivot columns of the elimination used by rank(), ascending.
std::vector<int> image_pivot_columns(const SparseMatrix& m);

// Basis of the column space: the original matrix columns at the pivot
// indices, in ascending column order.
std::vector<SparseVec> image_basis(const SparseMatrix& m);

// Coefficients expressing target in the span of the given vectors (all living
// in a space of dimension dim), or nullopt if target is outside the span.
// Free (redundant) span vectors get coefficient 0.
std::optional<std::vector<Rational>> coordinates_in_span(
    const std::vector<SparseVec>& span, int dim, const SparseVec& target);

// Batched form: one elimination shared by all targets.
std::vector<std::optional<std::vector<Rational>>> coordinates_in_span_multi(
    const std::vector<SparseVec>& span, int dim, const std::vector<SparseVec>& targets);

// Reduced row echelon form with leftmost-column pivoting; the unique RREF of
// the row space. Used where the pivot/non-pivot split carries meaning
// (leading terms of a relation span, quotient-basis rewrite tables).
struct Rref {
  int cols = 0;
  long rank = 0;
  std::vector<int> pivot_cols;           // ascending
  std::vector<SparseVec> rows;           // rows[i] has leading entry (pivot_cols[i], 1)
  std::vector<int> row_of_pivot;         // size cols; -1 for non-pivot columns
  bool is_pivot(int c) const { return row_of_pivot[c] >= 0; }
  const SparseVec* row_for(int c) const {
    const int i = row_of_pivot[c];
    return i < 0 ? nullptr : &rows[i];
  }
};
Rref rref_leftmost(const SparseMatrix& m);

// MatrixMarket coordinate dump with entries rendered exactly as "p" / "p/q".
void write_matrix_market(const SparseMatrix& m, std::ostream& os);

// When non-empty, every top-level elimination dumps its input matrix into
// this directory as MatrixMarket files (debugging aid).
void set_debug_matrix_dir(const std::string& dir);

}  // namespace kzk
