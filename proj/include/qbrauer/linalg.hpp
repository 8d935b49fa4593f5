#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qbrauer/rational.hpp"
#include "qbrauer/sparse_op.hpp"

namespace qbrauer {

// Row-major sparse rational matrix used only for rank computations.
// Row entries are sorted by column and free of explicit zeros.
struct SparseMatrix {
  std::size_t ncols = 0;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;

  // Appends a row given as (column, value) pairs; sorts and merges duplicates.
  void add_row(std::vector<std::pair<std::size_t, Rational>> entries);
};

// Exact rank over the rationals.  Dense fraction-free (Bareiss) elimination
// for small shapes, sparse elimination with Markowitz-style pivoting above;
// both paths are exact and agree.
[[nodiscard]] std::size_t exact_rank(SparseMatrix m);

// Rank of an operator seen as a matrix.
[[nodiscard]] std::size_t rank(const SparseOp& op);

// Whether every column of a lies in the span of the columns of the given
// operators (all on the same space).
[[nodiscard]] bool colspace_contained(const SparseOp& a, const std::vector<SparseOp>& spanning);

}  // namespace qbrauer
