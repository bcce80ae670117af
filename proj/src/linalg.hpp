#pragma once

#include <optional>
#include <vector>

#include "polynomial.hpp"

namespace ckforms {

// Incremental reduced row echelon basis over the rationals. Rows are kept
// fully reduced against each other (Gauss-Jordan) with leading coefficient 1,
// stored by increasing pivot column, so membership tests and rank queries are
// exact and order-independent.
class RowReducer {
 public:
  explicit RowReducer(size_t width) : width_(width) {}

  // Reduces v against the current rows; if a nonzero residual remains it is
  // normalized and inserted. Returns true when the rank grew.
  bool insert(std::vector<Rat> v);

  // Residual of v after reduction; v itself is not inserted.
  std::vector<Rat> reduce(std::vector<Rat> v) const;

  bool contains(const std::vector<Rat>& v) const;

  size_t rank() const { return rows_.size(); }
  size_t width() const { return width_; }
  const std::vector<std::vector<Rat>>& rows() const { return rows_; }

 private:
  size_t width_;
  std::vector<std::vector<Rat>> rows_;   // sorted by pivot column
  std::vector<size_t> pivots_;
};

// Canonical reduced row echelon basis of the row span; rows ordered by pivot.
std::vector<std::vector<Rat>> reduced_row_basis(const std::vector<std::vector<Rat>>& rows);

size_t rank_of(const std::vector<GradedVector>& vectors);

// Basis of { c : sum_i c_i * vectors_i = 0 }, returned in reduced echelon
// form over the coefficient coordinates with leading coefficient 1.
std::vector<std::vector<Rat>> kernel_basis(const std::vector<GradedVector>& vectors);

bool in_span(const GradedVector& target, const std::vector<GradedVector>& spanning);

// Solves sum_i c_i * vectors_i = target when the vectors are linearly
// independent; nullopt when the target lies outside their span.
std::optional<std::vector<Rat>> express_in_basis(const std::vector<GradedVector>& vectors,
                                                 const GradedVector& target);

bool integer_matrix_full_column_rank(const std::vector<std::vector<long long>>& rows);

}  // namespace ckforms
