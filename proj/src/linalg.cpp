#include "linalg.hpp"

#include <algorithm>

#include "errors.hpp"

namespace ckforms {

bool RowReducer::insert(std::vector<Rat> v) {
  if (v.size() != width_) throw InvalidInput("row width mismatch in reducer");
  v = reduce(std::move(v));
  size_t p = 0;
  while (p < width_ && v[p] == 0) ++p;
  if (p == width_) return false;

  Rat lead = v[p];
  for (auto& x : v) x /= lead;
  // Clear the new pivot column from existing rows to stay fully reduced.
  for (size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r][p] != 0) {
      Rat f = rows_[r][p];
      for (size_t j = 0; j < width_; ++j) rows_[r][j] -= f * v[j];
    }
  }
  size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < p) ++at;
  rows_.insert(rows_.begin() + at, std::move(v));
  pivots_.insert(pivots_.begin() + at, p);
  return true;
}

std::vector<Rat> RowReducer::reduce(std::vector<Rat> v) const {
  if (v.size() != width_) throw InvalidInput("row width mismatch in reducer");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Rat& f = v[pivots_[r]];
    if (f != 0) {
      Rat factor = f;  // pivot entries are 1
      for (size_t j = 0; j < width_; ++j) v[j] -= factor * rows_[r][j];
    }
  }
  return v;
}

bool RowReducer::contains(const std::vector<Rat>& v) const {
  std::vector<Rat> res = reduce(v);
  return std::all_of(res.begin(), res.end(), [](const Rat& x) { return x == 0; });
}

std::vector<std::vector<Rat>> reduced_row_basis(
    const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return {};
  RowReducer red(rows[0].size());
  for (const auto& r : rows) red.insert(r);
  return red.rows();
}

namespace {

void check_aligned(const std::vector<GradedVector>& vectors) {
  for (size_t i = 1; i < vectors.size(); ++i) {
    if (vectors[i].num_vars != vectors[0].num_vars ||
        vectors[i].degree != vectors[0].degree ||
        vectors[i].coords.size() != vectors[0].coords.size()) {
      throw InvalidInput("graded vectors live in different graded pieces");
    }
  }
}

}  // namespace

size_t rank_of(const std::vector<GradedVector>& vectors) {
  if (vectors.empty()) return 0;
  check_aligned(vectors);
  RowReducer red(vectors[0].coords.size());
  for (const auto& v : vectors) red.insert(v.coords);
  return red.rank();
}

std::vector<std::vector<Rat>> kernel_basis(const std::vector<GradedVector>& vectors) {
  if (vectors.empty()) return {};
  check_aligned(vectors);
  size_t n = vectors.size();
  size_t dim = vectors[0].coords.size();

  // Gauss-Jordan on the matrix whose columns are the input vectors, then read
  // off the standard nullspace basis from the free columns.
  std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(n, Rat(0)));
  for (size_t c = 0; c < n; ++c) {
    for (size_t r = 0; r < dim; ++r) m[r][c] = vectors[c].coords[r];
  }
  std::vector<size_t> pivot_row_of_col(n, SIZE_MAX);
  size_t row = 0;
  for (size_t col = 0; col < n && row < dim; ++col) {
    size_t pr = row;
    while (pr < dim && m[pr][col] == 0) ++pr;
    if (pr == dim) continue;
    std::swap(m[pr], m[row]);
    Rat lead = m[row][col];
    for (size_t j = col; j < n; ++j) m[row][j] /= lead;
    for (size_t r = 0; r < dim; ++r) {
      if (r != row && m[r][col] != 0) {
        Rat f = m[r][col];
        for (size_t j = col; j < n; ++j) m[r][j] -= f * m[row][j];
      }
    }
    pivot_row_of_col[col] = row;
    ++row;
  }

  std::vector<std::vector<Rat>> basis;
  for (size_t f = 0; f < n; ++f) {
    if (pivot_row_of_col[f] != SIZE_MAX) continue;
    std::vector<Rat> k(n, Rat(0));
    k[f] = 1;
    for (size_t c = 0; c < f; ++c) {
      if (pivot_row_of_col[c] != SIZE_MAX) k[c] = -m[pivot_row_of_col[c]][f];
    }
    basis.push_back(std::move(k));
  }
  // Canonical form: reduced echelon over the coefficient coordinates.
  return reduced_row_basis(basis);
}

bool in_span(const GradedVector& target, const std::vector<GradedVector>& spanning) {
  if (spanning.empty()) return target.is_zero();
  std::vector<GradedVector> all = spanning;
  all.push_back(target);
  check_aligned(all);
  RowReducer red(target.coords.size());
  for (const auto& v : spanning) red.insert(v.coords);
  return red.contains(target.coords);
}

std::optional<std::vector<Rat>> express_in_basis(
    const std::vector<GradedVector>& vectors, const GradedVector& target) {
  size_t n = vectors.size();
  if (n == 0) {
    if (target.is_zero()) return std::vector<Rat>{};
    return std::nullopt;
  }
  std::vector<GradedVector> all = vectors;
  all.push_back(target);
  check_aligned(all);
  size_t dim = target.coords.size();

  // Augmented elimination on [A | t]; the inputs are required to be
  // independent so the solution, when it exists, is unique.
  std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(n + 1, Rat(0)));
  for (size_t c = 0; c < n; ++c) {
    for (size_t r = 0; r < dim; ++r) m[r][c] = vectors[c].coords[r];
  }
  for (size_t r = 0; r < dim; ++r) m[r][n] = target.coords[r];

  std::vector<size_t> pivot_row_of_col(n, SIZE_MAX);
  size_t row = 0;
  for (size_t col = 0; col < n && row < dim; ++col) {
    size_t pr = row;
    while (pr < dim && m[pr][col] == 0) ++pr;
    if (pr == dim) continue;
    std::swap(m[pr], m[row]);
    Rat lead = m[row][col];
    for (size_t j = col; j <= n; ++j) m[row][j] /= lead;
    for (size_t r = 0; r < dim; ++r) {
      if (r != row && m[r][col] != 0) {
        Rat f = m[r][col];
        for (size_t j = col; j <= n; ++j) m[r][j] -= f * m[row][j];
      }
    }
    pivot_row_of_col[col] = row;
    ++row;
  }
  if (std::find(pivot_row_of_col.begin(), pivot_row_of_col.end(), SIZE_MAX) !=
      pivot_row_of_col.end()) {
    throw InvalidInput("express_in_basis requires linearly independent vectors");
  }
  for (size_t r = row; r < dim; ++r) {
    if (m[r][n] != 0) return std::nullopt;  // inconsistent: target outside span
  }
  std::vector<Rat> coeffs(n, Rat(0));
  for (size_t c = 0; c < n; ++c) coeffs[c] = m[pivot_row_of_col[c]][n];
  return coeffs;
}

bool integer_matrix_full_column_rank(const std::vector<std::vector<long long>>& rows) {
  if (rows.empty()) return true;
  size_t cols = rows[0].size();
  if (cols == 0) return true;
  RowReducer red(rows.size());
  // Column rank equals row rank of the transpose.
  for (size_t c = 0; c < cols; ++c) {
    std::vector<Rat> col(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw InvalidInput("integer matrix is ragged");
      col[r] = rat_of(rows[r][c]);
    }
    red.insert(std::move(col));
  }
  return red.rank() == cols;
}

}  // namespace ckforms
