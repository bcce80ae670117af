#include "torus_map.hpp"

#include <numeric>

#include "errors.hpp"
#include "linalg.hpp"

namespace ckforms {

void TorusMap::validate() const {
  if (ambient_rank < 0 || sub_rank < 0) {
    throw InvalidInput("torus map ranks must be nonnegative");
  }
  if (static_cast<int>(rows.size()) != ambient_rank) {
    throw InvalidInput("torus map row count does not match ambient rank");
  }
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != sub_rank) {
      throw InvalidInput("torus map is ragged");
    }
  }
  if (sub_rank > ambient_rank) {
    throw InvalidInput("torus map not injective: subtorus rank exceeds ambient rank");
  }
  if (sub_rank > 0 && !integer_matrix_full_column_rank(rows)) {
    throw InvalidInput("torus map not injective: columns are linearly dependent");
  }
}

TorusMap make_torus_map(std::vector<std::vector<long long>> rows, int sub_rank) {
  TorusMap m{static_cast<int>(rows.size()), sub_rank, std::move(rows)};
  m.validate();
  return m;
}

TorusMap identity_map(int rank) {
  std::vector<std::vector<long long>> rows(rank, std::vector<long long>(rank, 0));
  for (int i = 0; i < rank; ++i) rows[i][i] = 1;
  return make_torus_map(std::move(rows), rank);
}

TorusMap zero_map(int ambient_rank) {
  std::vector<std::vector<long long>> rows(ambient_rank);
  return make_torus_map(std::move(rows), 0);
}

TorusMap compose(const TorusMap& outer, const TorusMap& inner) {
  outer.validate();
  inner.validate();
  if (outer.sub_rank != inner.ambient_rank) {
    throw InvalidInput("torus map composition: inner ambient rank must equal outer subtorus rank");
  }
  std::vector<std::vector<long long>> rows(
      outer.ambient_rank, std::vector<long long>(inner.sub_rank, 0));
  for (int i = 0; i < outer.ambient_rank; ++i) {
    for (int j = 0; j < inner.sub_rank; ++j) {
      long long s = 0;
      for (int k = 0; k < outer.sub_rank; ++k) s += outer.rows[i][k] * inner.rows[k][j];
      rows[i][j] = s;
    }
  }
  return make_torus_map(std::move(rows), inner.sub_rank);
}

TorusMap direct_sum(const TorusMap& a, const TorusMap& b) {
  a.validate();
  b.validate();
  int ar = a.ambient_rank + b.ambient_rank;
  int sr = a.sub_rank + b.sub_rank;
  std::vector<std::vector<long long>> rows(ar, std::vector<long long>(sr, 0));
  for (int i = 0; i < a.ambient_rank; ++i) {
    for (int j = 0; j < a.sub_rank; ++j) rows[i][j] = a.rows[i][j];
  }
  for (int i = 0; i < b.ambient_rank; ++i) {
    for (int j = 0; j < b.sub_rank; ++j) rows[a.ambient_rank + i][a.sub_rank + j] = b.rows[i][j];
  }
  return make_torus_map(std::move(rows), sr);
}

TorusMap block_so_in_so(const std::vector<int>& parts) {
  int total = 0;
  int sub = 0;
  for (int p : parts) {
    if (p < 1) throw InvalidInput("SO block sizes must be >= 1");
    total += p;
    sub += p / 2;
  }
  int ambient = total / 2;
  std::vector<std::vector<long long>> rows(ambient, std::vector<long long>(sub, 0));
  for (int i = 0; i < sub; ++i) rows[i][i] = 1;
  return make_torus_map(std::move(rows), sub);
}

TorusMap diag_conjugate(const GroupSpec& g) {
  g.validate();
  int r = g.torus_rank();
  std::vector<std::vector<long long>> rows(2 * r, std::vector<long long>(r, 0));
  for (int i = 0; i < r; ++i) rows[i][i] = 1;
  int off = 0;
  for (const auto& f : g.factors) {
    long long sign = (f.family == Family::SOodd || f.family == Family::SOeven) ? 1 : -1;
    for (int i = 0; i < f.torus_rank(); ++i) rows[r + off + i][off + i] = sign;
    off += f.torus_rank();
  }
  return make_torus_map(std::move(rows), r);
}

TorusMap paired_in_u(int n) {
  if (n < 2) throw InvalidInput("paired embedding requires n >= 2");
  int m = n / 2;
  std::vector<std::vector<long long>> rows(n, std::vector<long long>(m, 0));
  for (int k = 0; k < m; ++k) {
    rows[2 * k][k] = 1;
    rows[2 * k + 1][k] = -1;
  }
  return make_torus_map(std::move(rows), m);
}

TorusMap paired_in_su(int n) {
  TorusMap full = paired_in_u(n);
  // Drop the last full coordinate: for even n it is -y_m, already implied by
  // the zero-sum relation; for odd n it is the zero row.
  full.rows.pop_back();
  return make_torus_map(std::move(full.rows), full.sub_rank);
}

TorusMap blocks_in_u(const std::vector<int>& parts) {
  int total = 0;
  for (int p : parts) {
    if (p < 1) throw InvalidInput("U block sizes must be >= 1");
    total += p;
  }
  return identity_map(total);
}

TorusMap blocks_in_su(const std::vector<int>& parts) {
  int total = std::accumulate(parts.begin(), parts.end(), 0);
  int sub = 0;
  // A block of size 1 contributes no subtorus coordinate, only a forced zero
  // ambient coordinate; this covers plain SU(n) inside a larger SU(N).
  for (int p : parts) {
    if (p < 1) throw InvalidInput("SU block sizes must be >= 1");
    sub += p - 1;
  }
  // Row t expresses the t-th full ambient coordinate; the last full
  // coordinate of each block is minus the sum of that block's free ones.
  std::vector<std::vector<long long>> rows(total - 1, std::vector<long long>(sub, 0));
  int t = 0;       // ambient full coordinate
  int col0 = 0;    // first subtorus column of the current block
  for (int p : parts) {
    for (int j = 0; j < p && t < total - 1; ++j, ++t) {
      if (j < p - 1) {
        rows[t][col0 + j] = 1;
      } else {
        for (int c = 0; c < p - 1; ++c) rows[t][col0 + c] = -1;
      }
    }
    col0 += p - 1;
  }
  return make_torus_map(std::move(rows), sub);
}

TorusMap blocks_in_sp(const std::vector<int>& parts) {
  int total = 0;
  for (int p : parts) {
    if (p < 1) throw InvalidInput("Sp block sizes must be >= 1");
    total += p;
  }
  return identity_map(total);
}

}  // namespace ckforms
