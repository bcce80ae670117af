#pragma once

#include <vector>

#include "groups.hpp"

namespace ckforms {

// Integer-linear embedding of a subgroup's maximal torus into an ambient
// one, written as the matrix expressing every ambient coordinate through the
// subtorus coordinates: x_ambient = rows * y_sub. Restricting an invariant
// polynomial is then the substitution x -> rows * y.
//
// A zero-column matrix is legal and models a rank-0 subtorus (the restriction
// kills every positive degree). Otherwise the matrix must have full column
// rank, since a torus embedding is injective.
struct TorusMap {
  int ambient_rank = 0;
  int sub_rank = 0;
  std::vector<std::vector<long long>> rows;  // ambient_rank x sub_rank

  void validate() const;
  bool operator==(const TorusMap&) const = default;
};

TorusMap make_torus_map(std::vector<std::vector<long long>> rows, int sub_rank);
TorusMap identity_map(int rank);
TorusMap zero_map(int ambient_rank);

// outer embeds H in G, inner embeds K in H; the result embeds K in G.
TorusMap compose(const TorusMap& outer, const TorusMap& inner);
TorusMap direct_sum(const TorusMap& a, const TorusMap& b);

// Block embedding SO(p_1) x ... x SO(p_k) in SO(p_1 + ... + p_k). Ambient
// rotation planes are matched to the factors in order; planes straddling two
// odd factors pick up no subtorus coordinate, so leftover ambient rows are
// zero and placed last.
TorusMap block_so_in_so(const std::vector<int>& parts);

// The compact torus of g sitting inside g x g as (A, conj A). Conjugation
// negates the torus coordinates of U, SU and Sp factors but fixes those of SO
// factors, whose torus consists of real rotation blocks.
TorusMap diag_conjugate(const GroupSpec& g);

// SO(n) or Sp(n/2) inside SU(n) (resp. U(n)): the defining coordinates come
// in +/- pairs. paired_in_su works on the n-1 free SU coordinates,
// paired_in_u writes all n rows (odd n leaves a zero row last).
TorusMap paired_in_su(int n);
TorusMap paired_in_u(int n);

// Block embeddings of products into a single big factor.
TorusMap blocks_in_u(const std::vector<int>& parts);
TorusMap blocks_in_su(const std::vector<int>& parts);   // free coordinates on both sides
TorusMap blocks_in_sp(const std::vector<int>& parts);

}  // namespace ckforms
