#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace ckforms {

// Compact classical groups, the building blocks of every ambient datum here.
// SO splits by parity because the two series have different invariant theory:
// odd SO has Pontryagin classes only, even SO adds the Euler class.
enum class Family { U, SU, SOodd, SOeven, Sp };

struct ClassicalFactor {
  Family family;
  int n;  // the defining parameter: U(n), SU(n), SO(n), Sp(n)

  int torus_rank() const;
  std::string name() const;
  void validate() const;
  bool operator==(const ClassicalFactor&) const = default;
};

// Picks the right SO series from the parity of n.
ClassicalFactor so_factor(int n);
ClassicalFactor u_factor(int n);
ClassicalFactor su_factor(int n);
ClassicalFactor sp_factor(int n);

// A finite product of classical factors; torus coordinates are the factors'
// coordinates concatenated in order. For SU(n) the model uses the n-1 free
// coordinates with x_n = -(x_1 + ... + x_{n-1}) eliminated, which keeps every
// torus map an honest integer matrix.
struct GroupSpec {
  std::vector<ClassicalFactor> factors;

  int torus_rank() const;
  std::string name() const;
  void validate() const;
  bool operator==(const GroupSpec&) const = default;
};

// One free generator of the invariant ring, as a polynomial on the group's
// torus coordinates. poly_degree is its degree as a polynomial; the
// corresponding cohomological degree is twice that.
struct Generator {
  std::string name;        // display name, factor-tagged for products: "c2@1"
  std::string base;        // family name without the factor tag: "c2"
  int factor = 0;          // 0-based index into the group's factor list
  int poly_degree = 0;
  Polynomial torus_poly;   // over the full torus of the group
};

// The classical free generating sets:
//   U(n):  c_1..c_n       elementary symmetric in x_i
//   SU(n): c_2..c_n       same, after eliminating the trace
//   SO(2m+1): p_1..p_m    elementary symmetric in x_i^2
//   SO(2m):   p_1..p_{m-1} and the Euler class e = x_1...x_m
//   Sp(n): q_1..q_n       elementary symmetric in x_i^2
// Products lift each factor's generators to the joint torus.
std::vector<Generator> invariant_generators(const GroupSpec& g);

// Dimension of the degree-d graded piece of the invariant ring, computed from
// the generator degrees as the coefficient of t^d in prod 1/(1 - t^deg).
uint64_t hilbert_dimension(const GroupSpec& g, int d);

// Weyl group elements as integer substitution matrices on the torus
// coordinates: w sends a polynomial p(x) to p(Wx). For U, SO and Sp these are
// (signed) permutation matrices; for SU the elimination of the trace makes
// the induced matrices on the free coordinates general integer matrices.
using WeylMatrix = std::vector<std::vector<long long>>;

uint64_t weyl_order(const GroupSpec& g);
std::vector<WeylMatrix> weyl_enumerate(const GroupSpec& g);  // throws when huge
std::vector<WeylMatrix> weyl_sample(const GroupSpec& g, int count, uint64_t seed);

Polynomial apply_weyl(const Polynomial& p, const WeylMatrix& w);

}  // namespace ckforms
