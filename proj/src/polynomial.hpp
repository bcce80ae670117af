#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ckforms {

// Exact rational scalar. All coefficient arithmetic in this library is exact;
// there is no floating point anywhere in the core.
using Rat = mpq_class;

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

// gmpxx has no long long constructor; on this platform long is as wide.
inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }

// Exponent vector of a monomial, one entry per torus coordinate.
struct Monomial {
  std::vector<uint32_t> exp;

  int degree() const;
  bool operator==(const Monomial&) const = default;
};

// Global monomial order: lower total degree first; within a degree,
// lexicographically larger exponent vectors first, so for two variables
// x1^2 precedes x1*x2 precedes x2^2.
bool monomial_precedes(const Monomial& a, const Monomial& b);

struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_precedes(a, b);
  }
};

using TermMap = std::map<Monomial, Rat, MonomialOrder>;

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed number of variables. Zero coefficients are never stored. A variable
// count of zero is legal and models polynomials over a rank-0 torus (only
// constants can be nonzero there).
class Polynomial {
 public:
  explicit Polynomial(int num_vars = 0);

  static Polynomial zero(int num_vars);
  static Polynomial constant(int num_vars, const Rat& c);
  static Polynomial variable(int num_vars, int index);  // 0-based index

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Adds c * m, merging with an existing term and dropping exact zeros.
  void add_term(const Monomial& m, const Rat& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator-() const;
  Polynomial scaled(const Rat& c) const;
  Polynomial pow(uint32_t k) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial&) const = default;

  // Maximum total degree of a term; -1 for the zero polynomial.
  int degree() const;
  // The zero polynomial is homogeneous of every degree.
  bool is_homogeneous_of(int d) const;

  Rat evaluate(std::span<const Rat> point) const;

  // Substitutes variable i by the integer linear form sum_j rows[i][j] * y_j.
  // rows must have exactly num_vars() rows of equal width; the result lives
  // over that many y variables. Homogeneous inputs stay homogeneous.
  Polynomial substitute_linear(const std::vector<std::vector<long long>>& rows) const;

  std::string to_string(const std::vector<std::string>& var_names = {}) const;

 private:
  int num_vars_;
  TermMap terms_;
};

// All degree-d monomials in num_vars variables, listed in the global order.
std::vector<Monomial> monomials_of_degree(int num_vars, int d);

// e_i(x_1, ..., x_n); requires 1 <= i <= n.
Polynomial elementary_symmetric(int num_vars, int i);

// Coordinates of a homogeneous polynomial over monomials_of_degree.
struct GradedVector {
  int num_vars = 0;
  int degree = 0;
  std::vector<Rat> coords;

  bool is_zero() const;
  bool operator==(const GradedVector&) const = default;
};

GradedVector to_graded_vector(const Polynomial& p, int d);
Polynomial from_graded_vector(const GradedVector& v);

}  // namespace ckforms
