#include "groups.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "errors.hpp"

namespace ckforms {

int ClassicalFactor::torus_rank() const {
  switch (family) {
    case Family::U: return n;
    case Family::SU: return n - 1;
    case Family::SOodd: return (n - 1) / 2;
    case Family::SOeven: return n / 2;
    case Family::Sp: return n;
  }
  throw InternalError("unknown family");
}

std::string ClassicalFactor::name() const {
  switch (family) {
    case Family::U: return "U(" + std::to_string(n) + ")";
    case Family::SU: return "SU(" + std::to_string(n) + ")";
    case Family::SOodd:
    case Family::SOeven: return "SO(" + std::to_string(n) + ")";
    case Family::Sp: return "Sp(" + std::to_string(n) + ")";
  }
  throw InternalError("unknown family");
}

void ClassicalFactor::validate() const {
  switch (family) {
    case Family::U:
      if (n < 1) throw InvalidInput("U(n) requires n >= 1");
      return;
    case Family::SU:
      if (n < 2) throw InvalidInput("SU(n) requires n >= 2");
      return;
    case Family::SOodd:
      if (n < 1 || n % 2 == 0) throw InvalidInput("odd SO(n) requires odd n >= 1");
      return;
    case Family::SOeven:
      if (n < 2 || n % 2 != 0) throw InvalidInput("even SO(n) requires even n >= 2");
      return;
    case Family::Sp:
      if (n < 1) throw InvalidInput("Sp(n) requires n >= 1");
      return;
  }
  throw InternalError("unknown family");
}

ClassicalFactor so_factor(int n) {
  if (n < 1) throw InvalidInput("SO(n) requires n >= 1");
  return ClassicalFactor{n % 2 == 1 ? Family::SOodd : Family::SOeven, n};
}
ClassicalFactor u_factor(int n) { return ClassicalFactor{Family::U, n}; }
ClassicalFactor su_factor(int n) { return ClassicalFactor{Family::SU, n}; }
ClassicalFactor sp_factor(int n) { return ClassicalFactor{Family::Sp, n}; }

int GroupSpec::torus_rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.torus_rank();
  return r;
}

std::string GroupSpec::name() const {
  if (factors.empty()) return "{e}";
  std::string s;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) s += " x ";
    s += factors[i].name();
  }
  return s;
}

void GroupSpec::validate() const {
  if (factors.empty()) throw InvalidInput("group must have at least one factor");
  for (const auto& f : factors) f.validate();
}

namespace {

// Embeds a polynomial over a factor's coordinates into the group's full
// coordinate space, shifting variables by `offset`.
Polynomial lift_to_group(const Polynomial& p, int offset, int total_vars) {
  Polynomial out(total_vars);
  for (const auto& [m, c] : p.terms()) {
    Monomial lifted{std::vector<uint32_t>(total_vars, 0)};
    std::copy(m.exp.begin(), m.exp.end(), lifted.exp.begin() + offset);
    out.add_term(lifted, c);
  }
  return out;
}

// e_i(x_1^2, ..., x_r^2) over r variables.
Polynomial elementary_symmetric_of_squares(int r, int i) {
  Polynomial e = elementary_symmetric(r, i);
  Polynomial out(r);
  for (const auto& [m, c] : e.terms()) {
    Monomial sq = m;
    for (auto& v : sq.exp) v *= 2;
    out.add_term(sq, c);
  }
  return out;
}

// The matrix expressing the n full SU(n) coordinates through the n-1 free
// ones: rows 0..n-2 are the identity, the last row is all -1.
std::vector<std::vector<long long>> su_elimination_rows(int n) {
  std::vector<std::vector<long long>> rows(n, std::vector<long long>(n - 1, 0));
  for (int i = 0; i < n - 1; ++i) rows[i][i] = 1;
  for (int j = 0; j < n - 1; ++j) rows[n - 1][j] = -1;
  return rows;
}

std::vector<Generator> factor_generators(const ClassicalFactor& f) {
  std::vector<Generator> gens;
  int r = f.torus_rank();
  switch (f.family) {
    case Family::U:
      for (int i = 1; i <= f.n; ++i) {
        gens.push_back({"", "c" + std::to_string(i), 0, i,
                        elementary_symmetric(f.n, i)});
      }
      break;
    case Family::SU: {
      auto rows = su_elimination_rows(f.n);
      for (int i = 2; i <= f.n; ++i) {
        gens.push_back({"", "c" + std::to_string(i), 0, i,
                        elementary_symmetric(f.n, i).substitute_linear(rows)});
      }
      break;
    }
    case Family::SOodd:
      for (int i = 1; i <= r; ++i) {
        gens.push_back({"", "p" + std::to_string(i), 0, 2 * i,
                        elementary_symmetric_of_squares(r, i)});
      }
      break;
    case Family::SOeven: {
      for (int i = 1; i <= r - 1; ++i) {
        gens.push_back({"", "p" + std::to_string(i), 0, 2 * i,
                        elementary_symmetric_of_squares(r, i)});
      }
      // Euler class; its square is the missing top Pontryagin class p_r.
      Polynomial e(r);
      Monomial m{std::vector<uint32_t>(r, 1)};
      e.add_term(m, 1);
      gens.push_back({"", "e", 0, r, std::move(e)});
      break;
    }
    case Family::Sp:
      for (int i = 1; i <= f.n; ++i) {
        gens.push_back({"", "q" + std::to_string(i), 0, 2 * i,
                        elementary_symmetric_of_squares(r, i)});
      }
      break;
  }
  return gens;
}

}  // namespace

std::vector<Generator> invariant_generators(const GroupSpec& g) {
  g.validate();
  int total = g.torus_rank();
  bool tag = g.factors.size() > 1;
  std::vector<Generator> out;
  int offset = 0;
  for (size_t fi = 0; fi < g.factors.size(); ++fi) {
    for (Generator gen : factor_generators(g.factors[fi])) {
      gen.factor = static_cast<int>(fi);
      gen.name = tag ? gen.base + "@" + std::to_string(fi + 1) : gen.base;
      gen.torus_poly = lift_to_group(gen.torus_poly, offset, total);
      out.push_back(std::move(gen));
    }
    offset += g.factors[fi].torus_rank();
  }
  return out;
}

uint64_t hilbert_dimension(const GroupSpec& g, int d) {
  if (d < 0) throw InvalidInput("hilbert_dimension requires d >= 0");
  std::vector<uint64_t> coeff(d + 1, 0);
  coeff[0] = 1;
  for (const auto& gen : invariant_generators(g)) {
    for (int i = gen.poly_degree; i <= d; ++i) coeff[i] += coeff[i - gen.poly_degree];
  }
  return coeff[d];
}

namespace {

uint64_t factorial(int n) {
  uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<uint64_t>(i);
  return r;
}

uint64_t factor_weyl_order(const ClassicalFactor& f) {
  int r = f.torus_rank();
  switch (f.family) {
    case Family::U: return factorial(f.n);
    case Family::SU: return factorial(f.n);
    case Family::SOodd: return factorial(r) << r;
    case Family::SOeven: return r == 0 ? 1 : (factorial(r) << (r - 1));
    case Family::Sp: return factorial(r) << r;
  }
  throw InternalError("unknown family");
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Permutation of the n full SU coordinates, pushed down to the free ones.
WeylMatrix su_matrix_from_permutation(int n, const std::vector<int>& sigma) {
  WeylMatrix w(n - 1, std::vector<long long>(n - 1, 0));
  for (int i = 0; i < n - 1; ++i) {
    int t = sigma[i];
    if (t < n - 1) {
      w[i][t] = 1;
    } else {
      for (int j = 0; j < n - 1; ++j) w[i][j] = -1;
    }
  }
  return w;
}

WeylMatrix signed_permutation_matrix(const std::vector<int>& sigma,
                                     const std::vector<int>& signs) {
  int r = static_cast<int>(sigma.size());
  WeylMatrix w(r, std::vector<long long>(r, 0));
  for (int i = 0; i < r; ++i) w[i][sigma[i]] = signs[i];
  return w;
}

std::vector<WeylMatrix> factor_weyl_elements(const ClassicalFactor& f) {
  int r = f.torus_rank();
  std::vector<WeylMatrix> out;
  switch (f.family) {
    case Family::U:
      for (const auto& sigma : all_permutations(f.n)) {
        std::vector<int> plus(f.n, 1);
        out.push_back(signed_permutation_matrix(sigma, plus));
      }
      break;
    case Family::SU:
      for (const auto& sigma : all_permutations(f.n)) {
        out.push_back(su_matrix_from_permutation(f.n, sigma));
      }
      break;
    case Family::SOodd:
    case Family::Sp:
    case Family::SOeven: {
      bool even_only = f.family == Family::SOeven;
      if (r == 0) {
        out.push_back(WeylMatrix{});
        break;
      }
      for (const auto& sigma : all_permutations(r)) {
        for (uint32_t mask = 0; mask < (1u << r); ++mask) {
          if (even_only && (std::popcount(mask) % 2) != 0) continue;
          std::vector<int> signs(r);
          for (int i = 0; i < r; ++i) signs[i] = (mask >> i) & 1u ? -1 : 1;
          out.push_back(signed_permutation_matrix(sigma, signs));
        }
      }
      break;
    }
  }
  return out;
}

WeylMatrix block_diagonal(const std::vector<WeylMatrix>& blocks) {
  int total = 0;
  for (const auto& b : blocks) total += static_cast<int>(b.size());
  WeylMatrix w(total, std::vector<long long>(total, 0));
  int off = 0;
  for (const auto& b : blocks) {
    int r = static_cast<int>(b.size());
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) w[off + i][off + j] = b[i][j];
    }
    off += r;
  }
  return w;
}

constexpr uint64_t kEnumerationCap = 20000;

}  // namespace

uint64_t weyl_order(const GroupSpec& g) {
  g.validate();
  uint64_t order = 1;
  for (const auto& f : g.factors) order *= factor_weyl_order(f);
  return order;
}

std::vector<WeylMatrix> weyl_enumerate(const GroupSpec& g) {
  if (weyl_order(g) > kEnumerationCap) {
    throw InvalidInput("Weyl group too large to enumerate; use weyl_sample");
  }
  std::vector<std::vector<WeylMatrix>> per_factor;
  for (const auto& f : g.factors) per_factor.push_back(factor_weyl_elements(f));

  std::vector<WeylMatrix> out;
  std::vector<size_t> idx(per_factor.size(), 0);
  while (true) {
    std::vector<WeylMatrix> blocks;
    for (size_t i = 0; i < per_factor.size(); ++i) blocks.push_back(per_factor[i][idx[i]]);
    out.push_back(block_diagonal(blocks));
    size_t k = per_factor.size();
    while (k > 0) {
      --k;
      if (++idx[k] < per_factor[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
  }
}

std::vector<WeylMatrix> weyl_sample(const GroupSpec& g, int count, uint64_t seed) {
  g.validate();
  if (count < 0) throw InvalidInput("sample count must be >= 0");
  std::mt19937_64 rng(seed);
  auto random_permutation = [&](int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) {
      std::uniform_int_distribution<int> dist(0, i);
      std::swap(p[i], p[dist(rng)]);
    }
    return p;
  };

  std::vector<WeylMatrix> out;
  out.reserve(count);
  for (int s = 0; s < count; ++s) {
    std::vector<WeylMatrix> blocks;
    for (const auto& f : g.factors) {
      int r = f.torus_rank();
      switch (f.family) {
        case Family::U: {
          std::vector<int> plus(f.n, 1);
          blocks.push_back(signed_permutation_matrix(random_permutation(f.n), plus));
          break;
        }
        case Family::SU:
          blocks.push_back(su_matrix_from_permutation(f.n, random_permutation(f.n)));
          break;
        case Family::SOodd:
        case Family::Sp:
        case Family::SOeven: {
          if (r == 0) {
            blocks.push_back(WeylMatrix{});
            break;
          }
          std::vector<int> signs(r);
          int negatives = 0;
          for (int i = 0; i < r; ++i) {
            signs[i] = (rng() & 1u) ? -1 : 1;
            if (signs[i] < 0) ++negatives;
          }
          // Even SO only realizes an even number of sign flips.
          if (f.family == Family::SOeven && (negatives % 2) != 0) signs[r - 1] = -signs[r - 1];
          blocks.push_back(signed_permutation_matrix(random_permutation(r), signs));
          break;
        }
      }
    }
    out.push_back(block_diagonal(blocks));
  }
  return out;
}

Polynomial apply_weyl(const Polynomial& p, const WeylMatrix& w) {
  return p.substitute_linear(w);
}

}  // namespace ckforms
