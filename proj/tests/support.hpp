#pragma once

// Helpers shared by the test binaries. Not part of the library.

#include <cstdint>
#include <vector>

#include "groups.hpp"
#include "polynomial.hpp"
#include "restriction.hpp"

namespace testsupport {

// Rank certificates over F_p with p = 2^61 - 1. A mod-p rank equal to the row
// count proves linear independence over Q (the reduction can only lose rank),
// which keeps the degree-12 independence checks fast without weakening them.
inline constexpr uint64_t kPrime = (uint64_t(1) << 61) - 1;

inline uint64_t mulmod(uint64_t a, uint64_t b) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

inline uint64_t powmod(uint64_t a, uint64_t e) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

inline uint64_t invmod(uint64_t a) { return powmod(a % kPrime, kPrime - 2); }

// Image of an exact rational in F_p. Denominators are tiny here, never
// divisible by p.
inline uint64_t rat_mod_p(const ckforms::Rat& r) {
  uint64_t num = mpz_fdiv_ui(r.get_num().get_mpz_t(), kPrime);
  uint64_t den = mpz_fdiv_ui(r.get_den().get_mpz_t(), kPrime);
  return mulmod(num, invmod(den));
}

inline size_t rank_mod_p(std::vector<std::vector<uint64_t>> rows) {
  size_t rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && rank < rows.size(); ++c) {
    size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    uint64_t inv = invmod(rows[rank][c]);
    for (size_t j = c; j < cols; ++j) rows[rank][j] = mulmod(rows[rank][j], inv);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      uint64_t f = rows[r][c];
      for (size_t j = c; j < cols; ++j) {
        uint64_t sub = mulmod(f, rows[rank][j]);
        rows[r][j] = (rows[r][j] + kPrime - sub) % kPrime;
      }
    }
    ++rank;
  }
  return rank;
}

inline std::vector<uint64_t> graded_row_mod_p(const ckforms::GradedVector& v) {
  std::vector<uint64_t> row(v.coords.size());
  for (size_t i = 0; i < v.coords.size(); ++i) row[i] = rat_mod_p(v.coords[i]);
  return row;
}

// Certifies that the degree-d generator monomials of g are linearly
// independent as polynomials on the torus.
inline bool generator_monomials_independent(const ckforms::GroupSpec& g, int d) {
  auto gens = ckforms::invariant_generators(g);
  auto mons = ckforms::generator_monomials(g, d);
  if (mons.empty()) return true;
  std::vector<std::vector<uint64_t>> rows;
  rows.reserve(mons.size());
  for (const auto& m : mons) {
    auto v = ckforms::to_graded_vector(ckforms::expand_generator_monomial(gens, m), d);
    rows.push_back(graded_row_mod_p(v));
  }
  return rank_mod_p(std::move(rows)) == mons.size();
}

}  // namespace testsupport
