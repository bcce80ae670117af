#pragma once

#include <optional>
#include <string>
#include <vector>

#include "restriction.hpp"

namespace ckforms {

// Everything needed to run the obstruction test for one reductive pair:
// compact forms of the two groups, the torus embedding of H_U in G_U, the
// torus embedding of H's maximal-compact subgroup K_H in H_U, rank data for
// the applicability preconditions, and the complexification flag.
struct PairSpec {
  std::string id;
  GroupSpec g_u;
  GroupSpec h_u;
  TorusMap map_h_in_g;    // T(H_U) -> T(G_U)
  TorusMap map_kh_in_h;   // T(K_H) -> T(H_U)
  int rank_g = 0;
  int rank_h = 0;
  int rank_kg = 0;
  int rank_kh = 0;
  bool complexification = false;
  std::string notes;

  void validate() const;
  bool operator==(const PairSpec&) const = default;
};

enum class Verdict { ObstructionFound, Inconclusive, Inapplicable };
enum class Precheck { Applicable, Complexification, EqualRankHK };

std::string verdict_name(Verdict v);
std::string precheck_name(Precheck p);

struct DegreeStats {
  int degree = 0;
  int invariant_dim = 0;  // dimension of the degree-d invariant piece of H_U
  int kernel_dim = 0;     // dimension of the restriction kernel in that piece
  int ideal_rank = 0;     // rank of the degree-d piece of the restricted ideal
};

// The two facts an obstruction witness certifies, re-established with fresh
// expansions rather than read back from the search.
struct Certificate {
  bool restricts_to_zero = false;
  bool outside_ideal = false;
};

struct ObstructionResult {
  Verdict verdict = Verdict::Inconclusive;
  Precheck precheck = Precheck::Applicable;
  std::optional<KernelElement> witness;
  std::optional<int> witness_degree;
  Certificate certificate;
  std::vector<DegreeStats> stats;
  int max_degree_searched = 0;
};

struct CheckOptions {
  int max_degree = 12;
  // Runs the graded search even when the precheck says the criterion cannot
  // apply; used to confirm that equal-rank pairs really have empty kernels.
  bool force_search = false;
};

// Degree-d piece of the ideal generated by the restrictions of the ambient
// positive-degree invariants: every product of a restricted ambient generator
// with a generator monomial of complementary degree, as vectors in the
// degree-d torus-monomial space of H_U.
std::vector<GradedVector> ideal_piece(const PairSpec& p, int d);

// The criterion needs the proper action of Gamma on G/H to see cohomology in
// degrees the compact quotient could not carry; that fails structurally when
// rank H_U = rank K_H (no invariants can die) and is deliberately skipped for
// complexification pairs, which the source treatment handles separately.
Precheck applicability_precheck(const PairSpec& p);

// Independent coarse test: rank G = rank H together with rank K_G > rank K_H
// already rules out compact forms, with no graded search at all.
bool rank_criterion(const PairSpec& p);

// Lowest-degree-first search: for each degree up to the bound, compute the
// restriction kernel and test its reduced basis elements against the ideal
// piece; the first escapee is the witness. Deterministic by construction.
ObstructionResult check_obstruction(const PairSpec& p, const CheckOptions& opts = {});

// Re-derives the two certificate facts for a claimed witness from scratch.
bool verify_witness(const PairSpec& p, const KernelElement& w);

}  // namespace ckforms
