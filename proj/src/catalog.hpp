#pragma once

#include <optional>
#include <string>
#include <vector>

#include "obstruction.hpp"

namespace ckforms {

// What a catalog entry is expected to produce, pinned once and regression
// tested forever. `witness` is an expression over named generators of h_u
// ("c2@1 - c2@2"); degree is its polynomial degree.
struct ExpectedOutcome {
  Verdict verdict = Verdict::Inconclusive;
  std::string witness;
  int degree = 0;
  Precheck reason = Precheck::Applicable;  // meaningful for Inapplicable
};

struct CatalogEntry {
  PairSpec pair;
  std::string description;  // the real reductive quotient, e.g. "GL(4,R)/GL(2,C)"
  std::string source;       // literature citation label
  ExpectedOutcome expected;
  // Further certificates known for this pair, to be re-verified as witnesses
  // even when the search produces a different (lower-degree) one.
  std::vector<std::string> extra_witnesses;
  std::vector<std::string> aliases;
  std::string family;       // the parameterized constructor this came from
  std::vector<int> params;
};

// The pinned example pairs. Constructed through the same family constructors
// and enlargement operations exposed below, so those paths are exercised on
// every run.
const std::vector<CatalogEntry>& builtin_entries();

const CatalogEntry* find_entry(const std::string& id_or_alias);

// Parameterized pair families usable from sweeps.
struct FamilyInfo {
  std::string name;
  std::vector<std::string> params;
  std::string description;
};
const std::vector<FamilyInfo>& known_families();

// Builds a pair from a family and parameter tuple; throws InvalidInput on an
// unknown family or out-of-range parameters.
CatalogEntry make_family_entry(const std::string& family, const std::vector<int>& params);

// Replaces the ambient group by a larger one containing it; embed_g maps the
// old ambient torus into the new one. The known witness survives enlargement,
// so the expected outcome is carried over (and re-verified by tests).
CatalogEntry enlarge_ambient(const CatalogEntry& e, const GroupSpec& bigger,
                             const TorusMap& embed_g, int new_rank_kg);

// Extends H by one reductive factor (appended last, so existing generator
// names keep their factor tags). The caller supplies the new ambient group
// and the combined torus embedding of the extended H_U in it.
CatalogEntry append_central_factor(const CatalogEntry& e, const GroupSpec& extra,
                                   const TorusMap& extra_k_in_extra,
                                   const GroupSpec& new_g, const TorusMap& new_h_in_g,
                                   int new_rank_kg);

// Pair-spec file handling. The JSON schema mirrors PairSpec field for field;
// serialize-then-load is the identity on every builtin entry.
PairSpec load_pair(const std::string& json_text);
std::string serialize_pair(const PairSpec& p);

// Witness expressions: sums of rational multiples of generator products,
// e.g. "c2@1 - c2@2", "p1@1 - p1@2", "3/2*e^2". For even SO factors of rank m
// the derived name p<m> resolves to e^2.
Polynomial resolve_witness_expression(const GroupSpec& h, const std::string& expr);
KernelElement witness_from_expression(const GroupSpec& h, const std::string& expr);

}  // namespace ckforms
