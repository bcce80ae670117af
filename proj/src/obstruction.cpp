#include "obstruction.hpp"

#include "errors.hpp"
#include "linalg.hpp"

namespace ckforms {

void PairSpec::validate() const {
  g_u.validate();
  h_u.validate();
  map_h_in_g.validate();
  map_kh_in_h.validate();
  if (map_h_in_g.ambient_rank != g_u.torus_rank()) {
    throw InvalidInput("map_h_in_g: row count must equal the torus rank of g_u");
  }
  if (map_h_in_g.sub_rank != h_u.torus_rank()) {
    throw InvalidInput("map_h_in_g: column count must equal the torus rank of h_u");
  }
  if (map_kh_in_h.ambient_rank != h_u.torus_rank()) {
    throw InvalidInput("map_kh_in_h: row count must equal the torus rank of h_u");
  }
  if (rank_g != g_u.torus_rank()) {
    throw InvalidInput("ranks.g does not match the torus rank of g_u");
  }
  if (rank_h != h_u.torus_rank()) {
    throw InvalidInput("ranks.h does not match the torus rank of h_u");
  }
  if (rank_kh != map_kh_in_h.sub_rank) {
    throw InvalidInput("ranks.kh does not match the column count of map_kh_in_h");
  }
  if (rank_kg < rank_kh || rank_kg > rank_g) {
    throw InvalidInput("ranks.kg must lie between ranks.kh and ranks.g");
  }
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ObstructionFound: return "obstruction_found";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Inapplicable: return "inapplicable";
  }
  throw InternalError("unknown verdict");
}

std::string precheck_name(Precheck p) {
  switch (p) {
    case Precheck::Applicable: return "applicable";
    case Precheck::Complexification: return "complexification";
    case Precheck::EqualRankHK: return "equal_rank_h_kh";
  }
  throw InternalError("unknown precheck outcome");
}

std::vector<GradedVector> ideal_piece(const PairSpec& p, int d) {
  p.validate();
  if (d < 1) throw InvalidInput("ideal_piece requires d >= 1");

  auto h_gens = invariant_generators(p.h_u);
  std::vector<GradedVector> out;
  for (const auto& amb : invariant_generators(p.g_u)) {
    if (amb.poly_degree > d) continue;
    Polynomial rho = restrict_generator(amb, p.map_h_in_g);
    if (rho.is_zero()) continue;
    for (const auto& b : generator_monomials(p.h_u, d - amb.poly_degree)) {
      out.push_back(to_graded_vector(rho * expand_generator_monomial(h_gens, b), d));
    }
  }
  return out;
}

Precheck applicability_precheck(const PairSpec& p) {
  p.validate();
  // Complexification wins when both conditions hold: those pairs are excluded
  // from the criterion wholesale, not merely for rank reasons.
  if (p.complexification) return Precheck::Complexification;
  if (p.rank_h == p.rank_kh) return Precheck::EqualRankHK;
  return Precheck::Applicable;
}

bool rank_criterion(const PairSpec& p) {
  p.validate();
  return p.rank_g == p.rank_h && p.rank_kg > p.rank_kh;
}

ObstructionResult check_obstruction(const PairSpec& p, const CheckOptions& opts) {
  p.validate();
  if (opts.max_degree < 1) throw InvalidInput("max_degree must be >= 1");

  ObstructionResult res;
  res.precheck = applicability_precheck(p);
  res.max_degree_searched = 0;
  const bool inapplicable = res.precheck != Precheck::Applicable;
  if (inapplicable && !opts.force_search) {
    res.verdict = Verdict::Inapplicable;
    return res;
  }

  auto h_gens = invariant_generators(p.h_u);
  auto g_gens = invariant_generators(p.g_u);
  std::vector<Polynomial> rho;  // restrictions of the ambient generators to h_u
  for (const auto& g : g_gens) rho.push_back(restrict_generator(g, p.map_h_in_g));

  for (int d = 1; d <= opts.max_degree; ++d) {
    res.max_degree_searched = d;
    auto mons = generator_monomials(p.h_u, d);
    auto kernel = kernel_of_restriction(p.h_u, p.map_kh_in_h, d);

    // Span of the degree-d ideal piece; same products as ideal_piece() but
    // with the ambient restrictions computed once across all degrees.
    RowReducer ideal(monomials_of_degree(p.h_u.torus_rank(), d).size());
    for (size_t gi = 0; gi < g_gens.size(); ++gi) {
      int e = g_gens[gi].poly_degree;
      if (e > d || rho[gi].is_zero()) continue;
      for (const auto& b : generator_monomials(p.h_u, d - e)) {
        ideal.insert(
            to_graded_vector(rho[gi] * expand_generator_monomial(h_gens, b), d).coords);
      }
    }

    res.stats.push_back({d, static_cast<int>(mons.size()),
                         static_cast<int>(kernel.size()),
                         static_cast<int>(ideal.rank())});

    // A forced search on an excluded pair is diagnostic only: the verdict
    // stays Inapplicable no matter what the degree statistics show.
    if (inapplicable) continue;

    for (const auto& ke : kernel) {
      Polynomial combo(p.h_u.torus_rank());
      for (size_t i = 0; i < mons.size(); ++i) {
        if (ke.coeffs[i] != 0) {
          combo += expand_generator_monomial(h_gens, mons[i]).scaled(ke.coeffs[i]);
        }
      }
      if (!ideal.contains(to_graded_vector(combo, d).coords)) {
        res.verdict = Verdict::ObstructionFound;
        res.witness = ke;
        res.witness_degree = d;
        // Certify with the public one-shot operations, not the cached data.
        res.certificate.restricts_to_zero =
            combo.substitute_linear(p.map_kh_in_h.rows).is_zero();
        res.certificate.outside_ideal = !in_span(to_graded_vector(combo, d), ideal_piece(p, d));
        if (!res.certificate.restricts_to_zero || !res.certificate.outside_ideal) {
          throw InternalError("witness certificate failed re-verification");
        }
        return res;
      }
    }
  }
  res.verdict = inapplicable ? Verdict::Inapplicable : Verdict::Inconclusive;
  return res;
}

bool verify_witness(const PairSpec& p, const KernelElement& w) {
  p.validate();
  if (w.degree < 1) return false;
  auto h_gens = invariant_generators(p.h_u);
  auto mons = generator_monomials(p.h_u, w.degree);
  if (w.coeffs.size() != mons.size()) {
    throw InvalidInput("witness width does not match the graded piece of h_u");
  }
  Polynomial combo(p.h_u.torus_rank());
  for (size_t i = 0; i < mons.size(); ++i) {
    if (w.coeffs[i] != 0) {
      combo += expand_generator_monomial(h_gens, mons[i]).scaled(w.coeffs[i]);
    }
  }
  if (combo.is_zero()) return false;  // the zero class certifies nothing
  if (!combo.substitute_linear(p.map_kh_in_h.rows).is_zero()) return false;
  return !in_span(to_graded_vector(combo, w.degree), ideal_piece(p, w.degree));
}

}  // namespace ckforms
