#include "report.hpp"

#include <cmath>
#include <sstream>

#include "restriction.hpp"
#include "version.hpp"

namespace ckforms {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json witness_json(const PairSpec& pair, const KernelElement& w,
                          const Certificate& cert) {
  ordered_json jw;
  jw["name"] = w.pretty;
  jw["poly_degree"] = w.degree;
  jw["cohomological_degree"] = 2 * w.degree;
  auto gens = invariant_generators(pair.h_u);
  auto mons = generator_monomials(pair.h_u, w.degree);
  ordered_json terms = ordered_json::array();
  for (size_t i = 0; i < mons.size(); ++i) {
    if (w.coeffs[i] == 0) continue;
    terms.push_back({{"monomial", generator_monomial_name(gens, mons[i])},
                     {"coefficient", rat_to_string(w.coeffs[i])}});
  }
  jw["terms"] = std::move(terms);
  jw["certificate"] = {{"restricts_to_zero", cert.restricts_to_zero},
                       {"outside_ideal", cert.outside_ideal}};
  return jw;
}

std::string precheck_phrase(Precheck p) {
  switch (p) {
    case Precheck::Applicable:
      return "applicable";
    case Precheck::Complexification:
      return "complexification pair, excluded from this criterion";
    case Precheck::EqualRankHK:
      return "rank of H_U equals rank of K_H, so no invariant can restrict to zero";
  }
  return "?";
}

}  // namespace

ordered_json build_report(const PairSpec& pair, const std::string& description,
                          const ObstructionResult& result, const CheckOptions& opts,
                          std::optional<double> timing_ms) {
  ordered_json j;
  j["tool"] = "ckforms";
  j["version"] = kVersion;

  ordered_json jp;
  jp["id"] = pair.id;
  if (!description.empty()) jp["description"] = description;
  jp["g_u"] = pair.g_u.name();
  jp["h_u"] = pair.h_u.name();
  jp["ranks"] = {{"g", pair.rank_g}, {"h", pair.rank_h}, {"kg", pair.rank_kg}, {"kh", pair.rank_kh}};
  jp["complexification"] = pair.complexification;
  if (!pair.notes.empty()) jp["notes"] = pair.notes;
  j["pair"] = std::move(jp);

  j["options"] = {{"max_degree", opts.max_degree}, {"force_search", opts.force_search}};
  j["precheck"] = precheck_name(result.precheck);
  j["rank_criterion"] = rank_criterion(pair);
  j["verdict"] = verdict_name(result.verdict);

  if (result.witness) {
    j["witness"] = witness_json(pair, *result.witness, result.certificate);
  } else {
    j["witness"] = nullptr;
  }

  ordered_json degrees = ordered_json::array();
  for (const auto& s : result.stats) {
    degrees.push_back({{"degree", s.degree},
                       {"invariant_dim", s.invariant_dim},
                       {"kernel_dim", s.kernel_dim},
                       {"ideal_rank", s.ideal_rank}});
  }
  j["degrees"] = std::move(degrees);
  j["max_degree_searched"] = result.max_degree_searched;
  // Milliseconds are rounded to integers: report JSON never carries floats,
  // so re-rendering a parsed report reproduces the bytes exactly.
  if (timing_ms) j["timing_ms"] = static_cast<long long>(std::llround(*timing_ms));
  return j;
}

std::string render_text(const PairSpec& pair, const std::string& description,
                        const ObstructionResult& result, const CheckOptions& opts,
                        std::optional<double> timing_ms) {
  std::ostringstream out;
  out << "pair: " << pair.id;
  if (!description.empty()) out << "  (" << description << ")";
  out << "\n";
  out << "groups: G_U = " << pair.g_u.name() << ", H_U = " << pair.h_u.name() << "\n";
  out << "ranks: G " << pair.rank_g << ", H " << pair.rank_h << ", K_G " << pair.rank_kg
      << ", K_H " << pair.rank_kh << "\n";
  if (!pair.notes.empty()) out << "notes: " << pair.notes << "\n";

  switch (result.verdict) {
    case Verdict::Inapplicable:
      out << "verdict: criterion inapplicable (" << precheck_phrase(result.precheck) << ")\n";
      if (!result.stats.empty()) {
        out << "forced search ran to degree " << result.max_degree_searched
            << "; statistics below are diagnostic and do not change the verdict\n";
      }
      break;
    case Verdict::Inconclusive:
      out << "verdict: inconclusive - no witness up to degree " << result.max_degree_searched
          << " (this does NOT imply a compact form exists)\n";
      break;
    case Verdict::ObstructionFound: {
      const KernelElement& w = *result.witness;
      out << "verdict: obstruction found - the quotient admits no compact Clifford-Klein form\n";
      out << "witness: " << w.pretty << "\n";
      out << "  polynomial degree " << w.degree << ", cohomological degree " << 2 * w.degree
          << "\n";
      out << "  restricts to zero on the K_H torus: "
          << (result.certificate.restricts_to_zero ? "yes" : "NO") << "\n";
      out << "  lies outside the restricted ambient ideal: "
          << (result.certificate.outside_ideal ? "yes" : "NO") << "\n";
      if (pair.h_u.factors.size() > 1) {
        out << "  legend: g@k is the generator g of the k-th tensor factor, so "
               "\"c2@1 - c2@2\" reads c2 (x) 1 - 1 (x) c2\n";
      }
      break;
    }
  }

  out << "rank criterion (rank G = rank H, rank K_G > rank K_H): "
      << (rank_criterion(pair) ? "conclusive on its own" : "not conclusive") << "\n";

  if (!result.stats.empty()) {
    out << "degree statistics (invariants / kernel / ideal rank):\n";
    for (const auto& s : result.stats) {
      out << "  d=" << s.degree << ": " << s.invariant_dim << " / " << s.kernel_dim << " / "
          << s.ideal_rank << "\n";
    }
  } else if (result.verdict != Verdict::Inapplicable) {
    out << "degree statistics: none (search bound " << opts.max_degree << ")\n";
  }
  if (timing_ms) {
    std::ostringstream t;
    t.setf(std::ios::fixed);
    t.precision(1);
    t << *timing_ms;
    out << "time: " << t.str() << " ms\n";
  }
  return out.str();
}

}  // namespace ckforms
