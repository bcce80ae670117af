#include "restriction.hpp"

#include <sstream>

#include "errors.hpp"
#include "linalg.hpp"

namespace ckforms {

namespace {

void enumerate_products(const std::vector<Generator>& gens, size_t pos, int remaining,
                        std::vector<uint32_t>& powers, int total,
                        std::vector<GeneratorMonomial>& out) {
  if (remaining == 0) {
    out.push_back({powers, total});
    return;
  }
  if (pos == gens.size()) return;
  int dg = gens[pos].poly_degree;
  int max_pow = remaining / dg;
  for (int k = max_pow; k >= 0; --k) {
    powers[pos] = static_cast<uint32_t>(k);
    enumerate_products(gens, pos + 1, remaining - k * dg, powers, total, out);
  }
  powers[pos] = 0;
}

}  // namespace

std::vector<GeneratorMonomial> generator_monomials(const GroupSpec& g, int d) {
  if (d < 0) throw InvalidInput("generator_monomials requires d >= 0");
  auto gens = invariant_generators(g);
  std::vector<GeneratorMonomial> out;
  std::vector<uint32_t> powers(gens.size(), 0);
  enumerate_products(gens, 0, d, powers, d, out);
  return out;
}

std::string generator_monomial_name(const std::vector<Generator>& gens,
                                    const GeneratorMonomial& m) {
  std::string s;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (m.powers[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += gens[i].name;
    if (m.powers[i] > 1) s += "^" + std::to_string(m.powers[i]);
  }
  return s.empty() ? "1" : s;
}

Polynomial expand_generator_monomial(const std::vector<Generator>& gens,
                                     const GeneratorMonomial& m) {
  if (m.powers.size() != gens.size()) {
    throw InvalidInput("generator monomial width does not match generator list");
  }
  int nv = gens.empty() ? 0 : gens[0].torus_poly.num_vars();
  Polynomial p = Polynomial::constant(nv, 1);
  for (size_t i = 0; i < gens.size(); ++i) {
    if (m.powers[i] > 0) p = p * gens[i].torus_poly.pow(m.powers[i]);
  }
  return p;
}

Polynomial restrict_generator(const Generator& gen, const TorusMap& embedding) {
  embedding.validate();
  if (gen.torus_poly.num_vars() != embedding.ambient_rank) {
    throw InvalidInput("torus map ambient rank does not match the generator's group");
  }
  return gen.torus_poly.substitute_linear(embedding.rows);
}

std::string render_kernel_element(const GroupSpec& g, int degree,
                                  const std::vector<Rat>& coeffs) {
  auto gens = invariant_generators(g);
  auto mons = generator_monomials(g, degree);
  if (coeffs.size() != mons.size()) {
    throw InvalidInput("kernel element width does not match the graded piece");
  }
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < mons.size(); ++i) {
    Rat c = coeffs[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) {
        out << "-";
        c = -c;
      }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (c != 1) out << rat_to_string(c) << "*";
    out << generator_monomial_name(gens, mons[i]);
    first = false;
  }
  return first ? "0" : out.str();
}

std::vector<KernelElement> kernel_of_restriction(const GroupSpec& h,
                                                 const TorusMap& k_in_h, int d) {
  h.validate();
  k_in_h.validate();
  if (d < 1) throw InvalidInput("kernel_of_restriction requires d >= 1");
  if (k_in_h.ambient_rank != h.torus_rank()) {
    throw InvalidInput("torus map ambient rank does not match the group's torus rank");
  }

  auto gens = invariant_generators(h);
  auto mons = generator_monomials(h, d);
  if (mons.empty()) return {};

  // Restricting is a ring map, so the image of a product of generators is the
  // product of the restricted generators; this keeps all the heavy expansion
  // on the small subtorus side.
  std::vector<Polynomial> restricted;
  restricted.reserve(gens.size());
  for (const auto& g : gens) restricted.push_back(restrict_generator(g, k_in_h));

  std::vector<GradedVector> images;
  images.reserve(mons.size());
  int kv = k_in_h.sub_rank;
  for (const auto& m : mons) {
    Polynomial img = Polynomial::constant(kv, 1);
    for (size_t i = 0; i < gens.size(); ++i) {
      if (m.powers[i] > 0) img = img * restricted[i].pow(m.powers[i]);
    }
    images.push_back(to_graded_vector(img, d));
  }

  std::vector<KernelElement> out;
  for (auto& coeffs : kernel_basis(images)) {
    // Independent check: expand the combination on the full torus of h and
    // substitute; elimination bugs must not be able to fabricate a kernel.
    Polynomial combo(h.torus_rank());
    for (size_t i = 0; i < mons.size(); ++i) {
      if (coeffs[i] != 0) {
        combo += expand_generator_monomial(gens, mons[i]).scaled(coeffs[i]);
      }
    }
    if (!combo.substitute_linear(k_in_h.rows).is_zero()) {
      throw InternalError("kernel element does not restrict to zero");
    }
    KernelElement e{d, std::move(coeffs), ""};
    e.pretty = render_kernel_element(h, d, e.coeffs);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace ckforms
