#pragma once

#include <string>
#include <vector>

#include "groups.hpp"
#include "torus_map.hpp"

namespace ckforms {

// A product of invariant-ring generators. Because the generators are
// algebraically independent, these products form a basis of the graded piece
// of their weighted degree; `powers` runs parallel to invariant_generators.
struct GeneratorMonomial {
  std::vector<uint32_t> powers;
  int poly_degree = 0;
  bool operator==(const GeneratorMonomial&) const = default;
};

// All degree-d generator monomials in a deterministic order: higher powers of
// earlier generators first, mirroring the global monomial order. Their count
// equals hilbert_dimension(g, d).
std::vector<GeneratorMonomial> generator_monomials(const GroupSpec& g, int d);

std::string generator_monomial_name(const std::vector<Generator>& gens,
                                    const GeneratorMonomial& m);

// The product polynomial on the group's torus.
Polynomial expand_generator_monomial(const std::vector<Generator>& gens,
                                     const GeneratorMonomial& m);

// Pullback of one invariant generator along a torus embedding; plain
// substitution of the integer linear forms.
Polynomial restrict_generator(const Generator& gen, const TorusMap& embedding);

// An invariant-ring element that restricts to zero, stored as coefficients
// over the degree-d generator monomials together with a printable name.
struct KernelElement {
  int degree = 0;
  std::vector<Rat> coeffs;
  std::string pretty;
};

std::string render_kernel_element(const GroupSpec& g, int degree,
                                  const std::vector<Rat>& coeffs);

// Basis of the degree-d kernel of the restriction map induced by the torus
// embedding of K in H, i.e. all degree-d invariant combinations that pull
// back to the zero polynomial. The basis is in reduced echelon form over the
// generator-monomial coordinates with leading coefficient 1. Every returned
// element is re-verified by direct substitution before being handed out.
std::vector<KernelElement> kernel_of_restriction(const GroupSpec& h,
                                                 const TorusMap& k_in_h, int d);

}  // namespace ckforms
