#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "errors.hpp"
#include "groups.hpp"

using namespace ckforms;

namespace {

// Replaces every variable by its square, doubling each exponent. Used to
// rebuild the SO/Sp generators from plain elementary symmetric polynomials.
Polynomial in_squares(const Polynomial& p) {
  Polynomial out(p.num_vars());
  for (const auto& [m, c] : p.terms()) {
    Monomial doubled = m;
    for (auto& e : doubled.exp) e *= 2;
    out.add_term(doubled, c);
  }
  return out;
}

const Generator& find_gen(const std::vector<Generator>& gens, const std::string& name) {
  for (const auto& g : gens) {
    if (g.name == name) return g;
  }
  REQUIRE_MESSAGE(false, "generator not found: ", name);
  static Generator dummy;
  return dummy;
}

// Every generator must be fixed by every supplied Weyl matrix.
void check_invariance(const GroupSpec& g, const std::vector<WeylMatrix>& ws) {
  auto gens = invariant_generators(g);
  for (const auto& w : ws) {
    for (const auto& gen : gens) {
      CAPTURE(gen.name);
      CHECK(apply_weyl(gen.torus_poly, w) == gen.torus_poly);
    }
  }
}

std::vector<WeylMatrix> weyl_elements_for_test(const GroupSpec& g) {
  if (weyl_order(g) <= 384) return weyl_enumerate(g);
  return weyl_sample(g, 50, /*seed=*/12345);
}

}  // namespace

TEST_CASE("factor validation and ranks") {
  CHECK(u_factor(3).torus_rank() == 3);
  CHECK(su_factor(4).torus_rank() == 3);
  CHECK(so_factor(5).family == Family::SOodd);
  CHECK(so_factor(5).torus_rank() == 2);
  CHECK(so_factor(6).family == Family::SOeven);
  CHECK(so_factor(6).torus_rank() == 3);
  CHECK(so_factor(1).torus_rank() == 0);
  CHECK(sp_factor(2).torus_rank() == 2);

  CHECK_THROWS_AS(u_factor(0).validate(), InvalidInput);
  CHECK_THROWS_AS(su_factor(1).validate(), InvalidInput);
  CHECK_THROWS_AS(so_factor(0), InvalidInput);
  CHECK_THROWS_AS(GroupSpec{}.validate(), InvalidInput);

  GroupSpec g{{u_factor(2), so_factor(4)}};
  CHECK(g.torus_rank() == 4);
  CHECK(g.name() == "U(2) x SO(4)");
}

TEST_CASE("invariant generators of the classical families") {
  SUBCASE("U(2): c1, c2") {
    auto gens = invariant_generators(GroupSpec{{u_factor(2)}});
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].name == "c1");  // untagged for a single factor
    CHECK(gens[0].poly_degree == 1);
    CHECK(gens[0].torus_poly == elementary_symmetric(2, 1));
    CHECK(gens[1].name == "c2");
    CHECK(gens[1].torus_poly == elementary_symmetric(2, 2));
  }

  SUBCASE("SU(3): c2, c3 on the two free coordinates") {
    auto gens = invariant_generators(GroupSpec{{su_factor(3)}});
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].name == "c2");
    CHECK(gens[1].name == "c3");
    // evaluate at (x1,x2) = (1,2), so the eliminated coordinate is -3
    std::vector<Rat> pt = {1, 2};
    CHECK(gens[0].torus_poly.evaluate(pt) == -7);  // e2(1,2,-3)
    CHECK(gens[1].torus_poly.evaluate(pt) == -6);  // e3(1,2,-3)
    // the trace itself is identically zero on SU, hence no c1 generator
    CHECK(gens[0].poly_degree == 2);
  }

  SUBCASE("SO(4): p1 then the Euler class") {
    auto gens = invariant_generators(GroupSpec{{so_factor(4)}});
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].name == "p1");
    CHECK(gens[0].torus_poly == in_squares(elementary_symmetric(2, 1)));
    CHECK(gens[1].name == "e");
    Polynomial euler = Polynomial::variable(2, 0) * Polynomial::variable(2, 1);
    CHECK(gens[1].torus_poly == euler);
    CHECK(gens[1].poly_degree == 2);
  }

  SUBCASE("SO(5): Pontryagin classes only") {
    auto gens = invariant_generators(GroupSpec{{so_factor(5)}});
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].torus_poly == in_squares(elementary_symmetric(2, 1)));
    CHECK(gens[1].torus_poly == in_squares(elementary_symmetric(2, 2)));
    CHECK(gens[1].poly_degree == 4);
  }

  SUBCASE("Sp(2): symplectic classes have doubled degree") {
    auto gens = invariant_generators(GroupSpec{{sp_factor(2)}});
    REQUIRE(gens.size() == 2);
    CHECK(gens[0].name == "q1");
    CHECK(gens[0].torus_poly == in_squares(elementary_symmetric(2, 1)));
    CHECK(gens[1].torus_poly == in_squares(elementary_symmetric(2, 2)));
  }

  SUBCASE("SO(1) contributes nothing") {
    CHECK(invariant_generators(GroupSpec{{so_factor(1)}}).empty());
  }

  SUBCASE("products lift with factor tags and offsets") {
    GroupSpec g{{u_factor(1), so_factor(4)}};
    auto gens = invariant_generators(g);
    REQUIRE(gens.size() == 3);
    CHECK(gens[0].name == "c1@1");
    CHECK(gens[1].name == "p1@2");
    CHECK(gens[2].name == "e@2");
    // p1@2 lives on coordinates 2 and 3 of the joint rank-3 torus
    Polynomial x2 = Polynomial::variable(3, 1), x3 = Polynomial::variable(3, 2);
    CHECK(gens[1].torus_poly == x2 * x2 + x3 * x3);
    CHECK(gens[2].torus_poly == x2 * x3);
    CHECK(gens[1].factor == 1);
  }
}

TEST_CASE("derived top class of even SO equals the squared Euler class") {
  for (int m = 2; m <= 5; ++m) {
    CAPTURE(m);
    auto gens = invariant_generators(GroupSpec{{so_factor(2 * m)}});
    REQUIRE(static_cast<int>(gens.size()) == m);
    const Generator& euler = find_gen(gens, "e");
    // e_i in squared variables gives p_i below the top...
    for (int i = 1; i < m; ++i) {
      CHECK(gens[i - 1].torus_poly == in_squares(elementary_symmetric(m, i)));
    }
    // ...and the top one is exactly e^2
    CHECK(in_squares(elementary_symmetric(m, m)) == euler.torus_poly.pow(2));
  }
}

TEST_CASE("hilbert dimensions match the generator degrees") {
  GroupSpec u2{{u_factor(2)}};
  // 1/((1-t)(1-t^2)) = 1 + t + 2t^2 + 2t^3 + 3t^4 + 3t^5 + ...
  std::vector<uint64_t> expect_u2 = {1, 1, 2, 2, 3, 3};
  for (size_t d = 0; d < expect_u2.size(); ++d) {
    CHECK(hilbert_dimension(u2, static_cast<int>(d)) == expect_u2[d]);
  }

  GroupSpec so4{{so_factor(4)}};
  // two generators of degree 2: 1, 0, 2, 0, 3, 0, 4
  std::vector<uint64_t> expect_so4 = {1, 0, 2, 0, 3, 0, 4};
  for (size_t d = 0; d < expect_so4.size(); ++d) {
    CHECK(hilbert_dimension(so4, static_cast<int>(d)) == expect_so4[d]);
  }

  GroupSpec su2{{su_factor(2)}};
  CHECK(hilbert_dimension(su2, 1) == 0);
  CHECK(hilbert_dimension(su2, 2) == 1);
  CHECK(hilbert_dimension(su2, 12) == 1);

  // products multiply the series: U(1) x U(1) has dims d+1
  GroupSpec torus{{u_factor(1), u_factor(1)}};
  CHECK(hilbert_dimension(torus, 5) == 6);
}

TEST_CASE("weyl group orders") {
  CHECK(weyl_order(GroupSpec{{u_factor(3)}}) == 6);
  CHECK(weyl_order(GroupSpec{{su_factor(4)}}) == 24);
  CHECK(weyl_order(GroupSpec{{so_factor(5)}}) == 8);
  CHECK(weyl_order(GroupSpec{{so_factor(4)}}) == 4);
  CHECK(weyl_order(GroupSpec{{so_factor(2)}}) == 1);
  CHECK(weyl_order(GroupSpec{{so_factor(1)}}) == 1);
  CHECK(weyl_order(GroupSpec{{sp_factor(3)}}) == 48);
  CHECK(weyl_order(GroupSpec{{u_factor(2), so_factor(4)}}) == 8);
}

TEST_CASE("weyl enumeration matches the order and is invariant") {
  for (GroupSpec g : {GroupSpec{{u_factor(3)}}, GroupSpec{{su_factor(3)}},
                      GroupSpec{{so_factor(4)}}, GroupSpec{{so_factor(5)}},
                      GroupSpec{{sp_factor(2)}}, GroupSpec{{u_factor(2), so_factor(3)}}}) {
    CAPTURE(g.name());
    auto ws = weyl_enumerate(g);
    CHECK(ws.size() == weyl_order(g));
    // no duplicates
    std::map<WeylMatrix, int> seen;
    for (const auto& w : ws) seen[w]++;
    CHECK(seen.size() == ws.size());
    check_invariance(g, ws);
  }
  CHECK_THROWS_AS(weyl_enumerate(GroupSpec{{u_factor(8)}}), InvalidInput);
}

TEST_CASE("sampled weyl elements are reproducible and invariant") {
  GroupSpec g{{su_factor(6)}};  // |W| = 720, too big for the exhaustive path here
  auto a = weyl_sample(g, 50, 99);
  auto b = weyl_sample(g, 50, 99);
  CHECK(a == b);
  auto c = weyl_sample(g, 50, 100);
  CHECK(a != c);  // different seed, different sample (astronomically likely)
  check_invariance(g, a);

  check_invariance(GroupSpec{{so_factor(8)}},
                   weyl_sample(GroupSpec{{so_factor(8)}}, 50, 7));
  check_invariance(GroupSpec{{sp_factor(4)}},
                   weyl_sample(GroupSpec{{sp_factor(4)}}, 50, 7));
  check_invariance(GroupSpec{{u_factor(5), su_factor(3)}},
                   weyl_sample(GroupSpec{{u_factor(5), su_factor(3)}}, 50, 7));
}

TEST_CASE("even SO Weyl group only flips signs in pairs") {
  // The reflection x1 -> -x1 alone is not in W(SO(4)): nothing in the
  // enumeration maps e to -e.
  GroupSpec so4{{so_factor(4)}};
  auto gens = invariant_generators(so4);
  const Generator& euler = find_gen(gens, "e");
  for (const auto& w : weyl_enumerate(so4)) {
    CHECK(apply_weyl(euler.torus_poly, w) == euler.torus_poly);
  }
  // while odd SO does contain it, so the Euler monomial is not invariant there
  GroupSpec so5{{so_factor(5)}};
  Polynomial xy = Polynomial::variable(2, 0) * Polynomial::variable(2, 1);
  bool flipped = false;
  for (const auto& w : weyl_enumerate(so5)) {
    flipped = flipped || apply_weyl(xy, w) == -xy;
  }
  CHECK(flipped);
}

TEST_CASE("weyl matrices act by substitution") {
  Polynomial x1 = Polynomial::variable(2, 0);
  WeylMatrix swap = {{0, 1}, {1, 0}};
  CHECK(apply_weyl(x1 * x1, swap) == Polynomial::variable(2, 1).pow(2));

  auto ws = weyl_elements_for_test(GroupSpec{{u_factor(4)}});
  CHECK(ws.size() == 24);
}
