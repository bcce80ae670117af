#include "catalog.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "errors.hpp"
#include "linalg.hpp"

namespace ckforms {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string id_for(const std::string& family, const std::vector<int>& params) {
  std::string s = family + "(";
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(params[i]);
  }
  return s + ")";
}

void require_params(const std::string& family, const std::vector<int>& params, size_t n) {
  if (params.size() != n) {
    throw InvalidInput(family + " takes " + std::to_string(n) + " parameter(s)");
  }
}

// Sweeps stay interactive as long as the ambient torus is small.
void check_scale(const std::string& family, const GroupSpec& g_u) {
  if (g_u.torus_rank() > 12) {
    throw InvalidInput(family + ": parameters out of bounds (ambient torus rank > 12)");
  }
}

std::vector<int> positive_parts(std::initializer_list<int> parts) {
  std::vector<int> out;
  for (int p : parts) {
    if (p > 0) out.push_back(p);
  }
  return out;
}

// GL(2n,R) / GL(n,C): U(2n) over U(n) x U(n) with conjugate-diagonal K_H.
CatalogEntry family_gl2nr_glnc(const std::vector<int>& params) {
  require_params("gl2nr-glnc", params, 1);
  int n = params[0];
  if (n < 1) throw InvalidInput("gl2nr-glnc: n must be >= 1");
  CatalogEntry e;
  e.family = "gl2nr-glnc";
  e.params = params;
  GroupSpec un{{u_factor(n)}};
  e.pair.id = id_for(e.family, params);
  e.pair.g_u = GroupSpec{{u_factor(2 * n)}};
  e.pair.h_u = GroupSpec{{u_factor(n), u_factor(n)}};
  e.pair.map_h_in_g = blocks_in_u({n, n});
  e.pair.map_kh_in_h = diag_conjugate(un);
  e.pair.rank_g = 2 * n;
  e.pair.rank_h = 2 * n;
  e.pair.rank_kg = n;  // K_G = O(2n)
  e.pair.rank_kh = n;  // K_H = U(n)
  check_scale(e.family, e.pair.g_u);
  e.description = "GL(" + std::to_string(2 * n) + ",R)/GL(" + std::to_string(n) + ",C)";
  if (n >= 2) {
    e.expected = {Verdict::ObstructionFound, "c2@1 - c2@2", 2, Precheck::Applicable};
  }
  return e;
}

// SL(p+q,R) / SO(p,q): SU(p+q) over SO(p+q) with block K_H = SO(p) x SO(q).
CatalogEntry family_sl_pq(const std::vector<int>& params) {
  require_params("sl-pq-so-pq", params, 2);
  int p = params[0], q = params[1];
  if (p < 1 || q < 1) throw InvalidInput("sl-pq-so-pq: p, q must be >= 1");
  int n = p + q;
  if (n < 2) throw InvalidInput("sl-pq-so-pq: p + q must be >= 2");
  CatalogEntry e;
  e.family = "sl-pq-so-pq";
  e.params = params;
  e.pair.id = id_for(e.family, params);
  e.pair.g_u = GroupSpec{{su_factor(n)}};
  e.pair.h_u = GroupSpec{{so_factor(n)}};
  e.pair.map_h_in_g = paired_in_su(n);
  e.pair.map_kh_in_h = block_so_in_so({p, q});
  e.pair.rank_g = n - 1;
  e.pair.rank_h = n / 2;
  e.pair.rank_kg = n / 2;  // K_G = SO(n)
  e.pair.rank_kh = p / 2 + q / 2;
  check_scale(e.family, e.pair.g_u);
  e.description = "SL(" + std::to_string(n) + ",R)/SO(" + std::to_string(p) + "," +
                  std::to_string(q) + ")";
  if (p % 2 == 1 && q % 2 == 1) {
    // Both signatures odd: the Euler class of SO(p+q) dies and escapes.
    e.expected = {Verdict::ObstructionFound, "e", n / 2, Precheck::Applicable};
  } else {
    e.expected = {Verdict::Inapplicable, "", 0, Precheck::EqualRankHK};
  }
  return e;
}

// O(n,n) / O(n,C): SO(2n) over SO(n) x SO(n) with diagonal K_H = SO(n).
CatalogEntry family_o_nn(const std::vector<int>& params) {
  require_params("o-nn-o-nc", params, 1);
  int n = params[0];
  if (n < 2) throw InvalidInput("o-nn-o-nc: n must be >= 2");
  CatalogEntry e;
  e.family = "o-nn-o-nc";
  e.params = params;
  e.pair.id = id_for(e.family, params);
  e.pair.g_u = GroupSpec{{so_factor(2 * n)}};
  e.pair.h_u = GroupSpec{{so_factor(n), so_factor(n)}};
  e.pair.map_h_in_g = block_so_in_so({n, n});
  e.pair.map_kh_in_h = diag_conjugate(GroupSpec{{so_factor(n)}});
  e.pair.rank_g = n;
  e.pair.rank_h = 2 * (n / 2);
  e.pair.rank_kg = 2 * (n / 2);  // K_G = O(n) x O(n)
  e.pair.rank_kh = n / 2;        // K_H = O(n,C) maximal compact, i.e. O(n)
  check_scale(e.family, e.pair.g_u);
  e.description = "O(" + std::to_string(n) + "," + std::to_string(n) + ")/O(" +
                  std::to_string(n) + ",C)";
  if (n == 2) {
    // The two Euler classes already differ in degree 1.
    e.expected = {Verdict::ObstructionFound, "e@1 - e@2", 1, Precheck::Applicable};
  } else {
    e.expected = {Verdict::ObstructionFound, "p1@1 - p1@2", 2, Precheck::Applicable};
  }
  return e;
}

// O(p+r,q+s) / O(p,q) x O(r,s).
CatalogEntry family_o_pqrs(const std::vector<int>& params) {
  require_params("o-pqrs", params, 4);
  int p = params[0], q = params[1], r = params[2], s = params[3];
  if (p < 0 || q < 0 || r < 0 || s < 0 || p + q < 1 || r + s < 1) {
    throw InvalidInput("o-pqrs: signatures must be nonnegative with p+q >= 1 and r+s >= 1");
  }
  int n1 = p + q, n2 = r + s;
  CatalogEntry e;
  e.family = "o-pqrs";
  e.params = params;
  e.pair.id = id_for(e.family, params);
  e.pair.g_u = GroupSpec{{so_factor(n1 + n2)}};
  e.pair.h_u = GroupSpec{{so_factor(n1), so_factor(n2)}};
  e.pair.map_h_in_g = block_so_in_so({n1, n2});
  e.pair.map_kh_in_h =
      direct_sum(block_so_in_so(positive_parts({p, q})),
                 block_so_in_so(positive_parts({r, s})));
  e.pair.rank_g = (n1 + n2) / 2;
  e.pair.rank_h = n1 / 2 + n2 / 2;
  e.pair.rank_kg = (p + r) / 2 + (q + s) / 2;  // K_G = O(p+r) x O(q+s)
  e.pair.rank_kh = p / 2 + q / 2 + r / 2 + s / 2;
  check_scale(e.family, e.pair.g_u);
  auto o_name = [](int a, int b) {
    if (b == 0) return "O(" + std::to_string(a) + ")";
    return "O(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  e.description = o_name(p + r, q + s) + "/(" + o_name(p, q) + " x " + o_name(r, s) + ")";
  bool first_odd = (p % 2 == 1 && q % 2 == 1);
  bool second_odd = (r % 2 == 1 && s % 2 == 1);
  if (!first_odd && !second_odd) {
    e.expected = {Verdict::Inapplicable, "", 0, Precheck::EqualRankHK};
  } else {
    // The Euler class of a both-odd factor restricts to zero; the one of
    // smaller degree surfaces first (ties resolve to the first factor).
    int d1 = first_odd ? n1 / 2 : INT32_MAX;
    int d2 = second_odd ? n2 / 2 : INT32_MAX;
    if (d1 <= d2) {
      e.expected = {Verdict::ObstructionFound, "e@1", d1, Precheck::Applicable};
    } else {
      e.expected = {Verdict::ObstructionFound, "e@2", d2, Precheck::Applicable};
    }
  }
  return e;
}

// SL(n1+n2,R) / SL(n1,R) x SL(n2,R).
CatalogEntry family_sl_sum_r(const std::vector<int>& params) {
  require_params("sl-sum-r", params, 2);
  int n1 = params[0], n2 = params[1];
  if (n1 < 2 || n2 < 2) throw InvalidInput("sl-sum-r: block sizes must be >= 2");
  int n = n1 + n2;
  CatalogEntry e;
  e.family = "sl-sum-r";
  e.params = params;
  e.pair.id = id_for(e.family, params);
  e.pair.g_u = GroupSpec{{su_factor(n)}};
  e.pair.h_u = GroupSpec{{su_factor(n1), su_factor(n2)}};
  e.pair.map_h_in_g = blocks_in_su({n1, n2});
  e.pair.map_kh_in_h = direct_sum(paired_in_su(n1), paired_in_su(n2));
  e.pair.rank_g = n - 1;
  e.pair.rank_h = n1 + n2 - 2;
  e.pair.rank_kg = n / 2;  // K_G = SO(n)
  e.pair.rank_kh = n1 / 2 + n2 / 2;
  check_scale(e.family, e.pair.g_u);
  e.description = "SL(" + std::to_string(n) + ",R)/(SL(" + std::to_string(n1) +
                  ",R) x SL(" + std::to_string(n2) + ",R))";
  if (n1 % 2 == 1 && n2 % 2 == 1) {
    // Odd blocks kill every odd Chern class of both factors; c3 escapes.
    e.expected = {Verdict::ObstructionFound, "c3@1", 3, Precheck::Applicable};
  } else if (n1 == 2 && n2 == 2) {
    e.expected = {Verdict::Inapplicable, "", 0, Precheck::EqualRankHK};
  }
  return e;
}

// SL(n1+n2,C) / SL(n1,C) x SL(n2,C), viewed through the doubled compact form.
// H_U factors are ordered (holomorphic 1, holomorphic 2, conjugate 1,
// conjugate 2) so both torus maps are plain direct sums.
CatalogEntry family_sl_sum_c(const std::vector<int>& params) {
  require_params("sl-sum-c", params, 2);
  int n1 = params[0], n2 = params[1];
  if (n1 < 2 || n2 < 2) throw InvalidInput("sl-sum-c: block sizes must be >= 2");
  int n = n1 + n2;
  CatalogEntry e;
  e.family = "sl-sum-c";
  e.params = params;
  e.pair.id = id_for(e.family, params);
  e.pair.g_u = GroupSpec{{su_factor(n), su_factor(n)}};
  e.pair.h_u = GroupSpec{{su_factor(n1), su_factor(n2), su_factor(n1), su_factor(n2)}};
  TorusMap half = blocks_in_su({n1, n2});
  e.pair.map_h_in_g = direct_sum(half, half);
  e.pair.map_kh_in_h = diag_conjugate(GroupSpec{{su_factor(n1), su_factor(n2)}});
  e.pair.rank_g = 2 * (n - 1);
  e.pair.rank_h = 2 * (n1 + n2 - 2);
  e.pair.rank_kg = n - 1;          // K_G = SU(n)
  e.pair.rank_kh = n1 + n2 - 2;    // K_H = SU(n1) x SU(n2)
  check_scale(e.family, e.pair.g_u);
  e.description = "SL(" + std::to_string(n) + ",C)/(SL(" + std::to_string(n1) +
                  ",C) x SL(" + std::to_string(n2) + ",C))";
  e.expected = {Verdict::ObstructionFound, "c2@1 - c2@3", 2, Precheck::Applicable};
  return e;
}

// SL(n1+n2,H) / SL(n1,H) x SL(n2,H): SU(2n) over SU(2n1) x SU(2n2) with
// symplectic maximal compacts.
CatalogEntry family_sl_sum_h(const std::vector<int>& params) {
  require_params("sl-sum-h", params, 2);
  int n1 = params[0], n2 = params[1];
  if (n1 < 1 || n2 < 1) throw InvalidInput("sl-sum-h: block sizes must be >= 1");
  int n = n1 + n2;
  CatalogEntry e;
  e.family = "sl-sum-h";
  e.params = params;
  e.pair.id = id_for(e.family, params);
  e.pair.g_u = GroupSpec{{su_factor(2 * n)}};
  e.pair.h_u = GroupSpec{{su_factor(2 * n1), su_factor(2 * n2)}};
  e.pair.map_h_in_g = blocks_in_su({2 * n1, 2 * n2});
  e.pair.map_kh_in_h = direct_sum(paired_in_su(2 * n1), paired_in_su(2 * n2));
  e.pair.rank_g = 2 * n - 1;
  e.pair.rank_h = 2 * n1 + 2 * n2 - 2;
  e.pair.rank_kg = n;              // K_G = Sp(n)
  e.pair.rank_kh = n1 + n2;        // K_H = Sp(n1) x Sp(n2)
  check_scale(e.family, e.pair.g_u);
  e.description = "SL(" + std::to_string(n) + ",H)/(SL(" + std::to_string(n1) +
                  ",H) x SL(" + std::to_string(n2) + ",H))";
  e.expected = {Verdict::ObstructionFound, "c3@1", 3, Precheck::Applicable};
  return e;
}

// O(n1+n2,C) / O(n1,C) x O(n2,C) through the doubled compact form.
CatalogEntry family_o_sum_c(const std::vector<int>& params) {
  require_params("o-sum-c", params, 2);
  int n1 = params[0], n2 = params[1];
  if (n1 < 1 || n2 < 1) throw InvalidInput("o-sum-c: block sizes must be >= 1");
  int n = n1 + n2;
  CatalogEntry e;
  e.family = "o-sum-c";
  e.params = params;
  e.pair.id = id_for(e.family, params);
  e.pair.g_u = GroupSpec{{so_factor(n), so_factor(n)}};
  e.pair.h_u =
      GroupSpec{{so_factor(n1), so_factor(n2), so_factor(n1), so_factor(n2)}};
  TorusMap half = block_so_in_so({n1, n2});
  e.pair.map_h_in_g = direct_sum(half, half);
  e.pair.map_kh_in_h = diag_conjugate(GroupSpec{{so_factor(n1), so_factor(n2)}});
  int m1 = n1 / 2, m2 = n2 / 2;
  e.pair.rank_g = 2 * (n / 2);
  e.pair.rank_h = 2 * (m1 + m2);
  e.pair.rank_kg = n / 2;       // K_G = O(n)
  e.pair.rank_kh = m1 + m2;     // K_H = O(n1) x O(n2)
  check_scale(e.family, e.pair.g_u);
  e.description = "O(" + std::to_string(n) + ",C)/(O(" + std::to_string(n1) +
                  ",C) x O(" + std::to_string(n2) + ",C))";
  if (m1 + m2 == 0) {
    e.expected = {Verdict::Inapplicable, "", 0, Precheck::EqualRankHK};
  } else if (n1 == 2) {
    e.expected = {Verdict::ObstructionFound, "e@1 - e@3", 1, Precheck::Applicable};
  } else if (n2 == 2) {
    e.expected = {Verdict::ObstructionFound, "e@2 - e@4", 1, Precheck::Applicable};
  } else {
    int f = n1 >= 3 ? 1 : 2;  // first factor with a Pontryagin class
    e.expected = {Verdict::ObstructionFound,
                  "p1@" + std::to_string(f) + " - p1@" + std::to_string(f + 2), 2,
                  Precheck::Applicable};
  }
  return e;
}

// Sp(n1+n2,C) / Sp(n1,C) x Sp(n2,C) through the doubled compact form.
CatalogEntry family_sp_sum_c(const std::vector<int>& params) {
  require_params("sp-sum-c", params, 2);
  int n1 = params[0], n2 = params[1];
  if (n1 < 1 || n2 < 1) throw InvalidInput("sp-sum-c: block sizes must be >= 1");
  int n = n1 + n2;
  CatalogEntry e;
  e.family = "sp-sum-c";
  e.params = params;
  e.pair.id = id_for(e.family, params);
  e.pair.g_u = GroupSpec{{sp_factor(n), sp_factor(n)}};
  e.pair.h_u =
      GroupSpec{{sp_factor(n1), sp_factor(n2), sp_factor(n1), sp_factor(n2)}};
  TorusMap half = blocks_in_sp({n1, n2});
  e.pair.map_h_in_g = direct_sum(half, half);
  e.pair.map_kh_in_h = diag_conjugate(GroupSpec{{sp_factor(n1), sp_factor(n2)}});
  e.pair.rank_g = 2 * n;
  e.pair.rank_h = 2 * n;
  e.pair.rank_kg = n;        // K_G = Sp(n)
  e.pair.rank_kh = n;        // K_H = Sp(n1) x Sp(n2)
  check_scale(e.family, e.pair.g_u);
  e.description = "Sp(" + std::to_string(n) + ",C)/(Sp(" + std::to_string(n1) +
                  ",C) x Sp(" + std::to_string(n2) + ",C))";
  e.expected = {Verdict::ObstructionFound, "q1@1 - q1@3", 2, Precheck::Applicable};
  return e;
}

// U(p+r,q) / U(p,q) x U(r): rank H_U always equals rank K_H, so the
// criterion never applies, whatever the signature.
CatalogEntry family_u_prq(const std::vector<int>& params) {
  require_params("u-prq-upq-ur", params, 3);
  int p = params[0], q = params[1], r = params[2];
  if (p < 0 || q < 0 || r < 1 || p + q < 1) {
    throw InvalidInput("u-prq-upq-ur: requires p, q >= 0, p+q >= 1, r >= 1");
  }
  int n = p + q + r;
  CatalogEntry e;
  e.family = "u-prq-upq-ur";
  e.params = params;
  e.pair.id = id_for(e.family, params);
  e.pair.g_u = GroupSpec{{u_factor(n)}};
  e.pair.h_u = GroupSpec{{u_factor(p + q), u_factor(r)}};
  e.pair.map_h_in_g = blocks_in_u({p + q, r});
  e.pair.map_kh_in_h = identity_map(n);
  e.pair.rank_g = n;
  e.pair.rank_h = n;
  e.pair.rank_kg = n;  // K_G = U(p+r) x U(q)
  e.pair.rank_kh = n;  // K_H = U(p) x U(q) x U(r)
  check_scale(e.family, e.pair.g_u);
  auto u_name = [](int a, int b) {
    if (b == 0) return "U(" + std::to_string(a) + ")";
    return "U(" + std::to_string(a) + "," + std::to_string(b) + ")";
  };
  e.description = u_name(p + r, q) + "/(" + u_name(p, q) + " x " + u_name(r, 0) + ")";
  e.expected = {Verdict::Inapplicable, "", 0, Precheck::EqualRankHK};
  return e;
}

// SL(n,C) / SL(n,R): the complexification case, excluded by flag.
CatalogEntry family_sl_c_complexification(const std::vector<int>& params) {
  require_params("sl-c-complexification", params, 1);
  int n = params[0];
  if (n < 2) throw InvalidInput("sl-c-complexification: n must be >= 2");
  CatalogEntry e;
  e.family = "sl-c-complexification";
  e.params = params;
  e.pair.id = id_for(e.family, params);
  e.pair.g_u = GroupSpec{{su_factor(n), su_factor(n)}};
  e.pair.h_u = GroupSpec{{su_factor(n)}};
  e.pair.map_h_in_g = diag_conjugate(GroupSpec{{su_factor(n)}});
  e.pair.map_kh_in_h = paired_in_su(n);
  e.pair.rank_g = 2 * (n - 1);
  e.pair.rank_h = n - 1;
  e.pair.rank_kg = n - 1;  // K_G = SU(n)
  e.pair.rank_kh = n / 2;  // K_H = SO(n)
  e.pair.complexification = true;
  check_scale(e.family, e.pair.g_u);
  e.description = "SL(" + std::to_string(n) + ",C)/SL(" + std::to_string(n) + ",R)";
  e.expected = {Verdict::Inapplicable, "", 0, Precheck::Complexification};
  return e;
}

using FamilyFn = CatalogEntry (*)(const std::vector<int>&);

struct FamilyRegistration {
  FamilyInfo info;
  FamilyFn build;
};

const std::vector<FamilyRegistration>& family_registry() {
  static const std::vector<FamilyRegistration> reg = {
      {{"gl2nr-glnc", {"n"}, "GL(2n,R)/GL(n,C)"}, &family_gl2nr_glnc},
      {{"sl-pq-so-pq", {"p", "q"}, "SL(p+q,R)/SO(p,q)"}, &family_sl_pq},
      {{"o-nn-o-nc", {"n"}, "O(n,n)/O(n,C)"}, &family_o_nn},
      {{"o-pqrs", {"p", "q", "r", "s"}, "O(p+r,q+s)/(O(p,q) x O(r,s))"}, &family_o_pqrs},
      {{"sl-sum-r", {"n1", "n2"}, "SL(n1+n2,R)/(SL(n1,R) x SL(n2,R))"}, &family_sl_sum_r},
      {{"sl-sum-c", {"n1", "n2"}, "SL(n1+n2,C)/(SL(n1,C) x SL(n2,C))"}, &family_sl_sum_c},
      {{"sl-sum-h", {"n1", "n2"}, "SL(n1+n2,H)/(SL(n1,H) x SL(n2,H))"}, &family_sl_sum_h},
      {{"o-sum-c", {"n1", "n2"}, "O(n1+n2,C)/(O(n1,C) x O(n2,C))"}, &family_o_sum_c},
      {{"sp-sum-c", {"n1", "n2"}, "Sp(n1+n2,C)/(Sp(n1,C) x Sp(n2,C))"}, &family_sp_sum_c},
      {{"u-prq-upq-ur", {"p", "q", "r"}, "U(p+r,q)/(U(p,q) x U(r))"}, &family_u_prq},
      {{"sl-c-complexification", {"n"}, "SL(n,C)/SL(n,R)"}, &family_sl_c_complexification},
  };
  return reg;
}

}  // namespace

const std::vector<FamilyInfo>& known_families() {
  static const std::vector<FamilyInfo> infos = [] {
    std::vector<FamilyInfo> v;
    for (const auto& r : family_registry()) v.push_back(r.info);
    return v;
  }();
  return infos;
}

CatalogEntry make_family_entry(const std::string& family, const std::vector<int>& params) {
  for (const auto& r : family_registry()) {
    if (r.info.name == family) {
      CatalogEntry e = r.build(params);
      e.pair.validate();
      return e;
    }
  }
  throw InvalidInput("unknown pair family: \"" + family + "\"");
}

CatalogEntry enlarge_ambient(const CatalogEntry& e, const GroupSpec& bigger,
                             const TorusMap& embed_g, int new_rank_kg) {
  bigger.validate();
  if (embed_g.ambient_rank != bigger.torus_rank() ||
      embed_g.sub_rank != e.pair.g_u.torus_rank()) {
    throw InvalidInput("enlarge_ambient: embedding must map the old ambient torus into the new one");
  }
  CatalogEntry out = e;
  out.pair.id = e.pair.id + ":enlarged";
  out.pair.g_u = bigger;
  out.pair.map_h_in_g = compose(embed_g, e.pair.map_h_in_g);
  out.pair.rank_g = bigger.torus_rank();
  out.pair.rank_kg = new_rank_kg;
  out.family.clear();
  out.params.clear();
  out.aliases.clear();
  out.pair.validate();
  return out;
}

CatalogEntry append_central_factor(const CatalogEntry& e, const GroupSpec& extra,
                                   const TorusMap& extra_k_in_extra,
                                   const GroupSpec& new_g, const TorusMap& new_h_in_g,
                                   int new_rank_kg) {
  extra.validate();
  new_g.validate();
  if (extra_k_in_extra.ambient_rank != extra.torus_rank()) {
    throw InvalidInput("append_central_factor: the extra K map must land in the extra factor's torus");
  }
  CatalogEntry out = e;
  out.pair.id = e.pair.id + ":appended";
  // The factor goes last so existing generator tags, and with them the
  // expected witness names, stay valid.
  out.pair.h_u.factors.insert(out.pair.h_u.factors.end(), extra.factors.begin(),
                              extra.factors.end());
  out.pair.g_u = new_g;
  out.pair.map_h_in_g = new_h_in_g;
  out.pair.map_kh_in_h = direct_sum(e.pair.map_kh_in_h, extra_k_in_extra);
  out.pair.rank_g = new_g.torus_rank();
  out.pair.rank_h = out.pair.h_u.torus_rank();
  out.pair.rank_kg = new_rank_kg;
  out.pair.rank_kh = out.pair.map_kh_in_h.sub_rank;
  out.family.clear();
  out.params.clear();
  out.aliases.clear();
  out.pair.validate();
  return out;
}

const std::vector<CatalogEntry>& builtin_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    auto add = [&v](CatalogEntry e, std::string source, std::vector<std::string> aliases,
                    std::vector<std::string> extra_witnesses = {}, std::string notes = "") {
      e.source = std::move(source);
      e.aliases = std::move(aliases);
      e.extra_witnesses = std::move(extra_witnesses);
      e.pair.notes = std::move(notes);
      v.push_back(std::move(e));
    };

    add(make_family_entry("gl2nr-glnc", {2}), "Cor 1.4 (1)", {"gl4r-gl2c"});
    add(make_family_entry("gl2nr-glnc", {3}), "Cor 1.4 (1)", {"gl6r-gl3c"});

    add(make_family_entry("sl-pq-so-pq", {1, 1}), "Cor 1.4 (2)", {"sl2r-so11"});
    add(make_family_entry("sl-pq-so-pq", {1, 3}), "Cor 1.4 (2)", {"sl4r-so13"});
    add(make_family_entry("sl-pq-so-pq", {3, 3}), "Cor 1.4 (2)", {"sl6r-so33"});

    // The uniform degree-2 certificate p1@1 - p1@2 stays valid for n = 2 even
    // though the search stops at the degree-1 Euler difference first.
    add(make_family_entry("o-nn-o-nc", {2}), "Cor 1.4 (3)", {"o22-o2c"},
        {"p1@1 - p1@2"});
    add(make_family_entry("o-nn-o-nc", {3}), "Cor 1.4 (3)", {"o33-o3c"});

    add(make_family_entry("o-pqrs", {1, 1, 1, 0}), "Cor 1.4 (4)", {"o21-o11xo1"});
    add(make_family_entry("o-pqrs", {1, 3, 2, 0}), "Cor 1.4 (4)", {"o33-o13xo2"});
    add(make_family_entry("o-pqrs", {1, 1, 1, 1}), "Cor 1.5 (4)", {"o22-o11x2"});

    add(make_family_entry("sl-sum-r", {3, 3}), "Cor 1.5 (1)", {"sl6r-sl3rx2"});
    add(make_family_entry("sl-sum-c", {2, 2}), "Cor 1.5 (2)", {"sl4c-sl2cx2"});
    add(make_family_entry("sl-sum-h", {2, 2}), "Cor 1.5 (3)", {"sl4h-sl2hx2"});

    add(make_family_entry("o-sum-c", {2, 2}), "Remark 1.8", {"o4c-o2cx2"});
    add(make_family_entry("sp-sum-c", {1, 1}), "Remark 1.8", {"sp2c-sp1cx2"});
    add(make_family_entry("o-sum-c", {2, 1}), "Remark 1.9", {"o3c-o2cxo1c"}, {},
        "odd total dimension; not covered by the even-dimensional results");

    add(make_family_entry("u-prq-upq-ur", {1, 1, 1}), "Example 6.3 (1)", {"u21-u11xu1"}, {},
        "Calabi-Markus phenomenon: only finite groups act properly "
        "discontinuously, so no compact form exists; this criterion cannot "
        "detect that");
    add(make_family_entry("sl-c-complexification", {2}), "Example 6.3 (2)",
        {"sl2c-sl2r"}, {},
        "Calabi-Markus phenomenon for n = 2; the complexification case is "
        "excluded from the criterion");
    add(make_family_entry("sl-c-complexification", {3}), "Example 6.3 (2)",
        {"sl3c-sl3r"});

    // Stability under enlarging the ambient group and under appending a
    // factor to H, exercised on the SL(6,R) pair.
    {
      CatalogEntry base = make_family_entry("sl-sum-r", {3, 3});
      CatalogEntry enlarged = enlarge_ambient(base, GroupSpec{{su_factor(8)}},
                                              blocks_in_su({6, 1, 1}), 4);
      enlarged.description = "SL(8,R)/(SL(3,R) x SL(3,R))";
      enlarged.source = "Prop 5.2 (1) on Cor 1.5 (1)";
      enlarged.aliases = {"sl8r-sl3rx2"};
      v.push_back(enlarged);

      CatalogEntry appended = append_central_factor(
          base, GroupSpec{{su_factor(2)}}, paired_in_su(2), GroupSpec{{su_factor(8)}},
          blocks_in_su({3, 3, 2}), 4);
      appended.description = "SL(8,R)/(SL(3,R) x SL(3,R) x SL(2,R))";
      appended.source = "Prop 5.2 (2) on Cor 1.5 (1)";
      appended.aliases = {"sl8r-sl3rx2-sl2r"};
      v.push_back(appended);
    }
    return v;
  }();
  return entries;
}

const CatalogEntry* find_entry(const std::string& id_or_alias) {
  for (const auto& e : builtin_entries()) {
    if (e.pair.id == id_or_alias) return &e;
    for (const auto& a : e.aliases) {
      if (a == id_or_alias) return &e;
    }
  }
  return nullptr;
}

namespace {

std::string family_to_string(Family f) {
  switch (f) {
    case Family::U: return "U";
    case Family::SU: return "SU";
    case Family::SOodd:
    case Family::SOeven: return "SO";
    case Family::Sp: return "Sp";
  }
  throw InternalError("unknown family");
}

ClassicalFactor factor_from_json(const ordered_json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("family") || !j.contains("n")) {
    throw InvalidInput("pair spec: " + where + " must be an object with \"family\" and \"n\"");
  }
  if (!j["family"].is_string() || !j["n"].is_number_integer()) {
    throw InvalidInput("pair spec: " + where + ": \"family\" must be a string and \"n\" an integer");
  }
  std::string fam = j["family"].get<std::string>();
  int n = j["n"].get<int>();
  if (fam == "U") return u_factor(n);
  if (fam == "SU") return su_factor(n);
  if (fam == "SO") return so_factor(n);
  if (fam == "Sp") return sp_factor(n);
  throw InvalidInput("pair spec: " + where + ".family must be one of U, SU, SO, Sp");
}

GroupSpec group_from_json(const ordered_json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    throw InvalidInput("pair spec: field \"" + field + "\" must be a nonempty array of factors");
  }
  GroupSpec g;
  for (size_t i = 0; i < j.size(); ++i) {
    g.factors.push_back(factor_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  }
  g.validate();
  return g;
}

std::vector<std::vector<long long>> matrix_from_json(const ordered_json& j,
                                                     const std::string& field) {
  if (!j.is_array()) {
    throw InvalidInput("pair spec: field \"" + field + "\" must be an array of rows");
  }
  std::vector<std::vector<long long>> rows;
  size_t width = SIZE_MAX;
  for (const auto& rj : j) {
    if (!rj.is_array()) throw InvalidInput("pair spec: " + field + " rows must be arrays");
    std::vector<long long> row;
    for (const auto& x : rj) {
      if (!x.is_number_integer()) {
        throw InvalidInput("pair spec: " + field + " entries must be integers");
      }
      row.push_back(x.get<long long>());
    }
    if (width == SIZE_MAX) {
      width = row.size();
    } else if (row.size() != width) {
      throw InvalidInput("pair spec: " + field + " is ragged");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

TorusMap map_from_json(const ordered_json& j, const std::string& field, int fallback_cols) {
  auto rows = matrix_from_json(j, field);
  int cols = rows.empty() ? fallback_cols : static_cast<int>(rows[0].size());
  TorusMap m{static_cast<int>(rows.size()), cols, std::move(rows)};
  try {
    m.validate();
  } catch (const InvalidInput& err) {
    throw InvalidInput("pair spec: " + field + ": " + err.what());
  }
  return m;
}

}  // namespace

PairSpec load_pair(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("pair spec: not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInput("pair spec: top level must be an object");

  for (const char* field : {"id", "g_u", "h_u", "map_h_in_g", "map_kh_in_h", "ranks"}) {
    if (!j.contains(field)) {
      throw InvalidInput(std::string("pair spec: missing field \"") + field + "\"");
    }
  }
  PairSpec p;
  if (!j["id"].is_string()) throw InvalidInput("pair spec: field \"id\" must be a string");
  p.id = j["id"].get<std::string>();
  p.g_u = group_from_json(j["g_u"], "g_u");
  p.h_u = group_from_json(j["h_u"], "h_u");

  const auto& ranks = j["ranks"];
  if (!ranks.is_object()) throw InvalidInput("pair spec: field \"ranks\" must be an object");
  for (const char* field : {"g", "h", "kg", "kh"}) {
    if (!ranks.contains(field) || !ranks[field].is_number_integer()) {
      throw InvalidInput(std::string("pair spec: ranks.") + field + " must be an integer");
    }
  }
  p.rank_g = ranks["g"].get<int>();
  p.rank_h = ranks["h"].get<int>();
  p.rank_kg = ranks["kg"].get<int>();
  p.rank_kh = ranks["kh"].get<int>();

  p.map_h_in_g = map_from_json(j["map_h_in_g"], "map_h_in_g", p.rank_h);
  p.map_kh_in_h = map_from_json(j["map_kh_in_h"], "map_kh_in_h", p.rank_kh);

  if (j.contains("flags")) {
    const auto& flags = j["flags"];
    if (!flags.is_object()) throw InvalidInput("pair spec: field \"flags\" must be an object");
    if (flags.contains("complexification")) {
      if (!flags["complexification"].is_boolean()) {
        throw InvalidInput("pair spec: flags.complexification must be a boolean");
      }
      p.complexification = flags["complexification"].get<bool>();
    }
  }
  if (j.contains("notes")) {
    if (!j["notes"].is_string()) throw InvalidInput("pair spec: field \"notes\" must be a string");
    p.notes = j["notes"].get<std::string>();
  }
  p.validate();
  return p;
}

std::string serialize_pair(const PairSpec& p) {
  p.validate();
  ordered_json j;
  j["id"] = p.id;
  auto group_json = [](const GroupSpec& g) {
    ordered_json arr = ordered_json::array();
    for (const auto& f : g.factors) {
      arr.push_back({{"family", family_to_string(f.family)}, {"n", f.n}});
    }
    return arr;
  };
  j["g_u"] = group_json(p.g_u);
  j["h_u"] = group_json(p.h_u);
  j["map_h_in_g"] = p.map_h_in_g.rows;
  j["map_kh_in_h"] = p.map_kh_in_h.rows;
  j["ranks"] = {{"g", p.rank_g}, {"h", p.rank_h}, {"kg", p.rank_kg}, {"kh", p.rank_kh}};
  j["flags"] = {{"complexification", p.complexification}};
  j["notes"] = p.notes;
  return j.dump(2) + "\n";
}

namespace {

// Minimal recursive-descent parser for witness expressions.
struct ExprParser {
  const std::string& s;
  size_t i = 0;
  const GroupSpec& h;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw InvalidInput("witness expression \"" + s + "\": " + msg);
  }

  long long integer() {
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected a number at position " + std::to_string(start));
    return std::stoll(s.substr(start, i - start));
  }

  Rat rational() {
    long long num = integer();
    if (eat('/')) {
      long long den = integer();
      if (den == 0) fail("zero denominator");
      Rat r(static_cast<long>(num), static_cast<long>(den));
      r.canonicalize();
      return r;
    }
    return rat_of(num);
  }

  // Resolves a generator name like "c2@1", "p1", "e@3" against h.
  Polynomial generator(const std::string& base, int factor_1based) {
    if (factor_1based < 1 || factor_1based > static_cast<int>(h.factors.size())) {
      fail("factor index " + std::to_string(factor_1based) + " out of range");
    }
    const ClassicalFactor& f = h.factors[factor_1based - 1];
    int offset = 0;
    for (int k = 0; k < factor_1based - 1; ++k) offset += h.factors[k].torus_rank();

    // Reuse the canonical generator list and pick by name; the derived top
    // Pontryagin class of even SO is the square of the Euler generator.
    auto gens = invariant_generators(h);
    std::string want = h.factors.size() > 1 ? base + "@" + std::to_string(factor_1based) : base;
    for (const auto& g : gens) {
      if (g.name == want) return g.torus_poly;
    }
    if (f.family == Family::SOeven && base == "p" + std::to_string(f.torus_rank())) {
      for (const auto& g : gens) {
        if (g.factor == factor_1based - 1 && g.base == "e") return g.torus_poly.pow(2);
      }
    }
    fail("unknown generator \"" + base + "\" for factor " + std::to_string(factor_1based) +
         " (" + f.name() + ")");
  }

  Polynomial atom() {
    skip();
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      return Polynomial::constant(h.torus_rank(), rational());
    }
    size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])))) ++i;
    if (i == start) fail("expected a generator name at position " + std::to_string(start));
    std::string base = s.substr(start, i - start);
    int factor = 1;
    if (eat('@')) {
      factor = static_cast<int>(integer());
    } else if (h.factors.size() > 1) {
      fail("generator \"" + base + "\" needs a factor tag @k in a product group");
    }
    Polynomial p = generator(base, factor);
    if (eat('^')) {
      long long k = integer();
      if (k < 0) fail("negative exponent");
      p = p.pow(static_cast<uint32_t>(k));
    }
    return p;
  }

  Polynomial term() {
    Polynomial p = atom();
    while (eat('*')) p = p * atom();
    return p;
  }

  Polynomial expr() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Polynomial p = term();
    if (neg) p = -p;
    while (true) {
      skip();
      if (eat('+')) {
        p += term();
      } else if (eat('-')) {
        p -= term();
      } else {
        break;
      }
    }
    skip();
    if (i != s.size()) fail("trailing input at position " + std::to_string(i));
    return p;
  }
};

}  // namespace

Polynomial resolve_witness_expression(const GroupSpec& h, const std::string& expr) {
  h.validate();
  ExprParser parser{expr, 0, h};
  return parser.expr();
}

KernelElement witness_from_expression(const GroupSpec& h, const std::string& expr) {
  Polynomial p = resolve_witness_expression(h, expr);
  if (p.is_zero()) throw InvalidInput("witness expression resolves to zero");
  int d = p.degree();
  if (!p.is_homogeneous_of(d)) {
    throw InvalidInput("witness expression must be homogeneous");
  }
  auto gens = invariant_generators(h);
  auto mons = generator_monomials(h, d);
  std::vector<GradedVector> basis;
  basis.reserve(mons.size());
  for (const auto& m : mons) {
    basis.push_back(to_graded_vector(expand_generator_monomial(gens, m), d));
  }
  auto coeffs = express_in_basis(basis, to_graded_vector(p, d));
  if (!coeffs) {
    throw InvalidInput("witness expression is not an invariant-ring element of its degree");
  }
  KernelElement e{d, std::move(*coeffs), ""};
  e.pretty = render_kernel_element(h, d, e.coeffs);
  return e;
}

}  // namespace ckforms
