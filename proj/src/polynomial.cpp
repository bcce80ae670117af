#include "polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace ckforms {

std::string rat_to_string(const Rat& r) {
  return r.get_str();  // canonical form, "p" or "p/q" with q > 0
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) {
    throw InvalidInput("malformed rational literal: \"" + s + "\"");
  }
  r.canonicalize();
  return r;
}

int Monomial::degree() const {
  long d = std::accumulate(exp.begin(), exp.end(), 0L);
  return static_cast<int>(d);
}

bool monomial_precedes(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  // Within a degree the lexicographically larger exponent vector comes first.
  return a.exp > b.exp;
}

Polynomial::Polynomial(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw InvalidInput("polynomial variable count must be >= 0");
}

Polynomial Polynomial::zero(int num_vars) { return Polynomial(num_vars); }

Polynomial Polynomial::constant(int num_vars, const Rat& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial{std::vector<uint32_t>(num_vars, 0)}, c);
  return p;
}

Polynomial Polynomial::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) {
    throw InvalidInput("variable index out of range");
  }
  Polynomial p(num_vars);
  Monomial m{std::vector<uint32_t>(num_vars, 0)};
  m.exp[index] = 1;
  p.add_term(m, 1);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (static_cast<int>(m.exp.size()) != num_vars_) {
    throw InvalidInput("monomial width does not match polynomial variable count");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.num_vars_ != num_vars_) {
    throw InvalidInput("cannot add polynomials over different variable counts");
  }
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.num_vars_ != num_vars_) {
    throw InvalidInput("cannot subtract polynomials over different variable counts");
  }
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(num_vars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial r(num_vars_);
  if (c == 0) return r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
  return r;
}

Polynomial operator+(Polynomial a, const Polynomial& b) {
  a += b;
  return a;
}

Polynomial operator-(Polynomial a, const Polynomial& b) {
  a -= b;
  return a;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) {
    throw InvalidInput("cannot multiply polynomials over different variable counts");
  }
  Polynomial r(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (size_t i = 0; i < m.exp.size(); ++i) m.exp[i] += mb.exp[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::pow(uint32_t k) const {
  Polynomial r = Polynomial::constant(num_vars_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return r;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Polynomial::is_homogeneous_of(int d) const {
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return false;
  }
  return true;
}

namespace {

Rat rat_pow(const Rat& base, uint32_t k) {
  Rat r = 1;
  for (uint32_t i = 0; i < k; ++i) r *= base;
  return r;
}

}  // namespace

Rat Polynomial::evaluate(std::span<const Rat> point) const {
  if (static_cast<int>(point.size()) != num_vars_) {
    throw InvalidInput("evaluation point has wrong dimension");
  }
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat v = c;
    for (int i = 0; i < num_vars_; ++i) {
      if (m.exp[i] > 0) v *= rat_pow(point[i], m.exp[i]);
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::substitute_linear(
    const std::vector<std::vector<long long>>& rows) const {
  if (static_cast<int>(rows.size()) != num_vars_) {
    throw InvalidInput("substitution matrix row count does not match variable count");
  }
  size_t width = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != width) throw InvalidInput("substitution matrix is ragged");
  }
  int out_vars = static_cast<int>(width);

  // Linear form for each input variable, then per-variable power cache so a
  // polynomial with many terms does not recompute the same powers.
  std::vector<Polynomial> forms;
  forms.reserve(num_vars_);
  for (int i = 0; i < num_vars_; ++i) {
    Polynomial f(out_vars);
    for (int j = 0; j < out_vars; ++j) {
      if (rows[i][j] != 0) {
        Monomial m{std::vector<uint32_t>(out_vars, 0)};
        m.exp[j] = 1;
        f.add_term(m, rat_of(rows[i][j]));
      }
    }
    forms.push_back(std::move(f));
  }
  std::vector<std::vector<Polynomial>> powers(num_vars_);
  auto power_of = [&](int i, uint32_t k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(out_vars, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * forms[i]);
    return cache[k];
  };

  Polynomial result(out_vars);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(out_vars, c);
    for (int i = 0; i < num_vars_; ++i) {
      if (m.exp[i] > 0) t = t * power_of(i, m.exp[i]);
    }
    result += t;
  }
  return result;
}

std::string Polynomial::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  auto var = [&](int i) {
    if (i < static_cast<int>(var_names.size())) return var_names[i];
    return "x" + std::to_string(i + 1);
  };
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    std::string body;
    for (int i = 0; i < num_vars_; ++i) {
      if (m.exp[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += var(i);
      if (m.exp[i] > 1) body += "^" + std::to_string(m.exp[i]);
    }
    if (body.empty()) {
      out << rat_to_string(a);
    } else {
      if (a != 1) out << rat_to_string(a) << "*";
      out << body;
    }
    first = false;
  }
  return out.str();
}

namespace {

void enumerate_monomials(int num_vars, int d, int pos, Monomial& current,
                         std::vector<Monomial>& out) {
  if (pos == num_vars - 1) {
    current.exp[pos] = static_cast<uint32_t>(d);
    out.push_back(current);
    current.exp[pos] = 0;
    return;
  }
  for (int e = d; e >= 0; --e) {
    current.exp[pos] = static_cast<uint32_t>(e);
    enumerate_monomials(num_vars, d - e, pos + 1, current, out);
  }
  current.exp[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int num_vars, int d) {
  if (num_vars < 0 || d < 0) {
    throw InvalidInput("monomials_of_degree requires num_vars >= 0 and d >= 0");
  }
  std::vector<Monomial> out;
  if (num_vars == 0) {
    if (d == 0) out.push_back(Monomial{{}});
    return out;
  }
  Monomial current{std::vector<uint32_t>(num_vars, 0)};
  enumerate_monomials(num_vars, d, 0, current, out);
  return out;
}

Polynomial elementary_symmetric(int num_vars, int i) {
  if (num_vars < 1 || i < 1 || i > num_vars) {
    throw InvalidInput("elementary_symmetric requires 1 <= i <= num_vars");
  }
  // Walk all i-subsets of the variables.
  Polynomial p(num_vars);
  std::vector<int> idx(i);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Monomial m{std::vector<uint32_t>(num_vars, 0)};
    for (int j : idx) m.exp[j] = 1;
    p.add_term(m, 1);
    int k = i - 1;
    while (k >= 0 && idx[k] == num_vars - i + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int j = k + 1; j < i; ++j) idx[j] = idx[j - 1] + 1;
  }
  return p;
}

bool GradedVector::is_zero() const {
  for (const auto& c : coords) {
    if (c != 0) return false;
  }
  return true;
}

GradedVector to_graded_vector(const Polynomial& p, int d) {
  if (!p.is_homogeneous_of(d)) {
    throw InvalidInput("polynomial is not homogeneous of the requested degree");
  }
  std::vector<Monomial> basis = monomials_of_degree(p.num_vars(), d);
  GradedVector v{p.num_vars(), d, std::vector<Rat>(basis.size(), Rat(0))};
  // Term maps iterate in the same global order the basis is listed in, so a
  // single synchronized walk suffices.
  size_t i = 0;
  for (const auto& [m, c] : p.terms()) {
    while (i < basis.size() && !(basis[i] == m)) ++i;
    if (i == basis.size()) throw InternalError("monomial missing from graded basis");
    v.coords[i] = c;
  }
  return v;
}

Polynomial from_graded_vector(const GradedVector& v) {
  std::vector<Monomial> basis = monomials_of_degree(v.num_vars, v.degree);
  if (basis.size() != v.coords.size()) {
    throw InvalidInput("graded vector length does not match its basis");
  }
  Polynomial p(v.num_vars);
  for (size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], v.coords[i]);
  return p;
}

}  // namespace ckforms
