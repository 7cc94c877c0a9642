// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#include "poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "errors.hpp"

namespace exnil {

namespace {

void check_nvars(int n) {
  if (n < 0 || n > kMaxVars) {
    throw StructuralError("variable count " + std::to_string(n) + " outside 0.." +
                          std::to_string(kMaxVars));
  }
}

void check_range(int nvars, VarRange r) {
  if (r.count() > 0 && (r.lo < 1 || r.hi > nvars)) {
    throw StructuralError("variable window x" + std::to_string(r.lo) + "..x" + std::to_string(r.hi) +
                          " outside 1.." + std::to_string(nvars));
  }
}

// Visits every degree-k monomial in vars: squarefree ones here, all of them below.
template <class Visit>
void enumerate_subsets(const std::vector<int>& vars, int k, size_t start, Monomial& m, Visit&& visit) {
  if (k == 0) {
    visit(m);
    return;
  }
  for (size_t t = start; t + static_cast<size_t>(k) <= vars.size(); ++t) {
    m.set(vars[t], m[vars[t]] + 1);
    enumerate_subsets(vars, k - 1, t + 1, m, visit);
    m.set(vars[t], m[vars[t]] - 1);
  }
}

template <class Visit>
void enumerate_multisets(const std::vector<int>& vars, int k, size_t start, Monomial& m, Visit&& visit) {
  if (k == 0) {
    visit(m);
    return;
  }
  for (size_t t = start; t < vars.size(); ++t) {
    m.set(vars[t], m[vars[t]] + 1);
    enumerate_multisets(vars, k - 1, t, m, visit);
    m.set(vars[t], m[vars[t]] - 1);
  }
}

std::vector<int> window(VarRange r) {
  std::vector<int> v;
  for (int i = r.lo; i <= r.hi; ++i) v.push_back(i);
  return v;
}

nlohmann::json int_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw ParseError("expected integer or integer string in polynomial JSON");
}

}  // namespace

Monomial::Monomial(int nvars) {
  check_nvars(nvars);
  n_ = static_cast<uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<int> exps) : Monomial(static_cast<int>(exps.size())) {
  int i = 1;
  for (int e : exps) set(i++, e);
}

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
  Monomial m(static_cast<int>(exps.size()));
  for (size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i) + 1, exps[i]);
  return m;
}

void Monomial::set(int i, int e) {
  if (i < 1 || i > n_) throw StructuralError("exponent index out of range");
  if (e < 0 || e > std::numeric_limits<uint16_t>::max()) {
    throw CapExceeded("exponent " + std::to_string(e) + " out of representable range");
  }
  e_[static_cast<size_t>(i - 1)] = static_cast<uint16_t>(e);
}

int Monomial::degree() const {
  int d = 0;
  for (int i = 0; i < n_; ++i) d += e_[static_cast<size_t>(i)];
  return d;
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(e_.begin(), e_.begin() + n_);
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (n_ != o.n_) throw StructuralError("multiplying monomials with different variable counts");
  Monomial r(n_);
  for (int i = 1; i <= n_; ++i) r.set(i, (*this)[i] + o[i]);
  return r;
}

bool DegLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da > db;
  for (int i = 1; i <= a.nvars(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

Poly::Poly(int nvars) : n_(nvars) { check_nvars(nvars); }

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  Monomial m(nvars);
  m.set(i, 1);
  p.add_term(m, 1);
  return p;
}

Poly Poly::term(const Monomial& m, const Rat& c) {
  Poly p(m.nvars());
  p.add_term(m, c);
  return p;
}

Rat Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<Rat> Poly::as_constant() const {
  if (terms_.empty()) return Rat(0);
  if (terms_.size() == 1 && terms_.begin()->first.degree() == 0) return terms_.begin()->second;
  return std::nullopt;
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

int Poly::low_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

bool Poly::is_homogeneous() const { return degree() == low_degree(); }

Poly Poly::homogeneous_part(int d) const {
  Poly out(n_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) out.terms_.emplace(m, c);
  return out;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (m.nvars() != n_) throw StructuralError("monomial variable count differs from polynomial");
  if (exnil::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (exnil::is_zero(it->second)) terms_.erase(it);
  }
}

void Poly::check_same(const Poly& o) const {
  if (n_ != o.n_) {
    throw StructuralError("polynomials over " + std::to_string(n_) + " and " +
                          std::to_string(o.n_) + " variables");
  }
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly out(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& c) {
  if (exnil::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw PreconditionError("negative polynomial power");
  Poly out = constant(n_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

Poly act_perm(const Perm& w, const Poly& f) {
  if (w.size() != f.nvars()) throw StructuralError("permutation and polynomial sizes differ");
  Poly out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    Monomial r(f.nvars());
    for (int j = 1; j <= f.nvars(); ++j) r.set(w(j), m[j]);
    out.add_term(r, c);
  }
  return out;
}

Poly swap_adjacent(int i, const Poly& f) {
  if (i < 1 || i >= f.nvars()) throw StructuralError("s" + std::to_string(i) + " outside S_n");
  Poly out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    Monomial r = m;
    r.set(i, m[i + 1]);
    r.set(i + 1, m[i]);
    out.add_term(r, c);
  }
  return out;
}

Poly partial_derivative(const Poly& f, int i) {
  if (i < 1 || i > f.nvars()) throw StructuralError("derivative index out of range");
  Poly out(f.nvars());
  for (const auto& [m, c] : f.terms()) {
    if (m[i] == 0) continue;
    Monomial r = m;
    r.set(i, m[i] - 1);
    out.add_term(r, c * m[i]);
  }
  return out;
}

Poly elementary(int nvars, int k, VarRange vars) {
  if (k < 0) throw PreconditionError("elementary symmetric degree must be non-negative");
  return elementary_or_zero(nvars, k, vars);
}

Poly complete(int nvars, int k, VarRange vars) {
  if (k < 0) throw PreconditionError("complete symmetric degree must be non-negative");
  return complete_or_zero(nvars, k, vars);
}

Poly power_sum(int nvars, int k, VarRange vars) {
  if (k < 0) throw PreconditionError("power sum degree must be non-negative");
  check_range(nvars, vars);
  Poly out(nvars);
  for (int i : window(vars)) {
    Monomial m(nvars);
    m.set(i, k);
    out.add_term(m, 1);
  }
  return out;
}

Poly elementary_or_zero(int nvars, int k, VarRange vars) {
  check_range(nvars, vars);
  Poly out(nvars);
  if (k < 0 || k > vars.count()) return out;
  Monomial m(nvars);
  enumerate_subsets(window(vars), k, 0, m, [&](const Monomial& t) { out.add_term(t, 1); });
  return out;
}

Poly complete_or_zero(int nvars, int k, VarRange vars) {
  check_range(nvars, vars);
  Poly out(nvars);
  if (k < 0) return out;
  if (k == 0) return Poly::constant(nvars, 1);
  Monomial m(nvars);
  enumerate_multisets(window(vars), k, 0, m, [&](const Monomial& t) { out.add_term(t, 1); });
  return out;
}

Poly schur(int nvars, const Partition& lambda, VarRange vars) {
  const Partition conj = lambda.conjugate();
  const int size = conj.length();
  std::vector<std::vector<Poly>> m(static_cast<size_t>(size));
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j)
      m[static_cast<size_t>(i - 1)].push_back(elementary_or_zero(nvars, conj.part(i) + j - i, vars));
  return determinant(m, nvars);
}

Poly monomial_symmetric(int nvars, const Partition& mu) {
  Poly out(nvars);
  if (mu.length() > nvars) return out;
  std::vector<int> exps(static_cast<size_t>(nvars), 0);
  for (int i = 0; i < mu.length(); ++i) exps[static_cast<size_t>(i)] = mu.parts()[static_cast<size_t>(i)];
  std::sort(exps.begin(), exps.end());
  do {
    out.add_term(Monomial::from_exponents(exps), 1);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return out;
}

std::vector<std::vector<int>> padded_partitions(int d, int n) {
  std::vector<std::vector<int>> out;
  if (d < 0) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (static_cast<int>(cur.size()) == n) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 0; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  return out;
}

bool recursion_check_e(int m, int n) {
  if (m < 0 || n < 1) throw PreconditionError("recursion_check_e needs m >= 0 and n >= 1");
  const Poly lhs = elementary(n, m, {1, n});
  const Poly rhs = elementary_or_zero(n, m, {1, n - 1}) +
                   Poly::variable(n, n) * elementary_or_zero(n, m - 1, {1, n - 1});
  return lhs == rhs;
}

Poly x_delta(int n) {
  Monomial m(n);
  for (int i = 1; i < n; ++i) m.set(i, n - i);
  return Poly::term(m, 1);
}

bool is_symmetric(const Poly& f) {
  for (int i = 1; i < f.nvars(); ++i)
    if (!(swap_adjacent(i, f) == f)) return false;
  return true;
}

Poly determinant(const std::vector<std::vector<Poly>>& m, int nvars) {
  const size_t size = m.size();
  for (const auto& row : m)
    if (row.size() != size) throw StructuralError("determinant of a non-square matrix");
  if (size == 0) return Poly::constant(nvars, 1);
  if (size > 20) throw CapExceeded("determinant size above 20");
  // minor[mask] = determinant of the last popcount(mask) rows on the columns in mask.
  std::unordered_map<uint32_t, Poly> minor;
  minor.emplace(0U, Poly::constant(nvars, 1));
  for (size_t k = 1; k <= size; ++k) {
    const size_t row = size - k;
    std::unordered_map<uint32_t, Poly> next;
    for (uint32_t mask = 0; mask < (1U << size); ++mask) {
      if (static_cast<size_t>(__builtin_popcount(mask)) != k) continue;
      Poly acc(nvars);
      int sign = 1;
      for (size_t col = 0; col < size; ++col) {
        if (!(mask & (1U << col))) continue;
        const Poly& entry = m[row][col];
        const Poly& rest = minor.at(mask & ~(1U << col));
        if (!entry.is_zero() && !rest.is_zero()) {
          Poly t = entry * rest;
          if (sign < 0) t *= Rat(-1);
          acc += t;
        }
        sign = -sign;
      }
      next.emplace(mask, std::move(acc));
    }
    minor = std::move(next);
  }
  return minor.at((1U << size) - 1U);
}

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    os << 'x' << i;
    if (m[i] > 1) os << '^' << m[i];
    first = false;
  }
  return first ? std::string("1") : os.str();
}

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool neg = sgn(c) < 0;
    const Rat mag = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    if (m.degree() == 0) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << to_string(m);
    } else {
      os << mag.get_str() << '*' << to_string(m);
    }
    first = false;
  }
  return os.str();
}

nlohmann::json to_json(const Poly& f) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : f.terms()) {
    arr.push_back({{"exponents", m.exponents()},
                   {"num", int_json(c.get_num())},
                   {"den", int_json(c.get_den())}});
  }
  return arr;
}

Poly poly_from_json(const nlohmann::json& j, int nvars) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
  Poly out(nvars);
  for (const auto& t : j) {
    if (!t.contains("exponents") || !t.contains("num") || !t.contains("den")) {
      throw ParseError("polynomial JSON term needs exponents, num, den");
    }
    const auto exps = t.at("exponents").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != nvars) throw StructuralError("exponent vector length differs from n");
    const mpz_class den = int_from_json(t.at("den"));
    if (sgn(den) <= 0) throw ParseError("denominator must be positive");
    Rat c(int_from_json(t.at("num")), den);
    c.canonicalize();
    out.add_term(Monomial::from_exponents(exps), c);
  }
  return out;
}

}  // namespace exnil
