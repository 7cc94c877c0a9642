// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#include "nilhecke.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "divdiff.hpp"
#include "errors.hpp"

namespace exnil {

namespace {

void check_same(int a, int b) {
  if (a != b) throw StructuralError("nilHecke elements over different variable counts");
}

std::string word_text(const Perm& w) {
  std::ostringstream os;
  os << "d[";
  bool first = true;
  for (int i : w.reduced_word()) {
    if (!first) os << ' ';
    os << i;
    first = false;
  }
  os << ']';
  return os.str();
}

NHElem single_perm(const Perm& w, const SuperPoly& f) {
  std::map<Perm, SuperPoly> parts;
  parts.emplace(w, f);
  return NHElem::from_perm_map(f.nvars(), parts);
}

}  // namespace

bool NHKeyLess::operator()(const NHKey& a, const NHKey& b) const {
  const int la = a.w.length();
  const int lb = b.w.length();
  if (la != lb) return la < lb;
  if (a.w != b.w) return a.w < b.w;
  if (a.mask != b.mask) return wedge_mask_less(a.mask, b.mask);
  return DegLexGreater{}(a.x, b.x);
}

NHElem::NHElem(int nvars) : n_(nvars) {
  if (nvars < 1 || nvars > kMaxVars) throw StructuralError("nilHecke rank out of range");
}

NHElem NHElem::one(int nvars) { return from_poly(Poly::constant(nvars, 1)); }

NHElem NHElem::x(int nvars, int i) { return from_poly(Poly::variable(nvars, i)); }

NHElem NHElem::omega(int nvars, int i) { return from_superpoly(SuperPoly::generator(nvars, i)); }

NHElem NHElem::dd(int nvars, int i) {
  if (i < 1 || i >= nvars) throw StructuralError("d" + std::to_string(i) + " outside NH_" + std::to_string(nvars));
  return dd_perm(Perm::simple(nvars, i));
}

NHElem NHElem::dd_perm(const Perm& w) { return single_perm(w, SuperPoly::scalar(Poly::constant(w.size(), 1))); }

NHElem NHElem::from_superpoly(const SuperPoly& v) { return single_perm(Perm(v.nvars()), v); }

NHElem NHElem::term(const NHKey& key, const Rat& c) {
  NHElem e(key.x.nvars());
  e.add_term(key, c);
  return e;
}

void NHElem::add_term(const NHKey& key, const Rat& c) {
  if (key.x.nvars() != n_ || key.w.size() != n_) throw StructuralError("PBW key size differs from algebra rank");
  if (n_ < 32 && (key.mask >> n_) != 0) throw StructuralError("wedge mask beyond n generators");
  if (exnil::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (exnil::is_zero(it->second)) terms_.erase(it);
  }
}

std::map<Perm, SuperPoly> NHElem::by_perm() const {
  std::map<Perm, SuperPoly> out;
  for (const auto& [k, c] : terms_) {
    auto it = out.try_emplace(k.w, SuperPoly(n_)).first;
    it->second.add(k.mask, Poly::term(k.x, c));
  }
  return out;
}

NHElem NHElem::from_perm_map(int nvars, const std::map<Perm, SuperPoly>& parts) {
  NHElem e(nvars);
  for (const auto& [w, f] : parts) {
    if (f.nvars() != nvars) throw StructuralError("coefficient size differs from algebra rank");
    for (const auto& [m, p] : f.components())
      for (const auto& [mono, c] : p.terms()) e.add_term(NHKey{mono, m, w}, c);
  }
  return e;
}

NHElem& NHElem::operator+=(const NHElem& o) {
  check_same(n_, o.n_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

NHElem& NHElem::operator-=(const NHElem& o) {
  check_same(n_, o.n_);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

NHElem NHElem::operator-() const {
  NHElem out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

NHElem operator*(const Rat& c, const NHElem& e) {
  NHElem out(e.n_);
  for (const auto& [k, v] : e.terms_) out.add_term(k, c * v);
  return out;
}

bool NHElem::operator==(const NHElem& o) const {
  if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b) {
    if (a->first.w != b->first.w || a->first.mask != b->first.mask || !(a->first.x == b->first.x)) return false;
    if (a->second != b->second) return false;
  }
  return true;
}

std::pair<SuperPoly, SuperPoly> commute_past(int i, const SuperPoly& g) {
  return {ext_dd(i, g), act_si(i, g)};
}

NHElem nh_mul(const NHElem& a, const NHElem& b) {
  check_same(a.nvars(), b.nvars());
  const int n = a.nvars();
  const auto left = a.by_perm();
  const auto right = b.by_perm();
  NHElem out(n);
  for (const auto& [u, f] : left) {
    const std::vector<int> word = u.reduced_word();
    for (const auto& [v, g] : right) {
      // state holds d_{suffix} g = sum_w h_w d_w; the rightmost letter is pushed first.
      std::map<Perm, SuperPoly> state;
      state.emplace(Perm(n), g);
      for (auto it = word.rbegin(); it != word.rend() && !state.empty(); ++it) {
        const int i = *it;
        const Perm si = Perm::simple(n, i);
        std::map<Perm, SuperPoly> next;
        for (const auto& [w, h] : state) {
          auto [lo, hi] = commute_past(i, h);
          if (!lo.is_zero()) next.try_emplace(w, SuperPoly(n)).first->second += lo;
          const Perm sw = si * w;
          if (!hi.is_zero() && sw.length() == w.length() + 1) next.try_emplace(sw, SuperPoly(n)).first->second += hi;
        }
        for (auto nt = next.begin(); nt != next.end();) nt = nt->second.is_zero() ? next.erase(nt) : std::next(nt);
        state = std::move(next);
      }
      for (const auto& [w, h] : state) {
        const Perm wv = w * v;
        if (wv.length() != w.length() + v.length()) continue;
        out += single_perm(wv, f * h);
      }
    }
  }
  return out;
}

SuperPoly act(const NHElem& e, const SuperPoly& v) {
  check_same(e.nvars(), v.nvars());
  SuperPoly out(v.nvars());
  for (const auto& [w, f] : e.by_perm()) out += f * ext_dd_perm(w, v);
  return out;
}

int paper_degree(const NHKey& key) {
  int d = 2 * key.x.degree() - 2 * key.w.length();
  for (int k : mask_indices(key.mask)) d -= 2 * k + 2;
  return d;
}

std::vector<int> degree(const NHElem& e) {
  std::vector<int> out;
  for (const auto& [k, c] : e.terms()) out.push_back(paper_degree(k));
  std::sort(out.begin(), out.end());
  return out;
}

int parity(const NHElem& e) {
  int p = -2;
  for (const auto& [k, c] : e.terms()) {
    const int q = std::popcount(k.mask) % 2;
    if (p == -2) {
      p = q;
    } else if (p != q) {
      return -1;
    }
  }
  return p == -2 ? 0 : p;
}

void GradedDims::add(int degree, long dim) {
  if (dim == 0) return;
  auto [it, inserted] = entries.try_emplace(degree, dim);
  if (!inserted) {
    it->second += dim;
    if (it->second == 0) entries.erase(it);
  }
}

long GradedDims::total() const {
  long t = 0;
  for (const auto& [d, v] : entries) t += v;
  return t;
}

bool GradedDims::operator==(const GradedDims& o) const { return entries == o.entries; }

GradedDims GradedDims::operator*(const GradedDims& o) const {
  GradedDims out;
  for (const auto& [da, va] : entries)
    for (const auto& [db, vb] : o.entries) out.add(da + db, va * vb);
  return out;
}

std::string to_string(const GradedDims& g) {
  if (g.entries.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, v] : g.entries) {
    if (!first) os << " + ";
    first = false;
    if (d == 0) {
      os << v;
      continue;
    }
    if (v != 1) os << v << '*';
    os << 'q';
    if (d != 1) os << '^' << d;
  }
  return os.str();
}

nlohmann::json to_json(const GradedDims& g) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [d, v] : g.entries) arr.push_back({{"degree", d}, {"dim", v}});
  return arr;
}

GradedDims quantum_factorial_sq(int n) {
  GradedDims out;
  out.add(0, 1);
  for (int k = 1; k <= n; ++k) {
    GradedDims f;
    for (int t = 0; t < k; ++t) f.add(2 * t, 1);
    out = out * f;
  }
  return out;
}

GradedDims column_shifts(int n) {
  GradedDims out;
  const int top = Perm::longest(n).length();
  for (const Perm& w : all_perms(n)) out.add(2 * (top - w.length()), 1);
  return out;
}

std::vector<std::vector<int>> sq_index_set(int n) {
  if (n < 1) throw StructuralError("Sq(n) needs n >= 1");
  std::vector<std::vector<int>> out{{}};
  for (int v = 1; v < n; ++v) {
    std::vector<std::vector<int>> next;
    for (const auto& l : out) {
      for (int t = 0; t <= v; ++t) {
        auto m = l;
        m.push_back(t);
        next.push_back(std::move(m));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<int> l_hat(const std::vector<int>& l) {
  std::vector<int> out{0};
  for (size_t v = 1; v <= l.size(); ++v) out.push_back(static_cast<int>(v) - l[v - 1]);
  return out;
}

Poly e_l(int n, const std::vector<int>& l) {
  if (static_cast<int>(l.size()) != n - 1) throw StructuralError("index l must have n-1 entries");
  Poly out = Poly::constant(n, 1);
  for (int v = 1; v < n; ++v) {
    const int lv = l[static_cast<size_t>(v - 1)];
    if (lv < 0 || lv > v) throw StructuralError("index l outside Sq(n)");
    out *= elementary(n, lv, {1, v});
  }
  return out;
}

NHElem sigma_elem(int n, const std::vector<int>& l) {
  return single_perm(Perm::longest(n), SuperPoly::scalar(e_l(n, l)));
}

NHElem lambda_elem(int n, const std::vector<int>& l) {
  if (static_cast<int>(l.size()) != n - 1) throw StructuralError("index l must have n-1 entries");
  const std::vector<int> hat = l_hat(l);
  int sum = 0;
  for (int h : hat) sum += h;
  const NHElem left = single_perm(Perm::longest(n), SuperPoly::scalar(x_delta(n)));
  const NHElem right = NHElem::from_poly(Poly::term(Monomial::from_exponents(hat), sum % 2 ? -1 : 1));
  return nh_mul(left, right);
}

std::vector<NHElem> idempotents(int n, int bound) {
  if (n > bound) {
    throw CapExceeded("idempotents capped at n <= " + std::to_string(bound) + "; raise the bound explicitly");
  }
  std::vector<NHElem> out;
  for (const auto& l : sq_index_set(n)) out.push_back(nh_mul(sigma_elem(n, l), lambda_elem(n, l)));
  return out;
}

NHMatrix matrix_iso(const NHElem& e) {
  const int n = e.nvars();
  const std::vector<Perm> perms = all_perms(n);
  const Perm w0 = Perm::longest(n);
  std::vector<SuperPoly> dual;
  for (const Perm& u : perms) dual.push_back(SuperPoly::scalar(dual_schubert(u)));
  NHMatrix m(perms.size(), std::vector<SuperPoly>(perms.size(), SuperPoly(n)));
  for (size_t c = 0; c < perms.size(); ++c) {
    const SuperPoly image = act(e, SuperPoly::scalar(schubert(perms[c])));
    for (size_t r = 0; r < perms.size(); ++r) m[r][c] = ext_dd_perm(w0, dual[r] * image);
  }
  return m;
}

NHElem matrix_iso_inv(const NHMatrix& m, int n) {
  const std::vector<Perm> perms = all_perms(n);
  const size_t size = perms.size();
  if (m.size() != size) throw StructuralError("matrix size differs from n!");
  const Perm w0 = Perm::longest(n);
  NHElem out(n);
  for (size_t c = 0; c < size; ++c) {
    SuperPoly column(n);
    for (size_t r = 0; r < size; ++r) {
      if (m[r].size() != size) throw StructuralError("matrix is not square");
      column += SuperPoly::scalar(schubert(perms[r])) * m[r][c];
    }
    if (column.is_zero()) continue;
    out += nh_mul(single_perm(w0, column), NHElem::from_poly(dual_schubert(perms[c])));
  }
  return out;
}

NHMatrix matrix_product(const NHMatrix& a, const NHMatrix& b) {
  const size_t size = a.size();
  if (b.size() != size) throw StructuralError("matrix sizes differ");
  const int n = size ? (a[0].empty() ? 0 : a[0][0].nvars()) : 0;
  NHMatrix out(size, std::vector<SuperPoly>(size, SuperPoly(n)));
  for (size_t r = 0; r < size; ++r)
    for (size_t k = 0; k < size; ++k) {
      if (a[r][k].is_zero()) continue;
      for (size_t c = 0; c < size; ++c)
        if (!b[k][c].is_zero()) out[r][c] += a[r][k] * b[k][c];
    }
  return out;
}

NHMatrix identity_matrix(int n) {
  const size_t size = all_perms(n).size();
  NHMatrix out(size, std::vector<SuperPoly>(size, SuperPoly(n)));
  for (size_t i = 0; i < size; ++i) out[i][i] = SuperPoly::scalar(Poly::constant(n, 1));
  return out;
}

bool center_check(const NHElem& z) {
  const int n = z.nvars();
  const std::vector<int> degs = degree(z);
  if (!degs.empty() && degs.front() != degs.back()) throw PreconditionError("center_check needs a homogeneous element");
  const int p = parity(z);
  if (p < 0) throw PreconditionError("center_check needs an element of pure parity");
  auto commutes = [&](const NHElem& g, bool odd) {
    const NHElem zg = nh_mul(z, g);
    const NHElem gz = nh_mul(g, z);
    return (odd && p == 1) ? zg == -gz : zg == gz;
  };
  for (int i = 1; i <= n; ++i) {
    if (!commutes(NHElem::x(n, i), false)) return false;
    if (!commutes(NHElem::omega(n, i), true)) return false;
    if (i < n && !commutes(NHElem::dd(n, i), false)) return false;
  }
  return true;
}

std::string to_string(const NHElem& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : e.terms()) {
    std::vector<std::string> factors;
    if (k.x.degree() > 0) factors.push_back(to_string(k.x));
    if (k.mask) factors.push_back(wedge_string(k.mask, "w"));
    if (!k.w.is_identity()) factors.push_back(word_text(k.w));
    const bool neg = sgn(c) < 0;
    const Rat mag = abs(c);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (factors.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    for (size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
  }
  return os.str();
}

nlohmann::json to_json(const NHElem& e) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : e.terms()) {
    const nlohmann::json coeff = to_json(Poly::term(k.x, c));
    arr.push_back({{"exponents", k.x.exponents()},
                   {"wedge", mask_indices(k.mask)},
                   {"word", k.w.reduced_word()},
                   {"num", coeff[0]["num"]},
                   {"den", coeff[0]["den"]}});
  }
  return arr;
}

NHElem nh_from_json(const nlohmann::json& j, int nvars) {
  if (!j.is_array()) throw ParseError("nilHecke JSON must be an array of terms");
  NHElem out(nvars);
  for (const auto& t : j) {
    if (!t.contains("word") || !t.contains("wedge")) throw ParseError("nilHecke JSON term needs word and wedge");
    const auto word = t.at("word").get<std::vector<int>>();
    for (int i : word)
      if (i < 1 || i >= nvars) throw StructuralError("generator index in word outside S_n");
    const Perm w = Perm::from_word(nvars, word);
    // A non-reduced word is the zero operator.
    if (w.length() != static_cast<int>(word.size())) continue;
    nlohmann::json mono = nlohmann::json::array();
    mono.push_back({{"exponents", t.at("exponents")}, {"num", t.at("num")}, {"den", t.at("den")}});
    const Poly f = poly_from_json(mono, nvars);
    for (const auto& [m, c] : f.terms()) out.add_term(NHKey{m, mask_of(t.at("wedge").get<std::vector<int>>()), w}, c);
  }
  return out;
}

}  // namespace exnil
