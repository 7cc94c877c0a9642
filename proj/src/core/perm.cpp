// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 The exnil Authors

#include "perm.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace exnil {

namespace {

constexpr int kMaxPermSize = 16;

void check_size(int n) {
  if (n < 1 || n > kMaxPermSize) {
    throw StructuralError("permutation size " + std::to_string(n) + " out of range 1.." +
                          std::to_string(kMaxPermSize));
  }
}

std::vector<int> parse_ints(std::string_view text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back(std::stoi(cur));
      cur.clear();
    }
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    } else if (c == ',' || c == ' ' || c == '\t' || c == '[' || c == ']') {
      flush();
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in integer list");
    }
  }
  flush();
  return out;
}

}  // namespace

Perm::Perm(int n) {
  check_size(n);
  img_.resize(static_cast<size_t>(n));
  std::iota(img_.begin(), img_.end(), 0);
}

Perm Perm::from_one_line(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  check_size(n);
  std::vector<bool> seen(images.size(), false);
  Perm w;
  w.img_.reserve(images.size());
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)]) {
      throw StructuralError("one-line notation is not a bijection on 1.." + std::to_string(n));
    }
    seen[static_cast<size_t>(v - 1)] = true;
    w.img_.push_back(static_cast<uint8_t>(v - 1));
  }
  return w;
}

Perm Perm::from_word(int n, const std::vector<int>& word) {
  Perm w(n);
  for (int i : word) {
    if (i < 1 || i >= n) {
      throw StructuralError("simple reflection s" + std::to_string(i) + " not in S_" +
                            std::to_string(n));
    }
    // w <- w * s_i: swap the images at positions i, i+1.
    std::swap(w.img_[static_cast<size_t>(i - 1)], w.img_[static_cast<size_t>(i)]);
  }
  return w;
}

Perm Perm::simple(int n, int i) { return from_word(n, {i}); }

Perm Perm::longest(int n) {
  Perm w(n);
  std::reverse(w.img_.begin(), w.img_.end());
  return w;
}

Perm Perm::operator*(const Perm& v) const {
  if (size() != v.size()) throw StructuralError("composing permutations of different sizes");
  Perm out;
  out.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) out.img_[i] = img_[v.img_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) out.img_[img_[i]] = static_cast<uint8_t>(i);
  return out;
}

int Perm::length() const {
  int inv = 0;
  for (size_t i = 0; i < img_.size(); ++i)
    for (size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

std::vector<int> Perm::descents() const {
  std::vector<int> out;
  for (size_t i = 0; i + 1 < img_.size(); ++i)
    if (img_[i] > img_[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

bool Perm::is_grassmannian() const { return descents().size() == 1; }

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::vector<int> Perm::reduced_word() const {
  std::vector<int> word;
  Perm cur = *this;
  const int n = size();
  while (!cur.is_identity()) {
    // Smallest left descent i: cur^{-1}(i) > cur^{-1}(i+1).
    Perm inv = cur.inverse();
    int i = 1;
    while (inv(i) < inv(i + 1)) ++i;
    word.push_back(i);
    cur = Perm::simple(n, i) * cur;
  }
  return word;
}

std::vector<int> Perm::lehmer_code() const {
  std::vector<int> code(img_.size(), 0);
  for (size_t i = 0; i < img_.size(); ++i)
    for (size_t j = i + 1; j < img_.size(); ++j)
      if (img_[j] < img_[i]) ++code[i];
  return code;
}

std::vector<int> Perm::one_line() const {
  std::vector<int> out;
  out.reserve(img_.size());
  for (uint8_t v : img_) out.push_back(v + 1);
  return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw PreconditionError("partition parts must be non-negative and weakly decreasing");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts_[static_cast<size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  const int top = parts_.empty() ? 0 : parts_.front();
  for (int j = 1; j <= top; ++j) {
    int cnt = 0;
    for (int p : parts_)
      if (p >= j) ++cnt;
    c.push_back(cnt);
  }
  return Partition(std::move(c));
}

BinSeq::BinSeq(int n, uint32_t mask) : n_(n), mask_(mask) {
  if (n < 0 || n > 31) throw StructuralError("binary sequence length out of range");
  if (n < 32 && (mask >> n) != 0) throw StructuralError("mask has bits beyond length");
}

BinSeq BinSeq::from_bits(const std::vector<int>& bits) {
  uint32_t m = 0;
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) throw ParseError("binary sequence entries must be 0 or 1");
    if (bits[i]) m |= 1U << i;
  }
  return BinSeq(static_cast<int>(bits.size()), m);
}

BinSeq BinSeq::tau(int n, int k) {
  if (k < 0 || k > n) throw StructuralError("weight out of range");
  uint32_t m = 0;
  for (int i = n - k; i < n; ++i) m |= 1U << i;
  return BinSeq(n, m);
}

BinSeq BinSeq::lambda(int n, int k) {
  if (k < 0 || k > n) throw StructuralError("weight out of range");
  return BinSeq(n, k == 0 ? 0U : ((1U << k) - 1U));
}

int BinSeq::weight() const { return std::popcount(mask_); }

std::vector<int> BinSeq::ones() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (bit(i)) out.push_back(i);
  return out;
}

std::vector<int> BinSeq::zeros() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (!bit(i)) out.push_back(i);
  return out;
}

BinSeq BinSeq::permuted(const Perm& w) const {
  if (w.size() != n_) throw StructuralError("permutation size differs from sequence length");
  uint32_t m = 0;
  for (int i = 1; i <= n_; ++i)
    if (bit(i)) m |= 1U << (w(i) - 1);
  return BinSeq(n_, m);
}

Partition partition_of(const Perm& w) {
  std::vector<int> code = w.lehmer_code();
  std::sort(code.begin(), code.end(), std::greater<>());
  return Partition(std::move(code));
}

std::vector<Perm> all_perms(int n) {
  check_size(n);
  std::vector<int> line(static_cast<size_t>(n));
  std::iota(line.begin(), line.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_one_line(line));
  } while (std::next_permutation(line.begin(), line.end()));
  std::stable_sort(out.begin(), out.end(),
                   [](const Perm& a, const Perm& b) { return a.length() < b.length(); });
  return out;
}

std::vector<BinSeq> binseqs_of_weight(int n, int k) {
  std::vector<BinSeq> out;
  for (uint32_t m = 0; m < (1U << n); ++m)
    if (std::popcount(m) == k) out.emplace_back(n, m);
  return out;
}

Perm sigma_of(const BinSeq& alpha) {
  const int n = alpha.size();
  const std::vector<int> v = alpha.zeros();
  const std::vector<int> u = alpha.ones();
  std::vector<int> line;
  line.reserve(static_cast<size_t>(n));
  line.insert(line.end(), v.begin(), v.end());
  line.insert(line.end(), u.begin(), u.end());
  return Perm::from_one_line(line);
}

Partition lambda_of(const BinSeq& alpha) { return partition_of(sigma_of(alpha)); }

bool in_I(const BinSeq& alpha, int k) {
  return k >= 1 && k < alpha.size() && alpha.bit(k) == 1 && alpha.bit(k + 1) == 0;
}

bool in_J(const BinSeq& alpha, int k) {
  return k >= 1 && k < alpha.size() && alpha.bit(k) == 0 && alpha.bit(k + 1) == 1;
}

std::vector<int> descent_set(const BinSeq& alpha) {
  std::vector<int> out;
  for (int k = 1; k < alpha.size(); ++k)
    if (in_J(alpha, k)) out.push_back(k);
  return out;
}

std::vector<BinSeq> covers(const BinSeq& alpha) {
  std::vector<BinSeq> out;
  for (int r = 1; r < alpha.size(); ++r) {
    if (in_I(alpha, r)) {
      uint32_t m = alpha.mask();
      m &= ~(1U << (r - 1));
      m |= 1U << r;
      out.emplace_back(alpha.size(), m);
    }
  }
  return out;
}

bool prec(const BinSeq& alpha, const BinSeq& beta) {
  if (alpha.size() != beta.size() || alpha.weight() != beta.weight()) {
    throw StructuralError("prec compares sequences of equal length and weight");
  }
  std::set<BinSeq> seen;
  std::vector<BinSeq> frontier = covers(alpha);
  while (!frontier.empty()) {
    BinSeq cur = frontier.back();
    frontier.pop_back();
    if (cur == beta) return true;
    if (!seen.insert(cur).second) continue;
    for (const BinSeq& next : covers(cur)) frontier.push_back(next);
  }
  return false;
}

Perm coxeter(int n, int j, int k) {
  if (j < 1 || k > n || j > k) {
    throw StructuralError("coxeter element c[" + std::to_string(j) + "," + std::to_string(k) +
                          "] outside 1 <= j <= k <= n");
  }
  std::vector<int> word;
  for (int i = j; i < k; ++i) word.push_back(i);
  return Perm::from_word(n, word);
}

Perm coxeter_tail(int n, int j) { return coxeter(n, j, n); }

std::vector<int> coxeter_k_word(int n, int k) {
  if (k < 0 || k > n) throw StructuralError("coxeter_k weight out of range");
  std::vector<int> word;
  for (int m = k; m >= 1; --m)
    for (int i = m; i < n - k + m; ++i) word.push_back(i);
  return word;
}

Perm coxeter_k(int n, int k) { return Perm::from_word(n, coxeter_k_word(n, k)); }

std::string to_string(const Perm& w) {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= w.size(); ++i) os << (i > 1 ? "," : "") << w(i);
  os << ']';
  return os.str();
}

std::string word_string(const std::vector<int>& word) {
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << 's' << word[i];
  return os.str();
}

std::string to_string(const BinSeq& alpha) {
  std::string s;
  for (int i = 1; i <= alpha.size(); ++i) s.push_back(alpha.bit(i) ? '1' : '0');
  return s;
}

std::string to_string(const Partition& lambda) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < lambda.length(); ++i) os << (i ? "," : "") << lambda.parts()[static_cast<size_t>(i)];
  os << ')';
  return os.str();
}

Perm parse_perm(int n, std::string_view text) {
  const size_t first = text.find_first_not_of(" \t");
  const size_t last = text.find_last_not_of(" \t");
  const std::string t = first == std::string_view::npos
                            ? std::string()
                            : std::string(text.substr(first, last - first + 1));
  if (t.empty() || t == "id" || t == "e") return Perm(n);
  if (t.find('s') != std::string::npos) {
    std::vector<int> word;
    std::string cur;
    bool in_letter = false;
    for (char c : t) {
      if (c == 's') {
        if (in_letter && cur.empty()) throw ParseError("empty simple reflection in word");
        if (!cur.empty()) word.push_back(std::stoi(cur));
        cur.clear();
        in_letter = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        if (!in_letter) throw ParseError("word letters must be written s<i>");
        cur.push_back(c);
      } else if (c == ' ' || c == '*' || c == ',') {
        if (!cur.empty()) word.push_back(std::stoi(cur));
        cur.clear();
        in_letter = false;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "' in permutation word");
      }
    }
    if (!cur.empty()) word.push_back(std::stoi(cur));
    return Perm::from_word(n, word);
  }
  std::vector<int> images = parse_ints(t);
  if (static_cast<int>(images.size()) != n) {
    throw StructuralError("one-line notation has " + std::to_string(images.size()) +
                          " entries, expected " + std::to_string(n));
  }
  return Perm::from_one_line(images);
}

BinSeq parse_binseq(std::string_view text) {
  std::vector<int> bits;
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits.push_back(c - '0');
    } else if (c != ' ' && c != ',' && c != '(' && c != ')') {
      throw ParseError(std::string("unexpected character '") + c + "' in binary sequence");
    }
  }
  return BinSeq::from_bits(bits);
}

Partition parse_partition(std::string_view text) {
  std::string t;
  for (char c : text)
    if (c != '(' && c != ')') t.push_back(c);
  return Partition(parse_ints(t));
}

}  // namespace exnil
