#include "cskit/schubert.hpp"

#include <algorithm>

namespace cskit {

namespace {

long long checked_add(long long a, long long b) {
  long long out;
  if (__builtin_add_overflow(a, b, &out)) raise(errc::overflow, "polynomial coefficient overflow");
  return out;
}

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out)) raise(errc::overflow, "polynomial coefficient overflow");
  return out;
}

}  // namespace

Polynomial::Polynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  for (long long c : coeffs_)
    if (c < 0) raise(errc::overflow, "negative coefficient");
}

long long Polynomial::eval_at_one() const {
  long long out = 0;
  for (long long c : coeffs_) out = checked_add(out, c);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (coeffs_.empty() || other.coeffs_.empty()) return Polynomial();
  std::vector<long long> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(coeffs_[k]);
  }
  return out;
}

bool is_palindromic(const Polynomial& p) {
  const auto& c = p.coeffs();
  for (size_t k = 0; k < c.size(); ++k)
    if (c[k] != c[c.size() - 1 - k]) return false;
  return true;
}

Polynomial poincare(const WeylElt& w) {
  std::vector<long long> coeffs(w.length() + 1, 0);
  for (const WeylElt& v : bruhat_lower_set(w)) coeffs[v.length()] += 1;
  return Polynomial(std::move(coeffs));
}

Polynomial parabolic_poincare(const WeylElt& w, const SimpleSubset& I) {
  if (!is_min_rep(w, I))
    raise(errc::not_minimal_rep, "element is not a minimal coset representative for I = " + I.to_string());
  std::vector<long long> coeffs(w.length() + 1, 0);
  for (const WeylElt& v : bruhat_lower_set(w))
    if (is_min_rep(v, I)) coeffs[v.length()] += 1;
  return Polynomial(std::move(coeffs));
}

bool is_toric(const WeylElt& w) { return is_distinct_product(w); }

namespace {

bool contains_pattern_rec(const std::vector<int>& w, const std::vector<int>& p, size_t from,
                          std::vector<int>& picked) {
  if (picked.size() == p.size()) return true;
  size_t need = p.size() - picked.size();
  for (size_t k = from; k + need <= w.size(); ++k) {
    // keep the choice order-isomorphic to the prefix of p taken so far
    bool ok = true;
    size_t j = picked.size();
    for (size_t t = 0; t < j && ok; ++t) {
      bool pat_less = p[t] < p[j];
      bool val_less = picked[t] < w[k];
      if (pat_less != val_less) ok = false;
    }
    if (!ok) continue;
    picked.push_back(w[k]);
    if (contains_pattern_rec(w, p, k + 1, picked)) return true;
    picked.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const std::vector<int>& w, const std::vector<int>& p) {
  if (p.size() > w.size()) return false;
  std::vector<int> picked;
  return contains_pattern_rec(w, p, 0, picked);
}

TriState is_smooth(const WeylElt& w) {
  if (w.rs().kind() == CartanType::A) {
    std::vector<int> perm = one_line(w);
    bool singular = contains_pattern(perm, {3, 4, 1, 2}) || contains_pattern(perm, {4, 2, 3, 1});
    return singular ? TriState::no : TriState::yes;
  }
  bool rationally_smooth = is_palindromic(poincare(w));
  if (w.rs().simply_laced()) return rationally_smooth ? TriState::yes : TriState::no;
  // not rationally smooth => not smooth; the converse needs more than the
  // Poincare polynomial outside the simply-laced types
  return rationally_smooth ? TriState::unknown : TriState::no;
}

std::optional<int> has_lmp_shape(const WeylElt& w, int guard) {
  if (w.rs().kind() != CartanType::A)
    raise(errc::type_mismatch, "the segment shape test is defined for type A only, not " + w.rs().name());
  const int n = w.rank();
  for (const Word& word : reduced_words(w, guard)) {
    std::vector<int> count(n + 1, 0);
    for (int letter : word) count[letter] += 1;
    for (size_t k = 0; k + 3 < word.size(); ++k) {
      int a = word[k];  // candidate s_{j+1}
      if (word[k + 3] != a || word[k + 1] != a - 1 || word[k + 2] != a + 1) continue;
      if (a - 1 < 1 || a + 1 > n) continue;
      if (count[a] != 2) continue;
      bool clean = true;
      for (int letter = 1; letter <= n && clean; ++letter)
        if (letter != a && count[letter] > 1) clean = false;
      if (clean) return a - 1;
    }
  }
  return std::nullopt;
}

}  // namespace cskit
