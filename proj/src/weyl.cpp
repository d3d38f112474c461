#include "cskit/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace cskit {

Word parse_word(const std::string& csv) {
  Word out;
  if (csv.empty()) return out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size() || v < 1) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      raise(errc::parse_error, "bad generator index '" + tok + "' in word '" + csv + "'");
    }
  }
  return out;
}

std::string format_word(const Word& w, char sep) {
  std::string out;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(w[k]);
  }
  return out;
}

WeylElt WeylElt::identity(RootSystemPtr rs) {
  int n = rs->rank();
  std::vector<int> m(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] = 1;
  WeylElt w(std::move(rs), std::move(m));
  w.len_ = 0;
  return w;
}

WeylElt WeylElt::simple_reflection(RootSystemPtr rs, int i) {
  int n = rs->rank();
  if (i < 1 || i > n) raise(errc::index_out_of_range, "generator index " + std::to_string(i));
  std::vector<int> m(static_cast<size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r) m[static_cast<size_t>(r) * n + r] = 1;
  // column j of s_i is alpha_j - <alpha_j, alpha_i^vee> alpha_i, so only row
  // i-1 differs from the identity.
  for (int j = 1; j <= n; ++j) m[static_cast<size_t>(i - 1) * n + (j - 1)] = (j == i ? -1 : -rs->cartan(j, i));
  WeylElt w(std::move(rs), std::move(m));
  w.len_ = 1;
  return w;
}

Root WeylElt::apply(const Root& v) const {
  int n = rank();
  Root out(n, 0);
  for (int r = 0; r < n; ++r) {
    long long acc = 0;
    for (int c = 0; c < n; ++c) acc += static_cast<long long>(m_[static_cast<size_t>(r) * n + c]) * v[c];
    out[r] = static_cast<int>(acc);
  }
  return out;
}

bool WeylElt::is_identity() const {
  int n = rank();
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (m_[static_cast<size_t>(r) * n + c] != (r == c ? 1 : 0)) return false;
  return true;
}

namespace {

// Roots are all-nonnegative or all-nonpositive; any negative entry marks a
// negative root.
bool root_is_negative(const Root& v) {
  for (int c : v)
    if (c < 0) return true;
  return false;
}

}  // namespace

int WeylElt::length() const {
  int cached = len_.load(std::memory_order_relaxed);
  if (cached >= 0) return cached;
  int count = 0;
  for (const Root& beta : rs_->positive_roots())
    if (root_is_negative(apply(beta))) ++count;
  len_.store(count, std::memory_order_relaxed);
  return count;
}

WeylElt WeylElt::operator*(const WeylElt& other) const { return cskit::multiply(*this, other); }

bool WeylElt::has_right_descent(int i) const {
  int n = rank();
  if (i < 1 || i > n) raise(errc::index_out_of_range, "generator index " + std::to_string(i));
  // sign of w(alpha_i) = sign of column i-1
  for (int r = 0; r < n; ++r) {
    int v = m_[static_cast<size_t>(r) * n + (i - 1)];
    if (v != 0) return v < 0;
  }
  return false;
}

size_t WeylElt::hash() const {
  size_t h = 1469598103934665603ull;
  for (int v : m_) {
    h ^= static_cast<size_t>(static_cast<unsigned>(v));
    h *= 1099511628211ull;
  }
  return h;
}

WeylElt multiply(const WeylElt& a, const WeylElt& b) {
  const int n = a.rank();
  const auto& ma = a.matrix();
  const auto& mb = b.matrix();
  std::vector<int> m(static_cast<size_t>(n) * n, 0);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      int f = ma[static_cast<size_t>(r) * n + k];
      if (f == 0) continue;
      for (int c = 0; c < n; ++c) m[static_cast<size_t>(r) * n + c] += f * mb[static_cast<size_t>(k) * n + c];
    }
  return WeylElt(a.rs_ptr(), std::move(m));
}

namespace {

// Strips w by its smallest right descent until the identity.  The strip
// sequence (i_1, i_2, ...) satisfies w = s_{i_l} ... s_{i_1}, i.e. it is a
// reduced word of w^{-1} read forward and of w read backward.
Word strip_by_right_descents(WeylElt w) {
  Word strip;
  const int n = w.rank();
  while (true) {
    int i = 0;
    for (int k = 1; k <= n; ++k)
      if (w.has_right_descent(k)) {
        i = k;
        break;
      }
    if (i == 0) break;
    w = w * WeylElt::simple_reflection(w.rs_ptr(), i);
    strip.push_back(i);
  }
  return strip;
}

}  // namespace

WeylElt inverse(const WeylElt& a) {
  Word strip = strip_by_right_descents(a);
  return from_word(a.rs_ptr(), strip);
}

WeylElt from_word(RootSystemPtr rs, const Word& word) {
  WeylElt w = WeylElt::identity(rs);
  for (int i : word) w = w * WeylElt::simple_reflection(rs, i);
  return w;
}

int length(const WeylElt& w) { return w.length(); }

std::vector<Root> inversion_set(const WeylElt& w) {
  WeylElt winv = inverse(w);
  std::vector<Root> out;
  for (const Root& beta : w.rs().positive_roots())
    if (root_is_negative(winv.apply(beta))) out.push_back(beta);
  return out;
}

SimpleSubset left_descents(const WeylElt& w) {
  WeylElt winv = inverse(w);
  SimpleSubset J;
  for (int i = 1; i <= w.rank(); ++i)
    if (winv.has_right_descent(i)) J.add(i);
  return J;
}

SimpleSubset right_descents(const WeylElt& w) {
  SimpleSubset J;
  for (int i = 1; i <= w.rank(); ++i)
    if (w.has_right_descent(i)) J.add(i);
  return J;
}

SimpleSubset support(const WeylElt& w) {
  SimpleSubset s;
  for (const Root& beta : inversion_set(w)) s = SimpleSubset(s.bits() | w.rs().support(beta).bits());
  return s;
}

WeylElt longest_element(RootSystemPtr rs, const SimpleSubset& J) {
  for (int i : J.indices())
    if (i > rs->rank()) raise(errc::index_out_of_range, "generator index " + std::to_string(i));
  // Greedy ascent inside W_J: multiply by any s_i (i in J) that increases
  // length; stops exactly at the longest element of W_J.
  WeylElt w = WeylElt::identity(rs);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i : J.indices()) {
      if (!w.has_right_descent(i)) {
        w = w * WeylElt::simple_reflection(rs, i);
        grew = true;
      }
    }
  }
  return w;
}

bool bruhat_leq(const WeylElt& v0, const WeylElt& w0) {
  WeylElt v = v0, w = w0;
  int lv = v.length(), lw = w.length();
  const int n = v.rank();
  while (true) {
    if (lv > lw) return false;
    if (lv == 0) return true;
    int s = 0;
    for (int k = 1; k <= n; ++k)
      if (w.has_right_descent(k)) {
        s = k;
        break;
      }
    WeylElt refl = WeylElt::simple_reflection(v.rs_ptr(), s);
    if (v.has_right_descent(s)) {
      v = v * refl;
      --lv;
    }
    w = w * refl;
    --lw;
  }
}

size_t BruhatOrder::id_of(const WeylElt& w) {
  auto it = ids_.find(w.matrix());
  if (it != ids_.end()) return it->second;
  size_t id = elts_.size();
  ids_.emplace(w.matrix(), id);
  elts_.push_back(w);
  return id;
}

bool BruhatOrder::leq(const WeylElt& v, const WeylElt& w) { return leq_ids(id_of(v), id_of(w)); }

bool BruhatOrder::leq_ids(size_t vi, size_t wi) {
  WeylElt v = elts_[vi], w = elts_[wi];
  if (v.length() > w.length()) return false;
  if (v.length() == 0) return true;
  auto it = memo_.find({vi, wi});
  if (it != memo_.end()) return it->second;
  const int n = v.rank();
  int s = 0;
  for (int k = 1; k <= n; ++k)
    if (w.has_right_descent(k)) {
      s = k;
      break;
    }
  WeylElt refl = WeylElt::simple_reflection(v.rs_ptr(), s);
  size_t wn = id_of(w * refl);
  size_t vn = v.has_right_descent(s) ? id_of(v * refl) : vi;
  bool out = leq_ids(vn, wn);
  memo_.emplace(std::make_pair(vi, wi), out);
  return out;
}

WeylElt min_coset_rep(const WeylElt& w, const SimpleSubset& I) {
  WeylElt v = w;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int i : I.indices()) {
      if (v.has_right_descent(i)) {
        v = v * WeylElt::simple_reflection(v.rs_ptr(), i);
        stripped = true;
      }
    }
  }
  return v;
}

bool is_min_rep(const WeylElt& w, const SimpleSubset& I) {
  for (int i : I.indices())
    if (w.has_right_descent(i)) return false;
  return true;
}

bool is_distinct_product(const WeylElt& w) { return w.length() == support(w).size(); }

bool is_coxeter(const WeylElt& w) {
  return is_distinct_product(w) && support(w) == SimpleSubset::full(w.rank());
}

std::vector<Word> reduced_words(const WeylElt& w, int guard) {
  if (w.length() > guard)
    raise(errc::too_long, "l(w) = " + std::to_string(w.length()) + " exceeds the reduced-word guard " +
                              std::to_string(guard));
  // Enumerate words of w^{-1} by right-descent recursion (descents read off
  // column signs), then reverse each word.
  WeylElt winv = inverse(w);
  std::map<std::vector<int>, std::vector<Word>> memo;
  auto rec = [&](auto&& self, const WeylElt& x) -> const std::vector<Word>& {
    auto it = memo.find(x.matrix());
    if (it != memo.end()) return it->second;
    std::vector<Word> words;
    if (x.length() == 0) {
      words.push_back({});
    } else {
      for (int i = 1; i <= x.rank(); ++i) {
        if (!x.has_right_descent(i)) continue;
        for (const Word& u : self(self, x * WeylElt::simple_reflection(x.rs_ptr(), i))) {
          Word word = u;
          word.push_back(i);
          words.push_back(std::move(word));
        }
      }
    }
    return memo.emplace(x.matrix(), std::move(words)).first->second;
  };
  std::vector<Word> out;
  for (const Word& u : rec(rec, winv)) {
    Word word(u.rbegin(), u.rend());
    out.push_back(std::move(word));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Word canonical_word(const WeylElt& w) {
  // Greedy smallest left descent of w = smallest right descent of w^{-1}.
  WeylElt winv = inverse(w);
  Word strip = strip_by_right_descents(winv);
  return strip;
}

std::vector<WeylElt> bruhat_coatoms(const WeylElt& w) {
  const int len = w.length();
  std::vector<WeylElt> out;
  if (len == 0) return out;
  Word word = canonical_word(w);
  RootSystemPtr rs = w.rs_ptr();
  // prefix[k] = product of the first k letters, suffix[k] = product from k on
  std::vector<WeylElt> prefix, suffix;
  prefix.reserve(len + 1);
  prefix.push_back(WeylElt::identity(rs));
  for (int k = 0; k < len; ++k) prefix.push_back(prefix.back() * WeylElt::simple_reflection(rs, word[k]));
  suffix.assign(len + 1, WeylElt::identity(rs));
  for (int k = len - 1; k >= 0; --k) suffix[k] = WeylElt::simple_reflection(rs, word[k]) * suffix[k + 1];
  std::map<std::vector<int>, bool> seen;
  for (int k = 0; k < len; ++k) {
    WeylElt u = prefix[k] * suffix[k + 1];
    if (u.length() != len - 1) continue;
    if (seen.emplace(u.matrix(), true).second) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeylElt> bruhat_lower_set(const WeylElt& w) {
  std::map<std::vector<int>, WeylElt> seen;
  std::vector<WeylElt> work{w};
  seen.emplace(w.matrix(), w);
  while (!work.empty()) {
    WeylElt v = work.back();
    work.pop_back();
    for (const WeylElt& u : bruhat_coatoms(v)) {
      if (seen.emplace(u.matrix(), u).second) work.push_back(u);
    }
  }
  std::vector<std::pair<std::pair<int, Word>, WeylElt>> keyed;
  keyed.reserve(seen.size());
  for (auto& [m, v] : seen) keyed.push_back({{v.length(), canonical_word(v)}, v});
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<WeylElt> out;
  out.reserve(keyed.size());
  for (auto& [k, v] : keyed) out.push_back(v);
  return out;
}

std::vector<int> one_line(const WeylElt& w) {
  if (w.rs().kind() != CartanType::A)
    raise(errc::type_mismatch, "one-line notation is defined for type A only, not " + w.rs().name());
  const int n = w.rank();
  // Column i holds w(alpha_i) = e_{p(i)} - e_{p(i+1)} in simple-root
  // coordinates; converting to e-coordinates by partial differences exposes
  // p(i) (the +1 slot) and p(i+1) (the -1 slot).
  std::vector<int> perm(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    Root v = w.apply(w.rs().simple_root(i));
    int plus = 0, minus = 0;
    // e-coordinates: coefficient of e_j is c_j - c_{j-1} with c_0 = c_{n+1} = 0
    for (int j = 1; j <= n + 1; ++j) {
      int cj = (j <= n) ? v[j - 1] : 0;
      int cjm1 = (j >= 2) ? v[j - 2] : 0;
      int e = cj - cjm1;
      if (e == 1) plus = j;
      if (e == -1) minus = j;
    }
    perm[i - 1] = plus;
    perm[i] = minus;  // overwritten consistently by the next column
  }
  return perm;
}

WeylElt from_one_line(RootSystemPtr rs, const std::vector<int>& perm) {
  if (rs->kind() != CartanType::A)
    raise(errc::type_mismatch, "one-line notation is defined for type A only, not " + rs->name());
  const int n = rs->rank();
  if (static_cast<int>(perm.size()) != n + 1) raise(errc::parse_error, "one-line length must be rank+1");
  std::vector<bool> hit(n + 2, false);
  for (int v : perm) {
    if (v < 1 || v > n + 1 || hit[v]) raise(errc::parse_error, "not a permutation of 1.." + std::to_string(n + 1));
    hit[v] = true;
  }
  // column i = coordinates of e_{p(i)} - e_{p(i+1)}
  std::vector<int> m(static_cast<size_t>(n) * n, 0);
  for (int i = 1; i <= n; ++i) {
    int a = perm[i - 1], b = perm[i];
    // e_a - e_b = sign * (alpha_min + ... + alpha_{max-1})
    int lo = std::min(a, b), hi = std::max(a, b);
    int sign = (a < b) ? 1 : -1;
    for (int j = lo; j < hi; ++j) m[static_cast<size_t>(j - 1) * n + (i - 1)] = sign;
  }
  return WeylElt(std::move(rs), std::move(m));
}

std::vector<int> parse_one_line(const std::string& digits) {
  std::vector<int> out;
  for (char c : digits) {
    if (c < '1' || c > '9') raise(errc::parse_error, "one-line notation must be digits 1-9, got '" + digits + "'");
    out.push_back(c - '0');
  }
  return out;
}

std::string format_one_line(const std::vector<int>& perm) {
  bool wide = perm.size() > 9;
  std::string out;
  for (size_t k = 0; k < perm.size(); ++k) {
    if (wide && k) out += ",";
    out += std::to_string(perm[k]);
  }
  return out;
}

}  // namespace cskit
