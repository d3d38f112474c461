#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cskit/root_system.hpp"

namespace cskit {

// A word in the simple reflections: 1-based generator indices, possibly
// non-reduced.  Products evaluate left to right, so (2,4,5) means s2 s4 s5
// acting as the composition s2 o s4 o s5.
using Word = std::vector<int>;

Word parse_word(const std::string& csv);           // "2,4,5,3,4,2,1"
std::string format_word(const Word& w, char sep = ',');

// A Weyl group element, stored as the integer matrix of its action on the
// simple-root basis: column j holds the coordinates of w(alpha_j).  Elements
// are immutable values; the length cache fills in lazily.
class WeylElt {
 public:
  static WeylElt identity(RootSystemPtr rs);
  static WeylElt simple_reflection(RootSystemPtr rs, int i);

  // Wraps an action matrix directly; m must describe a group element.
  WeylElt(RootSystemPtr rs, std::vector<int> m) : rs_(std::move(rs)), m_(std::move(m)) {}

  const RootSystem& rs() const { return *rs_; }
  RootSystemPtr rs_ptr() const { return rs_; }
  int rank() const { return rs_->rank(); }

  Root apply(const Root& v) const;
  bool is_identity() const;

  // Number of positive roots sent negative; equals the shortest-word length.
  int length() const;

  WeylElt operator*(const WeylElt& other) const;
  bool operator==(const WeylElt& other) const { return m_ == other.m_; }
  bool operator!=(const WeylElt& other) const { return m_ != other.m_; }
  bool operator<(const WeylElt& other) const { return m_ < other.m_; }  // arbitrary total order

  // v = w(alpha_i) is negative  <=>  l(w s_i) < l(w).
  bool has_right_descent(int i) const;

  const std::vector<int>& matrix() const { return m_; }
  size_t hash() const;

  WeylElt(const WeylElt& o) : rs_(o.rs_), m_(o.m_), len_(o.len_.load()) {}
  WeylElt& operator=(const WeylElt& o) {
    rs_ = o.rs_;
    m_ = o.m_;
    len_.store(o.len_.load());
    return *this;
  }

 private:
  RootSystemPtr rs_;
  std::vector<int> m_;                     // rank x rank, row-major
  mutable std::atomic<int> len_{-1};       // lazy; benign to recompute concurrently
};

struct WeylEltHash {
  size_t operator()(const WeylElt& w) const { return w.hash(); }
};

inline WeylElt identity(RootSystemPtr rs) { return WeylElt::identity(std::move(rs)); }
inline WeylElt simple_reflection(RootSystemPtr rs, int i) { return WeylElt::simple_reflection(std::move(rs), i); }
WeylElt multiply(const WeylElt& a, const WeylElt& b);
WeylElt inverse(const WeylElt& a);
WeylElt from_word(RootSystemPtr rs, const Word& word);

int length(const WeylElt& w);

// R^+(w^{-1}) = { beta in R^+ : w^{-1}(beta) negative }; cardinality l(w).
std::vector<Root> inversion_set(const WeylElt& w);

// J(w) = { i : l(s_i w) < l(w) } = simple roots inside the inversion set.
SimpleSubset left_descents(const WeylElt& w);
SimpleSubset right_descents(const WeylElt& w);

// Generators occurring in any reduced word of w, computed as the union of
// the supports of the inversion roots.
SimpleSubset support(const WeylElt& w);

// Longest element of the standard parabolic subgroup W_J; an involution with
// inversion set ZJ n R^+.
WeylElt longest_element(RootSystemPtr rs, const SimpleSubset& J);

// Bruhat-Chevalley order via the descent recursion: with s a right descent
// of w,  v <= w  <=>  (vs <= ws  if l(vs) < l(v),  else  v <= ws).
bool bruhat_leq(const WeylElt& v, const WeylElt& w);

// Memoizing wrapper for batch scans; keyed on element pairs.  Not thread
// safe: use one instance per worker.
class BruhatOrder {
 public:
  bool leq(const WeylElt& v, const WeylElt& w);

 private:
  struct PairHash {
    size_t operator()(const std::pair<size_t, size_t>& p) const { return p.first * 0x9e3779b97f4a7c15ull ^ p.second; }
  };
  std::unordered_map<std::vector<int>, size_t> ids_;
  std::unordered_map<std::pair<size_t, size_t>, bool, PairHash> memo_;
  std::vector<WeylElt> elts_;
  size_t id_of(const WeylElt& w);
  bool leq_ids(size_t v, size_t w);
};

// Minimal length representative of the coset w W_I: the unique v in w W_I
// with no right descent in I.
WeylElt min_coset_rep(const WeylElt& w, const SimpleSubset& I);
bool is_min_rep(const WeylElt& w, const SimpleSubset& I);

// l(w) = |support(w)|, i.e. w is a product of distinct simple reflections.
bool is_distinct_product(const WeylElt& w);
// Distinct product using every generator exactly once; length = rank.
bool is_coxeter(const WeylElt& w);

inline constexpr int kReducedWordGuard = 16;

// All reduced words of w in lexicographic order.  Guarded: the count grows
// fast with length.
std::vector<Word> reduced_words(const WeylElt& w, int guard = kReducedWordGuard);

// Lexicographically smallest reduced word (greedy smallest left descent).
Word canonical_word(const WeylElt& w);

// The lower Bruhat interval [e, w] as a deterministic (length, word)-sorted
// element list.
std::vector<WeylElt> bruhat_lower_set(const WeylElt& w);

// Elements covered by w: single-letter deletions from a fixed reduced word
// that drop the length by exactly one.
std::vector<WeylElt> bruhat_coatoms(const WeylElt& w);

// One-line notation, type A only: w as the permutation [w(1),...,w(n+1)].
std::vector<int> one_line(const WeylElt& w);
WeylElt from_one_line(RootSystemPtr rs, const std::vector<int>& perm);
std::vector<int> parse_one_line(const std::string& digits);  // "4231" -> {4,2,3,1}
std::string format_one_line(const std::vector<int>& perm);

}  // namespace cskit
