#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cskit/error.hpp"

namespace cskit {

enum class CartanType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

CartanType cartan_type_from_char(char c);

// A root written in the basis of simple roots; entry k is the coefficient of
// alpha_{k+1}.  All arithmetic is exact integer arithmetic.
using Root = std::vector<int>;

// A subset of the simple-root indices 1..n, stored as a bitmask.
class SimpleSubset {
 public:
  SimpleSubset() = default;
  explicit SimpleSubset(unsigned bits) : bits_(bits) {}

  static SimpleSubset full(int rank) { return SimpleSubset((1u << rank) - 1u); }
  static SimpleSubset from_indices(const std::vector<int>& indices, int rank);

  bool contains(int i) const { return (bits_ >> (i - 1)) & 1u; }
  void add(int i) { bits_ |= 1u << (i - 1); }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  unsigned bits() const { return bits_; }

  bool subset_of(const SimpleSubset& other) const { return (bits_ & ~other.bits_) == 0; }

  // Sorted 1-based indices.
  std::vector<int> indices() const;
  // "{1,3}" rendering used by the CLI and error messages.
  std::string to_string() const;

  friend bool operator==(const SimpleSubset&, const SimpleSubset&) = default;

 private:
  unsigned bits_ = 0;
};

// Enumerates all subsets of `s` in increasing bitmask order.
std::vector<SimpleSubset> all_subsets(const SimpleSubset& s);

// Immutable tables for a finite crystallographic root system.  Simple roots
// follow Bourbaki numbering; positive roots live in the simple-root basis and
// are ordered by (height, lexicographic).  Safe to share across threads.
class RootSystem {
 public:
  // Valid pairs: A n>=1, B n>=2, C n>=2, D n>=3, E n in {6,7,8}, F n=4, G n=2.
  static std::shared_ptr<const RootSystem> build(CartanType kind, int rank);
  static std::shared_ptr<const RootSystem> build(const std::string& name);  // e.g. "A3"

  CartanType kind() const { return kind_; }
  int rank() const { return rank_; }
  std::string name() const;  // "A3"

  // Cartan matrix entry <alpha_i, alpha_j^vee> with 1-based i, j.
  int cartan(int i, int j) const { return cartan_[(i - 1) * rank_ + (j - 1)]; }

  const std::vector<Root>& positive_roots() const { return positive_; }
  // Position of alpha_i (1-based i) inside positive_roots().
  int simple_index(int i) const { return simple_index_[i - 1]; }

  Root simple_root(int i) const;

  // Index of a positive root in positive_roots(), or -1.
  int index_of(const Root& v) const;
  bool is_positive_root(const Root& v) const { return index_of(v) >= 0; }

  // v  ->  v - <v, alpha_i^vee> alpha_i.  An involution on the root set.
  Root apply_simple_reflection(int i, const Root& v) const;

  // Indices i with the alpha_i coefficient of v strictly positive.
  // v must be a positive root.
  SimpleSubset support(const Root& v) const;

  bool simply_laced() const { return kind_ == CartanType::A || kind_ == CartanType::D || kind_ == CartanType::E; }

  // |W| for this type, exact.
  unsigned long long group_order() const;

  std::string root_to_string(const Root& v) const;  // "a1+2a2"

 private:
  RootSystem() = default;

  CartanType kind_;
  int rank_;
  std::vector<int> cartan_;  // row-major rank x rank
  std::vector<Root> positive_;
  std::vector<int> simple_index_;
  std::map<Root, int> index_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

}  // namespace cskit
