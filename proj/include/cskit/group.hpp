#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cskit/weyl.hpp"

namespace cskit {

inline constexpr unsigned long long kDefaultGroupCap = 40320;  // |S_8|

// A fully enumerated Weyl group: elements breadth-first from the identity in
// generator-index order, right multiplication tables, lengths (= BFS depth),
// and an optional Bruhat order bitmatrix.  Everything is deterministic.
class WeylGroup {
 public:
  // Throws GroupTooLarge when |W| exceeds cap (checked via the order formula
  // before enumerating).  When cache_dir is nonempty, tries to load a binary
  // cache from it and writes one on miss (best effort).
  static WeylGroup enumerate(RootSystemPtr rs, unsigned long long cap = kDefaultGroupCap,
                             const std::string& cache_dir = "");

  const RootSystem& rs() const { return *rs_; }
  RootSystemPtr rs_ptr() const { return rs_; }

  size_t size() const { return elements_.size(); }
  const WeylElt& element(size_t x) const { return elements_[x]; }
  const std::vector<WeylElt>& elements() const { return elements_; }
  int length(size_t x) const { return lengths_[x]; }
  size_t index_of(const WeylElt& w) const;

  size_t right_mult(size_t x, int gen) const { return rmult_[x * rs_->rank() + (gen - 1)]; }

  // v <= w in Bruhat order, by element index.  Builds the bitmatrix on first
  // use (row recursion: with s a right descent of w,
  // v <= w  <=>  (vs <= ws if vs < v, else v <= ws)).
  bool leq(size_t v, size_t w) const;
  void ensure_bruhat_matrix() const;
  bool has_bruhat_matrix() const { return !bruhat_.empty(); }

  bool loaded_from_cache() const { return loaded_from_cache_; }

 private:
  explicit WeylGroup(RootSystemPtr rs) : rs_(std::move(rs)) {}
  void build_tables();
  bool load_cache(const std::string& path);
  void save_cache(const std::string& path) const;

  RootSystemPtr rs_;
  std::vector<WeylElt> elements_;
  std::vector<int> lengths_;
  std::vector<uint32_t> rmult_;
  std::unordered_map<size_t, std::vector<uint32_t>> hash_buckets_;
  mutable std::vector<uint64_t> bruhat_;  // row-major bitmatrix, words_per_row_ per row
  mutable size_t words_per_row_ = 0;
  bool loaded_from_cache_ = false;
};

}  // namespace cskit
