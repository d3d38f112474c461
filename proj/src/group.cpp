#include "cskit/group.hpp"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>

namespace cskit {

namespace {

constexpr uint32_t kCacheVersion = 1;
constexpr char kCacheMagic[4] = {'C', 'S', 'K', 'W'};
constexpr size_t kCacheMatrixLimit = 8192;  // skip the bitmatrix beyond this many elements

std::string cache_file(const std::string& dir, const RootSystem& rs) {
  return dir + "/cskit-" + rs.name() + "-v" + std::to_string(kCacheVersion) + ".bin";
}

}  // namespace

size_t WeylGroup::index_of(const WeylElt& w) const {
  auto it = hash_buckets_.find(w.hash());
  if (it != hash_buckets_.end())
    for (uint32_t x : it->second)
      if (elements_[x] == w) return x;
  raise(errc::index_out_of_range, "element does not belong to the enumerated group");
}

WeylGroup WeylGroup::enumerate(RootSystemPtr rs, unsigned long long cap, const std::string& cache_dir) {
  unsigned long long order = rs->group_order();
  if (order > cap)
    raise(errc::group_too_large,
          rs->name() + " has |W| = " + std::to_string(order) + " > cap " + std::to_string(cap));

  WeylGroup g(rs);
  std::string path = cache_dir.empty() ? "" : cache_file(cache_dir, *rs);
  if (!path.empty() && g.load_cache(path)) {
    g.loaded_from_cache_ = true;
    return g;
  }

  const int n = rs->rank();
  g.elements_.push_back(WeylElt::identity(rs));
  g.lengths_.push_back(0);
  g.hash_buckets_[g.elements_[0].hash()].push_back(0);
  g.rmult_.assign(static_cast<size_t>(order) * n, UINT32_MAX);

  std::vector<WeylElt> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(WeylElt::simple_reflection(rs, i));

  for (size_t x = 0; x < g.elements_.size(); ++x) {
    for (int i = 1; i <= n; ++i) {
      WeylElt y = g.elements_[x] * gens[i - 1];
      size_t h = y.hash();
      uint32_t found = UINT32_MAX;
      auto it = g.hash_buckets_.find(h);
      if (it != g.hash_buckets_.end())
        for (uint32_t cand : it->second)
          if (g.elements_[cand] == y) {
            found = cand;
            break;
          }
      if (found == UINT32_MAX) {
        found = static_cast<uint32_t>(g.elements_.size());
        g.elements_.push_back(y);
        g.lengths_.push_back(g.lengths_[x] + 1);
        g.hash_buckets_[h].push_back(found);
      }
      g.rmult_[x * n + (i - 1)] = found;
    }
  }
  if (g.elements_.size() != order)
    raise(errc::invalid_type, "enumeration produced " + std::to_string(g.elements_.size()) +
                                  " elements, expected " + std::to_string(order));

  if (!path.empty()) g.save_cache(path);
  return g;
}

void WeylGroup::ensure_bruhat_matrix() const {
  if (!bruhat_.empty()) return;
  const size_t count = elements_.size();
  const int n = rs_->rank();
  words_per_row_ = (count + 63) / 64;
  bruhat_.assign(count * words_per_row_, 0);
  auto set = [&](size_t v, size_t w) { bruhat_[w * words_per_row_ + v / 64] |= 1ull << (v % 64); };
  auto get = [&](size_t v, size_t w) {
    return (bruhat_[w * words_per_row_ + v / 64] >> (v % 64)) & 1ull;
  };
  // Elements are in BFS order, so ws precedes w whenever s is a right
  // descent of w; fill rows in that order via [e,w] = [e,ws] u [e,ws]s.
  set(0, 0);
  for (size_t w = 1; w < count; ++w) {
    int s = 0;
    for (int k = 1; k <= n; ++k)
      if (elements_[w].has_right_descent(k)) {
        s = k;
        break;
      }
    size_t ws = right_mult(w, s);
    for (size_t v = 0; v < count; ++v) {
      if (lengths_[v] > lengths_[w]) continue;
      if (get(v, ws) || get(right_mult(v, s), ws)) set(v, w);
    }
  }
}

bool WeylGroup::leq(size_t v, size_t w) const {
  ensure_bruhat_matrix();
  return (bruhat_[w * words_per_row_ + v / 64] >> (v % 64)) & 1ull;
}

bool WeylGroup::load_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  char magic[4];
  uint32_t version = 0, rank = 0;
  char kind = 0;
  uint64_t count = 0;
  uint8_t has_matrix = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&version), sizeof version);
  in.read(&kind, 1);
  in.read(reinterpret_cast<char*>(&rank), sizeof rank);
  in.read(reinterpret_cast<char*>(&count), sizeof count);
  in.read(reinterpret_cast<char*>(&has_matrix), 1);
  if (!in || std::memcmp(magic, kCacheMagic, 4) != 0 || version != kCacheVersion ||
      kind != static_cast<char>(rs_->kind()) || rank != static_cast<uint32_t>(rs_->rank()) ||
      count != rs_->group_order())
    return false;
  const int n = rs_->rank();
  elements_.clear();
  elements_.reserve(count);
  lengths_.assign(count, 0);
  rmult_.assign(count * n, 0);
  std::vector<int32_t> mat(static_cast<size_t>(n) * n);
  for (uint64_t x = 0; x < count; ++x) {
    in.read(reinterpret_cast<char*>(mat.data()), mat.size() * sizeof(int32_t));
    elements_.push_back(WeylElt(rs_, std::vector<int>(mat.begin(), mat.end())));
  }
  in.read(reinterpret_cast<char*>(lengths_.data()), lengths_.size() * sizeof(int));
  in.read(reinterpret_cast<char*>(rmult_.data()), rmult_.size() * sizeof(uint32_t));
  if (has_matrix) {
    words_per_row_ = (count + 63) / 64;
    bruhat_.assign(count * words_per_row_, 0);
    in.read(reinterpret_cast<char*>(bruhat_.data()), bruhat_.size() * sizeof(uint64_t));
  }
  if (!in) {
    elements_.clear();
    bruhat_.clear();
    return false;
  }
  for (size_t x = 0; x < elements_.size(); ++x)
    hash_buckets_[elements_[x].hash()].push_back(static_cast<uint32_t>(x));
  return true;
}

void WeylGroup::save_cache(const std::string& path) const {
  std::error_code ec;
  std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::fprintf(stderr, "cskit: warning: cannot write group cache %s\n", path.c_str());
    return;
  }
  const int n = rs_->rank();
  uint32_t version = kCacheVersion, rank = n;
  char kind = static_cast<char>(rs_->kind());
  uint64_t count = elements_.size();
  uint8_t has_matrix = 0;
  if (count <= kCacheMatrixLimit) {
    ensure_bruhat_matrix();
    has_matrix = 1;
  }
  out.write(kCacheMagic, 4);
  out.write(reinterpret_cast<const char*>(&version), sizeof version);
  out.write(&kind, 1);
  out.write(reinterpret_cast<const char*>(&rank), sizeof rank);
  out.write(reinterpret_cast<const char*>(&count), sizeof count);
  out.write(reinterpret_cast<const char*>(&has_matrix), 1);
  std::vector<int32_t> mat;
  for (const WeylElt& w : elements_) {
    mat.assign(w.matrix().begin(), w.matrix().end());
    out.write(reinterpret_cast<const char*>(mat.data()), mat.size() * sizeof(int32_t));
  }
  out.write(reinterpret_cast<const char*>(lengths_.data()), lengths_.size() * sizeof(int));
  out.write(reinterpret_cast<const char*>(rmult_.data()), rmult_.size() * sizeof(uint32_t));
  if (has_matrix)
    out.write(reinterpret_cast<const char*>(bruhat_.data()), bruhat_.size() * sizeof(uint64_t));
  if (!out) std::fprintf(stderr, "cskit: warning: short write on group cache %s\n", path.c_str());
}

}  // namespace cskit
