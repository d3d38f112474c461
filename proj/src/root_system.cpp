#include "cskit/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cskit {

CartanType cartan_type_from_char(char c) {
  if (c >= 'a' && c <= 'g') c = static_cast<char>(c - 'a' + 'A');
  if (c < 'A' || c > 'G') raise(errc::invalid_type, std::string("unknown Cartan type '") + c + "'");
  return static_cast<CartanType>(c);
}

SimpleSubset SimpleSubset::from_indices(const std::vector<int>& indices, int rank) {
  SimpleSubset s;
  for (int i : indices) {
    if (i < 1 || i > rank) raise(errc::index_out_of_range, "generator index " + std::to_string(i));
    s.add(i);
  }
  return s;
}

std::vector<int> SimpleSubset::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string SimpleSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::vector<SimpleSubset> all_subsets(const SimpleSubset& s) {
  std::vector<SimpleSubset> out;
  unsigned bits = s.bits();
  // enumerate submasks in increasing order
  for (unsigned m = 0;; m = (m - bits) & bits) {
    out.push_back(SimpleSubset(m));
    if (m == bits) break;
  }
  std::sort(out.begin(), out.end(), [](const SimpleSubset& a, const SimpleSubset& b) { return a.bits() < b.bits(); });
  return out;
}

namespace {

void validate(CartanType kind, int rank) {
  bool ok = false;
  switch (kind) {
    case CartanType::A: ok = rank >= 1; break;
    case CartanType::B: ok = rank >= 2; break;
    case CartanType::C: ok = rank >= 2; break;
    case CartanType::D: ok = rank >= 3; break;
    case CartanType::E: ok = rank >= 6 && rank <= 8; break;
    case CartanType::F: ok = rank == 4; break;
    case CartanType::G: ok = rank == 2; break;
  }
  if (!ok || rank > 12)
    raise(errc::invalid_type,
          std::string(1, static_cast<char>(kind)) + std::to_string(rank) + " is not a supported finite type");
}

// Cartan matrix in Bourbaki numbering, entry (i,j) = <alpha_i, alpha_j^vee>.
std::vector<int> cartan_matrix(CartanType kind, int n) {
  std::vector<int> a(static_cast<size_t>(n) * n, 0);
  auto at = [&](int i, int j) -> int& { return a[static_cast<size_t>(i - 1) * n + (j - 1)]; };
  for (int i = 1; i <= n; ++i) at(i, i) = 2;
  auto bond = [&](int i, int j) { at(i, j) = -1; at(j, i) = -1; };
  switch (kind) {
    case CartanType::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case CartanType::B:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      at(n - 1, n) = -2;  // alpha_n is the short root
      break;
    case CartanType::C:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      at(n, n - 1) = -2;  // alpha_n is the long root
      break;
    case CartanType::D:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case CartanType::E:
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < n; ++i) bond(i, i + 1);
      break;
    case CartanType::F:
      bond(1, 2);
      bond(3, 4);
      at(2, 3) = -2;  // double bond, alpha_3 short
      at(3, 2) = -1;
      break;
    case CartanType::G:
      at(1, 2) = -1;  // alpha_1 short
      at(2, 1) = -3;
      break;
  }
  return a;
}

int height(const Root& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

std::shared_ptr<const RootSystem> RootSystem::build(CartanType kind, int rank) {
  validate(kind, rank);
  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  rs->kind_ = kind;
  rs->rank_ = rank;
  rs->cartan_ = cartan_matrix(kind, rank);

  // Closure of the simple roots under simple reflections, kept to the
  // positive cone.  Images of positive roots other than alpha_i itself stay
  // positive, so discarding vectors with a negative coordinate discards only
  // alpha_i -> -alpha_i.
  std::set<Root> seen;
  std::vector<Root> work;
  for (int i = 1; i <= rank; ++i) {
    Root alpha(rank, 0);
    alpha[i - 1] = 1;
    seen.insert(alpha);
    work.push_back(alpha);
  }
  while (!work.empty()) {
    Root v = work.back();
    work.pop_back();
    for (int i = 1; i <= rank; ++i) {
      Root u = rs->apply_simple_reflection(i, v);
      if (std::any_of(u.begin(), u.end(), [](int c) { return c < 0; })) continue;
      if (seen.insert(u).second) work.push_back(u);
    }
    if (seen.size() > 240) raise(errc::invalid_type, "positive root closure did not terminate");
  }

  rs->positive_.assign(seen.begin(), seen.end());
  std::sort(rs->positive_.begin(), rs->positive_.end(), [](const Root& x, const Root& y) {
    int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  for (size_t k = 0; k < rs->positive_.size(); ++k) rs->index_[rs->positive_[k]] = static_cast<int>(k);
  rs->simple_index_.resize(rank);
  for (int i = 1; i <= rank; ++i) rs->simple_index_[i - 1] = rs->index_.at(rs->simple_root(i));
  return rs;
}

std::shared_ptr<const RootSystem> RootSystem::build(const std::string& name) {
  if (name.size() < 2) raise(errc::parse_error, "expected <TYPE><RANK>, e.g. A3, got '" + name + "'");
  CartanType kind = cartan_type_from_char(name[0]);
  int rank = 0;
  for (size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') raise(errc::parse_error, "bad rank in '" + name + "'");
    rank = rank * 10 + (name[i] - '0');
    if (rank > 99) raise(errc::parse_error, "bad rank in '" + name + "'");
  }
  return build(kind, rank);
}

std::string RootSystem::name() const {
  return std::string(1, static_cast<char>(kind_)) + std::to_string(rank_);
}

Root RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank_) raise(errc::index_out_of_range, "generator index " + std::to_string(i));
  Root alpha(rank_, 0);
  alpha[i - 1] = 1;
  return alpha;
}

int RootSystem::index_of(const Root& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

Root RootSystem::apply_simple_reflection(int i, const Root& v) const {
  if (i < 1 || i > rank_) raise(errc::index_out_of_range, "generator index " + std::to_string(i));
  if (static_cast<int>(v.size()) != rank_) raise(errc::index_out_of_range, "root vector has wrong dimension");
  // <v, alpha_i^vee> = sum_j v_j <alpha_j, alpha_i^vee>
  long long pairing = 0;
  for (int j = 1; j <= rank_; ++j) pairing += static_cast<long long>(v[j - 1]) * cartan(j, i);
  Root out = v;
  out[i - 1] = static_cast<int>(out[i - 1] - pairing);
  return out;
}

SimpleSubset RootSystem::support(const Root& v) const {
  if (std::any_of(v.begin(), v.end(), [](int c) { return c < 0; }) || !is_positive_root(v))
    raise(errc::not_positive_root, root_to_string(v));
  SimpleSubset s;
  for (int i = 1; i <= rank_; ++i)
    if (v[i - 1] > 0) s.add(i);
  return s;
}

unsigned long long RootSystem::group_order() const {
  auto factorial = [](int k) {
    unsigned long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (kind_) {
    case CartanType::A: return factorial(rank_ + 1);
    case CartanType::B:
    case CartanType::C: return factorial(rank_) << rank_;
    case CartanType::D: return factorial(rank_) << (rank_ - 1);
    case CartanType::E:
      if (rank_ == 6) return 51840ull;
      if (rank_ == 7) return 2903040ull;
      return 696729600ull;
    case CartanType::F: return 1152ull;
    case CartanType::G: return 12ull;
  }
  return 0;
}

std::string RootSystem::root_to_string(const Root& v) const {
  std::string out;
  for (int i = 1; i <= rank_; ++i) {
    int c = v[i - 1];
    if (c == 0) continue;
    if (!out.empty() && c > 0) out += "+";
    if (c == -1)
      out += "-";
    else if (c != 1)
      out += std::to_string(c);
    out += "a" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace cskit
