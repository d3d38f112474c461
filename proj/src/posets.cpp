#include "cskit/posets.hpp"

#include <algorithm>
#include <map>

#include "cskit/spherical.hpp"
#include "json.hpp"

namespace cskit {

IntervalPoset bruhat_interval(const WeylElt& w) {
  IntervalPoset p;
  p.elements = bruhat_lower_set(w);
  std::map<std::vector<int>, int> pos;
  for (size_t k = 0; k < p.elements.size(); ++k) {
    p.rank.push_back(p.elements[k].length());
    pos[p.elements[k].matrix()] = static_cast<int>(k);
  }
  p.covers.resize(p.elements.size());
  for (size_t k = 0; k < p.elements.size(); ++k)
    for (const WeylElt& u : bruhat_coatoms(p.elements[k])) p.covers[k].push_back(pos.at(u.matrix()));
  p.bottom = 0;
  p.top = static_cast<int>(p.elements.size()) - 1;
  return p;
}

namespace {

// reachability[k] = set of indices below-or-equal elements[k]
std::vector<std::vector<char>> down_sets(const IntervalPoset& p) {
  const size_t count = p.elements.size();
  std::vector<std::vector<char>> down(count, std::vector<char>(count, 0));
  // elements are sorted by rank, so covered indices come earlier
  for (size_t k = 0; k < count; ++k) {
    down[k][k] = 1;
    for (int c : p.covers[k])
      for (size_t j = 0; j < count; ++j) down[k][j] |= down[c][j];
  }
  return down;
}

bool powerset_isomorphic(const IntervalPoset& p, const std::vector<unsigned>& labels, int set_rank) {
  const size_t count = p.elements.size();
  if (count != (1ull << set_rank)) return false;
  std::vector<unsigned> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  for (size_t k = 0; k < count; ++k) {
    if (__builtin_popcount(sorted[k]) > set_rank) return false;
    if (k > 0 && sorted[k] == sorted[k - 1]) return false;  // labels must be distinct
  }
  // distinct labels with popcount <= set_rank over a 2^set_rank universe of
  // the union support: verify the union has set_rank bits
  unsigned all = 0;
  for (unsigned l : labels) all |= l;
  if (__builtin_popcount(all) != set_rank) return false;
  auto down = down_sets(p);
  for (size_t a = 0; a < count; ++a)
    for (size_t b = 0; b < count; ++b) {
      bool leq = down[b][a];
      bool sub = (labels[a] & ~labels[b]) == 0;
      if (leq != sub) return false;
    }
  return true;
}

}  // namespace

bool is_boolean(const IntervalPoset& p) {
  const WeylElt& top = p.elements[p.top];
  const int len = top.length();
  if (len > 20) return false;  // 2^len already exceeds any group within the cap
  if (p.elements.size() != (1ull << len)) return false;
  if (is_distinct_product(top)) {
    // toric top: the support subsets label the interval
    std::vector<unsigned> labels;
    for (const WeylElt& v : p.elements) labels.push_back(support(v).bits());
    return powerset_isomorphic(p, labels, len);
  }
  // generic graded check via atom sets
  std::vector<int> atoms;
  for (size_t k = 0; k < p.elements.size(); ++k)
    if (p.rank[k] == 1) atoms.push_back(static_cast<int>(k));
  if (static_cast<int>(atoms.size()) != len) return false;
  auto down = down_sets(p);
  std::vector<unsigned> labels(p.elements.size(), 0);
  for (size_t k = 0; k < p.elements.size(); ++k)
    for (size_t a = 0; a < atoms.size(); ++a)
      if (down[k][atoms[a]]) labels[k] |= 1u << a;
  return powerset_isomorphic(p, labels, len);
}

int coatom_count(const IntervalPoset& p) { return static_cast<int>(p.covers[p.top].size()); }

int wonderful_rank(RootSystemPtr rs, const Word& word) {
  if (!gbsdh_wonderful(rs, word))
    raise(errc::not_wonderful, "G x_B X_word is not wonderful for word " + format_word(word));
  WeylElt w = from_word(rs, word);
  int rank = static_cast<int>(word.size());
  int coatoms = coatom_count(bruhat_interval(w));
  if (coatoms != rank)
    throw std::logic_error("wonderful rank " + std::to_string(rank) + " != coatom count " +
                           std::to_string(coatoms));
  return rank;
}

namespace {

std::string node_label(const WeylElt& v) {
  Word word = canonical_word(v);
  return word.empty() ? "e" : format_word(word);
}

}  // namespace

std::string interval_to_dot(const IntervalPoset& p) {
  std::string out = "digraph interval {\n  rankdir=BT;\n";
  for (const WeylElt& v : p.elements) out += "  \"" + node_label(v) + "\";\n";
  for (size_t k = 0; k < p.elements.size(); ++k)
    for (int c : p.covers[k])
      out += "  \"" + node_label(p.elements[c]) + "\" -> \"" + node_label(p.elements[k]) + "\";\n";
  out += "}\n";
  return out;
}

std::string interval_to_json(const IntervalPoset& p, const std::string& group_name) {
  nlohmann::json j;
  j["schema"] = 1;
  j["group"] = group_name;
  j["top"] = node_label(p.elements[p.top]);
  nlohmann::json nodes = nlohmann::json::array();
  for (size_t k = 0; k < p.elements.size(); ++k)
    nodes.push_back({{"word", node_label(p.elements[k])}, {"length", p.rank[k]}});
  j["nodes"] = nodes;
  nlohmann::json covers = nlohmann::json::array();
  for (size_t k = 0; k < p.elements.size(); ++k)
    for (int c : p.covers[k]) covers.push_back({c, static_cast<int>(k)});
  j["covers"] = covers;
  return j.dump(2) + "\n";
}

}  // namespace cskit
