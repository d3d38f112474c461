#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cskit/decomp.hpp"
#include "cskit/group.hpp"
#include "cskit/posets.hpp"
#include "cskit/schubert.hpp"
#include "cskit/spherical.hpp"

namespace cskit {

// Everything the batch classifier knows about one Schubert datum.
struct ClassificationRecord {
  std::string group;                      // "A3"
  std::string one_line;                   // type A only, else empty
  std::string canonical_reduced_word;     // "1,2,1"
  int length = 0;
  std::vector<int> support;
  std::vector<int> left_descents;
  bool is_toric = false;
  bool is_coxeter = false;
  std::vector<std::vector<int>> spherical_levis;
  std::vector<std::vector<int>> spherical_relaxed_levis;
  TriState smooth = TriState::unknown;
  bool rationally_smooth = false;
  TriState inverse_smooth = TriState::unknown;
  std::vector<long long> poincare_coeffs;
  long long interval_size = 0;
  int coatoms = 0;
  bool boolean_interval = false;
};

struct ClassifyOptions {
  unsigned long long cap = kDefaultGroupCap;
  unsigned threads = 0;       // 0 = hardware default
  std::string cache_dir;      // empty = no cache
};

ClassificationRecord classify_element(const WeylElt& w);

// One record per group element, in breadth-first enumeration order.
std::vector<ClassificationRecord> classify_group(RootSystemPtr rs, const ClassifyOptions& opts = {});

std::string records_to_json(const std::vector<ClassificationRecord>& records);
std::string records_to_csv(const std::vector<ClassificationRecord>& records);

// Verdict serialization per the external interface:
// {holds, coxeter_part_word, l_w, l_w0J, l_c, dim_condition}.
std::string verdict_to_json(const SphericalVerdict& v);

// Full per-element report for `cskit inspect`.  When `word` is given and
// reduced, BSDH verdicts are included; a non-reduced word degrades to
// word-level operations with a NotReduced warning.
std::string inspect_report(RootSystemPtr rs, const std::optional<Word>& word,
                           const std::optional<std::vector<int>>& oneline);

}  // namespace cskit
