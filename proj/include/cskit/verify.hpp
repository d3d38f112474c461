#pragma once

#include <string>
#include <vector>

#include "cskit/group.hpp"

namespace cskit {

struct VerifyOptions {
  unsigned long long cap = kDefaultGroupCap;
  unsigned threads = 0;
  std::string cache_dir;
  size_t max_listed = 20;  // counterexamples kept in the report
};

struct VerifyReport {
  std::string property;
  std::string group;
  long long instances = 0;         // checked instances (pairs, triples, ...)
  long long failures = 0;
  long long undecidable = 0;       // legs skipped as undecidable (non-simply-laced smoothness)
  std::vector<std::string> counterexamples;
  bool passed() const { return failures == 0; }
};

// Property ids:
//   thm-spherical    spherical factorization verdict vs a reduced-word oracle
//   thm-smooth-equiv three-way smoothness equivalence on admissible (w, J)
//   prop-four-equiv  G-Schubert/G-BSDH sphericality = toricness
//   bool-lattice     boolean interval + coatom count for toric w
//   bruhat-oracle    bruhat_leq vs the subword oracle on all pairs
//   bp-product       BP property of c^-1 w_{0,J} on admissible (w, J)
std::vector<std::string> verify_property_ids();

VerifyReport verify_property(const std::string& id, RootSystemPtr rs, const VerifyOptions& opts = {});

std::string report_to_text(const VerifyReport& r);

}  // namespace cskit
