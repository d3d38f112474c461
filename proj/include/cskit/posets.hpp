#pragma once

#include <string>
#include <vector>

#include "cskit/weyl.hpp"

namespace cskit {

// The lower Bruhat interval [e, w] as an explicit graded DAG.  This is the
// combinatorial face of the orbit-poset theorem: the poset of G-orbit
// closures in the G-Schubert variety G x_B X_wB equals the poset of B-orbit
// closures in X_wB, which is exactly this interval.
struct IntervalPoset {
  std::vector<WeylElt> elements;          // sorted by (length, canonical word)
  std::vector<int> rank;                  // rank[k] = l(elements[k])
  std::vector<std::vector<int>> covers;   // covers[k] = indices covered by elements[k] (coatoms)
  int top = 0;                            // index of w
  int bottom = 0;                         // index of e
};

IntervalPoset bruhat_interval(const WeylElt& w);

// Isomorphism with the subset lattice of rank l(w).  Fast path for toric
// tops via support labels; otherwise labels each element by its atom set and
// checks the induced order equivalence.
bool is_boolean(const IntervalPoset& p);

// Number of elements covered by the maximum.
int coatom_count(const IntervalPoset& p);

// Spherical rank of a wonderful G-BSDH variety: |word|, cross-checked
// against the coatom count of the interval.  Requires gbsdh_wonderful.
int wonderful_rank(RootSystemPtr rs, const Word& word);

// Emitters: nodes labeled by canonical reduced word ("e" for the identity),
// edges are covering relations.
std::string interval_to_dot(const IntervalPoset& p);
std::string interval_to_json(const IntervalPoset& p, const std::string& group_name);

}  // namespace cskit
