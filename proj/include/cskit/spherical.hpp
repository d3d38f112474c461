#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cskit/weyl.hpp"

namespace cskit {

// Outcome of a spherical factorization test for the pair (w, J).  The
// candidate factor is always c = w_{0,J} w, so that w = w_{0,J} c.  When
// `holds`, the length additivity l(w) = l(w_{0,J}) + l(c) is part of the
// verdict; dim_condition records l(c) = rank, i.e. dim B_J = dim X_wB.
struct SphericalVerdict {
  bool holds = false;
  std::optional<WeylElt> coxeter_part;  // c, present when holds
  int len_w = 0;
  int len_w0j = 0;
  int len_c = 0;
  bool dim_condition = false;
};

// A word together with its reducedness flag.
struct BsdhWord {
  Word word;
  bool reduced = false;
};

BsdhWord make_bsdh_word(RootSystemPtr rs, const Word& word);

// Splits the inversion set of w into R1 = { roots supported inside J } and
// R2 = { roots with support not inside J }.  Requires J inside the left
// descent set of w, which makes R1 = ZJ n R^+.
struct R1R2Partition {
  std::vector<Root> r1;
  std::vector<Root> r2;
};
R1R2Partition r1_r2_partition(const WeylElt& w, const SimpleSubset& J);

// X_wB is a spherical L_J-variety with dim B_J = dim X_wB  <=>  w = w_{0,J} c
// with c a Coxeter element and additive lengths.
SphericalVerdict spherical_levi_test(const WeylElt& w, const SimpleSubset& J);

// Relaxed form (no dimension requirement): c only needs to be a product of
// distinct simple reflections.
SphericalVerdict spherical_relaxed_test(const WeylElt& w, const SimpleSubset& J);

// Convenience: all J inside the left descent set passing the respective test.
std::vector<SimpleSubset> spherical_levi_subsets(const WeylElt& w);
std::vector<SimpleSubset> spherical_relaxed_subsets(const WeylElt& w);

// J(word): indices i_j whose reflection commutes with every earlier letter.
SimpleSubset bsdh_descent_set(RootSystemPtr rs, const Word& word);

// Sphericality of the BSDH variety of a reduced word, via c = w_{0,J(word)} w:
//   holds                      <=>  c is a product of distinct simple
//                                   reflections (X_word spherical);
//   holds && dim_condition     <=>  c is a Coxeter element (X_word spherical
//                                   with dim B_{L(word)} = dim X_word).
SphericalVerdict bsdh_spherical_test(RootSystemPtr rs, const Word& word);

// First-letter variant: X_word is a spherical L(s_{i_1})-variety  <=>
// s_{i_1} w is a product of distinct simple reflections.  Requires a
// nonempty reduced word.
bool bsdh_spherical_first_letter(RootSystemPtr rs, const Word& word);

// G x_B X_word is spherical  <=>  the evaluated element is toric; the length
// obstruction l(w) > |S| rejects early.  Requires a reduced word.
bool gbsdh_spherical(RootSystemPtr rs, const Word& word);

// G x_B X_wB is spherical  <=>  X_wB is toric.
bool gschubert_spherical(const WeylElt& w);

// G x_B X_word is wonderful  <=>  X_word is toric, i.e. the word is reduced
// with pairwise distinct letters.  Non-reduced words allowed.
bool gbsdh_wonderful(RootSystemPtr rs, const Word& word);

// dim G x_B X_word = |R^+| + |word|.
int gbsdh_dimension(const RootSystem& rs, const Word& word);

}  // namespace cskit
