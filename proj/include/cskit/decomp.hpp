#pragma once

#include "cskit/schubert.hpp"
#include "cskit/spherical.hpp"

namespace cskit {

// Right parabolic decomposition w = v u with v in W^K and u in W_K n W^I.
struct ParabolicDecomposition {
  WeylElt v;
  WeylElt u;
  SimpleSubset I;
  SimpleSubset K;
};

// Requires w in W^I and I inside K.  K may be empty, giving the trivial
// decomposition v = w, u = e.
ParabolicDecomposition parabolic_decompose(const WeylElt& w, const SimpleSubset& I, const SimpleSubset& K);

// BP-decomposition test: the Poincare polynomial of X_{wP_I} equals the
// product of the Poincare polynomials of X_{uP_I} and X_{vP_K}.
bool is_bp_decomposition(const WeylElt& w, const SimpleSubset& I, const SimpleSubset& K);

// Three-way smoothness equivalence for spherical Schubert varieties:
//   (1) X_wB smooth, (2) X_{w^-1 B} smooth, (3) X_{c^-1 P_J} smooth toric,
// with c = w_{0,J} w.  Clause (3) is checked combinatorially: the minimal
// representative of c^-1 in W^J is a distinct product with palindromic
// parabolic Poincare polynomial (exact in simply-laced types; elsewhere a
// palindromic polynomial leaves the leg undecided).
struct SmoothEquivReport {
  TriState smooth_w = TriState::unknown;
  TriState smooth_winv = TriState::unknown;
  TriState quotient_smooth_toric = TriState::unknown;
  // yes: all three legs decided and equal; no: two decided legs differ;
  // unknown: no contradiction but at least one leg undecided.
  TriState consistent = TriState::unknown;
  Polynomial quotient_poly;
  std::optional<WeylElt> quotient_rep;
};

// Requires spherical_levi_test(w, J) to hold with its dimension condition.
SmoothEquivReport check_theorem_smooth_equiv(const WeylElt& w, const SimpleSubset& J);

}  // namespace cskit
