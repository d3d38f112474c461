#include "cskit/decomp.hpp"

namespace cskit {

ParabolicDecomposition parabolic_decompose(const WeylElt& w, const SimpleSubset& I, const SimpleSubset& K) {
  if (!I.subset_of(K)) raise(errc::bad_subsets, "I = " + I.to_string() + " is not contained in K = " + K.to_string());
  if (!is_min_rep(w, I)) raise(errc::not_minimal_rep, "w is not a minimal coset representative for I = " + I.to_string());
  WeylElt v = min_coset_rep(w, K);
  WeylElt u = inverse(v) * w;
  return ParabolicDecomposition{v, u, I, K};
}

bool is_bp_decomposition(const WeylElt& w, const SimpleSubset& I, const SimpleSubset& K) {
  ParabolicDecomposition d = parabolic_decompose(w, I, K);
  return parabolic_poincare(w, I) == parabolic_poincare(d.u, I) * parabolic_poincare(d.v, K);
}

namespace {

TriState quotient_leg(const WeylElt& z, const SimpleSubset& J, const Polynomial& poly) {
  bool toric = is_distinct_product(z);
  bool palindromic = is_palindromic(poly);
  if (!toric || !palindromic) return TriState::no;
  return z.rs().simply_laced() ? TriState::yes : TriState::unknown;
}

TriState combine_consistency(TriState a, TriState b, TriState c) {
  auto decided = [](TriState t) { return t != TriState::unknown; };
  TriState legs[3] = {a, b, c};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (decided(legs[i]) && decided(legs[j]) && legs[i] != legs[j]) return TriState::no;
  if (decided(a) && decided(b) && decided(c)) return TriState::yes;
  return TriState::unknown;
}

}  // namespace

SmoothEquivReport check_theorem_smooth_equiv(const WeylElt& w, const SimpleSubset& J) {
  SphericalVerdict verdict = spherical_levi_test(w, J);
  if (!verdict.holds || !verdict.dim_condition)
    raise(errc::hypothesis_failed,
          "spherical_levi_test does not hold with the dimension condition for J = " + J.to_string());
  const WeylElt& c = *verdict.coxeter_part;
  SmoothEquivReport report;
  report.smooth_w = is_smooth(w);
  report.smooth_winv = is_smooth(inverse(w));
  report.quotient_rep = min_coset_rep(inverse(c), J);
  report.quotient_poly = parabolic_poincare(*report.quotient_rep, J);
  report.quotient_smooth_toric = quotient_leg(*report.quotient_rep, J, report.quotient_poly);
  report.consistent = combine_consistency(report.smooth_w, report.smooth_winv, report.quotient_smooth_toric);
  return report;
}

}  // namespace cskit
