#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cskit/weyl.hpp"

namespace cskit {

enum class TriState { yes, no, unknown };

inline const char* to_string(TriState t) {
  switch (t) {
    case TriState::yes: return "true";
    case TriState::no: return "false";
    case TriState::unknown: return "unknown";
  }
  return "unknown";
}

// Rank generating functions.  Coefficients stay small (bounded by |W|), but
// arithmetic is overflow-checked anyway.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<long long> coeffs);

  static Polynomial one() { return Polynomial({1}); }

  const std::vector<long long>& coeffs() const { return coeffs_; }
  long long coeff(int k) const { return k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : 0; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for the zero polynomial
  long long eval_at_one() const;

  Polynomial operator*(const Polynomial& other) const;
  bool operator==(const Polynomial& other) const = default;

  std::string to_string() const;  // coefficient list "1,2,2,1"

 private:
  std::vector<long long> coeffs_;  // coeffs_[k] = coefficient of q^k
};

// coeffs[k] = coefficient of q^k, so coeffs[deg-k] mirrors coeffs[k].
bool is_palindromic(const Polynomial& p);

// Poincare polynomial of X_wB: sum over v <= w of q^{l(v)}.
Polynomial poincare(const WeylElt& w);

// Poincare polynomial of X_{wP_I}: sum over { v in W^I : v <= w }.
// Requires w in W^I.
Polynomial parabolic_poincare(const WeylElt& w, const SimpleSubset& I);

// X_wB is a toric variety iff w is a product of distinct simple reflections.
bool is_toric(const WeylElt& w);

// Type A pattern containment: some subsequence of w order-isomorphic to p.
bool contains_pattern(const std::vector<int>& w, const std::vector<int>& p);

// Smoothness of X_wB.
//   type A:        avoids 3412 and 4231 (Lakshmibai-Sandhya);
//   types D, E:    Poincare polynomial palindromic (rationally smooth =
//                  smooth in simply-laced types);
//   types B,C,F,G: `no` when not palindromic, otherwise `unknown`.
TriState is_smooth(const WeylElt& w);

// Searches the reduced words of w (type A) for the shape: a contiguous
// segment s_{j+1} s_j s_{j+2} s_{j+1}, with s_{j+1} occurring exactly twice
// overall and every other letter at most once.  Returns the witness j.
std::optional<int> has_lmp_shape(const WeylElt& w, int guard = kReducedWordGuard);

}  // namespace cskit
