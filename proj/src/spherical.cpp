#include "cskit/spherical.hpp"

#include <algorithm>

namespace cskit {

BsdhWord make_bsdh_word(RootSystemPtr rs, const Word& word) {
  for (int i : word)
    if (i < 1 || i > rs->rank()) raise(errc::index_out_of_range, "generator index " + std::to_string(i));
  WeylElt w = from_word(rs, word);
  return BsdhWord{word, w.length() == static_cast<int>(word.size())};
}

R1R2Partition r1_r2_partition(const WeylElt& w, const SimpleSubset& J) {
  if (!J.subset_of(left_descents(w)))
    raise(errc::not_descent_subset, "J = " + J.to_string() + " is not contained in the left descent set");
  R1R2Partition out;
  for (const Root& beta : inversion_set(w)) {
    if (w.rs().support(beta).subset_of(J))
      out.r1.push_back(beta);
    else
      out.r2.push_back(beta);
  }
  return out;
}

namespace {

SphericalVerdict factorization_verdict(const WeylElt& w, const SimpleSubset& J, bool require_coxeter) {
  if (!J.subset_of(left_descents(w)))
    raise(errc::not_descent_subset, "J = " + J.to_string() + " is not contained in the left descent set");
  WeylElt w0j = longest_element(w.rs_ptr(), J);
  WeylElt c = w0j * w;
  SphericalVerdict v;
  v.len_w = w.length();
  v.len_w0j = w0j.length();
  v.len_c = c.length();
  v.dim_condition = v.len_c == w.rank();
  bool additive = v.len_c == v.len_w - v.len_w0j;
  bool factor_ok = require_coxeter ? is_coxeter(c) : is_distinct_product(c);
  v.holds = additive && factor_ok;
  if (v.holds) v.coxeter_part = c;
  return v;
}

}  // namespace

SphericalVerdict spherical_levi_test(const WeylElt& w, const SimpleSubset& J) {
  return factorization_verdict(w, J, /*require_coxeter=*/true);
}

SphericalVerdict spherical_relaxed_test(const WeylElt& w, const SimpleSubset& J) {
  return factorization_verdict(w, J, /*require_coxeter=*/false);
}

std::vector<SimpleSubset> spherical_levi_subsets(const WeylElt& w) {
  std::vector<SimpleSubset> out;
  for (const SimpleSubset& J : all_subsets(left_descents(w)))
    if (spherical_levi_test(w, J).holds) out.push_back(J);
  return out;
}

std::vector<SimpleSubset> spherical_relaxed_subsets(const WeylElt& w) {
  std::vector<SimpleSubset> out;
  for (const SimpleSubset& J : all_subsets(left_descents(w)))
    if (spherical_relaxed_test(w, J).holds) out.push_back(J);
  return out;
}

SimpleSubset bsdh_descent_set(RootSystemPtr rs, const Word& word) {
  SimpleSubset J;
  for (size_t j = 0; j < word.size(); ++j) {
    int ij = word[j];
    if (ij < 1 || ij > rs->rank()) raise(errc::index_out_of_range, "generator index " + std::to_string(ij));
    bool commutes = true;
    for (size_t k = 0; k < j && commutes; ++k) {
      int ik = word[k];
      if (ik != ij && rs->cartan(ij, ik) != 0) commutes = false;
    }
    if (commutes) J.add(ij);
  }
  return J;
}

namespace {

void require_reduced(RootSystemPtr rs, const Word& word) {
  if (!make_bsdh_word(rs, word).reduced)
    raise(errc::not_reduced, "word " + format_word(word) + " is not reduced");
}

}  // namespace

SphericalVerdict bsdh_spherical_test(RootSystemPtr rs, const Word& word) {
  require_reduced(rs, word);
  WeylElt w = from_word(rs, word);
  SimpleSubset J = bsdh_descent_set(rs, word);
  // J(word) lies inside the left descents of w, so the factorization through
  // w_{0,J(word)} is automatically length additive.
  return spherical_relaxed_test(w, J);
}

bool bsdh_spherical_first_letter(RootSystemPtr rs, const Word& word) {
  require_reduced(rs, word);
  if (word.empty()) raise(errc::not_reduced, "the first-letter test needs a nonempty word");
  WeylElt w = from_word(rs, word);
  return is_distinct_product(WeylElt::simple_reflection(rs, word.front()) * w);
}

bool gbsdh_spherical(RootSystemPtr rs, const Word& word) {
  require_reduced(rs, word);
  WeylElt w = from_word(rs, word);
  if (w.length() > rs->rank()) return false;  // dim G x_B X > dim B
  return is_toric(w);
}

bool gschubert_spherical(const WeylElt& w) { return is_toric(w); }

bool gbsdh_wonderful(RootSystemPtr rs, const Word& word) {
  for (int i : word)
    if (i < 1 || i > rs->rank()) raise(errc::index_out_of_range, "generator index " + std::to_string(i));
  Word sorted = word;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return from_word(rs, word).length() == static_cast<int>(word.size());
}

int gbsdh_dimension(const RootSystem& rs, const Word& word) {
  return static_cast<int>(rs.positive_roots().size() + word.size());
}

}  // namespace cskit
