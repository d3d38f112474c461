#include "cskit/classify.hpp"

#include <sstream>

#include "json.hpp"
#include "parallel.hpp"

namespace cskit {

namespace {

std::vector<std::vector<int>> subsets_to_lists(const std::vector<SimpleSubset>& subsets) {
  std::vector<std::vector<int>> out;
  for (const SimpleSubset& s : subsets) out.push_back(s.indices());
  return out;
}

}  // namespace

ClassificationRecord classify_element(const WeylElt& w) {
  ClassificationRecord r;
  r.group = w.rs().name();
  if (w.rs().kind() == CartanType::A) r.one_line = format_one_line(one_line(w));
  r.canonical_reduced_word = format_word(canonical_word(w));
  r.length = w.length();
  r.support = support(w).indices();
  r.left_descents = left_descents(w).indices();
  r.is_toric = is_toric(w);
  r.is_coxeter = is_coxeter(w);
  r.spherical_levis = subsets_to_lists(spherical_levi_subsets(w));
  r.spherical_relaxed_levis = subsets_to_lists(spherical_relaxed_subsets(w));
  r.smooth = is_smooth(w);
  r.inverse_smooth = is_smooth(inverse(w));
  IntervalPoset interval = bruhat_interval(w);
  Polynomial poly = poincare(w);
  r.rationally_smooth = is_palindromic(poly);
  r.poincare_coeffs = poly.coeffs();
  r.interval_size = poly.eval_at_one();
  r.coatoms = coatom_count(interval);
  r.boolean_interval = is_boolean(interval);
  return r;
}

std::vector<ClassificationRecord> classify_group(RootSystemPtr rs, const ClassifyOptions& opts) {
  WeylGroup group = WeylGroup::enumerate(rs, opts.cap, opts.cache_dir);
  std::vector<ClassificationRecord> records(group.size());
  parallel_for(group.size(), opts.threads,
               [&](size_t x) { records[x] = classify_element(group.element(x)); });
  return records;
}

namespace {

nlohmann::json tri_json(TriState t) { return std::string(to_string(t)); }

nlohmann::json record_to_json(const ClassificationRecord& r) {
  nlohmann::json j;
  j["group"] = r.group;
  if (!r.one_line.empty()) j["one_line"] = r.one_line;
  j["canonical_reduced_word"] = r.canonical_reduced_word;
  j["length"] = r.length;
  j["support"] = r.support;
  j["left_descents"] = r.left_descents;
  j["is_toric"] = r.is_toric;
  j["is_coxeter"] = r.is_coxeter;
  j["spherical_levis"] = r.spherical_levis;
  j["spherical_relaxed_levis"] = r.spherical_relaxed_levis;
  j["smooth"] = tri_json(r.smooth);
  j["rationally_smooth"] = r.rationally_smooth;
  j["inverse_smooth"] = tri_json(r.inverse_smooth);
  j["poincare_coeffs"] = r.poincare_coeffs;
  j["interval_size"] = r.interval_size;
  j["coatoms"] = r.coatoms;
  j["boolean_interval"] = r.boolean_interval;
  return j;
}

template <typename T>
std::string join_list(const std::vector<T>& xs, const std::string& sep) {
  std::string out;
  for (size_t k = 0; k < xs.size(); ++k) {
    if (k) out += sep;
    out += std::to_string(xs[k]);
  }
  return out;
}

std::string join_subsets(const std::vector<std::vector<int>>& subsets) {
  // CSV cell: subsets joined by ';', members by '+': "1+3;2"
  std::string out;
  for (size_t k = 0; k < subsets.size(); ++k) {
    if (k) out += ";";
    out += subsets[k].empty() ? "-" : join_list(subsets[k], "+");
  }
  return out;
}

}  // namespace

std::string records_to_json(const std::vector<ClassificationRecord>& records) {
  nlohmann::json j;
  j["schema"] = 1;
  j["group"] = records.empty() ? "" : records.front().group;
  nlohmann::json arr = nlohmann::json::array();
  for (const ClassificationRecord& r : records) arr.push_back(record_to_json(r));
  j["records"] = arr;
  return j.dump(2) + "\n";
}

std::string records_to_csv(const std::vector<ClassificationRecord>& records) {
  std::string out =
      "group,one_line,canonical_reduced_word,length,support,left_descents,is_toric,is_coxeter,"
      "spherical_levis,spherical_relaxed_levis,smooth,rationally_smooth,inverse_smooth,"
      "poincare_coeffs,interval_size,coatoms,boolean_interval\n";
  for (const ClassificationRecord& r : records) {
    out += r.group;
    out += "," + r.one_line;
    out += "," + format_word(parse_word(r.canonical_reduced_word), ';');
    out += "," + std::to_string(r.length);
    out += "," + join_list(r.support, ";");
    out += "," + join_list(r.left_descents, ";");
    out += std::string(",") + (r.is_toric ? "true" : "false");
    out += std::string(",") + (r.is_coxeter ? "true" : "false");
    out += "," + join_subsets(r.spherical_levis);
    out += "," + join_subsets(r.spherical_relaxed_levis);
    out += std::string(",") + to_string(r.smooth);
    out += std::string(",") + (r.rationally_smooth ? "true" : "false");
    out += std::string(",") + to_string(r.inverse_smooth);
    out += "," + join_list(r.poincare_coeffs, ";");
    out += "," + std::to_string(r.interval_size);
    out += "," + std::to_string(r.coatoms);
    out += std::string(",") + (r.boolean_interval ? "true" : "false");
    out += "\n";
  }
  return out;
}

namespace {

std::string verdict_line(const SphericalVerdict& v) {
  std::string out = "holds=" + std::string(v.holds ? "true" : "false");
  out += " l_w=" + std::to_string(v.len_w);
  out += " l_w0J=" + std::to_string(v.len_w0j);
  out += " l_c=" + std::to_string(v.len_c);
  out += " dim_condition=" + std::string(v.dim_condition ? "true" : "false");
  if (v.coxeter_part) {
    Word cw = canonical_word(*v.coxeter_part);
    out += " c=" + (cw.empty() ? std::string("e") : format_word(cw));
  }
  return out;
}

std::string roots_line(const RootSystem& rs, const std::vector<Root>& roots) {
  std::string out = "[";
  for (size_t k = 0; k < roots.size(); ++k) {
    if (k) out += ", ";
    out += rs.root_to_string(roots[k]);
  }
  return out + "]";
}

}  // namespace

std::string verdict_to_json(const SphericalVerdict& v) {
  nlohmann::json j;
  j["holds"] = v.holds;
  if (v.coxeter_part)
    j["coxeter_part_word"] = format_word(canonical_word(*v.coxeter_part));
  else
    j["coxeter_part_word"] = nullptr;
  j["l_w"] = v.len_w;
  j["l_w0J"] = v.len_w0j;
  j["l_c"] = v.len_c;
  j["dim_condition"] = v.dim_condition;
  return j.dump();
}

std::string inspect_report(RootSystemPtr rs, const std::optional<Word>& word,
                           const std::optional<std::vector<int>>& oneline) {
  std::ostringstream out;
  out << "group: " << rs->name() << "\n";

  bool word_reduced = true;
  WeylElt w = WeylElt::identity(rs);
  if (word) {
    BsdhWord bw = make_bsdh_word(rs, *word);
    w = from_word(rs, *word);
    word_reduced = bw.reduced;
    out << "word: " << format_word(*word) << "\n";
    out << "reduced: " << (word_reduced ? "true" : "false") << "\n";
  } else {
    w = from_one_line(rs, *oneline);
  }

  if (word && !word_reduced) {
    // Word-level data only; the element-level record would conflate the
    // BSDH variety with the Schubert variety of the evaluated product.
    out << "warning: NotReduced - word-level operations only\n";
    out << "bsdh_descent_set: " << bsdh_descent_set(rs, *word).to_string() << "\n";
    out << "gbsdh_wonderful: " << (gbsdh_wonderful(rs, *word) ? "true" : "false") << "\n";
    out << "gbsdh_dimension: " << gbsdh_dimension(*rs, *word) << "\n";
    out << "evaluated_element_length: " << w.length() << "\n";
    return out.str();
  }

  ClassificationRecord r = classify_element(w);
  if (!r.one_line.empty()) out << "one_line: " << r.one_line << "\n";
  out << "canonical_reduced_word: " << (r.canonical_reduced_word.empty() ? "e" : r.canonical_reduced_word)
      << "\n";
  out << "length: " << r.length << "\n";
  out << "support: " << SimpleSubset::from_indices(r.support, rs->rank()).to_string() << "\n";
  out << "left_descents: " << SimpleSubset::from_indices(r.left_descents, rs->rank()).to_string() << "\n";
  out << "is_toric: " << (r.is_toric ? "true" : "false") << "\n";
  out << "is_coxeter: " << (r.is_coxeter ? "true" : "false") << "\n";
  out << "smooth: " << to_string(r.smooth) << "\n";
  out << "rationally_smooth: " << (r.rationally_smooth ? "true" : "false") << "\n";
  out << "inverse_smooth: " << to_string(r.inverse_smooth) << "\n";
  out << "poincare: " << join_list(r.poincare_coeffs, std::string(",")) << "\n";
  out << "interval_size: " << r.interval_size << "\n";
  out << "coatoms: " << r.coatoms << "\n";
  out << "boolean_interval: " << (r.boolean_interval ? "true" : "false") << "\n";

  SimpleSubset jw = left_descents(w);
  for (const SimpleSubset& J : all_subsets(jw)) {
    R1R2Partition part = r1_r2_partition(w, J);
    out << "r1_r2 J=" << J.to_string() << ": |R1|=" << part.r1.size() << " |R2|=" << part.r2.size()
        << " R1=" << roots_line(*rs, part.r1) << " R2=" << roots_line(*rs, part.r2) << "\n";
  }
  for (const SimpleSubset& J : all_subsets(jw)) {
    out << "spherical_levi J=" << J.to_string() << ": " << verdict_line(spherical_levi_test(w, J)) << "\n";
    out << "spherical_relaxed J=" << J.to_string() << ": " << verdict_line(spherical_relaxed_test(w, J))
        << "\n";
  }

  if (word && !word->empty()) {
    SimpleSubset jword = bsdh_descent_set(rs, *word);
    out << "bsdh_descent_set: " << jword.to_string() << "\n";
    out << "bsdh_spherical: " << verdict_line(bsdh_spherical_test(rs, *word)) << "\n";
    out << "bsdh_spherical_first_letter: " << (bsdh_spherical_first_letter(rs, *word) ? "true" : "false")
        << "\n";
    out << "gbsdh_spherical: " << (gbsdh_spherical(rs, *word) ? "true" : "false") << "\n";
    out << "gbsdh_wonderful: " << (gbsdh_wonderful(rs, *word) ? "true" : "false") << "\n";
    out << "gbsdh_dimension: " << gbsdh_dimension(*rs, *word) << "\n";
  }

  for (const SimpleSubset& J : all_subsets(jw)) {
    SphericalVerdict v = spherical_levi_test(w, J);
    if (!v.holds || !v.dim_condition) continue;
    SmoothEquivReport rep = check_theorem_smooth_equiv(w, J);
    out << "thm_smooth_equiv J=" << J.to_string() << ": smooth_w=" << to_string(rep.smooth_w)
        << " smooth_winv=" << to_string(rep.smooth_winv)
        << " quotient_smooth_toric=" << to_string(rep.quotient_smooth_toric)
        << " quotient_parabolic_poincare=" << rep.quotient_poly.to_string()
        << " consistent=" << to_string(rep.consistent) << "\n";
  }

  out << "bp_decompositions (I={}):\n";
  for (const SimpleSubset& K : all_subsets(SimpleSubset::full(rs->rank()))) {
    if (K.empty()) continue;
    ParabolicDecomposition d = parabolic_decompose(w, SimpleSubset(), K);
    Word vw = canonical_word(d.v), uw = canonical_word(d.u);
    out << "  K=" << K.to_string() << ": v=" << (vw.empty() ? "e" : format_word(vw))
        << " u=" << (uw.empty() ? "e" : format_word(uw)) << " l_v=" << d.v.length()
        << " l_u=" << d.u.length()
        << " bp=" << (is_bp_decomposition(w, SimpleSubset(), K) ? "true" : "false") << "\n";
  }
  return out.str();
}

}  // namespace cskit
