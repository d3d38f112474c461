#include "cskit/verify.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "cskit/decomp.hpp"
#include "cskit/posets.hpp"
#include "cskit/schubert.hpp"
#include "cskit/spherical.hpp"
#include "parallel.hpp"

namespace cskit {

namespace {

// Collects failures from parallel scans while keeping the listed sample
// deterministic (sorted at the end).
struct FailureLog {
  explicit FailureLog(size_t keep) : keep_(keep) {}
  void add(const std::string& what) {
    std::lock_guard<std::mutex> lock(mu_);
    ++count_;
    listed_.push_back(what);
  }
  void finish(VerifyReport& report) {
    std::sort(listed_.begin(), listed_.end());
    if (listed_.size() > keep_) listed_.resize(keep_);
    report.failures = count_;
    report.counterexamples = listed_;
  }

 private:
  std::mutex mu_;
  size_t keep_;
  long long count_ = 0;
  std::vector<std::string> listed_;
};

std::string describe(const WeylElt& w) {
  Word cw = canonical_word(w);
  std::string out = cw.empty() ? "e" : format_word(cw);
  if (w.rs().kind() == CartanType::A) out += " (" + format_one_line(one_line(w)) + ")";
  return out;
}

// ---- independent oracles ----------------------------------------------
//
// These recompute the tested facts from reduced words and plain group
// arithmetic: lengths come from the breadth-first enumeration depth, Coxeter
// elements from products over all generator orders, and the Bruhat order
// from subsequence containment of reduced words.

bool oracle_is_coxeter(const WeylGroup& g, const WeylElt& x) {
  const int n = g.rs().rank();
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  do {
    WeylElt prod = WeylElt::identity(g.rs_ptr());
    for (int i : order) prod = prod * WeylElt::simple_reflection(g.rs_ptr(), i);
    if (prod == x) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

bool is_subsequence(const Word& small, const Word& big) {
  size_t k = 0;
  for (size_t j = 0; j < big.size() && k < small.size(); ++j)
    if (big[j] == small[k]) ++k;
  return k == small.size();
}

bool oracle_bruhat_leq(const WeylElt& v, const WeylElt& w) {
  // some reduced word of w contains some reduced word of v as a subsequence
  std::vector<Word> words_v = reduced_words(v);
  for (const Word& ww : reduced_words(w))
    for (const Word& vw : words_v)
      if (is_subsequence(vw, ww)) return true;
  return false;
}

// ---- property suites ---------------------------------------------------

VerifyReport run_thm_spherical(const WeylGroup& g, const VerifyOptions& opts) {
  VerifyReport report{"thm-spherical", g.rs().name()};
  // oracle longest elements per subset, via greedy search over BFS lengths
  const int n = g.rs().rank();
  std::vector<size_t> longest(1u << n, 0);
  for (unsigned bits = 1; bits < (1u << n); ++bits) {
    size_t best = 0;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 1; i <= n; ++i) {
        if (!(bits >> (i - 1) & 1u)) continue;
        size_t cand = g.right_mult(best, i);
        if (g.length(cand) > g.length(best)) {
          best = cand;
          grew = true;
        }
      }
    }
    longest[bits] = best;
  }
  std::atomic<long long> instances{0};
  FailureLog failures(opts.max_listed);
  parallel_for(g.size(), opts.threads, [&](size_t x) {
    const WeylElt& w = g.element(x);
    SimpleSubset jw = left_descents(w);
    for (const SimpleSubset& J : all_subsets(jw)) {
      size_t w0j = longest[J.bits()];
      WeylElt c = g.element(w0j) * w;
      size_t ci = g.index_of(c);
      bool additive = g.length(ci) == g.length(x) - g.length(w0j);
      bool oracle = additive && g.length(ci) == n && oracle_is_coxeter(g, c);
      bool tested = spherical_levi_test(w, J).holds;
      instances.fetch_add(1, std::memory_order_relaxed);
      if (oracle != tested)
        failures.add("w=" + describe(w) + " J=" + J.to_string() + " oracle=" + (oracle ? "true" : "false") +
                     " spherical_levi_test=" + (tested ? "true" : "false"));
    }
  });
  report.instances = instances.load();
  failures.finish(report);
  return report;
}

VerifyReport run_thm_smooth_equiv(const WeylGroup& g, const VerifyOptions& opts) {
  VerifyReport report{"thm-smooth-equiv", g.rs().name()};
  std::atomic<long long> instances{0}, undecidable{0};
  FailureLog failures(opts.max_listed);
  parallel_for(g.size(), opts.threads, [&](size_t x) {
    const WeylElt& w = g.element(x);
    for (const SimpleSubset& J : all_subsets(left_descents(w))) {
      SphericalVerdict v = spherical_levi_test(w, J);
      if (!v.holds || !v.dim_condition) continue;
      SmoothEquivReport rep = check_theorem_smooth_equiv(w, J);
      instances.fetch_add(1, std::memory_order_relaxed);
      if (rep.consistent == TriState::no)
        failures.add("w=" + describe(w) + " J=" + J.to_string() + " legs=(" + to_string(rep.smooth_w) +
                     "," + to_string(rep.smooth_winv) + "," + to_string(rep.quotient_smooth_toric) + ")");
      else if (rep.consistent == TriState::unknown)
        undecidable.fetch_add(1, std::memory_order_relaxed);
    }
  });
  report.instances = instances.load();
  report.undecidable = undecidable.load();
  failures.finish(report);
  return report;
}

VerifyReport run_prop_four_equiv(const WeylGroup& g, const VerifyOptions& opts) {
  VerifyReport report{"prop-four-equiv", g.rs().name()};
  std::atomic<long long> instances{0};
  FailureLog failures(opts.max_listed);
  parallel_for(g.size(), opts.threads, [&](size_t x) {
    const WeylElt& w = g.element(x);
    bool toric = is_toric(w);
    bool gschubert = gschubert_spherical(w);
    bool relaxed_empty = spherical_relaxed_test(w, SimpleSubset()).holds;
    instances.fetch_add(1, std::memory_order_relaxed);
    if (gschubert != toric || relaxed_empty != toric) {
      failures.add("w=" + describe(w) + " is_toric=" + (toric ? "true" : "false") +
                   " gschubert_spherical=" + (gschubert ? "true" : "false"));
      return;
    }
    for (const Word& word : reduced_words(w)) {
      instances.fetch_add(1, std::memory_order_relaxed);
      if (gbsdh_spherical(g.rs_ptr(), word) != toric) {
        failures.add("w=" + describe(w) + " word=" + format_word(word) + " gbsdh_spherical != is_toric");
        return;
      }
    }
  });
  report.instances = instances.load();
  failures.finish(report);
  return report;
}

VerifyReport run_bool_lattice(const WeylGroup& g, const VerifyOptions& opts) {
  VerifyReport report{"bool-lattice", g.rs().name()};
  std::atomic<long long> instances{0};
  FailureLog failures(opts.max_listed);
  parallel_for(g.size(), opts.threads, [&](size_t x) {
    const WeylElt& w = g.element(x);
    if (!is_toric(w)) return;
    instances.fetch_add(1, std::memory_order_relaxed);
    IntervalPoset p = bruhat_interval(w);
    bool boolean = is_boolean(p);
    int coatoms = coatom_count(p);
    if (!boolean || coatoms != w.length())
      failures.add("w=" + describe(w) + " boolean=" + (boolean ? "true" : "false") +
                   " coatoms=" + std::to_string(coatoms) + " l=" + std::to_string(w.length()));
  });
  report.instances = instances.load();
  failures.finish(report);
  return report;
}

VerifyReport run_bruhat_oracle(const WeylGroup& g, const VerifyOptions& opts) {
  VerifyReport report{"bruhat-oracle", g.rs().name()};
  std::atomic<long long> instances{0};
  FailureLog failures(opts.max_listed);
  parallel_for(g.size(), opts.threads, [&](size_t xv) {
    const WeylElt& v = g.element(xv);
    for (size_t xw = 0; xw < g.size(); ++xw) {
      const WeylElt& w = g.element(xw);
      bool tested = bruhat_leq(v, w);
      bool oracle = oracle_bruhat_leq(v, w);
      instances.fetch_add(1, std::memory_order_relaxed);
      if (tested != oracle)
        failures.add("v=" + describe(v) + " w=" + describe(w) + " bruhat_leq=" + (tested ? "true" : "false") +
                     " oracle=" + (oracle ? "true" : "false"));
    }
  });
  report.instances = instances.load();
  failures.finish(report);
  return report;
}

VerifyReport run_bp_product(const WeylGroup& g, const VerifyOptions& opts) {
  VerifyReport report{"bp-product", g.rs().name()};
  std::atomic<long long> instances{0};
  FailureLog failures(opts.max_listed);
  parallel_for(g.size(), opts.threads, [&](size_t x) {
    const WeylElt& w = g.element(x);
    for (const SimpleSubset& J : all_subsets(left_descents(w))) {
      SphericalVerdict v = spherical_levi_test(w, J);
      if (!v.holds || !v.dim_condition) continue;
      instances.fetch_add(1, std::memory_order_relaxed);
      if (!is_bp_decomposition(inverse(w), SimpleSubset(), J))
        failures.add("w=" + describe(w) + " J=" + J.to_string() + " c^-1 w0J is not a BP-decomposition");
    }
  });
  report.instances = instances.load();
  failures.finish(report);
  return report;
}

}  // namespace

std::vector<std::string> verify_property_ids() {
  return {"thm-spherical", "thm-smooth-equiv", "prop-four-equiv", "bool-lattice", "bruhat-oracle",
          "bp-product"};
}

VerifyReport verify_property(const std::string& id, RootSystemPtr rs, const VerifyOptions& opts) {
  WeylGroup g = WeylGroup::enumerate(rs, opts.cap, opts.cache_dir);
  if (id == "thm-spherical") return run_thm_spherical(g, opts);
  if (id == "thm-smooth-equiv") return run_thm_smooth_equiv(g, opts);
  if (id == "prop-four-equiv") return run_prop_four_equiv(g, opts);
  if (id == "bool-lattice") return run_bool_lattice(g, opts);
  if (id == "bruhat-oracle") return run_bruhat_oracle(g, opts);
  if (id == "bp-product") return run_bp_product(g, opts);
  raise(errc::unknown_property, id);
}

std::string report_to_text(const VerifyReport& r) {
  std::ostringstream out;
  out << "property: " << r.property << "\n";
  out << "group: " << r.group << "\n";
  out << "instances: " << r.instances << "\n";
  if (r.undecidable > 0) out << "undecidable: " << r.undecidable << "\n";
  out << "failures: " << r.failures << "\n";
  for (const std::string& c : r.counterexamples) out << "counterexample: " << c << "\n";
  out << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace cskit
