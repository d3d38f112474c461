#pragma once

#include <stdexcept>
#include <string>

namespace cskit {

// Error codes for every failure mode the library reports.  The CLI maps
// usage-level errors to exit code 2.
enum class errc {
  invalid_type,
  index_out_of_range,
  not_positive_root,
  too_long,
  type_mismatch,
  not_minimal_rep,
  not_descent_subset,
  not_reduced,
  bad_subsets,
  hypothesis_failed,
  not_wonderful,
  group_too_large,
  io_error,
  unknown_property,
  parse_error,
  overflow,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_type: return "InvalidType";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::not_positive_root: return "NotPositiveRoot";
    case errc::too_long: return "TooLong";
    case errc::type_mismatch: return "TypeMismatch";
    case errc::not_minimal_rep: return "NotMinimalRep";
    case errc::not_descent_subset: return "NotDescentSubset";
    case errc::not_reduced: return "NotReduced";
    case errc::bad_subsets: return "BadSubsets";
    case errc::hypothesis_failed: return "HypothesisFailed";
    case errc::not_wonderful: return "NotWonderful";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::io_error: return "IoError";
    case errc::unknown_property: return "UnknownProperty";
    case errc::parse_error: return "ParseError";
    case errc::overflow: return "Overflow";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace cskit
