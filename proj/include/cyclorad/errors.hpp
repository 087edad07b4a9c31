#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclorad {

enum class errc {
  too_few_sides,
  non_positive_side,
  degenerate_polygon,
  chord_exceeds_diameter,
  no_convergence,
  no_root,
  no_qualifying_root,
  invalid_star,
  degree_overflow,
  divergent_term,
  inconsistent_classification,
  not_closed,
  parse_error,
};

/// Stable error code string, used verbatim in CLI/JSON output.
constexpr std::string_view errc_name(errc code) {
  switch (code) {
    case errc::too_few_sides: return "TooFewSides";
    case errc::non_positive_side: return "NonPositiveSide";
    case errc::degenerate_polygon: return "DegeneratePolygon";
    case errc::chord_exceeds_diameter: return "ChordExceedsDiameter";
    case errc::no_convergence: return "NoConvergence";
    case errc::no_root: return "NoRoot";
    case errc::no_qualifying_root: return "NoQualifyingRoot";
    case errc::invalid_star: return "InvalidStar";
    case errc::degree_overflow: return "DegreeOverflow";
    case errc::divergent_term: return "DivergentTerm";
    case errc::inconsistent_classification: return "InconsistentClassification";
    case errc::not_closed: return "NotClosed";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace cyclorad
