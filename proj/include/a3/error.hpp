#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace a3 {

// Machine-readable failure codes.  Every throwing path in the library maps
// to exactly one of these; the CLI surfaces them verbatim in reports.
enum class errc {
  not_invertible,
  singular_evaluation,
  parse_error,
  degenerate_frame,
  non_surjective_frame,
  resolvent_singular,
  contour_does_not_enclose,
  quadrature_not_converged,
  limit_not_converged,
  domain_exit,
  hypothesis_violated,
  not_monogenic,
  grid_too_small,
  non_finite_sample,
  fiber_inconsistent,
  interpolation_failed,
  ill_conditioned_fit,
  config_error,
  unknown_fixture,
};

inline std::string_view code_name(errc c) {
  switch (c) {
    case errc::not_invertible: return "NOT_INVERTIBLE";
    case errc::singular_evaluation: return "SINGULAR_EVALUATION";
    case errc::parse_error: return "PARSE_ERROR";
    case errc::degenerate_frame: return "DEGENERATE_FRAME";
    case errc::non_surjective_frame: return "NON_SURJECTIVE_FRAME";
    case errc::resolvent_singular: return "RESOLVENT_SINGULAR";
    case errc::contour_does_not_enclose: return "CONTOUR_DOES_NOT_ENCLOSE";
    case errc::quadrature_not_converged: return "QUADRATURE_NOT_CONVERGED";
    case errc::limit_not_converged: return "LIMIT_NOT_CONVERGED";
    case errc::domain_exit: return "DOMAIN_EXIT";
    case errc::hypothesis_violated: return "HYPOTHESIS_VIOLATED";
    case errc::not_monogenic: return "NOT_MONOGENIC";
    case errc::grid_too_small: return "GRID_TOO_SMALL";
    case errc::non_finite_sample: return "NON_FINITE_SAMPLE";
    case errc::fiber_inconsistent: return "FIBER_INCONSISTENT";
    case errc::interpolation_failed: return "INTERPOLATION_FAILED";
    case errc::ill_conditioned_fit: return "ILL_CONDITIONED_FIT";
    case errc::config_error: return "CONFIG_ERROR";
    case errc::unknown_fixture: return "UNKNOWN_FIXTURE";
  }
  return "UNKNOWN";
}

class a3_error : public std::runtime_error {
 public:
  a3_error(errc code, const std::string& message)
      : std::runtime_error(std::string(code_name(code)) + ": " + message),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

// Parse failures additionally carry the byte offset into the input and a
// human-readable description of the expected token set.
class parse_failure : public a3_error {
 public:
  parse_failure(std::size_t offset, const std::string& expected)
      : a3_error(errc::parse_error,
                 "offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset),
        expected_(expected) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw a3_error(code, message);
}

}  // namespace a3
