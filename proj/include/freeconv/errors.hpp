#pragma once

#include <stdexcept>
#include <string>

namespace freeconv {

enum class errc {
  mass_not_one,
  overlapping_segments,
  dirac_mass,
  unbounded_support,
  pole_on_axis,
  zero_cauchy,
  psi_not_real,
  zero_f,
  empty_set,
  unsupported_law_time,
  bad_config,
};

// Single exception type carrying a machine-readable code. Validation-class
// errors map to CLI exit 2, numeric-class errors to exit 3.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}

  errc code() const { return code_; }

  bool is_numeric() const {
    switch (code_) {
      case errc::pole_on_axis:
      case errc::zero_cauchy:
      case errc::psi_not_real:
      case errc::zero_f:
        return true;
      default:
        return false;
    }
  }

  const char* code_name() const {
    switch (code_) {
      case errc::mass_not_one: return "MassNotOne";
      case errc::overlapping_segments: return "OverlappingSegments";
      case errc::dirac_mass: return "DiracMass";
      case errc::unbounded_support: return "UnboundedSupport";
      case errc::pole_on_axis: return "PoleOnAxis";
      case errc::zero_cauchy: return "ZeroCauchy";
      case errc::psi_not_real: return "PsiNotReal";
      case errc::zero_f: return "ZeroF";
      case errc::empty_set: return "EmptySet";
      case errc::unsupported_law_time: return "UnsupportedLawTime";
      case errc::bad_config: return "BadConfig";
    }
    return "Unknown";
  }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace freeconv
