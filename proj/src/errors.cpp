#include "reciproca/errors.hpp"

namespace reciproca {

const char* errc_name(errc code) {
  switch (code) {
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::superluminal_rate: return "SuperluminalRate";
    case errc::rate_bound_exceeded: return "RateBoundExceeded";
    case errc::degenerate_denominator: return "DegenerateDenominator";
    case errc::nonzero_u1_param: return "NonzeroU1Param";
    case errc::step_too_large: return "StepTooLarge";
    case errc::singular_hessian: return "SingularHessian";
    case errc::no_convergence: return "NoConvergence";
    case errc::imaginary_omega: return "ImaginaryOmega";
    case errc::not_symplectic: return "NotSymplectic";
    case errc::not_in_group: return "NotInGroup";
    case errc::unknown_label: return "UnknownLabel";
    case errc::rank_deficient: return "RankDeficient";
    case errc::no_commuting_combination: return "NoCommutingCombination";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

error::error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(errc code, const std::string& message) { throw error(code, message); }

}  // namespace reciproca
