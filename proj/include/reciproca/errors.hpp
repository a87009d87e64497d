#pragma once

#include <stdexcept>
#include <string>

namespace reciproca {

// Domain error codes. The CLI reports the symbolic name in its structured
// output, so names are part of the public surface.
enum class errc {
  dimension_mismatch,
  singular_matrix,
  superluminal_rate,
  rate_bound_exceeded,
  degenerate_denominator,
  nonzero_u1_param,
  step_too_large,
  singular_hessian,
  no_convergence,
  imaginary_omega,
  not_symplectic,
  not_in_group,
  unknown_label,
  rank_deficient,
  no_commuting_combination,
  invalid_argument,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& message);
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

}  // namespace reciproca
