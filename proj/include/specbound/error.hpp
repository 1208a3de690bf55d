#pragma once

#include <stdexcept>
#include <string>

namespace specbound {

enum class Errc {
    // input / format
    invalid_char,
    truncated_bits,
    nonzero_padding,
    trailing_data,
    unsupported_long_form,
    too_large,
    missing_header,
    vertex_out_of_range,
    self_loop,
    unknown_family,
    bad_param,
    not_symmetric,
    empty_subset,
    index_out_of_range,
    not_sorted,
    size_mismatch,
    bad_partition,
    disconnected,
    degree_too_high,
    nonpositive_input,
    weights_not_eigenvector,
    // bound availability
    vacuous_bound,
    unbounded_objective,
    degenerate_mesh,
    // numerical failures
    no_convergence,
    sign_ambiguity,
    interlacing_violated,
    lp_numerical_failure,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// Bad or out-of-contract inputs (CLI exit code 2).
class InputError : public Error {
public:
    using Error::Error;
};

// Numerical breakdown that should not occur on sane inputs (CLI exit code 3).
class NumericalError : public Error {
public:
    using Error::Error;
};

}  // namespace specbound
