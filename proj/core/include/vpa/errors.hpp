#pragma once

#include <stdexcept>
#include <string>

namespace vpa {

enum class Errc {
    bad_field,
    char_two_rejected,
    field_mismatch,
    division_by_zero,
    bad_scalar,
    dimension_mismatch,
    degenerate_form,
    zero_target,
    oracle_too_large,
    empty_list,
    zero_mu,
    zero_norm,
    too_many_norms,
    not_an_algebra,
    bad_dimension,
    norm_mismatch,
    not_independent,
    not_a_base,
    verification_failed,
    not_composition,
    commutator_escape,
    schema_error,
    shape_error,
    io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace vpa
