#pragma once

#include <stdexcept>
#include <string>

namespace mirrorforge {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct not_a_unit : error {
    using error::error;
};

struct domain_error : error {
    using error::error;
};

struct out_of_order : error {
    using error::error;
};

struct invalid_normalization : error {
    using error::error;
};

struct unimplemented_range : error {
    using error::error;
};

struct invalid_argument : error {
    using error::error;
};

// Thrown when a quantity that must be rational still carries λ or ξ terms.
struct cancellation_failure : error {
    std::string residual;
    explicit cancellation_failure(std::string res)
        : error("cancellation failure; residual " + res), residual(std::move(res)) {}
};

}  // namespace mirrorforge
