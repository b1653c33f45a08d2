#pragma once

#include "swdual/errors.hpp"

#include <cstdlib>
#include <string>

namespace swdual {

// Resource caps that guard every potentially explosive computation.  All
// limits can be tightened or relaxed per run; environment variables
// (SWDUAL_MAX_TENSOR_DIM, SWDUAL_MAX_GROUP_ORDER, SWDUAL_MAX_FACTORIAL)
// override the built-in defaults, and command-line flags override both.
struct Caps {
    long long max_tensor_dim = 4096;    // largest allowed n^r
    long long max_group_order = 100000; // largest group we will enumerate
    long long max_factorial = 5040;     // largest r! we will enumerate (r <= 7)

    // Elimination guard: span/commutant/closure computations flatten D x D
    // operators into D^2-dimensional vectors; anything with D^2 above this
    // is refused with a resource error.  The default keeps the worst case
    // at D = 128 (n = 2, r = 7), i.e. desk scale.
    long long max_elim_dim = 16384;

    // Largest finite field we will enumerate element-by-element.
    long long max_field_enum = 4096;
};

namespace detail {
inline long long env_cap(const char* name, long long fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    long long parsed = std::strtoll(v, &end, 10);
    if (end == v || *end != '\0' || parsed <= 0) {
        throw UsageError(std::string("environment variable ") + name +
                         " must be a positive integer, got '" + v + "'");
    }
    return parsed;
}
} // namespace detail

// Caps with environment overrides applied.
inline Caps caps_from_env() {
    Caps caps;
    caps.max_tensor_dim = detail::env_cap("SWDUAL_MAX_TENSOR_DIM", caps.max_tensor_dim);
    caps.max_group_order = detail::env_cap("SWDUAL_MAX_GROUP_ORDER", caps.max_group_order);
    caps.max_factorial = detail::env_cap("SWDUAL_MAX_FACTORIAL", caps.max_factorial);
    caps.max_elim_dim = detail::env_cap("SWDUAL_MAX_ELIM_DIM", caps.max_elim_dim);
    caps.max_field_enum = detail::env_cap("SWDUAL_MAX_FIELD_ENUM", caps.max_field_enum);
    return caps;
}

} // namespace swdual
