#pragma once
/**
 * @file errors.hpp
 * @brief Exception types shared by the library.
 */

#include <stdexcept>
#include <string>

namespace xprod {

/// Operands of incompatible dimension. Always a caller bug.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A 1-based index outside 1..n.
struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Malformed external input: bad rational text, bad JSON, schema violation.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two structure constants that cannot both hold under first-pair antisymmetry.
struct TableConflict : InputError {
    using InputError::InputError;
};

namespace detail {

inline void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionMismatch(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
    }
}

inline void require_index(std::size_t i, std::size_t n, const char* what) {
    if (i < 1 || i > n) {
        throw IndexOutOfRange(std::string(what) + ": index " + std::to_string(i) +
                              " outside 1.." + std::to_string(n));
    }
}

} // namespace detail
} // namespace xprod
