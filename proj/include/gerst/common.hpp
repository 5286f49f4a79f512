#ifndef GERST_COMMON_HPP
#define GERST_COMMON_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace gerst {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction of an object larger than the configured entry budget.
struct ResourceLimitError : Error {
    using Error::Error;
};

// Bad values: non-prime modulus, singular matrix, invalid group table, ...
struct InvalidInputError : Error {
    using Error::Error;
};

// Operands from different fields or with incompatible shapes.
struct FieldMismatchError : InvalidInputError {
    using InvalidInputError::InvalidInputError;
};

// Malformed files or scalar literals.
struct ParseError : Error {
    using Error::Error;
};

namespace limits {

// Global entry-count budget for dense allocations (matrices, cochain
// tensors). Default 1e8 entries; the environment variable
// GERST_MAX_ENTRIES overrides it at startup, set_max_entries() at runtime.
std::size_t max_entries();
void set_max_entries(std::optional<std::size_t> value);

// Throws ResourceLimitError naming the guard and the offending size.
void check_entries(std::size_t needed, const std::string& what);

}  // namespace limits

}  // namespace gerst

#endif
