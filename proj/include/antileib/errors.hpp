#pragma once

#include <stdexcept>
#include <string>

namespace antileib {

/// Base class for all library errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed data: bad scalar strings, dimension mismatches, unknown names.
struct value_error : error {
  using error::error;
};

/// An operation received an input that fails the law it requires.
struct precondition_error : error {
  using error::error;
};

/// A constructed output failed the law its construction is supposed to
/// guarantee. Reaching this means either the input was forced past its
/// precondition or an internal invariant broke.
struct certification_error : error {
  using error::error;
};

/// A field was refused (non-prime modulus, small characteristic without the
/// override) or is inconsistent with the data it is applied to.
struct field_error : error {
  using error::error;
};

} // namespace antileib
