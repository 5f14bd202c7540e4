#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

/// Raised when a result would leave the exact 128-bit range, or when an
/// enumeration would exceed its configured cell budget.  Counts in this
/// library are exact or absent; nothing ever wraps around.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a structural check that cannot fail for valid input fails
/// anyway.  Seeing this means a bug in the library, not bad input.
class internal_inconsistency : public std::logic_error {
public:
    explicit internal_inconsistency(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cayley
