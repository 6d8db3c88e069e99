#pragma once

#include <stdexcept>
#include <string>

namespace htt {

/// Malformed or inconsistent input (bad file, precondition violation).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration would exceed its configured budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Execution policy for the data-parallel kernels. Results are identical
/// either way; Parallel uses OpenMP when compiled in.
enum class Exec { Serial, Parallel };

} // namespace htt
