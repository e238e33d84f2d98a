#pragma once

#include <stdexcept>
#include <string>

namespace hsrlink {

// Bad user-supplied values: malformed scenario files, out-of-range flags,
// arguments outside an operation's domain. CLI exit code 2.
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

// A numeric routine could not do its job (no sign change on a root bracket,
// non-finite integrand). CLI exit code 3.
class solver_failure : public std::runtime_error {
public:
    explicit solver_failure(const std::string& what) : std::runtime_error(what) {}
};

// The requested rate pair cannot be met under the stated budget. CLI exit code 4.
class infeasible_demand : public std::runtime_error {
public:
    explicit infeasible_demand(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hsrlink
