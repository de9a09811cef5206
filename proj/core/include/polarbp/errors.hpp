#pragma once

#include <stdexcept>
#include <string>

namespace polarbp {

// Polar polytope of a rank-deficient atom set is unbounded; vertex
// enumeration is undefined.
struct unbounded_polar_error : std::runtime_error {
    explicit unbounded_polar_error(const std::string& what)
        : std::runtime_error(what) {}
};

// An enumeration would exceed the desk-scale subset budget.
struct guard_exceeded_error : std::runtime_error {
    explicit guard_exceeded_error(const std::string& what)
        : std::runtime_error(what) {}
};

// The requested linear system / program has no feasible point.
struct infeasible_error : std::runtime_error {
    explicit infeasible_error(const std::string& what)
        : std::runtime_error(what) {}
};

// A dual vector handed to primal recovery is not an optimal certificate
// for the given observation.
struct inconsistent_certificate_error : std::runtime_error {
    explicit inconsistent_certificate_error(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace polarbp
