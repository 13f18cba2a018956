#pragma once

#include <stdexcept>
#include <string>

namespace stekdiff {

/// Thrown by solve_step when the scalar closure of the bordered system has a
/// numerically vanishing denominator.  advance() rethrows with the offending
/// time level attached (level() < 0 means "unknown").
class DegenerateSystem : public std::runtime_error {
public:
    explicit DegenerateSystem(const std::string& what, int level = -1)
        : std::runtime_error(what), level_(level) {}

    int level() const noexcept { return level_; }

private:
    int level_;
};

/// delta_roots: the characteristic discriminant (alpha^2-1)(beta^2-1) is not
/// strictly positive, so no real root pair exists.
class NoRealRoots : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// delta_roots: alpha == beta; the quadratic for delta degenerates.  (The
/// equal-parameter situation is handled without a transform elsewhere.)
class DegenerateParameters : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// transform_params: delta collides with a pole (-alpha, beta, +1 or -1) so
/// the transformed parameters are not well defined.
class DegenerateDelta : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace stekdiff
