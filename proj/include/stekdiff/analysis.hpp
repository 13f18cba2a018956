#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stekdiff/field.hpp"

namespace stekdiff {

/// Which a-priori estimate covers a parameter triple (alpha, beta, gamma).
enum class StabilityCase {
    Direct,     ///< alpha == beta (!= 1), gamma <= 0: estimate holds as-is
    Case1,      ///< |alpha| < 1, |beta| < 1, gamma <= 0: via delta_1 transform
    Case2,      ///< |alpha| > 1, |beta| > 1, alpha*beta*gamma <= 0: via delta_2
    NoGuarantee ///< outside the proven regions (includes |alpha| = 1, |beta| = 1)
};

std::string to_string(StabilityCase c);

/// Parameters of the transformed problem v = delta*y(x) + y(1-x), which has
/// equal proportionality factors alpha1 == beta1 and is covered by the
/// direct estimate when gamma1 <= 0.
struct TransformedParams {
    double alpha1 = 0.0;
    double beta1 = 0.0;
    double gamma1 = 0.0;
    /// mu1(t) = mu_factor * mu(t)
    double mu_factor = 0.0;
};

struct StabilityVerdict {
    StabilityCase kind = StabilityCase::NoGuarantee;
    std::optional<double> delta;                ///< root used (Case1/Case2)
    std::optional<TransformedParams> transformed;
};

/// Total classifier: never throws, returns NoGuarantee for anything outside
/// the proven regions (including boundary |alpha| = 1 or |beta| = 1 and the
/// pathological near-pole root locations).
StabilityVerdict classify_stability(double alpha, double beta, double gamma);

/// Roots (delta_1, delta_2), delta_1*delta_2 = 1 and delta_1 < delta_2 in
/// magnitude ordering delta_2 = (alpha*beta-1 + sqrt((alpha^2-1)(beta^2-1)))
/// / (alpha-beta).  The smaller-magnitude root is evaluated from the
/// non-cancelling one via the unit product, never by subtracting nearly
/// equal numbers.  Throws DegenerateParameters (alpha == beta) or
/// NoRealRoots (discriminant <= 0).
std::pair<double, double> delta_roots(double alpha, double beta);

/// Transformed boundary parameters for a given root delta:
///   alpha1 = (delta*alpha + 1)/(delta + alpha),
///   beta1  = (delta*beta  - 1)/(delta - beta),
///   gamma1 = gamma*(delta^2 - 1)/((delta + alpha)(delta - beta)),
///   mu_factor = (delta^2 - 1)/(delta - beta).
/// Throws DegenerateDelta when delta is within 1e-9 of a pole
/// (-alpha, beta, +1, -1).
TransformedParams transform_params(double alpha, double beta, double gamma,
                                   double delta);

/// v_i = delta * y_i + y_{N-i}.
GridFunction transform_field(const GridFunction& y, double delta);

/// Observed orders log(e_j/e_{j+1}) / log(h_j/h_{j+1}) for a refinement
/// sequence of (h, err) pairs.  Requires at least two pairs, strictly
/// decreasing h and strictly positive errors; throws std::invalid_argument
/// otherwise.
std::vector<double>
convergence_order(const std::vector<std::pair<double, double>>& h_err);

} // namespace stekdiff
