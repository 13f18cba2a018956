#pragma once

#include <vector>

#include "stekdiff/field.hpp"

namespace stekdiff {

/// Convolution weights of the second-order discrete Caputo derivative
/// evaluated at t_{n+sigma}.  A table built at `level` n serves the step
/// t_n -> t_{n+1}:
///
///   D^nu y_i |_{t_{n+sigma}}  ~=  (scale / tau) *
///       sum_{s=0}^{n} c[n-s] * (y_i^{s+1} - y_i^s),
///
/// with scale = tau^{1-nu} / Gamma(2-nu).  The weights are positive and
/// strictly decreasing in s, which is what makes the scheme's energy
/// estimates work.
struct WeightTable {
    int level = 0;         ///< n
    std::vector<double> c; ///< c[0..n]
    double scale = 0.0;    ///< tau^{1-nu} / Gamma(2-nu)
};

/// Incremental weight builder for one (nu, sigma) pair.  Time stepping asks
/// for tables at levels 0,1,2,...; the underlying one-dimensional prefixes
/// are cached so the whole run costs O(N_T) prefix evaluations plus the
/// unavoidable O(N_T^2) table assembly.
class WeightCache {
public:
    /// Requires nu in (0,1) and sigma == 1 - nu/2 (to 1e-12); the quadratic
    /// exactness and sign properties of the weights hold only there.
    WeightCache(double nu, double sigma);

    /// Weight table for step level n (>= 0) and step size tau (> 0).
    WeightTable table(int level, double tau);

private:
    void extend(int lmax);

    double nu_;
    double sigma_;
    std::vector<double> a_; ///< a_[l], l >= 0
    std::vector<double> b_; ///< b_[l], l >= 1 (b_[0] unused)
};

/// One-shot convenience wrapper around WeightCache.
WeightTable compute_weights(double nu, double sigma, int level, double tau);

/// Applies the discrete Caputo derivative at node `node` for the step the
/// table was built for.  `history` must hold exactly levels 0..n+1, i.e. the
/// candidate new layer is already appended.  Throws std::invalid_argument on
/// a layer-count mismatch.
double caputo_apply(const SolutionHistory& history, const WeightTable& weights,
                    int node);

} // namespace stekdiff
