#ifndef LENSLAB_SERIES_HPP
#define LENSLAB_SERIES_HPP

#include <Eigen/Core>

#include "lenslab/maps.hpp"

namespace lenslab {

// Truncated Taylor arithmetic on coefficient vectors c[0..N-1].

// (1 + sign * z)^theta, binomial series.
Eigen::VectorXcd binomial_series(double theta, double sign, int count);

Eigen::VectorXcd series_multiply(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b,
                                 int count);

// a / b with b[0] != 0.
Eigen::VectorXcd series_divide(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b,
                               int count);

// exp(g) via the recurrence n f_n = sum_{k=1..n} k g_k f_{n-k}.
Eigen::VectorXcd series_exp(const Eigen::VectorXcd& g, int count);

Eigen::VectorXcd lens_series(double theta, int count);
Eigen::VectorXcd spread_series(double theta, int count);
Eigen::VectorXcd reduced_lens_series(double theta, int count);

Complex series_sum(const Eigen::VectorXcd& coeffs, Complex z);

// Taylor coefficients of a symbol, validated against direct evaluation at
// z = 0.5 (throws NumericError when the relative discrepancy exceeds 1e-10).
struct CoefficientSeries {
    Eigen::VectorXcd coeffs;
    int order = 0;
    // measured relative discrepancy of the validation evaluation
    double est_tail_bound = 0.0;
};

CoefficientSeries taylor_coeffs(const SchurMap& map, int count);

} // namespace lenslab

#endif
