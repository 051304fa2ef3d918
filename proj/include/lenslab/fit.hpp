#ifndef LENSLAB_FIT_HPP
#define LENSLAB_FIT_HPP

#include <vector>

namespace lenslab {

// Ordinary least squares y = intercept + slope * x.
struct LineFit {
    double intercept = 0.0;
    double slope = 0.0;
    double rms_residual = 0.0;
    double r_squared = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Power law rho = exp(log_amplitude) * h^slope fitted in log-log space.
struct PowerLaw {
    double log_amplitude = 0.0;
    double slope = 0.0;
    double rms_residual = 0.0;

    double log_value(double log_h) const { return log_amplitude + slope * log_h; }
};

PowerLaw fit_power_law(const std::vector<double>& log_h, const std::vector<double>& log_v);

} // namespace lenslab

#endif
