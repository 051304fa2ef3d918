#include "lenslab/fit.hpp"

#include <cmath>

#include "lenslab/errors.hpp"

namespace lenslab {

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2)
        throw InsufficientDataError("fit_line: need at least two points");
    double sx = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw InsufficientDataError("fit_line: degenerate abscissae");
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (f.intercept + f.slope * x[i]);
        ss_res += r * r;
    }
    f.rms_residual = std::sqrt(ss_res / n);
    f.r_squared = (syy == 0.0) ? 1.0 : 1.0 - ss_res / syy;
    return f;
}

PowerLaw fit_power_law(const std::vector<double>& log_h, const std::vector<double>& log_v) {
    const LineFit f = fit_line(log_h, log_v);
    PowerLaw p;
    p.log_amplitude = f.intercept;
    p.slope = f.slope;
    p.rms_residual = f.rms_residual;
    return p;
}

} // namespace lenslab
