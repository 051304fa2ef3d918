#ifndef LENSLAB_QUAD_HPP
#define LENSLAB_QUAD_HPP

#include <functional>
#include <vector>

namespace lenslab {

// Adaptive Simpson on [a, b].  tol is an absolute tolerance for the whole
// interval; it is split proportionally during recursion.  Throws
// NumericError when the recursion depth limit is hit before convergence.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth = 60);

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
// Supported n: 4, 8, 16, 32, 64.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

// \int_a^b f via one n-point Gauss-Legendre panel.
double gauss_panel(const std::function<double(double)>& f, double a, double b, int n);

} // namespace lenslab

#endif
