#ifndef LENSLAB_MAPS_HPP
#define LENSLAB_MAPS_HPP

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "lenslab/errors.hpp"

namespace lenslab {

using Complex = std::complex<double>;

// Reduce an angle into (-pi, pi].
double reduce_angle(double t);

// Polar data of a boundary value phi(e^{it}).  `argument` is kept
// unreduced (the spread map winds infinitely often near t = 0); reduce
// mod 2*pi on demand.  `one_minus_modulus` is computed by a
// cancellation-free route and is the quantity to use near t = 0.
struct BoundaryDecomposition {
    double angle = 0.0;
    double modulus = 0.0;
    double argument = 0.0;
    double one_minus_modulus = 0.0;

    Complex point() const { return std::polar(modulus, argument); }
};

// T(z) = (1 - z)/(1 + z), an involution exchanging the disk and the right
// half-plane.
Complex cayley(Complex z);
Complex cayley_inv(Complex w);

// w^theta via the principal logarithm; maps the closed right half-plane
// into itself, w = 0 included as the limit value 0.
Complex power_map(double theta, Complex w);

// phi_theta(z) = ((1+z)^theta - (1-z)^theta) / ((1+z)^theta + (1-z)^theta).
// The principal powers never cross the cut: 1 +- z has positive real part
// for |z| < 1.
Complex lens_eval(double theta, Complex z);

// Boundary value gamma(t) = phi_theta(e^{it}) through the closed form
// gamma = (1 - c*tau)/(1 + c*tau), c = e^{-i theta pi/2},
// tau = tan(t/2)^theta, reduced to [0, pi/2] by the symmetries
// gamma(-t) = conj(gamma(t)) and gamma(t + pi) = -gamma(t).
// 1 - |gamma|^2 = 4 Re(c) tau / |1 + c tau|^2 (no cancellation).
BoundaryDecomposition lens_boundary(double theta, double t);

// A(t) = arg gamma(t) and its closed-form derivative; A is increasing on
// [0, pi] with A(0) = 0, A(pi) = pi.
double lens_arg(double theta, double t);
double lens_arg_derivative(double theta, double t);

// max over the grid of |phi_t1(phi_t2(z)) - phi_{t1 t2}(z)|.
double semigroup_compose_check(double theta1, double theta2,
                               const std::vector<Complex>& grid);

// M(z) = exp(-(1+z)/(1-z)); |M| < 1 inside, |M| = 1 on the circle,
// essential singularity at z = 1.
Complex singular_inner_eval(Complex z);

// Boundary value of the spread map phi_theta(z) M(z^2):
// modulus |gamma(t)|, argument A(t) - cot(t) for |t| <= pi/2.
BoundaryDecomposition spread_boundary(double theta, double t);

// An analytic self-map of the disk: interior evaluation, boundary
// decomposition, truncated Taylor coefficients at 0.
class SchurMap {
public:
    virtual ~SchurMap() = default;
    virtual Complex eval(Complex z) const = 0;
    virtual BoundaryDecomposition boundary(double t) const = 0;
    virtual Eigen::VectorXcd taylor(int count) const = 0;
    virtual std::string name() const = 0;
    // Boundary-contact exponent: |1 - phi(e^{it})| ~ |t|^exponent near the
    // contact points; 1.0 when the closure of the image avoids the circle.
    virtual double contact_exponent() const { return 1.0; }
    // Radius r such that phi(z) in S(1, h) forces |1 - z| <= r (and
    // |1 + z| <= r near the -1 contact, for the symmetric families).
    // Conservative default: the whole disk.
    virtual double tip_radius(double) const { return 2.0; }
};

class LensMap final : public SchurMap {
public:
    explicit LensMap(double theta);
    double theta() const { return theta_; }
    Complex eval(Complex z) const override;
    BoundaryDecomposition boundary(double t) const override;
    Eigen::VectorXcd taylor(int count) const override;
    std::string name() const override;
    double contact_exponent() const override { return theta_; }
    double tip_radius(double h) const override;

private:
    double theta_;
};

// phi_theta(z) * M(z^2): same boundary modulus as the lens map, argument
// spread by -cot(t).
class SpreadLensMap final : public SchurMap {
public:
    explicit SpreadLensMap(double theta);
    double theta() const { return theta_; }
    Complex eval(Complex z) const override;
    BoundaryDecomposition boundary(double t) const override;
    Eigen::VectorXcd taylor(int count) const override;
    std::string name() const override;
    double contact_exponent() const override { return theta_; }
    double tip_radius(double h) const override;

    // B(t) = A(t) - cot(t), strictly increasing from B(-delta) to +inf on
    // [-delta, 0); delta is located once at construction by scanning B'
    // for sign changes on a dyadic mesh.
    double arg_spread(double t) const;
    double arg_spread_derivative(double t) const;
    double delta() const { return delta_; }
    // Inverse of B on [-delta, 0); v must be >= B(-delta).
    double arg_spread_inverse(double v) const;

private:
    double theta_;
    double delta_;
    double value_at_minus_delta_;
};

// phi_theta((1 + z)/2): image inside the lens region, no fixed point at 0.
class ReducedLensMap final : public SchurMap {
public:
    explicit ReducedLensMap(double theta);
    double theta() const { return theta_; }
    Complex eval(Complex z) const override;
    BoundaryDecomposition boundary(double t) const override;
    Eigen::VectorXcd taylor(int count) const override;
    std::string name() const override;
    double contact_exponent() const override { return theta_; }

private:
    double theta_;
};

// Polynomial symbols (identity, contractions, constants) used as exactly
// solvable references.
class PolynomialMap final : public SchurMap {
public:
    explicit PolynomialMap(std::vector<Complex> coeffs, std::string label = "");
    Complex eval(Complex z) const override;
    BoundaryDecomposition boundary(double t) const override;
    Eigen::VectorXcd taylor(int count) const override;
    std::string name() const override;

private:
    std::vector<Complex> coeffs_;
    std::string label_;
};

} // namespace lenslab

#endif
