// Normalized Bessel functions of the first kind, j_nu(x) = Gamma(nu+1) (2/x)^nu J_nu(x),
// with the convention j_nu(0) = 1.  These carry the sphere-measure transform and all
// radial kernels of the library.
#pragma once

#include <vector>

namespace dunkl {

// j_nu(x) for nu >= -1/2, x >= 0.  Absolute error <= 1e-12 for x <= 1e4.
//
// Power series (double-double accumulation) up to x = max(30, 2 nu), then the
// Hankel asymptotic expansion at a base order in [-1/2, 1/2) followed by forward
// recurrence in the order (stable here: the crossover keeps x > 2 nu, deep in the
// oscillatory regime).  Throws std::domain_error for nu < -1/2 or x < 0.
double normalized_bessel(double nu, double x);

// Radial derivatives of j_nu, computed through the order-raising identity
//   j_nu'(x)  = -x / (2(nu+1)) * j_{nu+1}(x)
//   j_nu''(x) = -1 / (2(nu+1)) * j_{nu+1}(x) + x^2 / (4(nu+1)(nu+2)) * j_{nu+2}(x),
// never by finite differences.  order must be 1 or 2.
double normalized_bessel_derivative(double nu, double x, int order = 1);

// Fixed-order evaluator caching the series coefficients; used where millions of
// evaluations at a single order are needed (transform kernel matrices).
class NormalizedBessel {
public:
    explicit NormalizedBessel(double nu);

    double operator()(double x) const;
    double nu() const { return nu_; }

private:
    double nu_;
    double series_cut_;             // series below, asymptotic branch above
    double plain_cut_;              // plain double Horner is enough below this
    std::vector<double> chi_, clo_; // double-double series coefficients in x^2
};

namespace detail {

// The two evaluation routes, exposed so the crossover band can be checked
// independently; both are valid on [28, max(40, 2nu+10)].
double bessel_series(double nu, double x);
double bessel_asymptotic(double nu, double x);

} // namespace detail

} // namespace dunkl
