// Gaussian quadrature engines: Gauss-Legendre, Gauss-Jacobi, and the composite
// panel rules used for every radial integral in the library.
#pragma once

#include <functional>
#include <vector>

namespace dunkl {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    double a = 0.0;
    double b = 0.0;
    // Degree up to which polynomials are integrated exactly (per panel for
    // composite rules).
    int exactness = 0;

    double integrate(const std::function<double(double)>& f) const;
};

// n-point Gauss-Legendre rule on [a, b]; exact for polynomials of degree <= 2n-1.
QuadratureRule gauss_legendre(int n, double a, double b);

// n-point Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on [-1, 1],
// alpha, beta > -1.  Nodes and weights via Golub-Welsch.
QuadratureRule gauss_jacobi(int n, double alpha, double beta);

// Gauss-Jacobi on [0, 1] for the weight x^b (1-x)^a.
QuadratureRule gauss_jacobi01(int n, double a, double b);

// Composite Gauss-Legendre rule: g nodes on each panel [bounds[i], bounds[i+1]].
QuadratureRule composite_gauss(const std::vector<double>& bounds, int g);

// Panel boundaries [0, r_min, ... geometric ..., r_max] with per_decade panels
// per decade.  The leading zero panel covers the origin.
std::vector<double> geometric_bounds(double r_min, double r_max, int per_decade);

// Composite rule on [0, r_max] able to resolve oscillatory kernels up to a
// phase product r*rho <~ g*per_decade/ln(10).
struct RadialQuadrature {
    QuadratureRule rule;
    int per_decade = 0;
    int nodes_per_panel = 0;

    double phase_cap() const;
    static RadialQuadrature make(double r_min, double r_max, int per_decade, int g);
};

} // namespace dunkl
