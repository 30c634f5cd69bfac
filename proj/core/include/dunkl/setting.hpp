// Reflection-group data for Z_2^d products: multiplicities, the weight w_k,
// the Mehta constant, the weighted sphere mass, and the rank-1 Dunkl
// operator/kernel pair.
#pragma once

#include "dunkl/quadrature.hpp"

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace dunkl {

// Immutable after construction; all derived constants use the closed forms
//   gamma = sum k_i,            D = 2 gamma + d,        lambda = gamma + d/2 - 1,
//   c_k   = prod 1/(2^{k_i+1/2} Gamma(k_i+1/2)),        d_k = c_gamma / c_k,
//   c_gamma = 1 / (2^{gamma+d/2-1} Gamma(gamma+d/2)).
class MultiplicitySetting {
public:
    MultiplicitySetting(int d, std::vector<double> multiplicities);
    static MultiplicitySetting rank1(double k);

    int dimension() const { return d_; }
    const std::vector<double>& multiplicities() const { return k_; }
    double index_gamma() const { return gamma_; }
    double homogeneous_dimension() const { return homdim_; }
    double bessel_order() const { return lambda_; }
    double mehta_constant() const { return mehta_; }
    double sphere_mass() const { return sphere_mass_; }
    // c_gamma, the value of the sphere-measure transform at the origin.
    double sphere_constant() const { return c_gamma_; }

    // w_k(x) = prod |x_i|^{2 k_i}; homogeneous of degree 2 gamma.
    double weight(std::span<const double> x) const;

    // The maximal-operator theory needs D >= 2.
    bool admits_maximal_theory() const { return homdim_ >= 2.0; }

    std::string describe() const; // e.g. "d=2,k=0.5,0.5"

private:
    int d_;
    std::vector<double> k_;
    double gamma_, homdim_, lambda_, mehta_, sphere_mass_, c_gamma_;
};

// Mehta constant by quadrature of the weighted Gaussian integral (cross-check
// for the closed form; agrees to 1e-10 with n ~ 60 nodes per coordinate).
double mehta_constant_quadrature(const MultiplicitySetting& s, int n = 80);

// Rank-1 Dunkl operator  T f(x) = f'(x) + k (f(x) - f(-x)) / x, with the
// removable singularity at x = 0 filled by its limit f'(0) (1 + 2k).
double dunkl_operator_rank1(double k, const std::function<double(double)>& f,
                            const std::function<double(double)>& df, double x);

// Rank-1 Dunkl kernel on the imaginary axis:
//   E_k(x, iy) = j_{k-1/2}(xy) + i x y / (2k+1) j_{k+1/2}(xy),  |E_k(x,iy)| <= 1.
std::complex<double> dunkl_kernel_rank1(double k, double x, double y);

// Product quadrature for integrals against d nu_k = w_k dx: a radial rule
// composed with a sphere rule adapted to the |y_i|^{2k_i} factors (tensor
// Gauss-Jacobi over the spherical angles).
class WeightedPolarMeasure {
public:
    WeightedPolarMeasure(MultiplicitySetting s, double r_max, int radial_per_decade = 24,
                         int radial_nodes = 12, int angular_nodes = 32);

    const MultiplicitySetting& setting() const { return setting_; }

    // Integral of a general f over R^d against d nu_k.
    double integrate(const std::function<double(std::span<const double>)>& f) const;
    // Integral of a radial profile F(|x|): d_k * int F(r) r^{D-1} dr by the
    // polar identity, evaluated with the radial rule.
    double integrate_radial(const std::function<double(double)>& F) const;

    // Sphere rule: points on S^{d-1} with weights that already include w_k;
    // the weights sum to d_k.
    const std::vector<std::vector<double>>& sphere_points() const { return sph_pts_; }
    const std::vector<double>& sphere_weights() const { return sph_w_; }

private:
    MultiplicitySetting setting_;
    QuadratureRule radial_;
    std::vector<std::vector<double>> sph_pts_;
    std::vector<double> sph_w_;
};

} // namespace dunkl
